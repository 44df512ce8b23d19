#include "dermeda/local_pca.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace dermeda {

namespace {

Eigen::Map<const Eigen::VectorXd> as_eigen(std::span<const double> x)
{
    return {x.data(), static_cast<Eigen::Index>(x.size())};
}

AffineSubspace statistics_from_covariance(Eigen::VectorXd mean, const Eigen::MatrixXd& cov,
                                          std::size_t num_objectives)
{
    const auto n = mean.size();
    const auto rank = static_cast<Eigen::Index>(num_objectives - 1);
    if (rank > n) {
        throw std::invalid_argument("cluster_statistics: m-1 exceeds the decision dimension");
    }

    AffineSubspace out;
    out.mean = std::move(mean);
    if (cov.cwiseAbs().maxCoeff() == 0.0) {
        out.eigenvalues = Eigen::VectorXd::Zero(n);
        out.basis = Eigen::MatrixXd::Identity(n, rank);
        return out;
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(cov);
    // Eigen sorts ascending
    out.eigenvalues = solver.eigenvalues().reverse().cwiseMax(0.0);
    out.basis = solver.eigenvectors().rowwise().reverse().leftCols(rank);
    return out;
}

} // namespace

Eigen::MatrixXd sample_covariance(std::span<const DecisionVector> members)
{
    if (members.empty()) {
        throw std::invalid_argument("sample_covariance: empty member list");
    }
    const auto n = static_cast<Eigen::Index>(members.front().size());
    Eigen::VectorXd mean = Eigen::VectorXd::Zero(n);
    for (const auto& x : members) {
        mean += as_eigen(x);
    }
    mean /= static_cast<double>(members.size());

    Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(n, n);
    if (members.size() < 2) {
        return cov;
    }
    for (const auto& x : members) {
        const Eigen::VectorXd d = as_eigen(x) - mean;
        cov.selfadjointView<Eigen::Lower>().rankUpdate(d);
    }
    cov = cov.selfadjointView<Eigen::Lower>();
    return cov / static_cast<double>(members.size() - 1);
}

AffineSubspace cluster_statistics(std::span<const DecisionVector> members, std::size_t num_objectives)
{
    if (members.empty()) {
        throw std::invalid_argument("cluster_statistics: empty cluster");
    }
    const auto n = static_cast<Eigen::Index>(members.front().size());
    Eigen::VectorXd mean = Eigen::VectorXd::Zero(n);
    for (const auto& x : members) {
        mean += as_eigen(x);
    }
    mean /= static_cast<double>(members.size());
    return statistics_from_covariance(std::move(mean), sample_covariance(members), num_objectives);
}

AffineSubspace cluster_statistics(const Population& population, std::span<const std::size_t> indices,
                                  std::size_t num_objectives)
{
    std::vector<DecisionVector> members;
    members.reserve(indices.size());
    for (auto i : indices) {
        members.push_back(population[i].x);
    }
    return cluster_statistics(members, num_objectives);
}

double distance_to_subspace(std::span<const double> x, const AffineSubspace& subspace)
{
    if (x.size() != subspace.dimension()) {
        throw std::invalid_argument("distance_to_subspace: dimension mismatch");
    }
    const auto xv = as_eigen(x);
    const auto rank = subspace.basis.cols();
    if (rank == 0) {
        return (xv - subspace.mean).norm();
    }
    // Hot path of the assignment step: stay off the heap for the usual m <= 3.
    constexpr Eigen::Index kSmall = 4;
    if (rank > kSmall) {
        const Eigen::VectorXd r = xv - subspace.mean;
        const Eigen::VectorXd coeffs = subspace.basis.transpose() * r;
        return (r - subspace.basis * coeffs).norm();
    }
    std::array<double, kSmall> coeffs{};
    const auto n = xv.size();
    for (Eigen::Index i = 0; i < rank; ++i) {
        double c = 0.0;
        for (Eigen::Index k = 0; k < n; ++k) {
            c += subspace.basis(k, i) * (xv[k] - subspace.mean[k]);
        }
        coeffs[static_cast<std::size_t>(i)] = c;
    }
    double sq = 0.0;
    for (Eigen::Index k = 0; k < n; ++k) {
        double r = xv[k] - subspace.mean[k];
        for (Eigen::Index i = 0; i < rank; ++i) {
            r -= subspace.basis(k, i) * coeffs[static_cast<std::size_t>(i)];
        }
        sq += r * r;
    }
    return std::sqrt(sq);
}

AffineSubspace point_subspace(std::span<const double> p)
{
    AffineSubspace s;
    s.mean = as_eigen(p);
    s.basis = Eigen::MatrixXd(s.mean.size(), 0);
    s.eigenvalues = Eigen::VectorXd::Zero(s.mean.size());
    return s;
}

Partition partition(const Population& population, std::size_t k, std::size_t num_objectives, Rng& rng,
                    const LocalPcaOptions& options)
{
    const std::size_t n_points = population.size();
    if (k == 0 || n_points == 0) {
        throw std::invalid_argument("partition: need K >= 1 and a non-empty population");
    }
    if (k > n_points) {
        throw std::invalid_argument("partition: K exceeds the population size");
    }

    Partition result;
    result.subspaces.reserve(k);

    // K distinct seed members, chosen by a partial Fisher-Yates shuffle
    std::vector<std::size_t> order(n_points);
    std::iota(order.begin(), order.end(), std::size_t{0});
    for (std::size_t j = 0; j < k; ++j) {
        std::swap(order[j], order[j + uniform_index(rng, n_points - j)]);
        result.subspaces.push_back(point_subspace(population[order[j]].x));
    }

    constexpr auto kUnassigned = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> assignment(n_points, kUnassigned);
    std::vector<std::size_t> next(n_points);
    std::vector<double> fit(n_points);

    const std::size_t max_iters = std::max<std::size_t>(options.max_iters, 1);
    for (std::size_t iter = 1; iter <= max_iters; ++iter) {
        for (std::size_t i = 0; i < n_points; ++i) {
            std::size_t best = 0;
            double best_d = distance_to_subspace(population[i].x, result.subspaces[0]);
            for (std::size_t j = 1; j < k; ++j) {
                const double d = distance_to_subspace(population[i].x, result.subspaces[j]);
                if (d < best_d) {
                    best_d = d;
                    best = j;
                }
            }
            next[i] = best;
        }
        result.iterations = iter;
        if (next == assignment) {
            result.converged = true;
            break;
        }
        assignment = next;

        result.clusters.assign(k, {});
        for (std::size_t i = 0; i < n_points; ++i) {
            result.clusters[assignment[i]].push_back(i);
        }
        std::vector<std::size_t> empty;
        for (std::size_t j = 0; j < k; ++j) {
            if (result.clusters[j].empty()) {
                empty.push_back(j);
            } else {
                result.subspaces[j] = cluster_statistics(population, result.clusters[j], num_objectives);
            }
        }
        if (empty.empty()) {
            continue;
        }

        // Reseed empty clusters at the worst-represented members.
        for (std::size_t i = 0; i < n_points; ++i) {
            fit[i] = distance_to_subspace(population[i].x, result.subspaces[assignment[i]]);
        }
        std::vector<bool> used(n_points, false);
        for (auto j : empty) {
            std::size_t far = kUnassigned;
            for (std::size_t i = 0; i < n_points; ++i) {
                if (!used[i] && (far == kUnassigned || fit[i] > fit[far])) {
                    far = i;
                }
            }
            used[far] = true;
            result.subspaces[j] = point_subspace(population[far].x);
        }
    }

    return result;
}

} // namespace dermeda
