#pragma once

/// @file local_pca.hpp
/// @brief Local PCA clustering: K clusters whose centroids are (m-1)-D affine
/// subspaces, with points assigned to the nearest subspace.

#include "dermeda/core.hpp"
#include "dermeda/rng.hpp"

#include <Eigen/Dense>

namespace dermeda {

/// x = mean + sum_i theta_i * basis.col(i). `eigenvalues` is the full
/// descending covariance spectrum of the cluster that produced the subspace.
/// A subspace with zero basis columns is a single point.
struct AffineSubspace {
    Eigen::VectorXd mean;
    Eigen::MatrixXd basis;
    Eigen::VectorXd eigenvalues;

    [[nodiscard]] std::size_t dimension() const noexcept { return static_cast<std::size_t>(mean.size()); }
    [[nodiscard]] std::size_t rank() const noexcept { return static_cast<std::size_t>(basis.cols()); }
};

struct Partition {
    std::vector<std::vector<std::size_t>> clusters;
    std::vector<AffineSubspace> subspaces;
    std::size_t iterations = 0;
    bool converged = false;
};

struct LocalPcaOptions {
    std::size_t max_iters = 50;
};

/// Mean, sample covariance (divisor |S|-1, zero matrix for |S|=1), its
/// descending spectrum and the top m-1 eigenvectors. A zero covariance falls
/// back to the canonical axes as basis.
[[nodiscard]] AffineSubspace cluster_statistics(std::span<const DecisionVector> members, std::size_t num_objectives);

/// Same, for a subset of a population given by member indices.
[[nodiscard]] AffineSubspace cluster_statistics(const Population& population, std::span<const std::size_t> indices,
                                                std::size_t num_objectives);

/// Sample covariance matrix (divisor |S|-1; zero for a singleton).
[[nodiscard]] Eigen::MatrixXd sample_covariance(std::span<const DecisionVector> members);

/// Euclidean distance from x to the affine subspace.
[[nodiscard]] double distance_to_subspace(std::span<const double> x, const AffineSubspace& subspace);

/// Point "subspace" centred at p, used to seed and reseed clusters.
[[nodiscard]] AffineSubspace point_subspace(std::span<const double> p);

/// Local PCA iteration. Seeds K point centroids at distinct random members,
/// then alternates nearest-subspace assignment (ties to the lowest index) and
/// per-cluster PCA until the assignment stops changing or `max_iters` passes.
/// A cluster that empties is reseeded at the member farthest from its
/// current subspace.
[[nodiscard]] Partition partition(const Population& population, std::size_t k, std::size_t num_objectives, Rng& rng,
                                  const LocalPcaOptions& options = {});

} // namespace dermeda
