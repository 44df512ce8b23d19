#include "dermeda/regularity_model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dermeda {

ManifoldModel build_model(std::span<const DecisionVector> members, const AffineSubspace& subspace,
                          std::size_t num_objectives)
{
    if (members.empty()) {
        throw std::invalid_argument("build_model: empty cluster");
    }
    const std::size_t n = subspace.dimension();
    const std::size_t rank = num_objectives - 1;
    if (subspace.rank() != rank || rank > n) {
        throw std::invalid_argument("build_model: subspace rank must be m-1");
    }

    ManifoldModel model;
    model.subspace = subspace;
    model.extents_lo.assign(rank, 0.0);
    model.extents_hi.assign(rank, 0.0);
    bool first = true;
    for (const auto& x : members) {
        const Eigen::Map<const Eigen::VectorXd> xv(x.data(), static_cast<Eigen::Index>(x.size()));
        const Eigen::VectorXd proj = subspace.basis.transpose() * (xv - subspace.mean);
        for (std::size_t i = 0; i < rank; ++i) {
            const double t = proj[static_cast<Eigen::Index>(i)];
            model.extents_lo[i] = first ? t : std::min(model.extents_lo[i], t);
            model.extents_hi[i] = first ? t : std::max(model.extents_hi[i], t);
        }
        first = false;
    }

    // mean of the n-m+1 trailing eigenvalues
    double tail = 0.0;
    for (std::size_t i = rank; i < n; ++i) {
        tail += subspace.eigenvalues[static_cast<Eigen::Index>(i)];
    }
    model.noise_variance = n > rank ? tail / static_cast<double>(n - rank) : 0.0;
    model.noise_sd = std::sqrt(model.noise_variance);
    return model;
}

double model_volume(const ManifoldModel& model)
{
    double volume = 1.0;
    for (std::size_t i = 0; i < model.extents_lo.size(); ++i) {
        volume *= model.extended_hi(i) - model.extended_lo(i);
    }
    return std::max(volume, kMinVolume);
}

std::vector<double> sample_coefficients(const ManifoldModel& model, Rng& rng)
{
    std::vector<double> theta(model.extents_lo.size());
    for (std::size_t i = 0; i < theta.size(); ++i) {
        const double lo = model.extended_lo(i);
        theta[i] = lo + (model.extended_hi(i) - lo) * uniform01(rng);
    }
    return theta;
}

DecisionVector embed(const ManifoldModel& model, std::span<const double> coefficients)
{
    Eigen::VectorXd x = model.subspace.mean;
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
        x += coefficients[i] * model.subspace.basis.col(static_cast<Eigen::Index>(i));
    }
    return {x.data(), x.data() + x.size()};
}

std::vector<DecisionVector> sample_model(const ManifoldModel& model, std::size_t count, const BoxBounds& bounds,
                                         Rng& rng)
{
    std::vector<DecisionVector> out;
    out.reserve(count);
    std::normal_distribution<double> noise(0.0, 1.0);
    for (std::size_t s = 0; s < count; ++s) {
        DecisionVector x = embed(model, sample_coefficients(model, rng));
        if (model.noise_sd > 0.0) {
            for (auto& xi : x) {
                xi += model.noise_sd * noise(rng);
            }
        }
        out.push_back(repair(std::move(x), bounds));
    }
    return out;
}

} // namespace dermeda
