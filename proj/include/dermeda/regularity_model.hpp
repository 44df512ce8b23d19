#pragma once

/// @file regularity_model.hpp
/// @brief Per-cluster manifold model: a box on the cluster's principal
/// subspace, extended by a quarter of its width on each side, plus isotropic
/// Gaussian noise whose variance is the mean of the trailing eigenvalues.

#include "dermeda/core.hpp"
#include "dermeda/local_pca.hpp"
#include "dermeda/rng.hpp"

namespace dermeda {

inline constexpr double kExtension = 0.25;
inline constexpr double kMinVolume = 1e-12;

struct ManifoldModel {
    AffineSubspace subspace;
    std::vector<double> extents_lo;  // min projection per principal direction
    std::vector<double> extents_hi;  // max projection per principal direction
    double noise_variance = 0.0;
    double noise_sd = 0.0;

    /// Sampling range of the i-th latent coefficient.
    [[nodiscard]] double extended_lo(std::size_t i) const
    {
        return extents_lo[i] - kExtension * (extents_hi[i] - extents_lo[i]);
    }
    [[nodiscard]] double extended_hi(std::size_t i) const
    {
        return extents_hi[i] + kExtension * (extents_hi[i] - extents_lo[i]);
    }
};

/// Fits extents and noise to a cluster. `subspace` must be the PCA of `members`.
[[nodiscard]] ManifoldModel build_model(std::span<const DecisionVector> members, const AffineSubspace& subspace,
                                        std::size_t num_objectives);

/// Product of the extended interval lengths, floored at kMinVolume.
[[nodiscard]] double model_volume(const ManifoldModel& model);

/// Latent coefficients drawn uniformly on the extended box.
[[nodiscard]] std::vector<double> sample_coefficients(const ManifoldModel& model, Rng& rng);

/// mean + basis * coefficients (no noise, no repair).
[[nodiscard]] DecisionVector embed(const ManifoldModel& model, std::span<const double> coefficients);

/// `count` new points: manifold draw + N(0, sigma I) noise, clamped to bounds.
[[nodiscard]] std::vector<DecisionVector> sample_model(const ManifoldModel& model, std::size_t count,
                                                       const BoxBounds& bounds, Rng& rng);

} // namespace dermeda
