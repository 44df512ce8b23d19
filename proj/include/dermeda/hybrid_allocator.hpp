#pragma once

/// @file hybrid_allocator.hpp
/// @brief Splits the per-generation offspring budget across clusters (by model
/// volume) and, inside each cluster, between the model arm and the DE arm
/// according to the cluster's convergence ratio.

#include <cstddef>
#include <span>
#include <vector>

namespace dermeda {

/// Model-arm share is alpha + beta * p.
struct MixParams {
    double alpha = 0.3;
    double beta = 0.6;

    /// Throws std::invalid_argument unless alpha, beta in [0,1] and alpha + beta <= 1.
    void validate() const;
};

struct ClusterQuota {
    std::size_t model_count = 0;  // k1
    std::size_t de_count = 0;     // k2
    double ratio = 0.0;           // p
    double volume_share = 0.0;

    [[nodiscard]] std::size_t total() const noexcept { return model_count + de_count; }
};

/// Share of the spectrum held by the leading m-1 eigenvalues. Expects a
/// descending, non-negative spectrum; an all-zero spectrum yields 1.
[[nodiscard]] double convergence_ratio(std::span<const double> eigenvalues, std::size_t num_objectives);

/// Integer apportionment of `total` proportional to `weights` by the
/// largest-remainder rule (ties go to the lower index). Sums exactly to total.
[[nodiscard]] std::vector<std::size_t> largest_remainder(std::size_t total, std::span<const double> weights);

/// Per-cluster quotas. Totals follow the volume shares; k1 = floor(T (alpha + beta p)), k2 = T - k1.
[[nodiscard]] std::vector<ClusterQuota> allocate(std::size_t total, std::span<const double> volumes,
                                                 std::span<const double> ratios, const MixParams& mix);

} // namespace dermeda
