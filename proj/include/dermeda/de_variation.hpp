#pragma once

/// @file de_variation.hpp
/// @brief DE trial vectors guided by a non-dominated individual, followed by
/// polynomial mutation.

#include "dermeda/core.hpp"
#include "dermeda/rng.hpp"

#include <optional>

namespace dermeda {

struct DeParams {
    double scale = 0.5;          // F
    double crossover = 0.9;      // CR
    std::optional<double> mutation_rate;  // p_m, 1/n when unset
    double distribution_index = 20.0;     // eta

    [[nodiscard]] double mutation_rate_for(std::size_t n) const
    {
        return mutation_rate.value_or(1.0 / static_cast<double>(n));
    }

    /// Throws std::invalid_argument when a field is out of range.
    void validate() const;
};

/// v_k = r1_k + F (best_k - r1_k) + F (r2_k - r3_k) when a fresh U[0,1) draw
/// falls below CR, else r1_k. One uniformly chosen index always takes the
/// mutated branch.
[[nodiscard]] DecisionVector de_trial(std::span<const double> r1, std::span<const double> r2,
                                      std::span<const double> r3, std::span<const double> best,
                                      const DeParams& params, Rng& rng);

/// Polynomial-mutation step for a uniform draw r in [0,1]:
/// (2r)^(1/(eta+1)) - 1 below 0.5, else 1 - (2-2r)^(1/(eta+1)). Always in [-1,1].
[[nodiscard]] double mutation_delta(double r, double distribution_index);

/// Each coordinate is shifted by delta * (upper - lower) with probability p_m,
/// then the result is clamped to the box.
[[nodiscard]] DecisionVector polynomial_mutation(DecisionVector v, const DeParams& params, const BoxBounds& bounds,
                                                 Rng& rng);

struct DeParents {
    std::size_t r1;
    std::size_t r2;
    std::size_t r3;
    std::size_t best;
};

/// Draws r1, r2, r3 without replacement from `cluster` and `best` uniformly
/// from `nondominated` (all indices into `population`). The four decision
/// vectors are pairwise distinct. When the cluster cannot supply three
/// parents, r1 stays in the cluster and r2, r3 come from the whole
/// population. Returns nullopt when no valid draw exists; callers then fall
/// back to the model arm.
[[nodiscard]] std::optional<DeParents> pick_de_parents(std::span<const std::size_t> cluster,
                                                       std::span<const std::size_t> nondominated,
                                                       const Population& population, Rng& rng);

} // namespace dermeda
