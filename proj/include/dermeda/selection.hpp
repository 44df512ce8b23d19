#pragma once

/// @file selection.hpp
/// @brief Fast non-dominated sorting, crowding distance and elitist
/// (rank, crowding) truncation shared by all optimizers.

#include "dermeda/core.hpp"

namespace dermeda {

struct FrontRanking {
    std::vector<std::vector<std::size_t>> fronts;  // F1, F2, ...; indices ascending inside a front
    std::vector<std::size_t> rank;                 // 0-based front index per input
};

/// Dominated-set / domination-count bookkeeping, O(N^2 m).
[[nodiscard]] FrontRanking fast_nondominated_sort(std::span<const ObjectiveVector> objectives);

/// Per-front crowding distance. Boundary members of every objective's sort
/// get +infinity; objectives with zero range on the front are skipped.
[[nodiscard]] std::vector<double> crowding_distance(std::span<const ObjectiveVector> front);

/// Indices of the first front.
[[nodiscard]] std::vector<std::size_t> nondominated_indices(std::span<const ObjectiveVector> objectives);

/// Keeps `target` individuals: whole fronts in rank order, then the splitting
/// front by descending crowding distance (ties to the lower index).
/// Throws std::invalid_argument when fewer than `target` are supplied.
[[nodiscard]] Population elite_select(std::vector<Individual> combined, std::size_t target);

} // namespace dermeda
