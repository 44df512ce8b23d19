#pragma once

#include "dermeda/benchmarks.hpp"
#include "dermeda/core.hpp"

namespace dermeda {

/// Inverted generational distance: mean over reference points of the
/// Euclidean distance to the nearest approximation point, in raw objective
/// units. Throws std::invalid_argument on empty inputs or mismatched
/// dimensions.
[[nodiscard]] double igd(std::span<const ObjectiveVector> approx, std::span<const ObjectiveVector> reference);

[[nodiscard]] inline double igd(std::span<const ObjectiveVector> approx, const PfReference& reference)
{
    return igd(approx, reference.points);
}

} // namespace dermeda
