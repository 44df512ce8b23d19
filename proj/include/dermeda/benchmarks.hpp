#pragma once

/// @file benchmarks.hpp
/// @brief The F1-F9 test suite with complicated Pareto sets (Li & Zhang, 2009),
/// analytic Pareto-front samplers and Latin hypercube initialization.
///
/// Bounds used by the registry:
///   - F1, F7, F8: [0,1]^n
///   - F2-F5, F9:  [0,1] x [-1,1]^(n-1)
///   - F6:         [0,1]^2 x [-2,2]^(n-2)

#include "dermeda/core.hpp"
#include "dermeda/rng.hpp"

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace dermeda {

enum class ProblemId { F1, F2, F3, F4, F5, F6, F7, F8, F9 };

inline constexpr std::array<ProblemId, 9> kAllProblems{ProblemId::F1, ProblemId::F2, ProblemId::F3,
                                                       ProblemId::F4, ProblemId::F5, ProblemId::F6,
                                                       ProblemId::F7, ProblemId::F8, ProblemId::F9};

struct ProblemInfo {
    std::size_t num_variables;
    std::size_t num_objectives;
    bool multimodal;  // many local Pareto fronts
    bool convex_front;
};

[[nodiscard]] ProblemInfo problem_info(ProblemId id);
[[nodiscard]] std::string to_string(ProblemId id);
[[nodiscard]] std::optional<ProblemId> parse_problem_id(std::string_view text);

/// Problem with the registry's default dimension.
[[nodiscard]] std::unique_ptr<MopProblem> make_problem(ProblemId id);

/// Problem with an explicit decision dimension (used by dimension sweeps).
/// Throws std::invalid_argument when n is too small for the problem's index sets.
[[nodiscard]] std::unique_ptr<MopProblem> make_problem(ProblemId id, std::size_t num_variables);

/// A set P* of points on the true Pareto front.
struct PfReference {
    std::vector<ObjectiveVector> points;
};

/// Default |P*|: 500 points for two objectives, 1000 for three.
[[nodiscard]] std::size_t default_pf_size(ProblemId id);

/// Deterministic uniform sampling of the analytic front: an even grid in f1
/// for two objectives, a simplex lattice projected onto the unit sphere for F6.
/// Requires count >= 2.
[[nodiscard]] PfReference sample_true_pf(ProblemId id, std::size_t count);

/// Latin hypercube design: every coordinate has exactly one sample in each
/// of N equal-width strata.
[[nodiscard]] std::vector<DecisionVector> latin_hypercube_init(const BoxBounds& bounds, std::size_t count,
                                                               Rng& rng);

} // namespace dermeda
