#pragma once

/// @file algorithms.hpp
/// @brief Seeded generation loops for DE/RM-MEDA, RM-MEDA and NSGA-II-DE.
///
/// All three share Latin hypercube initialization, N offspring per generation
/// and (rank, crowding) elitist selection over parents plus offspring. A run
/// is deterministic given its AlgoConfig: one master seed feeds separate
/// named streams for initialization, partitioning, model sampling, DE
/// variation and mutation.

#include "dermeda/benchmarks.hpp"
#include "dermeda/core.hpp"
#include "dermeda/de_variation.hpp"
#include "dermeda/hybrid_allocator.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dermeda {

enum class Algorithm { DeRmMeda, RmMeda, Nsga2De };

[[nodiscard]] std::string to_string(Algorithm algorithm);
/// Accepts "de_rm_meda"/"DE/RM-MEDA", "rm_meda"/"RM-MEDA", "nsga2_de"/"NSGA-II-DE" (case-insensitive).
[[nodiscard]] std::optional<Algorithm> parse_algorithm(std::string_view text);

struct AlgoConfig {
    ProblemId problem = ProblemId::F1;
    Algorithm algorithm = Algorithm::DeRmMeda;
    std::optional<std::size_t> population;     // 300, or 600 for F6, when unset
    std::optional<std::size_t> num_variables;  // registry default when unset
    std::size_t generations = 500;
    std::size_t clusters = 5;
    DeParams de;
    MixParams mix;
    std::uint64_t seed = 0;
    std::size_t trace_stride = 1;
    std::optional<std::size_t> pf_points;  // default_pf_size() when unset
    std::size_t max_pca_iters = 50;

    [[nodiscard]] std::size_t population_size() const;
    void validate() const;
};

struct TracePoint {
    std::size_t generation;
    double igd;
    std::size_t evaluations;

    friend bool operator==(const TracePoint&, const TracePoint&) = default;
};

/// Offspring produced by each reproduction arm in one generation.
struct OffspringSplit {
    std::size_t model = 0;
    std::size_t de = 0;

    friend bool operator==(const OffspringSplit&, const OffspringSplit&) = default;
};

struct RunResult {
    Population final_population;
    std::vector<TracePoint> igd_trace;  // generations 0, stride, 2*stride, ...
    double final_igd = 0.0;
    std::size_t evaluations = 0;
    std::vector<OffspringSplit> offspring;  // one entry per generation
    std::chrono::nanoseconds wall_time{0};
};

/// An evaluation failure, tagged with the generation it happened in
/// (0 is initialization).
class RunError : public std::runtime_error {
public:
    RunError(std::size_t generation, const std::string& what)
        : std::runtime_error("generation " + std::to_string(generation) + ": " + what), generation_(generation)
    {
    }
    [[nodiscard]] std::size_t generation() const noexcept { return generation_; }

private:
    std::size_t generation_;
};

[[nodiscard]] RunResult run_de_rm_meda(const AlgoConfig& config);
[[nodiscard]] RunResult run_rm_meda(const AlgoConfig& config);
[[nodiscard]] RunResult run_nsga2_de(const AlgoConfig& config);

/// Dispatches on config.algorithm.
[[nodiscard]] RunResult run(const AlgoConfig& config);

/// Runs on a caller-supplied problem and IGD reference instead of the
/// registry entry named by config.problem (config.num_variables and
/// config.pf_points are ignored).
[[nodiscard]] RunResult run(const AlgoConfig& config, const MopProblem& problem, const PfReference& reference);

} // namespace dermeda
