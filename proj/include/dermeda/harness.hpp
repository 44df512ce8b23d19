#pragma once

/// @file harness.hpp
/// @brief Seeded experiment batteries: config loading, (parallel) execution,
/// per-run trace files, summary statistics and parameter sweeps.
///
/// Output layout under `output_dir`:
///   summary.csv              one row per run template
///   manifest.json            spec echo and the seed rule
///   traces/<run_id>.csv      per-run IGD trace
///   fronts/<run_id>.txt      final objective vectors (point-set text format)
///
/// Run i of a template (0-based) uses seed base_seed + i, so every algorithm
/// in a battery sees the same seed list.

#include "dermeda/algorithms.hpp"

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace dermeda {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ExperimentSpec {
    std::vector<AlgoConfig> runs;  // templates; their seeds are overwritten per repeat
    std::size_t repeats = 20;
    std::uint64_t base_seed = 1;
    std::filesystem::path output_dir = "results";
    std::size_t trace_stride = 1;

    void validate() const;
};

/// INI-style config: `key = value` lines under `[section]` headers.
///
/// `[experiment]` holds repeats, base_seed, trace_stride, output_dir and may
/// also give defaults for run keys. Every other section is a run template
/// with keys problem, algorithm, population, generations, clusters, alpha,
/// beta, de_f, de_cr, eta. `problem` and `algorithm` accept comma-separated
/// lists and expand to their cartesian product. Throws ConfigError.
[[nodiscard]] ExperimentSpec parse_experiment(std::istream& is);
[[nodiscard]] ExperimentSpec load_experiment(const std::filesystem::path& path);

/// The nine-problem, three-algorithm battery with full-scale defaults (20 repeats, 500 generations).
[[nodiscard]] ExperimentSpec table_one_spec(std::size_t repeats = 20, std::size_t generations = 500);

struct ExperimentOptions {
    std::size_t workers = 1;
    bool record_timing = false;  // wall time makes summary.csv non-reproducible
    bool write_files = true;
};

struct RunRecord {
    std::string run_id;
    std::size_t template_index = 0;
    std::size_t repeat = 0;
    AlgoConfig config;
    bool ok = false;
    std::string error;
    std::vector<TracePoint> trace;  // always ends with the final generation
    double final_igd = 0.0;
    std::size_t evaluations = 0;
    double wall_ms = 0.0;
    std::vector<ObjectiveVector> final_front;
};

struct SummaryRow {
    std::string problem;
    std::string algorithm;
    std::size_t repeats = 0;
    std::size_t generations = 0;
    double mean_igd = 0.0;
    double std_igd = 0.0;
    double mean_wall_ms = 0.0;
    double mean_evaluations = 0.0;
    std::size_t failed = 0;
    std::string note;
    std::size_t template_index = 0;
};

struct ExperimentResult {
    std::vector<SummaryRow> summary;
    std::vector<RunRecord> runs;

    [[nodiscard]] std::size_t failed_runs() const;
};

/// Mean and (n-1)-divisor standard deviation; std is 0 for a single value.
struct MeanStd {
    double mean;
    double std;
};
[[nodiscard]] MeanStd mean_std(std::span<const double> values);

/// Runs repeats x templates runs. Results do not depend on the worker count.
[[nodiscard]] ExperimentResult run_experiment(const ExperimentSpec& spec, const ExperimentOptions& options = {});

void write_summary_csv(std::ostream& os, const std::vector<SummaryRow>& rows, bool with_timing);
void write_trace_csv(std::ostream& os, const RunRecord& record);

/// Parses a trace file written by write_trace_csv back into (generation, igd) points.
[[nodiscard]] std::vector<TracePoint> read_trace_csv(std::istream& is);

enum class SweepParameter { Clusters, AlphaBeta, Dimension };

[[nodiscard]] std::optional<SweepParameter> parse_sweep_parameter(std::string_view text);
[[nodiscard]] std::string to_string(SweepParameter parameter);

struct SweepValue {
    std::string label;
    double first = 0.0;   // K, alpha or dimension
    double second = 0.0;  // beta
};

/// "3,5,7" for K and dimension, "0.1:0.7,0.2:0.6" for alpha_beta.
[[nodiscard]] std::vector<SweepValue> parse_sweep_values(SweepParameter parameter, std::string_view text);

struct SweepRow {
    std::string parameter;
    std::string value;
    SummaryRow summary;
};

/// Re-runs the spec once per value with the parameter overridden. Rejects
/// parameters that do not apply to a template (K for NSGA-II-DE, alpha/beta
/// outside DE/RM-MEDA, dimension for F6-F8) with ConfigError. Writes
/// sweep_<param>.csv plus each value's battery under sweep_<param>/<value>/.
[[nodiscard]] std::vector<SweepRow> sweep(const ExperimentSpec& spec, SweepParameter parameter,
                                          const std::vector<SweepValue>& values, const ExperimentOptions& options = {});

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);

} // namespace dermeda
