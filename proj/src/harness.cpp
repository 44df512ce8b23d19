#include "dermeda/harness.hpp"

#include "dermeda/pf_io.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>
#include <thread>

namespace dermeda {

namespace {

namespace fs = std::filesystem;
namespace pt = boost::property_tree;

const std::vector<std::string> kRunKeys{"problem", "algorithm", "population", "generations", "clusters",
                                        "alpha",   "beta",      "de_f",       "de_cr",       "eta"};

std::string trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_list(std::string_view s)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        const auto comma = s.find(',', start);
        const auto piece = trim(s.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        if (!piece.empty()) {
            out.push_back(piece);
        }
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

template <typename T>
T parse_number(const std::string& key, const std::string& text)
{
    T value{};
    const auto s = trim(text);
    const auto res = std::from_chars(s.data(), s.data() + s.size(), value);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
        throw ConfigError("config: '" + key + "' expects a number, got '" + text + "'");
    }
    return value;
}

bool contains(const std::vector<std::string>& keys, const std::string& key)
{
    return std::find(keys.begin(), keys.end(), key) != keys.end();
}

using KeyValues = std::map<std::string, std::string>;

std::vector<AlgoConfig> expand_template(const KeyValues& kv, const std::string& section)
{
    AlgoConfig base;
    auto get = [&](const char* key) -> const std::string* {
        const auto it = kv.find(key);
        return it == kv.end() ? nullptr : &it->second;
    };
    if (const auto* v = get("population"); v && trim(*v) != "auto") {
        base.population = parse_number<std::size_t>("population", *v);
    }
    if (const auto* v = get("generations")) {
        base.generations = parse_number<std::size_t>("generations", *v);
    }
    if (const auto* v = get("clusters")) {
        base.clusters = parse_number<std::size_t>("clusters", *v);
    }
    if (const auto* v = get("alpha")) {
        base.mix.alpha = parse_number<double>("alpha", *v);
    }
    if (const auto* v = get("beta")) {
        base.mix.beta = parse_number<double>("beta", *v);
    }
    if (const auto* v = get("de_f")) {
        base.de.scale = parse_number<double>("de_f", *v);
    }
    if (const auto* v = get("de_cr")) {
        base.de.crossover = parse_number<double>("de_cr", *v);
    }
    if (const auto* v = get("eta")) {
        base.de.distribution_index = parse_number<double>("eta", *v);
    }

    const auto* problems = get("problem");
    const auto* algorithms = get("algorithm");
    if (problems == nullptr || algorithms == nullptr) {
        throw ConfigError("config: section [" + section + "] needs 'problem' and 'algorithm'");
    }
    std::vector<AlgoConfig> out;
    for (const auto& p : split_list(*problems)) {
        const auto id = parse_problem_id(p);
        if (!id) {
            throw ConfigError("config: unknown problem '" + p + "'");
        }
        for (const auto& a : split_list(*algorithms)) {
            const auto alg = parse_algorithm(a);
            if (!alg) {
                throw ConfigError("config: unknown algorithm '" + a + "'");
            }
            AlgoConfig cfg = base;
            cfg.problem = *id;
            cfg.algorithm = *alg;
            try {
                cfg.validate();
            } catch (const std::invalid_argument& e) {
                throw ConfigError(std::string("config: [") + section + "] " + e.what());
            }
            out.push_back(cfg);
        }
    }
    return out;
}

std::string run_id_for(const AlgoConfig& cfg, std::size_t template_index, std::size_t repeat)
{
    std::ostringstream os;
    os << to_string(cfg.problem) << '_' << to_string(cfg.algorithm) << "_t" << template_index << "_r"
       << std::setw(3) << std::setfill('0') << repeat;
    return os.str();
}

RunRecord execute(const AlgoConfig& cfg, std::string run_id, std::size_t template_index, std::size_t repeat)
{
    RunRecord rec;
    rec.run_id = std::move(run_id);
    rec.template_index = template_index;
    rec.repeat = repeat;
    rec.config = cfg;
    try {
        auto result = run(cfg);
        rec.ok = true;
        rec.trace = std::move(result.igd_trace);
        if (rec.trace.empty() || rec.trace.back().generation != cfg.generations) {
            rec.trace.push_back({cfg.generations, result.final_igd, result.evaluations});
        }
        rec.final_igd = result.final_igd;
        rec.evaluations = result.evaluations;
        rec.wall_ms = std::chrono::duration<double, std::milli>(result.wall_time).count();
        rec.final_front = result.final_population.objectives();
    } catch (const std::exception& e) {
        rec.ok = false;
        rec.error = e.what();
    }
    return rec;
}

std::ofstream open_output(const fs::path& path)
{
    fs::create_directories(path.parent_path());
    std::ofstream os(path, std::ios::binary);
    if (!os) {
        throw std::runtime_error("cannot write " + path.string());
    }
    return os;
}

void write_manifest(const fs::path& path, const ExperimentSpec& spec, const ExperimentResult& result)
{
    nlohmann::ordered_json j;
    j["repeats"] = spec.repeats;
    j["base_seed"] = spec.base_seed;
    j["seed_rule"] = "seed = base_seed + repeat_index";
    j["trace_stride"] = spec.trace_stride;
    auto& templates = j["templates"] = nlohmann::ordered_json::array();
    for (std::size_t t = 0; t < spec.runs.size(); ++t) {
        const auto& c = spec.runs[t];
        templates.push_back({{"index", t},
                             {"problem", to_string(c.problem)},
                             {"algorithm", to_string(c.algorithm)},
                             {"population", c.population_size()},
                             {"generations", c.generations},
                             {"clusters", c.clusters},
                             {"alpha", c.mix.alpha},
                             {"beta", c.mix.beta},
                             {"de_f", c.de.scale},
                             {"de_cr", c.de.crossover},
                             {"eta", c.de.distribution_index}});
    }
    auto& failures = j["failed_runs"] = nlohmann::ordered_json::array();
    for (const auto& r : result.runs) {
        if (!r.ok) {
            failures.push_back({{"run_id", r.run_id}, {"error", r.error}});
        }
    }
    open_output(path) << j.dump(2) << '\n';
}

} // namespace

void ExperimentSpec::validate() const
{
    if (repeats == 0) {
        throw ConfigError("experiment: repeats must be >= 1");
    }
    if (trace_stride == 0) {
        throw ConfigError("experiment: trace_stride must be >= 1");
    }
    if (runs.empty()) {
        throw ConfigError("experiment: no run templates");
    }
}

ExperimentSpec parse_experiment(std::istream& is)
{
    pt::ptree tree;
    try {
        pt::read_ini(is, tree);
    } catch (const pt::ini_parser_error& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }

    ExperimentSpec spec;
    KeyValues defaults;
    std::vector<std::pair<std::string, KeyValues>> sections;

    auto take_experiment_key = [&](const std::string& key, const std::string& value) {
        if (key == "repeats") {
            spec.repeats = parse_number<std::size_t>(key, value);
        } else if (key == "base_seed") {
            spec.base_seed = parse_number<std::uint64_t>(key, value);
        } else if (key == "trace_stride") {
            spec.trace_stride = parse_number<std::size_t>(key, value);
        } else if (key == "output_dir") {
            spec.output_dir = trim(value);
        } else if (contains(kRunKeys, key)) {
            defaults[key] = value;
        } else {
            throw ConfigError("config: unknown key '" + key + "'");
        }
    };

    for (const auto& [name, node] : tree) {
        if (node.empty()) {
            take_experiment_key(name, node.data());
            continue;
        }
        if (name == "experiment") {
            for (const auto& [key, value] : node) {
                take_experiment_key(key, value.data());
            }
            continue;
        }
        KeyValues kv;
        for (const auto& [key, value] : node) {
            if (!contains(kRunKeys, key)) {
                throw ConfigError("config: unknown key '" + key + "' in [" + name + "]");
            }
            kv[key] = value.data();
        }
        sections.emplace_back(name, std::move(kv));
    }

    if (sections.empty()) {
        sections.emplace_back("experiment", KeyValues{});
    }
    for (auto& [name, kv] : sections) {
        KeyValues merged = defaults;
        for (auto& [k, v] : kv) {
            merged[k] = v;
        }
        auto expanded = expand_template(merged, name);
        spec.runs.insert(spec.runs.end(), expanded.begin(), expanded.end());
    }
    for (auto& cfg : spec.runs) {
        cfg.trace_stride = spec.trace_stride;
    }
    spec.validate();
    return spec;
}

ExperimentSpec load_experiment(const std::filesystem::path& path)
{
    std::ifstream is(path);
    if (!is) {
        throw ConfigError("config: cannot open " + path.string());
    }
    return parse_experiment(is);
}

ExperimentSpec table_one_spec(std::size_t repeats, std::size_t generations)
{
    ExperimentSpec spec;
    spec.repeats = repeats;
    for (auto id : kAllProblems) {
        for (auto alg : {Algorithm::Nsga2De, Algorithm::RmMeda, Algorithm::DeRmMeda}) {
            AlgoConfig cfg;
            cfg.problem = id;
            cfg.algorithm = alg;
            cfg.generations = generations;
            spec.runs.push_back(cfg);
        }
    }
    return spec;
}

std::size_t ExperimentResult::failed_runs() const
{
    return static_cast<std::size_t>(std::count_if(runs.begin(), runs.end(), [](const RunRecord& r) { return !r.ok; }));
}

MeanStd mean_std(std::span<const double> values)
{
    if (values.empty()) {
        return {std::nan(""), std::nan("")};
    }
    double sum = 0.0;
    for (double v : values) {
        sum += v;
    }
    const double mean = sum / static_cast<double>(values.size());
    if (values.size() == 1) {
        return {mean, 0.0};
    }
    double sq = 0.0;
    for (double v : values) {
        sq += (v - mean) * (v - mean);
    }
    return {mean, std::sqrt(sq / static_cast<double>(values.size() - 1))};
}

ExperimentResult run_experiment(const ExperimentSpec& spec, const ExperimentOptions& options)
{
    spec.validate();

    struct Job {
        AlgoConfig config;
        std::string run_id;
        std::size_t template_index;
        std::size_t repeat;
    };
    std::vector<Job> jobs;
    for (std::size_t t = 0; t < spec.runs.size(); ++t) {
        for (std::size_t r = 0; r < spec.repeats; ++r) {
            AlgoConfig cfg = spec.runs[t];
            cfg.seed = spec.base_seed + r;
            cfg.trace_stride = spec.trace_stride;
            jobs.push_back({cfg, run_id_for(cfg, t, r), t, r});
        }
    }

    ExperimentResult result;
    result.runs.resize(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++) {
            result.runs[i] = execute(jobs[i].config, jobs[i].run_id, jobs[i].template_index, jobs[i].repeat);
        }
    };
    const std::size_t n_workers = std::clamp<std::size_t>(options.workers, 1, std::max<std::size_t>(jobs.size(), 1));
    {
        std::vector<std::jthread> pool;
        for (std::size_t w = 1; w < n_workers; ++w) {
            pool.emplace_back(worker);
        }
        worker();
    }

    for (std::size_t t = 0; t < spec.runs.size(); ++t) {
        std::vector<double> igds, walls, evals;
        std::size_t failed = 0;
        for (const auto& r : result.runs) {
            if (r.template_index != t) {
                continue;
            }
            if (!r.ok) {
                ++failed;
                continue;
            }
            igds.push_back(r.trace.back().igd);
            walls.push_back(r.wall_ms);
            evals.push_back(static_cast<double>(r.evaluations));
        }
        const auto igd_stats = mean_std(igds);
        SummaryRow row;
        row.problem = to_string(spec.runs[t].problem);
        row.algorithm = to_string(spec.runs[t].algorithm);
        row.repeats = spec.repeats;
        row.generations = spec.runs[t].generations;
        row.mean_igd = igd_stats.mean;
        row.std_igd = igd_stats.std;
        row.mean_wall_ms = mean_std(walls).mean;
        row.mean_evaluations = mean_std(evals).mean;
        row.failed = failed;
        row.template_index = t;
        if (failed > 0) {
            row.note = "failed_runs";
        } else if (spec.repeats == 1) {
            row.note = "single_run_std_zero";
        }
        result.summary.push_back(row);
    }

    if (options.write_files) {
        const auto& dir = spec.output_dir;
        for (const auto& r : result.runs) {
            if (!r.ok) {
                continue;
            }
            auto os = open_output(dir / "traces" / (r.run_id + ".csv"));
            write_trace_csv(os, r);
            auto front = open_output(dir / "fronts" / (r.run_id + ".txt"));
            write_points(front, r.final_front);
        }
        auto os = open_output(dir / "summary.csv");
        write_summary_csv(os, result.summary, options.record_timing);
        write_manifest(dir / "manifest.json", spec, result);
    }
    return result;
}

void write_summary_csv(std::ostream& os, const std::vector<SummaryRow>& rows, bool with_timing)
{
    os << "problem,algorithm,repeats,generations,mean_igd,std_igd,mean_wall_ms,failed,note,template\n";
    for (const auto& r : rows) {
        os << r.problem << ',' << r.algorithm << ',' << r.repeats << ',' << r.generations << ','
           << format_number(r.mean_igd) << ',' << format_number(r.std_igd) << ','
           << (with_timing ? format_number(r.mean_wall_ms) : std::string{}) << ',' << r.failed << ',' << r.note
           << ',' << r.template_index << '\n';
    }
}

void write_trace_csv(std::ostream& os, const RunRecord& record)
{
    os << "run_id,seed,problem,algorithm,generation,igd,evaluations\n";
    const auto problem = to_string(record.config.problem);
    const auto algorithm = to_string(record.config.algorithm);
    for (const auto& p : record.trace) {
        os << record.run_id << ',' << record.config.seed << ',' << problem << ',' << algorithm << ',' << p.generation
           << ',' << format_number(p.igd) << ',' << p.evaluations << '\n';
    }
}

std::vector<TracePoint> read_trace_csv(std::istream& is)
{
    std::vector<TracePoint> out;
    std::string line;
    std::getline(is, line);  // header
    while (std::getline(is, line)) {
        if (trim(line).empty()) {
            continue;
        }
        std::vector<std::string> cells;
        std::stringstream ss(line);
        for (std::string cell; std::getline(ss, cell, ',');) {
            cells.push_back(cell);
        }
        if (cells.size() != 7) {
            throw std::runtime_error("trace: expected 7 columns");
        }
        out.push_back({parse_number<std::size_t>("generation", cells[4]), parse_number<double>("igd", cells[5]),
                       parse_number<std::size_t>("evaluations", cells[6])});
    }
    return out;
}

std::optional<SweepParameter> parse_sweep_parameter(std::string_view text)
{
    if (text == "K" || text == "k" || text == "clusters") {
        return SweepParameter::Clusters;
    }
    if (text == "alpha_beta") {
        return SweepParameter::AlphaBeta;
    }
    if (text == "dim" || text == "dimension") {
        return SweepParameter::Dimension;
    }
    return std::nullopt;
}

std::string to_string(SweepParameter parameter)
{
    switch (parameter) {
    case SweepParameter::Clusters:
        return "K";
    case SweepParameter::AlphaBeta:
        return "alpha_beta";
    case SweepParameter::Dimension:
        return "dim";
    }
    return "unknown";
}

std::vector<SweepValue> parse_sweep_values(SweepParameter parameter, std::string_view text)
{
    std::vector<SweepValue> values;
    for (const auto& item : split_list(text)) {
        SweepValue v;
        v.label = item;
        if (parameter == SweepParameter::AlphaBeta) {
            const auto sep = item.find_first_of(":/");
            if (sep == std::string::npos) {
                throw ConfigError("sweep: alpha_beta values look like 0.3:0.6, got '" + item + "'");
            }
            v.first = parse_number<double>("alpha", item.substr(0, sep));
            v.second = parse_number<double>("beta", item.substr(sep + 1));
        } else {
            v.first = static_cast<double>(parse_number<std::size_t>(to_string(parameter), item));
        }
        values.push_back(v);
    }
    if (values.empty()) {
        throw ConfigError("sweep: no values given");
    }
    return values;
}

std::vector<SweepRow> sweep(const ExperimentSpec& spec, SweepParameter parameter, const std::vector<SweepValue>& values,
                            const ExperimentOptions& options)
{
    spec.validate();
    for (const auto& cfg : spec.runs) {
        const bool model_based = cfg.algorithm != Algorithm::Nsga2De;
        if (parameter == SweepParameter::Clusters && !model_based) {
            throw ConfigError("sweep: K does not apply to " + to_string(cfg.algorithm));
        }
        if (parameter == SweepParameter::AlphaBeta && cfg.algorithm != Algorithm::DeRmMeda) {
            throw ConfigError("sweep: alpha_beta only applies to de_rm_meda");
        }
        if (parameter == SweepParameter::Dimension
            && (cfg.problem == ProblemId::F6 || cfg.problem == ProblemId::F7 || cfg.problem == ProblemId::F8)) {
            throw ConfigError("sweep: " + to_string(cfg.problem) + " has a fixed dimension; dim sweeps cover F1-F5 and F9");
        }
    }

    std::vector<SweepRow> rows;
    for (const auto& v : values) {
        ExperimentSpec local = spec;
        local.output_dir = spec.output_dir / ("sweep_" + to_string(parameter)) / v.label;
        for (auto& cfg : local.runs) {
            switch (parameter) {
            case SweepParameter::Clusters:
                cfg.clusters = static_cast<std::size_t>(v.first);
                break;
            case SweepParameter::AlphaBeta:
                cfg.mix = {v.first, v.second};
                break;
            case SweepParameter::Dimension:
                cfg.num_variables = static_cast<std::size_t>(v.first);
                break;
            }
            try {
                cfg.validate();
                if (cfg.num_variables) {
                    (void)make_problem(cfg.problem, *cfg.num_variables);
                }
            } catch (const std::invalid_argument& e) {
                throw ConfigError(std::string("sweep: ") + e.what());
            }
        }
        const auto result = run_experiment(local, options);
        for (const auto& s : result.summary) {
            rows.push_back({to_string(parameter), v.label, s});
        }
    }
    if (options.write_files) {
        auto os = open_output(spec.output_dir / ("sweep_" + to_string(parameter) + ".csv"));
        write_sweep_csv(os, rows);
    }
    return rows;
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows)
{
    os << "parameter,value,problem,algorithm,repeats,generations,mean_evaluations,mean_igd,std_igd,failed\n";
    for (const auto& r : rows) {
        const auto& s = r.summary;
        // alpha:beta labels stay comma-free
        os << r.parameter << ',' << r.value << ',' << s.problem << ',' << s.algorithm << ',' << s.repeats << ','
           << s.generations << ',' << format_number(s.mean_evaluations) << ',' << format_number(s.mean_igd) << ','
           << format_number(s.std_igd) << ',' << s.failed << '\n';
    }
}

} // namespace dermeda
