#include "dermeda/algorithms.hpp"

#include "dermeda/local_pca.hpp"
#include "dermeda/metrics.hpp"
#include "dermeda/regularity_model.hpp"
#include "dermeda/rng.hpp"
#include "dermeda/selection.hpp"

#include <algorithm>
#include <cctype>

namespace dermeda {

std::string to_string(Algorithm algorithm)
{
    switch (algorithm) {
    case Algorithm::DeRmMeda:
        return "de_rm_meda";
    case Algorithm::RmMeda:
        return "rm_meda";
    case Algorithm::Nsga2De:
        return "nsga2_de";
    }
    return "unknown";
}

std::optional<Algorithm> parse_algorithm(std::string_view text)
{
    std::string key;
    for (char c : text) {
        if (std::isalnum(static_cast<unsigned char>(c))) {
            key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
        }
    }
    if (key == "dermmeda") {
        return Algorithm::DeRmMeda;
    }
    if (key == "rmmeda") {
        return Algorithm::RmMeda;
    }
    if (key == "nsga2de" || key == "nsgaiide") {
        return Algorithm::Nsga2De;
    }
    return std::nullopt;
}

std::size_t AlgoConfig::population_size() const
{
    return population.value_or(problem == ProblemId::F6 ? 600 : 300);
}

void AlgoConfig::validate() const
{
    const std::size_t n = population_size();
    if (clusters == 0 || n < clusters) {
        throw std::invalid_argument("AlgoConfig: need population >= clusters >= 1");
    }
    if (n < 4) {
        throw std::invalid_argument("AlgoConfig: population must hold at least 4 individuals");
    }
    if (trace_stride == 0) {
        throw std::invalid_argument("AlgoConfig: trace_stride must be >= 1");
    }
    de.validate();
    mix.validate();
}

namespace {

struct RunContext {
    RunContext(const AlgoConfig& cfg, const MopProblem& mop, const PfReference& ref)
        : config(cfg),
          problem(&mop),
          reference(ref),
          evaluator(mop),
          init_rng(make_stream(cfg.seed, "init")),
          partition_rng(make_stream(cfg.seed, "partition")),
          model_rng(make_stream(cfg.seed, "model")),
          de_rng(make_stream(cfg.seed, "de")),
          mutation_rng(make_stream(cfg.seed, "mutation")),
          start(std::chrono::steady_clock::now())
    {
        cfg.validate();
    }

    std::vector<Individual> evaluate_all(std::vector<DecisionVector> xs, std::size_t generation)
    {
        std::vector<Individual> out;
        out.reserve(xs.size());
        try {
            for (auto& x : xs) {
                out.push_back(evaluator.make_individual(std::move(x)));
            }
        } catch (const EvaluationError& e) {
            throw RunError(generation, e.what());
        }
        return out;
    }

    Population initialize()
    {
        const std::size_t n = config.population_size();
        Population p;
        p.capacity = n;
        p.members = evaluate_all(latin_hypercube_init(problem->bounds(), n, init_rng), 0);
        return p;
    }

    void record(const Population& p, std::size_t generation)
    {
        if (generation % config.trace_stride == 0) {
            result.igd_trace.push_back({generation, igd(p.objectives(), reference), evaluator.count()});
        }
    }

    RunResult finish(Population p)
    {
        result.final_igd = igd(p.objectives(), reference);
        result.evaluations = evaluator.count();
        result.final_population = std::move(p);
        result.wall_time = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
        return std::move(result);
    }

    const AlgoConfig& config;
    const MopProblem* problem;
    const PfReference& reference;
    Evaluator evaluator;
    Rng init_rng;
    Rng partition_rng;
    Rng model_rng;
    Rng de_rng;
    Rng mutation_rng;
    std::chrono::steady_clock::time_point start;
    RunResult result;
};

Population next_generation(Population parents, std::vector<Individual> offspring)
{
    const std::size_t target = parents.capacity;
    auto& pool = parents.members;
    pool.insert(pool.end(), std::make_move_iterator(offspring.begin()), std::make_move_iterator(offspring.end()));
    return elite_select(std::move(pool), target);
}

// Shared loop of DE/RM-MEDA and RM-MEDA; RM-MEDA is the all-model mix.
RunResult run_model_based(const AlgoConfig& config, const MixParams& mix, const MopProblem& problem,
                          const PfReference& reference)
{
    RunContext ctx(config, problem, reference);
    const std::size_t n_pop = config.population_size();
    const std::size_t m = ctx.problem->num_objectives();
    const BoxBounds& bounds = ctx.problem->bounds();

    Population pop = ctx.initialize();
    ctx.record(pop, 0);

    for (std::size_t gen = 1; gen <= config.generations; ++gen) {
        const Partition part = partition(pop, config.clusters, m, ctx.partition_rng, {config.max_pca_iters});
        const auto objectives = pop.objectives();
        const auto front = nondominated_indices(objectives);

        std::vector<std::size_t> active;
        std::vector<ManifoldModel> models;
        std::vector<double> volumes, ratios;
        for (std::size_t j = 0; j < part.clusters.size(); ++j) {
            if (part.clusters[j].empty()) {
                continue;
            }
            std::vector<DecisionVector> members;
            members.reserve(part.clusters[j].size());
            for (auto i : part.clusters[j]) {
                members.push_back(pop[i].x);
            }
            models.push_back(build_model(members, part.subspaces[j], m));
            volumes.push_back(model_volume(models.back()));
            const auto& ev = part.subspaces[j].eigenvalues;
            ratios.push_back(convergence_ratio(std::span<const double>(ev.data(), static_cast<std::size_t>(ev.size())), m));
            active.push_back(j);
        }
        const auto quotas = allocate(n_pop, volumes, ratios, mix);

        std::vector<DecisionVector> children;
        children.reserve(n_pop);
        OffspringSplit split;
        for (std::size_t c = 0; c < active.size(); ++c) {
            const auto& cluster = part.clusters[active[c]];
            std::size_t model_count = quotas[c].model_count;
            std::vector<DecisionVector> de_children;
            for (std::size_t t = 0; t < quotas[c].de_count; ++t) {
                const auto parents = pick_de_parents(cluster, front, pop, ctx.de_rng);
                if (!parents) {
                    ++model_count;
                    continue;
                }
                auto v = de_trial(pop[parents->r1].x, pop[parents->r2].x, pop[parents->r3].x, pop[parents->best].x,
                                  config.de, ctx.de_rng);
                de_children.push_back(polynomial_mutation(std::move(v), config.de, bounds, ctx.mutation_rng));
            }
            auto sampled = sample_model(models[c], model_count, bounds, ctx.model_rng);
            split.model += sampled.size();
            split.de += de_children.size();
            std::move(sampled.begin(), sampled.end(), std::back_inserter(children));
            std::move(de_children.begin(), de_children.end(), std::back_inserter(children));
        }
        ctx.result.offspring.push_back(split);

        pop = next_generation(std::move(pop), ctx.evaluate_all(std::move(children), gen));
        ctx.record(pop, gen);
    }
    return ctx.finish(std::move(pop));
}

bool same_point(const Population& pop, std::size_t a, std::size_t b)
{
    return pop[a].x == pop[b].x;
}

RunResult nsga2_de_loop(const AlgoConfig& config, const MopProblem& problem, const PfReference& reference)
{
    RunContext ctx(config, problem, reference);
    const std::size_t n_pop = config.population_size();
    const BoxBounds& bounds = ctx.problem->bounds();
    constexpr int kMaxRedraws = 64;

    Population pop = ctx.initialize();
    ctx.record(pop, 0);

    std::vector<std::size_t> rank(n_pop);
    std::vector<double> crowd(n_pop);
    for (std::size_t gen = 1; gen <= config.generations; ++gen) {
        const auto objectives = pop.objectives();
        const auto ranking = fast_nondominated_sort(objectives);
        for (std::size_t r = 0; r < ranking.fronts.size(); ++r) {
            const auto& front = ranking.fronts[r];
            std::vector<ObjectiveVector> front_obj;
            for (auto i : front) {
                front_obj.push_back(objectives[i]);
            }
            const auto d = crowding_distance(front_obj);
            for (std::size_t k = 0; k < front.size(); ++k) {
                rank[front[k]] = r;
                crowd[front[k]] = d[k];
            }
        }
        const auto& first = ranking.fronts.front();

        auto& rng = ctx.de_rng;
        auto tournament = [&] {
            const std::size_t a = uniform_index(rng, n_pop), b = uniform_index(rng, n_pop);
            if (rank[a] != rank[b]) {
                return rank[a] < rank[b] ? a : b;
            }
            return crowd[b] > crowd[a] ? b : a;
        };
        // Redraw until the candidate differs from everything taken; keep the
        // last draw if the population is too degenerate to allow that.
        auto distinct_draw = [&](auto&& draw, std::initializer_list<std::size_t> taken) {
            std::size_t pick = draw();
            for (int attempt = 0; attempt < kMaxRedraws; ++attempt) {
                const bool clash = std::any_of(taken.begin(), taken.end(),
                                               [&](std::size_t t) { return same_point(pop, t, pick); });
                if (!clash) {
                    break;
                }
                pick = draw();
            }
            return pick;
        };
        auto uniform_member = [&] { return uniform_index(rng, n_pop); };
        auto front_member = [&] { return first[uniform_index(rng, first.size())]; };

        std::vector<DecisionVector> children;
        children.reserve(n_pop);
        for (std::size_t t = 0; t < n_pop; ++t) {
            const std::size_t r1 = tournament();
            const std::size_t best = distinct_draw(front_member, {r1});
            const std::size_t r2 = distinct_draw(uniform_member, {r1, best});
            const std::size_t r3 = distinct_draw(uniform_member, {r1, best, r2});
            auto v = de_trial(pop[r1].x, pop[r2].x, pop[r3].x, pop[best].x, config.de, rng);
            children.push_back(polynomial_mutation(std::move(v), config.de, bounds, ctx.mutation_rng));
        }
        ctx.result.offspring.push_back({0, n_pop});

        pop = next_generation(std::move(pop), ctx.evaluate_all(std::move(children), gen));
        ctx.record(pop, gen);
    }
    return ctx.finish(std::move(pop));
}

std::unique_ptr<MopProblem> registry_problem(const AlgoConfig& config)
{
    return config.num_variables ? make_problem(config.problem, *config.num_variables) : make_problem(config.problem);
}

PfReference registry_reference(const AlgoConfig& config)
{
    return sample_true_pf(config.problem, config.pf_points.value_or(default_pf_size(config.problem)));
}

void require_algorithm(const AlgoConfig& config, Algorithm expected, const char* caller)
{
    if (config.algorithm != expected) {
        throw std::invalid_argument(std::string(caller) + ": config names a different algorithm");
    }
}

} // namespace

RunResult run_de_rm_meda(const AlgoConfig& config)
{
    require_algorithm(config, Algorithm::DeRmMeda, "run_de_rm_meda");
    return run(config, *registry_problem(config), registry_reference(config));
}

RunResult run_rm_meda(const AlgoConfig& config)
{
    require_algorithm(config, Algorithm::RmMeda, "run_rm_meda");
    return run(config, *registry_problem(config), registry_reference(config));
}

RunResult run_nsga2_de(const AlgoConfig& config)
{
    require_algorithm(config, Algorithm::Nsga2De, "run_nsga2_de");
    return run(config, *registry_problem(config), registry_reference(config));
}

RunResult run(const AlgoConfig& config)
{
    return run(config, *registry_problem(config), registry_reference(config));
}

RunResult run(const AlgoConfig& config, const MopProblem& problem, const PfReference& reference)
{
    switch (config.algorithm) {
    case Algorithm::DeRmMeda:
        return run_model_based(config, config.mix, problem, reference);
    case Algorithm::RmMeda:
        return run_model_based(config, MixParams{1.0, 0.0}, problem, reference);
    case Algorithm::Nsga2De:
        return nsga2_de_loop(config, problem, reference);
    }
    throw std::invalid_argument("run: unknown algorithm");
}

} // namespace dermeda
