#include "dermeda/algorithms.hpp"
#include "dermeda/metrics.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>

using namespace dermeda;

namespace {

AlgoConfig small(ProblemId problem, Algorithm algorithm, std::size_t generations, std::uint64_t seed = 1)
{
    AlgoConfig c;
    c.problem = problem;
    c.algorithm = algorithm;
    c.population = 40;
    c.generations = generations;
    c.seed = seed;
    c.pf_points = 100;
    return c;
}

constexpr Algorithm kAll[] = {Algorithm::DeRmMeda, Algorithm::RmMeda, Algorithm::Nsga2De};

// Well-behaved until x1 crosses a threshold, then returns NaN.
class Trap final : public MopProblem {
public:
    std::size_t num_variables() const noexcept override { return 4; }
    std::size_t num_objectives() const noexcept override { return 2; }
    const BoxBounds& bounds() const noexcept override { return box_; }
    std::string name() const override { return "trap"; }
    ObjectiveVector evaluate(std::span<const double> x) const override
    {
        const double g = 1.0 + x[1] * x[1] + x[2] * x[2] + x[3] * x[3];
        if (x[0] > 0.999) {
            return {std::numeric_limits<double>::quiet_NaN(), g};
        }
        return {x[0], g * (1.0 - std::sqrt(x[0] / g))};
    }

private:
    BoxBounds box_ = BoxBounds::uniform(4, 0.0, 1.0);
};

} // namespace

TEST_CASE("algorithm names")
{
    for (auto a : kAll) {
        CHECK(parse_algorithm(to_string(a)) == a);
    }
    CHECK(parse_algorithm("DE/RM-MEDA") == Algorithm::DeRmMeda);
    CHECK(parse_algorithm("RM-MEDA") == Algorithm::RmMeda);
    CHECK(parse_algorithm("NSGA-II-DE") == Algorithm::Nsga2De);
    CHECK_FALSE(parse_algorithm("moead").has_value());
}

TEST_CASE("zero generations returns the evaluated initial population")
{
    for (auto a : kAll) {
        const auto r = run(small(ProblemId::F2, a, 0));
        CHECK(r.evaluations == 40);
        CHECK(r.final_population.size() == 40);
        CHECK(r.igd_trace.size() == 1);
        CHECK(r.offspring.empty());
        const auto p = make_problem(ProblemId::F2);
        for (const auto& ind : r.final_population.members) {
            CHECK(ind.f == p->evaluate(ind.x));
        }
    }
    // the same seed draws the same initial design for every algorithm
    CHECK(run(small(ProblemId::F2, Algorithm::DeRmMeda, 0)).final_population
          == run(small(ProblemId::F2, Algorithm::Nsga2De, 0)).final_population);
}

TEST_CASE("evaluation accounting and population size")
{
    for (auto id : {ProblemId::F1, ProblemId::F6, ProblemId::F9}) {
        for (auto a : kAll) {
            const std::size_t gens = 7;
            const auto r = run(small(id, a, gens));
            CHECK(r.evaluations == 40 + gens * 40);
            CHECK(r.final_population.size() == 40);
            REQUIRE(r.offspring.size() == gens);
            for (const auto& s : r.offspring) {
                CHECK(s.model + s.de == 40);
                if (a == Algorithm::RmMeda) {
                    CHECK(s.de == 0);
                }
                if (a == Algorithm::Nsga2De) {
                    CHECK(s.model == 0);
                }
            }
            const auto p = make_problem(id);
            for (const auto& ind : r.final_population.members) {
                CHECK(p->bounds().contains(ind.x));
                CHECK(ind.f == p->evaluate(ind.x));
            }
            CHECK(r.final_igd == igd(r.final_population.objectives(), sample_true_pf(id, 100)));
        }
    }
}

TEST_CASE("runs are bitwise reproducible")
{
    for (auto a : kAll) {
        const auto cfg = small(ProblemId::F4, a, 10, 42);
        const auto x = run(cfg);
        const auto y = run(cfg);
        CHECK(x.final_population == y.final_population);
        CHECK(x.igd_trace == y.igd_trace);
        CHECK(x.offspring == y.offspring);
        const auto z = run(small(ProblemId::F4, a, 10, 43));
        CHECK_FALSE(x.final_population == z.final_population);
    }
}

TEST_CASE("DE/RM-MEDA with an all-model mix is RM-MEDA")
{
    auto hybrid = small(ProblemId::F3, Algorithm::DeRmMeda, 10, 5);
    hybrid.mix = {1.0, 0.0};
    const auto a = run(hybrid);
    const auto b = run(small(ProblemId::F3, Algorithm::RmMeda, 10, 5));
    CHECK(a.final_population == b.final_population);
    CHECK(a.igd_trace == b.igd_trace);
}

TEST_CASE("trace stride")
{
    auto cfg = small(ProblemId::F1, Algorithm::DeRmMeda, 12);
    cfg.trace_stride = 4;
    const auto r = run(cfg);
    REQUIRE(r.igd_trace.size() == 12 / 4 + 1);
    CHECK(r.igd_trace[0].generation == 0);
    CHECK(r.igd_trace[3].generation == 12);
    CHECK(r.igd_trace[3].igd == r.final_igd);
    CHECK(r.igd_trace[1].evaluations == 40 + 4 * 40);
}

TEST_CASE("entry points check the configured algorithm")
{
    CHECK_THROWS_AS((void)run_rm_meda(small(ProblemId::F1, Algorithm::DeRmMeda, 1)), std::invalid_argument);
    CHECK_NOTHROW((void)run_nsga2_de(small(ProblemId::F1, Algorithm::Nsga2De, 1)));
    auto bad = small(ProblemId::F1, Algorithm::DeRmMeda, 1);
    bad.clusters = 41;
    CHECK_THROWS_AS((void)run(bad), std::invalid_argument);
    bad = small(ProblemId::F1, Algorithm::DeRmMeda, 1);
    bad.mix = {0.7, 0.6};
    CHECK_THROWS_AS((void)run(bad), std::invalid_argument);
}

TEST_CASE("custom dimension")
{
    auto cfg = small(ProblemId::F1, Algorithm::DeRmMeda, 2);
    cfg.num_variables = 50;
    const auto r = run(cfg);
    CHECK(r.final_population[0].x.size() == 50);
}

TEST_CASE("evaluation failures surface as RunError")
{
    Trap trap;
    const PfReference ref{{{0.0, 1.0}, {1.0, 0.0}}};
    for (auto a : kAll) {
        auto cfg = small(ProblemId::F1, a, 200);
        try {
            (void)run(cfg, trap, ref);
            FAIL("expected RunError");
        } catch (const RunError& e) {
            CHECK(e.generation() <= 200);
            CHECK(std::string(e.what()).find("generation") != std::string::npos);
        }
    }
}
