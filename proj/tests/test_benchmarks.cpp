#include "dermeda/benchmarks.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

using namespace dermeda;

TEST_CASE("registry metadata")
{
    CHECK(problem_info(ProblemId::F6).num_objectives == 3);
    CHECK(problem_info(ProblemId::F6).num_variables == 10);
    CHECK(problem_info(ProblemId::F1).num_objectives == 2);
    CHECK(problem_info(ProblemId::F1).num_variables == 30);
    CHECK(problem_info(ProblemId::F7).num_variables == 10);
    CHECK(problem_info(ProblemId::F7).multimodal);
    CHECK(problem_info(ProblemId::F8).multimodal);
    CHECK_FALSE(problem_info(ProblemId::F6).convex_front);
    CHECK_FALSE(problem_info(ProblemId::F9).convex_front);
    CHECK(problem_info(ProblemId::F1).convex_front);

    for (auto id : kAllProblems) {
        auto p = make_problem(id);
        CHECK(p->num_variables() == problem_info(id).num_variables);
        CHECK(p->num_objectives() == problem_info(id).num_objectives);
        CHECK(p->bounds().dimension() == p->num_variables());
        CHECK(parse_problem_id(to_string(id)) == id);
    }
    CHECK_FALSE(parse_problem_id("F10").has_value());
    CHECK_THROWS_AS((void)make_problem(ProblemId::F6, 4), std::invalid_argument);
    CHECK(make_problem(ProblemId::F2, 50)->num_variables() == 50);
}

TEST_CASE("evaluation is deterministic and shaped by m")
{
    Rng rng(3);
    for (auto id : kAllProblems) {
        auto p = make_problem(id);
        for (int t = 0; t < 20; ++t) {
            DecisionVector x(p->num_variables());
            for (std::size_t i = 0; i < x.size(); ++i) {
                x[i] = p->bounds().lower(i) + uniform01(rng) * p->bounds().width(i);
            }
            const auto a = p->evaluate(x);
            const auto b = p->evaluate(x);
            CHECK(a == b);
            CHECK(a.size() == p->num_objectives());
        }
    }
}

TEST_CASE("Pareto-set points evaluate onto the analytic front")
{
    for (auto id : kAllProblems) {
        CAPTURE(to_string(id));
        const std::size_t n = problem_info(id).num_variables;
        auto p = make_problem(id);
        double worst = 0.0;
        for (int a = 0; a <= 40; ++a) {
            for (int b = 0; b <= (id == ProblemId::F6 ? 40 : 0); ++b) {
                const auto x = oracle::pareto_set_point(id, n, {a / 40.0, b / 40.0});
                REQUIRE(p->bounds().contains(x));
                worst = std::max(worst, oracle::front_residual(id, p->evaluate(x)));
            }
        }
        CHECK(worst <= 1e-9);
    }
}

TEST_CASE("sampled fronts agree with Pareto-set images")
{
    constexpr double half_pi = std::numbers::pi / 2.0;
    for (auto id : kAllProblems) {
        CAPTURE(to_string(id));
        const std::size_t n = problem_info(id).num_variables;
        auto p = make_problem(id);
        const auto pf = sample_true_pf(id, 10000).points;
        REQUIRE(pf.size() == 10000);

        // every sampled point has a preimage on the PS that maps back onto it
        for (std::size_t k = 0; k < pf.size(); k += 97) {
            const auto& f = pf[k];
            std::vector<double> t;
            if (id == ProblemId::F6) {
                t = {std::asin(std::clamp(f[2], -1.0, 1.0)) / half_pi, std::atan2(f[1], f[0]) / half_pi};
            } else {
                t = {f[0]};
            }
            const auto image = p->evaluate(oracle::pareto_set_point(id, n, t));
            for (std::size_t i = 0; i < f.size(); ++i) {
                CHECK(std::abs(image[i] - f[i]) <= 1e-9);
            }
        }
        // and PS images on a grid lie next to the sampled set
        for (int a = 0; a <= 20; ++a) {
            const auto x = oracle::pareto_set_point(id, n, {a / 20.0, (20 - a) / 20.0});
            CHECK(oracle::nearest_distance(p->evaluate(x), pf) <= 0.03);
        }
    }
}

TEST_CASE("sample_true_pf sizes")
{
    CHECK(sample_true_pf(ProblemId::F1, 500).points.size() == 500);
    CHECK(sample_true_pf(ProblemId::F9, 500).points.size() == 500);
    const auto f6 = sample_true_pf(ProblemId::F6, 1000).points;
    CHECK(f6.size() == 1000);
    CHECK(f6.front().size() == 3);
    CHECK(default_pf_size(ProblemId::F6) == 1000);
    CHECK(default_pf_size(ProblemId::F3) == 500);
    CHECK_THROWS((void)sample_true_pf(ProblemId::F1, 1));
}

TEST_CASE("sampled fronts are mutually non-dominated")
{
    for (auto id : kAllProblems) {
        const auto pf = sample_true_pf(id, default_pf_size(id)).points;
        const auto rank = oracle::ranks_by_extraction(pf);
        CHECK(*std::max_element(rank.begin(), rank.end()) == 0);
    }
}

TEST_CASE("F1 front is convex, F9 front is not")
{
    const auto f1 = sample_true_pf(ProblemId::F1, 500).points;
    const auto f9 = sample_true_pf(ProblemId::F9, 500).points;
    Rng rng(5);
    for (int t = 0; t < 2000; ++t) {
        const auto i = uniform_index(rng, 500), j = uniform_index(rng, 500);
        if (i == j) {
            continue;
        }
        // the front point above the midpoint's f1 weakly dominates the midpoint
        const double m1 = 0.5 * (f1[i][0] + f1[j][0]), m2 = 0.5 * (f1[i][1] + f1[j][1]);
        CHECK(1.0 - std::sqrt(m1) <= m2 + 1e-12);
        const double c1 = 0.5 * (f9[i][0] + f9[j][0]), c2 = 0.5 * (f9[i][1] + f9[j][1]);
        CHECK(1.0 - c1 * c1 > c2);
    }
}

namespace {

// Bin of v among `count` equal strata of [lo, lo + width].
std::size_t stratum(double v, double lo, double width, std::size_t count)
{
    const double inv = 1.0 / static_cast<double>(count);
    std::size_t k = 0;
    while (k + 1 < count && v >= lo + width * ((static_cast<double>(k) + 1.0) * inv)) {
        ++k;
    }
    return k;
}

} // namespace

TEST_CASE("Latin hypercube strata")
{
    const auto unit1 = BoxBounds::uniform(1, 0.0, 1.0);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        Rng rng(seed);
        const auto pts = latin_hypercube_init(unit1, 4, rng);
        std::vector<int> hits(4, 0);
        for (const auto& p : pts) {
            REQUIRE(p[0] >= 0.0);
            REQUIRE(p[0] <= 1.0);
            ++hits[stratum(p[0], 0.0, 1.0, 4)];
        }
        CHECK(hits == std::vector<int>{1, 1, 1, 1});
    }

    const BoxBounds box({-1.0, 2.0}, {1.0, 5.0});
    Rng one(9);
    const auto single = latin_hypercube_init(box, 1, one);
    REQUIRE(single.size() == 1);
    CHECK(box.contains(single[0]));

    const auto cube = BoxBounds::uniform(30, 0.0, 1.0);
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        Rng rng(seed);
        const auto pts = latin_hypercube_init(cube, 300, rng);
        REQUIRE(pts.size() == 300);
        for (std::size_t d = 0; d < 30; ++d) {
            std::vector<int> hits(300, 0);
            for (const auto& p : pts) {
                ++hits[stratum(p[d], 0.0, 1.0, 300)];
            }
            CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
        }
    }
}
