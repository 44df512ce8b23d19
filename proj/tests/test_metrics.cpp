#include "dermeda/metrics.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace dermeda;

TEST_CASE("igd worked example")
{
    const std::vector<ObjectiveVector> ref{{0, 1}, {1, 0}};
    CHECK(igd(std::vector<ObjectiveVector>{{0.5, 0.5}}, ref) == doctest::Approx(0.70711).epsilon(1e-5));
    CHECK(igd(ref, ref) == 0.0);
    CHECK_THROWS_AS((void)igd(std::vector<ObjectiveVector>{}, ref), std::invalid_argument);
    CHECK_THROWS_AS((void)igd(ref, std::vector<ObjectiveVector>{}), std::invalid_argument);
    CHECK_THROWS_AS((void)igd(std::vector<ObjectiveVector>{{1, 2, 3}}, ref), std::invalid_argument);
}

TEST_CASE("igd of a sampled front against itself is zero")
{
    for (auto id : kAllProblems) {
        const auto pf = sample_true_pf(id, default_pf_size(id));
        CHECK(igd(pf.points, pf) == 0.0);
    }
}

TEST_CASE("igd matches the brute-force oracle")
{
    Rng rng(23);
    for (int t = 0; t < 200; ++t) {
        const std::size_t m = 2 + t % 2;
        const auto a = oracle::random_points(1 + uniform_index(rng, 80), m, rng, -2.0, 2.0);
        const auto r = oracle::random_points(1 + uniform_index(rng, 80), m, rng, -2.0, 2.0);
        CHECK(std::abs(igd(a, r) - oracle::igd_brute_force(a, r)) <= 1e-12);
    }
}

TEST_CASE("adding approximation points never increases igd")
{
    Rng rng(24);
    for (int t = 0; t < 100; ++t) {
        const auto r = oracle::random_points(40, 2, rng);
        auto a = oracle::random_points(5, 2, rng);
        const double before = igd(a, r);
        const auto extra = oracle::random_points(5, 2, rng);
        a.insert(a.end(), extra.begin(), extra.end());
        CHECK(igd(a, r) <= before);
    }
}

TEST_CASE("igd is invariant under isometries")
{
    Rng rng(25);
    for (int t = 0; t < 100; ++t) {
        auto a = oracle::random_points(20, 2, rng);
        auto r = oracle::random_points(30, 2, rng);
        const double before = igd(a, r);
        const double angle = 6.283185307179586 * uniform01(rng), dx = uniform01(rng), dy = -uniform01(rng);
        const auto move = [&](std::vector<ObjectiveVector>& pts) {
            for (auto& p : pts) {
                const double x = std::cos(angle) * p[0] - std::sin(angle) * p[1] + dx;
                const double y = std::sin(angle) * p[0] + std::cos(angle) * p[1] + dy;
                p = {x, y};
            }
        };
        move(a);
        move(r);
        CHECK(igd(a, r) == doctest::Approx(before).epsilon(1e-12));
    }
}
