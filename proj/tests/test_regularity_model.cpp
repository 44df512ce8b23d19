#include "dermeda/regularity_model.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace dermeda;

namespace {

ManifoldModel line_model(std::size_t n, double variance)
{
    ManifoldModel m;
    m.subspace.mean = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
    m.subspace.basis = Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(n), 1);
    m.subspace.eigenvalues = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
    m.extents_lo = {-1.0};
    m.extents_hi = {1.0};
    m.noise_variance = variance;
    m.noise_sd = std::sqrt(variance);
    return m;
}

} // namespace

TEST_CASE("collinear model extents")
{
    const std::vector<DecisionVector> members{{0, 0}, {1, 1}, {2, 2}};
    const auto model = build_model(members, cluster_statistics(members, 2), 2);
    REQUIRE(model.extents_lo.size() == 1);
    CHECK(std::abs(model.extents_lo[0]) == doctest::Approx(std::sqrt(2.0)));
    CHECK(model.extents_hi[0] == doctest::Approx(-model.extents_lo[0]));
    CHECK(model.noise_variance <= 1e-15);
    CHECK(model_volume(model) == doctest::Approx(4.2426).epsilon(1e-4));
}

TEST_CASE("singleton model is a point without noise")
{
    const std::vector<DecisionVector> one{{0.2, 0.4, 0.6}};
    const auto model = build_model(one, cluster_statistics(one, 2), 2);
    CHECK(model.extents_lo[0] == 0.0);
    CHECK(model.extents_hi[0] == 0.0);
    CHECK(model.noise_variance == 0.0);
    CHECK(model_volume(model) == kMinVolume);
}

TEST_CASE("noise variance is the mean of the trailing eigenvalues")
{
    Rng gen(12);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 3 + trial % 6, m = 2 + trial % 2;
        const auto pts = oracle::random_points(15, n, gen);
        const auto sub = cluster_statistics(pts, m);
        const auto model = build_model(pts, sub, m);
        double tail = 0.0;
        for (std::size_t i = m - 1; i < n; ++i) {
            tail += sub.eigenvalues[static_cast<Eigen::Index>(i)];
        }
        CHECK(model.noise_variance == doctest::Approx(tail / static_cast<double>(n - m + 1)));
        CHECK(model.noise_sd == doctest::Approx(std::sqrt(model.noise_variance)));
        for (std::size_t i = 0; i + 1 < m; ++i) {
            CHECK(model.extents_lo[i] <= model.extents_hi[i]);
        }
    }
}

TEST_CASE("model volume")
{
    auto m3 = line_model(4, 0.0);
    m3.subspace.basis = Eigen::MatrixXd::Identity(4, 2);
    m3.extents_lo = {0.0, 0.0};
    m3.extents_hi = {2.0, 3.0};
    CHECK(model_volume(m3) == doctest::Approx(13.5));

    auto flat = m3;
    flat.extents_hi = {0.0, 0.0};
    CHECK(model_volume(flat) == kMinVolume);

    // monotone in the extents
    Rng rng(2);
    for (int t = 0; t < 200; ++t) {
        auto a = m3;
        a.extents_hi = {uniform01(rng) * 3, uniform01(rng) * 3};
        auto b = a;
        b.extents_hi[t % 2] += uniform01(rng);
        CHECK(model_volume(a) <= model_volume(b));
    }
}

TEST_CASE("sampling with zero noise stays on the line")
{
    const std::vector<DecisionVector> members{{0, 0}, {1, 1}, {2, 2}};
    const auto model = build_model(members, cluster_statistics(members, 2), 2);
    const auto box = BoxBounds::uniform(2, -10.0, 10.0);
    Rng rng(6);
    CHECK(sample_model(model, 0, box, rng).empty());
    const auto xs = sample_model(model, 1000, box, rng);
    REQUIRE(xs.size() == 1000);
    const double reach = 1.5;  // 1.5 * sqrt(2) along the unit diagonal
    for (const auto& x : xs) {
        CHECK(std::abs(x[0] - x[1]) <= 1e-9);
        CHECK(std::abs(x[0] - 1.0) <= reach + 1e-9);
    }
}

TEST_CASE("samples are clamped into the bounds")
{
    Rng gen(31);
    for (int trial = 0; trial < 30; ++trial) {
        const auto pts = oracle::random_points(10, 4, gen, -1.0, 2.0);
        const auto model = build_model(pts, cluster_statistics(pts, 2), 2);
        const auto box = BoxBounds::uniform(4, 0.0, 1.0);
        for (const auto& x : sample_model(model, 200, box, gen)) {
            CHECK(box.contains(x));
        }
    }
}

TEST_CASE("noise variance of samples")
{
    const double variance = 0.04;
    const auto model = line_model(5, variance);
    const auto box = BoxBounds::uniform(5, -100.0, 100.0);
    Rng rng(77);
    const auto xs = sample_model(model, 100000, box, rng);
    for (std::size_t d = 1; d < 5; ++d) {
        double s = 0.0, sq = 0.0;
        for (const auto& x : xs) {
            s += x[d];
            sq += x[d] * x[d];
        }
        const double mean = s / 1e5;
        const double var = sq / 1e5 - mean * mean;
        CHECK(std::abs(var - variance) <= 0.05 * variance);
    }
}
