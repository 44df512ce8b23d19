#include "dermeda/pf_io.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <limits>
#include <sstream>

using namespace dermeda;

TEST_CASE("write then read round-trips bit for bit")
{
    Rng rng(21);
    for (int trial = 0; trial < 50; ++trial) {
        auto pts = oracle::random_points(1 + trial, 2 + trial % 2, rng, -1e3, 1e3);
        pts.front().front() = std::numeric_limits<double>::denorm_min();
        if (pts.size() > 1) {
            pts[1][0] = 0.1;
        }
        std::stringstream ss;
        write_points(ss, pts);
        CHECK(read_points(ss) == pts);
    }
}

TEST_CASE("format_number")
{
    CHECK(format_number(0.0) == "0");
    CHECK(format_number(0.5) == "0.5");
    CHECK(format_number(0.1) == "0.10000000000000001");
}

TEST_CASE("reader skips headers, comments and blank lines")
{
    std::istringstream in("f1,f2\n# comment\n\n0.5,1\n  1;2.5\n3\t4\n");
    const auto pts = read_points(in);
    REQUIRE(pts.size() == 3);
    CHECK(pts[0] == ObjectiveVector{0.5, 1.0});
    CHECK(pts[1] == ObjectiveVector{1.0, 2.5});
    CHECK(pts[2] == ObjectiveVector{3.0, 4.0});
}

TEST_CASE("reader rejects ragged and garbage rows")
{
    std::istringstream ragged("1 2\n3 4 5\n");
    CHECK_THROWS_AS((void)read_points(ragged), std::runtime_error);
    std::istringstream garbage("1 2\nx y\n");
    CHECK_THROWS_AS((void)read_points(garbage), std::runtime_error);
    std::istringstream empty("");
    CHECK(read_points(empty).empty());
}
