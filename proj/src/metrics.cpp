#include "dermeda/metrics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace dermeda {

double igd(std::span<const ObjectiveVector> approx, std::span<const ObjectiveVector> reference)
{
    if (approx.empty() || reference.empty()) {
        throw std::invalid_argument("igd: approximation and reference sets must be non-empty");
    }
    const std::size_t m = reference.front().size();
    for (const auto& a : approx) {
        if (a.size() != m) {
            throw std::invalid_argument("igd: objective dimensions differ");
        }
    }

    double total = 0.0;
    for (const auto& v : reference) {
        if (v.size() != m) {
            throw std::invalid_argument("igd: objective dimensions differ");
        }
        double best = std::numeric_limits<double>::infinity();
        for (const auto& a : approx) {
            double sq = 0.0;
            for (std::size_t i = 0; i < m; ++i) {
                const double d = v[i] - a[i];
                sq += d * d;
            }
            best = std::min(best, sq);
        }
        total += std::sqrt(best);
    }
    return total / static_cast<double>(reference.size());
}

} // namespace dermeda
