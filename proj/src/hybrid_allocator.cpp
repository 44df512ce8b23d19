#include "dermeda/hybrid_allocator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace dermeda {

void MixParams::validate() const
{
    if (!(alpha >= 0.0 && alpha <= 1.0 && beta >= 0.0 && beta <= 1.0)) {
        throw std::invalid_argument("MixParams: alpha and beta must lie in [0,1]");
    }
    if (alpha + beta > 1.0 + 1e-12) {
        throw std::invalid_argument("MixParams: alpha + beta must not exceed 1");
    }
}

double convergence_ratio(std::span<const double> eigenvalues, std::size_t num_objectives)
{
    const std::size_t lead = std::min(num_objectives - 1, eigenvalues.size());
    const double head = std::accumulate(eigenvalues.begin(), eigenvalues.begin() + static_cast<std::ptrdiff_t>(lead), 0.0);
    const double all = std::accumulate(eigenvalues.begin(), eigenvalues.end(), 0.0);
    if (all <= 0.0) {
        return 1.0;
    }
    return std::clamp(head / all, 0.0, 1.0);
}

std::vector<std::size_t> largest_remainder(std::size_t total, std::span<const double> weights)
{
    if (weights.empty()) {
        throw std::invalid_argument("largest_remainder: no weights");
    }
    const double sum = std::accumulate(weights.begin(), weights.end(), 0.0);
    if (!(sum > 0.0)) {
        throw std::invalid_argument("largest_remainder: weights must have a positive sum");
    }
    std::vector<std::size_t> counts(weights.size());
    std::vector<double> remainder(weights.size());
    std::size_t assigned = 0;
    for (std::size_t j = 0; j < weights.size(); ++j) {
        if (weights[j] < 0.0) {
            throw std::invalid_argument("largest_remainder: negative weight");
        }
        const double exact = static_cast<double>(total) * weights[j] / sum;
        const double whole = std::floor(exact);
        counts[j] = static_cast<std::size_t>(whole);
        remainder[j] = exact - whole;
        assigned += counts[j];
    }
    // floor() of a rounded product can overshoot in the last ulp
    while (assigned > total) {
        const auto j = static_cast<std::size_t>(std::max_element(counts.begin(), counts.end()) - counts.begin());
        --counts[j];
        --assigned;
    }
    std::vector<std::size_t> order(weights.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return remainder[a] > remainder[b]; });
    for (std::size_t i = 0; assigned < total; i = (i + 1) % order.size()) {
        ++counts[order[i]];
        ++assigned;
    }
    return counts;
}

std::vector<ClusterQuota> allocate(std::size_t total, std::span<const double> volumes, std::span<const double> ratios,
                                   const MixParams& mix)
{
    if (volumes.size() != ratios.size()) {
        throw std::invalid_argument("allocate: volumes and ratios differ in length");
    }
    const auto totals = largest_remainder(total, volumes);
    const double volume_sum = std::accumulate(volumes.begin(), volumes.end(), 0.0);

    std::vector<ClusterQuota> quotas(volumes.size());
    for (std::size_t j = 0; j < volumes.size(); ++j) {
        const double share = std::clamp(mix.alpha + mix.beta * ratios[j], 0.0, 1.0);
        // the small slack keeps e.g. 300 * 0.6 from flooring to 179
        auto k1 = static_cast<std::size_t>(std::floor(static_cast<double>(totals[j]) * share + 1e-9));
        k1 = std::min(k1, totals[j]);
        quotas[j] = {k1, totals[j] - k1, ratios[j], volumes[j] / volume_sum};
    }
    return quotas;
}

} // namespace dermeda
