#include "dermeda/de_variation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace dermeda {

void DeParams::validate() const
{
    if (!(crossover >= 0.0 && crossover <= 1.0)) {
        throw std::invalid_argument("DeParams: CR must lie in [0,1]");
    }
    if (mutation_rate && !(*mutation_rate >= 0.0 && *mutation_rate <= 1.0)) {
        throw std::invalid_argument("DeParams: p_m must lie in [0,1]");
    }
    if (!(distribution_index > 0.0)) {
        throw std::invalid_argument("DeParams: eta must be positive");
    }
    if (!std::isfinite(scale)) {
        throw std::invalid_argument("DeParams: F must be finite");
    }
}

DecisionVector de_trial(std::span<const double> r1, std::span<const double> r2, std::span<const double> r3,
                        std::span<const double> best, const DeParams& params, Rng& rng)
{
    const std::size_t n = r1.size();
    if (r2.size() != n || r3.size() != n || best.size() != n) {
        throw std::invalid_argument("de_trial: parent dimensions differ");
    }
    const std::size_t forced = uniform_index(rng, n);
    DecisionVector v(r1.begin(), r1.end());
    for (std::size_t k = 0; k < n; ++k) {
        const double r = uniform01(rng);
        if (r < params.crossover || k == forced) {
            v[k] = r1[k] + params.scale * (best[k] - r1[k]) + params.scale * (r2[k] - r3[k]);
        }
    }
    return v;
}

double mutation_delta(double r, double distribution_index)
{
    const double expo = 1.0 / (distribution_index + 1.0);
    if (r < 0.5) {
        return std::pow(2.0 * r, expo) - 1.0;
    }
    return 1.0 - std::pow(2.0 - 2.0 * r, expo);
}

DecisionVector polynomial_mutation(DecisionVector v, const DeParams& params, const BoxBounds& bounds, Rng& rng)
{
    const double pm = params.mutation_rate_for(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (uniform01(rng) < pm) {
            v[k] += mutation_delta(uniform01(rng), params.distribution_index) * bounds.width(k);
        }
    }
    return repair(std::move(v), bounds);
}

namespace {

// Incremental Fisher-Yates draw from `pool`, skipping decision vectors that
// coincide with anything already taken.
class DistinctDrawer {
public:
    DistinctDrawer(std::span<const std::size_t> pool, const Population& population)
        : pool_(pool.begin(), pool.end()), population_(population)
    {
    }

    bool draw(std::vector<std::size_t>& taken, Rng& rng)
    {
        while (next_ < pool_.size()) {
            std::swap(pool_[next_], pool_[next_ + uniform_index(rng, pool_.size() - next_)]);
            const std::size_t candidate = pool_[next_++];
            const bool clash = std::any_of(taken.begin(), taken.end(), [&](std::size_t t) {
                return population_[t].x == population_[candidate].x;
            });
            if (!clash) {
                taken.push_back(candidate);
                return true;
            }
        }
        return false;
    }

private:
    std::vector<std::size_t> pool_;
    const Population& population_;
    std::size_t next_ = 0;
};

} // namespace

std::optional<DeParents> pick_de_parents(std::span<const std::size_t> cluster, std::span<const std::size_t> nondominated,
                                         const Population& population, Rng& rng)
{
    if (nondominated.empty()) {
        return std::nullopt;
    }
    // taken[0] is best, then r1, r2, r3
    std::vector<std::size_t> taken{nondominated[uniform_index(rng, nondominated.size())]};

    DistinctDrawer local(cluster, population);
    while (taken.size() < 4 && local.draw(taken, rng)) {
    }
    if (taken.size() < 4) {
        taken.resize(std::min<std::size_t>(taken.size(), 2));
        std::vector<std::size_t> everyone(population.size());
        std::iota(everyone.begin(), everyone.end(), std::size_t{0});
        DistinctDrawer global(everyone, population);
        while (taken.size() < 4 && global.draw(taken, rng)) {
        }
        if (taken.size() < 4) {
            return std::nullopt;
        }
    }
    return DeParents{taken[1], taken[2], taken[3], taken[0]};
}

} // namespace dermeda
