#include "dermeda/selection.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace dermeda {

FrontRanking fast_nondominated_sort(std::span<const ObjectiveVector> objectives)
{
    const std::size_t n = objectives.size();
    if (n == 0) {
        throw std::invalid_argument("fast_nondominated_sort: empty input");
    }
    std::vector<std::vector<std::size_t>> dominated(n);  // S_p
    std::vector<std::size_t> count(n, 0);                // n_p

    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
            if (dominates(objectives[p], objectives[q])) {
                dominated[p].push_back(q);
                ++count[q];
            } else if (dominates(objectives[q], objectives[p])) {
                dominated[q].push_back(p);
                ++count[p];
            }
        }
    }

    FrontRanking out;
    out.rank.assign(n, 0);
    std::vector<std::size_t> current;
    for (std::size_t p = 0; p < n; ++p) {
        if (count[p] == 0) {
            current.push_back(p);
        }
    }
    while (!current.empty()) {
        std::vector<std::size_t> next;
        for (auto p : current) {
            out.rank[p] = out.fronts.size();
            for (auto q : dominated[p]) {
                if (--count[q] == 0) {
                    next.push_back(q);
                }
            }
        }
        out.fronts.push_back(std::move(current));
        std::sort(next.begin(), next.end());
        current = std::move(next);
    }
    return out;
}

std::vector<double> crowding_distance(std::span<const ObjectiveVector> front)
{
    const std::size_t n = front.size();
    if (n == 0) {
        throw std::invalid_argument("crowding_distance: empty front");
    }
    constexpr double inf = std::numeric_limits<double>::infinity();
    std::vector<double> distance(n, 0.0);
    if (n <= 2) {
        distance.assign(n, inf);
        return distance;
    }

    const std::size_t m = front.front().size();
    std::vector<std::size_t> order(n);
    for (std::size_t obj = 0; obj < m; ++obj) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return front[a][obj] < front[b][obj]; });
        distance[order.front()] = inf;
        distance[order.back()] = inf;
        const double range = front[order.back()][obj] - front[order.front()][obj];
        if (range <= 0.0) {
            continue;
        }
        for (std::size_t i = 1; i + 1 < n; ++i) {
            distance[order[i]] += (front[order[i + 1]][obj] - front[order[i - 1]][obj]) / range;
        }
    }
    return distance;
}

std::vector<std::size_t> nondominated_indices(std::span<const ObjectiveVector> objectives)
{
    std::vector<std::size_t> out;
    for (std::size_t p = 0; p < objectives.size(); ++p) {
        const bool beaten = std::any_of(objectives.begin(), objectives.end(),
                                        [&](const ObjectiveVector& q) { return dominates(q, objectives[p]); });
        if (!beaten) {
            out.push_back(p);
        }
    }
    return out;
}

Population elite_select(std::vector<Individual> combined, std::size_t target)
{
    if (combined.size() < target) {
        throw std::invalid_argument("elite_select: fewer candidates than the target size");
    }
    std::vector<ObjectiveVector> objectives;
    objectives.reserve(combined.size());
    for (const auto& ind : combined) {
        objectives.push_back(ind.f);
    }
    const auto ranking = fast_nondominated_sort(objectives);

    Population out;
    out.capacity = target;
    out.members.reserve(target);
    for (const auto& front : ranking.fronts) {
        if (out.size() == target) {
            break;
        }
        if (out.size() + front.size() <= target) {
            for (auto i : front) {
                out.members.push_back(std::move(combined[i]));
            }
            continue;
        }
        std::vector<ObjectiveVector> front_obj;
        front_obj.reserve(front.size());
        for (auto i : front) {
            front_obj.push_back(objectives[i]);
        }
        const auto crowd = crowding_distance(front_obj);
        std::vector<std::size_t> order(front.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return crowd[a] > crowd[b]; });
        for (std::size_t k = 0; out.size() < target; ++k) {
            out.members.push_back(std::move(combined[front[order[k]]]));
        }
    }
    return out;
}

} // namespace dermeda
