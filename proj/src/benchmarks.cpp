#include "dermeda/benchmarks.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace dermeda {

namespace {

constexpr double kPi = std::numbers::pi;

// Exponent of the F1/F7/F8 Pareto-set curve x_j = x1^e(j), j is 1-based.
double ps_exponent(std::size_t j, std::size_t n)
{
    return 0.5 * (1.0 + 3.0 * (static_cast<double>(j) - 2.0) / (static_cast<double>(n) - 2.0));
}

class LzProblem final : public MopProblem {
public:
    LzProblem(ProblemId id, std::size_t n)
        : id_(id), n_(n), m_(problem_info(id).num_objectives), bounds_(make_bounds(id, n))
    {
    }

    std::size_t num_variables() const noexcept override { return n_; }
    std::size_t num_objectives() const noexcept override { return m_; }
    const BoxBounds& bounds() const noexcept override { return bounds_; }
    std::string name() const override { return to_string(id_); }

    ObjectiveVector evaluate(std::span<const double> x) const override
    {
        if (x.size() != n_) {
            throw std::invalid_argument(name() + ": expected " + std::to_string(n_) + " variables");
        }
        if (id_ == ProblemId::F6) {
            return evaluate_f6(x);
        }
        if (id_ == ProblemId::F8) {
            return evaluate_f8(x);
        }
        return evaluate_biobjective(x);
    }

private:
    static BoxBounds make_bounds(ProblemId id, std::size_t n)
    {
        switch (id) {
        case ProblemId::F1:
        case ProblemId::F7:
        case ProblemId::F8:
            return BoxBounds::uniform(n, 0.0, 1.0);
        case ProblemId::F6: {
            std::vector<double> lo(n, -2.0), hi(n, 2.0);
            lo[0] = lo[1] = 0.0;
            hi[0] = hi[1] = 1.0;
            return {std::move(lo), std::move(hi)};
        }
        default: {
            std::vector<double> lo(n, -1.0), hi(n, 1.0);
            lo[0] = 0.0;
            return {std::move(lo), std::move(hi)};
        }
        }
    }

    // Penalty term for coordinate j (1-based) of a bi-objective problem.
    double term(std::size_t j, double x1, double xj, bool odd) const
    {
        const double n = static_cast<double>(n_);
        const double phase = 6.0 * kPi * x1 + static_cast<double>(j) * kPi / n;
        double target = 0.0;
        switch (id_) {
        case ProblemId::F1:
            target = std::pow(x1, ps_exponent(j, n_));
            break;
        case ProblemId::F2:
        case ProblemId::F9:
            target = std::sin(phase);
            break;
        case ProblemId::F3:
            target = odd ? 0.8 * x1 * std::cos(phase) : 0.8 * x1 * std::sin(phase);
            break;
        case ProblemId::F4:
            target = odd ? 0.8 * x1 * std::cos(phase / 3.0) : 0.8 * x1 * std::sin(phase);
            break;
        case ProblemId::F5: {
            const double amp = 0.3 * x1 * x1 * std::cos(24.0 * kPi * x1 + 4.0 * static_cast<double>(j) * kPi / n)
                               + 0.6 * x1;
            target = odd ? amp * std::cos(phase) : amp * std::sin(phase);
            break;
        }
        case ProblemId::F7: {
            const double y = xj - std::pow(x1, ps_exponent(j, n_));
            return 4.0 * y * y - std::cos(8.0 * y * kPi) + 1.0;
        }
        default:
            throw std::logic_error("term: unsupported problem");
        }
        const double d = xj - target;
        return d * d;
    }

    ObjectiveVector evaluate_biobjective(std::span<const double> x) const
    {
        const double x1 = x[0];
        double sum1 = 0.0, sum2 = 0.0;
        std::size_t count1 = 0, count2 = 0;
        for (std::size_t j = 2; j <= n_; ++j) {
            const bool odd = (j % 2) == 1;
            const double t = term(j, x1, x[j - 1], odd);
            if (odd) {
                sum1 += t;
                ++count1;
            } else {
                sum2 += t;
                ++count2;
            }
        }
        const double f2_shape = id_ == ProblemId::F9 ? 1.0 - x1 * x1 : 1.0 - std::sqrt(x1);
        return {x1 + 2.0 * sum1 / static_cast<double>(count1),
                f2_shape + 2.0 * sum2 / static_cast<double>(count2)};
    }

    ObjectiveVector evaluate_f8(std::span<const double> x) const
    {
        const double x1 = x[0];
        double sq1 = 0.0, sq2 = 0.0, prod1 = 1.0, prod2 = 1.0;
        std::size_t count1 = 0, count2 = 0;
        for (std::size_t j = 2; j <= n_; ++j) {
            const double y = x[j - 1] - std::pow(x1, ps_exponent(j, n_));
            const double c = std::cos(20.0 * y * kPi / std::sqrt(static_cast<double>(j)));
            if (j % 2 == 1) {
                sq1 += y * y;
                prod1 *= c;
                ++count1;
            } else {
                sq2 += y * y;
                prod2 *= c;
                ++count2;
            }
        }
        return {x1 + 2.0 / static_cast<double>(count1) * (4.0 * sq1 - 2.0 * prod1 + 2.0),
                1.0 - std::sqrt(x1) + 2.0 / static_cast<double>(count2) * (4.0 * sq2 - 2.0 * prod2 + 2.0)};
    }

    ObjectiveVector evaluate_f6(std::span<const double> x) const
    {
        const double x1 = x[0], x2 = x[1];
        const double n = static_cast<double>(n_);
        std::array<double, 3> sums{0.0, 0.0, 0.0};
        std::array<std::size_t, 3> counts{0, 0, 0};
        for (std::size_t j = 3; j <= n_; ++j) {
            // j-1 divisible by 3 -> f1, j-2 -> f2, j -> f3
            const std::size_t group = (j - 1) % 3 == 0 ? 0 : ((j - 2) % 3 == 0 ? 1 : 2);
            const double d = x[j - 1] - 2.0 * x2 * std::sin(2.0 * kPi * x1 + static_cast<double>(j) * kPi / n);
            sums[group] += d * d;
            ++counts[group];
        }
        const double a = 0.5 * kPi * x1, b = 0.5 * kPi * x2;
        return {std::cos(a) * std::cos(b) + 2.0 * sums[0] / static_cast<double>(counts[0]),
                std::cos(a) * std::sin(b) + 2.0 * sums[1] / static_cast<double>(counts[1]),
                std::sin(a) + 2.0 * sums[2] / static_cast<double>(counts[2])};
    }

    ProblemId id_;
    std::size_t n_;
    std::size_t m_;
    BoxBounds bounds_;
};

} // namespace

ProblemInfo problem_info(ProblemId id)
{
    switch (id) {
    case ProblemId::F6:
        return {10, 3, false, false};
    case ProblemId::F7:
    case ProblemId::F8:
        return {10, 2, true, true};
    case ProblemId::F9:
        return {30, 2, false, false};
    default:
        return {30, 2, false, true};
    }
}

std::string to_string(ProblemId id)
{
    return "F" + std::to_string(static_cast<int>(id) + 1);
}

std::optional<ProblemId> parse_problem_id(std::string_view text)
{
    if (text.size() != 2 || std::toupper(static_cast<unsigned char>(text[0])) != 'F') {
        return std::nullopt;
    }
    const int k = text[1] - '0';
    if (k < 1 || k > 9) {
        return std::nullopt;
    }
    return static_cast<ProblemId>(k - 1);
}

std::unique_ptr<MopProblem> make_problem(ProblemId id)
{
    return make_problem(id, problem_info(id).num_variables);
}

std::unique_ptr<MopProblem> make_problem(ProblemId id, std::size_t num_variables)
{
    // Each objective needs at least one coordinate in its index set.
    const std::size_t min_n = id == ProblemId::F6 ? 5 : 3;
    if (num_variables < min_n) {
        throw std::invalid_argument(to_string(id) + " needs at least " + std::to_string(min_n) + " variables");
    }
    return std::make_unique<LzProblem>(id, num_variables);
}

std::size_t default_pf_size(ProblemId id)
{
    return problem_info(id).num_objectives == 3 ? 1000 : 500;
}

PfReference sample_true_pf(ProblemId id, std::size_t count)
{
    if (count < 2) {
        throw std::invalid_argument("sample_true_pf: count must be >= 2");
    }
    PfReference ref;
    ref.points.reserve(count);

    if (id != ProblemId::F6) {
        for (std::size_t i = 0; i < count; ++i) {
            const double f1 = static_cast<double>(i) / static_cast<double>(count - 1);
            const double f2 = id == ProblemId::F9 ? 1.0 - f1 * f1 : 1.0 - std::sqrt(f1);
            ref.points.push_back({f1, f2});
        }
        return ref;
    }

    // Smallest simplex lattice with at least `count` points, thinned by an even stride.
    std::size_t h = 1;
    while ((h + 1) * (h + 2) / 2 < count) {
        ++h;
    }
    std::vector<ObjectiveVector> lattice;
    lattice.reserve((h + 1) * (h + 2) / 2);
    for (std::size_t i = 0; i <= h; ++i) {
        for (std::size_t j = 0; j <= h - i; ++j) {
            const double w1 = static_cast<double>(i), w2 = static_cast<double>(j), w3 = static_cast<double>(h - i - j);
            const double norm = std::sqrt(w1 * w1 + w2 * w2 + w3 * w3);
            lattice.push_back({w1 / norm, w2 / norm, w3 / norm});
        }
    }
    for (std::size_t k = 0; k < count; ++k) {
        ref.points.push_back(lattice[k * lattice.size() / count]);
    }
    return ref;
}

std::vector<DecisionVector> latin_hypercube_init(const BoxBounds& bounds, std::size_t count, Rng& rng)
{
    if (count == 0) {
        throw std::invalid_argument("latin_hypercube_init: count must be >= 1");
    }
    const std::size_t n = bounds.dimension();
    std::vector<DecisionVector> points(count, DecisionVector(n));
    std::vector<std::size_t> strata(count);
    const double inv = 1.0 / static_cast<double>(count);
    for (std::size_t d = 0; d < n; ++d) {
        std::iota(strata.begin(), strata.end(), std::size_t{0});
        std::shuffle(strata.begin(), strata.end(), rng);
        const double lo = bounds.lower(d), width = bounds.width(d);
        for (std::size_t i = 0; i < count; ++i) {
            const double k = static_cast<double>(strata[i]);
            const double top = lo + width * ((k + 1.0) * inv);
            double value = lo + width * ((k + uniform01(rng)) * inv);
            // rounding must not push a sample into the next stratum
            if (strata[i] + 1 < count && value >= top) {
                value = std::nextafter(top, lo);
            }
            points[i][d] = std::min(value, bounds.upper(d));
        }
    }
    return points;
}

} // namespace dermeda
