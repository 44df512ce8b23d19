#include "dermeda/core.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace dermeda {

BoxBounds::BoxBounds(std::vector<double> lower, std::vector<double> upper)
    : lower_(std::move(lower)), upper_(std::move(upper))
{
    if (lower_.empty() || lower_.size() != upper_.size()) {
        throw std::invalid_argument("BoxBounds: lower/upper must be non-empty and of equal length");
    }
    for (std::size_t i = 0; i < lower_.size(); ++i) {
        if (!(lower_[i] < upper_[i])) {
            throw std::invalid_argument("BoxBounds: lower[" + std::to_string(i) + "] must be < upper");
        }
    }
}

BoxBounds BoxBounds::uniform(std::size_t n, double lo, double hi)
{
    return {std::vector<double>(n, lo), std::vector<double>(n, hi)};
}

bool BoxBounds::contains(std::span<const double> x) const
{
    if (x.size() != lower_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] < lower_[i] || x[i] > upper_[i]) {
            return false;
        }
    }
    return true;
}

std::vector<ObjectiveVector> Population::objectives() const
{
    std::vector<ObjectiveVector> out;
    out.reserve(members.size());
    for (const auto& ind : members) {
        out.push_back(ind.f);
    }
    return out;
}

EvaluationError::EvaluationError(const std::string& what, DecisionVector x)
    : std::runtime_error(what), x_(std::move(x))
{
}

ObjectiveVector Evaluator::evaluate(std::span<const double> x)
{
    ++count_;
    ObjectiveVector f = problem_->evaluate(x);
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (!std::isfinite(f[i])) {
            std::ostringstream os;
            os << problem_->name() << ": objective " << i << " is not finite (" << f[i] << ")";
            throw EvaluationError(os.str(), DecisionVector(x.begin(), x.end()));
        }
    }
    return f;
}

Individual Evaluator::make_individual(DecisionVector x)
{
    auto f = evaluate(x);
    return {std::move(x), std::move(f)};
}

bool dominates(std::span<const double> u, std::span<const double> v)
{
    if (u.size() != v.size()) {
        throw std::invalid_argument("dominates: objective vectors differ in length");
    }
    bool strictly_better = false;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] > v[i]) {
            return false;
        }
        if (u[i] < v[i]) {
            strictly_better = true;
        }
    }
    return strictly_better;
}

DecisionVector repair(DecisionVector x, const BoxBounds& bounds)
{
    for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] = std::clamp(x[i], bounds.lower(i), bounds.upper(i));
    }
    return x;
}

} // namespace dermeda
