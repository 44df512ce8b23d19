#pragma once

/// @file core.hpp
/// @brief Decision/objective space types, Pareto dominance, bounded evaluation
/// and bound repair shared by every optimizer in the library.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dermeda {

using DecisionVector = std::vector<double>;
using ObjectiveVector = std::vector<double>;

/// Axis-aligned box \f$\prod_i [lower_i, upper_i]\f$.
class BoxBounds {
public:
    BoxBounds(std::vector<double> lower, std::vector<double> upper);

    /// Same interval [lo, hi] on each of n coordinates.
    static BoxBounds uniform(std::size_t n, double lo, double hi);

    [[nodiscard]] std::size_t dimension() const noexcept { return lower_.size(); }
    [[nodiscard]] const std::vector<double>& lower() const noexcept { return lower_; }
    [[nodiscard]] const std::vector<double>& upper() const noexcept { return upper_; }
    [[nodiscard]] double lower(std::size_t i) const { return lower_[i]; }
    [[nodiscard]] double upper(std::size_t i) const { return upper_[i]; }
    [[nodiscard]] double width(std::size_t i) const { return upper_[i] - lower_[i]; }
    [[nodiscard]] bool contains(std::span<const double> x) const;

private:
    std::vector<double> lower_;
    std::vector<double> upper_;
};

/// Decision vector with its cached objective vector.
struct Individual {
    DecisionVector x;
    ObjectiveVector f;

    friend bool operator==(const Individual&, const Individual&) = default;
};

/// The evolving set P. `capacity` is the target size N restored by selection.
struct Population {
    std::vector<Individual> members;
    std::size_t capacity = 0;

    [[nodiscard]] std::size_t size() const noexcept { return members.size(); }
    [[nodiscard]] bool empty() const noexcept { return members.empty(); }
    const Individual& operator[](std::size_t i) const { return members[i]; }
    Individual& operator[](std::size_t i) { return members[i]; }

    [[nodiscard]] std::vector<ObjectiveVector> objectives() const;

    friend bool operator==(const Population&, const Population&) = default;
};

/// Box-constrained m-objective minimization problem. Implementations must be
/// pure: the same x always yields a bitwise-identical objective vector.
class MopProblem {
public:
    virtual ~MopProblem() = default;

    [[nodiscard]] virtual std::size_t num_variables() const noexcept = 0;
    [[nodiscard]] virtual std::size_t num_objectives() const noexcept = 0;
    [[nodiscard]] virtual const BoxBounds& bounds() const noexcept = 0;
    [[nodiscard]] virtual std::string name() const = 0;
    [[nodiscard]] virtual ObjectiveVector evaluate(std::span<const double> x) const = 0;
};

/// Thrown when an objective comes back non-finite.
class EvaluationError : public std::runtime_error {
public:
    EvaluationError(const std::string& what, DecisionVector x);

    [[nodiscard]] const DecisionVector& point() const noexcept { return x_; }

private:
    DecisionVector x_;
};

/// Counts objective evaluations for one run and rejects non-finite results.
class Evaluator {
public:
    explicit Evaluator(const MopProblem& problem) : problem_(&problem) {}

    [[nodiscard]] ObjectiveVector evaluate(std::span<const double> x);
    [[nodiscard]] Individual make_individual(DecisionVector x);

    [[nodiscard]] std::size_t count() const noexcept { return count_; }
    [[nodiscard]] const MopProblem& problem() const noexcept { return *problem_; }

private:
    const MopProblem* problem_;
    std::size_t count_ = 0;
};

/// Pareto dominance for minimization: u <= v componentwise and u != v.
/// Throws std::invalid_argument on a length mismatch.
[[nodiscard]] bool dominates(std::span<const double> u, std::span<const double> v);

/// Clamps every coordinate into its box interval.
[[nodiscard]] DecisionVector repair(DecisionVector x, const BoxBounds& bounds);

} // namespace dermeda
