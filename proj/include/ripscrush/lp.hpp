#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "ripscrush/rational.hpp"

namespace ripscrush {

class MalformedLP : public std::invalid_argument
{
public:
    explicit MalformedLP(const std::string& what) : std::invalid_argument(what) {}
};

enum class Relation
{
    LessEqual,
    GreaterEqual,
    Equal,
};

struct LinearConstraint
{
    std::vector<Rational> coeffs;
    Relation relation = Relation::LessEqual;
    Rational rhs;
};

struct VariableBounds
{
    std::optional<Rational> lower;
    std::optional<Rational> upper;
};

/** minimize objective . x subject to the constraints and bounds. Variables are free unless bounded. */
struct RationalLP
{
    std::vector<Rational> objective;
    std::vector<LinearConstraint> constraints;
    std::vector<VariableBounds> bounds;

    std::size_t variables() const noexcept { return objective.size(); }

    /** Appends a variable with objective coefficient `cost`; existing constraints get a zero column. */
    std::size_t add_variable(Rational cost = 0, VariableBounds b = {});
    void add_constraint(std::vector<Rational> coeffs, Relation rel, Rational rhs);
};

enum class LPStatus
{
    Optimal,
    Infeasible,
    Unbounded,
};

struct LPResult
{
    LPStatus status = LPStatus::Infeasible;
    Rational objective;
    std::vector<Rational> x;  // an optimal basic solution when status is Optimal
    std::size_t pivots = 0;
};

/**
 * Two-phase dense tableau simplex over exact rationals with Bland's rule, so
 * it always terminates. Throws MalformedLP for ragged coefficient rows or
 * crossed bounds.
 */
LPResult solve_lp(const RationalLP& lp);

}  // namespace ripscrush
