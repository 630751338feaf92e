#include "ripscrush/lp.hpp"

#include <utility>

namespace ripscrush {

std::size_t RationalLP::add_variable(Rational cost, VariableBounds b)
{
    objective.push_back(std::move(cost));
    bounds.resize(objective.size() - 1);
    bounds.push_back(std::move(b));
    for (auto& c : constraints)
        c.coeffs.resize(objective.size());
    return objective.size() - 1;
}

void RationalLP::add_constraint(std::vector<Rational> coeffs, Relation rel, Rational rhs)
{
    coeffs.resize(std::max(coeffs.size(), objective.size()));
    constraints.push_back({std::move(coeffs), rel, std::move(rhs)});
}

namespace {

// x_j = offset + sum sign * y_k over nonnegative y
struct Substitution
{
    Rational offset;
    std::vector<std::pair<std::size_t, int>> terms;
};

class Tableau
{
public:
    Tableau(std::vector<std::vector<Rational>> rows, std::vector<std::size_t> basis, std::size_t cols)
        : rows_(std::move(rows)), basis_(std::move(basis)), cols_(cols), excluded_(cols, false)
    {
    }

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    const Rational& rhs(std::size_t i) const { return rows_[i][cols_]; }
    const Rational& at(std::size_t i, std::size_t j) const { return rows_[i][j]; }
    std::size_t basic(std::size_t i) const { return basis_[i]; }
    void exclude(std::size_t j) { excluded_[j] = true; }
    bool excluded(std::size_t j) const { return excluded_[j]; }
    std::size_t pivots() const { return pivots_; }

    void drop_row(std::size_t i)
    {
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
    }

    /** Installs a cost vector and prices out the basis. */
    void set_costs(const std::vector<Rational>& c)
    {
        reduced_.assign(cols_ + 1, Rational(0));
        for (std::size_t j = 0; j < cols_; ++j)
            reduced_[j] = c[j];
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const Rational& cb = c[basis_[i]];
            if (cb == 0)
                continue;
            for (std::size_t j = 0; j <= cols_; ++j)
                if (rows_[i][j] != 0)
                    reduced_[j] -= cb * rows_[i][j];
        }
    }

    /** Current objective value. */
    Rational value() const { return -reduced_[cols_]; }

    /** Bland's rule; returns false when unbounded. */
    bool optimize()
    {
        while (true) {
            std::size_t enter = cols_;
            for (std::size_t j = 0; j < cols_; ++j)
                if (!excluded_[j] && reduced_[j] < 0) {
                    enter = j;
                    break;
                }
            if (enter == cols_)
                return true;
            std::size_t leave = rows_.size();
            Rational best;
            for (std::size_t i = 0; i < rows_.size(); ++i) {
                if (rows_[i][enter] <= 0)
                    continue;
                Rational ratio = rows_[i][cols_] / rows_[i][enter];
                if (leave == rows_.size() || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = std::move(ratio);
                }
            }
            if (leave == rows_.size())
                return false;
            pivot(leave, enter);
        }
    }

    void pivot(std::size_t r, std::size_t c)
    {
        ++pivots_;
        const Rational p = rows_[r][c];
        for (auto& v : rows_[r])
            if (v != 0)
                v /= p;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i == r || rows_[i][c] == 0)
                continue;
            const Rational f = rows_[i][c];
            for (std::size_t j = 0; j <= cols_; ++j)
                if (rows_[r][j] != 0)
                    rows_[i][j] -= f * rows_[r][j];
        }
        if (!reduced_.empty() && reduced_[c] != 0) {
            const Rational f = reduced_[c];
            for (std::size_t j = 0; j <= cols_; ++j)
                if (rows_[r][j] != 0)
                    reduced_[j] -= f * rows_[r][j];
        }
        basis_[r] = c;
    }

private:
    std::vector<std::vector<Rational>> rows_;
    std::vector<std::size_t> basis_;
    std::size_t cols_;
    std::vector<bool> excluded_;
    std::vector<Rational> reduced_;
    std::size_t pivots_ = 0;
};

}  // namespace

LPResult solve_lp(const RationalLP& lp)
{
    const std::size_t nvars = lp.variables();
    if (!lp.bounds.empty() && lp.bounds.size() != nvars)
        throw MalformedLP("bounds must be given for every variable or none");
    for (const auto& c : lp.constraints)
        if (c.coeffs.size() != nvars)
            throw MalformedLP("constraint has " + std::to_string(c.coeffs.size()) + " coefficients, expected " +
                              std::to_string(nvars));

    // Substitute every variable by nonnegative ones.
    std::vector<Substitution> subst(nvars);
    std::size_t ny = 0;
    std::vector<std::pair<std::size_t, Rational>> upper_rows;  // y_k <= value
    for (std::size_t j = 0; j < nvars; ++j) {
        const VariableBounds b = lp.bounds.empty() ? VariableBounds{} : lp.bounds[j];
        if (b.lower && b.upper && *b.lower > *b.upper)
            throw MalformedLP("variable " + std::to_string(j) + " has crossed bounds");
        auto& s = subst[j];
        if (b.lower) {
            s.offset = *b.lower;
            s.terms.push_back({ny, 1});
            if (b.upper)
                upper_rows.push_back({ny, *b.upper - *b.lower});
            ++ny;
        } else if (b.upper) {
            s.offset = *b.upper;
            s.terms.push_back({ny++, -1});
        } else {
            s.terms.push_back({ny++, 1});
            s.terms.push_back({ny++, -1});
        }
    }

    struct Row
    {
        std::vector<Rational> a;
        Relation rel;
        Rational b;
    };
    std::vector<Row> rows;
    for (const auto& c : lp.constraints) {
        Row row{std::vector<Rational>(ny, Rational(0)), c.relation, c.rhs};
        for (std::size_t j = 0; j < nvars; ++j) {
            if (c.coeffs[j] == 0)
                continue;
            row.b -= c.coeffs[j] * subst[j].offset;
            for (auto [k, sign] : subst[j].terms)
                row.a[k] += sign > 0 ? c.coeffs[j] : Rational(-c.coeffs[j]);
        }
        rows.push_back(std::move(row));
    }
    for (auto& [k, value] : upper_rows) {
        Row row{std::vector<Rational>(ny, Rational(0)), Relation::LessEqual, value};
        row.a[k] = 1;
        rows.push_back(std::move(row));
    }

    // Equality form with slacks; flip rows so rhs >= 0.
    std::size_t slacks = 0;
    for (const auto& r : rows)
        if (r.rel != Relation::Equal)
            ++slacks;
    const std::size_t m = rows.size();
    const std::size_t art0 = ny + slacks;
    std::vector<std::vector<Rational>> t(m);
    std::vector<std::size_t> basis(m);
    std::vector<bool> needs_artificial(m, true);
    std::size_t slack = ny;
    for (std::size_t i = 0; i < m; ++i) {
        auto& r = rows[i];
        t[i].assign(art0, Rational(0));
        for (std::size_t k = 0; k < ny; ++k)
            t[i][k] = r.a[k];
        std::size_t my_slack = art0;
        if (r.rel != Relation::Equal) {
            my_slack = slack++;
            t[i][my_slack] = r.rel == Relation::LessEqual ? 1 : -1;
        }
        Rational rhs = r.b;
        if (rhs < 0) {
            for (auto& v : t[i])
                v = -v;
            rhs = -rhs;
        }
        if (my_slack != art0 && t[i][my_slack] == 1) {
            basis[i] = my_slack;
            needs_artificial[i] = false;
        }
        t[i].push_back(std::move(rhs));  // placeholder, artificial columns inserted below
    }
    std::size_t artificials = 0;
    for (std::size_t i = 0; i < m; ++i)
        if (needs_artificial[i])
            ++artificials;
    const std::size_t cols = art0 + artificials;
    std::size_t art = art0;
    for (std::size_t i = 0; i < m; ++i) {
        Rational rhs = std::move(t[i].back());
        t[i].pop_back();
        t[i].resize(cols + 1, Rational(0));
        t[i][cols] = std::move(rhs);
        if (needs_artificial[i]) {
            t[i][art] = 1;
            basis[i] = art++;
        }
    }

    Tableau tab(std::move(t), std::move(basis), cols);
    LPResult result;

    // Phase 1
    std::vector<Rational> cost(cols, Rational(0));
    for (std::size_t j = art0; j < cols; ++j)
        cost[j] = 1;
    tab.set_costs(cost);
    tab.optimize();
    if (tab.value() != 0) {
        result.status = LPStatus::Infeasible;
        result.pivots = tab.pivots();
        return result;
    }
    for (std::size_t i = 0; i < tab.rows();) {
        if (tab.basic(i) < art0) {
            ++i;
            continue;
        }
        std::size_t col = art0;
        for (std::size_t j = 0; j < art0; ++j)
            if (tab.at(i, j) != 0) {
                col = j;
                break;
            }
        if (col == art0) {
            tab.drop_row(i);  // redundant constraint
            continue;
        }
        tab.pivot(i, col);
        ++i;
    }
    for (std::size_t j = art0; j < cols; ++j)
        tab.exclude(j);

    // Phase 2
    std::fill(cost.begin(), cost.end(), Rational(0));
    for (std::size_t j = 0; j < nvars; ++j)
        for (auto [k, sign] : subst[j].terms)
            cost[k] += sign > 0 ? lp.objective[j] : Rational(-lp.objective[j]);
    tab.set_costs(cost);
    const bool bounded = tab.optimize();
    result.pivots = tab.pivots();
    if (!bounded) {
        result.status = LPStatus::Unbounded;
        return result;
    }

    std::vector<Rational> y(cols, Rational(0));
    for (std::size_t i = 0; i < tab.rows(); ++i)
        y[tab.basic(i)] = tab.rhs(i);
    result.status = LPStatus::Optimal;
    result.x.assign(nvars, Rational(0));
    for (std::size_t j = 0; j < nvars; ++j) {
        Rational v = subst[j].offset;
        for (auto [k, sign] : subst[j].terms)
            v += sign > 0 ? y[k] : Rational(-y[k]);
        result.x[j] = std::move(v);
        result.objective += lp.objective[j] * result.x[j];
    }
    return result;
}

}  // namespace ripscrush
