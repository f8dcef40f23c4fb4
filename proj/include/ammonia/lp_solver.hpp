#pragma once

// Dense two-phase simplex for small linear programs:
//
//     minimize    c.x
//     subject to  A_ub x <= b_ub,  A_eq x = b_eq,  x >= 0
//
// Pivoting follows Bland's rule (lowest eligible index enters, ties in the
// ratio test leave by lowest basic index), so the pivot sequence is fixed for
// a given input and the method cannot cycle.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "ammonia/error.hpp"

namespace ammonia::lp {

enum class Status { Optimal, Infeasible, Unbounded };

inline const char* to_string(Status s)
{
    switch (s) {
    case Status::Optimal: return "optimal";
    case Status::Infeasible: return "infeasible";
    case Status::Unbounded: return "unbounded";
    }
    return "?";
}

class LinearProgram {
public:
    explicit LinearProgram(std::vector<double> objective) : objective_(std::move(objective))
    {
        detail::require(!objective_.empty(), "linear program needs at least one variable");
        for (double c : objective_) detail::require(std::isfinite(c), "objective coefficient is not finite");
    }

    void add_less_equal(std::span<const double> row, double rhs) { append(ub_matrix_, ub_rhs_, row, rhs); }
    void add_less_equal(std::initializer_list<double> row, double rhs)
    {
        add_less_equal(std::span<const double>(row.begin(), row.size()), rhs);
    }
    void add_equal(std::span<const double> row, double rhs) { append(eq_matrix_, eq_rhs_, row, rhs); }
    void add_equal(std::initializer_list<double> row, double rhs)
    {
        add_equal(std::span<const double>(row.begin(), row.size()), rhs);
    }

    std::size_t variable_count() const { return objective_.size(); }
    std::size_t inequality_count() const { return ub_rhs_.size(); }
    std::size_t equality_count() const { return eq_rhs_.size(); }

    std::span<const double> objective() const { return objective_; }
    std::span<const double> inequality_row(std::size_t r) const
    {
        return {ub_matrix_.data() + r * variable_count(), variable_count()};
    }
    std::span<const double> equality_row(std::size_t r) const
    {
        return {eq_matrix_.data() + r * variable_count(), variable_count()};
    }
    double inequality_rhs(std::size_t r) const { return ub_rhs_[r]; }
    double equality_rhs(std::size_t r) const { return eq_rhs_[r]; }

private:
    void append(std::vector<double>& matrix, std::vector<double>& rhs_list, std::span<const double> row, double rhs)
    {
        if (row.size() != variable_count())
            throw InputError("constraint row has " + std::to_string(row.size()) + " coefficients, expected " +
                             std::to_string(variable_count()));
        for (double a : row) detail::require(std::isfinite(a), "constraint coefficient is not finite");
        detail::require(std::isfinite(rhs), "constraint right-hand side is not finite");
        matrix.insert(matrix.end(), row.begin(), row.end());
        rhs_list.push_back(rhs);
    }

    std::vector<double> objective_;
    std::vector<double> ub_matrix_, ub_rhs_;
    std::vector<double> eq_matrix_, eq_rhs_;
};

struct LpSolution {
    Status status = Status::Infeasible;
    std::vector<double> x;
    double objective = std::numeric_limits<double>::quiet_NaN();
    double residual = std::numeric_limits<double>::quiet_NaN(); ///< max constraint violation at x
    std::size_t pivots = 0;
};

/// Largest violation of A_ub x <= b_ub, |A_eq x - b_eq| and x >= 0.
inline double max_violation(const LinearProgram& lp, std::span<const double> x)
{
    long double worst = 0.0L;
    auto dot = [&](std::span<const double> row) {
        long double s = 0.0L;
        for (std::size_t j = 0; j < row.size(); ++j) s += static_cast<long double>(row[j]) * x[j];
        return s;
    };
    for (std::size_t r = 0; r < lp.inequality_count(); ++r)
        worst = std::max(worst, dot(lp.inequality_row(r)) - lp.inequality_rhs(r));
    for (std::size_t r = 0; r < lp.equality_count(); ++r)
        worst = std::max(worst, std::fabs(dot(lp.equality_row(r)) - lp.equality_rhs(r)));
    for (double v : x) worst = std::max(worst, static_cast<long double>(-v));
    return static_cast<double>(worst);
}

namespace detail {

class Tableau {
public:
    enum class ColumnKind { Structural, Slack, Artificial };

    Tableau(const LinearProgram& lp, std::size_t max_pivots) : n_(lp.variable_count()), max_pivots_(max_pivots)
    {
        const std::size_t m_ub = lp.inequality_count();
        const std::size_t m_eq = lp.equality_count();
        m_ = m_ub + m_eq;

        // Column layout: structural | one slack per inequality | artificials.
        std::size_t artificials = m_eq;
        for (std::size_t r = 0; r < m_ub; ++r)
            if (lp.inequality_rhs(r) < 0.0) ++artificials;
        slack_begin_ = n_;
        art_begin_ = n_ + m_ub;
        cols_ = art_begin_ + artificials;
        width_ = cols_ + 1;
        t_.assign(m_ * width_, 0.0);
        basis_.assign(m_, 0);

        std::size_t next_art = art_begin_;
        auto load_row = [&](std::size_t r, std::span<const double> a, double b, bool has_slack) {
            double scale = 0.0;
            for (double v : a) scale = std::max(scale, std::fabs(v));
            if (scale == 0.0) scale = 1.0;
            const double sign = b < 0.0 ? -1.0 : 1.0;
            for (std::size_t j = 0; j < n_; ++j) at(r, j) = sign * a[j] / scale;
            at(r, cols_) = sign * b / scale;
            // The scaled slack s' = s / scale keeps a unit coefficient.
            if (has_slack) at(r, slack_begin_ + r) = sign;
            if (sign > 0.0 && has_slack) {
                basis_[r] = slack_begin_ + r;
            } else {
                at(r, next_art) = 1.0;
                basis_[r] = next_art++;
            }
        };
        for (std::size_t r = 0; r < m_ub; ++r) load_row(r, lp.inequality_row(r), lp.inequality_rhs(r), true);
        for (std::size_t r = 0; r < m_eq; ++r) load_row(m_ub + r, lp.equality_row(r), lp.equality_rhs(r), false);

        if (max_pivots_ == 0) max_pivots_ = 200 * (m_ + cols_) + 1000;
        active_.assign(m_, true);
    }

    ColumnKind kind(std::size_t j) const
    {
        if (j < slack_begin_) return ColumnKind::Structural;
        if (j < art_begin_) return ColumnKind::Slack;
        return ColumnKind::Artificial;
    }

    /// Phase 1: minimise the sum of artificials. Returns that minimum.
    double phase_one()
    {
        cost_.assign(width_, 0.0);
        for (std::size_t j = art_begin_; j < cols_; ++j) cost_[j] = 1.0;
        price_out();
        iterate(/*allow_artificial=*/true);
        return -cost_[cols_];
    }

    /// Pivot basic artificials (all at zero after a feasible phase 1) out of
    /// the basis; rows where that is impossible are linearly dependent and dropped.
    void expel_artificials()
    {
        for (std::size_t r = 0; r < m_; ++r) {
            if (!active_[r] || kind(basis_[r]) != ColumnKind::Artificial) continue;
            std::size_t best = npos;
            for (std::size_t j = 0; j < art_begin_ && best == npos; ++j)
                if (std::fabs(at(r, j)) > kPivotEps) best = j;
            if (best == npos)
                active_[r] = false;
            else
                pivot(r, best);
        }
    }

    /// Phase 2 on the true objective. Returns false when unbounded.
    bool phase_two(std::span<const double> objective)
    {
        cost_.assign(width_, 0.0);
        for (std::size_t j = 0; j < n_; ++j) cost_[j] = objective[j];
        price_out();
        return iterate(/*allow_artificial=*/false);
    }

    std::size_t pivots() const { return pivots_; }
    std::size_t rows() const { return m_; }
    bool active(std::size_t r) const { return active_[r]; }
    std::size_t basic(std::size_t r) const { return basis_[r]; }
    std::size_t slack_begin() const { return slack_begin_; }
    std::size_t structural_count() const { return n_; }
    double rhs(std::size_t r) const { return t_[r * width_ + cols_]; }

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    static constexpr double kPivotEps = 1e-11;
    static constexpr double kCostEps = 1e-11;

    double& at(std::size_t r, std::size_t c) { return t_[r * width_ + c]; }
    double at(std::size_t r, std::size_t c) const { return t_[r * width_ + c]; }

    // Make reduced costs of basic columns zero.
    void price_out()
    {
        for (std::size_t r = 0; r < m_; ++r) {
            if (!active_[r]) continue;
            const double cb = cost_[basis_[r]];
            if (cb == 0.0) continue;
            for (std::size_t j = 0; j < width_; ++j) cost_[j] -= cb * at(r, j);
        }
    }

    bool iterate(bool allow_artificial)
    {
        double cost_scale = 1.0;
        for (std::size_t j = 0; j < cols_; ++j) cost_scale = std::max(cost_scale, std::fabs(cost_[j]));
        const std::size_t limit = allow_artificial ? cols_ : art_begin_;
        for (;;) {
            std::size_t enter = npos;
            for (std::size_t j = 0; j < limit; ++j) {
                if (cost_[j] < -kCostEps * cost_scale) {
                    enter = j;
                    break;
                }
            }
            if (enter == npos) return true;

            std::size_t leave = npos;
            double best_ratio = std::numeric_limits<double>::infinity();
            for (std::size_t r = 0; r < m_; ++r) {
                if (!active_[r]) continue;
                const double a = at(r, enter);
                if (a <= kPivotEps) continue;
                const double ratio = at(r, cols_) / a;
                if (leave == npos) {
                    best_ratio = ratio;
                    leave = r;
                    continue;
                }
                const double slack = 1e-12 * std::max(1.0, std::fabs(best_ratio));
                if (ratio < best_ratio - slack) {
                    best_ratio = ratio;
                    leave = r;
                } else if (ratio <= best_ratio + slack && basis_[r] < basis_[leave]) {
                    leave = r;
                }
            }
            if (leave == npos) return false;
            pivot(leave, enter);
        }
    }

    void pivot(std::size_t r, std::size_t c)
    {
        if (++pivots_ > max_pivots_)
            throw SolverError("simplex exceeded " + std::to_string(max_pivots_) + " pivots");
        const double p = at(r, c);
        for (std::size_t j = 0; j < width_; ++j) at(r, j) /= p;
        at(r, c) = 1.0;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == r) continue;
            const double f = at(i, c);
            if (f == 0.0) continue;
            for (std::size_t j = 0; j < width_; ++j) at(i, j) -= f * at(r, j);
            at(i, c) = 0.0;
        }
        const double f = cost_[c];
        if (f != 0.0) {
            for (std::size_t j = 0; j < width_; ++j) cost_[j] -= f * at(r, j);
            cost_[c] = 0.0;
        }
        basis_[r] = c;
    }

    std::size_t n_ = 0, m_ = 0, cols_ = 0, width_ = 0;
    std::size_t slack_begin_ = 0, art_begin_ = 0;
    std::size_t max_pivots_ = 0, pivots_ = 0;
    std::vector<double> t_;
    std::vector<double> cost_;
    std::vector<std::size_t> basis_;
    std::vector<bool> active_;
};

// Solve the square system M y = v in long double with partial pivoting.
// Returns false if M is numerically singular.
inline bool solve_dense(std::vector<long double>& m, std::vector<long double>& v, std::size_t k)
{
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < k; ++r)
            if (std::fabs(m[r * k + col]) > std::fabs(m[piv * k + col])) piv = r;
        if (std::fabs(m[piv * k + col]) < 1e-300L) return false;
        if (piv != col) {
            for (std::size_t j = 0; j < k; ++j) std::swap(m[col * k + j], m[piv * k + j]);
            std::swap(v[col], v[piv]);
        }
        for (std::size_t r = col + 1; r < k; ++r) {
            const long double f = m[r * k + col] / m[col * k + col];
            if (f == 0.0L) continue;
            for (std::size_t j = col; j < k; ++j) m[r * k + j] -= f * m[col * k + j];
            v[r] -= f * v[col];
        }
    }
    for (std::size_t i = k; i-- > 0;) {
        long double s = v[i];
        for (std::size_t j = i + 1; j < k; ++j) s -= m[i * k + j] * v[j];
        v[i] = s / m[i * k + i];
    }
    return true;
}

// Recompute the basic solution from the unscaled constraints. Returns an empty
// vector if the basis matrix is singular.
inline std::vector<double> refine_basic_solution(const LinearProgram& lp, const Tableau& tab)
{
    const std::size_t n = lp.variable_count();
    const std::size_t m_ub = lp.inequality_count();
    std::vector<std::size_t> rows;
    for (std::size_t r = 0; r < tab.rows(); ++r)
        if (tab.active(r)) rows.push_back(r);
    const std::size_t k = rows.size();
    if (k == 0) return std::vector<double>(n, 0.0);

    std::vector<long double> m(k * k, 0.0L), v(k, 0.0L);
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t r = rows[i];
        const auto row = r < m_ub ? lp.inequality_row(r) : lp.equality_row(r - m_ub);
        v[i] = r < m_ub ? lp.inequality_rhs(r) : lp.equality_rhs(r - m_ub);
        for (std::size_t c = 0; c < k; ++c) {
            const std::size_t var = tab.basic(rows[c]);
            if (var < n)
                m[i * k + c] = row[var];
            else if (var - tab.slack_begin() == r)
                m[i * k + c] = 1.0L;
        }
    }
    if (!solve_dense(m, v, k)) return {};
    std::vector<double> x(n, 0.0);
    for (std::size_t c = 0; c < k; ++c) {
        const std::size_t var = tab.basic(rows[c]);
        if (var < n) x[var] = static_cast<double>(v[c]);
    }
    return x;
}

} // namespace detail

/// Solve `lp`. `tol` bounds the feasibility error accepted for an Optimal
/// result; `max_pivots` = 0 picks a size-based default budget.
inline LpSolution solve(const LinearProgram& lp, double tol = 1e-9, std::size_t max_pivots = 0)
{
    ammonia::detail::require(tol > 0.0 && std::isfinite(tol), "solver tolerance must be positive");
    detail::Tableau tab(lp, max_pivots);
    LpSolution out;

    const double infeasibility = tab.phase_one();
    if (infeasibility > tol) {
        out.status = Status::Infeasible;
        out.pivots = tab.pivots();
        return out;
    }
    tab.expel_artificials();
    const bool bounded = tab.phase_two(lp.objective());
    out.pivots = tab.pivots();
    if (!bounded) {
        out.status = Status::Unbounded;
        return out;
    }

    std::vector<double> x(lp.variable_count(), 0.0);
    for (std::size_t r = 0; r < tab.rows(); ++r)
        if (tab.active(r) && tab.basic(r) < lp.variable_count()) x[tab.basic(r)] = tab.rhs(r);
    if (auto refined = detail::refine_basic_solution(lp, tab); !refined.empty()) {
        if (max_violation(lp, refined) <= max_violation(lp, x)) x = std::move(refined);
    }
    for (double& v : x)
        if (v < 0.0 && v > -tol) v = 0.0;

    out.status = Status::Optimal;
    long double obj = 0.0L;
    for (std::size_t j = 0; j < x.size(); ++j) obj += static_cast<long double>(lp.objective()[j]) * x[j];
    out.objective = static_cast<double>(obj);
    out.residual = max_violation(lp, x);
    out.x = std::move(x);
    return out;
}

} // namespace ammonia::lp
