#pragma once

// Brute-force LP oracle for small problems: enumerate every basis of the
// slack-augmented system and keep the best feasible vertex.

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <random>
#include <vector>

#include "ammonia/lp_solver.hpp"

namespace oracle {

struct SmallLp {
    std::vector<double> c;
    std::vector<std::vector<double>> a_ub;
    std::vector<double> b_ub;
    std::vector<std::vector<double>> a_eq;
    std::vector<double> b_eq;

    ammonia::lp::LinearProgram build() const
    {
        ammonia::lp::LinearProgram lp(c);
        for (std::size_t i = 0; i < a_ub.size(); ++i) lp.add_less_equal(a_ub[i], b_ub[i]);
        for (std::size_t i = 0; i < a_eq.size(); ++i) lp.add_equal(a_eq[i], b_eq[i]);
        return lp;
    }
};

/// Solves the k x k system in place; false when (numerically) singular.
inline bool gauss(std::vector<std::vector<double>> m, std::vector<double> v, std::vector<double>& x)
{
    const std::size_t k = v.size();
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < k; ++r)
            if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
        if (std::abs(m[piv][col]) < 1e-9) return false;
        std::swap(m[piv], m[col]);
        std::swap(v[piv], v[col]);
        for (std::size_t r = col + 1; r < k; ++r) {
            const double f = m[r][col] / m[col][col];
            for (std::size_t j = col; j < k; ++j) m[r][j] -= f * m[col][j];
            v[r] -= f * v[col];
        }
    }
    x.assign(k, 0.0);
    for (std::size_t i = k; i-- > 0;) {
        double s = v[i];
        for (std::size_t j = i + 1; j < k; ++j) s -= m[i][j] * x[j];
        x[i] = s / m[i][i];
    }
    return true;
}

/// Best objective over all basic feasible solutions, or nullopt if none.
/// Only meaningful for bounded problems.
inline std::optional<double> enumerate_vertices(const SmallLp& p)
{
    const std::size_t n = p.c.size();
    const std::size_t mu = p.a_ub.size();
    const std::size_t rows = mu + p.a_eq.size();
    const std::size_t cols = n + mu;

    std::vector<std::vector<double>> a(rows, std::vector<double>(cols, 0.0));
    std::vector<double> b(rows);
    for (std::size_t i = 0; i < mu; ++i) {
        std::copy(p.a_ub[i].begin(), p.a_ub[i].end(), a[i].begin());
        a[i][n + i] = 1.0;
        b[i] = p.b_ub[i];
    }
    for (std::size_t i = 0; i < p.a_eq.size(); ++i) {
        std::copy(p.a_eq[i].begin(), p.a_eq[i].end(), a[mu + i].begin());
        b[mu + i] = p.b_eq[i];
    }

    std::optional<double> best;
    std::vector<bool> pick(cols, false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(std::min(rows, cols)), true);
    if (rows > cols) return best;
    do {
        std::vector<std::size_t> basis;
        for (std::size_t j = 0; j < cols; ++j)
            if (pick[j]) basis.push_back(j);
        std::vector<std::vector<double>> m(rows, std::vector<double>(rows));
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t k = 0; k < rows; ++k) m[r][k] = a[r][basis[k]];
        std::vector<double> xb;
        if (!gauss(m, b, xb)) continue;
        if (std::any_of(xb.begin(), xb.end(), [](double v) { return v < -1e-9; })) continue;
        double obj = 0.0;
        for (std::size_t k = 0; k < rows; ++k)
            if (basis[k] < n) obj += p.c[basis[k]] * xb[k];
        if (!best || obj < *best) best = obj;
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return best;
}

/// Random LP that is feasible (built around a known point) and bounded (a
/// budget row caps the sum of variables). Up to 6 variables and 8 rows.
inline SmallLp random_feasible_lp(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> nvar(1, 6);
    std::uniform_int_distribution<int> neq(0, 2);
    std::uniform_real_distribution<double> coef(-5.0, 5.0);
    std::uniform_real_distribution<double> pos(0.0, 3.0);
    SmallLp p;
    const int n = nvar(rng);
    const int eq = std::min(neq(rng), n - 1 < 0 ? 0 : n - 1);
    const int ub = std::uniform_int_distribution<int>(0, 7 - eq)(rng);

    std::vector<double> x0(static_cast<std::size_t>(n));
    for (auto& v : x0) v = pos(rng);
    auto row = [&] {
        std::vector<double> r(static_cast<std::size_t>(n));
        for (auto& v : r) v = std::round(coef(rng) * 4.0) / 4.0;
        return r;
    };
    auto dot = [&](const std::vector<double>& r) {
        double s = 0.0;
        for (int j = 0; j < n; ++j) s += r[static_cast<std::size_t>(j)] * x0[static_cast<std::size_t>(j)];
        return s;
    };
    for (int i = 0; i < ub; ++i) {
        auto r = row();
        p.b_ub.push_back(dot(r) + pos(rng));
        p.a_ub.push_back(std::move(r));
    }
    std::vector<double> budget(static_cast<std::size_t>(n), 1.0);
    p.b_ub.push_back(dot(budget) + 1.0 + pos(rng));
    p.a_ub.push_back(std::move(budget));
    for (int i = 0; i < eq; ++i) {
        auto r = row();
        p.b_eq.push_back(dot(r));
        p.a_eq.push_back(std::move(r));
    }
    p.c = row();
    return p;
}

} // namespace oracle
