#include "icfb/simplex.hpp"

#include <cassert>

#include "icfb/errors.hpp"

namespace icfb {
namespace {

// Dense tableau for  T y = rhs, y >= 0  where T starts as B^{-1}[A] under the
// current basis. Free variables are split as x = xp - xn before entry.
struct Tableau {
    std::size_t m = 0, ncols = 0;
    std::vector<std::vector<Rat>> t;  // m rows
    std::vector<Rat> rhs;             // m entries, kept >= 0
    std::vector<int> basis;           // basic variable per row

    void pivot(std::size_t row, std::size_t col) {
        const Rat p = t[row][col];
        assert(p != 0);
        for (auto& v : t[row]) v /= p;
        rhs[row] /= p;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == row) continue;
            const Rat f = t[i][col];
            if (f == 0) continue;
            for (std::size_t j = 0; j < ncols; ++j) t[i][j] -= f * t[row][j];
            rhs[i] -= f * rhs[row];
        }
        basis[row] = static_cast<int>(col);
    }

    // Bland's rule; `active` masks columns allowed to enter.
    // Returns Optimal or Unbounded; tableau left at the optimum.
    LpStatus run(const std::vector<Rat>& cost, const std::vector<bool>& active) {
        for (;;) {
            int enter = -1;
            for (std::size_t j = 0; j < ncols; ++j) {
                if (!active[j]) continue;
                Rat reduced = cost[j];
                for (std::size_t i = 0; i < m; ++i) {
                    const Rat& cb = cost[basis[i]];
                    if (cb != 0) reduced -= cb * t[i][j];
                }
                if (reduced > 0) { enter = static_cast<int>(j); break; }
            }
            if (enter < 0) return LpStatus::Optimal;
            int leave = -1;
            Rat best_ratio(0);
            for (std::size_t i = 0; i < m; ++i) {
                if (t[i][enter] <= 0) continue;
                Rat ratio = rhs[i] / t[i][enter];
                if (leave < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && basis[i] < basis[leave])) {
                    leave = static_cast<int>(i);
                    best_ratio = ratio;
                }
            }
            if (leave < 0) return LpStatus::Unbounded;
            pivot(static_cast<std::size_t>(leave), static_cast<std::size_t>(enter));
        }
    }

    Rat value_of(int var) const {
        for (std::size_t i = 0; i < m; ++i)
            if (basis[i] == var) return rhs[i];
        return Rat(0);
    }
};

}  // namespace

LpResult lp_maximize(const HalfSpaceSystem& sys, const std::vector<Rat>& objective) {
    const std::size_t n = static_cast<std::size_t>(sys.dim());
    if (objective.size() != n) throw DimensionMismatch("objective dim mismatch");
    const std::size_t m = sys.rows.size();

    // columns: [xp 0..n) [xn n..2n) [slack 2n..2n+m) [artificial ...]
    const std::size_t nslack = m;
    std::size_t nart = 0;
    for (const Row& r : sys.rows)
        if (r.b < 0) ++nart;

    Tableau tab;
    tab.m = m;
    tab.ncols = 2 * n + nslack + nart;
    tab.t.assign(m, std::vector<Rat>(tab.ncols, Rat(0)));
    tab.rhs.assign(m, Rat(0));
    tab.basis.assign(m, -1);

    std::size_t art = 2 * n + nslack;
    for (std::size_t i = 0; i < m; ++i) {
        const Row& r = sys.rows[i];
        const int sgn = r.b < 0 ? -1 : 1;
        for (std::size_t j = 0; j < n; ++j) {
            tab.t[i][j] = sgn * r.a[j];
            tab.t[i][n + j] = -sgn * r.a[j];
        }
        tab.t[i][2 * n + i] = Rat(sgn);
        tab.rhs[i] = sgn * r.b;
        if (sgn < 0) {
            tab.t[i][art] = Rat(1);
            tab.basis[i] = static_cast<int>(art++);
        } else {
            tab.basis[i] = static_cast<int>(2 * n + i);
        }
    }

    std::vector<bool> active(tab.ncols, true);
    if (nart > 0) {
        std::vector<Rat> phase1(tab.ncols, Rat(0));
        for (std::size_t j = 2 * n + nslack; j < tab.ncols; ++j) phase1[j] = Rat(-1);
        LpStatus st = tab.run(phase1, active);
        (void)st;  // phase 1 is bounded above by 0
        Rat p1(0);
        for (std::size_t i = 0; i < m; ++i)
            if (tab.basis[i] >= static_cast<int>(2 * n + nslack)) p1 -= tab.rhs[i];
        if (p1 < 0) return LpResult{LpStatus::Infeasible, Rat(0), {}};
        // Pivot any degenerate artificial out of the basis.
        for (std::size_t i = 0; i < m; ++i) {
            if (tab.basis[i] < static_cast<int>(2 * n + nslack)) continue;
            bool pivoted = false;
            for (std::size_t j = 0; j < 2 * n + nslack && !pivoted; ++j) {
                if (tab.t[i][j] != 0) { tab.pivot(i, j); pivoted = true; }
            }
            // A fully zero row is a redundant constraint; leave the artificial
            // basic at zero but never let it re-enter.
        }
        for (std::size_t j = 2 * n + nslack; j < tab.ncols; ++j) active[j] = false;
    }

    std::vector<Rat> cost(tab.ncols, Rat(0));
    for (std::size_t j = 0; j < n; ++j) {
        cost[j] = objective[j];
        cost[n + j] = -objective[j];
    }
    const LpStatus st = tab.run(cost, active);
    if (st == LpStatus::Unbounded) return LpResult{LpStatus::Unbounded, Rat(0), {}};

    LpResult res;
    res.status = LpStatus::Optimal;
    res.point.resize(n);
    for (std::size_t j = 0; j < n; ++j) res.point[j] = tab.value_of(static_cast<int>(j)) - tab.value_of(static_cast<int>(n + j));
    res.value = Rat(0);
    for (std::size_t j = 0; j < n; ++j) res.value += objective[j] * res.point[j];
    return res;
}

bool lp_feasible(const HalfSpaceSystem& sys) {
    std::vector<Rat> zero(sys.dim(), Rat(0));
    return lp_maximize(sys, zero).status != LpStatus::Infeasible;
}

bool lp_implies(const HalfSpaceSystem& sys, const std::vector<Rat>& row, const Rat& bound) {
    LpResult r = lp_maximize(sys, row);
    if (r.status == LpStatus::Infeasible) return true;
    if (r.status == LpStatus::Unbounded) return false;
    return r.value <= bound;
}

bool systems_equivalent(const HalfSpaceSystem& a, const HalfSpaceSystem& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("systems_equivalent: dim mismatch");
    const bool fa = lp_feasible(a), fb = lp_feasible(b);
    if (fa != fb) return false;
    if (!fa) return true;
    for (const Row& r : a.rows)
        if (!lp_implies(b, r.a, r.b)) return false;
    for (const Row& r : b.rows)
        if (!lp_implies(a, r.a, r.b)) return false;
    return true;
}

}  // namespace icfb
