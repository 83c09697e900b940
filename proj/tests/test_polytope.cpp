#include <doctest.h>

#include <random>
#include <set>

#include "icfb/errors.hpp"
#include "icfb/polytope2.hpp"

using namespace icfb;

namespace {

HalfSpaceSystem sys2(std::initializer_list<std::tuple<int, int, int>> rows) {
    HalfSpaceSystem s;
    s.vars = {"R1", "R2"};
    for (const auto& [a1, a2, b] : rows) s.add_sparse({{0, Rat(a1)}, {1, Rat(a2)}}, Rat(b));
    return s;
}

std::set<std::pair<std::string, std::string>> vset(const Polytope2& p) {
    std::set<std::pair<std::string, std::string>> out;
    for (const auto& v : p.vertices()) out.insert({rat_str(v.r1), rat_str(v.r2)});
    return out;
}

// Feasibility of a one-variable slice, decided by interval intersection.
// Independent of the Fourier-Motzkin code path it checks.
bool slice_feasible(const HalfSpaceSystem& s, int var, const std::vector<Rat>& fixed) {
    bool lo_set = false, hi_set = false;
    Rat lo(0), hi(0);
    for (const Row& r : s.rows) {
        Rat rest = r.b;
        int fi = 0;
        for (int i = 0; i < s.dim(); ++i) {
            if (i == var) continue;
            rest -= r.a[i] * fixed[fi++];
        }
        const Rat& c = r.a[var];
        if (c == 0) {
            if (rest < 0) return false;
        } else if (c > 0) {
            Rat v = rest / c;
            if (!hi_set || v < hi) { hi = v; hi_set = true; }
        } else {
            Rat v = rest / c;
            if (!lo_set || v > lo) { lo = v; lo_set = true; }
        }
    }
    return !(lo_set && hi_set && lo > hi);
}

}  // namespace

TEST_CASE("intersect concatenates rows and validates dimensions") {
    HalfSpaceSystem a = sys2({{1, 0, 6}});
    HalfSpaceSystem b = sys2({{1, 1, 10}});
    HalfSpaceSystem c = intersect(a, b);
    CHECK(c.rows.size() == 2);

    HalfSpaceSystem empty;
    empty.vars = {"R1", "R2"};
    CHECK(intersect(a, empty).rows.size() == a.rows.size());

    HalfSpaceSystem wrong;
    wrong.vars = {"x"};
    CHECK_THROWS_AS(intersect(a, wrong), DimensionMismatch);
}

TEST_CASE("vertex enumeration on the three reference regions") {
    Polytope2 tri(sys2({{-1, 0, 0}, {0, -1, 0}, {1, 1, 3}}));
    CHECK(vset(tri) == std::set<std::pair<std::string, std::string>>{{"0", "0"}, {"3", "0"}, {"0", "3"}});
    // CCW starting at the lexicographic minimum
    CHECK(tri.vertices()[0] == RatePair{Rat(0), Rat(0)});
    CHECK(tri.vertices()[1] == RatePair{Rat(3), Rat(0)});

    Polytope2 pent(sys2({{-1, 0, -4}, {0, -1, -4}, {1, 1, 10}}));
    CHECK(vset(pent) == std::set<std::pair<std::string, std::string>>{{"4", "4"}, {"6", "4"}, {"4", "6"}});

    Polytope2 pt(sys2({{-1, 0, -1}, {1, 0, 1}, {0, -1, -1}, {0, 1, 1}}));
    CHECK(vset(pt) == std::set<std::pair<std::string, std::string>>{{"1", "1"}});
}

TEST_CASE("empty and unbounded regions") {
    Polytope2 empty(sys2({{1, 0, 0}, {-1, 0, -1}}));  // x <= 0 and x >= 1
    CHECK(empty.vertices().empty());
    Polytope2 halfplane(sys2({{-1, 0, 0}, {0, -1, 0}}));
    CHECK_THROWS_AS(halfplane.vertices(), UnboundedRegion);
}

TEST_CASE("contains_point tolerance semantics") {
    Polytope2 pent(sys2({{-1, 0, -4}, {0, -1, -4}, {1, 1, 10}}));
    CHECK(contains_point(pent, RatePair{Rat(4), Rat(6)}));
    CHECK_FALSE(contains_point(pent, RatePair{Rat(3), Rat(3)}));
    Polytope2 strip(sys2({{1, 0, 5}, {-1, 0, 0}, {0, 1, 1}, {0, -1, 0}}));
    RatePair just_out{Rat(5) + make_rat(1, 1000000000), Rat(0)};
    CHECK(contains_point(strip, just_out, make_rat(1, 1000000)));
    CHECK_FALSE(contains_point(strip, just_out));
}

TEST_CASE("is_subset") {
    Polytope2 inner(sys2({{-1, 0, 0}, {0, -1, 0}, {1, 1, 3}}));
    Polytope2 outer(sys2({{-1, 0, 0}, {0, -1, 0}, {1, 1, 5}}));
    CHECK(is_subset(inner, outer));
    CHECK_FALSE(is_subset(outer, inner));
    Polytope2 empty(sys2({{1, 0, 0}, {-1, 0, -1}}));
    CHECK(is_subset(empty, inner));
}

TEST_CASE("sum_rate_face") {
    Polytope2 box(sys2({{-1, 0, 0}, {0, -1, 0}, {1, 0, 6}, {0, 1, 6}, {1, 1, 10}}));
    SumRateFace f = sum_rate_face(box);
    CHECK(f.max_sum == 10);
    CHECK(f.lo == RatePair{Rat(4), Rat(6)});
    CHECK(f.hi == RatePair{Rat(6), Rat(4)});

    Polytope2 tri(sys2({{-1, 0, 0}, {0, -1, 0}, {1, 1, 3}}));
    f = sum_rate_face(tri);
    CHECK(f.max_sum == 3);
    CHECK(f.lo == RatePair{Rat(0), Rat(3)});
    CHECK(f.hi == RatePair{Rat(3), Rat(0)});

    Polytope2 pt(sys2({{-1, 0, -1}, {1, 0, 1}, {0, -1, -1}, {0, 1, 1}}));
    f = sum_rate_face(pt);
    CHECK(f.max_sum == 2);
    CHECK(f.lo == f.hi);

    Polytope2 empty(sys2({{1, 0, 0}, {-1, 0, -1}}));
    CHECK_THROWS_AS(sum_rate_face(empty), EmptyRegion);
}

TEST_CASE("fm_eliminate hand example") {
    HalfSpaceSystem s;
    s.vars = {"x", "y"};
    s.add_sparse({{0, Rat(1)}}, Rat(3));
    s.add_sparse({{0, Rat(-1)}}, Rat(0));
    s.add_sparse({{0, Rat(-1)}, {1, Rat(1)}}, Rat(1));
    s.add_sparse({{0, Rat(1)}, {1, Rat(1)}}, Rat(5));
    HalfSpaceSystem proj = fm_eliminate(s, 0);
    // y <= 1 + x and y <= 5 - x meet at x = 2, so the projection is y <= 3
    HalfSpaceSystem expect;
    expect.vars = {"y"};
    expect.add_sparse({{0, Rat(1)}}, Rat(3));
    CHECK(systems_equivalent(proj, expect));
    // feasibility matches on an integer grid
    for (int y = -2; y <= 6; ++y) CHECK(proj.satisfied({Rat(y)}) == (y <= 3));
}

TEST_CASE("fm_eliminate variable absent from every row") {
    HalfSpaceSystem s;
    s.vars = {"x", "y"};
    s.add_sparse({{1, Rat(1)}}, Rat(2));
    HalfSpaceSystem proj = fm_eliminate(s, 0);
    CHECK(proj.dim() == 1);
    CHECK(proj.rows.size() == 1);
    CHECK(proj.rows[0].b == 2);
}

TEST_CASE("fm_eliminate surfaces infeasibility as a 0 <= negative row") {
    HalfSpaceSystem s;
    s.vars = {"x"};
    s.add_sparse({{0, Rat(1)}}, Rat(0));
    s.add_sparse({{0, Rat(-1)}}, Rat(-1));
    HalfSpaceSystem proj = fm_eliminate(s, 0);
    REQUIRE(proj.rows.size() == 1);
    CHECK(proj.rows[0].b < 0);
}

TEST_CASE("projection property against the interval oracle") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<int> coeff(-3, 3), bound(-8, 8), nrows(3, 7), dims(2, 4);
    for (int trial = 0; trial < 120; ++trial) {
        const int d = dims(rng);
        HalfSpaceSystem s;
        for (int i = 0; i < d; ++i) s.vars.push_back("v" + std::to_string(i));
        const int m = nrows(rng);
        for (int r = 0; r < m; ++r) {
            std::vector<Rat> a(static_cast<std::size_t>(d));
            for (auto& c : a) c = Rat(coeff(rng));
            s.add_row(std::move(a), Rat(bound(rng)));
        }
        // box rows keep the slice scan finite-sensible
        for (int i = 0; i < d; ++i) {
            s.add_upper_bound(i, Rat(8));
            s.add_lower_bound(i, Rat(-8));
        }
        const int var = std::uniform_int_distribution<int>(0, d - 1)(rng);
        HalfSpaceSystem proj = fm_eliminate(s, var);
        std::vector<Rat> x(static_cast<std::size_t>(d - 1));
        std::uniform_int_distribution<int> pick(-8, 8);
        for (int k = 0; k < 40; ++k) {
            for (auto& xi : x) xi = Rat(pick(rng));
            CHECK(proj.satisfied(x) == slice_feasible(s, var, x));
        }
    }
}

TEST_CASE("every vertex is tight on two independent rows") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> coeff(-3, 3), bound(0, 9), nrows(2, 6);
    for (int trial = 0; trial < 150; ++trial) {
        HalfSpaceSystem s;
        s.vars = {"R1", "R2"};
        const int m = nrows(rng);
        for (int r = 0; r < m; ++r)
            s.add_sparse({{0, Rat(coeff(rng))}, {1, Rat(coeff(rng))}}, Rat(bound(rng)));
        s.add_upper_bound(0, Rat(9));
        s.add_upper_bound(1, Rat(9));
        s.add_lower_bound(0, Rat(-9));
        s.add_lower_bound(1, Rat(-9));
        Polytope2 p(s);
        for (const auto& v : p.vertices()) {
            CHECK(contains_point(p, v));
            std::vector<std::size_t> tight;
            for (std::size_t r = 0; r < p.system().rows.size(); ++r)
                if (p.system().eval_row(r, {v.r1, v.r2}) == p.system().rows[r].b) tight.push_back(r);
            bool independent = false;
            for (std::size_t i = 0; i < tight.size() && !independent; ++i)
                for (std::size_t j = i + 1; j < tight.size() && !independent; ++j) {
                    const Row& ri = p.system().rows[tight[i]];
                    const Row& rj = p.system().rows[tight[j]];
                    independent = ri.a[0] * rj.a[1] - ri.a[1] * rj.a[0] != 0;
                }
            CHECK(independent);
        }
    }
}

TEST_CASE("mutual subset implies system equivalence") {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> coeff(-2, 2), bound(1, 8);
    for (int trial = 0; trial < 60; ++trial) {
        HalfSpaceSystem a = sys2({{-1, 0, 0}, {0, -1, 0}});
        HalfSpaceSystem b = a;
        for (int r = 0; r < 3; ++r) {
            a.add_sparse({{0, Rat(std::abs(coeff(rng)))}, {1, Rat(std::abs(coeff(rng)) + 1)}}, Rat(bound(rng)));
            b.add_sparse({{0, Rat(std::abs(coeff(rng)) + 1)}, {1, Rat(std::abs(coeff(rng)))}}, Rat(bound(rng)));
        }
        a.add_upper_bound(0, Rat(8));
        a.add_upper_bound(1, Rat(8));
        b.add_upper_bound(0, Rat(8));
        b.add_upper_bound(1, Rat(8));
        Polytope2 pa(a), pb(b);
        if (is_subset(pa, pb) && is_subset(pb, pa)) CHECK(systems_equivalent(a, b));
    }
}
