#include "icfb/ld_regions.hpp"

#include <algorithm>

namespace icfb {
namespace {

int pos(int v) { return std::max(v, 0); }

HalfSpaceSystem rate_system2() {
    HalfSpaceSystem s;
    s.vars = {"R1", "R2"};
    return s;
}

void add_box(HalfSpaceSystem& s, const LdParams& p) {
    s.add_lower_bound(0, Rat(0));
    s.add_lower_bound(1, Rat(0));
    s.add_upper_bound(0, Rat(p.q()));
    s.add_upper_bound(1, Rat(p.q()));
}

}  // namespace

int lower_L(const LdParams& p, int user) { return pos(p.n_direct(user) - p.n_cross_in(user)); }

int upper_U(const LdParams& p, int user) {
    const int nii = p.n_direct(user), nij = p.n_cross_in(user);
    const int Lj = lower_L(p, 3 - user);
    if (nij <= nii) return nii - std::min(Lj, nij);
    return std::min(pos(nij - Lj), nii);
}

Polytope2 capacity_ldic(const LdParams& p) {
    const int n11 = p.n11, n22 = p.n22, n12 = p.n12, n21 = p.n21;
    HalfSpaceSystem s = rate_system2();
    s.add_upper_bound(0, Rat(n11));
    s.add_upper_bound(1, Rat(n22));
    s.add_sparse({{0, Rat(1)}, {1, Rat(1)}}, Rat(pos(n11 - n12) + std::max(n22, n12)));
    s.add_sparse({{0, Rat(1)}, {1, Rat(1)}}, Rat(pos(n22 - n21) + std::max(n11, n21)));
    s.add_sparse({{0, Rat(1)}, {1, Rat(1)}},
                 Rat(std::max(n21, pos(n11 - n12)) + std::max(n12, pos(n22 - n21))));
    s.add_sparse({{0, Rat(2)}, {1, Rat(1)}},
                 Rat(std::max(n11, n21) + pos(n11 - n12) + std::max(n12, pos(n22 - n21))));
    s.add_sparse({{0, Rat(1)}, {1, Rat(2)}},
                 Rat(std::max(n22, n12) + pos(n22 - n21) + std::max(n21, pos(n11 - n12))));
    add_box(s, p);
    return Polytope2(std::move(s));
}

Polytope2 ne_region_ldic(const LdParams& p) {
    HalfSpaceSystem box = rate_system2();
    box.add_lower_bound(0, Rat(lower_L(p, 1)));
    box.add_lower_bound(1, Rat(lower_L(p, 2)));
    box.add_upper_bound(0, Rat(upper_U(p, 1)));
    box.add_upper_bound(1, Rat(upper_U(p, 2)));
    return Polytope2(intersect(box, capacity_ldic(p).system()));
}

Polytope2 capacity_ldic_fb(const LdParams& p) {
    const int n11 = p.n11, n22 = p.n22, n12 = p.n12, n21 = p.n21;
    HalfSpaceSystem s = rate_system2();
    s.add_upper_bound(0, Rat(std::min(std::max(n11, n12), std::max(n11, n21))));
    s.add_upper_bound(1, Rat(std::min(std::max(n22, n21), std::max(n22, n12))));
    s.add_sparse({{0, Rat(1)}, {1, Rat(1)}},
                 Rat(std::min(std::max(n22, n21) + pos(n11 - n21), std::max(n11, n12) + pos(n22 - n12))));
    add_box(s, p);
    return Polytope2(std::move(s));
}

Polytope2 ne_region_ldic_fb(const LdParams& p, const Rat& eta) {
    HalfSpaceSystem box = rate_system2();
    box.add_lower_bound(0, rat_pos(Rat(lower_L(p, 1)) - eta));
    box.add_lower_bound(1, rat_pos(Rat(lower_L(p, 2)) - eta));
    return Polytope2(intersect(box, capacity_ldic_fb(p).system()));
}

bool inf_rate_check(const LdParams& p, const Rat& eta) {
    const Polytope2 nofb = ne_region_ldic(p);
    const Polytope2 fb = ne_region_ldic_fb(p, eta);
    if (nofb.empty() || fb.empty()) throw EmptyRegion("inf_rate_check on empty equilibrium region");
    for (int u = 1; u <= 2; ++u) {
        Rat min_fb = fb.vertices()[0].r1, min_nofb = nofb.vertices()[0].r1;
        for (const auto& v : fb.vertices()) min_fb = std::min(min_fb, u == 1 ? v.r1 : v.r2);
        for (const auto& v : nofb.vertices()) min_nofb = std::min(min_nofb, u == 1 ? v.r1 : v.r2);
        if (min_fb != rat_pos(Rat(lower_L(p, u)) - eta)) return false;
        if (min_nofb != Rat(lower_L(p, u))) return false;
    }
    return true;
}

bool sum_opt_predicate(const LdParams& p) {
    const int n11 = p.n11, n22 = p.n22, n12 = p.n12, n21 = p.n21;
    const bool c1 = pos(n22 - n21) - pos(n22 - n12) <= pos(pos(n12 - n11) - pos(n21 - n11));
    const bool c2 = pos(n11 - n12) - pos(n11 - n21) <= pos(pos(n21 - n22) - pos(n12 - n22));
    return c1 && c2;
}

int r_dagger(const LdParams& p, int user) {
    const int nii = p.n_direct(user), njj = p.n_direct(3 - user);
    const int nij = p.n_cross_in(user), nji = p.n_cross_out(user);
    return std::min(std::max(njj, nij) + pos(nii - nij), std::max(njj, nji) + pos(nii - nji)) -
           std::min(std::max(njj, nji), std::max(njj, nij));
}

bool sum_opt_brute(const LdParams& p) {
    const SumRateFace face = sum_rate_face(capacity_ldic_fb(p));
    const Polytope2 ne = ne_region_ldic_fb(p, Rat(0));
    return contains_point(ne, face.lo) && contains_point(ne, face.hi);
}

HalfSpaceSystem hk_fb_system(const LdParams& p) {
    const int n11 = p.n11, n22 = p.n22, n12 = p.n12, n21 = p.n21;
    HalfSpaceSystem s;
    s.vars = {"R1C", "R1R", "R1P", "R2C", "R2R", "R2P"};
    s.add_sparse({{0, Rat(1)}, {1, Rat(1)}}, Rat(n21));
    s.add_sparse({{5, Rat(1)}}, Rat(pos(n22 - n12)));
    s.add_sparse({{0, Rat(1)}, {2, Rat(1)}, {3, Rat(1)}, {4, Rat(1)}}, Rat(std::max(n11, n12)));
    s.add_sparse({{3, Rat(1)}, {4, Rat(1)}}, Rat(n12));
    s.add_sparse({{2, Rat(1)}}, Rat(pos(n11 - n21)));
    s.add_sparse({{3, Rat(1)}, {5, Rat(1)}, {0, Rat(1)}, {1, Rat(1)}}, Rat(std::max(n22, n21)));
    for (int v = 0; v < 6; ++v) s.add_lower_bound(v, Rat(0));
    return s;
}

HalfSpaceSystem project_to_rate_form(const HalfSpaceSystem& sys) {
    HalfSpaceSystem ext;
    ext.vars = sys.vars;
    ext.vars.push_back("R1");
    ext.vars.push_back("R2");
    for (const Row& r : sys.rows) {
        Row e{r.a, r.b};
        e.a.push_back(Rat(0));
        e.a.push_back(Rat(0));
        ext.rows.push_back(std::move(e));
    }
    // R1 = R1C + R1P and R2 = R2C + R2P as inequality pairs
    ext.add_sparse({{0, Rat(1)}, {2, Rat(1)}, {6, Rat(-1)}}, Rat(0));
    ext.add_sparse({{0, Rat(-1)}, {2, Rat(-1)}, {6, Rat(1)}}, Rat(0));
    ext.add_sparse({{3, Rat(1)}, {5, Rat(1)}, {7, Rat(-1)}}, Rat(0));
    ext.add_sparse({{3, Rat(-1)}, {5, Rat(-1)}, {7, Rat(1)}}, Rat(0));
    // eliminate R2P, R2C, R1P, R1C (indices shift as columns drop)
    HalfSpaceSystem out = fm_eliminate(ext, 5);
    out = fm_eliminate(out, 3);
    out = fm_eliminate(out, 2);
    out = fm_eliminate(out, 0);
    return out.with_var_order({"R1", "R1R", "R2", "R2R"});
}

HalfSpaceSystem hk_fb_rate_form(const LdParams& p) {
    const int n11 = p.n11, n22 = p.n22, n12 = p.n12, n21 = p.n21;
    HalfSpaceSystem s;
    s.vars = {"R1", "R1R", "R2", "R2R"};
    s.add_sparse({{1, Rat(1)}}, Rat(n21));
    s.add_sparse({{0, Rat(1)}, {1, Rat(1)}}, Rat(std::max(n11, n21)));
    s.add_sparse({{0, Rat(1)}, {3, Rat(1)}}, Rat(std::max(n11, n12)));
    s.add_sparse({{0, Rat(1)}, {2, Rat(1)}, {3, Rat(1)}}, Rat(std::max(n11, n12) + pos(n22 - n12)));
    s.add_sparse({{3, Rat(1)}}, Rat(n12));
    s.add_sparse({{2, Rat(1)}, {3, Rat(1)}}, Rat(std::max(n22, n12)));
    s.add_sparse({{2, Rat(1)}, {1, Rat(1)}}, Rat(std::max(n22, n21)));
    s.add_sparse({{2, Rat(1)}, {0, Rat(1)}, {1, Rat(1)}}, Rat(std::max(n22, n21) + pos(n11 - n21)));
    for (int v = 0; v < 4; ++v) s.add_lower_bound(v, Rat(0));
    return s;
}

Rat deviation_bound_ld(const LdParams& p, int user, const Rat& rjc_plus_rjr, const Rat& eta) {
    return Rat(std::max(p.n_direct(user), p.n_cross_in(user))) - rjc_plus_rjr + Rat(2) * eta / Rat(3);
}

std::optional<std::pair<Rat, Rat>> ne_hk_feasible(const LdParams& p, const RatePair& r) {
    const int n11 = p.n11, n22 = p.n22, n12 = p.n12, n21 = p.n21;
    if (r.r1 < Rat(pos(n11 - n12)) || r.r2 < Rat(pos(n22 - n21))) return std::nullopt;

    // Every remaining row touches exactly one of the random rates, so the
    // feasible set is a product of intervals.
    Rat hi1 = Rat(n21);
    hi1 = std::min(hi1, Rat(std::max(n11, n21)) - r.r1);
    hi1 = std::min(hi1, Rat(std::max(n22, n21)) - r.r2);
    hi1 = std::min(hi1, Rat(std::max(n22, n21) + pos(n11 - n21)) - r.r1 - r.r2);
    Rat hi2 = Rat(n12);
    hi2 = std::min(hi2, Rat(std::max(n11, n12)) - r.r1);
    hi2 = std::min(hi2, Rat(std::max(n22, n12)) - r.r2);
    hi2 = std::min(hi2, Rat(std::max(n11, n12) + pos(n22 - n12)) - r.r1 - r.r2);
    if (hi1 < 0 || hi2 < 0) return std::nullopt;
    return std::make_pair(hi1, hi2);
}

std::string regime_label(int n, int m) {
    if (n <= 0) return "undefined";
    const Rat alpha(m, n);
    if (alpha <= Rat(1, 2)) return "very weak";
    if (alpha <= Rat(2, 3)) return "weak";
    if (alpha <= 1) return "moderate";
    if (alpha <= 2) return "strong";
    return "very strong";
}

}  // namespace icfb
