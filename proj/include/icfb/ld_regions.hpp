#pragma once

#include <optional>
#include <string>
#include <utility>

#include "icfb/ld_channel.hpp"
#include "icfb/polytope2.hpp"
#include "icfb/rational.hpp"

namespace icfb {

// Achievable-rate bound when interference is treated as noise (per user).
int lower_L(const LdParams& p, int user);
// Largest individual rate at an equilibrium without feedback.
int upper_U(const LdParams& p, int user);

Polytope2 capacity_ldic(const LdParams& p);
Polytope2 ne_region_ldic(const LdParams& p);
Polytope2 capacity_ldic_fb(const LdParams& p);
Polytope2 ne_region_ldic_fb(const LdParams& p, const Rat& eta);

// Smallest R_i over both equilibrium regions matches (L_i - eta)^+ with
// feedback and L_i without. Throws EmptyRegion when either region is empty.
bool inf_rate_check(const LdParams& p, const Rat& eta);

// Closed-form test that every sum-optimal pair of the feedback capacity
// region sits inside the feedback equilibrium region.
bool sum_opt_predicate(const LdParams& p);
int r_dagger(const LdParams& p, int user);
// Independent oracle: take the sum-rate face and test its endpoints.
bool sum_opt_brute(const LdParams& p);

// Six-variable achievable region of the randomized common/private split with
// feedback, variables (R1C, R1R, R1P, R2C, R2R, R2P), nonnegativity included.
HalfSpaceSystem hk_fb_system(const LdParams& p);
// Adjoins R_i = R_iC + R_iP and projects onto (R1, R1R, R2, R2R).
HalfSpaceSystem project_to_rate_form(const HalfSpaceSystem& sys);
// The rate-form system written out by hand (the projection must match it).
HalfSpaceSystem hk_fb_rate_form(const LdParams& p);

Rat deviation_bound_ld(const LdParams& p, int user, const Rat& rjc_plus_rjr, const Rat& eta);

// Random-bit rates making (r1, r2) an equilibrium of the randomized split
// scheme, or nullopt. Decided per-variable by interval intersection; returns
// the componentwise largest witness.
std::optional<std::pair<Rat, Rat>> ne_hk_feasible(const LdParams& p, const RatePair& r);

// Interference regime of a symmetric channel (n, n, m, m) by alpha = m/n.
std::string regime_label(int n, int m);

}  // namespace icfb
