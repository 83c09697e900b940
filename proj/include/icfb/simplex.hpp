#pragma once

#include <vector>

#include "icfb/halfspace.hpp"
#include "icfb/rational.hpp"

namespace icfb {

enum class LpStatus { Optimal, Unbounded, Infeasible };

struct LpResult {
    LpStatus status;
    Rat value;               // objective at optimum (valid when Optimal)
    std::vector<Rat> point;  // an optimal point (valid when Optimal)
};

// Exact rational simplex: maximize objective . x subject to sys (x free).
// Two-phase with Bland's rule, so it terminates on every input.
LpResult lp_maximize(const HalfSpaceSystem& sys, const std::vector<Rat>& objective);

bool lp_feasible(const HalfSpaceSystem& sys);

// True iff row . x <= bound holds on every feasible point of sys.
// An infeasible system implies every row.
bool lp_implies(const HalfSpaceSystem& sys, const std::vector<Rat>& row, const Rat& bound);

// True iff the feasible sets coincide, decided by mutual row implication.
bool systems_equivalent(const HalfSpaceSystem& a, const HalfSpaceSystem& b);

}  // namespace icfb
