#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "icfb/rational.hpp"

namespace icfb {

// One linear inequality  a . x <= b  over exact rationals.
struct Row {
    std::vector<Rat> a;
    Rat b;
};

// A finite system of half-spaces in up to 8 variables. Rows are kept verbatim;
// semantic operations (containment, equivalence, projection) live elsewhere.
// An all-zero row with b < 0 marks an infeasible system and is preserved.
struct HalfSpaceSystem {
    std::vector<std::string> vars;
    std::vector<Row> rows;

    int dim() const { return static_cast<int>(vars.size()); }

    void add_row(std::vector<Rat> coeffs, Rat bound);
    // a_i x_i <= b given as {index: coeff} pairs
    void add_sparse(std::initializer_list<std::pair<int, Rat>> coeffs, Rat bound);
    void add_lower_bound(int var, Rat bound);  // x_var >= bound
    void add_upper_bound(int var, Rat bound);  // x_var <= bound

    Rat eval_row(std::size_t row, const std::vector<Rat>& x) const;
    bool satisfied(const std::vector<Rat>& x, const Rat& tol = Rat(0)) const;

    // Reorders columns so that vars == names; every name must be present.
    HalfSpaceSystem with_var_order(const std::vector<std::string>& names) const;
};

// Row concatenation; dims and variable names must match.
HalfSpaceSystem intersect(const HalfSpaceSystem& a, const HalfSpaceSystem& b);

// Exact Fourier-Motzkin projection eliminating one variable. Combines every
// (positive, negative) coefficient pair, keeps zero-coefficient rows, reduces
// each result to a primitive integer row, and drops rows implied by a single
// other row (same normalized coefficients, slacker bound). Infeasibility
// surfaces as an all-zero row with negative bound.
HalfSpaceSystem fm_eliminate(const HalfSpaceSystem& s, int var_index);

// Scales a row so coefficients and bound are coprime integers, sign preserved.
Row normalize_row(Row r);

}  // namespace icfb
