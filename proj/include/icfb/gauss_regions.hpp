#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "icfb/errors.hpp"

namespace icfb {

// Linear power ratios (unit transmit power). inr12 is the interference seen
// at receiver 1, mirroring the deterministic-model index convention.
struct GaussParams {
    double snr1 = 1, snr2 = 1, inr12 = 1, inr21 = 1;

    double snr(int user) const { return user == 1 ? snr1 : snr2; }
    double inr_in(int user) const { return user == 1 ? inr12 : inr21; }
    double inr_out(int user) const { return user == 1 ? inr21 : inr12; }
    void validate() const;
};

inline double log2p(double x) { return std::log2(x); }
inline double pos(double x) { return x > 0 ? x : 0.0; }

double gauss_L(const GaussParams& p, int user);
double gauss_U(const GaussParams& p, int user);

// One correlation slice of a Gaussian bound: six rows (two per rate, two on
// the sum) plus nonnegativity. Rows that evaluate negative are clamped to 0
// and flagged instead of emptying the region.
struct GaussRegion {
    double rho = 0;
    std::array<double, 2> r1_rows{}, r2_rows{}, sum_rows{};
    bool clamped = false;

    double r1_max() const { return pos(std::min(r1_rows[0], r1_rows[1])); }
    double r2_max() const { return pos(std::min(r2_rows[0], r2_rows[1])); }
    double sum_max() const { return pos(std::min(sum_rows[0], sum_rows[1])); }

    bool contains(double r1, double r2, double tol) const;
    // Extreme points of {0 <= r, r1 <= R1, r2 <= R2, r1 + r2 <= S}.
    std::vector<std::array<double, 2>> vertices() const;
};

GaussRegion inner_fb(const GaussParams& p, double rho);
GaussRegion outer_fb(const GaussParams& p, double rho);

struct GaussBox {
    double lo1 = 0, lo2 = 0;
    bool below_theorem_eta = false;  // eta under log2(6): allowed, flagged
};

GaussBox ne_box(const GaussParams& p, double eta);

struct FrontierPoint {
    double r1, r2;
    double rho;  // grid value attaining r2 at this r1
};

// Pareto (upper-right) boundary of the union over the correlation grid,
// sampled on a shared r1 grid. Region semantics: downward closure of pts.
struct Frontier {
    std::vector<FrontierPoint> pts;  // r1 strictly increasing, r2 nonincreasing
    double box_lo1 = 0, box_lo2 = 0;
    int rho_grid = 0, r1_grid = 0;
    std::string builder;
    bool empty_region = false;

    bool contains(double r1, double r2, double tol) const;
};

using RegionBuilder = std::function<GaussRegion(const GaussParams&, double)>;

Frontier sweep(const GaussParams& p, const RegionBuilder& builder, int grid_size, int r1_grid = 1024);

Frontier ne_inner(const GaussParams& p, double eta, int grid_size, int r1_grid = 1024);
Frontier ne_outer(const GaussParams& p, double eta, int grid_size, int r1_grid = 1024);

// Every outer equilibrium frontier point, pulled back by two bits per user,
// lands inside the inner equilibrium region (within tol).
bool two_bit_gap_check(const GaussParams& p, int grid_size, double tol);

double deviation_bound_gauss(const GaussParams& p, int user, double rjc_plus_rjr);
double delta_bound(const GaussParams& p, int user, double rho);

double lambda_ip(const GaussParams& p, int user);

struct RealRow {
    std::array<double, 6> a{};
    double b = 0;
    bool clamped = false;
};

// Six-variable achievable system of the randomized split scheme at a given
// correlation, variables (R1C, R1R, R1P, R2C, R2R, R2P).
struct RealSystem6 {
    std::vector<std::string> vars;
    std::vector<RealRow> rows;
    bool any_clamped = false;
};

RealSystem6 gauss_hk_system(const GaussParams& p, double rho);

// Random-bit rates satisfying the equilibrium rate-form system at (r1, r2),
// decided by interval intersection; componentwise largest witness.
std::optional<std::pair<double, double>> ne_fm_feasible(const GaussParams& p, double rho, double r1, double r2,
                                                        double tol = 1e-9);

}  // namespace icfb
