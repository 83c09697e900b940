#include "icfb/gauss_regions.hpp"

#include <algorithm>
#include <cmath>

namespace icfb {

void GaussParams::validate() const {
    for (double v : {snr1, snr2, inr12, inr21})
        if (!(v > 0) || !std::isfinite(v)) throw std::invalid_argument("SNR/INR values must be positive and finite");
}

double gauss_L(const GaussParams& p, int user) {
    return log2p(1 + p.snr(user) / (1 + p.inr_in(user)));
}

double gauss_U(const GaussParams& p, int user) {
    const double si = p.snr(user), sj = p.snr(3 - user);
    const double iij = p.inr_in(user), iji = p.inr_in(3 - user);
    const double M = std::max(iji, sj / iij);
    const double t = log2p(1 + si + iij) - log2p(1 + pos(sj - M) / (1 + iji + M));
    return std::min(t, log2p(1 + si));
}

bool GaussRegion::contains(double r1, double r2, double tol) const {
    return r1 >= -tol && r2 >= -tol && r1 <= r1_max() + tol && r2 <= r2_max() + tol &&
           r1 + r2 <= sum_max() + tol;
}

std::vector<std::array<double, 2>> GaussRegion::vertices() const {
    const double R1 = r1_max(), R2 = r2_max(), S = sum_max();
    std::vector<std::array<double, 2>> vs;
    vs.push_back({0, 0});
    vs.push_back({std::min(R1, S), 0.0});
    vs.push_back({0.0, std::min(R2, S)});
    if (R1 + R2 <= S) {
        vs.push_back({R1, R2});
    } else {
        if (R1 <= S) vs.push_back({R1, S - R1});
        if (R2 <= S) vs.push_back({S - R2, R2});
    }
    return vs;
}

namespace {

GaussRegion clamp_region(GaussRegion g) {
    for (auto* rows : {&g.r1_rows, &g.r2_rows, &g.sum_rows}) {
        for (double& v : *rows) {
            if (v < 0) {
                v = 0;
                g.clamped = true;
            }
        }
    }
    return g;
}

double gfun(double s, double i, double rho) { return log2p(1 + s + i + 2 * rho * std::sqrt(s * i)); }

}  // namespace

GaussRegion inner_fb(const GaussParams& p, double rho) {
    p.validate();
    GaussRegion g;
    g.rho = rho;
    g.r1_rows[0] = gfun(p.snr1, p.inr12, rho) - 1;
    g.r1_rows[1] = log2p(1 + (1 - rho) * p.inr21) + log2p(2 + p.snr1 / p.inr21) - 2;
    g.r2_rows[0] = gfun(p.snr2, p.inr21, rho) - 1;
    g.r2_rows[1] = log2p(1 + (1 - rho) * p.inr12) + log2p(2 + p.snr2 / p.inr12) - 2;
    g.sum_rows[0] = log2p(2 + p.snr1 / p.inr21) + gfun(p.snr2, p.inr21, rho) - 2;
    g.sum_rows[1] = log2p(2 + p.snr2 / p.inr12) + gfun(p.snr1, p.inr12, rho) - 2;
    return clamp_region(g);
}

GaussRegion outer_fb(const GaussParams& p, double rho) {
    p.validate();
    const double rr = 1 - rho * rho;
    GaussRegion g;
    g.rho = rho;
    g.r1_rows[0] = gfun(p.snr1, p.inr12, rho);
    g.r1_rows[1] = log2p(1 + rr * p.inr21) + log2p(1 + rr * p.snr1 / (1 + rr * p.inr21));
    g.r2_rows[0] = gfun(p.snr2, p.inr21, rho);
    g.r2_rows[1] = log2p(1 + rr * p.inr12) + log2p(1 + rr * p.snr2 / (1 + rr * p.inr12));
    g.sum_rows[0] = log2p(1 + rr * p.snr1 / (1 + rr * p.inr21)) + gfun(p.snr2, p.inr21, rho);
    g.sum_rows[1] = log2p(1 + rr * p.snr2 / (1 + rr * p.inr12)) + gfun(p.snr1, p.inr12, rho);
    return clamp_region(g);
}

GaussBox ne_box(const GaussParams& p, double eta) {
    GaussBox b;
    b.lo1 = pos(gauss_L(p, 1) - eta);
    b.lo2 = pos(gauss_L(p, 2) - eta);
    b.below_theorem_eta = eta < std::log2(6.0);
    return b;
}

bool Frontier::contains(double r1, double r2, double tol) const {
    if (empty_region || pts.empty()) return false;
    // pts sorted by r1; the first point at or right of r1 - tol carries the
    // largest r2 among them.
    auto it = std::lower_bound(pts.begin(), pts.end(), r1 - tol,
                               [](const FrontierPoint& fp, double v) { return fp.r1 < v; });
    if (it == pts.end()) return false;
    return it->r2 >= r2 - tol;
}

namespace {

Frontier sweep_impl(const GaussParams& p, const RegionBuilder& builder, int grid_size, int r1_grid,
                    double box_lo1, double box_lo2, const std::string& name) {
    if (grid_size < 2) throw std::invalid_argument("rho grid must have at least 2 points");
    if (r1_grid < 2) throw std::invalid_argument("r1 grid must have at least 2 points");

    std::vector<GaussRegion> slices;
    slices.reserve(static_cast<std::size_t>(grid_size));
    for (int k = 0; k < grid_size; ++k)
        slices.push_back(builder(p, static_cast<double>(k) / (grid_size - 1)));

    const double span = log2p(1 + p.snr1 + p.inr12 + 2 * std::sqrt(p.snr1 * p.inr12)) + 1;
    Frontier f;
    f.rho_grid = grid_size;
    f.r1_grid = r1_grid;
    f.builder = name;
    f.box_lo1 = box_lo1;
    f.box_lo2 = box_lo2;
    auto value_at = [&](const GaussRegion& g, double r1) {
        if (r1 > g.r1_max() + 1e-12) return -1.0;
        return std::min(g.r2_max(), g.sum_max() - r1);
    };
    for (int k = 0; k < r1_grid; ++k) {
        const double r1 = span * k / (r1_grid - 1);
        if (r1 < box_lo1 - 1e-12) continue;
        double best = -1, best_rho = 0;
        for (const GaussRegion& g : slices) {
            const double v = value_at(g, r1);
            if (v > best) {
                best = v;
                best_rho = g.rho;
            }
        }
        if (best < 0) continue;
        // The value is unimodal in the correlation (a rising row meets a
        // falling one), so the grid argmax brackets the true optimum within
        // one step; ternary refinement removes the discretization error.
        double lo = std::max(0.0, best_rho - 1.0 / (grid_size - 1));
        double hi = std::min(1.0, best_rho + 1.0 / (grid_size - 1));
        for (int it = 0; it < 60; ++it) {
            const double m1 = lo + (hi - lo) / 3, m2 = hi - (hi - lo) / 3;
            if (value_at(builder(p, m1), r1) < value_at(builder(p, m2), r1)) lo = m1;
            else hi = m2;
        }
        const double rho_ref = (lo + hi) / 2;
        const double refined = value_at(builder(p, rho_ref), r1);
        if (refined > best) {
            best = refined;
            best_rho = rho_ref;
        }
        if (best < box_lo2 - 1e-12) continue;
        f.pts.push_back(FrontierPoint{r1, pos(best), best_rho});
    }
    f.empty_region = f.pts.empty();
    return f;
}

}  // namespace

Frontier sweep(const GaussParams& p, const RegionBuilder& builder, int grid_size, int r1_grid) {
    return sweep_impl(p, builder, grid_size, r1_grid, 0, 0, "sweep");
}

Frontier ne_inner(const GaussParams& p, double eta, int grid_size, int r1_grid) {
    const GaussBox b = ne_box(p, eta);
    return sweep_impl(p, inner_fb, grid_size, r1_grid, b.lo1, b.lo2, "ne-inner");
}

Frontier ne_outer(const GaussParams& p, double eta, int grid_size, int r1_grid) {
    const GaussBox b = ne_box(p, eta);
    return sweep_impl(p, outer_fb, grid_size, r1_grid, b.lo1, b.lo2, "ne-outer");
}

bool two_bit_gap_check(const GaussParams& p, int grid_size, double tol) {
    const double eta = std::log2(6.0);
    const Frontier fin = ne_inner(p, eta, grid_size);
    const Frontier fout = ne_outer(p, eta, grid_size);
    if (fout.empty_region) return true;
    if (fin.empty_region) return false;
    for (const FrontierPoint& v : fout.pts)
        if (!fin.contains(pos(v.r1 - 2), pos(v.r2 - 2), tol)) return false;
    return true;
}

double deviation_bound_gauss(const GaussParams& p, int user, double rjc_plus_rjr) {
    return gfun(p.snr(user), p.inr_in(user), 1.0) - rjc_plus_rjr;
}

double delta_bound(const GaussParams& p, int user, double rho) {
    return gfun(p.snr(user), p.inr_in(user), 1.0) - gfun(p.snr(user), p.inr_in(user), rho) + 1;
}

double lambda_ip(const GaussParams& p, int user) {
    if (p.inr_in(user) < p.snr(user)) return std::min(1.0 / p.inr_out(user), 1.0);
    return 0.0;
}

RealSystem6 gauss_hk_system(const GaussParams& p, double rho) {
    p.validate();
    if (rho < 0 || rho > 1) throw std::invalid_argument("rho must be in [0, 1]");
    RealSystem6 s;
    s.vars = {"R1C", "R1R", "R1P", "R2C", "R2R", "R2P"};
    auto add = [&](std::initializer_list<int> idx, double bound) {
        RealRow r;
        for (int i : idx) r.a[static_cast<std::size_t>(i)] = 1;
        if (bound < 0) {
            r.b = 0;
            r.clamped = true;
            s.any_clamped = true;
        } else {
            r.b = bound;
        }
        s.rows.push_back(r);
    };
    for (int u = 1; u <= 2; ++u) {
        const int base = u == 1 ? 0 : 3;
        const int obase = u == 1 ? 3 : 0;
        add({base + 0, base + 1}, log2p(1 + (1 - rho) * p.inr_out(u)) - 1);
        add({base + 2}, log2p(2 + p.snr(u) / p.inr_out(u)) - 1);
        add({base + 0, base + 2, obase + 0, obase + 1}, gfun(p.snr(u), p.inr_in(u), rho) - 1);
    }
    for (int v = 0; v < 6; ++v) {
        RealRow r;
        r.a[static_cast<std::size_t>(v)] = -1;
        r.b = 0;
        s.rows.push_back(r);
    }
    return s;
}

std::optional<std::pair<double, double>> ne_fm_feasible(const GaussParams& p, double rho, double r1, double r2,
                                                        double tol) {
    p.validate();
    if (rho < 0 || rho > 1) throw std::invalid_argument("rho must be in [0, 1]");
    const double g1 = gfun(p.snr1, p.inr12, rho);
    const double g2 = gfun(p.snr2, p.inr21, rho);
    const double f1 = log2p(1 + (1 - rho) * p.inr21);  // bounds R1R
    const double f2 = log2p(1 + (1 - rho) * p.inr12);  // bounds R2R
    const double h1 = log2p(2 + p.snr1 / p.inr21);
    const double h2 = log2p(2 + p.snr2 / p.inr12);
    const double eta = std::log2(6.0);

    if (r1 < gauss_L(p, 1) - eta - tol) return std::nullopt;
    if (r2 < gauss_L(p, 2) - eta - tol) return std::nullopt;

    // Each remaining row touches exactly one random rate: two intervals.
    const double lo1 = std::max({0.0, g2 - f1 - r2, h1 + g2 - 2 - r1 - r2});
    const double hi1 = std::min({f1 - 1, h1 + f1 - 2 - r1, g2 - 1 - r2});
    const double lo2 = std::max({0.0, g1 - f2 - r1, h2 + g1 - 2 - r1 - r2});
    const double hi2 = std::min({f2 - 1, g1 - 1 - r1, h2 + f2 - 1 - r2});
    if (lo1 > hi1 + tol || lo2 > hi2 + tol) return std::nullopt;
    return std::make_pair(std::max(hi1, lo1), std::max(hi2, lo2));
}

}  // namespace icfb
