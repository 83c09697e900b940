// Command-line front end: exact equilibrium rate regions for the two-user
// interference channel with output feedback (deterministic model), Gaussian
// inner/outer frontiers, bit-level schedule simulation, and claim sweeps.
#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "icfb/gauss_regions.hpp"
#include "icfb/ld_regions.hpp"
#include "icfb/ld_sim.hpp"
#include "icfb/serialize.hpp"
#include "icfb/sweep.hpp"
#include "icfb/verify.hpp"

namespace {

using namespace icfb;

struct RegionArgs {
    std::string model = "ldic";
    std::string feedback = "on";
    std::string kind = "ne";
    std::string eta = "0";
    int n11 = 0, n22 = 0, n12 = 0, n21 = 0;
    std::string out;
};

int run_region(const RegionArgs& a) {
    const LdParams p{a.n11, a.n22, a.n12, a.n21};
    const Rat eta = rat_parse(a.eta);
    if (eta < 0) throw std::invalid_argument("eta must be nonnegative");
    Polytope2 region;
    if (a.kind == "capacity") {
        region = a.feedback == "on" ? capacity_ldic_fb(p) : capacity_ldic(p);
    } else {
        region = a.feedback == "on" ? ne_region_ldic_fb(p, eta) : ne_region_ldic(p);
    }
    const Json j = polytope_to_json(region);
    if (!a.out.empty()) atomic_write(a.out, j.dump(2) + "\n");
    else std::cout << j.dump(2) << "\n";
    std::printf("region model=%s feedback=%s kind=%s n=(%d,%d,%d,%d) eta=%s vertices=%zu%s%s\n", a.model.c_str(),
                a.feedback.c_str(), a.kind.c_str(), p.n11, p.n22, p.n12, p.n21, rat_str(eta).c_str(),
                region.vertices().size(), a.out.empty() ? "" : " out=", a.out.c_str());
    return 0;
}

struct GaussArgs {
    double snr1 = 0, snr2 = 0, inr12 = 0, inr21 = 0;
    bool db = false;
    double eta = std::log2(6.0);
    int rho_grid = 257;
    int r1_grid = 1024;
    std::string bound = "inner";
    std::string out;
    std::string json_out;
};

int run_gauss(const GaussArgs& a) {
    auto lin = [&](double v) { return a.db ? std::pow(10.0, v / 10.0) : v; };
    const GaussParams p{lin(a.snr1), lin(a.snr2), lin(a.inr12), lin(a.inr21)};
    p.validate();
    Frontier f;
    if (a.bound == "inner") f = sweep(p, inner_fb, a.rho_grid, a.r1_grid);
    else if (a.bound == "outer") f = sweep(p, outer_fb, a.rho_grid, a.r1_grid);
    else if (a.bound == "ne-inner") f = ne_inner(p, a.eta, a.rho_grid, a.r1_grid);
    else f = ne_outer(p, a.eta, a.rho_grid, a.r1_grid);
    if (!a.out.empty()) atomic_write(a.out, frontier_to_csv(f));
    else std::cout << frontier_to_csv(f);
    if (!a.json_out.empty()) atomic_write(a.json_out, frontier_meta_to_json(p, a.eta, f).dump(2) + "\n");
    std::printf("gauss bound=%s snr=(%g,%g) inr=(%g,%g) rho-grid=%d points=%zu%s out=%s\n", a.bound.c_str(), p.snr1,
                p.snr2, p.inr12, p.inr21, a.rho_grid, f.pts.size(), f.empty_region ? " EMPTY" : "", a.out.c_str());
    return 0;
}

struct SimArgs {
    int n11 = 0, n22 = 0, n12 = 0, n21 = 0;
    std::string preset = "tin";
    int block_len = 16;
    int blocks = 1;
    std::uint64_t seed = 0;
    std::string trace_out, rates_out;
};

SchemePreset parse_preset(const std::string& name, int block_len, std::uint64_t seed) {
    SchemePreset ps;
    if (name == "tin") ps = SchemePreset::tin(block_len);
    else if (name == "fb-cancel-1") ps = SchemePreset::fb_cancel(1, block_len);
    else if (name == "fb-cancel-2") ps = SchemePreset::fb_cancel(2, block_len);
    else if (name == "relay-1") ps = SchemePreset::strong_relay(1, block_len);
    else if (name == "relay-2") ps = SchemePreset::strong_relay(2, block_len);
    else if (name == "jam") ps = SchemePreset::jam(block_len, seed);
    else throw std::invalid_argument("unknown preset '" + name + "'");
    ps.seed = seed;
    return ps;
}

int run_simulate(const SimArgs& a) {
    const LdParams p{a.n11, a.n22, a.n12, a.n21};
    const SchemePreset preset = parse_preset(a.preset, a.block_len, a.seed);
    const SimTrace tr = run_scheme(p, preset, a.blocks);
    if (!a.trace_out.empty()) atomic_write(a.trace_out, trace_to_json(p, preset, a.blocks, tr).dump(2) + "\n");
    if (!a.rates_out.empty()) {
        std::string csv = "preset,n11,n22,n12,n21,N,B,r1,r2,errors\n";
        csv += preset.name() + "," + std::to_string(p.n11) + "," + std::to_string(p.n22) + "," +
               std::to_string(p.n12) + "," + std::to_string(p.n21) + "," + std::to_string(a.block_len) + "," +
               std::to_string(a.blocks) + "," + fmt_double(rat_double(tr.rate1)) + "," +
               fmt_double(rat_double(tr.rate2)) + "," + std::to_string(tr.bit_errors) + "\n";
        atomic_write(a.rates_out, csv);
    }
    std::printf("simulate preset=%s n=(%d,%d,%d,%d) N=%d B=%d r1=%s r2=%s errors=%lld\n", preset.name().c_str(),
                p.n11, p.n22, p.n12, p.n21, a.block_len, a.blocks, rat_str(tr.rate1).c_str(),
                rat_str(tr.rate2).c_str(), tr.bit_errors);
    return 0;
}

struct VerifyArgs {
    std::string claim;
    VerifyOptions opt;
    std::string out, csv;
};

int run_verify(const VerifyArgs& a) {
    const VerifyReport rep = run_claim(a.claim, a.opt);
    if (!a.out.empty()) atomic_write(a.out, report_to_json(rep).dump(2) + "\n");
    if (!a.csv.empty()) {
        std::string body;
        for (const auto& line : rep.csv) body += line + "\n";
        atomic_write(a.csv, body);
    }
    std::printf("verify claim=%s cases=%lld failures=%lld wall=%.0fms%s%s\n", rep.claim.c_str(), rep.cases,
                rep.failure_count, rep.wall_ms, rep.notes.empty() ? "" : " ", rep.notes.c_str());
    if (!rep.ok()) {
        std::cout << report_to_json(rep).dump(2) << "\n";
        return 1;
    }
    return 0;
}

struct Fig2Args {
    int n = 1, m = 0;
    std::string eta = "0";
    std::string out;
};

int run_export_fig2(const Fig2Args& a) {
    if (a.n < 1) throw std::invalid_argument("n must be >= 1");
    const LdParams p{a.n, a.n, a.m, a.m};
    const Rat eta = rat_parse(a.eta);
    Json j;
    j["n"] = a.n;
    j["m"] = a.m;
    j["eta"] = rat_str(eta);
    j["regime"] = regime_label(a.n, a.m);
    j["c_ldic"] = polytope_to_json(capacity_ldic(p));
    j["n_ldic"] = polytope_to_json(ne_region_ldic(p));
    j["c_ldic_fb"] = polytope_to_json(capacity_ldic_fb(p));
    j["n_ldic_fb"] = polytope_to_json(ne_region_ldic_fb(p, eta));
    if (!a.out.empty()) atomic_write(a.out, j.dump(2) + "\n");
    else std::cout << j.dump(2) << "\n";
    std::printf("export-fig2 n=%d m=%d regime=\"%s\"%s%s\n", a.n, a.m, regime_label(a.n, a.m).c_str(),
                a.out.empty() ? "" : " out=", a.out.c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"equilibrium rate regions for the two-user interference channel with output feedback"};
    app.require_subcommand(1);

    RegionArgs ra;
    auto* region = app.add_subcommand("region", "exact deterministic-model regions as JSON");
    region->add_option("--model", ra.model)->check(CLI::IsMember({"ldic"}));
    region->add_option("--feedback", ra.feedback)->check(CLI::IsMember({"on", "off"}));
    region->add_option("--kind", ra.kind)->check(CLI::IsMember({"capacity", "ne"}));
    region->add_option("--eta", ra.eta, "slack as a rational p/q");
    region->add_option("--n11", ra.n11)->required()->check(CLI::NonNegativeNumber);
    region->add_option("--n22", ra.n22)->required()->check(CLI::NonNegativeNumber);
    region->add_option("--n12", ra.n12)->required()->check(CLI::NonNegativeNumber);
    region->add_option("--n21", ra.n21)->required()->check(CLI::NonNegativeNumber);
    region->add_option("--out", ra.out);

    GaussArgs ga;
    auto* gauss = app.add_subcommand("gauss", "Gaussian bound frontiers as CSV");
    gauss->add_option("--snr1", ga.snr1)->required();
    gauss->add_option("--snr2", ga.snr2)->required();
    gauss->add_option("--inr12", ga.inr12)->required();
    gauss->add_option("--inr21", ga.inr21)->required();
    gauss->add_flag("--db", ga.db, "interpret the four power ratios as dB");
    gauss->add_option("--eta", ga.eta);
    gauss->add_option("--rho-grid", ga.rho_grid)->check(CLI::Range(2, 100000));
    gauss->add_option("--r1-grid", ga.r1_grid)->check(CLI::Range(2, 1000000));
    gauss->add_option("--bound", ga.bound)->check(CLI::IsMember({"inner", "outer", "ne-inner", "ne-outer"}));
    gauss->add_option("--out", ga.out);
    gauss->add_option("--json", ga.json_out);

    SimArgs sa;
    auto* sim = app.add_subcommand("simulate", "run a bit-level schedule and measure rates");
    sim->add_option("--n11", sa.n11)->required()->check(CLI::NonNegativeNumber);
    sim->add_option("--n22", sa.n22)->required()->check(CLI::NonNegativeNumber);
    sim->add_option("--n12", sa.n12)->required()->check(CLI::NonNegativeNumber);
    sim->add_option("--n21", sa.n21)->required()->check(CLI::NonNegativeNumber);
    sim->add_option("--preset", sa.preset)
        ->check(CLI::IsMember({"tin", "fb-cancel-1", "fb-cancel-2", "relay-1", "relay-2", "jam"}));
    sim->add_option("--block-len", sa.block_len)->check(CLI::PositiveNumber);
    sim->add_option("--blocks", sa.blocks)->check(CLI::PositiveNumber);
    sim->add_option("--seed", sa.seed);
    sim->add_option("--trace-out", sa.trace_out);
    sim->add_option("--rates-out", sa.rates_out);

    VerifyArgs va;
    va.opt.jobs = default_jobs();
    auto* verify = app.add_subcommand("verify", "sweep a structural claim; exit 1 on any failure");
    verify->add_option("--claim", va.claim)->required()->check(CLI::IsMember(claim_names()));
    verify->add_option("--max-n", va.opt.max_n)->check(CLI::Range(0, 8));
    verify->add_option("--samples", va.opt.samples)->check(CLI::PositiveNumber);
    verify->add_option("--tol", va.opt.tol);
    verify->add_option("--rho-grid", va.opt.rho_grid)->check(CLI::Range(2, 100000));
    verify->add_option("--grid", va.opt.grid_points)->check(CLI::Range(2, 1000));
    verify->add_option("--jobs", va.opt.jobs)->check(CLI::Range(1, 1024));
    verify->add_option("--seed", va.opt.seed);
    verify->add_option("--out", va.out, "write the report JSON here");
    verify->add_option("--csv", va.csv, "write per-case results here");

    Fig2Args fa;
    auto* fig2 = app.add_subcommand("export-fig2", "four-region bundle for a symmetric channel");
    fig2->add_option("--n", fa.n)->required()->check(CLI::PositiveNumber);
    fig2->add_option("--m", fa.m)->required()->check(CLI::NonNegativeNumber);
    fig2->add_option("--eta", fa.eta);
    fig2->add_option("--out", fa.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (region->parsed()) return run_region(ra);
        if (gauss->parsed()) return run_gauss(ga);
        if (sim->parsed()) return run_simulate(sa);
        if (verify->parsed()) return run_verify(va);
        if (fig2->parsed()) return run_export_fig2(fa);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
