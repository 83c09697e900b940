#include <doctest.h>

#include <random>

#include "icfb/ld_regions.hpp"
#include "icfb/ld_sim.hpp"
#include "icfb/serialize.hpp"

using namespace icfb;

TEST_CASE("treat-interference-as-noise hits (4,4)") {
    const SimTrace t = run_scheme(LdParams{6, 6, 2, 2}, SchemePreset::tin(16), 1);
    CHECK(t.rate1 == 4);
    CHECK(t.rate2 == 4);
    CHECK(t.bit_errors == 0);
    auto [g1, g2] = eta_gap(t, Rat(4), Rat(4));
    CHECK(g1 == 0);
    CHECK(g2 == 0);
}

TEST_CASE("feedback cancellation trades 4/N for full rate") {
    const SimTrace t = run_scheme(LdParams{6, 6, 2, 2}, SchemePreset::fb_cancel(2, 16), 1);
    CHECK(t.rate1 == 6);
    CHECK(t.rate2 == make_rat(4 * 16 - 4, 16));
    CHECK(t.bit_errors == 0);
    auto [g1, g2] = eta_gap(t, Rat(6), Rat(4));
    CHECK(g1 == 0);
    CHECK(g2 == make_rat(4, 16));

    // the mirrored preset swaps roles
    const SimTrace m = run_scheme(LdParams{6, 6, 2, 2}, SchemePreset::fb_cancel(1, 8), 1);
    CHECK(m.rate2 == 6);
    CHECK(m.rate1 == make_rat(4 * 8 - 4, 8));
    CHECK(m.bit_errors == 0);
}

TEST_CASE("strong-interference relay path") {
    const SimTrace t = run_scheme(LdParams{2, 2, 3, 3}, SchemePreset::strong_relay(1, 8), 1);
    CHECK(t.rate1 == make_rat(3 * 7, 8));
    CHECK(t.rate2 == 0);
    CHECK(t.bit_errors == 0);
}

TEST_CASE("jamming carries no information") {
    const SimTrace t = run_scheme(LdParams{2, 2, 3, 3}, SchemePreset::jam(8, 99), 2);
    CHECK(t.rate1 == 0);
    CHECK(t.rate2 == 0);
    CHECK(t.bit_errors == 0);
    CHECK(t.omega_bits[0] == 3 * 8 * 2);
    auto [g1, g2] = eta_gap(t, Rat(0), Rat(0));
    CHECK(g1 == 0);
    CHECK(g2 == 0);
}

TEST_CASE("identical seeds give byte-identical traces") {
    const LdParams p{3, 3, 4, 4};
    const SimTrace a = run_scheme(p, SchemePreset::jam(8, 7), 2);
    const SimTrace b = run_scheme(p, SchemePreset::jam(8, 7), 2);
    CHECK(trace_to_json(p, SchemePreset::jam(8, 7), 2, a).dump() == trace_to_json(p, SchemePreset::jam(8, 7), 2, b).dump());
    const SimTrace c = run_scheme(p, SchemePreset::jam(8, 8), 2);
    CHECK(trace_to_json(p, SchemePreset::jam(8, 8), 2, c).dump() != trace_to_json(p, SchemePreset::jam(8, 7), 2, a).dump());
}

TEST_CASE("inapplicable presets are rejected with the violated condition") {
    CHECK_THROWS_AS(run_scheme(LdParams{6, 6, 2, 2}, SchemePreset::strong_relay(1, 8), 1), PresetNotApplicable);
    CHECK_THROWS_AS(run_scheme(LdParams{2, 2, 3, 3}, SchemePreset::fb_cancel(2, 8), 1), PresetNotApplicable);
    CHECK_THROWS_WITH_AS(run_scheme(LdParams{6, 6, 2, 2}, SchemePreset::strong_relay(1, 8), 1),
                         doctest::Contains("n_cross(1) >= n_direct(2)"), PresetNotApplicable);
    CHECK_THROWS_AS(run_scheme(LdParams{6, 6, 2, 2}, SchemePreset::tin(0), 1), PresetNotApplicable);
}

TEST_CASE("every applicable preset decodes error-free and lands in the feedback capacity region") {
    std::mt19937_64 rng(2024);
    auto rnd = [&](int hi) { return static_cast<int>(rng() % static_cast<unsigned>(hi + 1)); };
    int checked = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const LdParams p{rnd(8), rnd(8), rnd(8), rnd(8)};
        if (p.q() == 0) continue;
        const int N = 1 + rnd(31);
        const int B = 1 + rnd(3);
        const std::vector<SchemePreset> presets = {
            SchemePreset::tin(N),          SchemePreset::fb_cancel(1, N),    SchemePreset::fb_cancel(2, N),
            SchemePreset::strong_relay(1, N), SchemePreset::strong_relay(2, N), SchemePreset::jam(N, rng())};
        const Polytope2 cap = capacity_ldic_fb(p);
        for (const SchemePreset& ps : presets) {
            try {
                check_applicable(p, ps);
            } catch (const PresetNotApplicable&) {
                continue;
            }
            const SimTrace t = run_scheme(p, ps, B);
            CHECK(t.bit_errors == 0);
            CHECK(static_cast<long long>(t.decoded[0].size()) == t.new_bits[0]);
            CHECK(static_cast<long long>(t.decoded[1].size()) == t.new_bits[1]);
            CHECK(contains_point(cap, RatePair{t.rate1, t.rate2}));
            ++checked;
        }
    }
    CHECK(checked > 300);
}
