#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "icfb/ld_channel.hpp"
#include "icfb/rational.hpp"

namespace icfb {

enum class PresetKind { TreatInterferenceAsNoise, FeedbackCancel, StrongRelay, RandomJam };

// A fixed transmission schedule. FeedbackCancel(user) re-transmits the bits
// that interfered at its own receiver one channel use earlier; StrongRelay(user)
// is the strong-interference scheme where the other pair relays everything.
struct SchemePreset {
    PresetKind kind = PresetKind::TreatInterferenceAsNoise;
    int user = 0;  // acting user for FeedbackCancel / StrongRelay
    int block_len1 = 1, block_len2 = 1;
    std::uint64_t seed = 0;

    static SchemePreset tin(int n);
    static SchemePreset fb_cancel(int user, int n);
    static SchemePreset strong_relay(int user, int n);
    static SchemePreset jam(int n, std::uint64_t seed);

    std::string name() const;
};

struct SimTrace {
    std::vector<BinWord> x1, x2, y1, y2;             // per channel use
    std::array<std::vector<std::uint8_t>, 2> sent;    // fresh bits in transmit order
    std::array<std::vector<std::uint8_t>, 2> decoded; // decoder output, same order
    std::array<std::vector<std::uint8_t>, 2> omega;   // random bits known at the own receiver
    std::array<long long, 2> new_bits{0, 0};
    std::array<long long, 2> omega_bits{0, 0};
    std::array<long long, 2> retransmit_bits{0, 0};
    long long channel_uses = 0;
    long long bit_errors = 0;
    Rat rate1, rate2;

    Rat rate(int user) const { return user == 1 ? rate1 : rate2; }
};

// Throws PresetNotApplicable (naming the violated regime condition) when the
// schedule cannot run error-free on p.
void check_applicable(const LdParams& p, const SchemePreset& preset);

SimTrace run_scheme(const LdParams& p, const SchemePreset& preset, int blocks);

// Per-user shortfall against a target pair: max(target_i - measured_i, 0).
std::pair<Rat, Rat> eta_gap(const SimTrace& trace, const Rat& target1, const Rat& target2);

}  // namespace icfb
