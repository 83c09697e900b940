#include "icfb/ld_sim.hpp"

#include <algorithm>
#include <random>

namespace icfb {
namespace {

int pos(int v) { return std::max(v, 0); }

struct BitSource {
    std::uint64_t counter = 0;
    std::uint8_t next() { return static_cast<std::uint8_t>(counter++ & 1); }  // 0,1,0,1,...
};

}  // namespace

SchemePreset SchemePreset::tin(int n) { return SchemePreset{PresetKind::TreatInterferenceAsNoise, 0, n, n, 0}; }
SchemePreset SchemePreset::fb_cancel(int user, int n) { return SchemePreset{PresetKind::FeedbackCancel, user, n, n, 0}; }
SchemePreset SchemePreset::strong_relay(int user, int n) { return SchemePreset{PresetKind::StrongRelay, user, n, n, 0}; }
SchemePreset SchemePreset::jam(int n, std::uint64_t seed) { return SchemePreset{PresetKind::RandomJam, 0, n, n, seed}; }

std::string SchemePreset::name() const {
    switch (kind) {
        case PresetKind::TreatInterferenceAsNoise: return "tin";
        case PresetKind::FeedbackCancel: return "fb-cancel-" + std::to_string(user);
        case PresetKind::StrongRelay: return "relay-" + std::to_string(user);
        case PresetKind::RandomJam: return "jam";
    }
    return "?";
}

void check_applicable(const LdParams& p, const SchemePreset& preset) {
    const int N = preset.user == 1 ? preset.block_len1 : preset.block_len2;
    if (preset.block_len1 < 1 || preset.block_len2 < 1)
        throw PresetNotApplicable("block length must be >= 1");
    if (preset.kind == PresetKind::FeedbackCancel || preset.kind == PresetKind::StrongRelay) {
        if (preset.user != 1 && preset.user != 2) throw PresetNotApplicable("preset user must be 1 or 2");
    }
    (void)N;
    if (preset.kind == PresetKind::FeedbackCancel) {
        const int i = preset.user, j = 3 - i;
        const int m = p.n_cross_in(i);
        if (p.n_cross_in(j) > m)
            throw PresetNotApplicable(preset.name() + ": requires n_cross(" + std::to_string(j) + ") <= n_cross(" +
                                      std::to_string(i) + ") so the re-transmission covers the interference at receiver " +
                                      std::to_string(j));
        if (m + p.n_cross_in(j) > p.n_direct(j))
            throw PresetNotApplicable(preset.name() + ": requires n_cross(" + std::to_string(i) + ") + n_cross(" +
                                      std::to_string(j) + ") <= n_direct(" + std::to_string(j) +
                                      ") so re-transmitted bits are clean at receiver " + std::to_string(j));
        if (2 * m > p.n_direct(i))
            throw PresetNotApplicable(preset.name() + ": requires 2*n_cross(" + std::to_string(i) + ") <= n_direct(" +
                                      std::to_string(i) + ") so re-transmissions arrive clean at receiver " +
                                      std::to_string(i));
    }
    if (preset.kind == PresetKind::StrongRelay) {
        const int i = preset.user, j = 3 - i;
        if (p.n_cross_in(i) < p.n_direct(j))
            throw PresetNotApplicable(preset.name() + ": strong-interference scheme requires n_cross(" +
                                      std::to_string(i) + ") >= n_direct(" + std::to_string(j) + ")");
    }
}

namespace {

struct Runner {
    const LdParams& p;
    const SchemePreset& preset;
    int q;
    SimTrace tr;

    explicit Runner(const LdParams& pp, const SchemePreset& pr) : p(pp), preset(pr), q(pp.q()) {}

    void step(const BinWord& x1, const BinWord& x2) {
        auto [y1, y2] = channel_step(p, x1, x2);
        tr.x1.push_back(x1);
        tr.x2.push_back(x2);
        tr.y1.push_back(std::move(y1));
        tr.y2.push_back(std::move(y2));
        ++tr.channel_uses;
    }

    const BinWord& x_of(int user, std::size_t t) const { return user == 1 ? tr.x1[t] : tr.x2[t]; }
    const BinWord& y_of(int user, std::size_t t) const { return user == 1 ? tr.y1[t] : tr.y2[t]; }

    // Cross component of the received word: what the other transmitter contributed.
    BinWord cross_at(int user, std::size_t t) const {
        return y_of(user, t) ^ shift_down(x_of(user, t), q - p.n_direct(user));
    }

    void finish() {
        for (int u = 0; u < 2; ++u) {
            const auto& s = tr.sent[u];
            const auto& d = tr.decoded[u];
            for (std::size_t k = 0; k < std::min(s.size(), d.size()); ++k)
                if (s[k] != d[k]) ++tr.bit_errors;
            tr.bit_errors += static_cast<long long>(std::max(s.size(), d.size()) - std::min(s.size(), d.size()));
            tr.new_bits[u] = static_cast<long long>(s.size());
        }
        tr.rate1 = tr.channel_uses ? Rat(BigInt(tr.decoded[0].size()), BigInt(tr.channel_uses)) : Rat(0);
        tr.rate2 = tr.channel_uses ? Rat(BigInt(tr.decoded[1].size()), BigInt(tr.channel_uses)) : Rat(0);
    }
};

SimTrace run_tin(const LdParams& p, const SchemePreset& preset, int blocks) {
    Runner rr(p, preset);
    const int q = rr.q;
    const int L1 = pos(p.n11 - p.n12), L2 = pos(p.n22 - p.n21);
    const int N = std::max(preset.block_len1, preset.block_len2);
    BitSource src1, src2;
    for (int b = 0; b < blocks; ++b) {
        for (int t = 0; t < N; ++t) {
            BinWord x1(q), x2(q);
            for (int c = 0; c < L1; ++c) { auto bit = src1.next(); x1.set(c, bit); rr.tr.sent[0].push_back(bit); }
            for (int c = 0; c < L2; ++c) { auto bit = src2.next(); x2.set(c, bit); rr.tr.sent[1].push_back(bit); }
            rr.step(x1, x2);
        }
    }
    // Top levels are interference-free: read them off directly.
    for (std::size_t t = 0; t < rr.tr.y1.size(); ++t) {
        for (int c = 0; c < L1; ++c) rr.tr.decoded[0].push_back(rr.tr.y1[t].get(q - p.n11 + c));
        for (int c = 0; c < L2; ++c) rr.tr.decoded[1].push_back(rr.tr.y2[t].get(q - p.n22 + c));
    }
    rr.finish();
    return rr.tr;
}

// User i re-transmits on its top m = n_cross_in(i) levels the bits that
// interfered at its receiver one use earlier; fresh bits ride below. User j
// streams at full rate. The first use has nothing to re-transmit and the last
// use carries only re-transmissions, which is what makes the per-block count
// (n_ii - m) * (N - 1).
SimTrace run_fb_cancel(const LdParams& p, const SchemePreset& preset, int blocks) {
    Runner rr(p, preset);
    const int q = rr.q;
    const int i = preset.user, j = 3 - i;
    const int nii = p.n_direct(i), njj = p.n_direct(j);
    const int m = p.n_cross_in(i);       // re-transmission span
    const int cj = p.n_cross_in(j);      // interference span at receiver j
    const int N = i == 1 ? preset.block_len1 : preset.block_len2;
    BitSource src_i, src_j;

    for (int b = 0; b < blocks; ++b) {
        const std::size_t base = rr.tr.x1.size();
        for (int t = 0; t < N; ++t) {
            BinWord xi(q), xj(q);
            for (int c = 0; c < njj; ++c) { auto bit = src_j.next(); xj.set(c, bit); rr.tr.sent[j - 1].push_back(bit); }
            if (t > 0) {
                // feedback: the cross part of y_i(t-1) holds x_j(t-1)'s top m bits
                BinWord fb = rr.cross_at(i, base + t - 1);
                for (int c = 0; c < m; ++c) xi.set(c, fb.get(q - m + c));
                rr.tr.retransmit_bits[i - 1] += m;
            }
            if (t < N - 1)
                for (int c = m; c < nii; ++c) { auto bit = src_i.next(); xi.set(c, bit); rr.tr.sent[i - 1].push_back(bit); }
            if (i == 1) rr.step(xi, xj); else rr.step(xj, xi);
        }

        // Receiver j: clean bits read off, interfered bits cancelled with the
        // re-transmitted copy it decoded the use before.
        std::vector<std::uint8_t> dec_j;
        for (int t = 0; t < N; ++t) {
            const BinWord& yj = rr.y_of(j, base + t);
            for (int c = 0; c < njj; ++c) {
                std::uint8_t bit = yj.get(q - njj + c);
                if (c >= njj - cj && t > 0) {
                    const int cc = c - (njj - cj);  // interfering bit index in x_i(t)
                    bit ^= dec_j[static_cast<std::size_t>((t - 1) * njj + cc)];
                }
                dec_j.push_back(bit);
            }
        }
        rr.tr.decoded[j - 1].insert(rr.tr.decoded[j - 1].end(), dec_j.begin(), dec_j.end());
        // Receiver i: bits in the clean zone read off; bits under interference
        // cancelled once the re-transmission arrives at t+1.
        for (int t = 0; t < N - 1; ++t) {
            const BinWord& yi = rr.y_of(i, base + t);
            for (int c = m; c < nii; ++c) {
                std::uint8_t bit = yi.get(q - nii + c);
                if (c >= nii - m) {
                    const int cc = c - (nii - m);  // interfering bit of x_j(t)
                    bit ^= rr.y_of(i, base + t + 1).get(q - nii + cc);  // clean re-transmission
                }
                rr.tr.decoded[i - 1].push_back(bit);
            }
        }
    }
    rr.finish();
    return rr.tr;
}

// One pair streams new bits through the relay path created by feedback: the
// other transmitter decodes them from its feedback and repeats them one use
// later; the intended receiver decodes the whole block backwards.
SimTrace run_strong_relay(const LdParams& p, const SchemePreset& preset, int blocks) {
    Runner rr(p, preset);
    const int q = rr.q;
    const int i = preset.user, j = 3 - i;
    const int K = std::min(p.n_cross_in(i), p.n_cross_out(i));
    const int N = i == 1 ? preset.block_len1 : preset.block_len2;
    BitSource src_i;

    for (int b = 0; b < blocks; ++b) {
        const std::size_t base = rr.tr.x1.size();
        for (int t = 0; t < N; ++t) {
            BinWord xi(q), xj(q);
            if (t < N - 1)
                for (int c = 0; c < K; ++c) { auto bit = src_i.next(); xi.set(c, bit); rr.tr.sent[i - 1].push_back(bit); }
            if (t > 0) {
                BinWord fb = rr.cross_at(j, base + t - 1);  // x_i(t-1) seen at receiver j
                const int span = p.n_cross_in(j);
                for (int c = 0; c < K; ++c) xj.set(c, fb.get(q - span + c));
                rr.tr.retransmit_bits[j - 1] += K;
            }
            if (i == 1) rr.step(xi, xj); else rr.step(xj, xi);
        }

        // Backward decoding at receiver i: the final use is relay-only, which
        // seeds the recursion x_i(t) -> x_j(t) -> x_i(t-1).
        std::vector<std::vector<std::uint8_t>> per_use(static_cast<std::size_t>(std::max(N - 1, 0)));
        BinWord known_xi(q);  // x_i at the use being peeled, starts at x_i(N) = 0
        const int span_i = p.n_cross_in(i);
        for (int t = N - 1; t >= 1; --t) {
            BinWord cross = rr.y_of(i, base + t) ^ shift_down(known_xi, q - p.n_direct(i));
            std::vector<std::uint8_t> bits(static_cast<std::size_t>(K));
            BinWord next_xi(q);
            for (int c = 0; c < K; ++c) {
                bits[static_cast<std::size_t>(c)] = cross.get(q - span_i + c);
                next_xi.set(c, bits[static_cast<std::size_t>(c)]);
            }
            per_use[static_cast<std::size_t>(t - 1)] = std::move(bits);
            known_xi = next_xi;
        }
        for (const auto& bits : per_use)
            rr.tr.decoded[i - 1].insert(rr.tr.decoded[i - 1].end(), bits.begin(), bits.end());
    }
    rr.finish();
    return rr.tr;
}

SimTrace run_jam(const LdParams& p, const SchemePreset& preset, int blocks) {
    Runner rr(p, preset);
    const int q = rr.q;
    const int N = std::max(preset.block_len1, preset.block_len2);
    std::mt19937_64 rng1(preset.seed * 2 + 1), rng2(preset.seed * 2 + 2);
    for (int b = 0; b < blocks; ++b) {
        for (int t = 0; t < N; ++t) {
            BinWord x1(q), x2(q);
            for (int c = 0; c < q; ++c) {
                const std::uint8_t b1 = rng1() & 1, b2 = rng2() & 1;
                x1.set(c, b1);
                x2.set(c, b2);
                rr.tr.omega[0].push_back(b1);
                rr.tr.omega[1].push_back(b2);
            }
            rr.tr.omega_bits[0] += q;
            rr.tr.omega_bits[1] += q;
            rr.step(x1, x2);
        }
    }
    rr.finish();  // no information bits, rates are exactly zero
    return rr.tr;
}

}  // namespace

SimTrace run_scheme(const LdParams& p, const SchemePreset& preset, int blocks) {
    if (blocks < 1) throw PresetNotApplicable("blocks must be >= 1");
    check_applicable(p, preset);
    switch (preset.kind) {
        case PresetKind::TreatInterferenceAsNoise: return run_tin(p, preset, blocks);
        case PresetKind::FeedbackCancel: return run_fb_cancel(p, preset, blocks);
        case PresetKind::StrongRelay: return run_strong_relay(p, preset, blocks);
        case PresetKind::RandomJam: return run_jam(p, preset, blocks);
    }
    throw PresetNotApplicable("unknown preset");
}

std::pair<Rat, Rat> eta_gap(const SimTrace& trace, const Rat& target1, const Rat& target2) {
    return {rat_pos(target1 - trace.rate1), rat_pos(target2 - trace.rate2)};
}

}  // namespace icfb
