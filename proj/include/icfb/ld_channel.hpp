#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "icfb/errors.hpp"

namespace icfb {

// Deterministic channel gains: n11/n22 direct signal levels, n12/n21 the
// interference level from the other transmitter (first index = receiver).
struct LdParams {
    int n11 = 0, n22 = 0, n12 = 0, n21 = 0;

    int q() const { return std::max(std::max(n11, n22), std::max(n12, n21)); }

    int n_direct(int user) const { return user == 1 ? n11 : n22; }
    // interference seen AT receiver `user`
    int n_cross_in(int user) const { return user == 1 ? n12 : n21; }
    // interference CAUSED BY transmitter `user`
    int n_cross_out(int user) const { return user == 1 ? n21 : n12; }
};

// q bits, index 0 = most significant level.
class BinWord {
  public:
    BinWord() = default;
    explicit BinWord(int q) : bits_(static_cast<std::size_t>(q), 0) {}

    int size() const { return static_cast<int>(bits_.size()); }
    uint8_t get(int i) const { return bits_[static_cast<std::size_t>(i)]; }
    void set(int i, uint8_t v) { bits_[static_cast<std::size_t>(i)] = v & 1; }
    bool is_zero() const;

    BinWord operator^(const BinWord& o) const;
    bool operator==(const BinWord& o) const { return bits_ == o.bits_; }

    const std::vector<uint8_t>& bits() const { return bits_; }

  private:
    std::vector<uint8_t> bits_;
};

// Lower-shift by k: level i of the result is level i-k of w; the k lowest
// levels of w are discarded and the top k filled with zeros.
BinWord shift_down(const BinWord& w, int k);

// y1 = S^(q-n11) x1 + S^(q-n12) x2,  y2 = S^(q-n21) x1 + S^(q-n22) x2 over GF(2).
std::pair<BinWord, BinWord> channel_step(const LdParams& p, const BinWord& x1, const BinWord& x2);

struct LevelRange {
    int offset = 0;  // position from the top of the used span
    int size = 0;
};

// Input split (C, P, D) with the C1/C2, P1/P2 refinements, plus the output
// split (Y_U, Y_D). Offsets of input ranges are within the transmitter's used
// span of max(n_ii, n_ji) levels; output offsets are within the q-level word.
struct LevelDecomposition {
    LevelRange c, p, d, c1, c2, p1, p2;
    LevelRange y_u, y_d;
};

LevelDecomposition level_decomposition(const LdParams& p, int user);

}  // namespace icfb
