#include "icfb/ld_channel.hpp"

#include <algorithm>

namespace icfb {

bool BinWord::is_zero() const {
    return std::all_of(bits_.begin(), bits_.end(), [](uint8_t b) { return b == 0; });
}

BinWord BinWord::operator^(const BinWord& o) const {
    if (size() != o.size()) throw DimensionMismatch("xor of words with different lengths");
    BinWord out(size());
    for (int i = 0; i < size(); ++i) out.set(i, get(i) ^ o.get(i));
    return out;
}

BinWord shift_down(const BinWord& w, int k) {
    BinWord out(w.size());
    for (int i = k; i < w.size(); ++i) out.set(i, w.get(i - k));
    return out;
}

std::pair<BinWord, BinWord> channel_step(const LdParams& p, const BinWord& x1, const BinWord& x2) {
    const int q = p.q();
    if (x1.size() != q || x2.size() != q)
        throw DimensionMismatch("channel_step: words must have length q = " + std::to_string(q));
    BinWord y1 = shift_down(x1, q - p.n11) ^ shift_down(x2, q - p.n12);
    BinWord y2 = shift_down(x1, q - p.n21) ^ shift_down(x2, q - p.n22);
    return {std::move(y1), std::move(y2)};
}

LevelDecomposition level_decomposition(const LdParams& p, int user) {
    const int nii = p.n_direct(user);
    const int nij = p.n_cross_in(user);   // interference at this receiver
    const int nji = p.n_cross_out(user);  // this transmitter seen at the other receiver
    auto pos = [](int v) { return std::max(v, 0); };

    LevelDecomposition d;
    d.c = {0, std::min(nii, nji)};
    d.p = {d.c.size, pos(nii - nji)};
    d.d = {d.c.size, pos(nji - nii)};
    d.c1 = {0, std::min(pos(nii - nij), nji)};
    d.c2 = {d.c1.size, d.c.size - d.c1.size};
    d.p1 = {d.p.offset, pos(pos(nii - nji) - nij)};
    d.p2 = {d.p.offset + d.p1.size, std::min(pos(nii - nji), nij)};
    d.y_u = {p.q() - nii, pos(nii - nij)};
    d.y_d = {p.q() - nij, nij};
    return d;
}

}  // namespace icfb
