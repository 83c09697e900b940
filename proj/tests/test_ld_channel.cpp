#include <doctest.h>

#include <random>

#include "icfb/ld_channel.hpp"

using namespace icfb;

namespace {

BinWord random_word(int q, std::mt19937_64& rng) {
    BinWord w(q);
    for (int i = 0; i < q; ++i) w.set(i, rng() & 1);
    return w;
}

// Explicit q x q lower-shift matrix multiply over GF(2); the oracle for shift_down.
BinWord shift_matrix_apply(const BinWord& w, int k) {
    const int q = w.size();
    std::vector<std::vector<int>> S(static_cast<std::size_t>(q), std::vector<int>(static_cast<std::size_t>(q), 0));
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j)
            if (i == j + k) S[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
    BinWord out(q);
    for (int i = 0; i < q; ++i) {
        int acc = 0;
        for (int j = 0; j < q; ++j) acc ^= S[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] & w.get(j);
        out.set(i, static_cast<std::uint8_t>(acc));
    }
    return out;
}

}  // namespace

TEST_CASE("channel_step reference cases") {
    const LdParams p{6, 6, 2, 2};
    BinWord e1(6);
    e1.set(0, 1);
    BinWord zero(6);
    auto [y1, y2] = channel_step(p, e1, zero);
    CHECK(y1 == e1);  // S^0
    BinWord expect2(6);
    expect2.set(4, 1);  // depth q-2 via S^4
    CHECK(y2 == expect2);

    auto [z1, z2] = channel_step(p, zero, zero);
    CHECK(z1.is_zero());
    CHECK(z2.is_zero());

    const LdParams full{4, 2, 1, 1};  // n11 = q
    std::mt19937_64 rng(3);
    BinWord x1 = random_word(4, rng);
    auto [w1, w2] = channel_step(full, x1, BinWord(4));
    CHECK(w1 == x1);
    (void)w2;
}

TEST_CASE("length mismatch rejected") {
    const LdParams p{6, 6, 2, 2};
    CHECK_THROWS_AS(channel_step(p, BinWord(5), BinWord(6)), DimensionMismatch);
}

TEST_CASE("shift matches the explicit shift-matrix oracle") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const int q = 1 + static_cast<int>(rng() % 8);
        const int k = static_cast<int>(rng() % static_cast<unsigned>(q + 1));
        BinWord w = random_word(q, rng);
        CHECK(shift_down(w, k) == shift_matrix_apply(w, k));
    }
}

TEST_CASE("channel is linear over the binary field") {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 200; ++trial) {
        LdParams p{static_cast<int>(rng() % 7), static_cast<int>(rng() % 7), static_cast<int>(rng() % 7),
                   static_cast<int>(rng() % 7)};
        if (p.q() == 0) continue;
        BinWord a1 = random_word(p.q(), rng), a2 = random_word(p.q(), rng);
        BinWord b1 = random_word(p.q(), rng), b2 = random_word(p.q(), rng);
        auto [ya1, ya2] = channel_step(p, a1, a2);
        auto [yb1, yb2] = channel_step(p, b1, b2);
        auto [ys1, ys2] = channel_step(p, a1 ^ b1, a2 ^ b2);
        CHECK(ys1 == (ya1 ^ yb1));
        CHECK(ys2 == (ya2 ^ yb2));
    }
}

TEST_CASE("level decomposition reference cases") {
    LevelDecomposition d = level_decomposition(LdParams{6, 6, 2, 2}, 1);
    CHECK(d.c.size == 2);
    CHECK(d.p.size == 4);
    CHECK(d.d.size == 0);
    CHECK(d.c1.size == 2);
    CHECK(d.c2.size == 0);
    CHECK(d.p1.size == 2);
    CHECK(d.p2.size == 2);
    CHECK(d.y_u.size == 4);
    CHECK(d.y_d.size == 2);
    CHECK(d.p.offset == 2);
    CHECK(d.p2.offset == 4);

    d = level_decomposition(LdParams{3, 3, 3, 3}, 1);  // n = m
    CHECK(d.p.size == 0);
    CHECK(d.d.size == 0);
    CHECK(d.c.size == 3);

    d = level_decomposition(LdParams{2, 2, 3, 3}, 1);
    CHECK(d.c.size == 2);
    CHECK(d.p.size == 0);
    CHECK(d.d.size == 1);
}

TEST_CASE("decomposition dimensions always add up") {
    for (int n11 = 0; n11 <= 4; ++n11)
        for (int n22 = 0; n22 <= 4; ++n22)
            for (int n12 = 0; n12 <= 4; ++n12)
                for (int n21 = 0; n21 <= 4; ++n21) {
                    const LdParams p{n11, n22, n12, n21};
                    for (int u = 1; u <= 2; ++u) {
                        const LevelDecomposition d = level_decomposition(p, u);
                        CHECK(d.c.size + d.p.size + d.d.size == std::max(p.n_direct(u), p.n_cross_out(u)));
                        CHECK(d.c1.size + d.c2.size == d.c.size);
                        CHECK(d.p1.size + d.p2.size == d.p.size);
                        CHECK(d.y_u.size + d.y_d.size == std::max(p.n_direct(u), p.n_cross_in(u)));
                    }
                }
}
