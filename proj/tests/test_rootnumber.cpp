#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ellav/rootnumber.hpp"

using namespace ellav;

namespace {

// Liouville function of |n|
int liouville(const BigInt& n) {
    int s = 1;
    for (const auto& [p, e] : factorize(n).factors)
        if (e % 2 == 1) s = -s;
    return s;
}

}  // namespace

TEST_CASE("dyadic sign table") {
    // odd a = +-1 (mod 8): identically +1
    for (long a : {1L, 7L, -1L, 17L, -23L})
        for (long t = -40; t <= 40; ++t) CHECK(sa(a, t) == 1);
    // frozen examples
    CHECK(sa(3, 4) == -1);
    CHECK(sa(3, 1) == 1);
    // periodicity modulo 2^{v_2(a)+2}
    std::mt19937_64 rng(3);
    for (long a : {1L, 3L, 6L, 8L, -12L, 48L, -160L}) {
        long va = vp(a, 2);
        BigInt period = pow_bi(2, va + 2);
        for (int i = 0; i < 200; ++i) {
            BigInt t = BigInt(long(rng() % 100001) - 50000);
            CHECK(sa(a, t) == sa(a, t + period));
        }
    }
    // high dyadic gap: s_a(t) = t_2 (mod 4)
    for (long vt : {0L, 1L, 2L, 3L}) {
        for (long t2 : {1L, 3L, 5L, 7L, -1L, -3L}) {
            BigInt t = BigInt(t2) * pow_bi(2, vt);
            BigInt a4 = pow_bi(2, vt + 4) * 3;  // v_2(a) = v_2(t) + 4
            int expect = mod_long(BigInt(t2), 4) == 1 ? 1 : -1;
            CHECK(sa(a4, t) == expect);
            if (vt % 2 == 1) {
                BigInt a3 = pow_bi(2, vt + 3) * 5;
                CHECK(sa(a3, t) == expect);
                BigInt a7 = pow_bi(2, vt + 7) * 7;
                CHECK(sa(a7, t) == expect);
            }
        }
    }
}

TEST_CASE("Washington family is constantly -1") {
    for (long t = -2000; t <= 2000; ++t) CHECK(rn_Wa_sign(1, t) == -1);
}

TEST_CASE("a = 2 alternates along 1 + 4u") {
    // both engines agree the phase is -(-1)^u; only the alternation matters
    // for the zero-average constructions
    for (long u = -50; u <= 50; ++u) {
        int expect = (u % 2 == 0) ? -1 : 1;
        CHECK(rn_Wa_sign(2, 1 + 4 * u) == expect);
        CHECK(rn_Fs_sign(-3888, 12 * (1 + 4 * u) + 36) == expect);
    }
}

TEST_CASE("local signs multiply to the closed global form") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 400; ++i) {
        long a = long(rng() % 25) - 12;
        if (a == 0) continue;
        long t = long(rng() % 2001) - 1000;
        auto rep = rn_Wa(a, t);
        int prod = 1;
        for (const auto& w : rep.locals) prod *= w.value;
        CHECK(rep.global == -prod);
    }
}

TEST_CASE("base family engine: frozen branches") {
    // good reduction away from 6 s (t^2 - s)
    {
        auto w = wp_Fs(1, 4, 7);
        CHECK(w.value == 1);
    }
    // p >= 5, v_p(s) positive even, below 2 v_p(t)
    {
        auto w = wp_Fs(50, 125, 5);  // v_5(s) = 2, v_5(t) = 3
        CHECK(w.rule == "fs.p5.slow.even");
        CHECK(w.value == kronecker(-1, 5));  // exponent v_p(s)/2 = 1
    }
    // v_3(s) = 5, v_3(t) = 1 branch of the ternary table
    {
        auto w = wp_Fs(-972, 30, 3);
        CHECK(w.rule == "fs.p3.tlow.odd.d3");
        CHECK(w.value == 1);
    }
    // singular fiber reports 0
    CHECK(rn_Fs(4, 2).global == 0);
    CHECK(rn_Fs(4, -2).global == 0);
    CHECK_THROWS_AS(wp_Fs(4, 2, 5), std::invalid_argument);
}

TEST_CASE("bridge: the Washington member inside the base family") {
    // rn_Fs(-972, 12t+18) must be identically -1
    for (long t = -300; t <= 300; ++t)
        CHECK(rn_Fs_sign(-972, 12 * t + 18) == -1);
}

TEST_CASE("cross-oracle smoke grid") {
    // The full |a| <= 12, |t| <= 2000 sweep runs in the acceptance suite.
    for (long a = -4; a <= 4; ++a) {
        if (a == 0) continue;
        BigInt sW = BigInt(-972) * a * a;
        BigInt sV = BigInt(4) * a * a;
        for (long t = -150; t <= 150; ++t) {
            INFO("a=" << a << " t=" << t);
            CHECK(rn_Wa_sign(a, t) == rn_Fs_sign(sW, 12 * t + 18 * a));
            if (t != 0 && t != a)
                CHECK(rn_Va_sign(a, t) == rn_Fs_sign(sV, 4 * t - 2 * a));
        }
    }
}

TEST_CASE("V family singular fibers and local branches") {
    CHECK(rn_Va(1, 0).global == 0);
    CHECK(rn_Va(1, 1).global == 0);
    // frozen bridge example
    CHECK(rn_Va_sign(1, 2) == rn_Fs_sign(4, 6));
    // p >= 5, v_p(t) < v_p(a), v_p(t) even: w = -(3 t_p / p)
    {
        auto w = wp_Va(25, 7, 5);  // v_5(t) = 0 < 2
        CHECK(w.rule == "va.p5.low.even");
        CHECK(w.value == -kronecker(21, 5));
    }
    // locals multiply to the global
    std::mt19937_64 rng(43);
    for (int i = 0; i < 300; ++i) {
        long a = long(rng() % 25) - 12;
        if (a == 0) continue;
        long t = long(rng() % 2001) - 1000;
        if (t == 0 || t == a) continue;
        auto rep = rn_Va(a, t);
        int prod = 1;
        for (const auto& w : rep.locals) prod *= w.value;
        CHECK(rep.global == -prod);
    }
}

TEST_CASE("periodicity of the W-family sign") {
    for (long a : {1L, 2L, 3L, 5L, -6L, 12L}) {
        BigInt period = 4 * abs(BigInt(a));
        for (long t = -300; t <= 300; ++t)
            CHECK(rn_Wa_sign(a, t) == rn_Wa_sign(a, BigInt(t) + period));
    }
}

TEST_CASE("progressions with constant sign from the kernel formula") {
    // a = +-1 (mod 8), gcd(a, b) = 1: eps_a(at + b) = (-1)^{1+lambda(kernel)}(b/kernel)
    for (long a : {9L, 15L, 17L, -7L, 33L}) {
        BigInt kappa = kernel(a);
        for (long b : {1L, 2L, 5L, 7L, 11L}) {
            if (gcd_bi(a, b) != 1) continue;
            int expect = -liouville(kappa) * kronecker(b, kappa);
            for (long t = -25; t <= 25; ++t)
                CHECK(rn_Wa_sign(a, BigInt(a) * t + b) == expect);
        }
    }
}

TEST_CASE("elevated-rank subfamilies have constant sign") {
    // p = 7, quadratic residue 2 and non-residue 3
    REQUIRE(kronecker(2, 7) == 1);
    REQUIRE(kronecker(3, 7) == -1);
    for (long t = -100; t <= 100; ++t) {
        CHECK(rn_Wa_sign(49, 7 * t + 2) == 1);
        CHECK(rn_Wa_sign(7, 7 * t + 3) == -1);
    }
    // degree-2 subfamily of rank 3: sign (2/p) off p | t, -1 on it
    for (long t = -60; t <= 60; ++t) {
        BigInt arg = 2 * BigInt(t) * t - 2 * 7 * t - 49;
        int expect = (t % 7 == 0) ? -1 : 1;
        CHECK(rn_Wa_sign(49, arg) == expect);
    }
}

TEST_CASE("twisted Washington members") {
    // agreement with the underlying W_d(dt) member
    for (long d : {1L, 3L, 5L, -7L, 8L, 12L, -20L, 111L})
        for (long t = -60; t <= 60; ++t) {
            INFO("d=" << d << " t=" << t);
            CHECK(rn_W1twist(d, t) == rn_Wa_sign(d, BigInt(d) * t));
        }
    // twist by d_u(t) with u = 5: sign is +1 exactly when 20t + 111 > 0
    for (long t = -50; t <= 50; ++t) {
        BigInt d = 20 * t + 111;
        CHECK(rn_W1twist(d, t) == (d > 0 ? 1 : -1));
        CHECK(rn_W1twist(d, t) == (t >= -5 ? 1 : -1));
    }
}
