#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ellav/curve.hpp"

using namespace ellav;

namespace {

// brute-force oracle: number of affine points of twist*y^2 = f(x) over F_p
long count_points_oracle(const Curve& C, long p) {
    auto red = [&](const Rational& q) {
        long den = mod_long(q.get_den(), p);
        REQUIRE(den != 0);
        long num = mod_long(q.get_num(), p);
        long inv = 1;
        for (long e = p - 2; e > 0; e >>= 1) {
            if (e & 1) inv = (inv * den) % p;
            den = (den * den) % p;
        }
        return (num * inv) % p;
    };
    long a2 = red(C.a2), a4 = red(C.a4), a6 = red(C.a6), w = red(C.twist);
    long n = 0;
    for (long x = 0; x < p; ++x)
        for (long y = 0; y < p; ++y) {
            long lhs = (w * ((y * y) % p)) % p;
            long rhs = (((x + a2) * x % p + a4) * x % p + a6) % p;
            if (lhs == rhs) ++n;
        }
    return n;
}

Curve w1_at(long t) {  // y^2 = x^3 + t x^2 - (t+3) x + 1
    return Curve{Rational(t), Rational(-(t + 3)), Rational(1), Rational(1)};
}

}  // namespace

TEST_CASE("invariants frozen values") {
    Curve C{Rational(0), Rational(-3), Rational(1)};
    auto inv = invariants(C);
    CHECK(inv.c4 == 144);
    CHECK(inv.c6 == -864);
    CHECK(inv.disc == 1296);
    REQUIRE(inv.j.has_value());

    // s = 5 member at t = 1: c4 = 144(t^2 - s)
    Curve F{Rational(3), Rational(15), Rational(5)};
    CHECK(invariants(F).c4 == -576);
}

TEST_CASE("invariants identity on random curves") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        Curve C{Rational(long(rng() % 21) - 10), Rational(long(rng() % 21) - 10),
                Rational(long(rng() % 21) - 10), Rational(long(rng() % 5) + 1)};
        auto inv = invariants(C);
        CHECK(inv.c4 * inv.c4 * inv.c4 - inv.c6 * inv.c6 == 1728 * inv.disc);
    }
}

TEST_CASE("trace_ap matches brute-force point counts") {
    Curve C1{Rational(0), Rational(0), Rational(1)};  // y^2 = x^3 + 1
    CHECK(count_points_oracle(C1, 5) + 1 == 6);
    CHECK(trace_ap(C1, 5) == 0);

    Curve C2{Rational(0), Rational(-1), Rational(0)};  // y^2 = x^3 - x
    CHECK(trace_ap(C2, 3) == 3 + 1 - (count_points_oracle(C2, 3) + 1));

    std::mt19937_64 rng(17);
    for (int i = 0; i < 40; ++i) {
        Curve C{Rational(long(rng() % 11) - 5), Rational(long(rng() % 11) - 5),
                Rational(long(rng() % 11) - 5)};
        long p = std::vector<long>{5, 7, 11, 13, 17, 19}[rng() % 6];
        auto inv = invariants(C);
        if (inv.disc == 0 || mod_long(inv.disc.get_num(), p) == 0) continue;
        long a = p + 1 - (count_points_oracle(C, p) + 1);
        CHECK(trace_ap(C, p) == a);
    }
}

TEST_CASE("Hasse bound") {
    std::mt19937_64 rng(23);
    auto ps = primes_up_to(500);
    for (int i = 0; i < 60; ++i) {
        Curve C{Rational(long(rng() % 41) - 20), Rational(long(rng() % 41) - 20),
                Rational(long(rng() % 41) - 20)};
        auto inv = invariants(C);
        if (inv.disc == 0) continue;
        for (uint32_t p : ps) {
            if (p < 3 || mod_long(inv.disc.get_num(), p) == 0) continue;
            long a = trace_ap(C, p);
            CHECK(BigInt(a) * a <= 4 * BigInt(p));
        }
    }
}

TEST_CASE("twist scales traces by the quadratic character") {
    std::mt19937_64 rng(29);
    auto ps = primes_up_to(200);
    for (int i = 0; i < 30; ++i) {
        long a4 = long(rng() % 21) - 10, a6 = long(rng() % 21) - 10;
        long w = long(rng() % 13) - 6;
        if (w == 0) w = 3;
        Curve C{Rational(0), Rational(a4), Rational(a6), Rational(1)};
        Curve Cw{Rational(0), Rational(a4), Rational(a6), Rational(w)};
        auto inv = invariants(C);
        if (inv.disc == 0) continue;
        for (uint32_t p : ps) {
            if (p < 3) continue;
            if (mod_long(BigInt(2 * w) * inv.disc.get_num(), p) == 0) continue;
            CHECK(trace_ap(Cw, p) == kronecker(w, p) * trace_ap(C, p));
        }
    }
}

TEST_CASE("doubling over the function field") {
    // rank-one member of the base family: y^2 = x^3 + 3t x^2 - 36 x - 12 t
    WModel<RatFunc> m{RatFunc(IntPoly{0, 3}), RatFunc(IntPoly{-36}),
                      RatFunc(IntPoly{0, -12})};
    auto G = FuncPoint::affine(RatFunc(IntPoly{-2}), RatFunc(IntPoly{8}));
    REQUIRE(on_model(m, G));
    auto twoG = model_add(m, G, G);
    REQUIRE_FALSE(twoG.infinity);
    RatFunc expect_x(QPoly(IntPoly{100, -12, 9}), QPoly(IntPoly{16}));
    RatFunc expect_y(QPoly(IntPoly{280, 324, 18, 27}), QPoly(IntPoly{64}));
    CHECK(twoG.x == expect_x);
    CHECK(twoG.y == expect_y);
    CHECK(on_model(m, twoG));
}

TEST_CASE("group law basics over Q") {
    Curve C = w1_at(5);
    QPoint P = QPoint::affine(Rational(0), Rational(1));
    REQUIRE(on_curve(C, P));
    QPoint negP = QPoint::affine(P.x, -P.y);
    CHECK(point_add(C, P, negP).infinity);
    CHECK(point_add(C, P, QPoint::at_infinity()) == P);
    QPoint bad = QPoint::affine(Rational(1), Rational(1));
    REQUIRE_FALSE(on_curve(C, bad));
    CHECK_THROWS_AS(point_add(C, P, bad), std::invalid_argument);
}

TEST_CASE("group law associativity") {
    Curve C = w1_at(5);
    QPoint P = QPoint::affine(Rational(0), Rational(1));
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 8; ++trial) {
        long i = 1 + long(rng() % 5), j = 1 + long(rng() % 5), k = 1 + long(rng() % 5);
        QPoint A = point_mul(C, i, P), B = point_mul(C, j, P), D = point_mul(C, k, P);
        CHECK(point_add(C, point_add(C, A, B), D) == point_add(C, A, point_add(C, B, D)));
    }
}

TEST_CASE("twisted model group law") {
    // 2 y^2 = x^3 + (8t^2-7t+3)x^2 - 3(2t-1)x + (t+1) at t = 1: (-1, 2) is on it
    Curve H{Rational(4), Rational(-3), Rational(2), Rational(2)};
    QPoint P = QPoint::affine(Rational(-1), Rational(2));
    REQUIRE(on_curve(H, P));
    QPoint S = point_add(H, P, P);
    CHECK(on_curve(H, S));
    CHECK(point_add(H, S, QPoint::affine(S.x, -S.y)).infinity);
}

TEST_CASE("torsion probe") {
    Curve C = w1_at(5);
    QPoint P = QPoint::affine(Rational(0), Rational(1));
    auto probe = torsion_probe(C, P);
    CHECK_FALSE(probe.is_torsion);
    CHECK_FALSE(probe.witness.infinity);

    Curve E{Rational(0), Rational(-1), Rational(0)};  // y^2 = x^3 - x
    auto two = torsion_probe(E, QPoint::affine(Rational(0), Rational(0)));
    CHECK(two.is_torsion);
    CHECK(two.order == 2);

    // (0, m) on the m=1 member of the J catalogue at t0 = 2
    Curve J{Rational(12), Rational(-6), Rational(1)};
    auto pj = torsion_probe(J, QPoint::affine(Rational(0), Rational(1)));
    CHECK_FALSE(pj.is_torsion);

    // y^2 = x^3 + 1: (2, 3) generates the full Z/6 torsion; (0, 1) = 2*(2, 3)
    Curve E6{Rational(0), Rational(0), Rational(1)};
    auto p6 = torsion_probe(E6, QPoint::affine(Rational(2), Rational(3)));
    CHECK(p6.is_torsion);
    CHECK(p6.order == 6);
    auto p3 = torsion_probe(E6, QPoint::affine(Rational(0), Rational(1)));
    CHECK(p3.is_torsion);
    CHECK(p3.order == 3);
}
