#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <random>

#include "ellav/surface.hpp"

using namespace ellav;

namespace {

Surface fam(FamilyTag tag, long a = 0, long b = 0, long c = 0) {
    return make_family({tag, BigInt(a), BigInt(b), BigInt(c)});
}

IntPoly T() { return IntPoly{0, 1}; }

}  // namespace

TEST_CASE("surface invariants match the catalogue displays") {
    // base family: c4 = 144(t^2-s), c6 = -1728 t(t^2-s), disc = -1728 s(t^2-s)^2
    for (long s : {1L, 5L, -12L, -972L}) {
        Surface S = fam(FamilyTag::Fs, s);
        IntPoly u = T() * T() - IntPoly::constant(s);
        CHECK(c4_poly(S) == 144 * u);
        CHECK(c6_poly(S) == BigInt(-1728) * (T() * u));
        CHECK(disc_poly(S) == BigInt(-1728) * s * (u * u));
    }
    // G: c4 = 144 w^2 t(t-1), c6 = -1728 w^3 t^2 (t-1), disc = -1728 w^6 t^3 (t-1)^2
    for (long w : {1L, 3L, -2L}) {
        Surface S = fam(FamilyTag::Gw, w);
        IntPoly tm1 = T() - IntPoly::constant(1);
        BigInt W(w);
        CHECK(c4_poly(S) == 144 * W * W * (T() * tm1));
        CHECK(c6_poly(S) == BigInt(-1728) * W * W * W * (T() * T() * tm1));
        CHECK(disc_poly(S) ==
              BigInt(-1728) * pow_bi(W, 6) * (T() * T() * T() * tm1 * tm1));
    }
    // H: c4 = 16 w^2 t(8t-3)(8t^2-11t+8), disc = -512 w^6 t^3 (8t^2-11t+8)^2
    for (long w : {1L, 2L}) {
        Surface S = fam(FamilyTag::Hw, w);
        BigInt W(w);
        IntPoly q{8, -11, 8};
        CHECK(c4_poly(S) == 16 * W * W * (T() * IntPoly{-3, 8} * q));
        CHECK(c6_poly(S) ==
              BigInt(-64) * W * W * W * (T() * T() * q * IntPoly{45, -80, 64}));
        CHECK(disc_poly(S) == BigInt(-512) * pow_bi(W, 6) * (T() * T() * T() * q * q));
    }
    // I: c4 = 16 w^2 (t-4) t (t^2-10t+27), disc = -64 w^6 t^2 (t^2-10t+27)^3
    {
        Surface S = fam(FamilyTag::Iw, 1);
        IntPoly q{27, -10, 1};
        CHECK(c4_poly(S) == 16 * (IntPoly{-4, 1} * T() * q));
        CHECK(c6_poly(S) == BigInt(-64) * (IntPoly{-1, 1} * T() * q * q));
        CHECK(disc_poly(S) == BigInt(-64) * (T() * T() * q * q * q));
    }
    // J: c4 = 144 w^2 t(t^3+m), c6 = -864 w^3 (t^3+m)(2t^3+m),
    //    disc = -432 w^6 m^2 (t^3+m)^2
    for (auto [m, w] : std::vector<std::pair<long, long>>{{1, 1}, {2, 3}, {-5, 2}}) {
        Surface S = fam(FamilyTag::Jmw, m, w);
        BigInt W(w);
        IntPoly q{m, 0, 0, 1};
        CHECK(c4_poly(S) == 144 * W * W * (T() * q));
        CHECK(c6_poly(S) == BigInt(-864) * W * W * W * (q * IntPoly{m, 0, 0, 2}));
        CHECK(disc_poly(S) ==
              BigInt(-432) * pow_bi(W, 6) * BigInt(m) * BigInt(m) * (q * q));
    }
    // L: c4 = 144 w^2 ((t^2+v)^2 - s), disc = -1728 s w^6 ((t^2+v)^2 - s)^2
    for (auto [w, s, v] : std::vector<std::array<long, 3>>{
             {{1, 1, 9}}, {{6, -27, 0}}, {{2, 3, -1}}}) {
        Surface S = fam(FamilyTag::Lwsv, w, s, v);
        BigInt W(w);
        IntPoly tv = T() * T() + IntPoly::constant(v);
        IntPoly u = tv * tv - IntPoly::constant(s);
        CHECK(c4_poly(S) == 144 * W * W * u);
        CHECK(c6_poly(S) == BigInt(-1728) * W * W * W * (tv * u));
        CHECK(disc_poly(S) == BigInt(-1728) * BigInt(s) * pow_bi(W, 6) * (u * u));
    }
    // Washington family: c4 = 16 f_a, c6 = -32 f_a (2t+3a), disc = 16 a^2 f_a^2
    for (long a : {1L, 2L, -3L}) {
        Surface S = fam(FamilyTag::Wa, a);
        IntPoly f(std::vector<BigInt>{9 * BigInt(a) * a, 3 * BigInt(a), 1});
        CHECK(c4_poly(S) == 16 * f);
        CHECK(c6_poly(S) ==
              BigInt(-32) * (f * IntPoly(std::vector<BigInt>{3 * BigInt(a), 2})));
        CHECK(disc_poly(S) == 16 * BigInt(a) * BigInt(a) * (f * f));
    }
    // V family: c4 = 144 t(t-a), c6 = -864 t(t-a)(2t-a), disc = -432 a^2 t^2 (t-a)^2
    for (long a : {1L, 4L, -6L}) {
        Surface S = fam(FamilyTag::Va, a);
        IntPoly tma(std::vector<BigInt>{-a, 1});
        IntPoly twoma(std::vector<BigInt>{-a, 2});
        CHECK(c4_poly(S) == 144 * (T() * tma));
        CHECK(c6_poly(S) == BigInt(-864) * (T() * tma * twoma));
        CHECK(disc_poly(S) ==
              BigInt(-432) * BigInt(a) * BigInt(a) * (T() * T() * tma * tma));
    }
}

TEST_CASE("make_family frozen examples") {
    Surface W1 = fam(FamilyTag::Wa, 1);
    CHECK(W1.a2 == IntPoly{0, 1});
    CHECK(W1.a4 == IntPoly{-3, -1});
    CHECK(W1.a6 == IntPoly{1});

    // s = 1 member at t = 2: y^2 = x^3 + 6x^2 + 3x + 2
    Curve C = specialize(fam(FamilyTag::Fs, 1), Rational(2));
    CHECK(C.a2 == 6);
    CHECK(C.a4 == 3);
    CHECK(C.a6 == 2);

    // twist of the Washington family is W_d(dt)
    Surface Wd = fam(FamilyTag::W1twist, 5);
    Surface W5 = fam(FamilyTag::Wa, 5);
    CHECK(Wd.a2 == W5.a2.compose(IntPoly{0, 5}));
    CHECK(Wd.a4 == W5.a4.compose(IntPoly{0, 5}));
    CHECK(Wd.a6 == W5.a6);

    // W_a^dagger(t) = W_{a^2}(2t^2 - 2at - a^2)
    Surface Wdag = fam(FamilyTag::Wdagger, 1);
    Surface Wsq = fam(FamilyTag::Wa, 1);
    IntPoly arg{-1, -2, 2};
    CHECK(Wdag.a2 == arg);
    CHECK(Wdag.a4 == Wsq.a4.compose(arg));

    CHECK_THROWS_AS(fam(FamilyTag::Fs, 0), std::invalid_argument);
    CHECK_THROWS_AS(fam(FamilyTag::Jmw, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(fam(FamilyTag::Wstar, 5, 1), std::invalid_argument);  // 5 != +-1 mod 8
    CHECK_THROWS_AS(fam(FamilyTag::Wstar, 7, 3), std::invalid_argument);  // 3 QNR mod 7
    CHECK_THROWS_AS(fam(FamilyTag::Wstarstar, 7, 2), std::invalid_argument);
    CHECK_NOTHROW(fam(FamilyTag::Wstar, 7, 2));
    CHECK_NOTHROW(fam(FamilyTag::Wstarstar, 7, 3));
}

TEST_CASE("specialization flags singular fibers") {
    CHECK(is_singular(specialize(fam(FamilyTag::Fs, 4), Rational(2))));
    CHECK_FALSE(is_singular(specialize(fam(FamilyTag::Fs, 4), Rational(3))));
    Curve W1_5 = specialize(fam(FamilyTag::Wa, 1), Rational(5));
    CHECK(W1_5.a2 == 5);
    CHECK(W1_5.a4 == -8);
    CHECK(W1_5.a6 == 1);
    CHECK_FALSE(is_singular(W1_5));
    CHECK(is_singular(specialize(fam(FamilyTag::Gw, 1), Rational(1))));
}

TEST_CASE("place classification") {
    // s = 5 member: disc = -1728*5 (t^2-5)^2, c4 = 144(t^2-5): additive place
    auto rep = classify_places(fam(FamilyTag::Fs, 5));
    REQUIRE(rep.places.size() == 2);  // t^2 - 5 and -deg
    CHECK(rep.places[0].poly == IntPoly{-5, 0, 1});
    CHECK(rep.places[0].reduction == Reduction::additive);
    CHECK(rep.places[0].vc4 == 1);
    CHECK(rep.places[0].vc6 == 1);
    CHECK(rep.places[0].vdisc == 2);
    CHECK(rep.M == IntPoly{1});
    CHECK(rep.places[1].at_infinity);
    CHECK(rep.places[1].reduction == Reduction::additive);

    // y^2 = x^3 + t x + 1 has a multiplicative place
    Surface generic{IntPoly{}, IntPoly{0, 1}, IntPoly{1}, 1};
    auto rep2 = classify_places(generic);
    CHECK(rep2.M.degree() > 0);
    CHECK_FALSE(potentially_parity_biased(generic));

    // both finite places of the H family are additive
    auto rep3 = classify_places(fam(FamilyTag::Hw, 2));
    for (const auto& pl : rep3.places)
        if (!pl.at_infinity) CHECK(pl.reduction == Reduction::additive);
    CHECK(rep3.M == IntPoly{1});

    // isotrivial j = 0 family: c4 = 0, no multiplicative place
    Surface iso{IntPoly{}, IntPoly{}, IntPoly{0, 0, 0, 0, 0, 0, 1}, 1};
    CHECK(potentially_parity_biased(iso));
    auto rep4 = classify_places(iso);
    CHECK(rep4.places[0].poly == IntPoly{0, 1});
    CHECK(rep4.places[0].vc4 == kValInfinity);
}

TEST_CASE("places cover the squarefree support of the discriminant") {
    std::vector<Surface> surfaces = {
        fam(FamilyTag::Fs, 5),     fam(FamilyTag::Gw, 3),
        fam(FamilyTag::Hw, 2),     fam(FamilyTag::Iw, 1),
        fam(FamilyTag::Jmw, 2, 3), fam(FamilyTag::Lwsv, 1, 1, 9),
        fam(FamilyTag::Wa, 6),     fam(FamilyTag::Va, 4),
        Surface{IntPoly{}, IntPoly{0, 1}, IntPoly{1}, 1}};
    for (const auto& S : surfaces) {
        auto rep = classify_places(S);
        IntPoly prod = IntPoly::constant(1);
        for (const auto& pl : rep.places)
            if (!pl.at_infinity) prod = prod * pl.poly;
        IntPoly sf = squarefree_part(disc_poly(S));
        CHECK(prod == sf);
    }
}

TEST_CASE("catalogue families are potentially parity-biased") {
    std::vector<Surface> surfaces = {
        fam(FamilyTag::Fs, 7),       fam(FamilyTag::Gw, -2),
        fam(FamilyTag::Hw, 1),       fam(FamilyTag::Iw, 2),
        fam(FamilyTag::Jmw, 1, 1),   fam(FamilyTag::Lwsv, 6, -27, 0),
        fam(FamilyTag::Wa, 2),       fam(FamilyTag::Va, 1),
        fam(FamilyTag::W1twist, 20), fam(FamilyTag::Wdagger, 1),
        fam(FamilyTag::Wstar, 7, 2), fam(FamilyTag::Wstarstar, 7, 3)};
    for (const auto& S : surfaces) CHECK(potentially_parity_biased(S));
}

TEST_CASE("reduction maps are isomorphisms fiberwise") {
    std::vector<FamilyId> ids = {
        {FamilyTag::Wa, 5},       {FamilyTag::Wa, -3},
        {FamilyTag::Va, 3},       {FamilyTag::Va, -2},
        {FamilyTag::Gw, 3},       {FamilyTag::Lwsv, 1, 1, 9},
        {FamilyTag::Wdagger, 1},  {FamilyTag::W1twist, 7},
        {FamilyTag::Wstar, 7, 2}, {FamilyTag::Wstarstar, 7, 3}};
    std::mt19937_64 rng(55);
    for (const auto& id : ids) {
        Surface src = make_family(id);
        auto map = reduction_to_Fs(id);
        REQUIRE(map.has_value());
        int checked = 0;
        for (int trial = 0; trial < 60; ++trial) {
            long t0 = long(rng() % 61) - 30;
            Curve A = specialize(src, Rational(t0));
            BigInt s_val = map->target_s.eval(BigInt(t0));
            if (s_val == 0) continue;
            Surface tgt = make_family({FamilyTag::Fs, s_val});
            Curve B = specialize(tgt, Rational(map->subst.eval(BigInt(t0))));
            auto ia = invariants(A), ib = invariants(B);
            if (ia.disc == 0 || ib.disc == 0) continue;
            REQUIRE(ia.j.has_value());
            REQUIRE(ib.j.has_value());
            CHECK(*ia.j == *ib.j);
            for (long p : {5, 7, 11, 13, 17}) {
                if (mod_long(ia.disc.get_num() * ia.disc.get_den(), p) == 0) continue;
                if (mod_long(ib.disc.get_num() * ib.disc.get_den(), p) == 0) continue;
                CHECK(trace_ap(A, p) == trace_ap(B, p));
            }
            ++checked;
        }
        CHECK(checked >= 30);
    }
    CHECK_FALSE(reduction_to_Fs({FamilyTag::Hw, 2}).has_value());
}

TEST_CASE("surface text form") {
    Surface S = fam(FamilyTag::Hw, -3);
    Surface back = parse_surface(surface_str(S));
    CHECK(back.a2 == S.a2);
    CHECK(back.a4 == S.a4);
    CHECK(back.a6 == S.a6);
    CHECK(back.twist == S.twist);

    Surface P = parse_surface("a2=0; a4=t; a6=1; w=1");
    CHECK(P.a4 == IntPoly{0, 1});
    CHECK_THROWS_AS(parse_surface("a2=t"), std::invalid_argument);
    CHECK_THROWS_AS(parse_surface("a2=t; a4=1; a6=1; w=0"), std::invalid_argument);
}
