#pragma once

// Elliptic surfaces over Q(t): the family catalogue, specialization,
// function-field invariants, place classification and the reduction maps
// onto the base family F_s used as a cross-check bridge.

#include "ellav/curve.hpp"

namespace ellav {

// twist * y^2 = x^3 + a2(t) x^2 + a4(t) x + a6(t)
struct Surface {
    IntPoly a2, a4, a6;
    BigInt twist = 1;
};

// Invariants of the folded plain model (w a2, w^2 a4, w^3 a6).
inline IntPoly c4_poly(const Surface& S) {
    IntPoly A2 = S.a2 * S.twist;
    IntPoly A4 = S.a4 * (S.twist * S.twist);
    return 16 * (A2 * A2 - 3 * A4);
}

inline IntPoly c6_poly(const Surface& S) {
    IntPoly A2 = S.a2 * S.twist;
    IntPoly A4 = S.a4 * (S.twist * S.twist);
    IntPoly A6 = S.a6 * (S.twist * S.twist * S.twist);
    return 32 * (BigInt(-2) * A2 * A2 * A2 + 9 * (A2 * A4) - 27 * A6);
}

inline IntPoly disc_poly(const Surface& S) {
    IntPoly c4 = c4_poly(S), c6 = c6_poly(S);
    IntPoly num = c4 * c4 * c4 - c6 * c6;
    IntPoly out;
    for (auto& x : num.c) {
        if (x % 1728 != 0) throw std::logic_error("disc_poly: non-integral");
        out.c.push_back(x / 1728);
    }
    out.trim();
    return out;
}

inline Curve specialize(const Surface& S, const Rational& t0) {
    return Curve{S.a2.eval(t0), S.a4.eval(t0), S.a6.eval(t0), Rational(S.twist)};
}

// ---------------------------------------------------------------------------
// Family catalogue.

enum class FamilyTag {
    Fs,        // y^2 = x^3 + 3t x^2 + 3s x + s t
    Gw,        // w y^2 = x^3 + 3t x^2 + 3t x + t^2
    Hw,        // w y^2 = x^3 + (8t^2-7t+3) x^2 - 3(2t-1) x + (t+1)
    Iw,        // w y^2 = x^3 + t(t-7) x^2 - 6t(t-6) x + 2t(5t-27)
    Jmw,       // w y^2 = x^3 + 3t^2 x^2 - 3mt x + m^2
    Lwsv,      // w y^2 = x^3 + 3(t^2+v) x^2 + 3s x + s(t^2+v)
    Wa,        // y^2 = x^3 + t x^2 - a(t+3a) x + a^3
    Va,        // y^2 = x^3 + 3t x^2 + 3at x + a^2 t
    W1twist,   // y^2 = x^3 + dt x^2 - (t+3)d^2 x + d^3   (twist of Wa, a = 1)
    Wdagger,   // W_{a^2}(2t^2 - 2at - a^2)
    Wstar,     // W_{p^2}(pt + a), a a QR mod p
    Wstarstar  // W_p(pt + b), b a QNR mod p
};

struct FamilyId {
    FamilyTag tag;
    // parameter meaning per tag:
    //   Fs: s | Gw/Hw/Iw: w | Jmw: (m, w) | Lwsv: (w, s, v)
    //   Wa/Va/Wdagger: a | W1twist: d | Wstar/Wstarstar: (p, a)
    BigInt p1 = 0, p2 = 0, p3 = 0;
};

namespace detail {

inline Surface washington_at(const BigInt& a, const IntPoly& arg) {
    // W_a with t replaced by an integer polynomial
    Surface S;
    S.a2 = arg;
    S.a4 = -(a * arg) - IntPoly::constant(3 * a * a);
    S.a6 = IntPoly::constant(a * a * a);
    return S;
}

}  // namespace detail

inline Surface make_family(const FamilyId& id) {
    auto need = [](bool ok, const char* msg) {
        if (!ok) throw std::invalid_argument(msg);
    };
    const BigInt &A = id.p1, &B = id.p2, &C = id.p3;
    Surface S;
    switch (id.tag) {
        case FamilyTag::Fs: {
            need(A != 0, "Fs: s must be nonzero");
            S.a2 = IntPoly{0, 3};
            S.a4 = IntPoly::constant(3 * A);
            S.a6 = IntPoly(std::vector<BigInt>{0, A});
            return S;
        }
        case FamilyTag::Gw: {
            need(A != 0, "Gw: w must be nonzero");
            S.a2 = IntPoly{0, 3};
            S.a4 = IntPoly{0, 3};
            S.a6 = IntPoly{0, 0, 1};
            S.twist = A;
            return S;
        }
        case FamilyTag::Hw: {
            need(A != 0, "Hw: w must be nonzero");
            S.a2 = IntPoly{3, -7, 8};
            S.a4 = IntPoly{3, -6};
            S.a6 = IntPoly{1, 1};
            S.twist = A;
            return S;
        }
        case FamilyTag::Iw: {
            need(A != 0, "Iw: w must be nonzero");
            S.a2 = IntPoly{0, -7, 1};
            S.a4 = IntPoly{0, 36, -6};
            S.a6 = IntPoly{0, -54, 10};
            S.twist = A;
            return S;
        }
        case FamilyTag::Jmw: {
            need(A != 0, "Jmw: m must be nonzero");
            need(B != 0, "Jmw: w must be nonzero");
            S.a2 = IntPoly{0, 0, 3};
            S.a4 = IntPoly(std::vector<BigInt>{0, -3 * A});
            S.a6 = IntPoly::constant(A * A);
            S.twist = B;
            return S;
        }
        case FamilyTag::Lwsv: {
            need(A != 0, "Lwsv: w must be nonzero");
            need(B != 0, "Lwsv: s must be nonzero");
            S.a2 = IntPoly(std::vector<BigInt>{3 * C, 0, 3});
            S.a4 = IntPoly::constant(3 * B);
            S.a6 = IntPoly(std::vector<BigInt>{B * C, 0, B});
            S.twist = A;
            return S;
        }
        case FamilyTag::Wa:
            need(A != 0, "Wa: a must be nonzero");
            return detail::washington_at(A, IntPoly{0, 1});
        case FamilyTag::Va: {
            need(A != 0, "Va: a must be nonzero");
            S.a2 = IntPoly{0, 3};
            S.a4 = IntPoly(std::vector<BigInt>{0, 3 * A});
            S.a6 = IntPoly(std::vector<BigInt>{0, A * A});
            return S;
        }
        case FamilyTag::W1twist: {
            need(A != 0, "W1twist: d must be nonzero");
            S.a2 = IntPoly(std::vector<BigInt>{0, A});
            S.a4 = IntPoly(std::vector<BigInt>{-3 * A * A, -A * A});
            S.a6 = IntPoly::constant(A * A * A);
            return S;
        }
        case FamilyTag::Wdagger: {
            need(A != 0, "Wdagger: a must be nonzero");
            IntPoly arg(std::vector<BigInt>{-A * A, -2 * A, 2});
            return detail::washington_at(A * A, arg);
        }
        case FamilyTag::Wstar: {
            need(is_prime(A), "Wstar: p must be prime");
            need(mod_long(A, 8) == 1 || mod_long(A, 8) == 7, "Wstar: p = +-1 (mod 8)");
            need(kronecker(B, A) == 1, "Wstar: a must be a quadratic residue mod p");
            IntPoly arg(std::vector<BigInt>{B, A});
            return detail::washington_at(A * A, arg);
        }
        case FamilyTag::Wstarstar: {
            need(is_prime(A), "Wstarstar: p must be prime");
            need(mod_long(A, 8) == 1 || mod_long(A, 8) == 7,
                 "Wstarstar: p = +-1 (mod 8)");
            need(kronecker(B, A) == -1,
                 "Wstarstar: b must be a quadratic non-residue mod p");
            IntPoly arg(std::vector<BigInt>{B, A});
            return detail::washington_at(A, arg);
        }
    }
    throw std::invalid_argument("make_family: unknown tag");
}

// ---------------------------------------------------------------------------
// Place classification.

enum class Reduction { good, multiplicative, additive };

constexpr long kValInfinity = 1L << 40;  // valuation of the zero polynomial

struct Place {
    bool at_infinity = false;  // the place below -deg
    IntPoly poly;              // irreducible Q_v; empty for -deg
    Reduction reduction = Reduction::additive;
    bool quite_bad = false;
    long vc4 = 0, vc6 = 0, vdisc = 0;
};

struct PlaceReport {
    std::vector<Place> places;
    IntPoly M;  // product of the finite multiplicative places
    IntPoly B;  // product of the finite quite-bad places
};

namespace detail {

inline long poly_valuation(const IntPoly& f, const IntPoly& q) {
    if (f.is_zero()) return kValInfinity;
    long v = 0;
    IntPoly cur = f;
    for (;;) {
        auto quo = try_divide(cur, q);
        if (!quo) return v;
        cur = to_int_poly(*quo);
        ++v;
    }
}

// No quadratic twist attains good reduction iff the triple is congruent to
// neither (0,0,0) nor (2,3,6) mod (4,6,12); an infinite valuation matches
// any residue.
inline bool triple_matches(long vc4, long vc6, long vd, long r4, long r6, long r12) {
    bool m4 = vc4 >= kValInfinity || vc4 % 4 == r4;
    bool m6 = vc6 >= kValInfinity || vc6 % 6 == r6;
    bool m12 = vd >= kValInfinity || vd % 12 == r12;
    return m4 && m6 && m12;
}

inline bool is_quite_bad(long vc4, long vc6, long vd) {
    return !triple_matches(vc4, vc6, vd, 0, 0, 0) &&
           !triple_matches(vc4, vc6, vd, 2, 3, 6);
}

}  // namespace detail

inline PlaceReport classify_places(const Surface& S) {
    IntPoly c4 = c4_poly(S), c6 = c6_poly(S), disc = disc_poly(S);
    if (disc.is_zero())
        throw std::invalid_argument("classify_places: identically singular surface");

    PlaceReport out;
    out.M = IntPoly::constant(1);
    out.B = IntPoly::constant(1);

    if (disc.degree() > 0) {
        IntPoly sf = squarefree_part(disc);
        auto fact = factor_over_Q(sf);  // rejects degree > 6
        for (const auto& [q, mult] : fact.factors) {
            Place pl;
            pl.poly = q;
            pl.vc4 = detail::poly_valuation(c4, q);
            pl.vc6 = detail::poly_valuation(c6, q);
            pl.vdisc = detail::poly_valuation(disc, q);
            pl.reduction = pl.vc4 == 0 ? Reduction::multiplicative : Reduction::additive;
            pl.quite_bad = detail::is_quite_bad(pl.vc4, pl.vc6, pl.vdisc);
            if (pl.reduction == Reduction::multiplicative) out.M = out.M * pl.poly;
            if (pl.quite_bad) out.B = out.B * pl.poly;
            out.places.push_back(std::move(pl));
        }
    }

    // the place below -deg; valuations in the local parameter 1/t
    long d = 1;
    auto raise = [&](long deg, long weight) {
        while (weight * d < deg) ++d;
    };
    raise(S.a2.degree(), 2);
    raise(S.a4.degree(), 4);
    raise(S.a6.degree(), 6);
    Place inf;
    inf.at_infinity = true;
    inf.vc4 = c4.is_zero() ? kValInfinity : 4 * d - c4.degree();
    inf.vc6 = c6.is_zero() ? kValInfinity : 6 * d - c6.degree();
    inf.vdisc = 12 * d - disc.degree();
    if (inf.vdisc == 0)
        inf.reduction = Reduction::good;
    else
        inf.reduction =
            inf.vc4 == 0 ? Reduction::multiplicative : Reduction::additive;
    inf.quite_bad = inf.reduction != Reduction::good &&
                    detail::is_quite_bad(inf.vc4, inf.vc6, inf.vdisc);
    out.places.push_back(std::move(inf));
    return out;
}

inline IntPoly M_poly(const Surface& S) { return classify_places(S).M; }
inline IntPoly B_poly(const Surface& S) { return classify_places(S).B; }

// No finite place of multiplicative reduction (the place at -deg is exempt).
inline bool potentially_parity_biased(const Surface& S) {
    return M_poly(S).degree() <= 0;
}

// ---------------------------------------------------------------------------
// Reduction maps onto the base family: the specialization at t is isomorphic
// over Q to the F_{s(t)} specialization at subst(t).

struct ReductionMap {
    IntPoly target_s;  // s parameter; constant except for the G family
    IntPoly subst;     // t |-> subst(t)
};

inline std::optional<ReductionMap> reduction_to_Fs(const FamilyId& id) {
    const BigInt &A = id.p1, &B = id.p2, &C = id.p3;
    switch (id.tag) {
        case FamilyTag::Fs:
            return ReductionMap{IntPoly::constant(A), IntPoly{0, 1}};
        case FamilyTag::Wa:
            return ReductionMap{IntPoly::constant(BigInt(-972) * A * A),
                                IntPoly(std::vector<BigInt>{18 * A, 12})};
        case FamilyTag::Va:
            return ReductionMap{IntPoly::constant(4 * A * A),
                                IntPoly(std::vector<BigInt>{-2 * A, 4})};
        case FamilyTag::Gw:
            return ReductionMap{IntPoly(std::vector<BigInt>{0, A * A}),
                                IntPoly(std::vector<BigInt>{0, A})};
        case FamilyTag::Lwsv:
            return ReductionMap{
                IntPoly::constant(B * A * A),
                IntPoly(std::vector<BigInt>{C * A, 0, A})};
        case FamilyTag::W1twist:
            return ReductionMap{IntPoly::constant(BigInt(-972) * A * A),
                                IntPoly(std::vector<BigInt>{18 * A, 12 * A})};
        case FamilyTag::Wdagger: {
            // s = -12 (3a)^4, t |-> 6(2t - a)^2
            BigInt a4 = A * A * A * A;
            return ReductionMap{
                IntPoly::constant(BigInt(-972) * a4),
                IntPoly(std::vector<BigInt>{6 * A * A, -24 * A, 24})};
        }
        case FamilyTag::Wstar:
            return ReductionMap{
                IntPoly::constant(BigInt(-972) * A * A * A * A),
                IntPoly(std::vector<BigInt>{12 * B + 18 * A * A, 12 * A})};
        case FamilyTag::Wstarstar:
            return ReductionMap{
                IntPoly::constant(BigInt(-972) * A * A),
                IntPoly(std::vector<BigInt>{12 * B + 18 * A, 12 * A})};
        default:
            return std::nullopt;
    }
}

// ---------------------------------------------------------------------------
// Text form "a2=<poly>; a4=<poly>; a6=<poly>; w=<int>".

inline Surface parse_surface(const std::string& text) {
    Surface S;
    bool saw2 = false, saw4 = false, saw6 = false;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t end = text.find(';', pos);
        if (end == std::string::npos) end = text.size();
        std::string piece = text.substr(pos, end - pos);
        pos = end + 1;
        size_t eq = piece.find('=');
        if (eq == std::string::npos) {
            if (piece.find_first_not_of(" \t") == std::string::npos) continue;
            throw std::invalid_argument("parse_surface: expected key=value in '" +
                                        piece + "'");
        }
        std::string key = piece.substr(0, eq);
        key.erase(std::remove_if(key.begin(), key.end(), ::isspace), key.end());
        std::string val = piece.substr(eq + 1);
        if (key == "a2") S.a2 = parse_int_poly(val), saw2 = true;
        else if (key == "a4") S.a4 = parse_int_poly(val), saw4 = true;
        else if (key == "a6") S.a6 = parse_int_poly(val), saw6 = true;
        else if (key == "w") S.twist = BigInt(parse_int_poly(val).coeff(0));
        else throw std::invalid_argument("parse_surface: unknown key '" + key + "'");
    }
    if (!saw2 || !saw4 || !saw6)
        throw std::invalid_argument("parse_surface: a2, a4, a6 are all required");
    if (S.twist == 0) throw std::invalid_argument("parse_surface: twist must be nonzero");
    return S;
}

inline std::string surface_str(const Surface& S) {
    return "a2=" + S.a2.str() + "; a4=" + S.a4.str() + "; a6=" + S.a6.str() +
           "; w=" + S.twist.get_str();
}

}  // namespace ellav
