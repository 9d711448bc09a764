#pragma once

// Weierstrass curves over Q (and over Q(t) through rational-function
// coordinates): invariants, the group law, torsion probing and point
// counting over prime fields.

#include <optional>

#include "ellav/poly.hpp"

namespace ellav {

// twist * y^2 = x^3 + a2 x^2 + a4 x + a6.  twist = 1 for plain models.
struct Curve {
    Rational a2, a4, a6;
    Rational twist = 1;
};

struct CurveInvariants {
    Rational c4, c6, disc;
    std::optional<Rational> j;  // absent when disc = 0
};

// The quadratic twist by w is isomorphic (over Q) to the plain model with
// coefficients (w a2, w^2 a4, w^3 a6); all invariants are computed there.
inline CurveInvariants invariants(const Curve& C) {
    const Rational& w = C.twist;
    Rational A2 = w * C.a2, A4 = w * w * C.a4, A6 = w * w * w * C.a6;
    CurveInvariants out;
    out.c4 = 16 * (A2 * A2 - 3 * A4);
    out.c6 = 32 * (-2 * A2 * A2 * A2 + 9 * A2 * A4 - 27 * A6);
    out.disc = (out.c4 * out.c4 * out.c4 - out.c6 * out.c6) / 1728;
    if (out.disc != 0) out.j = out.c4 * out.c4 * out.c4 / out.disc;
    return out;
}

inline bool is_singular(const Curve& C) { return invariants(C).disc == 0; }

// ---------------------------------------------------------------------------
// Point counting mod p via quadratic characters: a_p = -sum_x chi(f(x)).
// One pass over the squares mod p builds the character table, so each
// symbol lookup is O(1).

namespace detail {

struct ResidueTable {
    long p;
    std::vector<int8_t> chi;  // chi[v] for v in [0, p)
    explicit ResidueTable(long p_) : p(p_), chi(p_, -1) {
        chi[0] = 0;
        for (long x = 1; x <= p / 2; ++x) chi[(x * x) % p] = 1;
    }
};

// coefficient reduced mod p; denominators prime to p required
inline std::optional<long> reduce_mod(const Rational& q, long p) {
    long den = mod_long(q.get_den(), p);
    if (den == 0) return std::nullopt;
    long num = mod_long(q.get_num(), p);
    // modular inverse by exponentiation
    long inv = detail::pow_u64(uint64_t(den), uint64_t(p - 2), uint64_t(p));
    return long(detail::mulmod_u64(uint64_t(num), uint64_t(inv), uint64_t(p)));
}

}  // namespace detail

// a_p of the specialization; p odd.  Returns 0 when p divides the
// discriminant (or meets a denominator), matching the convention used by
// the prime-averaged trace sums.
inline long trace_ap(const Curve& C, long p) {
    if (p < 3) throw std::invalid_argument("trace_ap: p must be an odd prime");
    auto A2 = detail::reduce_mod(C.a2, p);
    auto A4 = detail::reduce_mod(C.a4, p);
    auto A6 = detail::reduce_mod(C.a6, p);
    auto W = detail::reduce_mod(C.twist, p);
    if (!A2 || !A4 || !A6 || !W || *W == 0) return 0;
    auto inv = invariants(C);
    if (inv.disc == 0) return 0;
    if (mod_long(inv.disc.get_num(), p) == 0 ||
        mod_long(inv.disc.get_den(), p) == 0)
        return 0;
    detail::ResidueTable tab(p);
    long sum = 0;
    for (long x = 0; x < p; ++x) {
        uint64_t f = x;
        f = (f + *A2) % p;
        f = (detail::mulmod_u64(f, x, p) + *A4) % p;
        f = (detail::mulmod_u64(f, x, p) + *A6) % p;
        sum += tab.chi[f];
    }
    // w y^2 = f twists the count by chi(w)
    return -tab.chi[*W] * sum;
}

// ---------------------------------------------------------------------------
// Group law, generic over the coordinate field (Rational or RatFunc).

template <class K>
struct PointK {
    bool infinity = true;
    K x{}, y{};
    static PointK at_infinity() { return PointK{}; }
    static PointK affine(K x, K y) { return PointK{false, std::move(x), std::move(y)}; }
    bool operator==(const PointK& o) const {
        if (infinity || o.infinity) return infinity == o.infinity;
        return x == o.x && y == o.y;
    }
};

// plain model y^2 = x^3 + a2 x^2 + a4 x + a6 with coefficients in K
template <class K>
struct WModel {
    K a2, a4, a6;
};

template <class K>
bool on_model(const WModel<K>& m, const PointK<K>& P) {
    if (P.infinity) return true;
    K rhs = ((P.x + m.a2) * P.x + m.a4) * P.x + m.a6;
    return P.y * P.y == rhs;
}

template <class K>
PointK<K> model_neg(const PointK<K>& P) {
    if (P.infinity) return P;
    return PointK<K>::affine(P.x, K(0) - P.y);
}

template <class K>
PointK<K> model_add(const WModel<K>& m, const PointK<K>& P, const PointK<K>& Q) {
    if (P.infinity) return Q;
    if (Q.infinity) return P;
    K lambda;
    if (P.x == Q.x) {
        if (P.y == (K(0) - Q.y)) return PointK<K>::at_infinity();
        // tangent
        K num = (K(3) * P.x + K(2) * m.a2) * P.x + m.a4;
        lambda = num / (K(2) * P.y);
    } else {
        lambda = (Q.y - P.y) / (Q.x - P.x);
    }
    K x3 = lambda * lambda - m.a2 - P.x - Q.x;
    K y3 = lambda * (P.x - x3) - P.y;
    return PointK<K>::affine(x3, y3);
}

template <class K>
PointK<K> model_mul(const WModel<K>& m, long n, PointK<K> P) {
    if (n < 0) {
        P = model_neg(P);
        n = -n;
    }
    PointK<K> acc = PointK<K>::at_infinity();
    for (long i = 0; i < n; ++i) acc = model_add(m, acc, P);
    return acc;
}

using QPoint = PointK<Rational>;
using FuncPoint = PointK<RatFunc>;

// ---------------------------------------------------------------------------
// Curve-level wrappers: points live on twist*y^2 = f(x); the arithmetic runs
// on the isomorphic plain model X = w x, Y = w^2 y.

namespace detail {

inline WModel<Rational> folded_model(const Curve& C) {
    const Rational& w = C.twist;
    return {w * C.a2, w * w * C.a4, w * w * w * C.a6};
}
inline QPoint fold(const Curve& C, const QPoint& P) {
    if (P.infinity) return P;
    return QPoint::affine(C.twist * P.x, C.twist * C.twist * P.y);
}
inline QPoint unfold(const Curve& C, const QPoint& P) {
    if (P.infinity) return P;
    return QPoint::affine(P.x / C.twist, P.y / (C.twist * C.twist));
}

}  // namespace detail

inline bool on_curve(const Curve& C, const QPoint& P) {
    return on_model(detail::folded_model(C), detail::fold(C, P));
}

inline QPoint point_add(const Curve& C, const QPoint& P, const QPoint& Q) {
    if (!on_curve(C, P) || !on_curve(C, Q))
        throw std::invalid_argument("point_add: point not on curve");
    auto m = detail::folded_model(C);
    return detail::unfold(C, model_add(m, detail::fold(C, P), detail::fold(C, Q)));
}

inline QPoint point_double(const Curve& C, const QPoint& P) {
    return point_add(C, P, P);
}

inline QPoint point_mul(const Curve& C, long n, const QPoint& P) {
    if (!on_curve(C, P)) throw std::invalid_argument("point_mul: point not on curve");
    auto m = detail::folded_model(C);
    return detail::unfold(C, model_mul(m, n, detail::fold(C, P)));
}

// ---------------------------------------------------------------------------
// Torsion probe: n P for n up to the Mazur bound 12.  Either the exact
// torsion order, or a witness multiple certifying infinite order.

struct TorsionProbe {
    bool is_torsion;
    long order;      // valid when is_torsion
    QPoint witness;  // n_max * P otherwise
};

inline TorsionProbe torsion_probe(const Curve& C, const QPoint& P, long n_max = 12) {
    if (!on_curve(C, P)) throw std::invalid_argument("torsion_probe: point not on curve");
    if (is_singular(C)) throw std::invalid_argument("torsion_probe: singular curve");
    auto m = detail::folded_model(C);
    QPoint Pf = detail::fold(C, P);
    QPoint acc = QPoint::at_infinity();
    for (long n = 1; n <= n_max; ++n) {
        acc = model_add(m, acc, Pf);
        if (acc.infinity) return {true, n, QPoint::at_infinity()};
    }
    return {false, 0, detail::unfold(C, acc)};
}

}  // namespace ellav
