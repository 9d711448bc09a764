#pragma once

// Exact univariate polynomial algebra over Z and Q: arithmetic, gcd,
// square-free part, resultants (including one two-variable entry point),
// rational-root extraction and complete factorization over Q up to degree 6.

#include <initializer_list>
#include <map>
#include <optional>
#include <sstream>

#include "ellav/algebra.hpp"

namespace ellav {

// ---------------------------------------------------------------------------
// Z[t], constant term first. Canonical: no trailing zero coefficients; the
// zero polynomial is the empty vector.

struct IntPoly {
    std::vector<BigInt> c;

    IntPoly() = default;
    IntPoly(std::initializer_list<long> v) {
        for (long x : v) c.emplace_back(x);
        trim();
    }
    explicit IntPoly(std::vector<BigInt> v) : c(std::move(v)) { trim(); }
    static IntPoly constant(const BigInt& a) {
        IntPoly p;
        if (a != 0) p.c.push_back(a);
        return p;
    }
    static IntPoly monomial(const BigInt& a, size_t deg) {
        IntPoly p;
        if (a != 0) {
            p.c.assign(deg + 1, BigInt(0));
            p.c[deg] = a;
        }
        return p;
    }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    long degree() const { return long(c.size()) - 1; }
    BigInt coeff(size_t i) const { return i < c.size() ? c[i] : BigInt(0); }
    const BigInt& leading() const { return c.back(); }

    bool operator==(const IntPoly& o) const { return c == o.c; }

    IntPoly operator-() const {
        IntPoly r = *this;
        for (auto& x : r.c) x = -x;
        return r;
    }
    IntPoly operator+(const IntPoly& o) const {
        IntPoly r;
        r.c.resize(std::max(c.size(), o.c.size()), BigInt(0));
        for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = coeff(i) + o.coeff(i);
        r.trim();
        return r;
    }
    IntPoly operator-(const IntPoly& o) const { return *this + (-o); }
    IntPoly operator*(const IntPoly& o) const {
        if (is_zero() || o.is_zero()) return {};
        IntPoly r;
        r.c.assign(c.size() + o.c.size() - 1, BigInt(0));
        for (size_t i = 0; i < c.size(); ++i)
            for (size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
        r.trim();
        return r;
    }
    IntPoly operator*(const BigInt& k) const {
        if (k == 0) return {};
        IntPoly r = *this;
        for (auto& x : r.c) x *= k;
        return r;
    }

    IntPoly pow(unsigned e) const {
        IntPoly r = IntPoly::constant(1), b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    BigInt eval(const BigInt& x) const {
        BigInt r = 0;
        for (size_t i = c.size(); i-- > 0;) r = r * x + c[i];
        return r;
    }
    Rational eval(const Rational& x) const {
        Rational r = 0;
        for (size_t i = c.size(); i-- > 0;) r = r * x + Rational(c[i]);
        return r;
    }
    // s^deg(P) * P(r/s): the homogeneous value used for arguments in Q
    BigInt eval_hom(const BigInt& r, const BigInt& s) const {
        if (is_zero()) return 0;
        BigInt acc = 0, spow = 1;
        for (size_t i = c.size(); i-- > 0;) acc = acc * r + c[i] * spow, spow *= s;
        return acc;
    }

    IntPoly derivative() const {
        IntPoly r;
        for (size_t i = 1; i < c.size(); ++i) r.c.push_back(c[i] * long(i));
        r.trim();
        return r;
    }

    IntPoly compose(const IntPoly& inner) const {
        IntPoly r;
        for (size_t i = c.size(); i-- > 0;) r = r * inner + IntPoly::constant(c[i]);
        return r;
    }

    BigInt content() const {  // >= 0
        BigInt g = 0;
        for (const auto& x : c) g = gcd_bi(g, x);
        return g;
    }
    IntPoly primitive_part() const {  // keeps the sign of the leading coefficient
        if (is_zero()) return {};
        BigInt g = content();
        IntPoly r = *this;
        for (auto& x : r.c) x /= g;
        return r;
    }

    std::string str(const std::string& var = "t") const;
};

inline IntPoly operator*(const BigInt& k, const IntPoly& p) { return p * k; }

// ---------------------------------------------------------------------------
// Q[t].

struct QPoly {
    std::vector<Rational> c;

    QPoly() = default;
    explicit QPoly(std::vector<Rational> v) : c(std::move(v)) { trim(); }
    explicit QPoly(const IntPoly& p) {
        for (const auto& x : p.c) c.emplace_back(x);
    }
    static QPoly constant(const Rational& a) {
        QPoly p;
        if (a != 0) p.c.push_back(a);
        return p;
    }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    long degree() const { return long(c.size()) - 1; }
    Rational coeff(size_t i) const { return i < c.size() ? c[i] : Rational(0); }
    const Rational& leading() const { return c.back(); }

    bool operator==(const QPoly& o) const { return c == o.c; }

    QPoly operator-() const {
        QPoly r = *this;
        for (auto& x : r.c) x = -x;
        return r;
    }
    QPoly operator+(const QPoly& o) const {
        QPoly r;
        r.c.resize(std::max(c.size(), o.c.size()), Rational(0));
        for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = coeff(i) + o.coeff(i);
        r.trim();
        return r;
    }
    QPoly operator-(const QPoly& o) const { return *this + (-o); }
    QPoly operator*(const QPoly& o) const {
        if (is_zero() || o.is_zero()) return {};
        QPoly r;
        r.c.assign(c.size() + o.c.size() - 1, Rational(0));
        for (size_t i = 0; i < c.size(); ++i)
            for (size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
        r.trim();
        return r;
    }
    QPoly operator*(const Rational& k) const {
        if (k == 0) return {};
        QPoly r = *this;
        for (auto& x : r.c) x *= k;
        return r;
    }

    Rational eval(const Rational& x) const {
        Rational r = 0;
        for (size_t i = c.size(); i-- > 0;) r = r * x + c[i];
        return r;
    }

    QPoly derivative() const {
        QPoly r;
        for (size_t i = 1; i < c.size(); ++i) r.c.push_back(c[i] * Rational(long(i)));
        r.trim();
        return r;
    }

    QPoly monic() const {
        if (is_zero()) return {};
        QPoly r = *this;
        Rational inv = 1 / leading();
        for (auto& x : r.c) x *= inv;
        return r;
    }
};

inline void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
    if (b.is_zero()) throw std::invalid_argument("QPoly divmod: division by zero");
    q = {};
    r = a;
    long db = b.degree();
    Rational invlead = 1 / b.leading();
    while (!r.is_zero() && r.degree() >= db) {
        long k = r.degree() - db;
        Rational f = r.leading() * invlead;
        if (q.c.size() < size_t(k + 1)) q.c.resize(k + 1, Rational(0));
        q.c[k] += f;
        for (long i = 0; i <= db; ++i) r.c[i + k] -= f * b.c[i];
        r.trim();
    }
    q.trim();
}

inline QPoly qgcd(QPoly a, QPoly b) {  // monic gcd
    while (!b.is_zero()) {
        QPoly q, r;
        divmod(a, b, q, r);
        a = b;
        b = r;
    }
    return a.monic();
}

// Clear denominators: returns (primitive integer polynomial with the same
// sign pattern, rational content) with content * poly == input.
inline std::pair<IntPoly, Rational> clear_denominators(const QPoly& p) {
    if (p.is_zero()) return {IntPoly{}, Rational(0)};
    BigInt den = 1;
    for (const auto& x : p.c) den = den / gcd_bi(den, x.get_den()) * x.get_den();
    IntPoly ip;
    for (const auto& x : p.c)
        ip.c.push_back(BigInt(x.get_num()) * (den / x.get_den()));
    ip.trim();
    BigInt cont = ip.content();
    IntPoly prim = ip.primitive_part();
    return {prim, make_rational(cont, den)};
}

inline IntPoly to_int_poly(const QPoly& p) {
    auto [prim, cont] = clear_denominators(p);
    if (cont.get_den() != 1)
        throw std::invalid_argument("to_int_poly: non-integer coefficients");
    return prim * BigInt(cont.get_num());
}

// ---------------------------------------------------------------------------
// gcd over Q, returned as a primitive integer polynomial with positive
// leading coefficient.

inline IntPoly poly_gcd(const IntPoly& P, const IntPoly& Q) {
    if (P.is_zero() && Q.is_zero())
        throw std::invalid_argument("poly_gcd: both arguments zero");
    if (P.is_zero()) {
        IntPoly r = Q.primitive_part();
        return r.leading() < 0 ? -r : r;
    }
    if (Q.is_zero()) {
        IntPoly r = P.primitive_part();
        return r.leading() < 0 ? -r : r;
    }
    QPoly g = qgcd(QPoly(P), QPoly(Q));
    IntPoly r = clear_denominators(g).first;
    return r.leading() < 0 ? -r : r;
}

inline IntPoly squarefree_part(const IntPoly& P) {
    if (P.is_zero()) throw std::invalid_argument("squarefree_part: zero polynomial");
    if (P.degree() == 0) return IntPoly::constant(1);
    IntPoly g = poly_gcd(P, P.derivative());
    QPoly q, r;
    divmod(QPoly(P), QPoly(g), q, r);
    IntPoly sf = clear_denominators(q).first;
    return sf.leading() < 0 ? -sf : sf;
}

// ---------------------------------------------------------------------------
// Resultants. Entries of the Sylvester matrix live in a commutative ring R;
// the determinant is expanded row by row over memoized column subsets, which
// is cheap at these sizes (m + n <= 12).

namespace detail {

template <class R>
R det_subset(const std::vector<std::vector<R>>& M, uint32_t mask, size_t row,
             std::map<uint32_t, R>& memo, const R& zero) {
    size_t n = M.size();
    if (row == n) return R(IntPoly::constant(1));
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    R acc = zero;
    int sign = 1;
    for (size_t col = 0; col < n; ++col) {
        if (mask & (1u << col)) continue;
        R sub = det_subset(M, mask | (1u << col), row + 1, memo, zero);
        R term = M[row][col] * sub;
        acc = (sign > 0) ? acc + term : acc - term;
        sign = -sign;
    }
    memo.emplace(mask, acc);
    return acc;
}

}  // namespace detail

// Res_z(P, Q) for P = sum p_i z^i, Q = sum q_j z^j with IntPoly coefficients
// (polynomials in the surviving variable). Plain integers embed as constants.
inline IntPoly resultant_z(const std::vector<IntPoly>& P,
                           const std::vector<IntPoly>& Q) {
    auto deg = [](const std::vector<IntPoly>& v) {
        long d = long(v.size()) - 1;
        while (d >= 0 && v[d].is_zero()) --d;
        return d;
    };
    long m = deg(P), n = deg(Q);
    if (m < 0 || n < 0) throw std::invalid_argument("resultant: zero polynomial");
    if (m == 0 && n == 0) return IntPoly::constant(1);
    size_t N = size_t(m + n);
    std::vector<std::vector<IntPoly>> M(N, std::vector<IntPoly>(N, IntPoly{}));
    for (long r = 0; r < n; ++r)  // rows of P coefficients (leading first)
        for (long i = 0; i <= m; ++i) M[r][r + i] = P[m - i];
    for (long r = 0; r < m; ++r)
        for (long j = 0; j <= n; ++j) M[n + r][r + j] = Q[n - j];
    std::map<uint32_t, IntPoly> memo;
    return detail::det_subset(M, 0u, 0, memo, IntPoly{});
}

inline BigInt resultant(const IntPoly& P, const IntPoly& Q) {
    std::vector<IntPoly> vp, vq;
    for (const auto& x : P.c) vp.push_back(IntPoly::constant(x));
    for (const auto& x : Q.c) vq.push_back(IntPoly::constant(x));
    IntPoly r = resultant_z(vp, vq);
    return r.is_zero() ? BigInt(0) : r.c[0];
}

// ---------------------------------------------------------------------------
// Factorization over Q for degree <= 6.

struct QFactorization {
    Rational content;
    // primitive, positive leading coefficient, irreducible over Q,
    // sorted by (degree, lexicographic coefficient order)
    std::vector<std::pair<IntPoly, unsigned>> factors;

    QPoly value() const {
        QPoly v = QPoly::constant(content);
        for (const auto& [f, m] : factors) v = v * QPoly(f.pow(m));
        return v;
    }
    long count() const {  // number of irreducible factors, with multiplicity
        long n = 0;
        for (const auto& [f, m] : factors) n += m;
        return n;
    }
};

namespace detail {

inline std::vector<BigInt> divisors_of(const BigInt& n) {
    std::vector<BigInt> out{1};
    for (const auto& [p, e] : factorize(n).factors) {
        size_t sz = out.size();
        BigInt pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < sz; ++i) out.push_back(out[i] * pk);
        }
    }
    return out;
}

// Exact division test over Q; on success returns the quotient.
inline std::optional<QPoly> try_divide(const IntPoly& P, const IntPoly& q) {
    QPoly quo, rem;
    divmod(QPoly(P), QPoly(q), quo, rem);
    if (!rem.is_zero()) return std::nullopt;
    return quo;
}

// Strip rational roots (with multiplicity) from a primitive polynomial.
// Appends the linear factors; returns the root-free residual (primitive).
inline IntPoly strip_rational_roots(IntPoly P, std::vector<IntPoly>& out) {
    for (;;) {
        if (P.degree() <= 0) return P;
        if (P.c[0] == 0) {  // root at 0
            out.push_back(IntPoly{0, 1});
            P.c.erase(P.c.begin());
            continue;
        }
        bool found = false;
        auto us = divisors_of(P.c[0]);
        auto vs = divisors_of(P.leading());
        for (const auto& u : us) {
            for (const auto& v : vs) {
                if (gcd_bi(u, v) != 1) continue;
                for (int sgn : {1, -1}) {
                    Rational r = make_rational(sgn * u, v);
                    if (P.eval(r) != 0) continue;
                    IntPoly lin;  // v*t - sgn*u, primitive with positive leading
                    lin.c = {-sgn * u, v};
                    out.push_back(lin);
                    auto quo = try_divide(P, lin);
                    P = clear_denominators(*quo).first;
                    if (P.leading() < 0) P = -P;
                    found = true;
                    break;
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) return P;
    }
}

inline bool is_even_poly(const IntPoly& P) {
    for (size_t i = 1; i < P.c.size(); i += 2)
        if (P.c[i] != 0) return false;
    return true;
}

// Coefficient bound for factors of P (Mignotte-type: 2^deg * |P|_2).
inline BigInt factor_coeff_bound(const IntPoly& P) {
    BigInt s = 0;
    for (const auto& x : P.c) s += x * x;
    return (isqrt(s) + 1) << unsigned(P.degree());
}

// Search for an integer factor of exact degree d via interpolation through
// divisors of P at d+1 small integer points.
inline std::optional<IntPoly> kronecker_search(const IntPoly& P, long d) {
    static const long points[] = {0, 1, -1, 2, -2, 3, -3};
    std::vector<long> xs;
    std::vector<BigInt> vals;
    for (long x : points) {
        BigInt v = P.eval(BigInt(x));
        if (v == 0) continue;  // no rational roots remain, but stay safe
        xs.push_back(x);
        vals.push_back(v);
        if (long(xs.size()) == d + 1) break;
    }
    if (long(xs.size()) != d + 1) return std::nullopt;
    BigInt bound = factor_coeff_bound(P);

    std::vector<std::vector<BigInt>> divs(xs.size());
    for (size_t i = 0; i < xs.size(); ++i) {
        auto base = divisors_of(vals[i]);
        for (const auto& u : base) {
            if (i == 0) {
                divs[i].push_back(u);  // sign fixed at the first point
            } else {
                divs[i].push_back(u);
                divs[i].push_back(-u);
            }
        }
    }

    std::vector<size_t> idx(xs.size(), 0);
    std::vector<Rational> ys(xs.size());
    for (;;) {
        for (size_t i = 0; i < xs.size(); ++i) ys[i] = Rational(divs[i][idx[i]]);
        // Lagrange interpolation
        QPoly q;
        for (size_t i = 0; i < xs.size(); ++i) {
            QPoly li = QPoly::constant(Rational(1));
            Rational denom(1);
            for (size_t j = 0; j < xs.size(); ++j) {
                if (j == i) continue;
                QPoly lin;  // t - x_j
                lin.c = {Rational(-xs[j]), Rational(1)};
                li = li * lin;
                denom *= Rational(xs[i] - xs[j]);
            }
            q = q + li * (ys[i] / denom);
        }
        if (q.degree() == d) {
            bool integral = true, bounded = true;
            for (const auto& x : q.c) {
                if (x.get_den() != 1) { integral = false; break; }
                if (abs(BigInt(x.get_num())) > bound) { bounded = false; break; }
            }
            if (integral && bounded) {
                IntPoly cand = to_int_poly(q).primitive_part();
                if (cand.leading() < 0) cand = -cand;
                if (cand.degree() == d && try_divide(P, cand)) return cand;
            }
        }
        // advance the odometer
        size_t i = 0;
        while (i < idx.size() && ++idx[i] == divs[i].size()) idx[i++] = 0;
        if (i == idx.size()) return std::nullopt;
    }
}

void factor_primitive(IntPoly P, std::vector<IntPoly>& out, bool allow_even_shortcut);

// Factor g(x^2) where g is irreducible over Q; degree of the result <= 6.
inline void factor_even_piece(const IntPoly& g, std::vector<IntPoly>& out) {
    IntPoly piece;
    for (long i = 0; i <= g.degree(); ++i) {
        piece.c.resize(2 * i + 1, BigInt(0));
        piece.c[2 * i] = g.coeff(i);
    }
    piece.trim();
    factor_primitive(piece, out, /*allow_even_shortcut=*/false);
}

inline void factor_primitive(IntPoly P, std::vector<IntPoly>& out,
                             bool allow_even_shortcut) {
    if (P.degree() <= 0) return;
    P = strip_rational_roots(std::move(P), out);
    long d = P.degree();
    if (d <= 0) return;
    if (d <= 3) {  // no rational root: irreducible for degree <= 3
        out.push_back(P);
        return;
    }
    if (allow_even_shortcut && is_even_poly(P)) {
        IntPoly half;  // P(x) = half(x^2)
        for (size_t i = 0; i < P.c.size(); i += 2) half.c.push_back(P.c[i]);
        half.trim();
        std::vector<IntPoly> half_factors;
        factor_primitive(half, half_factors, false);
        for (const auto& g : half_factors) factor_even_piece(g, out);
        return;
    }
    if (auto q = kronecker_search(P, 2)) {
        auto quo = try_divide(P, *q);
        IntPoly rest = clear_denominators(*quo).first;
        if (rest.leading() < 0) rest = -rest;
        out.push_back(*q);
        factor_primitive(rest, out, false);
        return;
    }
    if (d == 6) {
        if (auto q = kronecker_search(P, 3)) {
            auto quo = try_divide(P, *q);
            IntPoly rest = clear_denominators(*quo).first;
            if (rest.leading() < 0) rest = -rest;
            out.push_back(*q);
            factor_primitive(rest, out, false);
            return;
        }
    }
    // no factor of degree <= half: irreducible
    out.push_back(P);
}

}  // namespace detail

inline QFactorization factor_over_Q(const IntPoly& P) {
    if (P.is_zero()) throw std::invalid_argument("factor_over_Q: zero polynomial");
    if (P.degree() > 6)
        throw std::invalid_argument("factor_over_Q: unsupported degree > 6");
    IntPoly prim = P.primitive_part();
    if (prim.leading() < 0) prim = -prim;
    std::vector<IntPoly> flat;
    detail::factor_primitive(prim, flat, /*allow_even_shortcut=*/true);

    QFactorization out;
    std::sort(flat.begin(), flat.end(), [](const IntPoly& a, const IntPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.c < b.c;
    });
    for (size_t i = 0; i < flat.size();) {
        size_t j = i;
        while (j < flat.size() && flat[j] == flat[i]) ++j;
        out.factors.emplace_back(flat[i], unsigned(j - i));
        i = j;
    }
    BigInt lead_prod = 1;
    for (const auto& [f, m] : out.factors) lead_prod *= pow_bi(f.leading(), m);
    out.content = make_rational(P.leading(), lead_prod);
    return out;
}

// ---------------------------------------------------------------------------
// Q(t): reduced ratios of polynomials, denominator monic.

struct RatFunc {
    QPoly num, den;  // invariants: den monic, gcd(num, den) = 1, den != 0

    RatFunc() : den(QPoly::constant(Rational(1))) {}
    RatFunc(long v) : den(QPoly::constant(Rational(1))) {
        num = QPoly::constant(Rational(v));
    }
    explicit RatFunc(const IntPoly& p) : num(QPoly(p)), den(QPoly::constant(Rational(1))) {}
    explicit RatFunc(QPoly p) : num(std::move(p)), den(QPoly::constant(Rational(1))) {}
    explicit RatFunc(const Rational& q) : num(QPoly::constant(q)), den(QPoly::constant(Rational(1))) {}
    RatFunc(QPoly n, QPoly d) {
        if (d.is_zero()) throw std::invalid_argument("RatFunc: zero denominator");
        QPoly g = qgcd(n, d);
        if (!g.is_zero() && g.degree() >= 0) {
            QPoly q, r;
            divmod(n, g, q, r);
            n = q;
            divmod(d, g, q, r);
            d = q;
        }
        Rational lead = d.leading();
        num = n * (1 / lead);
        den = d * (1 / lead);
    }

    bool is_zero() const { return num.is_zero(); }
    bool operator==(const RatFunc& o) const { return num == o.num && den == o.den; }

    RatFunc operator-() const {
        RatFunc r = *this;
        r.num = -r.num;
        return r;
    }
    RatFunc operator+(const RatFunc& o) const {
        return RatFunc(num * o.den + o.num * den, den * o.den);
    }
    RatFunc operator-(const RatFunc& o) const { return *this + (-o); }
    RatFunc operator*(const RatFunc& o) const {
        return RatFunc(num * o.num, den * o.den);
    }
    RatFunc operator/(const RatFunc& o) const {
        if (o.is_zero()) throw std::invalid_argument("RatFunc: division by zero");
        return RatFunc(num * o.den, den * o.num);
    }

    Rational eval(const Rational& t) const {
        Rational d = den.eval(t);
        if (d == 0) throw std::invalid_argument("RatFunc: pole at evaluation point");
        return num.eval(t) / d;
    }
};

// ---------------------------------------------------------------------------
// Sturm chains and real-root isolation (used for exact sign integrals).

namespace detail {

inline std::vector<QPoly> sturm_chain(const IntPoly& P) {
    std::vector<QPoly> chain;
    QPoly f = QPoly(squarefree_part(P));
    chain.push_back(f);
    chain.push_back(f.derivative());
    while (!chain.back().is_zero()) {
        QPoly q, r;
        divmod(chain[chain.size() - 2], chain.back(), q, r);
        chain.push_back(-r);
    }
    chain.pop_back();
    return chain;
}

inline int sign_of(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

inline long sturm_variations(const std::vector<QPoly>& chain, const Rational& x) {
    long v = 0;
    int prev = 0;
    for (const auto& f : chain) {
        int s = sign_of(f.eval(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

}  // namespace detail

// Number of distinct real roots of P in (lo, hi].
inline long count_real_roots(const IntPoly& P, const Rational& lo, const Rational& hi) {
    auto chain = detail::sturm_chain(P);
    return detail::sturm_variations(chain, lo) - detail::sturm_variations(chain, hi);
}

// Disjoint isolating intervals (lo, hi] for every real root, each of width
// <= max_width, endpoints rational, sorted left to right.
inline std::vector<std::pair<Rational, Rational>> isolate_real_roots(
    const IntPoly& P, const Rational& max_width) {
    auto chain = detail::sturm_chain(P);
    // Cauchy bound
    BigInt maxc = 0;
    const IntPoly sf = squarefree_part(P);
    for (const auto& x : sf.c) maxc = std::max(maxc, BigInt(abs(x)));
    Rational B = Rational(maxc) / Rational(abs(sf.leading())) + 2;
    std::vector<std::pair<Rational, Rational>> out;
    std::vector<std::pair<Rational, Rational>> stack{{-B, B}};
    while (!stack.empty()) {
        auto [lo, hi] = stack.back();
        stack.pop_back();
        long n = detail::sturm_variations(chain, lo) - detail::sturm_variations(chain, hi);
        if (n == 0) continue;
        if (n == 1 && hi - lo <= max_width) {
            out.emplace_back(lo, hi);
            continue;
        }
        Rational mid = (lo + hi) / 2;
        stack.push_back({lo, mid});
        stack.push_back({mid, hi});
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Text form: integer-coefficient polynomial expressions in one variable.

inline std::string IntPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        BigInt a = c[i];
        if (first) {
            if (a < 0) os << "-";
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        BigInt m = abs(a);
        if (i == 0) {
            os << m.get_str();
        } else {
            if (m != 1) os << m.get_str() << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

// Accepts sums of monomials: "3t^2 - 5*t + 1", "-t^4+2", "7".
inline IntPoly parse_int_poly(const std::string& text, char var = 't') {
    IntPoly out;
    size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && isspace(text[i])) ++i; };
    skip_ws();
    if (i == text.size()) throw std::invalid_argument("parse_int_poly: empty input");
    while (i < text.size()) {
        int sign = 1;
        skip_ws();
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip_ws();
        }
        BigInt coeff = 1;
        bool have_coeff = false;
        if (i < text.size() && isdigit(text[i])) {
            std::string digits;
            while (i < text.size() && isdigit(text[i])) digits += text[i++];
            coeff = BigInt(digits);
            have_coeff = true;
        }
        skip_ws();
        if (i < text.size() && text[i] == '*') {
            ++i;
            skip_ws();
        }
        unsigned long deg = 0;
        if (i < text.size() && text[i] == var) {
            ++i;
            deg = 1;
            skip_ws();
            if (i < text.size() && text[i] == '^') {
                ++i;
                skip_ws();
                std::string digits;
                while (i < text.size() && isdigit(text[i])) digits += text[i++];
                if (digits.empty())
                    throw std::invalid_argument("parse_int_poly: missing exponent");
                deg = std::stoul(digits);
            }
        } else if (!have_coeff) {
            throw std::invalid_argument("parse_int_poly: expected term at '" +
                                        text.substr(i) + "'");
        }
        if (out.c.size() < deg + 1) out.c.resize(deg + 1, BigInt(0));
        out.c[deg] += sign * coeff;
        skip_ws();
    }
    out.trim();
    return out;
}

}  // namespace ellav
