#pragma once

// Constructive design of families with a prescribed average root number:
// decomposition of the target into prime-power ratios, polynomials with a
// prescribed count of deep p-adic zeros, the two constructions over Z and
// the isotrivial construction over Q, each carrying a machine-checkable
// audit record so validation can run through the formula engines alone.

#include "ellav/averages.hpp"
#include "ellav/surface.hpp"

namespace ellav {

// ---------------------------------------------------------------------------
// h/k = prod d_i / p_i^{u_i} with |d_i| < p_i^{u_i} and d_i supported on
// the primes of h k.

struct RatioTerm {
    BigInt d;
    BigInt p;
    long u;
};

struct RatioDecomposition {
    std::vector<RatioTerm> terms;
    Rational value() const {
        Rational v(1);
        for (const auto& t : terms) v *= Rational(t.d) / Rational(pow_bi(t.p, t.u));
        return v;
    }
};

inline RatioDecomposition decompose_ratio(const BigInt& h_in, const BigInt& k_in) {
    if (k_in <= 0) throw std::invalid_argument("decompose_ratio: k must be positive");
    if (gcd_bi(h_in, k_in) != 1)
        throw std::invalid_argument("decompose_ratio: h/k must be reduced");
    if (h_in == 0 || abs(h_in) >= k_in)
        throw std::invalid_argument("decompose_ratio: need 0 < |h/k| < 1");
    BigInt h = h_in, k = k_in;
    RatioDecomposition out;
    for (;;) {
        auto kf = factorize(k);
        if (kf.factors.size() == 1) {
            out.terms.push_back({h, kf.factors[0].first, long(kf.factors[0].second)});
            return out;
        }
        // peel the first prime off k against the second
        BigInt p = kf.factors[0].first;
        BigInt q = kf.factors[1].first;
        long vpk = kf.factors[0].second;
        bool found = false;
        for (long u = vpk; u < vpk + 4000 && !found; ++u) {
            BigInt pu = pow_bi(p, u);
            BigInt qv = q;
            for (long v = 1; qv < pu; ++v, qv *= q) {
                // need |h/k| < q^v / p^u, i.e. |h| p^u < k q^v
                if (abs(h) * pu < k * qv) {
                    out.terms.push_back({qv, p, u});
                    h *= pu / pow_bi(p, vpk);
                    k = k / pow_bi(p, vpk) * qv;
                    found = true;
                    break;
                }
            }
        }
        if (!found)
            throw budget_exceeded("decompose_ratio: exponent search exhausted");
    }
}

// ---------------------------------------------------------------------------
// A polynomial with exactly m p^r zeros mod p^{r+l}, and p-adic valuation
// at most r + l - u away from them.

struct PrescribedZeroPoly {
    long r = 0;
    IntPoly P;                        // product of (t - b_i)^{c_i}
    long s = 0;                       // = r + l; valuation on the zero classes
    std::vector<BigInt> residues;     // the zero residues b_i mod p^l
    std::vector<long> exponents;      // the c_i
};

namespace detail {

inline BigInt digit_reversal(const BigInt& p, long l, long j) {
    BigInt out = 0, jj = j;
    for (long i = 0; i < l; ++i) {
        out = out * p + jj % p;
        jj /= p;
    }
    return out;
}

}  // namespace detail

inline PrescribedZeroPoly prescribed_zero_poly(const BigInt& p, long l,
                                               const BigInt& m_in, long u) {
    if (l < 1 || u < 1) throw std::invalid_argument("prescribed_zero_poly: l, u >= 1");
    BigInt pl = pow_bi(p, l);
    if (m_in < 0 || m_in > pl)
        throw std::invalid_argument("prescribed_zero_poly: need 0 <= m <= p^l");
    PrescribedZeroPoly out;
    if (m_in == 0) {
        out.P = IntPoly::constant(1);
        return out;
    }
    long m = to_long(m_in);
    if (m > 4096) throw budget_exceeded("prescribed_zero_poly: m too large");

    // residues ordered so that v_p(b_j - b_i) is nonincreasing in j past i:
    // digit-reversed counting
    std::vector<BigInt> b;
    for (long j = 0; j < m; ++j) b.push_back(detail::digit_reversal(p, l, j));

    // exponents as multiples of a common rational profile
    std::vector<Rational> gamma(m);
    gamma[0] = Rational(1, l);
    for (long j = 1; j < m; ++j) {
        Rational acc(1);
        for (long i = 0; i < j; ++i)
            acc -= gamma[i] * Rational(vp(b[j] - b[i], p));
        gamma[j] = acc / l;
        if (gamma[j] <= 0)
            throw std::logic_error("prescribed_zero_poly: nonpositive exponent");
    }
    BigInt s0 = 1;
    Rational gmin = gamma[0];
    for (const auto& g : gamma) {
        s0 = s0 / gcd_bi(s0, g.get_den()) * g.get_den();
        if (g < gmin) gmin = g;
    }
    // smallest multiple of s0 giving every exponent >= u
    BigInt s_big = s0;
    while (Rational(s_big) * gmin < u) s_big += s0;
    long s = to_long(s_big);

    out.s = s;
    out.r = s - l;
    if (out.r < 0)
        throw std::logic_error("prescribed_zero_poly: negative r");
    out.P = IntPoly::constant(1);
    for (long j = 0; j < m; ++j) {
        Rational cj = Rational(s) * gamma[j];
        if (cj.get_den() != 1) throw std::logic_error("prescribed_zero_poly: c_j not integral");
        long c = to_long(BigInt(cj.get_num()));
        out.residues.push_back(b[j]);
        out.exponents.push_back(c);
        IntPoly lin(std::vector<BigInt>{-b[j], BigInt(1)});
        out.P = out.P * lin.pow(unsigned(c));
    }

    // class-by-class postcondition: every residue class mod p^l is either a
    // zero class (valuation >= s everywhere above it) or has constant
    // valuation <= s - u
    for (long j = 0; j < m; ++j) {
        Rational depth(0);
        for (long i = 0; i < m; ++i)
            if (i != j) depth += Rational(out.exponents[i] * vp(b[j] - b[i], p));
        depth += Rational(out.exponents[j] * l);
        if (depth < s) throw std::logic_error("prescribed_zero_poly: shallow zero class");
    }
    BigInt plf = pl;
    for (BigInt rr = 0; rr < plf; rr += 1) {
        bool is_zero_class = false;
        for (long j = 0; j < m; ++j)
            if (rr == b[j]) { is_zero_class = true; break; }
        if (is_zero_class) continue;
        long val = 0;
        for (long j = 0; j < m; ++j) val += out.exponents[j] * vp(rr - b[j], p);
        if (val > s - u)
            throw std::logic_error("prescribed_zero_poly: off-class valuation too deep");
    }
    return out;
}

// ---------------------------------------------------------------------------
// Exact sign integral: c_inf(P) = (1/4) int_{-1}^{1} sgn P
//                                + (1/4) int_1^inf (sgn P(x) + sgn P(-x))/x^2.

namespace detail {

struct Breakpoint {
    Rational lo, hi;  // lo = hi for exact points
    bool exact;
};

// real roots of P as exact rationals where possible, tight intervals else
inline std::vector<Breakpoint> root_breakpoints(const IntPoly& P) {
    std::vector<Breakpoint> out;
    IntPoly rest = P.primitive_part();
    if (rest.leading() < 0) rest = -rest;
    std::vector<IntPoly> linear;
    rest = detail::strip_rational_roots(std::move(rest), linear);
    for (const auto& lin : linear) {
        if (lin.degree() != 1) continue;
        Rational root = Rational(-lin.c[0]) / Rational(lin.c[1]);
        root.canonicalize();
        out.push_back({root, root, true});
    }
    if (rest.degree() >= 1) {
        for (auto [lo, hi] : isolate_real_roots(rest, Rational(1, 10000000)))
            out.push_back({lo, hi, false});
    }
    std::sort(out.begin(), out.end(),
              [](const Breakpoint& a, const Breakpoint& b) { return a.lo < b.lo; });
    return out;
}

}  // namespace detail

// Exact when every real root of P is rational; otherwise a certified
// interval of width bounded by the root-isolation tolerance.
inline EulerProductValue c_infinity(const IntPoly& P) {
    if (P.is_zero()) throw std::invalid_argument("c_infinity: zero polynomial");
    if (P.degree() % 2 != 0)
        throw std::invalid_argument("c_infinity: degree must be even");
    auto sgn_at = [&](const Rational& x) {
        Rational v = P.eval(x);
        return v > 0 ? 1 : (v < 0 ? -1 : 0);
    };
    auto roots = detail::root_breakpoints(P);

    Rational sum(0), err(0);
    {
        // inner piece over [-1, 1]
        std::vector<detail::Breakpoint> cuts;
        cuts.push_back({Rational(-1), Rational(-1), true});
        for (const auto& r : roots)
            if (r.hi > -1 && r.lo < 1) cuts.push_back(r);
        cuts.push_back({Rational(1), Rational(1), true});
        for (size_t i = 0; i + 1 < cuts.size(); ++i) {
            Rational a = cuts[i].hi, b = cuts[i + 1].lo;
            if (b < a) continue;
            int sg = sgn_at((a + b) / 2);
            sum += Rational(sg) * (b - a) / 4;
            if (!cuts[i + 1].exact) err += (cuts[i + 1].hi - cuts[i + 1].lo) / 2;
        }
    }
    {
        // outer piece: g(x) = sgn P(x) + sgn P(-x) against dx/x^2 on [1, inf)
        std::vector<detail::Breakpoint> cuts;
        cuts.push_back({Rational(1), Rational(1), true});
        for (const auto& r : roots) {
            if (r.hi >= 1) cuts.push_back(r);
            if (r.lo <= -1) cuts.push_back({-r.hi, -r.lo, r.exact});
        }
        std::sort(cuts.begin(), cuts.end(),
                  [](const detail::Breakpoint& a, const detail::Breakpoint& b) {
                      return a.lo < b.lo;
                  });
        // merge overlapping isolation boxes (e.g. the two symmetric roots of
        // an even polynomial land on the same |root|)
        std::vector<detail::Breakpoint> merged;
        for (const auto& c : cuts) {
            if (!merged.empty() && c.lo <= merged.back().hi) {
                if (c.hi > merged.back().hi) merged.back().hi = c.hi;
                merged.back().exact = merged.back().exact && c.exact;
            } else {
                merged.push_back(c);
            }
        }
        auto g_at = [&](const Rational& x) { return sgn_at(x) + sgn_at(-x); };
        for (size_t i = 0; i + 1 < merged.size(); ++i) {
            Rational a = merged[i].hi, b = merged[i + 1].lo;
            if (b < a || a < 1) continue;
            int g = g_at((a + b) / 2);
            sum += Rational(g) * (Rational(1) / a - Rational(1) / b) / 4;
            if (!merged[i + 1].exact) {
                Rational w = merged[i + 1].hi - merged[i + 1].lo;
                err += w;  // |d(−1/x)| <= width on x >= 1, times |Δg| <= 4, over 4
            }
        }
        Rational last = merged.back().hi;
        if (last < 1) last = Rational(1);
        int g = g_at(last + 1);
        sum += Rational(g) / (4 * last);
    }
    EulerProductValue out;
    if (err == 0) {
        out.exact = sum;
        out.lower = out.upper = sum;
    } else {
        out.is_exact = false;
        out.lower = sum - err;
        out.upper = sum + err;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Designed families.

struct DesignedFamily {
    enum class Method { thm3, thm4, thm5_isotrivial } method;
    Surface surface;
    Rational predicted;
    BigInt modulus = 1;         // exact sign period for thm4 and passthroughs;
                                // effective scale p^2 for thm3; 1 over Q
    bool exact_periodic = false;

    std::function<int(const BigInt&)> eps;                  // over Z
    std::function<int(const BigInt&, const BigInt&)> epsQ;  // over Q (pairs r, s)

    // audit record: enough to rebuild and re-derive the prediction
    struct Block {
        BigInt p;
        long u = 0, r = 0;
        BigInt d;   // block mean is d / p^u
        BigInt m;   // prescribed zero count
        IntPoly Q;  // block polynomial
    };
    std::vector<Block> blocks;  // thm4 (index 0 is the dyadic block)
    BigInt prime = 0;           // thm3 progression prime
    long r_param = 0, m_param = 0;
    IntPoly a_poly, Q_poly, P_poly;
    BigInt a_const = 0;  // thm4 parameter a
};

namespace detail {

inline std::function<int(const BigInt&)> washington_eps(const BigInt& a,
                                                        const IntPoly& Q) {
    std::vector<BigInt> odd;
    for (const auto& [p, e] : factorize(a).factors)
        if (p != 2) odd.push_back(p);
    return [a, Q, odd](const BigInt& t) {
        return rn_Wa_sign_supported(a, Q.eval(t), odd);
    };
}

}  // namespace detail

// Progression construction: one prime carries the whole bias.
inline DesignedFamily design_av_thm3(const BigInt& h, const BigInt& k) {
    if (k <= 0) throw std::invalid_argument("design_av_thm3: k must be positive");
    if (gcd_bi(h, k) != 1 && h != 0)
        throw std::invalid_argument("design_av_thm3: h/k must be reduced");
    if (abs(h) > k) throw std::invalid_argument("design_av_thm3: need |h/k| <= 1");
    DesignedFamily out;
    out.method = DesignedFamily::Method::thm3;

    if (h == 0 || abs(h) == k) {
        // alternating / constant members of the base family
        BigInt a;
        IntPoly Q;
        if (h == 0) {
            a = 2;
            Q = IntPoly{1, 4};
            out.modulus = 2;
        } else if (h > 0) {
            a = 3;
            Q = IntPoly{1, 12};
            out.modulus = 1;
        } else {
            a = 1;
            Q = IntPoly{0, 1};
            out.modulus = 1;
        }
        out.exact_periodic = true;
        out.predicted = Rational(h) / Rational(k);
        out.predicted.canonicalize();
        out.a_poly = IntPoly::constant(a);
        out.Q_poly = Q;
        out.a_const = a;
        out.surface = detail::washington_at(a, Q);
        out.eps = detail::washington_eps(a, Q);
        return out;
    }

    BigInt P = find_prime_with(2 * k, -1);
    BigInt r = (P + 1) / (2 * k);
    BigInt m = P + 1 - 2 * r * abs(h);
    if (m <= 0 || m >= P || m % 2 != 0)
        throw std::logic_error("design_av_thm3: bad zero count");
    int sgn_h = h > 0 ? 1 : -1;

    IntPoly prod = IntPoly::constant(1);
    for (BigInt i = 1; i <= m; i += 1)
        prod = prod * IntPoly(std::vector<BigInt>{-i, BigInt(1)});
    IntPoly Ppoly = prod * BigInt(-sgn_h * P);
    IntPoly a_poly = Ppoly * BigInt(16 * P);
    IntPoly Q_poly = IntPoly(std::vector<BigInt>{1, 0, 4 * P}) * Ppoly;

    // the p-adic evaluation in closed form: +-(1 - m/(P+1)) must equal h/k
    Rational predicted = Rational(sgn_h) * (Rational(1) - Rational(m) / Rational(P + 1));
    predicted.canonicalize();
    if (predicted != Rational(h) / Rational(k))
        throw std::logic_error("design_av_thm3: prediction mismatch");

    out.predicted = predicted;
    out.prime = P;
    out.r_param = to_long(r);
    out.m_param = to_long(m);
    out.a_poly = a_poly;
    out.Q_poly = Q_poly;
    out.modulus = P * P;  // effective scale; the sign is not exactly periodic
    out.surface.a2 = Q_poly;
    out.surface.a4 = -(a_poly * Q_poly) - 3 * (a_poly * a_poly);
    out.surface.a6 = a_poly * a_poly * a_poly;

    BigInt mP = m;
    out.eps = [a_poly, Q_poly, P, mP](const BigInt& t) -> int {
        BigInt av = a_poly.eval(t);
        if (av == 0) return 0;  // degenerate fiber at the designed zeros
        std::vector<BigInt> odd{P};
        for (BigInt i = 1; i <= mP; i += 1) {
            if (t == i) continue;
            for (const auto& [p, e] : factorize(t - i).factors)
                if (p != 2 && p != P) odd.push_back(p);
        }
        std::sort(odd.begin(), odd.end());
        odd.erase(std::unique(odd.begin(), odd.end()), odd.end());
        return rn_Wa_sign_supported(av, Q_poly.eval(t), odd);
    };
    return out;
}

// Admissibility gate for the periodic construction: h odd and, for even k,
// |h/k| <= 1 - 2^{-v_2(k)}.
inline bool thm4_admissible(const BigInt& h, const BigInt& k) {
    if (k <= 0 || h == 0 || gcd_bi(h, k) != 1 || abs(h) > k) return false;
    if (mpz_even_p(h.get_mpz_t())) return false;
    long v2k = (k == 1) ? 0 : vp(k, 2);
    if (v2k > 0) {
        BigInt lhs = abs(h) * pow_bi(2, v2k);
        BigInt rhs = k * (pow_bi(2, v2k) - 1);
        if (lhs > rhs) return false;
    }
    return true;
}

// Periodic construction: one block per prime of k, assembled by the
// Chinese remainder theorem.  Admissible targets have h odd and, for even
// k, |h/k| <= 1 - 2^{-v_2(k)}.
inline DesignedFamily design_av_thm4(const BigInt& h, const BigInt& k) {
    if (k <= 0) throw std::invalid_argument("design_av_thm4: k must be positive");
    if (gcd_bi(h, k) != 1)
        throw std::invalid_argument("design_av_thm4: h/k must be reduced");
    if (mpz_even_p(h.get_mpz_t()))
        throw std::invalid_argument("design_av_thm4: h must be odd (admissibility)");
    if (abs(h) > k) throw std::invalid_argument("design_av_thm4: need |h/k| <= 1");
    long v2k = (k == 1) ? 0 : vp(k, 2);
    if (!thm4_admissible(h, k))
        throw std::invalid_argument(
            "design_av_thm4: |h/k| exceeds 1 - 2^{-v2(k)} (admissibility)");

    DesignedFamily out;
    out.method = DesignedFamily::Method::thm4;
    if (abs(h) == k) {  // +-1: constant members
        BigInt a = h > 0 ? 3 : 1;
        IntPoly Q = h > 0 ? IntPoly{1, 12} : IntPoly{0, 1};
        out.predicted = Rational(h) / Rational(k);
        out.predicted.canonicalize();
        out.exact_periodic = true;
        out.modulus = 1;
        out.a_const = a;
        out.a_poly = IntPoly::constant(a);
        out.Q_poly = Q;
        out.surface = detail::washington_at(a, Q);
        out.eps = detail::washington_eps(a, Q);
        return out;
    }

    // split the target into the dyadic mean and odd prime-power means
    long u0;
    BigInt m0;  // dyadic zero count
    Rational mean0;
    RatioDecomposition odd_terms;
    if (v2k > 0) {
        u0 = v2k + 1;
        m0 = pow_bi(2, u0) - 1;
        mean0 = -make_rational(pow_bi(2, u0) - 2, pow_bi(2, u0));
        Rational target = Rational(h) / Rational(k) / mean0 * Rational(-1);
        target.canonicalize();  // odd numerator and denominator
        if (target == 1) {
            odd_terms = {};
        } else if (target == -1) {
            m0 = 1;  // flip the dyadic mean's sign instead
            mean0 = -mean0;
            odd_terms = {};
        } else {
            odd_terms = decompose_ratio(target.get_num(), target.get_den());
        }
    } else {
        u0 = 1;
        m0 = 2;  // the all-zeros dyadic block: constant -1 sign, mean -1
        mean0 = Rational(-1);
        odd_terms = decompose_ratio(h, k);
    }

    // dyadic block
    auto zp0 = prescribed_zero_poly(2, u0, m0, 2);
    DesignedFamily::Block b0;
    b0.p = 2;
    b0.u = u0;
    b0.r = zp0.r;
    b0.m = m0;
    b0.d = 0;
    b0.Q = zp0.P;
    IntPoly B0 = zp0.P * zp0.P * 2 -
                 IntPoly::constant(pow_bi(2, 2 * zp0.r + 2 * u0 - 1));
    out.blocks.push_back(b0);

    std::vector<IntPoly> Bs{B0};
    std::vector<BigInt> ps{BigInt(2)};
    std::vector<long> us{u0}, rs{zp0.r};
    Rational prod_means = mean0;
    for (const auto& term : odd_terms.terms) {
        int chi = (mod_long(term.p, 4) == 3) ? 1 : -1;
        BigInt m_i = (pow_bi(term.p, term.u) + chi * term.d) / 2;
        auto zp = prescribed_zero_poly(term.p, term.u, m_i, 1);
        DesignedFamily::Block b;
        b.p = term.p;
        b.u = term.u;
        b.r = zp.r;
        b.m = m_i;
        b.d = term.d;
        b.Q = zp.P;
        out.blocks.push_back(b);
        IntPoly Bi = zp.P * zp.P * term.p -
                     IntPoly::constant(pow_bi(term.p, 2 * zp.r + 2 * term.u));
        Bs.push_back(Bi);
        ps.push_back(term.p);
        us.push_back(term.u);
        rs.push_back(zp.r);
        prod_means *= Rational(term.d) / Rational(pow_bi(term.p, term.u));
    }

    Rational predicted = -prod_means;
    predicted.canonicalize();
    if (predicted != Rational(h) / Rational(k))
        throw std::logic_error("design_av_thm4: prediction mismatch");

    // assemble a and Q(t) by the Chinese remainder theorem
    BigInt a = 4;
    long rmax = 0;
    for (size_t i = 0; i < ps.size(); ++i) {
        a *= pow_bi(ps[i], 2 * rs[i] + 2 * us[i] + 1);
        rmax = std::max(rmax, us[i] + rs[i] + 1);
    }
    long r_exp = 2 * rmax;
    IntPoly Q;
    BigInt all = 1;
    for (const auto& p : ps) all *= p;
    for (size_t i = 0; i < ps.size(); ++i) {
        BigInt others = all / ps[i];
        BigInt inv;
        if (!mpz_invert(inv.get_mpz_t(), others.get_mpz_t(), ps[i].get_mpz_t()))
            throw std::logic_error("design_av_thm4: CRT inversion failed");
        BigInt coef = pow_bi(others, r_exp) * pow_bi(inv, r_exp);
        Q = Q + Bs[i] * coef;
    }

    BigInt modulus = 1;
    for (size_t i = 0; i < ps.size(); ++i) modulus *= pow_bi(ps[i], rs[i] + us[i]);

    out.predicted = predicted;
    out.exact_periodic = true;
    out.modulus = modulus;
    out.a_const = a;
    out.a_poly = IntPoly::constant(a);
    out.Q_poly = Q;
    out.surface = detail::washington_at(a, Q);
    out.eps = detail::washington_eps(a, Q);
    return out;
}

// Isotrivial construction over Q: the sign of the specialization is the sign
// of P at the parameter, so the average is the archimedean integral.
inline DesignedFamily design_av_Q_isotrivial(const BigInt& h, const BigInt& k) {
    if (k <= 0) throw std::invalid_argument("design_av_Q_isotrivial: k must be positive");
    if (gcd_bi(h, k) != 1 && h != 0)
        throw std::invalid_argument("design_av_Q_isotrivial: h/k must be reduced");
    if (abs(h) > k) throw std::invalid_argument("design_av_Q_isotrivial: |h/k| <= 1");

    // P(x) = k^2 x^2 - (k - |h|)^2, negated for negative targets
    BigInt t0num = k - abs(h);
    IntPoly P(std::vector<BigInt>{-t0num * t0num, BigInt(0), k * k});
    if (h < 0) P = -P;

    auto ci = c_infinity(P);
    Rational want = Rational(h) / Rational(k);
    want.canonicalize();
    if (!ci.is_exact || ci.exact != want)
        throw std::logic_error("design_av_Q_isotrivial: archimedean integral mismatch");

    DesignedFamily out;
    out.method = DesignedFamily::Method::thm5_isotrivial;
    out.predicted = want;
    out.P_poly = P;
    out.Q_poly = -P;
    out.a_poly = P * BigInt(-16);
    out.surface.a2 = out.Q_poly;
    out.surface.a4 = -(out.a_poly * out.Q_poly) - 3 * (out.a_poly * out.a_poly);
    out.surface.a6 = out.a_poly * out.a_poly * out.a_poly;
    IntPoly Pcap = P;
    out.epsQ = [Pcap](const BigInt& r, const BigInt& s) -> int {
        BigInt v = Pcap.eval_hom(r, s);
        return v > 0 ? 1 : (v < 0 ? -1 : 0);
    };
    return out;
}

// Validation sweep through the formula engines only.
inline EmpiricalAverage validate_design(const DesignedFamily& fam, long T,
                                        int jobs = 0) {
    if (fam.eps) return empirical_av_Z(fam.eps, T, jobs);
    if (fam.epsQ) return empirical_av_Q(fam.epsQ, T, jobs);
    throw std::invalid_argument("validate_design: no evaluator");
}

}  // namespace ellav
