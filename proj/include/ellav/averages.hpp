#pragma once

// Average root numbers: exact finite Euler products for the W family,
// certified-interval infinite products for the V family, empirical averages
// over Z and Q, and exact p-adic integrals of the modified local signs.
// The integrals and the Euler factors are independent routes to the same
// rationals and referee each other.

#include <mpfr.h>

#include <atomic>
#include <numeric>
#include <thread>

#include "ellav/rootnumber.hpp"

namespace ellav {

// ---------------------------------------------------------------------------
// Values of Euler products: exact rationals for finite products, certified
// enclosures for truncated infinite ones.  Interval endpoints are exact
// dyadic rationals extracted from directed-rounding arithmetic.

struct EulerProductValue {
    bool is_exact = true;
    Rational exact;         // meaningful when is_exact
    Rational lower, upper;  // always set; lower = upper = exact when exact
    long prime_cutoff = 0;  // 0 for finite products

    bool contains(const Rational& x) const { return lower <= x && x <= upper; }
    Rational width() const { return upper - lower; }
};

namespace detail {

// directed-rounding interval on 128-bit mpfr numbers
class Interval {
  public:
    Interval() {
        mpfr_init2(lo_, 128);
        mpfr_init2(hi_, 128);
        mpfr_set_si(lo_, 1, MPFR_RNDD);
        mpfr_set_si(hi_, 1, MPFR_RNDU);
    }
    ~Interval() {
        mpfr_clear(lo_);
        mpfr_clear(hi_);
    }
    Interval(const Interval&) = delete;
    Interval& operator=(const Interval&) = delete;

    void mul(const Rational& r) {
        if (r >= 0) {
            mpfr_mul_q(lo_, lo_, r.get_mpq_t(), MPFR_RNDD);
            mpfr_mul_q(hi_, hi_, r.get_mpq_t(), MPFR_RNDU);
        } else {
            mpfr_t t;
            mpfr_init2(t, 128);
            mpfr_mul_q(t, hi_, r.get_mpq_t(), MPFR_RNDD);
            mpfr_mul_q(hi_, lo_, r.get_mpq_t(), MPFR_RNDU);
            mpfr_set(lo_, t, MPFR_RNDD);
            mpfr_clear(t);
        }
    }

    // multiply by [e^-B, e^+B], B >= 0 rational
    void widen_exp(const Rational& B) {
        mpfr_t bu, eu, ed, t;
        mpfr_inits2(128, bu, eu, ed, t, (mpfr_ptr) nullptr);
        mpfr_set_q(bu, B.get_mpq_t(), MPFR_RNDU);
        mpfr_exp(eu, bu, MPFR_RNDU);  // upper bound on e^B
        mpfr_neg(t, bu, MPFR_RNDD);
        mpfr_exp(ed, t, MPFR_RNDD);   // lower bound on e^-B
        // lo: scaled toward -inf, hi: toward +inf
        if (mpfr_sgn(lo_) >= 0)
            mpfr_mul(lo_, lo_, ed, MPFR_RNDD);
        else
            mpfr_mul(lo_, lo_, eu, MPFR_RNDD);
        if (mpfr_sgn(hi_) >= 0)
            mpfr_mul(hi_, hi_, eu, MPFR_RNDU);
        else
            mpfr_mul(hi_, hi_, ed, MPFR_RNDU);
        mpfr_clears(bu, eu, ed, t, (mpfr_ptr) nullptr);
    }

    void negate() {
        mpfr_swap(lo_, hi_);
        mpfr_neg(lo_, lo_, MPFR_RNDD);
        mpfr_neg(hi_, hi_, MPFR_RNDU);
    }

    static Rational to_rational(const mpfr_t x) {
        if (mpfr_zero_p(x)) return Rational(0);
        mpz_t m;
        mpz_init(m);
        mpfr_exp_t e = mpfr_get_z_2exp(m, x);
        BigInt mant{mpz_class(m)};
        Rational out{mant};
        mpz_clear(m);
        if (e >= 0) {
            out *= Rational(pow_bi(2, e));
        } else {
            out /= Rational(pow_bi(2, -e));
        }
        return out;
    }
    Rational lower() const { return to_rational(lo_); }
    Rational upper() const { return to_rational(hi_); }

  private:
    mpfr_t lo_, hi_;
};

inline int default_jobs() {
    if (const char* env = std::getenv("ELLAV_JOBS")) {
        int j = std::atoi(env);
        if (j > 0) return j;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? int(hc) : 1;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Euler factors of the W family (support 2a).

inline Rational euler_factor_Wa(const BigInt& a, const BigInt& p) {
    if (a == 0) throw std::invalid_argument("euler_factor_Wa: a must be nonzero");
    if ((2 * a) % p != 0)
        throw std::invalid_argument("euler_factor_Wa: p does not divide 2a");
    if (p == 2) {
        auto A = padic_split(a, 2);
        long v = A.exponent;
        long a8 = mod_long(A.unit, 8);
        bool pm1 = a8 == 1 || a8 == 7;
        if (v == 0) return pm1 ? Rational(1) : Rational(1, 2);
        if (v == 1) return Rational(0);
        if (v == 2) return pm1 ? Rational(1, 2) : Rational(3, 8);
        if (v == 3) return Rational(1, 4);
        Rational tail = make_rational(pow_bi(2, v - 4) - 1, 3 * pow_bi(2, v - 4));
        if (v % 2 == 0) {
            Rational head = pm1 ? make_rational(2, pow_bi(2, v))
                                : make_rational(3, pow_bi(2, v + 1));
            return head - tail;
        }
        // odd v >= 5
        return make_rational(2, pow_bi(2, v)) +
               make_rational(BigInt(1) - pow_bi(2, v - 3), 3 * pow_bi(2, v - 3));
    }
    long v = vp(a, p);
    if (v == 0) throw std::invalid_argument("euler_factor_Wa: odd p must divide a");
    long half = v / 2;
    if (mod_long(p, 4) == 1) {
        Rational geo = (Rational(1) - make_rational(1, pow_bi(p, 2 * half))) /
                       Rational(p + 1);
        return geo + make_rational(1, pow_bi(p, v));
    }
    Rational mp2 = make_rational(-1, pow_bi(p, 2));
    Rational pw = Rational(1);
    for (long i = 0; i < half; ++i) pw *= mp2;
    Rational head = Rational(-(p - 1)) / Rational(p * p + 1) * (Rational(1) - pw);
    Rational second = make_rational(1, pow_bi(p, v));
    if (v % 2 == 1) second = -second;
    return head + second;
}

inline EulerProductValue av_Wa(const BigInt& a) {
    if (a == 0) throw std::invalid_argument("av_Wa: a must be nonzero");
    Rational prod = euler_factor_Wa(a, 2);
    for (const auto& [p, e] : factorize(a).factors)
        if (p != 2) prod *= euler_factor_Wa(a, p);
    EulerProductValue out;
    out.exact = -prod;
    out.lower = out.upper = out.exact;
    return out;
}

// ---------------------------------------------------------------------------
// Euler factors of the V family (all primes; = 1 for p = 1 (mod 3) away
// from 6a).

inline Rational euler_factor_Va(const BigInt& a, const BigInt& p) {
    if (a == 0) throw std::invalid_argument("euler_factor_Va: a must be nonzero");
    if (p == 2) {
        long v = vp(a, 2);
        if (v == 0) return Rational(-1, 2);
        if (v == 1) return Rational(0);
        if (v == 2) return Rational(1, 8);
        if (v % 2 == 1) {  // v >= 3 odd
            Rational geo = (make_rational(1, pow_bi(4, (v - 3) / 2)) - 1) / 3;
            return make_rational(2, pow_bi(2, v)) + geo;
        }
        // v >= 4 even
        Rational geo = (make_rational(1, pow_bi(4, (v - 4) / 2)) - 1) / 3;
        return make_rational(1, pow_bi(2, v + 1)) + geo;
    }
    if (p == 3) {
        long v = vp(a, 3);
        Rational lead = Rational(6, 7) * make_rational(1, pow_bi(3, v + 2));
        if (v % 2 == 0)
            return lead + Rational(3, 4) * (make_rational(1, pow_bi(3, v)) - 1);
        return lead + Rational(3, 4) * (make_rational(3, pow_bi(3, v)) - 1);
    }
    long v = vp(a, p);
    long j = v % 2;
    Rational m1(kronecker(-1, p));
    Rational first = m1 * (Rational(1) - make_rational(pow_bi(p, j), pow_bi(p, v))) /
                     Rational(p + 1);
    Rational second = (j == 0 ? Rational(1) : m1) * make_rational(1, pow_bi(p, v));
    if (mod_long(p, 3) == 2) {
        BigInt p6 = pow_bi(p, 6);
        Rational corr = Rational(4 * (p - 1)) *
                        Rational(pow_bi(p, 1 - j) + pow_bi(p, 3 + j)) /
                        Rational(p6 - 1);
        second *= Rational(1) - corr;
    }
    return first + second;
}

// Truncated infinite product with a certified tail: for p > cutoff away from
// 6a only p = 2 (mod 3) contributes and |E(p) - 1| <= 4/p^2, so
// |log prod_{p>cutoff}| <= sum_{p>cutoff} 8/p^2 <= 8/(cutoff - 1).
inline EulerProductValue av_Va(const BigInt& a, long cutoff) {
    if (a == 0) throw std::invalid_argument("av_Va: a must be nonzero");
    if (cutoff < 5) throw std::invalid_argument("av_Va: cutoff must be >= 5");
    detail::Interval iv;
    iv.mul(euler_factor_Va(a, 2));
    iv.mul(euler_factor_Va(a, 3));
    std::vector<BigInt> a_primes;
    for (const auto& [p, e] : factorize(a).factors)
        if (p >= 5) a_primes.push_back(p);
    for (const auto& p : a_primes) iv.mul(euler_factor_Va(a, p));
    for (uint32_t p : primes_up_to(uint32_t(cutoff))) {
        if (p < 5 || p % 3 != 2) continue;
        if (a % p == 0) continue;  // already included exactly
        iv.mul(euler_factor_Va(a, p));
    }
    iv.widen_exp(Rational(8, cutoff - 1));
    iv.negate();  // the average is minus the product
    EulerProductValue out;
    out.is_exact = false;
    out.lower = iv.lower();
    out.upper = iv.upper();
    out.prime_cutoff = cutoff;
    return out;
}

// ---------------------------------------------------------------------------
// Empirical averages.

struct EmpiricalAverage {
    BigInt sum;       // sum of signs
    long count = 0;   // nonsingular fibers counted
    long total = 0;   // terms enumerated (2T+1 over Z, coprime pairs over Q)
    Rational mean;    // sum / total
    long T = 0;
    double asymptotic_mean = 0;  // pi^2/(12 T^2) normalization, reference only
};

// Symmetric mean over t in [-T, T], dividing by 2T + 1; singular fibers
// contribute 0.  Chunked deterministic reduction, parallel over t.
inline EmpiricalAverage empirical_av_Z(const std::function<int(const BigInt&)>& eps,
                                       long T, int jobs = 0) {
    if (T < 1) throw std::invalid_argument("empirical_av_Z: T must be positive");
    if (jobs <= 0) jobs = detail::default_jobs();
    const long chunk = 4096;
    const long lo = -T;
    const long n_chunks = (2 * T + 1 + chunk - 1) / chunk;
    std::vector<long> sums(n_chunks, 0), counts(n_chunks, 0);
    std::atomic<long> next{0};
    auto worker = [&]() {
        for (;;) {
            long c = next.fetch_add(1);
            if (c >= n_chunks) return;
            long from = lo + c * chunk;
            long to = std::min(from + chunk - 1, T);
            long s = 0, cnt = 0;
            for (long t = from; t <= to; ++t) {
                int e = eps(BigInt(t));
                s += e;
                if (e != 0) ++cnt;
            }
            sums[c] = s;
            counts[c] = cnt;
        }
    };
    std::vector<std::thread> pool;
    for (int i = 1; i < jobs; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    EmpiricalAverage out;
    out.sum = 0;
    for (long c = 0; c < n_chunks; ++c) {
        out.sum += sums[c];
        out.count += counts[c];
    }
    out.total = 2 * T + 1;
    out.mean = make_rational(out.sum, out.total);
    out.T = T;
    return out;
}

// Mean of eps(r/s) over coprime pairs |r|, |s| <= T, s > 0, normalized by the
// number of pairs enumerated.  eps receives the pair (r, s).
inline EmpiricalAverage empirical_av_Q(
    const std::function<int(const BigInt&, const BigInt&)>& eps, long T,
    int jobs = 0) {
    if (T < 1) throw std::invalid_argument("empirical_av_Q: T must be positive");
    if (jobs <= 0) jobs = detail::default_jobs();
    std::vector<long> sums(T + 1, 0), counts(T + 1, 0), totals(T + 1, 0);
    std::atomic<long> next{1};
    auto worker = [&]() {
        for (;;) {
            long s = next.fetch_add(1);
            if (s > T) return;
            long acc = 0, cnt = 0, tot = 0;
            for (long r = -T; r <= T; ++r) {
                if (std::gcd(std::abs(r), s) != 1) continue;
                ++tot;
                int e = eps(BigInt(r), BigInt(s));
                acc += e;
                if (e != 0) ++cnt;
            }
            sums[s] = acc;
            counts[s] = cnt;
            totals[s] = tot;
        }
    };
    std::vector<std::thread> pool;
    for (int i = 1; i < jobs; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    EmpiricalAverage out;
    out.sum = 0;
    for (long s = 1; s <= T; ++s) {
        out.sum += sums[s];
        out.count += counts[s];
        out.total += totals[s];
    }
    out.mean = out.total ? make_rational(out.sum, out.total) : Rational(0);
    out.T = T;
    out.asymptotic_mean =
        out.sum.get_d() * 3.1415926535897932 * 3.1415926535897932 / (12.0 * T * T);
    return out;
}

// ---------------------------------------------------------------------------
// Exact p-adic integral of a sign function over Z_p.
//
// The function must be determined by t mod p^depth away from finitely many
// deep centers c (the points where its case tree keys on v_p(t - c)).  On a
// center's class the annulus means m(e) = sum over units d mod p^k of
// w(c + d p^e) become 6-periodic in e once e >= depth, so the remaining
// series closes as a geometric sum; if they do not, the depth is too small.

inline Rational local_integral(const std::function<int(const BigInt&)>& w,
                               const BigInt& p, long depth,
                               const std::vector<Rational>& centers) {
    // Residues whose distance to a center has valuation in [depth-2, depth)
    // are not determined by t mod p^depth (the case conditions read units to
    // a few extra digits), so the two outermost shells around each center
    // are summed exactly as annuli before the periodic tail takes over.
    const long slack = 2;
    if (depth <= slack)
        throw std::invalid_argument("local_integral: depth must be > 2");
    const long k = (p == 2) ? 3 : (p == 3) ? 2 : 1;
    const long guard = 20;
    BigInt modulus = pow_bi(p, depth);
    BigInt near_mod = pow_bi(p, depth - slack);
    BigInt big_mod = pow_bi(p, depth + 12 + k + guard);

    // p-adic approximations of the centers
    std::vector<BigInt> c_big, c_near;
    for (const auto& c : centers) {
        BigInt den = c.get_den();
        if (gcd_bi(den, p) != 1)
            throw std::invalid_argument("local_integral: center not p-integral");
        BigInt inv;
        if (!mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), big_mod.get_mpz_t()))
            throw std::invalid_argument("local_integral: center inversion failed");
        BigInt cb = (BigInt(c.get_num()) * inv) % big_mod;
        if (cb < 0) cb += big_mod;
        c_big.push_back(cb);
        c_near.push_back(cb % near_mod);
    }
    for (size_t i = 0; i < c_near.size(); ++i)
        for (size_t j = i + 1; j < c_near.size(); ++j)
            if (c_near[i] == c_near[j])
                throw std::invalid_argument(
                    "local_integral: centers collide at this depth; increase depth");

    // determined part: classes staying away from every center
    BigInt det_sum = 0;
    for (BigInt r = 0; r < modulus; r += 1) {
        bool deep = false;
        for (const auto& cn : c_near)
            if (r % near_mod == cn) { deep = true; break; }
        if (deep) continue;
        det_sum += w(r);
    }
    Rational total = make_rational(det_sum, modulus);

    // around each center: exact shells, then the 6-periodic geometric tail
    BigInt pk = pow_bi(p, k);
    for (const auto& cb : c_big) {
        auto shell_sum = [&](long e) {
            BigInt pe = pow_bi(p, e);
            long acc = 0;
            for (BigInt d = 1; d < pk; d += 1) {
                if (d % p == 0) continue;
                acc += w(cb + d * pe);
            }
            return acc;
        };
        for (long e = depth - slack; e < depth; ++e)
            total += make_rational(shell_sum(e), pow_bi(p, e + k));
        std::vector<long> m;
        for (long e = depth; e < depth + 12; ++e) m.push_back(shell_sum(e));
        for (int j = 0; j < 6; ++j)
            if (m[j] != m[j + 6])
                throw std::invalid_argument(
                    "local_integral: tail not stationary; increase depth");
        // sum_{e >= depth} m(e) p^{-(e+k)} with m 6-periodic
        Rational geo = Rational(pow_bi(p, 6)) / Rational(pow_bi(p, 6) - 1);
        for (int j = 0; j < 6; ++j)
            total += make_rational(m[j], pow_bi(p, depth + j + k)) * geo;
    }
    return total;
}

// Integrals of the families' modified local signs, with their deep centers.
inline Rational local_integral_Wa(const BigInt& a, const BigInt& p, long depth = 0) {
    if (depth <= 0) depth = vp(a, p) + 6;
    return local_integral(wstar_Wa(a, p), p, depth, {Rational(0)});
}

inline Rational local_integral_Va(const BigInt& a, const BigInt& p, long depth = 0) {
    if (depth <= 0) depth = vp(a, p) + 6;
    std::vector<Rational> centers{Rational(0), Rational(a)};
    if (p == 3) centers.push_back(Rational(a) / 2);
    return local_integral(wstar_Va(a, p), p, depth, centers);
}

}  // namespace ellav
