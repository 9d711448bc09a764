#pragma once

// Exact integer and rational arithmetic: p-adic splitting, Kronecker symbols,
// primality, factorization and prime search in arithmetic progressions.
// GMP supplies the arbitrary-precision types; every routine is deterministic
// for a fixed input, so values can be shared freely across threads.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ellav {

using BigInt = mpz_class;
using Rational = mpq_class;

// Thrown when a configured work budget (factorization, prime search) runs out.
struct budget_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline long to_long(const BigInt& n) {
    if (!n.fits_slong_p()) throw std::overflow_error("to_long: out of range");
    return n.get_si();
}

// n mod m as a C long in [0, m), m > 0 small.
inline long mod_long(const BigInt& n, long m) {
    BigInt r = n % m;
    if (r < 0) r += m;
    return r.get_si();
}

inline BigInt pow_bi(const BigInt& b, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

inline BigInt gcd_bi(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;  // gcd(x, 0) = |x|
}

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// ---------------------------------------------------------------------------
// p-adic splitting: n = p^e * u with p coprime to u.

struct PadicSplit {
    long exponent;  // v_p(n)
    BigInt unit;    // n_p = n / p^{v_p(n)}
};

inline PadicSplit padic_split(const BigInt& n, const BigInt& p) {
    if (n == 0) throw std::invalid_argument("padic_split: v_p(0) is infinite");
    PadicSplit out{0, n};
    BigInt q, r;
    for (;;) {
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), out.unit.get_mpz_t(),
                    p.get_mpz_t());
        if (r != 0) break;
        out.unit = q;
        ++out.exponent;
    }
    return out;
}

inline long vp(const BigInt& n, const BigInt& p) { return padic_split(n, p).exponent; }
inline BigInt unit_part(const BigInt& n, const BigInt& p) { return padic_split(n, p).unit; }

// ---------------------------------------------------------------------------
// Kronecker symbol (full extension: n may be even, negative or zero).

inline int kronecker(const BigInt& a, const BigInt& n) {
    return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

// ---------------------------------------------------------------------------
// Primality. Miller-Rabin: the fixed witness set {2,...,37} decides
// every n < 2^64; above that we run 64 rounds with the first 64 primes
// as bases, which is deterministic output-wise but only probabilistically
// correct.

namespace detail {

inline bool miller_rabin_witness(const BigInt& n, const BigInt& a,
                                 const BigInt& d, long s) {
    BigInt x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return false;
    for (long i = 1; i < s; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return false;
    }
    return true;  // a witnesses compositeness
}

inline const std::vector<long>& mr_bases_small() {
    static const std::vector<long> b = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    return b;
}

}  // namespace detail

inline std::vector<uint32_t> primes_up_to(uint32_t limit) {
    std::vector<bool> composite(limit + 1, false);
    std::vector<uint32_t> out;
    for (uint32_t i = 2; i <= limit; ++i) {
        if (!composite[i]) {
            out.push_back(i);
            for (uint64_t j = uint64_t(i) * i; j <= limit; j += i)
                composite[j] = true;
        }
    }
    return out;
}

inline bool is_prime(const BigInt& n_in) {
    BigInt n = abs(n_in);
    if (n < 2) return false;
    for (long p : detail::mr_bases_small()) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    BigInt d = n - 1;
    long s = 0;
    while (mpz_even_p(d.get_mpz_t())) { d >>= 1; ++s; }
    static const BigInt two_64 = BigInt(1) << 64;
    if (n < two_64) {
        for (long a : detail::mr_bases_small())
            if (detail::miller_rabin_witness(n, a, d, s)) return false;
        return true;
    }
    static const std::vector<uint32_t> bases = primes_up_to(311);  // 64 primes
    for (size_t i = 0; i < 64 && i < bases.size(); ++i)
        if (detail::miller_rabin_witness(n, bases[i], d, s)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Factorization: trial division up to a bound, then Pollard-Brent rho.
// An exhausted budget raises budget_exceeded; callers must not proceed with
// a partial factorization.

struct PrimeFactorization {
    // (prime, exponent), primes strictly increasing; product = |n|.
    std::vector<std::pair<BigInt, unsigned>> factors;

    BigInt value() const {
        BigInt v = 1;
        for (const auto& [p, e] : factors) v *= pow_bi(p, e);
        return v;
    }
    long exponent_of(const BigInt& p) const {
        for (const auto& [q, e] : factors)
            if (q == p) return e;
        return 0;
    }
};

namespace detail {

inline uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return (uint64_t)((unsigned __int128)a * b % m);
}

inline uint64_t pow_u64(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

inline bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    uint64_t d = n - 1;
    int s = 0;
    while (!(d & 1)) { d >>= 1; ++s; }
    for (uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        uint64_t x = pow_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool comp = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { comp = false; break; }
        }
        if (comp) return false;
    }
    return true;
}

inline uint64_t gcd_u64(uint64_t a, uint64_t b) {
    while (b) { uint64_t t = a % b; a = b; b = t; }
    return a;
}

// Pollard-Brent on machine words; n odd composite, not a prime power of a
// tiny prime. Returns a nontrivial factor.
inline uint64_t pollard_brent_u64(uint64_t n) {
    if (!(n & 1)) return 2;
    for (uint64_t c = 1;; ++c) {
        uint64_t x = 2, y = 2, d = 1;
        uint64_t q = 1;
        int lam = 1;
        while (d == 1) {
            x = y;
            for (int i = 0; i < lam; ++i) y = (mulmod_u64(y, y, n) + c) % n;
            int k = 0;
            while (k < lam && d == 1) {
                uint64_t ys = y;
                int lim = std::min(128, lam - k);
                for (int i = 0; i < lim; ++i) {
                    y = (mulmod_u64(y, y, n) + c) % n;
                    q = mulmod_u64(q, x > y ? x - y : y - x, n);
                }
                d = gcd_u64(q, n);
                if (d == n) {
                    // backtrack
                    d = 1;
                    do {
                        ys = (mulmod_u64(ys, ys, n) + c) % n;
                        d = gcd_u64(x > ys ? x - ys : ys - x, n);
                    } while (d == 1);
                    break;
                }
                k += lim;
            }
            lam *= 2;
        }
        if (d != n) return d;
    }
}

inline void factor_u64_into(uint64_t n, std::vector<uint64_t>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) { out.push_back(n); return; }
    for (uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}) {
        if (n % p == 0) {
            out.push_back(p);
            factor_u64_into(n / p, out);
            return;
        }
    }
    uint64_t d = pollard_brent_u64(n);
    factor_u64_into(d, out);
    factor_u64_into(n / d, out);
}

inline long factor_budget() {
    if (const char* env = std::getenv("ELLAV_FACTOR_BUDGET"))
        return std::atol(env);
    return 200000;  // trial-division bound for oversize inputs
}

inline void factor_mpz_into(const BigInt& n, std::vector<BigInt>& out, int depth) {
    if (n == 1) return;
    if (is_prime(n)) { out.push_back(n); return; }
    if (depth > 64) throw budget_exceeded("incomplete factorization: recursion limit");
    // rho with a fixed polynomial walk; iteration cap keeps this a budgeted step
    const long cap = 4000000;
    for (long c = 1; c <= 20; ++c) {
        BigInt x = 2, y = 2, d = 1;
        long it = 0;
        while (d == 1) {
            if (++it > cap) break;
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            d = gcd_bi(x - y, n);
        }
        if (d != 1 && d != n) {
            factor_mpz_into(d, out, depth + 1);
            factor_mpz_into(n / d, out, depth + 1);
            return;
        }
    }
    throw budget_exceeded("incomplete factorization: rho budget exhausted for " +
                          n.get_str());
}

}  // namespace detail

inline PrimeFactorization factorize(const BigInt& n_in) {
    if (n_in == 0) throw std::invalid_argument("factorize: n must be nonzero");
    BigInt n = abs(n_in);
    std::vector<BigInt> primes;
    if (n.fits_ulong_p() && sizeof(unsigned long) == 8) {
        std::vector<uint64_t> ps;
        detail::factor_u64_into(n.get_ui(), ps);
        for (uint64_t p : ps) primes.emplace_back(BigInt(static_cast<unsigned long>(p)));
    } else {
        // strip small primes first, then budgeted rho on the remainder
        const long bound = detail::factor_budget();
        for (uint32_t p : primes_up_to(uint32_t(std::min<long>(bound, 1 << 20)))) {
            while (n % p == 0) {
                primes.emplace_back(p);
                n /= p;
            }
            if (n == 1) break;
        }
        if (n > 1) detail::factor_mpz_into(n, primes, 0);
    }
    std::sort(primes.begin(), primes.end());
    PrimeFactorization out;
    for (size_t i = 0; i < primes.size();) {
        size_t j = i;
        while (j < primes.size() && primes[j] == primes[i]) ++j;
        out.factors.emplace_back(primes[i], unsigned(j - i));
        i = j;
    }
    return out;
}

// Product of the distinct primes dividing a (the kernel of a).
inline BigInt kernel(const BigInt& a) {
    BigInt k = 1;
    for (const auto& [p, e] : factorize(a).factors) k *= p;
    return k;
}

// ---------------------------------------------------------------------------
// Smallest prime p ≡ residue (mod k) with p > floor, by stepping through the
// progression. Dirichlet guarantees termination when gcd(residue, k) = 1.

inline BigInt find_prime_with(const BigInt& k, const BigInt& residue,
                              const BigInt& floor = 0, long budget = 2000000) {
    if (k <= 0) throw std::invalid_argument("find_prime_with: modulus must be positive");
    if (gcd_bi(residue, k) != 1)
        throw std::invalid_argument("find_prime_with: residue not coprime to modulus");
    BigInt r = residue % k;
    if (r <= 0) r += k;
    BigInt lo = floor < 1 ? BigInt(1) : floor;  // first candidate is > lo and >= 2
    BigInt q, diff = lo - r;
    mpz_fdiv_q(q.get_mpz_t(), diff.get_mpz_t(), k.get_mpz_t());
    BigInt cand = r + k * q;
    while (cand <= lo || cand < 2) cand += k;
    for (long i = 0; i < budget; ++i, cand += k)
        if (is_prime(cand)) return cand;
    throw budget_exceeded("find_prime_with: search budget exhausted");
}

// ---------------------------------------------------------------------------
// Square / fourth-power tests over Z and Q.

inline bool is_square(const BigInt& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t());
}

inline bool is_square(const Rational& q) {
    return q >= 0 && is_square(q.get_num()) && is_square(q.get_den());
}

inline bool is_fourth_power(const BigInt& n) {
    if (n < 0) return false;
    if (n == 0) return true;
    BigInt r;
    return mpz_root(r.get_mpz_t(), n.get_mpz_t(), 4) != 0;
}

inline bool is_fourth_power(const Rational& q) {
    return q >= 0 && is_fourth_power(BigInt(q.get_num())) &&
           is_fourth_power(BigInt(q.get_den()));
}

// n is c times a square (c squarefree): equivalent to c*n being a square.
inline bool is_times_square(const BigInt& c, const BigInt& n) {
    return is_square(BigInt(c * n));
}

inline BigInt isqrt(const BigInt& n) {
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

// ---------------------------------------------------------------------------
// Text forms.

inline std::string rational_str(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// decimal rendering with directed rounding: dir < 0 floors, dir > 0 ceils
inline std::string decimal_str(const Rational& q, int digits = 12, int dir = 0) {
    BigInt scale = pow_bi(10, digits);
    BigInt num = q.get_num() * scale;
    BigInt den = q.get_den();
    BigInt quo, rem;
    mpz_fdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (rem != 0 && dir > 0) quo += 1;
    if (rem != 0 && dir == 0 && 2 * rem >= den) quo += 1;
    bool neg = quo < 0;
    BigInt a = abs(quo);
    std::string s = a.get_str();
    if (long(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
    return (neg ? "-" : "") + s;
}

}  // namespace ellav
