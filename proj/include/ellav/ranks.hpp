#pragma once

// Generic rank over Q(t): the prime-averaged trace estimator two ways, the
// closed-form rank predicates of the catalogue, the degree-2 family rank
// formula through polynomial factor counts, and symbolic generic-point
// verification.

#include <atomic>
#include <cmath>
#include <thread>

#include "ellav/averages.hpp"
#include "ellav/surface.hpp"

namespace ellav {

// ---------------------------------------------------------------------------
// A_F(p) = (1/p) sum_t a_{F(t)}(p), computed either by the O(p^2) double
// loop or by the O(p) complete character sums over the fiber quadratic.

enum class NagaoMethod { direct, charsum };

namespace detail {

struct FiberQuadratic {
    // x^3 + a2(t)x^2 + a4(t)x + a6(t) = A(x)t^2 + B(x)t + C(x)
    IntPoly A, B, C;
};

inline FiberQuadratic fiber_quadratic(const Surface& S) {
    if (S.a2.degree() > 2 || S.a4.degree() > 2 || S.a6.degree() > 2)
        throw std::invalid_argument("nagao: coefficients must have degree <= 2 in t");
    FiberQuadratic q;
    auto pick = [&](long k) {
        IntPoly out;
        out.c = {S.a6.coeff(k), S.a4.coeff(k), S.a2.coeff(k)};
        out.trim();
        return out;
    };
    q.C = IntPoly{0, 0, 0, 1} + pick(0);
    q.B = pick(1);
    q.A = pick(2);
    return q;
}

// coefficients reduced once per prime; Horner over machine words after that
struct ReducedPoly {
    long c[4] = {0, 0, 0, 0};
    int deg = -1;
    ReducedPoly() = default;
    ReducedPoly(const IntPoly& f, long p) {
        deg = int(std::min<long>(f.degree(), 3));
        for (int i = 0; i <= deg; ++i) c[i] = mod_long(f.c[i], p);
    }
    long eval(long x, long p) const {
        uint64_t acc = 0;
        for (int i = deg; i >= 0; --i)
            acc = (mulmod_u64(acc, x, p) + uint64_t(c[i])) % p;
        return long(acc);
    }
};

}  // namespace detail

inline Rational nagao_AF(const Surface& S, long p, NagaoMethod method) {
    if (p < 5) throw std::invalid_argument("nagao_AF: p must be >= 5");
    detail::ResidueTable tab(p);
    long w = mod_long(S.twist, p);
    int chi_w = tab.chi[w];
    if (chi_w == 0) return Rational(0);  // p divides the twist: all fibers bad

    long S_total = 0;
    if (method == NagaoMethod::direct) {
        // sum_t sum_x chi(f_t(x)), fiber by fiber
        long A2[3], A4[3], A6[3];
        for (int k = 0; k < 3; ++k) {
            A2[k] = mod_long(S.a2.coeff(k), p);
            A4[k] = mod_long(S.a4.coeff(k), p);
            A6[k] = mod_long(S.a6.coeff(k), p);
        }
        for (long t = 0; t < p; ++t) {
            uint64_t t2 = detail::mulmod_u64(t, t, p);
            long a2 = long((A2[0] + detail::mulmod_u64(A2[1], t, p) +
                            detail::mulmod_u64(A2[2], t2, p)) % p);
            long a4 = long((A4[0] + detail::mulmod_u64(A4[1], t, p) +
                            detail::mulmod_u64(A4[2], t2, p)) % p);
            long a6 = long((A6[0] + detail::mulmod_u64(A6[1], t, p) +
                            detail::mulmod_u64(A6[2], t2, p)) % p);
            for (long x = 0; x < p; ++x) {
                uint64_t f = x;
                f = (f + a2) % p;
                f = (detail::mulmod_u64(f, x, p) + a4) % p;
                f = (detail::mulmod_u64(f, x, p) + a6) % p;
                S_total += tab.chi[f];
            }
        }
    } else {
        auto q = detail::fiber_quadratic(S);
        detail::ReducedPoly Ar(q.A, p), Br(q.B, p), Cr(q.C, p);
        for (long x = 0; x < p; ++x) {
            long A = Ar.eval(x, p);
            long B = Br.eval(x, p);
            long C = Cr.eval(x, p);
            if (A == 0) {
                if (B == 0) S_total += p * tab.chi[C];
                // else the linear character sum vanishes
            } else {
                long disc = long((detail::mulmod_u64(B, B, p) + 4 * p -
                                  detail::mulmod_u64(4 % p, detail::mulmod_u64(A, C, p), p)) %
                                 p);
                S_total += -tab.chi[A] + (disc == 0 ? p * tab.chi[A] : 0);
            }
        }
    }
    // a(t) = -(w/p) sum_x chi(f); A_F(p) = (1/p) sum_t a(t)
    return make_rational(BigInt(-chi_w) * S_total, p);
}

// ---------------------------------------------------------------------------
// The running estimator (1/X) sum_{p <= X} -A_F(p) log p.

struct NagaoEstimate {
    long X = 0;
    std::vector<std::pair<long, double>> checkpoints;  // (X_i, estimate at X_i)
    double final = 0;
};

inline NagaoEstimate nagao_rank(const Surface& S, long X, int jobs = 0) {
    if (X < 10) throw std::invalid_argument("nagao_rank: X too small");
    if (jobs <= 0) jobs = detail::default_jobs();
    auto primes = primes_up_to(uint32_t(X));
    std::vector<double> term(primes.size(), 0.0);
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= primes.size()) return;
            long p = primes[i];
            if (p < 5) continue;
            Rational af = nagao_AF(S, p, NagaoMethod::charsum);
            term[i] = -af.get_d() * std::log(double(p));
        }
    };
    std::vector<std::thread> pool;
    for (int i = 1; i < jobs; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    NagaoEstimate out;
    out.X = X;
    double acc = 0;
    size_t cp = 1;
    for (size_t i = 0; i < primes.size(); ++i) {
        while (cp <= 10 && long(primes[i]) > X * long(cp) / 10) {
            long mark = X * long(cp) / 10;
            out.checkpoints.emplace_back(mark, acc / double(mark));
            ++cp;
        }
        acc += term[i];
    }
    while (cp <= 10) {
        long mark = X * long(cp) / 10;
        out.checkpoints.emplace_back(mark, acc / double(mark));
        ++cp;
    }
    out.final = acc / double(X);
    return out;
}

// Rounding rule: integer r is certified when the final estimate is within
// 0.35 of r and the last three checkpoints approach r monotonically.
inline std::optional<long> nagao_certify(const NagaoEstimate& est) {
    long r = std::lround(est.final);
    if (std::abs(est.final - r) > 0.35) return std::nullopt;
    size_t n = est.checkpoints.size();
    if (n < 3) return std::nullopt;
    double d1 = std::abs(est.checkpoints[n - 3].second - r);
    double d2 = std::abs(est.checkpoints[n - 2].second - r);
    double d3 = std::abs(est.checkpoints[n - 1].second - r);
    if (d3 <= d2 && d2 <= d1) return r;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Closed-form generic ranks.

struct RankResult {
    long rank = 0;
    std::string certificate;
    // factor counts of the degree-2 family formula, -1 when not applicable
    long R_factors = -1, C_factors = -1, delta1 = -1, delta2 = -1;
};

inline RankResult rank_L(const BigInt& w, const BigInt& s, const BigInt& v) {
    if (w == 0 || s == 0) throw std::invalid_argument("rank_L: w, s must be nonzero");
    // C(x) = x^3 + 3vx^2 + 3sx + sv and R(x) = -Res_z(C(z), wA(z) - x^2)
    IntPoly C(std::vector<BigInt>{s * v, 3 * s, 3 * v, BigInt(1)});
    std::vector<IntPoly> Cz = {IntPoly::constant(s * v), IntPoly::constant(3 * s),
                               IntPoly::constant(3 * v), IntPoly::constant(1)};
    std::vector<IntPoly> Qz = {IntPoly(std::vector<BigInt>{w * s, 0, -1}),
                               IntPoly{},
                               IntPoly::constant(3 * w)};
    IntPoly R = -resultant_z(Cz, Qz);

    RankResult out;
    out.C_factors = factor_over_Q(C).count();
    out.R_factors = factor_over_Q(R).count();
    out.delta2 = 0;
    {
        Rational q = Rational(-4 * w * w * s) / 3;
        q.canonicalize();
        if (q > 0 && is_fourth_power(q)) out.delta2 = 1;
    }
    out.delta1 = 0;
    if (s == v * v) {
        out.delta1 = 2;
    } else if (v == 0) {
        bool sq_m3s = is_square(BigInt(-3 * s));
        bool sq_sw = is_square(BigInt(s * w));
        bool sq_m2sw = is_square(BigInt(-2 * s * w));
        if (!sq_m3s && !sq_sw && sq_m2sw) out.delta1 = 2;
        else if (!sq_m3s && !sq_sw && !sq_m2sw) out.delta1 = 1;
    }
    if (s == v * v) {
        // triple-root member: the factor-count display only balances when the
        // twist is a square; the direct limit gives the rank outright
        out.rank = is_square(w) ? 1 : 0;
        out.certificate = "L.triple-root";
    } else {
        out.rank = out.R_factors - out.C_factors - out.delta1 + out.delta2;
        out.certificate = "L.factor-count";
    }
    if (out.rank < 0 || out.rank > 3)
        throw std::logic_error("rank_L: rank outside [0, 3]");
    return out;
}

inline RankResult closed_rank(const FamilyId& id) {
    const BigInt &A = id.p1, &B = id.p2, &C = id.p3;
    auto simple = [](bool one, const char* rule) {
        RankResult r;
        r.rank = one ? 1 : 0;
        r.certificate = rule;
        return r;
    };
    switch (id.tag) {
        case FamilyTag::Fs: {
            Rational q = Rational(-A) / 12;
            q.canonicalize();
            return simple(q > 0 && is_fourth_power(q), "Fs: s = -12 k^4");
        }
        case FamilyTag::Gw:
            return simple(is_square(A) || is_square(BigInt(-2 * A)),
                          "Gw: w square or -2 square");
        case FamilyTag::Hw:
            return simple(is_square(BigInt(2 * A)), "Hw: w twice a square");
        case FamilyTag::Iw:
            return simple(is_square(A), "Iw: w square");
        case FamilyTag::Jmw:
            return simple(is_square(B), "Jmw: w square");
        case FamilyTag::Wa:
            return simple(is_square(A) || is_square(BigInt(-A)), "Wa: a = +-n^2");
        case FamilyTag::Va:
            return simple(false, "Va: rank 0");
        case FamilyTag::W1twist:
            return simple(is_square(A) || is_square(BigInt(-A)),
                          "W1twist: d = +-n^2");
        case FamilyTag::Lwsv:
            return rank_L(A, B, C);
        case FamilyTag::Wdagger: {
            RankResult r = rank_L(6, BigInt(-27) * A * A * A * A, 0);
            r.certificate = "Wdagger via L(6, -27a^4, 0): " + r.certificate;
            return r;
        }
        case FamilyTag::Wstar:
            return simple(true, "Wstar: a-parameter p^2 is a square");
        case FamilyTag::Wstarstar:
            return simple(false, "Wstarstar: a-parameter p is not +-n^2");
    }
    throw std::invalid_argument("closed_rank: unknown tag");
}

// ---------------------------------------------------------------------------
// Symbolic verification of generic points.

enum class PointCheck { verified_non_torsion, on_curve_torsion, fail };

struct GenericPointReport {
    PointCheck status;
    std::string detail;
};

namespace detail {

inline WModel<RatFunc> folded_surface_model(const Surface& S) {
    BigInt w = S.twist;
    return {RatFunc(S.a2 * w), RatFunc(S.a4 * (w * w)), RatFunc(S.a6 * (w * w * w))};
}

inline FuncPoint fold_surface_point(const Surface& S, const FuncPoint& P) {
    if (P.infinity) return P;
    RatFunc w{IntPoly::constant(S.twist)};
    return FuncPoint::affine(w * P.x, w * w * P.y);
}

}  // namespace detail

// P is given on twist*y^2 = x^3 + a2 x^2 + a4 x + a6 with Q(t) coordinates.
inline GenericPointReport verify_generic_point(const Surface& S, const FuncPoint& P) {
    auto m = detail::folded_surface_model(S);
    FuncPoint Pf = detail::fold_surface_point(S, P);
    if (!on_model(m, Pf))
        return {PointCheck::fail, "point does not satisfy the curve equation"};
    if (P.infinity) return {PointCheck::on_curve_torsion, "point at infinity"};

    // one non-torsion specialization certifies infinite order
    long used = 0;
    for (long t0 = 0; t0 <= 50 && used < 3; ++t0) {
        for (long sgn : {1, -1}) {
            if (t0 == 0 && sgn == -1) continue;
            Rational tv(sgn * t0);
            Curve C = specialize(S, tv);
            if (is_singular(C)) continue;
            Rational px, py;
            try {
                px = Pf.x.eval(tv);
                py = Pf.y.eval(tv);
            } catch (const std::invalid_argument&) {
                continue;  // pole of a coordinate
            }
            Curve folded{C.a2 * C.twist, C.a4 * C.twist * C.twist,
                         C.a6 * C.twist * C.twist * C.twist, Rational(1)};
            QPoint sp = QPoint::affine(px, py);
            if (!on_curve(folded, sp)) continue;
            ++used;
            auto probe = torsion_probe(folded, sp);
            if (!probe.is_torsion)
                return {PointCheck::verified_non_torsion,
                        "non-torsion at t = " + std::to_string(sgn * t0)};
            if (used >= 3) break;
        }
    }
    if (used == 0)
        return {PointCheck::on_curve_torsion,
                "no usable specialization found (treating as undecided torsion)"};
    return {PointCheck::on_curve_torsion, "torsion at every sampled specialization"};
}

// ---------------------------------------------------------------------------
// Rank-3 members of the degree-2 family, with their three generic points.

struct Rank3Family {
    Surface surface;
    std::array<FuncPoint, 3> points;
    Rational w, s, v;  // the underlying family parameters before clearing
};

inline Rank3Family rank3_family(const BigInt& a, const BigInt& b, const BigInt& ell) {
    if (a <= 0 || b <= 0 || ell <= 0)
        throw std::invalid_argument("rank3_family: parameters must be positive");
    Rational y(6 * (b * b - a * a));
    Rational k(6 * (a * a + b * b));
    if (y == k || y == -k) throw std::invalid_argument("rank3_family: degenerate y = +-k");
    Rational w = Rational(ell * ell) / (Rational(12) * (a * a + b * b));
    w.canonicalize();
    Rational s = -3 * k * k;
    Rational v = y * (y * y - 9 * k * k) / (3 * (k * k - y * y));
    v.canonicalize();

    // clear denominators: u^2-scaling in x plus a square twist adjustment
    BigInt W = w.get_num(), D = w.get_den();
    BigInt u = v.get_den() * s.get_den();
    Surface S;
    S.twist = W * D;
    Rational u2 = Rational(u * u);
    QPoly a2q{std::vector<Rational>{3 * u2 * v, Rational(0), 3 * u2}};
    QPoly a4q{std::vector<Rational>{3 * u2 * u2 * s}};
    QPoly a6q{std::vector<Rational>{u2 * u2 * u2 * s * v, Rational(0), u2 * u2 * u2 * s}};
    S.a2 = to_int_poly(a2q);
    S.a4 = to_int_poly(a4q);
    S.a6 = to_int_poly(a6q);

    // the three generic points on w y^2 = ... , then mapped to the cleared model
    Rational x2 = -k;
    Rational x4 = Rational(-6) * (a * a + b * b) * (2 * a * a + b * b) / (b * b);
    Rational x5 = Rational(6) * (a * a + b * b) * (a * a + 2 * b * b) / (a * a);
    // y-coordinates from w y^2 = A(x) t^2 + C(x): the square roots are
    // A(x_i)/w = (2k^2 a / (b^2 l))^2 and its a <-> b mirror, C(-k)/w = (4k^2/l)^2
    Rational y2c = 4 * k * k / Rational(ell);  // constant in t
    Rational y4c = 2 * k * k * Rational(a) / (Rational(b * b) * ell);  // times t
    Rational y5c = 2 * k * k * Rational(b) / (Rational(a * a) * ell);
    auto clear_pt = [&](const Rational& x, const Rational& ycoef, bool times_t) {
        RatFunc X{QPoly::constant(x * u2)};
        Rational yc = ycoef * Rational(u * u * u) / Rational(D);
        QPoly ynum = times_t ? QPoly{std::vector<Rational>{Rational(0), yc}}
                             : QPoly::constant(yc);
        return FuncPoint::affine(X, RatFunc{ynum, QPoly::constant(Rational(1))});
    };
    Rank3Family out;
    out.surface = S;
    out.points = {clear_pt(x2, y2c, false), clear_pt(x4, y4c, true),
                  clear_pt(x5, y5c, true)};
    out.w = w;
    out.s = s;
    out.v = v;
    return out;
}

// Finite smoke test of independence: a nonzero integer relation
// c1 P1 + c2 P2 + c3 P3 = O over Q(t) would survive every specialization;
// refute each candidate with |c_i| <= bound at some good fiber.
inline bool independent_at_specializations(const Surface& S,
                                           const std::array<FuncPoint, 3>& pts,
                                           long bound = 3) {
    std::vector<long> good_t;
    for (long t0 = 2; good_t.size() < 3 && t0 < 40; ++t0) {
        Curve C = specialize(S, Rational(t0));
        if (is_singular(C)) continue;
        bool ok = true;
        for (const auto& P : pts) {
            try {
                detail::fold_surface_point(S, P).x.eval(Rational(t0));
            } catch (const std::invalid_argument&) {
                ok = false;
            }
        }
        if (ok) good_t.push_back(t0);
    }
    if (good_t.size() < 2) return false;

    for (long c1 = -bound; c1 <= bound; ++c1)
        for (long c2 = -bound; c2 <= bound; ++c2)
            for (long c3 = -bound; c3 <= bound; ++c3) {
                if (c1 == 0 && c2 == 0 && c3 == 0) continue;
                bool refuted = false;
                for (long t0 : good_t) {
                    Curve C = specialize(S, Rational(t0));
                    Curve folded{C.a2 * C.twist, C.a4 * C.twist * C.twist,
                                 C.a6 * C.twist * C.twist * C.twist, Rational(1)};
                    auto m = detail::folded_model(folded);
                    QPoint acc = QPoint::at_infinity();
                    long cs[3] = {c1, c2, c3};
                    for (int i = 0; i < 3; ++i) {
                        auto Pf = detail::fold_surface_point(S, pts[i]);
                        QPoint sp = QPoint::affine(Pf.x.eval(Rational(t0)),
                                                   Pf.y.eval(Rational(t0)));
                        acc = model_add(m, acc, model_mul(m, cs[i], sp));
                    }
                    if (!acc.infinity) {
                        refuted = true;
                        break;
                    }
                }
                if (!refuted) return false;
            }
    return true;
}

}  // namespace ellav
