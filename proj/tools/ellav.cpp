// Command-line front end: root numbers, averages, ranks, place
// classification, family design and the validation suites, with JSON, CSV
// and table output.

#include <CLI11.hpp>

#include <chrono>
#include <iostream>

#include "ellav/report.hpp"
#include "ellav/suites.hpp"

using namespace ellav;

namespace {

constexpr const char* kToolVersion = "ellav 0.1.0";

struct Options {
    std::string format = "table";
    int jobs = 0;
    bool no_timing = false;
    std::string command_echo;
};

void emit(const Options& opt, const Json& result, const std::string& table_text,
          const std::string& csv_text) {
    if (opt.format == "json") {
        Json envelope;
        envelope["schema_version"] = 1;
        envelope["tool"] = kToolVersion;
        envelope["command"] = opt.command_echo;
        envelope["result"] = result;
        if (!opt.no_timing) {
            static auto start = std::chrono::steady_clock::now();
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
            envelope["timing_ms"] = ms;
        }
        std::cout << envelope.dump(2) << "\n";
    } else if (opt.format == "csv") {
        std::cout << csv_text;
    } else {
        std::cout << table_text;
    }
}

std::string csv_quote(const std::string& s) {
    bool need = s.find_first_of(",\"\n") != std::string::npos;
    if (!need) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    return out + "\"";
}

FamilyId family_from_flags(const std::string& fam, long a, long s, long w, long m,
                           long v, long d, long p, long b) {
    if (fam == "Fs") return {FamilyTag::Fs, BigInt(s)};
    if (fam == "Gw") return {FamilyTag::Gw, BigInt(w)};
    if (fam == "Hw") return {FamilyTag::Hw, BigInt(w)};
    if (fam == "Iw") return {FamilyTag::Iw, BigInt(w)};
    if (fam == "Jmw") return {FamilyTag::Jmw, BigInt(m), BigInt(w)};
    if (fam == "L" || fam == "Lwsv")
        return {FamilyTag::Lwsv, BigInt(w), BigInt(s), BigInt(v)};
    if (fam == "Wa") return {FamilyTag::Wa, BigInt(a)};
    if (fam == "Va") return {FamilyTag::Va, BigInt(a)};
    if (fam == "W1twist") return {FamilyTag::W1twist, BigInt(d)};
    if (fam == "Wdagger") return {FamilyTag::Wdagger, BigInt(a)};
    if (fam == "Wstar") return {FamilyTag::Wstar, BigInt(p), BigInt(a)};
    if (fam == "Wstarstar") return {FamilyTag::Wstarstar, BigInt(p), BigInt(b)};
    throw std::invalid_argument("unknown family '" + fam + "'");
}

Rational parse_target(const std::string& text) {
    auto slash = text.find('/');
    BigInt h(slash == std::string::npos ? text : text.substr(0, slash));
    BigInt k(slash == std::string::npos ? std::string("1") : text.substr(slash + 1));
    if (k <= 0) throw std::invalid_argument("target denominator must be positive");
    Rational q(h, k);
    q.canonicalize();
    return q;
}

std::string suite_table(const SuiteReport& rep) {
    std::ostringstream os;
    os << "suite: " << rep.suite << "\n";
    for (const auto& it : rep.items)
        os << (it.pass ? "[PASS] " : "[FAIL] ") << it.name << " -- " << it.measured
           << "\n";
    os << (rep.all_pass() ? "all items passed" : "SOME ITEMS FAILED") << "\n";
    return os.str();
}

std::string suite_csv(const SuiteReport& rep) {
    std::ostringstream os;
    os << "item,pass,measured\n";
    for (const auto& it : rep.items)
        os << csv_quote(it.name) << "," << (it.pass ? "1" : "0") << ","
           << csv_quote(it.measured) << "\n";
    return os.str();
}

Json suite_json(const SuiteReport& rep) {
    Json items = Json::array();
    for (const auto& it : rep.items)
        items.push_back({{"name", it.name}, {"pass", it.pass}, {"measured", it.measured}});
    return Json{{"suite", rep.suite}, {"items", items}, {"all_pass", rep.all_pass()}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact root numbers, averages and ranks for one-parameter "
                 "families of elliptic curves"};
    app.set_version_flag("--version", kToolVersion);
    app.fallthrough();
    Options opt;
    for (int i = 0; i < argc; ++i) {
        if (i) opt.command_echo += " ";
        opt.command_echo += argv[i];
    }
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "table"}));
    app.add_option("--jobs", opt.jobs, "sweep parallelism (default: cores)");
    app.add_flag("--no-timing", opt.no_timing, "omit timing from JSON output");

    std::string family, surface_literal, method, target, suite_name;
    long a = 0, s = 0, w = 0, m = 0, v = 0, d = 0, pparam = 0, b = 0;
    long t = 0, T = 100000, X = 100000, cutoff = 100000, validateT = 0;

    auto add_family_flags = [&](CLI::App* cmd) {
        cmd->add_option("--family", family, "family tag");
        cmd->add_option("--a", a, "parameter a");
        cmd->add_option("--s", s, "parameter s");
        cmd->add_option("--w", w, "parameter w");
        cmd->add_option("--m", m, "parameter m");
        cmd->add_option("--v", v, "parameter v");
        cmd->add_option("--d", d, "parameter d");
        cmd->add_option("--p", pparam, "parameter p");
        cmd->add_option("--b", b, "parameter b");
    };

    auto* rn = app.add_subcommand("rootnumber", "root number of one specialization");
    add_family_flags(rn);
    rn->add_option("--t", t, "parameter value")->required();

    auto* avg = app.add_subcommand("average", "average root number of a family");
    add_family_flags(avg);
    avg->add_option("--method", method, "formula | empirical | local-integral")
        ->default_val("formula");
    avg->add_option("--T", T, "empirical sweep bound");
    avg->add_option("--cutoff", cutoff, "Euler product prime cutoff");

    auto* rk = app.add_subcommand("rank", "generic rank over Q(t)");
    add_family_flags(rk);
    rk->add_option("--method", method, "formula | nagao")->default_val("formula");
    rk->add_option("--X", X, "prime bound for the trace estimator");

    auto* cl = app.add_subcommand("classify", "place classification of a surface");
    add_family_flags(cl);
    cl->add_option("--surface", surface_literal,
                   "surface literal \"a2=..; a4=..; a6=..; w=..\"");

    auto* ds = app.add_subcommand("design", "family with a prescribed average");
    ds->add_option("--target", target, "rational target h/k")->required();
    ds->add_option("--method", method, "thm3 | thm4 | thm5")->default_val("thm3");
    ds->add_option("--validate", validateT, "empirical validation sweep bound");

    auto* vf = app.add_subcommand("verify", "verify catalogue generic points");
    add_family_flags(vf);

    auto* su = app.add_subcommand("suite", "run a named validation battery");
    su->add_option("name", suite_name, "cross-oracle | paper-values | design-roundtrip")
        ->required();
    su->add_option("--T", T, "design validation sweep bound")->default_val("20000");

    CLI11_PARSE(app, argc, argv);

    try {
        if (rn->parsed()) {
            RootNumberReport rep;
            if (family == "Wa") rep = rn_Wa(a, t);
            else if (family == "Va") rep = rn_Va(a, t);
            else if (family == "Fs") rep = rn_Fs(s, t);
            else if (family == "Wdagger")
                rep = rn_Wa(BigInt(a) * a, 2 * BigInt(t) * t - 2 * BigInt(a) * t - BigInt(a) * a);
            else if (family == "Wstar")
                rep = rn_Wa(BigInt(pparam) * pparam, BigInt(pparam) * t + a);
            else if (family == "Wstarstar")
                rep = rn_Wa(BigInt(pparam), BigInt(pparam) * t + b);
            else if (family == "W1twist")
                rep = rn_Wa(d, BigInt(d) * t);
            else
                throw std::invalid_argument(
                    "no closed root-number engine for family '" + family + "'");
            Json j = to_json(rep);
            j["family"] = family;
            j["t"] = t;
            std::ostringstream tab, csv;
            tab << "global " << rep.global << "\n";
            csv << "p,w,rule\n";
            for (const auto& wloc : rep.locals) {
                tab << "  w_" << wloc.p.get_str() << " = " << wloc.value << "  ["
                    << wloc.rule << "]\n";
                csv << wloc.p.get_str() << "," << wloc.value << ","
                    << csv_quote(wloc.rule) << "\n";
            }
            emit(opt, j, tab.str(), csv.str());
            return 0;
        }
        if (avg->parsed()) {
            Json j;
            j["family"] = family;
            j["params"] = {{"a", a}};
            j["method"] = method;
            std::ostringstream tab, csv;
            if (method == "formula") {
                if (family == "Wa") {
                    auto val = av_Wa(a);
                    j.update(to_json(val));
                    tab << "average = " << rational_str(val.exact) << "\n";
                    csv << "value\n" << rational_str(val.exact) << "\n";
                } else if (family == "Va") {
                    auto val = av_Va(a, cutoff);
                    j.update(to_json(val));
                    j["cutoff"] = cutoff;
                    tab << "average in [" << decimal_str(val.lower, 12, -1) << ", "
                        << decimal_str(val.upper, 12, +1) << "] (cutoff "
                        << cutoff << ")\n";
                    csv << "lower,upper,cutoff\n"
                        << decimal_str(val.lower, 12, -1) << ","
                        << decimal_str(val.upper, 12, +1) << "," << cutoff << "\n";
                } else {
                    throw std::invalid_argument("average: family must be Wa or Va");
                }
            } else if (method == "empirical") {
                std::function<int(const BigInt&)> eps;
                if (family == "Wa") eps = [&](const BigInt& tt) { return rn_Wa_sign(a, tt); };
                else if (family == "Va") eps = [&](const BigInt& tt) { return rn_Va_sign(a, tt); };
                else throw std::invalid_argument("average: family must be Wa or Va");
                auto e = empirical_av_Z(eps, T, opt.jobs);
                j.update(to_json(e));
                j["T"] = T;
                tab << "empirical mean = " << rational_str(e.mean) << " ("
                    << decimal_str(e.mean, 8, 0) << ") over " << e.total << " fibers\n";
                csv << "sum,terms,mean\n"
                    << e.sum.get_str() << "," << e.total << "," << rational_str(e.mean)
                    << "\n";
            } else if (method == "local-integral") {
                Json ints;
                csv << "p,integral\n";
                for (const auto& [pp, ee] : factorize(6 * BigInt(a)).factors) {
                    Rational val;
                    if (family == "Wa") {
                        if ((2 * BigInt(a)) % pp != 0) continue;
                        val = local_integral_Wa(a, pp);
                    } else if (family == "Va") {
                        val = local_integral_Va(a, pp);
                    } else {
                        throw std::invalid_argument("average: family must be Wa or Va");
                    }
                    ints[pp.get_str()] = rational_str(val);
                    tab << "integral at " << pp.get_str() << " = " << rational_str(val)
                        << "\n";
                    csv << pp.get_str() << "," << rational_str(val) << "\n";
                }
                j["integrals"] = ints;
            } else {
                throw std::invalid_argument("average: unknown method '" + method + "'");
            }
            emit(opt, j, tab.str(), csv.str());
            return 0;
        }
        if (rk->parsed()) {
            FamilyId id = family_from_flags(family, a, s, w, m, v, d, pparam, b);
            Json j;
            j["family"] = family;
            std::ostringstream tab, csv;
            if (method == "formula") {
                auto r = closed_rank(id);
                j.update(to_json(r));
                tab << "rank " << r.rank << " [" << r.certificate << "]\n";
                if (r.R_factors >= 0)
                    tab << "  factor counts: R=" << r.R_factors << " C=" << r.C_factors
                        << " delta1=" << r.delta1 << " delta2=" << r.delta2 << "\n";
                csv << "rank\n" << r.rank << "\n";
            } else if (method == "nagao") {
                auto est = nagao_rank(make_family(id), X, opt.jobs);
                j.update(to_json(est));
                tab << "estimate " << est.final << " at X=" << est.X << "\n";
                auto cert = nagao_certify(est);
                if (cert) tab << "certified rank " << *cert << "\n";
                else tab << "inconclusive\n";
                csv << "X,estimate\n";
                for (auto& [xx, vv] : est.checkpoints) csv << xx << "," << vv << "\n";
            } else {
                throw std::invalid_argument("rank: unknown method '" + method + "'");
            }
            emit(opt, j, tab.str(), csv.str());
            return 0;
        }
        if (cl->parsed()) {
            Surface S = surface_literal.empty()
                            ? make_family(family_from_flags(family, a, s, w, m, v, d,
                                                            pparam, b))
                            : parse_surface(surface_literal);
            auto rep = classify_places(S);
            bool ppb = rep.M.degree() <= 0;
            Json j = to_json(rep);
            j["surface"] = to_json(S);
            j["potentially_parity_biased"] = ppb;
            std::ostringstream tab, csv;
            tab << surface_str(S) << "\n";
            csv << "place,reduction,quite_bad,v_c4,v_c6,v_disc\n";
            for (const auto& pl : rep.places) {
                std::string nm = pl.at_infinity ? "-deg" : pl.poly.str();
                std::string red = pl.reduction == Reduction::good ? "good"
                                  : pl.reduction == Reduction::multiplicative
                                      ? "multiplicative"
                                      : "additive";
                auto vs = [](long vv) {
                    return vv >= kValInfinity ? std::string("inf") : std::to_string(vv);
                };
                tab << "  place " << nm << ": " << red
                    << (pl.quite_bad ? ", quite bad" : "") << " (v(c4)=" << vs(pl.vc4)
                    << ", v(c6)=" << vs(pl.vc6) << ", v(disc)=" << vs(pl.vdisc)
                    << ")\n";
                csv << csv_quote(nm) << "," << red << "," << (pl.quite_bad ? 1 : 0)
                    << "," << vs(pl.vc4) << "," << vs(pl.vc6) << "," << vs(pl.vdisc)
                    << "\n";
            }
            tab << "M = " << rep.M.str() << ", B = " << rep.B.str() << "\n";
            tab << "potentially parity-biased: " << (ppb ? "yes" : "no") << "\n";
            emit(opt, j, tab.str(), csv.str());
            return 0;
        }
        if (ds->parsed()) {
            Rational tg = parse_target(target);
            DesignedFamily fam;
            if (method == "thm3") fam = design_av_thm3(tg.get_num(), tg.get_den());
            else if (method == "thm4") fam = design_av_thm4(tg.get_num(), tg.get_den());
            else if (method == "thm5")
                fam = design_av_Q_isotrivial(tg.get_num(), tg.get_den());
            else throw std::invalid_argument("design: unknown method '" + method + "'");
            Json j = to_json(fam);
            std::ostringstream tab, csv;
            tab << "predicted average " << rational_str(fam.predicted) << "\n";
            tab << "surface: " << surface_str(fam.surface) << "\n";
            csv << "predicted\n" << rational_str(fam.predicted) << "\n";
            if (validateT > 0) {
                auto e = validate_design(fam, validateT, opt.jobs);
                j["validation"] = to_json(e);
                tab << "empirical mean " << decimal_str(e.mean, 8, 0) << " at T="
                    << validateT << "\n";
            }
            emit(opt, j, tab.str(), csv.str());
            return 0;
        }
        if (vf->parsed()) {
            FamilyId id = family_from_flags(family, a, s, w, m, v, d, pparam, b);
            Surface S = make_family(id);
            auto pts = catalogue_points(id);
            if (pts.empty())
                throw std::invalid_argument("no catalogue generic point for this family");
            Json items = Json::array();
            std::ostringstream tab, csv;
            csv << "point,status,expected_on_curve,detail\n";
            for (const auto& np : pts) {
                auto rep = verify_generic_point(S, np.point);
                std::string st = rep.status == PointCheck::verified_non_torsion
                                     ? "verified-non-torsion"
                                 : rep.status == PointCheck::on_curve_torsion
                                     ? "on-curve-torsion"
                                     : "FAIL";
                items.push_back({{"point", np.name},
                                 {"status", st},
                                 {"expected_on_curve", np.expected_on_curve},
                                 {"detail", rep.detail}});
                tab << np.name << ": " << st;
                if (!np.expected_on_curve)
                    tab << " (known misprint in the published coordinates; FAIL is "
                           "the documented outcome)";
                tab << " -- " << rep.detail << "\n";
                csv << csv_quote(np.name) << "," << st << ","
                    << (np.expected_on_curve ? 1 : 0) << "," << csv_quote(rep.detail)
                    << "\n";
            }
            Json j;
            j["family"] = family;
            j["points"] = items;
            emit(opt, j, tab.str(), csv.str());
            return 0;
        }
        if (su->parsed()) {
            SuiteReport rep;
            if (suite_name == "cross-oracle") rep = suite_cross_oracle();
            else if (suite_name == "paper-values") rep = suite_paper_values();
            else if (suite_name == "design-roundtrip")
                rep = suite_design_roundtrip(
                    {Rational(1, 3), Rational(-2, 5), Rational(3, 10), Rational(1, 2),
                     Rational(-1), Rational(1)},
                    T, opt.jobs);
            else
                throw std::invalid_argument("unknown suite '" + suite_name + "'");
            emit(opt, suite_json(rep), suite_table(rep), suite_csv(rep));
            return 0;
        }
        std::cout << app.help();
        return 1;
    } catch (const std::exception& ex) {
        if (opt.format == "json") {
            Json j{{"schema_version", 1},
                   {"tool", kToolVersion},
                   {"command", opt.command_echo},
                   {"error", ex.what()}};
            std::cout << j.dump(2) << "\n";
        } else {
            std::cerr << "error: " << ex.what() << "\n";
        }
        return 2;
    }
}
