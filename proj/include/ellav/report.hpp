#pragma once

// JSON records for the command-line front end.  Rationals serialize as
// "num/den" strings; interval endpoints as decimal strings with stated
// precision, rounded outward so the printed enclosure stays valid.

#include <json.hpp>

#include "ellav/density.hpp"
#include "ellav/ranks.hpp"

namespace ellav {

using Json = nlohmann::json;

inline Json to_json(const EulerProductValue& v) {
    Json j;
    if (v.is_exact) {
        j["value"] = rational_str(v.exact);
    } else {
        j["interval"] = {{"lower", decimal_str(v.lower, 12, -1)},
                         {"upper", decimal_str(v.upper, 12, +1)},
                         {"precision_digits", 12}};
        j["prime_cutoff"] = v.prime_cutoff;
    }
    return j;
}

inline Json to_json(const EmpiricalAverage& e) {
    Json j;
    j["sum"] = e.sum.get_str();
    j["count_nonsingular"] = e.count;
    j["terms"] = e.total;
    j["mean"] = rational_str(e.mean);
    j["mean_decimal"] = decimal_str(e.mean, 10, 0);
    j["T"] = e.T;
    if (e.asymptotic_mean != 0) j["asymptotic_mean"] = e.asymptotic_mean;
    return j;
}

inline Json to_json(const RootNumberReport& r) {
    Json j;
    j["global"] = r.global;
    Json locals = Json::array();
    for (const auto& w : r.locals)
        locals.push_back({{"p", w.p.get_str()}, {"w", w.value}, {"rule", w.rule}});
    j["locals"] = locals;
    Json support = Json::array();
    for (const auto& [p, e] : r.support.factors)
        support.push_back({{"p", p.get_str()}, {"e", e}});
    j["support"] = support;
    return j;
}

inline Json to_json(const PlaceReport& rep) {
    Json places = Json::array();
    auto red = [](Reduction r) {
        return r == Reduction::good ? "good"
               : r == Reduction::multiplicative ? "multiplicative"
                                                : "additive";
    };
    auto val = [](long v) {
        return v >= kValInfinity ? Json("inf") : Json(v);
    };
    for (const auto& pl : rep.places) {
        Json p;
        p["place"] = pl.at_infinity ? "-deg" : pl.poly.str();
        p["reduction"] = red(pl.reduction);
        p["quite_bad"] = pl.quite_bad;
        p["v_c4"] = val(pl.vc4);
        p["v_c6"] = val(pl.vc6);
        p["v_disc"] = val(pl.vdisc);
        places.push_back(p);
    }
    Json j;
    j["places"] = places;
    j["M"] = rep.M.str();
    j["B"] = rep.B.str();
    return j;
}

inline Json to_json(const NagaoEstimate& est) {
    Json cps = Json::array();
    for (auto& [x, v] : est.checkpoints) cps.push_back({{"X", x}, {"estimate", v}});
    Json j;
    j["X"] = est.X;
    j["final"] = est.final;
    j["checkpoints"] = cps;
    auto cert = nagao_certify(est);
    if (cert)
        j["certified_rank"] = *cert;
    else
        j["certified_rank"] = "inconclusive";
    return j;
}

inline Json to_json(const RankResult& r) {
    Json j;
    j["rank"] = r.rank;
    j["certificate"] = r.certificate;
    if (r.R_factors >= 0) {
        j["R_factors"] = r.R_factors;
        j["C_factors"] = r.C_factors;
        j["delta1"] = r.delta1;
        j["delta2"] = r.delta2;
    }
    return j;
}

inline Json to_json(const Surface& S) {
    return Json{{"a2", S.a2.str()},
                {"a4", S.a4.str()},
                {"a6", S.a6.str()},
                {"w", S.twist.get_str()},
                {"literal", surface_str(S)}};
}

inline Json to_json(const DesignedFamily& f) {
    Json j;
    switch (f.method) {
        case DesignedFamily::Method::thm3: j["construction"] = "progression"; break;
        case DesignedFamily::Method::thm4: j["construction"] = "periodic"; break;
        case DesignedFamily::Method::thm5_isotrivial:
            j["construction"] = "isotrivial-archimedean";
            break;
    }
    j["surface"] = to_json(f.surface);
    j["predicted_average"] = rational_str(f.predicted);
    j["modulus"] = f.modulus.get_str();
    j["exact_periodic"] = f.exact_periodic;
    Json audit;
    if (f.prime != 0) {
        audit["prime"] = f.prime.get_str();
        audit["r"] = f.r_param;
        audit["m"] = f.m_param;
    }
    if (f.a_const != 0) audit["a"] = f.a_const.get_str();
    if (!f.a_poly.is_zero()) audit["a_poly"] = f.a_poly.str();
    if (!f.Q_poly.is_zero()) audit["Q_poly"] = f.Q_poly.str();
    if (!f.P_poly.is_zero()) audit["P_poly"] = f.P_poly.str();
    if (!f.blocks.empty()) {
        Json blocks = Json::array();
        for (const auto& b : f.blocks)
            blocks.push_back({{"p", b.p.get_str()},
                              {"u", b.u},
                              {"r", b.r},
                              {"d", b.d.get_str()},
                              {"zeros", b.m.get_str()},
                              {"Q", b.Q.str()}});
        audit["blocks"] = blocks;
    }
    j["audit"] = audit;
    return j;
}

}  // namespace ellav
