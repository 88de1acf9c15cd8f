#pragma once

#include <json.hpp>

#include "nichols/classify.hpp"
#include "nichols/enumerate.hpp"
#include "nichols/subquotient.hpp"
#include "nichols/tensor.hpp"
#include "nichols/verify_suite.hpp"

namespace nichols {

using json = nlohmann::json;

inline std::string rational_literal(const Rational& r) {
    return r.get_den() == 1 ? r.get_num().get_str() : r.get_str();
}

inline json cyc_to_json(const Cyc& c) {
    json coeffs = json::array();
    for (const auto& r : c.coeffs()) coeffs.push_back(rational_literal(r));
    return json{{"conductor", c.conductor()}, {"coeffs", coeffs}};
}

inline Cyc cyc_from_json(const json& j) {
    std::vector<Rational> coeffs;
    for (const auto& s : j.at("coeffs")) coeffs.push_back(parse_scalar_literal(s.get<std::string>()).rational_value());
    return Cyc::from_coeffs(j.at("conductor").get<long>(), std::move(coeffs));
}

inline json braiding_to_json(const DiagonalBraiding& br) {
    return json{{"q11", br.q11.str()}, {"q12", br.q12.str()}, {"q21", br.q21.str()}, {"q22", br.q22.str()}};
}

inline DiagonalBraiding braiding_from_json(const json& j) {
    return DiagonalBraiding(parse_scalar_literal(j.at("q11").get<std::string>()),
                            parse_scalar_literal(j.at("q12").get<std::string>()),
                            parse_scalar_literal(j.at("q21").get<std::string>()),
                            parse_scalar_literal(j.at("q22").get<std::string>()));
}

inline json limits_to_json(const Limits& l) {
    return json{{"max_degree", l.max_degree},   {"max_index", l.max_index},
                {"max_order", l.max_order},     {"conductor_ceiling", l.conductor_ceiling},
                {"workers", l.workers},         {"seed", l.seed}};
}

inline json condition_report_to_json(const ConditionReport& rep) {
    json out;
    for (int k = 1; k <= 8; ++k) {
        const ConditionOutcome& o = rep.A(k);
        json w;
        const char* status = o.status == CondStatus::Holds      ? "holds"
                             : o.status == CondStatus::Fails    ? "fails"
                                                                : "not-applicable";
        w["status"] = status;
        if (o.witness.index >= 0 || !o.witness.note.empty() || o.witness.value) {
            json wit;
            if (o.witness.index >= 0) wit["i"] = o.witness.index;
            if (!o.witness.note.empty()) wit["note"] = o.witness.note;
            if (o.witness.value) wit["value"] = o.witness.value->str();
            w["witness"] = wit;
        }
        out["A" + std::to_string(k)] = w;
    }
    out["swapped"] = rep.swapped;
    out["a"] = rep.a_value ? json(*rep.a_value) : json(nullptr);
    return out;
}

inline json verdict_to_json(const Verdict& v) {
    json labels = json::array();
    for (const CaseLabel& l : v.labels) labels.push_back(json::array({l.part, l.item}));
    return json{{"outcome", outcome_name(v.outcome)},
                {"labels", labels},
                {"swapped", v.basis_swapped},
                {"evidence", v.evidence}};
}

inline json hilbert_to_json(const NicholsOracle::HilbertReport& h, const DiagonalBraiding& br) {
    json bm = json::array();
    for (const auto& t : h.by_multidegree) bm.push_back(json::array({t[0], t[1], t[2]}));
    return json{{"braiding", braiding_to_json(br)},
                {"max_total", h.max_total},
                {"by_multidegree", bm},
                {"by_total", h.by_total},
                {"truncated", h.truncated}};
}

inline json descent_to_json(const DescentOutcome& d) {
    json chain = json::array();
    for (const auto& s : d.chain) {
        json rec{{"family", s.family},
                 {"param", "z" + std::to_string(s.param.order) + ":" + std::to_string(s.param.exponent)},
                 {"side_conditions", s.side_conditions}};
        if (s.step) {
            rec["step"] = json{{"source", braiding_to_json(s.step->source)},
                               {"degrees", json::array({json::array({s.step->d1.a, s.step->d1.b}),
                                                        json::array({s.step->d2.a, s.step->d2.b})})},
                               {"target", braiding_to_json(s.step->target)}};
        }
        chain.push_back(rec);
    }
    json out{{"verdict", descent_verdict_name(d.verdict)}, {"reason", d.reason}, {"chain", chain}};
    if (d.verdict == DescentVerdict::Blocked || d.blocked_step > 0) out["blocked_step"] = d.blocked_step;
    return out;
}

inline json validation_to_json(const SubquotientValidation& v) {
    json out{{"pass", v.pass},
             {"lambda1", v.lambda1.str()},
             {"lambda2", v.lambda2.str()},
             {"checked_to_degree", v.checked_to_degree}};
    if (!v.counterexample.empty()) out["counterexample"] = v.counterexample;
    return out;
}

inline json enumeration_to_json(const EnumerationResult& e) {
    json counts = json::object();
    for (const auto& [label, n] : e.label_counts) counts[label.str()] = n;
    json out{{"literal", json{{"max_order", e.literal_max_order},
                              {"triples", e.literal_triples},
                              {"finite", e.literal_finite},
                              {"label_counts", counts}}},
             {"pipeline", json{{"conductor", e.pipeline_conductor},
                               {"triples", e.pipeline_triples},
                               {"finite", e.pipeline_finite},
                               {"not_in_list", e.pipeline_not_in_list},
                               {"indeterminate", e.pipeline_indeterminate}}},
             {"disagreements", e.disagreements},
             {"disagreement_notes", e.disagreement_notes}};
    if (e.record_hits) {
        json hits = json::array();
        for (const auto& h : e.finite_hits) {
            json labels = json::array();
            for (const CaseLabel& l : h.labels) labels.push_back(json::array({l.part, l.item}));
            auto lit = [&](long x) {
                RootOfUnity r(x, h.M);
                return "z" + std::to_string(r.order) + ":" + std::to_string(r.exponent);
            };
            hits.push_back(json{{"q11", lit(h.al)}, {"q12q21", lit(h.be)}, {"q22", lit(h.ga)},
                                {"labels", labels}});
        }
        out["finite_hits"] = hits;
    }
    return out;
}

inline json verify_to_json(const VerifyResult& v) {
    json items = json::array();
    for (const auto& it : v.items) {
        json o{{"name", it.name}, {"checked", it.checked}, {"failed", it.failed}};
        if (!it.note.empty()) o["first_failure"] = it.note;
        items.push_back(o);
    }
    return json{{"items", items},
                {"checked", v.total_checked()},
                {"failed", v.total_failed()},
                {"ok", v.ok()}};
}

} // namespace nichols
