#ifndef ABPER_REPORT_HPP
#define ABPER_REPORT_HPP

#include <algorithm>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "abelian.hpp"
#include "classifier.hpp"

namespace abper {

using json = nlohmann::ordered_json;

inline constexpr std::string_view report_version = "1";

// Periods and cut offsets are written as decimal strings since they grow like
// trace^K. Other integers are JSON numbers when they fit in int64.
inline json to_json(const big_int& x) {
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
        return x.convert_to<std::int64_t>();
    return x.str();
}

inline json to_json(const matrix2& m) {
    return json::array({json::array({to_json(m(0, 0)), to_json(m(0, 1))}),
                        json::array({to_json(m(1, 0)), to_json(m(1, 1))})});
}

inline json to_json(const binary_morphism& f) {
    return {{"a", f.image_a().str()}, {"b", f.image_b().str()}, {"text", f.str()}};
}

inline json to_json(const spectral_profile& s) {
    json j;
    j["trace"] = to_json(s.trace);
    j["determinant"] = to_json(s.determinant);
    j["discriminant"] = to_json(s.discriminant);
    j["theta2_kind"] = to_string(s.kind);
    j["theta2_value"] = s.kind == theta2_kind::irrational_quadratic ? json(nullptr) : to_json(s.theta2_value);
    j["theta2_abs"] = to_string(s.theta2_abs);
    j["theta2_approx"] = s.theta2_approx();
    j["primitive"] = s.primitive;
    return j;
}

inline json to_json(const rank1_form& r) {
    return {{"A", to_json(r.A)},           {"B", to_json(r.B)},         {"n", to_json(r.n)},
            {"m", to_json(r.m)},           {"block_unit", to_json(r.block_unit())},
            {"trace", to_json(r.trace())}};
}

inline json to_json(const pure_verdict& p) {
    json j;
    j["outcome"] = to_string(p.outcome);
    if (p.outcome == pure_outcome::pure_abelian_periodic) {
        j["K"] = p.K;
        j["period"] = p.period.str();
    }
    j["iterations"] = p.iterations;
    j["cycle_detected"] = p.cycle_detected;
    j["bound"] = to_json(p.bound);
    return j;
}

inline json to_json(const eventual_witness& w) {
    return {{"K", w.K}, {"cut_offset", w.cut_offset.str()}, {"period", w.period.str()}};
}

inline json to_json(const periodicity_verdict& p) {
    json j;
    j["periodic"] = p.periodic;
    if (p.periodic) {
        j["u"] = p.certificate.preperiod.str();
        j["w"] = p.certificate.period.str();
    }
    return j;
}

inline json to_json(const conjugation_result& c) {
    return {{"kind", to_string(c.kind)}, {"morphism", c.morphism.str()}, {"shift", c.shift_word.str()},
            {"power", c.power}};
}

inline json to_json(const quadratic_number& q) {
    return {{"exact", q.str()}, {"approx", q.approx()}};
}

inline json to_json(const frequency_report& r) {
    return {{"a", to_json(r.freq_a)}, {"b", to_json(r.freq_b)}, {"rational", r.rational}};
}

inline json to_json(const imbalance_evidence& e) {
    return {{"horizon", e.horizon},
            {"max_imbalance", e.max_imbalance},
            {"at_length", e.at_length},
            {"lengths_checked", e.lengths_checked}};
}

inline json reason_json(const verdict& v) {
    json j;
    j["code"] = to_string(v.reason);
    if (v.reason == reason_code::chunks_equivalent) {
        j["K"] = v.pure->K;
        j["period"] = v.pure->period.str();
    } else if (v.reason == reason_code::eventual_witness_found) {
        j["K"] = v.eventual->K;
        j["c"] = v.eventual->cut_offset.str();
    }
    return j;
}

inline json bounds_json(const verdict& v, const classify_options& opts) {
    json j = json::object();
    switch (v.reason) {
    case reason_code::nonprimitive_no_period_found: {
        const periodicity_bounds b = v.periodicity->bounds;
        j["max_period"] = b.max_period;
        j["max_preperiod"] = b.max_preperiod;
        j["horizon"] = opts.horizon;
        break;
    }
    case reason_code::rank1_pure_refuted_eventual_open:
        j["eventual_k_max"] = v.eventual_k_max;
        j["eventual_k_scanned"] = v.eventual_k_scanned;
        j["eventual_offset_budget"] = to_json(v.eventual_offset_budget);
        j["eventual_scan_complete"] = v.eventual_scan_complete;
        break;
    case reason_code::resource_exhausted:
        j["pure_max_iterations"] = v.pure_max_iterations;
        break;
    default: break;
    }
    return j;
}

inline json to_json(const verdict& v, const classify_options& opts = {}) {
    json j;
    j["morphism"] = to_json(v.morphism);
    j["matrix"] = to_json(v.matrix);
    j["spectral"] = to_json(v.spectral);
    j["rank1"] = v.rank1 ? to_json(*v.rank1) : json(nullptr);
    j["answer"] = to_string(v.result);
    j["certainty"] = to_string(v.grade);
    j["reason"] = reason_json(v);

    json w = json::object();
    if (const auto claim = claimed_abelian_period(v))
        w["abelian_period"] = {{"preperiod", to_json(claim->first)}, {"period", to_json(claim->second)}};
    if (v.pure) w["pure"] = to_json(*v.pure);
    if (v.eventual) w["eventual"] = to_json(*v.eventual);
    if (v.periodicity) w["periodicity"] = to_json(*v.periodicity);
    if (v.conjugation) w["conjugation"] = to_json(*v.conjugation);
    if (v.frequencies) w["frequencies"] = to_json(*v.frequencies);
    j["witnesses"] = std::move(w);
    j["bounds"] = bounds_json(v, opts);
    j["evidence"] = v.evidence ? to_json(*v.evidence) : json(nullptr);
    j["meta"] = {{"tool", "abper"}, {"report_version", report_version}};
    return j;
}

/// Structural check of a verdict report. Returns one message per problem.
inline std::vector<std::string> validate_report(const json& j) {
    std::vector<std::string> problems;
    auto need = [&](const char* key, auto pred, const char* what) {
        if (!j.contains(key)) {
            problems.push_back(std::string("missing key ") + key);
            return false;
        }
        if (!pred(j.at(key))) {
            problems.push_back(std::string(key) + " must be " + what);
            return false;
        }
        return true;
    };
    auto is_obj = [](const json& x) { return x.is_object(); };
    auto is_int = [](const json& x) { return x.is_number_integer() || x.is_string(); };
    auto obj_or_null = [](const json& x) { return x.is_object() || x.is_null(); };

    if (!j.is_object()) return {"report must be an object"};

    if (need("morphism", is_obj, "an object"))
        for (const char* k : {"a", "b", "text"})
            if (!j["morphism"].contains(k) || !j["morphism"][k].is_string())
                problems.push_back(std::string("morphism.") + k + " must be a string");

    need(
        "matrix",
        [&](const json& m) {
            if (!m.is_array() || m.size() != 2) return false;
            return std::all_of(m.begin(), m.end(), [&](const json& row) {
                return row.is_array() && row.size() == 2 && std::all_of(row.begin(), row.end(), is_int);
            });
        },
        "a 2x2 integer array");

    if (need("spectral", is_obj, "an object")) {
        const json& s = j["spectral"];
        for (const char* k : {"trace", "determinant", "discriminant"})
            if (!s.contains(k) || !is_int(s[k])) problems.push_back(std::string("spectral.") + k + " must be an integer");
        if (!s.contains("primitive") || !s["primitive"].is_boolean())
            problems.push_back("spectral.primitive must be a boolean");
        if (!s.contains("theta2_kind") || !s["theta2_kind"].is_string())
            problems.push_back("spectral.theta2_kind must be a string");
    }
    need("rank1", obj_or_null, "an object or null");

    auto one_of = [](std::initializer_list<std::string_view> list) {
        return [names = std::vector<std::string_view>(list)](const json& x) {
            return x.is_string() && std::find(names.begin(), names.end(), x.get<std::string>()) != names.end();
        };
    };
    need("answer", one_of({"AbelianPeriodic", "PureAbelianPeriodic", "NotAbelianPeriodic", "Unknown"}),
         "a known answer");
    need("certainty", one_of({"Proved", "BoundedSearch"}), "Proved or BoundedSearch");
    if (need("reason", is_obj, "an object")) {
        const json& r = j["reason"];
        const auto code_ok = one_of({"SpecialFormABAB", "ChunksEquivalent", "EventualWitnessFound",
                                     "Theta2AbsGtOne_Unbalanced", "IrrationalFrequencies", "Theta2One_FormFails",
                                     "Theta2MinusOne", "NonPrimitive_PeriodicCertificate",
                                     "NonPrimitive_NoPeriodFound", "Rank1_PureRefuted_EventualOpen",
                                     "ResourceExhausted"});
        if (!r.contains("code") || !code_ok(r["code"])) {
            problems.push_back("reason.code must be a known reason");
        } else {
            const std::string code = r["code"];
            if (code == "ChunksEquivalent" && !(r.contains("K") && r.contains("period")))
                problems.push_back("ChunksEquivalent needs K and period");
            if (code == "EventualWitnessFound" && !(r.contains("K") && r.contains("c")))
                problems.push_back("EventualWitnessFound needs K and c");
        }
    }
    need("witnesses", is_obj, "an object");
    if (need("bounds", is_obj, "an object") && j.contains("certainty") && j["certainty"] == "BoundedSearch" &&
        j["bounds"].empty())
        problems.push_back("BoundedSearch verdicts must carry their bounds");
    need("evidence", obj_or_null, "an object or null");
    need("meta", is_obj, "an object");
    return problems;
}

inline void write_text(std::ostream& os, const verdict& v) {
    os << "morphism   " << v.morphism.str() << '\n'
       << "matrix     " << v.matrix << '\n'
       << "theta2     " << to_string(v.spectral.kind);
    if (v.spectral.kind != theta2_kind::irrational_quadratic) os << ' ' << v.spectral.theta2_value;
    os << " (" << to_string(v.spectral.theta2_abs) << ")\n"
       << "primitive  " << (v.spectral.primitive ? "yes" : "no") << '\n';
    if (v.rank1) os << "rank1      " << *v.rank1 << '\n';
    os << "answer     " << to_string(v.result) << '\n'
       << "certainty  " << to_string(v.grade) << '\n'
       << "reason     " << to_string(v.reason);
    if (v.reason == reason_code::chunks_equivalent) os << "(K=" << v.pure->K << ", period=" << v.pure->period << ')';
    if (v.reason == reason_code::eventual_witness_found)
        os << "(K=" << v.eventual->K << ", c=" << v.eventual->cut_offset << ')';
    os << '\n';
    if (v.pure) os << "pure       " << to_string(v.pure->outcome) << " after " << v.pure->iterations << " steps\n";
    if (v.periodicity && v.periodicity->periodic)
        os << "periodic   u=" << v.periodicity->certificate.preperiod << " w=" << v.periodicity->certificate.period
           << '\n';
    if (v.evidence)
        os << "imbalance  " << v.evidence->max_imbalance << " at length " << v.evidence->at_length << " (prefix "
           << v.evidence->horizon << ")\n";
}

// CSV with fixed columns.

inline void write_complexity_csv(std::ostream& os, const complexity_profile& p) {
    os << "length,complexity,imbalance\n";
    for (std::size_t i = 0; i < p.imbalance.size(); ++i)
        os << i + 1 << ',' << p.abelian_complexity[i] << ',' << p.imbalance[i] << '\n';
}

inline void write_path_csv(std::ostream& os, const std::vector<std::int64_t>& heights) {
    os << "index,height\n";
    for (std::size_t i = 0; i < heights.size(); ++i) os << i << ',' << heights[i] << '\n';
}

} // namespace abper

#endif // ABPER_REPORT_HPP
