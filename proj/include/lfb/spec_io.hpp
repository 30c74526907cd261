// spec_io.hpp -- load/save LFunctionSpec as JSON.
//
// Document layout:
//   {
//     "degree": 1, "pole_order": 1, "q_mag": 0.318..., "coeff_growth": 1.0,
//     "shifts": [{"re": 0.0, "im": 0.0}, ...],
//     "locals": [{"p": 2, "roots": [{"re":1.0,"im":0.0}], "ramified": false}, ...],
//     "root_number": {"re":1.0,"im":0.0},                  (optional)
//     "series_hint": "generic"|"mean_zero_periodic"|"zeta_em",   (optional)
//     "partial_sum_bound": 4.0,                            (optional)
//     "trivial_zero_exclusions": [[0,0], ...],             (optional)
//     "label": "zeta"                                      (optional)
//   }
// Strict mode rejects any field not listed above.
#pragma once

#include <fstream>
#include <set>
#include <string>

#include <json.hpp>

#include "lfb/spec.hpp"

namespace lfb {

using ordered_json = nlohmann::ordered_json;

inline ordered_json complex_to_json(cplx z) {
    return ordered_json{{"re", z.real()}, {"im", z.imag()}};
}

inline cplx complex_from_json(const nlohmann::json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("re") || !j.contains("im"))
        throw parse_error(where + ": expected {\"re\":..., \"im\":...}");
    return {j.at("re").get<double>(), j.at("im").get<double>()};
}

inline ordered_json spec_to_json(const LFunctionSpec& spec) {
    ordered_json j;
    j["degree"] = spec.degree;
    j["pole_order"] = spec.pole_order;
    j["q_mag"] = spec.q_mag;
    j["coeff_growth"] = spec.coeff_growth;
    ordered_json shifts = ordered_json::array();
    for (const auto& b : spec.shifts) shifts.push_back(complex_to_json(b.value));
    j["shifts"] = shifts;
    ordered_json locals = ordered_json::array();
    for (const auto& [p, lf] : spec.locals) {
        ordered_json roots = ordered_json::array();
        for (const auto& a : lf.roots) roots.push_back(complex_to_json(a));
        locals.push_back(ordered_json{{"p", p}, {"roots", roots}, {"ramified", lf.ramified}});
    }
    j["locals"] = locals;
    if (spec.root_number) j["root_number"] = complex_to_json(*spec.root_number);
    if (spec.series_hint != SeriesHint::generic) {
        j["series_hint"] =
            spec.series_hint == SeriesHint::mean_zero_periodic ? "mean_zero_periodic" : "zeta_em";
        if (spec.series_hint == SeriesHint::mean_zero_periodic)
            j["partial_sum_bound"] = spec.partial_sum_bound;
    }
    if (!spec.trivial_zero_exclusions.empty()) {
        ordered_json ex = ordered_json::array();
        for (auto [i, k] : spec.trivial_zero_exclusions) ex.push_back(ordered_json::array({i, k}));
        j["trivial_zero_exclusions"] = ex;
    }
    if (!spec.label.empty()) j["label"] = spec.label;
    return j;
}

inline LFunctionSpec spec_from_json(const nlohmann::json& j, bool strict = false) {
    static const std::set<std::string> known = {
        "degree", "pole_order", "q_mag", "coeff_growth", "shifts", "locals",
        "root_number", "series_hint", "partial_sum_bound", "trivial_zero_exclusions", "label"};
    if (!j.is_object()) throw parse_error("spec document must be a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it)
        if (strict && !known.count(it.key()))
            throw parse_error("unknown field \"" + it.key() + "\" (strict mode)");
    for (const char* req : {"degree", "pole_order", "q_mag", "shifts", "locals"})
        if (!j.contains(req)) throw parse_error(std::string("missing field \"") + req + "\"");

    LFunctionSpec spec;
    spec.degree = j.at("degree").get<unsigned>();
    spec.pole_order = j.at("pole_order").get<unsigned>();
    spec.q_mag = j.at("q_mag").get<double>();
    spec.coeff_growth = j.value("coeff_growth", 1.0);
    for (const auto& b : j.at("shifts")) {
        cplx v = complex_from_json(b, "shifts");
        if (!(v.real() > -0.5))
            throw validation_error("shifts: Re(beta) = " + std::to_string(v.real()) +
                                   " violates the half-plane bound Re(beta) > -1/2");
        spec.shifts.push_back(GammaShift{v});
    }
    for (const auto& e : j.at("locals")) {
        LocalFactor lf;
        lf.prime = e.at("p").get<std::uint64_t>();
        lf.ramified = e.value("ramified", false);
        for (const auto& r : e.at("roots")) lf.roots.push_back(complex_from_json(r, "locals.roots"));
        spec.locals[lf.prime] = lf;
    }
    if (j.contains("root_number")) spec.root_number = complex_from_json(j.at("root_number"), "root_number");
    if (j.contains("series_hint")) {
        std::string h = j.at("series_hint").get<std::string>();
        if (h == "mean_zero_periodic")
            spec.series_hint = SeriesHint::mean_zero_periodic;
        else if (h == "zeta_em")
            spec.series_hint = SeriesHint::zeta_em;
        else if (h == "generic")
            spec.series_hint = SeriesHint::generic;
        else
            throw parse_error("unknown series_hint \"" + h + "\"");
    }
    spec.partial_sum_bound = j.value("partial_sum_bound", 0.0);
    if (j.contains("trivial_zero_exclusions"))
        for (const auto& e : j.at("trivial_zero_exclusions"))
            spec.trivial_zero_exclusions.emplace_back(e.at(0).get<unsigned>(), e.at(1).get<unsigned>());
    spec.label = j.value("label", std::string{});
    spec.recompute_local_limit();

    auto diags = validate(spec, strict);
    if (!diags.empty()) throw validation_error("spec validation failed: " + diags.front());
    return spec;
}

inline void save_spec(const LFunctionSpec& spec, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw parse_error("cannot open for writing: " + path);
    out << spec_to_json(spec).dump(2) << "\n";
}

inline LFunctionSpec load_spec(const std::string& path, bool strict = false) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open: " + path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("malformed JSON: ") + e.what());
    }
    return spec_from_json(j, strict);
}

}  // namespace lfb
