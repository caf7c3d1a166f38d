// JSON parameter-file schemas:
//   {"raw": {"mu_e":..,"lambda_e":..,"mu_m":..,"lambda_m":..,"mu_c":..,
//            "L_c":..,"a1":..,"a2":..,"a3":..}}
//   {"dimensionless": {"g1":..,"g2":..,"g3":..,"g4":..,"mu_M":..,
//                      "L_c":..,"a_tilde":..}}
// Unknown keys are rejected.

#pragma once

#include <set>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "rmg/material.hpp"

namespace rmg {

struct ParamFileError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline void require_keys(const nlohmann::json& obj, const std::set<std::string>& allowed,
                         const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (!allowed.count(it.key()))
            throw ParamFileError("unknown key \"" + it.key() + "\" in " + where);
    }
}

inline double number_at(const nlohmann::json& obj, const std::string& key,
                        const std::string& where) {
    if (!obj.contains(key))
        throw ParamFileError("missing key \"" + key + "\" in " + where);
    const auto& v = obj.at(key);
    if (!v.is_number())
        throw ParamFileError("key \"" + key + "\" in " + where + " must be a number");
    return v.get<double>();
}

}  // namespace detail

inline MaterialParams params_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ParamFileError("parameter file must be a JSON object");
    detail::require_keys(j, {"raw", "dimensionless"}, "parameter file");
    if (j.contains("raw") == j.contains("dimensionless"))
        throw ParamFileError("parameter file needs exactly one of \"raw\" or \"dimensionless\"");

    if (j.contains("raw")) {
        const auto& o = j.at("raw");
        detail::require_keys(
            o, {"mu_e", "lambda_e", "mu_m", "lambda_m", "mu_c", "L_c", "a1", "a2", "a3"},
            "\"raw\"");
        RawModuli raw;
        raw.mu_e = detail::number_at(o, "mu_e", "\"raw\"");
        raw.lambda_e = detail::number_at(o, "lambda_e", "\"raw\"");
        raw.mu_m = detail::number_at(o, "mu_m", "\"raw\"");
        raw.lambda_m = detail::number_at(o, "lambda_m", "\"raw\"");
        raw.mu_c = detail::number_at(o, "mu_c", "\"raw\"");
        raw.L_c = detail::number_at(o, "L_c", "\"raw\"");
        raw.a1 = detail::number_at(o, "a1", "\"raw\"");
        raw.a2 = detail::number_at(o, "a2", "\"raw\"");
        raw.a3 = detail::number_at(o, "a3", "\"raw\"");
        return derive(raw);
    }

    const auto& o = j.at("dimensionless");
    detail::require_keys(o, {"g1", "g2", "g3", "g4", "mu_M", "L_c", "a_tilde"},
                         "\"dimensionless\"");
    DimensionlessParams d;
    d.g1 = detail::number_at(o, "g1", "\"dimensionless\"");
    d.g2 = detail::number_at(o, "g2", "\"dimensionless\"");
    d.g3 = detail::number_at(o, "g3", "\"dimensionless\"");
    d.g4 = detail::number_at(o, "g4", "\"dimensionless\"");
    d.mu_M_ref = detail::number_at(o, "mu_M", "\"dimensionless\"");
    d.L_c_ref = detail::number_at(o, "L_c", "\"dimensionless\"");
    d.a_tilde_ref = detail::number_at(o, "a_tilde", "\"dimensionless\"");
    return from_dimensionless(d);
}

inline MaterialParams params_from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParamFileError(std::string("invalid JSON: ") + e.what());
    }
    return params_from_json(j);
}

}  // namespace rmg
