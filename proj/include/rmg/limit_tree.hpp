// The model-family map: which limits take the relaxed micromorphic model to
// each member of the family, stored as data so tests can assert structure
// and the CLI can emit it as JSON.

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "rmg/greens_force.hpp"

namespace rmg {

struct LimitTreeNode {
    ModelKind model;
    std::string kinematics;
    std::string lc_to_zero;   // target of L_c -> 0
    std::string lc_to_inf;    // target of L_c -> infinity
};

struct LimitTreeEdge {
    ModelKind from;
    ModelKind to;
    std::string label;
};

struct LimitTree {
    std::vector<LimitTreeNode> nodes;
    std::vector<LimitTreeEdge> edges;
};

inline LimitTree generate_limit_tree() {
    LimitTree t;
    const std::string macro = "linear Cauchy elasticity with C_macro";
    const std::string micro = "linear Cauchy elasticity with C_micro";
    const std::string divergent = "divergent: unbounded stiffness";
    t.nodes = {
        {ModelKind::RelaxedMicromorphic, "(u, P)", macro, micro},
        {ModelKind::ZeroPoissonRelaxed, "(u, P), lambda_e = lambda_m = 0", macro, micro},
        {ModelKind::PureRelaxed, "(u, P), mu_c = 0", macro, micro},
        {ModelKind::MicroStretch, "(u, omega 1 + A)", macro, divergent},
        {ModelKind::Micropolar, "(u, A)", macro, divergent},
        {ModelKind::CoupleStress, "(u, curl u)", macro, divergent},
        {ModelKind::GaugeDislocation, "e = Du - P",
         "", "linear Cauchy elasticity with C_e (with mu_c -> 0)"},
        {ModelKind::ClassicalMacro, "u", "", ""},
        {ModelKind::ClassicalMicro, "u", "", ""},
    };
    t.edges = {
        {ModelKind::RelaxedMicromorphic, ModelKind::GaugeDislocation,
         "mu_micro -> 0, kappa_micro -> 0"},
        {ModelKind::RelaxedMicromorphic, ModelKind::MicroStretch,
         "mu_micro -> infinity, kappa_micro < infinity"},
        {ModelKind::MicroStretch, ModelKind::Micropolar, "kappa_micro -> infinity"},
        {ModelKind::Micropolar, ModelKind::CoupleStress, "mu_c -> infinity"},
        {ModelKind::RelaxedMicromorphic, ModelKind::ZeroPoissonRelaxed,
         "lambda_e = lambda_m = 0"},
        {ModelKind::RelaxedMicromorphic, ModelKind::PureRelaxed, "mu_c = 0"},
        {ModelKind::RelaxedMicromorphic, ModelKind::ClassicalMacro, "L_c -> 0"},
        {ModelKind::RelaxedMicromorphic, ModelKind::ClassicalMicro, "L_c -> infinity"},
    };
    return t;
}

inline nlohmann::ordered_json limit_tree_json() {
    const auto t = generate_limit_tree();
    nlohmann::ordered_json j;
    j["nodes"] = nlohmann::ordered_json::array();
    for (const auto& n : t.nodes) {
        nlohmann::ordered_json node;
        node["model"] = to_string(n.model);
        node["kinematics"] = n.kinematics;
        if (!n.lc_to_zero.empty()) node["L_c_to_0"] = n.lc_to_zero;
        if (!n.lc_to_inf.empty()) node["L_c_to_infinity"] = n.lc_to_inf;
        j["nodes"].push_back(node);
    }
    j["edges"] = nlohmann::ordered_json::array();
    for (const auto& e : t.edges) {
        nlohmann::ordered_json edge;
        edge["from"] = to_string(e.from);
        edge["to"] = to_string(e.to);
        edge["limit"] = e.label;
        j["edges"].push_back(edge);
    }
    return j;
}

}  // namespace rmg
