#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <string>

#include "rmg/limit_tree.hpp"

using rmg::ModelKind;

TEST_CASE("every model kind appears exactly once in the tree", "[limit_tree]") {
    const auto t = rmg::generate_limit_tree();
    std::map<std::string, int> counts;
    for (const auto& n : t.nodes) counts[rmg::to_string(n.model)]++;
    CHECK(counts.size() == 9);
    for (const auto& [name, c] : counts) {
        INFO(name);
        CHECK(c == 1);
    }
}

TEST_CASE("limit edges carry the paper's labels", "[limit_tree]") {
    const auto t = rmg::generate_limit_tree();
    auto has_edge = [&](ModelKind from, ModelKind to, const std::string& label) {
        for (const auto& e : t.edges)
            if (e.from == from && e.to == to && e.label == label) return true;
        return false;
    };
    CHECK(has_edge(ModelKind::MicroStretch, ModelKind::Micropolar,
                   "kappa_micro -> infinity"));
    CHECK(has_edge(ModelKind::Micropolar, ModelKind::CoupleStress, "mu_c -> infinity"));
    CHECK(has_edge(ModelKind::RelaxedMicromorphic, ModelKind::GaugeDislocation,
                   "mu_micro -> 0, kappa_micro -> 0"));
    CHECK(has_edge(ModelKind::RelaxedMicromorphic, ModelKind::MicroStretch,
                   "mu_micro -> infinity, kappa_micro < infinity"));
}

TEST_CASE("L_c annotations", "[limit_tree]") {
    const auto t = rmg::generate_limit_tree();
    int macro_limits = 0;
    for (const auto& n : t.nodes) {
        if (n.model == ModelKind::MicroStretch || n.model == ModelKind::Micropolar
            || n.model == ModelKind::CoupleStress) {
            CHECK(n.lc_to_inf == "divergent: unbounded stiffness");
        }
        if (n.lc_to_zero == "linear Cauchy elasticity with C_macro") ++macro_limits;
    }
    // every generalized-continuum node degenerates to macro Cauchy at L_c -> 0
    CHECK(macro_limits == 6);
}

TEST_CASE("json artifact shape", "[limit_tree]") {
    const auto j = rmg::limit_tree_json();
    REQUIRE(j.contains("nodes"));
    REQUIRE(j.contains("edges"));
    CHECK(j["nodes"].size() == 9);
    bool found = false;
    for (const auto& n : j["nodes"])
        if (n["model"] == "micropolar" && n["L_c_to_infinity"] == "divergent: unbounded stiffness")
            found = true;
    CHECK(found);
}
