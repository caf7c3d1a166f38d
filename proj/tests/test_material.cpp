#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "rmg/material.hpp"
#include "rmg/material_io.hpp"
#include "oracles.hpp"

using Catch::Approx;
using rmg::derive;
using rmg::DimensionlessParams;
using rmg::MaterialParams;
using rmg::RawModuli;

namespace {
RawModuli unit_raw() {
    RawModuli r;
    r.mu_e = r.lambda_e = r.mu_m = r.lambda_m = r.mu_c = 1.0;
    r.L_c = 1.0;
    r.a1 = r.a2 = r.a3 = 1.0;
    return r;
}
}  // namespace

TEST_CASE("derive populates the derived scalars", "[material]") {
    RawModuli r = unit_raw();
    r.mu_e = r.mu_m = 2.0;
    auto p = derive(r);
    CHECK(p.mu_M == Approx(1.0));  // harmonic-mean symmetry

    r = unit_raw();
    r.mu_c = 0.0;
    p = derive(r);
    CHECK(std::isinf(p.ell_2));

    r = unit_raw();
    r.lambda_e = r.lambda_m = 0.0;
    p = derive(r);
    CHECK(p.lambda_M == Approx(0.0).margin(1e-15));
    CHECK(p.zeta == Approx(0.0).margin(1e-15));
}

TEST_CASE("harmonic-mean identities over random draws", "[material]") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 1000; ++i) {
        const auto d = oracle::draw_params(rng);
        const auto p = rmg::from_dimensionless(
            {d.g1, d.g2, d.g3, d.g4, d.mu_M, d.L_c, d.a_tilde});
        CHECK(std::abs(1.0 / p.mu_M - 1.0 / p.mu_e - 1.0 / p.mu_m) <= 1e-14 / p.mu_M);
        CHECK(std::abs(1.0 / p.kappa_M - 1.0 / p.kappa_e - 1.0 / p.kappa_m)
              <= 1e-14 / p.kappa_M);
        CHECK(p.mu_e > p.mu_M);
        CHECK(p.mu_M > 0.0);
        CHECK(p.kappa_e > p.kappa_M);
        CHECK(p.kappa_M > 0.0);
        CHECK(p.beta > 0.0);
    }
}

TEST_CASE("from_dimensionless reproduces the study identifications", "[material]") {
    auto p = rmg::from_dimensionless({1.2, 3.0, 5.0, 3.0, 1.0, 1.0, 1.0});
    CHECK(p.mu_m == Approx(6.0));                 // g1 = 1.2 -> mu_m = 6 mu_M
    CHECK(p.kappa_m == Approx(2.5 * p.kappa_M));  // g3=5, g4=3 -> kappa_m = 2.5 kappa_M

    p = rmg::from_dimensionless({3.0, 2.0, 5.0, 3.0, 1.0, 1.0, 1.0});
    CHECK(p.mu_m == Approx(1.5));                 // g1 = 3 -> mu_m = 1.5 mu_M

    // round trip: derive() must reproduce the reference macro moduli
    std::mt19937_64 rng(2);
    for (int i = 0; i < 200; ++i) {
        const auto d = oracle::draw_params(rng);
        const auto q = rmg::from_dimensionless(
            {d.g1, d.g2, d.g3, d.g4, d.mu_M, d.L_c, d.a_tilde});
        CHECK(q.mu_M == Approx(d.mu_M).epsilon(1e-14));
        CHECK(q.kappa_M == Approx(d.g4 * d.mu_M).epsilon(1e-14));
    }

    CHECK_THROWS_AS(rmg::from_dimensionless({1.0, 0.0, 2.0, 1.0, 1.0, 1.0, 1.0}),
                    std::domain_error);
    CHECK_THROWS_AS(rmg::from_dimensionless({2.0, 0.0, 1.0, 1.5, 1.0, 1.0, 1.0}),
                    std::domain_error);
}

TEST_CASE("admissibility report", "[material]") {
    RawModuli r = unit_raw();
    r.mu_e = -0.5;
    auto rep = rmg::check_admissible(derive(r));
    CHECK_FALSE(rep.positive_definite);
    bool found = false;
    for (const auto& c : rep.positive_definiteness)
        if (c.name == "mu_e > 0") { found = true; CHECK_FALSE(c.ok); }
    CHECK(found);

    r = unit_raw();
    r.mu_c = 0.0;
    rep = rmg::check_admissible(derive(r));
    CHECK(rep.positive_definite);
    CHECK(rep.elliptic);

    rep = rmg::check_admissible(derive(unit_raw()));
    CHECK(rep.positive_definite);
    CHECK(rep.elliptic);
}

TEST_CASE("homogenize_3d", "[material]") {
    auto m = rmg::homogenize_3d(2.0, 2.0, 3.0, 6.0);
    CHECK(m.mu_macro == Approx(1.0));
    CHECK(m.kappa_macro == Approx(2.0));
    CHECK(m.lambda_macro == Approx((3.0 * 2.0 - 2.0 * 1.0) / 3.0));

    m = rmg::homogenize_3d(2.0, 2.0e12, 3.0, 6.0);
    CHECK(m.mu_macro == Approx(2.0).epsilon(1e-11));

    CHECK_THROWS_AS(rmg::homogenize_3d(1.0, -1.0, 1.0, 1.0), std::domain_error);
}

TEST_CASE("micro-stretch limit of zeta, beta, ell_1", "[material]") {
    RawModuli r = unit_raw();
    r.mu_e = 2.0;
    r.lambda_e = 1.0;  // kappa_e = 3
    const double kappa_m_fixed = 4.0;

    double prev_zeta_err = 1e300, prev_beta_err = 1e300, prev_l1_err = 1e300;
    for (int k = 3; k <= 8; ++k) {
        r.mu_m = std::pow(10.0, k) * r.mu_e;
        r.lambda_m = kappa_m_fixed - r.mu_m;  // hold kappa_m while mu_m grows
        const auto p = derive(r);
        const double zeta_lim = (p.kappa_M - p.kappa_e) / p.kappa_e;
        const double beta_lim =
            (p.kappa_e - p.kappa_M) * (p.kappa_e + p.mu_M) / (p.kappa_e * p.kappa_e);
        const double l1_lim = p.L_c
            * std::sqrt(p.a_tilde * p.mu_M * (p.kappa_e + p.mu_M)
                        / (4.0 * (p.kappa_M + p.mu_M) * (p.kappa_e + p.kappa_m)));
        const double ze = std::abs(p.zeta - zeta_lim);
        const double be = std::abs(p.beta - beta_lim);
        const double le = std::abs(p.ell_1 - l1_lim);
        CHECK(ze < prev_zeta_err);
        CHECK(be < prev_beta_err);
        CHECK(le < prev_l1_err);
        prev_zeta_err = ze;
        prev_beta_err = be;
        prev_l1_err = le;
    }
    CHECK(prev_zeta_err <= 1e-7);
    CHECK(prev_beta_err <= 1e-7);
    CHECK(prev_l1_err <= 1e-7);
}

TEST_CASE("Cosserat and couple-stress length identifications", "[material]") {
    // a1 mu_M L_c^2 = a2 mu_M L_c^2 = 4 eta  =>  ell_2(cs) = sqrt(eta / mu_M)
    RawModuli r = unit_raw();
    r.a1 = r.a2 = 2.0;
    r.L_c = 3.0;
    const auto p = derive(r);
    const double eta = 0.25 * r.a1 * p.mu_M * r.L_c * r.L_c;
    const double ell_cs = p.L_c * std::sqrt(p.a_tilde / 4.0);
    CHECK(ell_cs == Approx(std::sqrt(eta / p.mu_M)).epsilon(1e-14));

    // Nowacki identification: alpha = mu_c, gamma + eps = a_tilde mu_M L_c^2
    // => ell_2(mp) = sqrt((gamma+eps)(mu_M+alpha) / (4 alpha mu_M))
    const double alpha = r.mu_c;
    const double gpe = p.a_tilde * p.mu_M * r.L_c * r.L_c;
    const double ell_mp = std::sqrt(gpe * (p.mu_M + alpha) / (4.0 * alpha * p.mu_M));
    CHECK(ell_mp == Approx(p.L_c * std::sqrt(p.a_tilde * (p.mu_M + p.mu_c) / (4.0 * p.mu_c)))
                        .epsilon(1e-14));
}

TEST_CASE("JSON parameter schemas", "[material]") {
    const auto p = rmg::params_from_json_text(
        R"({"dimensionless":{"g1":1.2,"g2":3,"g3":5,"g4":3,"mu_M":1,"L_c":1,"a_tilde":1}})");
    CHECK(p.mu_m == Approx(6.0));

    const auto q = rmg::params_from_json_text(
        R"({"raw":{"mu_e":1,"lambda_e":0.5,"mu_m":2,"lambda_m":0.25,"mu_c":1,
             "L_c":1,"a1":1,"a2":1,"a3":1}})");
    CHECK(q.kappa_e == Approx(1.5));

    CHECK_THROWS_AS(rmg::params_from_json_text(R"({"raw":{"mu_e":1},"extra":1})"),
                    rmg::ParamFileError);
    CHECK_THROWS_AS(rmg::params_from_json_text(
                        R"({"raw":{"mu_e":1,"lambda_e":0,"mu_m":1,"lambda_m":0,"mu_c":0,
                             "L_c":1,"a1":1,"a2":1,"a3":1,"bogus":2}})"),
                    rmg::ParamFileError);
    CHECK_THROWS_AS(rmg::params_from_json_text("{}"), rmg::ParamFileError);
    CHECK_THROWS_AS(rmg::params_from_json_text("not json"), rmg::ParamFileError);
}
