// Material constants of the isotropic relaxed micromorphic family and all
// derived scalars: plane-strain macro moduli, the dimensionless groups
// (beta, zeta, epsilon) and the characteristic lengths ell_1, ell_2.
// mu_c = 0 maps to the exact sentinel ell_2 = +infinity.

#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "rmg/bessel.hpp"

namespace rmg {

struct RawModuli {
    double mu_e = 0.0;
    double lambda_e = 0.0;
    double mu_m = 0.0;      // micro-scale shear modulus
    double lambda_m = 0.0;  // micro-scale Lame modulus
    double mu_c = 0.0;      // Cosserat couple modulus, >= 0
    double L_c = 0.0;       // characteristic length
    double a1 = 1.0;
    double a2 = 1.0;
    double a3 = 1.0;  // enters no plane-strain field; kept for the 3D utility
};

struct MaterialParams {
    // primary
    double mu_e, lambda_e, mu_m, lambda_m, mu_c, L_c, a1, a2, a3;
    // derived
    double kappa_e;   // lambda_e + mu_e (plane-strain bulk)
    double kappa_m;   // lambda_m + mu_m
    double a_tilde;   // (a1 + a2) / 2
    double mu_M;      // harmonic mean of mu_e, mu_m
    double kappa_M;   // harmonic mean of kappa_e, kappa_m
    double lambda_M;  // kappa_M - mu_M
    double beta;
    double zeta;
    double epsilon;
    double ell_1;
    double ell_2;  // +infinity exactly when mu_c = 0

    double curvature() const { return a_tilde * mu_M * L_c * L_c; }
};

inline MaterialParams derive(const RawModuli& raw) {
    MaterialParams p{};
    p.mu_e = raw.mu_e;
    p.lambda_e = raw.lambda_e;
    p.mu_m = raw.mu_m;
    p.lambda_m = raw.lambda_m;
    p.mu_c = raw.mu_c;
    p.L_c = raw.L_c;
    p.a1 = raw.a1;
    p.a2 = raw.a2;
    p.a3 = raw.a3;

    p.kappa_e = raw.lambda_e + raw.mu_e;
    p.kappa_m = raw.lambda_m + raw.mu_m;
    p.a_tilde = 0.5 * (raw.a1 + raw.a2);

    const double mu_sum = raw.mu_e + raw.mu_m;
    const double kappa_sum = p.kappa_e + p.kappa_m;
    if (mu_sum == 0.0 || kappa_sum == 0.0)
        throw std::domain_error("derive: degenerate moduli (zero harmonic-mean denominator)");

    p.mu_M = raw.mu_e * raw.mu_m / mu_sum;
    p.kappa_M = p.kappa_e * p.kappa_m / kappa_sum;
    p.lambda_M = p.kappa_M - p.mu_M;
    p.beta = (p.kappa_e + raw.mu_e) * (p.kappa_m + raw.mu_m) / (kappa_sum * mu_sum);
    p.zeta = p.mu_M / raw.mu_m - p.kappa_M / p.kappa_m;
    p.epsilon = p.kappa_m * p.beta / (p.kappa_M + p.mu_M);
    p.ell_1 = raw.L_c * std::sqrt(p.a_tilde * p.beta * p.mu_M / (4.0 * (p.kappa_M + p.mu_M)));
    p.ell_2 = raw.mu_c == 0.0
                  ? infinite_length
                  : raw.L_c * std::sqrt(p.a_tilde * p.mu_M * (raw.mu_e + raw.mu_c)
                                        / (4.0 * raw.mu_c * raw.mu_e));
    return p;
}

struct DimensionlessParams {
    double g1, g2, g3, g4;
    double mu_M_ref;
    double L_c_ref;
    double a_tilde_ref;
};

inline MaterialParams from_dimensionless(const DimensionlessParams& d) {
    if (!(d.g1 > 1.0)) throw std::domain_error("from_dimensionless: requires g1 > 1");
    if (!(d.g2 >= 0.0)) throw std::domain_error("from_dimensionless: requires g2 >= 0");
    if (!(d.g3 > d.g4 && d.g4 > 0.0))
        throw std::domain_error("from_dimensionless: requires g3 > g4 > 0");

    RawModuli raw;
    const double mu_e = d.g1 * d.mu_M_ref;
    const double kappa_e = d.g3 * d.mu_M_ref;
    const double kappa_M = d.g4 * d.mu_M_ref;
    const double mu_m = d.g1 / (d.g1 - 1.0) * d.mu_M_ref;
    const double kappa_m = d.g3 / (d.g3 - d.g4) * kappa_M;
    raw.mu_e = mu_e;
    raw.lambda_e = kappa_e - mu_e;
    raw.mu_m = mu_m;
    raw.lambda_m = kappa_m - mu_m;
    raw.mu_c = d.g2 * d.mu_M_ref;
    raw.L_c = d.L_c_ref;
    raw.a1 = raw.a2 = raw.a3 = d.a_tilde_ref;
    return derive(raw);
}

struct AdmissibilityCondition {
    std::string name;
    bool ok;
};

struct AdmissibilityReport {
    std::vector<AdmissibilityCondition> positive_definiteness;
    std::vector<AdmissibilityCondition> ellipticity;
    bool positive_definite = true;
    bool elliptic = true;
};

inline AdmissibilityReport check_admissible(const MaterialParams& p) {
    AdmissibilityReport rep;
    auto pd = [&rep](const char* name, bool ok) {
        rep.positive_definiteness.push_back({name, ok});
        rep.positive_definite = rep.positive_definite && ok;
    };
    auto el = [&rep](const char* name, bool ok) {
        rep.ellipticity.push_back({name, ok});
        rep.elliptic = rep.elliptic && ok;
    };
    pd("mu_m > 0", p.mu_m > 0.0);
    pd("mu_c >= 0", p.mu_c >= 0.0);
    pd("mu_e > 0", p.mu_e > 0.0);
    pd("kappa_m > 0", p.kappa_m > 0.0);
    pd("kappa_e > 0", p.kappa_e > 0.0);
    pd("a_tilde * L_c^2 > 0", p.a_tilde * p.L_c * p.L_c > 0.0);

    el("mu_M > 0", p.mu_M > 0.0);
    el("mu_m > 0", p.mu_m > 0.0);
    el("mu_e + mu_c > 0", p.mu_e + p.mu_c > 0.0);
    el("mu_c >= 0", p.mu_c >= 0.0);
    el("2 mu_e + lambda_e > 0", 2.0 * p.mu_e + p.lambda_e > 0.0);
    el("2 mu_m + lambda_m > 0", 2.0 * p.mu_m + p.lambda_m > 0.0);
    el("a_tilde * L_c^2 > 0", p.a_tilde * p.L_c * p.L_c > 0.0);
    return rep;
}

inline bool is_admissible(const MaterialParams& p) {
    const auto rep = check_admissible(p);
    return rep.positive_definite && rep.elliptic;
}

struct Macro3D {
    double mu_macro;
    double kappa_macro;
    double lambda_macro;
};

// 3D homogenization: harmonic means plus lambda = (3 kappa - 2 mu) / 3.
inline Macro3D homogenize_3d(double mu_e, double mu_micro, double kappa_e_3d,
                             double kappa_micro_3d) {
    const double md = mu_e + mu_micro;
    const double kd = kappa_e_3d + kappa_micro_3d;
    if (md == 0.0 || kd == 0.0)
        throw std::domain_error("homogenize_3d: zero denominator");
    Macro3D m;
    m.mu_macro = mu_e * mu_micro / md;
    m.kappa_macro = kappa_e_3d * kappa_micro_3d / kd;
    m.lambda_macro = (3.0 * m.kappa_macro - 2.0 * m.mu_macro) / 3.0;
    return m;
}

}  // namespace rmg
