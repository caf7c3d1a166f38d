// Closed-form plane-strain Kelvin fields (concentrated unit line force) for
// the relaxed micromorphic continuum and its limiting models. Every model is
// a dedicated closed-form path; numeric limits appear only in tests. The
// natural load direction is x2; direction x1 is obtained by the index
// interchange 1 <-> 2 on inputs and outputs.

#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

#include "rmg/bessel.hpp"
#include "rmg/material.hpp"

namespace rmg {

enum class ModelKind {
    RelaxedMicromorphic,
    ZeroPoissonRelaxed,
    PureRelaxed,
    MicroStretch,
    Micropolar,
    CoupleStress,
    ClassicalMacro,
    ClassicalMicro,
    GaugeDislocation,
};

inline const char* to_string(ModelKind m) {
    switch (m) {
        case ModelKind::RelaxedMicromorphic: return "relaxed";
        case ModelKind::ZeroPoissonRelaxed: return "zero-poisson";
        case ModelKind::PureRelaxed: return "pure";
        case ModelKind::MicroStretch: return "micro-stretch";
        case ModelKind::Micropolar: return "micropolar";
        case ModelKind::CoupleStress: return "couple-stress";
        case ModelKind::ClassicalMacro: return "classical-macro";
        case ModelKind::ClassicalMicro: return "classical-micro";
        case ModelKind::GaugeDislocation: return "gauge-dislocation";
    }
    return "?";
}

enum class ForceDirection { x1, x2 };

struct FieldPoint {
    double x1;
    double x2;
    double r() const { return std::hypot(x1, x2); }
};

struct KinematicState {
    double u1 = 0.0, u2 = 0.0;
    double P11 = 0.0, P12 = 0.0, P21 = 0.0, P22 = 0.0;
    double theta3 = 0.0;  // always (P21 - P12) / 2
};

// Characteristic lengths of the micro-stretch / micropolar limit family.
inline double ell1_micro_stretch(const MaterialParams& p) {
    return p.L_c * std::sqrt(p.a_tilde * p.mu_M * (p.kappa_e + p.mu_M)
                             / (4.0 * (p.kappa_M + p.mu_M) * (p.kappa_e + p.kappa_m)));
}
inline double ell2_micropolar(const MaterialParams& p) {
    if (p.mu_c == 0.0) return infinite_length;
    return p.L_c * std::sqrt(p.a_tilde * (p.mu_M + p.mu_c) / (4.0 * p.mu_c));
}
inline double ell_couple_stress(const MaterialParams& p) {
    return p.L_c * std::sqrt(p.a_tilde / 4.0);
}

namespace detail {

inline void require_point(const FieldPoint& x) {
    if (!(x.r() >= 1e-300))
        throw std::domain_error("field evaluation: singular at the load point (r = 0)");
}

inline void require_admissible_params(const MaterialParams& p) {
    if (!is_admissible(p))
        throw std::invalid_argument("field evaluation: parameters are not admissible");
}

inline void require_zero_poisson(const MaterialParams& p) {
    const double scale = std::abs(p.mu_e) + std::abs(p.mu_m);
    if (std::abs(p.lambda_e) > 1e-12 * scale || std::abs(p.lambda_m) > 1e-12 * scale)
        throw std::invalid_argument("zero-poisson model requires lambda_e = lambda_m = 0");
}

inline void require_pure(const MaterialParams& p) {
    if (p.mu_c != 0.0)
        throw std::invalid_argument("pure relaxed model requires mu_c = 0");
}

inline KinematicState with_theta(KinematicState k) {
    k.theta3 = 0.5 * (k.P21 - k.P12);
    return k;
}

// classical Kelvin displacement, unit force along x2, moduli (mu, kappa)
inline void kelvin_u(double mu, double kappa, const FieldPoint& x, double& u1, double& u2) {
    const double r2 = x.x1 * x.x1 + x.x2 * x.x2;
    const double den = 4.0 * pi * mu * (kappa + mu);
    u1 = kappa * x.x1 * x.x2 / (den * r2);
    u2 = kappa * x.x2 * x.x2 / (den * r2) - (kappa + 2.0 * mu) * 0.5 * std::log(r2) / den;
}

}  // namespace detail

// d/dx of Phi_1(r); gradient is parallel to x since Phi_1 is radial.
inline std::array<double, 2> grad_phi1(const MaterialParams& p, const FieldPoint& x) {
    detail::require_point(x);
    if (std::isinf(p.ell_1))
        throw std::domain_error("grad_phi1: ell_1 must be finite");
    const double r = x.r();
    const double d = capital_phi_derivative({r, p.ell_1});
    return {x.x1 / r * d, x.x2 / r * d};
}

namespace detail {

inline KinematicState force_relaxed(const MaterialParams& p, const FieldPoint& x,
                                    bool pure_block) {
    const double x1 = x.x1, x2 = x.x2;
    const double r2 = x1 * x1 + x2 * x2;
    const double r = std::sqrt(r2);
    const double r4 = r2 * r2;
    const double kMmM = p.kappa_M + p.mu_M;
    const double kmm = p.kappa_m + p.mu_m;
    const double diff = x1 * x1 - x2 * x2;

    const double Phi1 = capital_phi({r, p.ell_1});
    const double K01 = std::isinf(p.ell_1) ? 0.0 : bessel_k0(r / p.ell_1);
    const double Psi1 = capital_psi({r, p.ell_1});
    const double dPhi1 = capital_phi_derivative({r, p.ell_1});
    const double Psi2 = capital_psi({r, p.ell_2});

    KinematicState k;
    k.u1 = p.kappa_M * x1 * x2 / (4.0 * pi * p.mu_M * kMmM * r2)
         + p.zeta * p.zeta * x1 * x2 * Phi1 / (2.0 * pi * p.beta * kMmM * r2);
    k.u2 = p.kappa_M * x2 * x2 / (4.0 * pi * p.mu_M * kMmM * r2)
         - (p.kappa_M + 2.0 * p.mu_M) * std::log(r) / (4.0 * pi * p.mu_M * kMmM)
         - p.zeta * p.zeta / (4.0 * pi * p.beta * kMmM) * (diff / r2 * Phi1 + K01);

    const double ze_eps = p.zeta * p.epsilon / (2.0 * pi * kmm * p.beta);
    k.P11 = -p.kappa_M * x2 * diff / (4.0 * pi * p.mu_m * kMmM * r4)
          + p.zeta * x2 * Psi1 / (4.0 * pi * kMmM * r)
          - ze_eps * x2 * diff * Phi1 / r4
          + ze_eps * x1 * x2 * (x1 / r) * dPhi1 / r2;
    k.P12 = p.kappa_M * x1 * diff / (4.0 * pi * p.mu_m * kMmM * r4)
          + ze_eps * x1 * diff * Phi1 / r4
          + ze_eps * x1 * x2 * (x2 / r) * dPhi1 / r2;
    k.P21 = k.P12 - x1 / (2.0 * pi * p.mu_m * r2);
    if (!pure_block) {
        // Psi_2 vanishes identically when ell_2 = +inf, so these two lines
        // also cover mu_c = 0 evaluated through the sentinel
        k.P12 += x1 * Psi2 / (4.0 * pi * p.mu_e * r);
        k.P21 -= x1 * Psi2 / (4.0 * pi * p.mu_e * r);
    }
    k.P22 = -x2 / (2.0 * pi * kmm * r2)
          + p.kappa_M * x2 * diff / (4.0 * pi * p.mu_m * kMmM * r4)
          - p.zeta * (p.kappa_m - p.mu_m) * x2 * Psi1 / (4.0 * pi * kMmM * kmm * r)
          + ze_eps * x2 * diff * Phi1 / r4
          - ze_eps * x1 * x2 * (x1 / r) * dPhi1 / r2;

    if (p.mu_c > 0.0) {
        const double Phi2 = capital_phi({r, p.ell_2});
        const double K02 = bessel_k0(r / p.ell_2);
        const double cf = p.mu_c / (4.0 * pi * p.mu_e * (p.mu_c + p.mu_e));
        k.u1 -= 2.0 * cf * x1 * x2 * Phi2 / r2;
        k.u2 += cf * (diff / r2 * Phi2 - K02);
    }
    return with_theta(k);
}

inline KinematicState force_zero_poisson(const MaterialParams& p, const FieldPoint& x) {
    const double x1 = x.x1, x2 = x.x2;
    const double r2 = x1 * x1 + x2 * x2;
    const double r = std::sqrt(r2);
    const double r4 = r2 * r2;
    const double Psi2 = capital_psi({r, p.ell_2});

    KinematicState k;
    k.u1 = x1 * x2 / (8.0 * pi * r2 * p.mu_M);
    k.u2 = x2 * x2 / (8.0 * pi * p.mu_M * r2) - 3.0 * std::log(r) / (8.0 * pi * p.mu_M);
    k.P11 = -x2 * (x1 * x1 - x2 * x2) / (8.0 * pi * p.mu_m * r4);
    k.P12 = x1 * (x1 * x1 - x2 * x2) / (8.0 * pi * p.mu_m * r4)
          + x1 * Psi2 / (4.0 * pi * p.mu_e * r);
    k.P21 = -x1 * (3.0 * x1 * x1 + 5.0 * x2 * x2) / (8.0 * pi * p.mu_m * r4)
          - x1 * Psi2 / (4.0 * pi * p.mu_e * r);
    k.P22 = -x2 * (x1 * x1 + 3.0 * x2 * x2) / (8.0 * pi * p.mu_m * r4);
    if (p.mu_c > 0.0) {
        const double Phi2 = capital_phi({r, p.ell_2});
        const double K02 = bessel_k0(r / p.ell_2);
        k.u1 -= x1 * x2 / (8.0 * pi * r2)
              * (4.0 * p.mu_c / (p.mu_e * (p.mu_e + p.mu_c))) * Phi2;
        k.u2 += p.mu_c / (4.0 * pi * p.mu_e * (p.mu_c + p.mu_e))
              * ((x1 * x1 - x2 * x2) / r2 * Phi2 - K02);
    }
    return with_theta(k);
}

inline KinematicState force_micro_stretch(const MaterialParams& p, const FieldPoint& x) {
    const double x1 = x.x1, x2 = x.x2;
    const double r2 = x1 * x1 + x2 * x2;
    const double r = std::sqrt(r2);
    const double kMmM = p.kappa_M + p.mu_M;
    const double dk = p.kappa_e - p.kappa_M;
    const double diff = x1 * x1 - x2 * x2;
    const double l1 = ell1_micro_stretch(p);
    const double l2 = ell2_micropolar(p);

    const double Phi1 = capital_phi({r, l1});
    const double K01 = bessel_k0(r / l1);
    const double Psi1 = capital_psi({r, l1});
    const double Psi2 = capital_psi({r, l2});

    KinematicState k;
    k.u1 = p.kappa_M * x1 * x2 / (4.0 * pi * p.mu_M * kMmM * r2)
         + dk * x1 * x2 * Phi1 / (2.0 * pi * (p.kappa_e + p.mu_M) * kMmM * r2);
    k.u2 = p.kappa_M * x2 * x2 / (4.0 * pi * p.mu_M * kMmM * r2)
         - (p.kappa_M + 2.0 * p.mu_M) * std::log(r) / (4.0 * pi * p.mu_M * kMmM)
         - dk / (4.0 * pi * (p.kappa_e + p.mu_M) * kMmM) * (diff / r2 * Phi1 + K01);
    if (p.mu_c > 0.0) {
        const double Phi2 = capital_phi({r, l2});
        const double K02 = bessel_k0(r / l2);
        const double cf = p.mu_c / (4.0 * pi * p.mu_M * (p.mu_c + p.mu_M));
        k.u1 -= 2.0 * cf * x1 * x2 * Phi2 / r2;
        k.u2 += cf * (diff / r2 * Phi2 - K02);
    }
    k.P11 = k.P22 = -dk * x2 * Psi1 / (4.0 * pi * p.kappa_e * kMmM * r);
    k.P12 = x1 * Psi2 / (4.0 * pi * p.mu_M * r);
    k.P21 = -k.P12;
    return with_theta(k);
}

// micropolar and couple-stress share one structure; ell and the mu_c-type
// coupling factor distinguish them
inline KinematicState force_polar_family(const MaterialParams& p, const FieldPoint& x,
                                         double ell, double coupling) {
    const double x1 = x.x1, x2 = x.x2;
    const double r2 = x1 * x1 + x2 * x2;
    const double r = std::sqrt(r2);
    const double diff = x1 * x1 - x2 * x2;

    KinematicState k;
    detail::kelvin_u(p.mu_M, p.kappa_M, x, k.u1, k.u2);
    if (coupling != 0.0) {
        const double Phi = capital_phi({r, ell});
        const double K0l = bessel_k0(r / ell);
        k.u1 -= coupling * x1 * x2 * Phi / (2.0 * pi * p.mu_M * r2);
        k.u2 += coupling / (4.0 * pi * p.mu_M) * (diff / r2 * Phi - K0l);
    }
    const double Psi = capital_psi({r, ell});
    k.P12 = x1 * Psi / (4.0 * pi * p.mu_M * r);
    k.P21 = -k.P12;
    return with_theta(k);
}

inline KinematicState force_classical_macro(const MaterialParams& p, const FieldPoint& x) {
    const double x1 = x.x1, x2 = x.x2;
    const double r2 = x1 * x1 + x2 * x2;
    const double r4 = r2 * r2;
    const double kMmM = p.kappa_M + p.mu_M;  // lambda_M + 2 mu_M
    const double diff = x1 * x1 - x2 * x2;

    KinematicState k;
    detail::kelvin_u(p.mu_M, p.kappa_M, x, k.u1, k.u2);
    const double slave = p.kappa_M / (4.0 * pi * p.mu_m * kMmM * r4);
    k.P11 = p.zeta * x2 / (4.0 * pi * kMmM * r2) - slave * x2 * diff;
    k.P12 = x1 / (4.0 * pi * p.mu_e * r2) + slave * x1 * diff;
    k.P21 = -x1 / (4.0 * pi * p.mu_e * r2) - x1 / (2.0 * pi * p.mu_m * r2)
          + slave * x1 * diff;
    k.P22 = -(p.zeta * p.lambda_m + 2.0 * kMmM) * x2
              / (4.0 * pi * (p.lambda_m + 2.0 * p.mu_m) * kMmM * r2)
          + slave * x2 * diff;
    return with_theta(k);
}

inline KinematicState force_classical_micro(const MaterialParams& p, const FieldPoint& x) {
    const double x1 = x.x1, x2 = x.x2;
    const double r2 = x1 * x1 + x2 * x2;
    const double r4 = r2 * r2;
    const double kmm = p.kappa_m + p.mu_m;

    KinematicState k;
    detail::kelvin_u(p.mu_m, p.kappa_m, x, k.u1, k.u2);
    const double cf = (p.kappa_e - p.mu_c)
        / (4.0 * pi * (p.mu_c + p.mu_e) * (p.kappa_e + p.mu_e));
    const double cl = (p.mu_c + p.kappa_e + 2.0 * p.mu_e)
        / (4.0 * pi * (p.mu_c + p.mu_e) * (p.kappa_e + p.mu_e));
    k.u1 += cf * x1 * x2 / r2;
    k.u2 += cf * x2 * x2 / r2 - cl * std::log(std::sqrt(r2));

    const double den = 4.0 * pi * p.mu_m * kmm * r4;
    k.P11 = p.kappa_m * x2 * (x2 * x2 - x1 * x1) / den;
    k.P12 = -p.kappa_m * x1 * (x2 * x2 - x1 * x1) / den;
    k.P21 = -x1 * (x1 * x1 * (p.kappa_m + 2.0 * p.mu_m)
                   + x2 * x2 * (3.0 * p.kappa_m + 2.0 * p.mu_m)) / den;
    k.P22 = x2 * (x1 * x1 * (p.kappa_m - 2.0 * p.mu_m)
                  - x2 * x2 * (p.kappa_m + 2.0 * p.mu_m)) / den;
    return with_theta(k);
}

inline KinematicState swap_indices(const KinematicState& s) {
    KinematicState k;
    k.u1 = s.u2;
    k.u2 = s.u1;
    k.P11 = s.P22;
    k.P12 = s.P21;
    k.P21 = s.P12;
    k.P22 = s.P11;
    k.theta3 = 0.5 * (k.P21 - k.P12);
    return k;
}

}  // namespace detail

inline KinematicState eval_force(const MaterialParams& p, ModelKind model,
                                 const FieldPoint& x,
                                 ForceDirection dir = ForceDirection::x2) {
    detail::require_point(x);
    detail::require_admissible_params(p);
    if (dir == ForceDirection::x1)
        return detail::swap_indices(eval_force(p, model, {x.x2, x.x1}, ForceDirection::x2));

    switch (model) {
        case ModelKind::RelaxedMicromorphic:
            return detail::force_relaxed(p, x, false);
        case ModelKind::PureRelaxed:
            detail::require_pure(p);
            return detail::force_relaxed(p, x, true);
        case ModelKind::ZeroPoissonRelaxed:
            detail::require_zero_poisson(p);
            return detail::force_zero_poisson(p, x);
        case ModelKind::MicroStretch:
            return detail::force_micro_stretch(p, x);
        case ModelKind::Micropolar:
            return detail::force_polar_family(
                p, x, ell2_micropolar(p),
                p.mu_c == 0.0 ? 0.0 : p.mu_c / (p.mu_c + p.mu_M));
        case ModelKind::CoupleStress:
            return detail::force_polar_family(p, x, ell_couple_stress(p), 1.0);
        case ModelKind::ClassicalMacro:
            return detail::force_classical_macro(p, x);
        case ModelKind::ClassicalMicro:
            return detail::force_classical_micro(p, x);
        case ModelKind::GaugeDislocation:
            throw std::invalid_argument(
                "gauge dislocation model has no concentrated-force solution");
    }
    throw std::logic_error("eval_force: unknown model");
}

inline double micro_rotation_force(const MaterialParams& p, ModelKind model,
                                   const FieldPoint& x) {
    detail::require_point(x);
    detail::require_admissible_params(p);
    const double x1 = x.x1;
    const double r = x.r();
    const double r2 = r * r;
    switch (model) {
        case ModelKind::ZeroPoissonRelaxed:
            detail::require_zero_poisson(p);
            [[fallthrough]];
        case ModelKind::RelaxedMicromorphic:
        case ModelKind::PureRelaxed: {
            if (model == ModelKind::PureRelaxed) detail::require_pure(p);
            // 1/mu_M - (r/l2) K1(r/l2) / mu_e = 1/mu_m + r Psi_2 / mu_e
            const double bracket = 1.0 / p.mu_m + r * capital_psi({r, p.ell_2}) / p.mu_e;
            return -x1 / (4.0 * pi * r2) * bracket;
        }
        case ModelKind::MicroStretch:
        case ModelKind::Micropolar:
            return -x1 * capital_psi({r, ell2_micropolar(p)}) / (4.0 * pi * p.mu_M * r);
        case ModelKind::CoupleStress:
            return -x1 * capital_psi({r, ell_couple_stress(p)}) / (4.0 * pi * p.mu_M * r);
        case ModelKind::ClassicalMacro:
            return -x1 / (4.0 * pi * p.mu_M * r2);
        case ModelKind::ClassicalMicro:
            return -x1 / (4.0 * pi * p.mu_m * r2);
        case ModelKind::GaugeDislocation:
            throw std::invalid_argument(
                "gauge dislocation model has no concentrated-force solution");
    }
    throw std::logic_error("micro_rotation_force: unknown model");
}

}  // namespace rmg
