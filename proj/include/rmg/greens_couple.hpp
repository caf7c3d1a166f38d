// Closed-form plane-strain fields for a concentrated unit line couple at the
// origin, for the relaxed micromorphic model and its limiting models. The
// couple has no direction; the displacement modulus depends on r only.
// The Euler-constant term of the pure-model micro-distortion is retained
// verbatim; drop_rigid_rotation removes that constant (rigid) part.

#pragma once

#include <cmath>
#include <stdexcept>

#include "rmg/bessel.hpp"
#include "rmg/greens_force.hpp"
#include "rmg/material.hpp"

namespace rmg {

struct CoupleOptions {
    bool drop_rigid_rotation = false;
};

namespace detail {

// common micro-distortion block P11 = -P22, and the rotation-free part of
// P12 = P21
inline void couple_micro_block(double mu_m, const FieldPoint& x, KinematicState& k) {
    const double r2 = x.x1 * x.x1 + x.x2 * x.x2;
    const double r4 = r2 * r2;
    k.P11 = x.x1 * x.x2 / (2.0 * pi * mu_m * r4);
    k.P22 = -k.P11;
    k.P12 = k.P21 = (x.x2 * x.x2 - x.x1 * x.x1) / (4.0 * pi * mu_m * r4);
}

inline KinematicState couple_relaxed(const MaterialParams& p, const FieldPoint& x) {
    const double r = x.r();
    const double r2 = r * r;
    // bracket 1 - (mu_M/mu_e) (r/l2) K1(r/l2) = mu_M/mu_m + (mu_M/mu_e) r Psi_2
    const double bracket =
        p.mu_M / p.mu_m + p.mu_M * r * capital_psi({r, p.ell_2}) / p.mu_e;
    KinematicState k;
    k.u1 = -x.x2 * bracket / (4.0 * pi * p.mu_M * r2);
    k.u2 = x.x1 * bracket / (4.0 * pi * p.mu_M * r2);
    detail::couple_micro_block(p.mu_m, x, k);
    const double rot = bessel_k0(r / p.ell_2) / (2.0 * pi * p.curvature());
    k.P12 -= rot;
    k.P21 += rot;
    return with_theta(k);
}

inline KinematicState couple_pure(const MaterialParams& p, const FieldPoint& x,
                                  const CoupleOptions& opt) {
    const double r = x.r();
    const double r2 = r * r;
    KinematicState k;
    k.u1 = -x.x2 / (4.0 * pi * p.mu_m * r2);
    k.u2 = x.x1 / (4.0 * pi * p.mu_m * r2);
    detail::couple_micro_block(p.mu_m, x, k);
    const double rot = (std::log(r) + (opt.drop_rigid_rotation ? 0.0 : euler_gamma))
                     / (2.0 * pi * p.curvature());
    k.P12 += rot;
    k.P21 -= rot;
    return with_theta(k);
}

inline KinematicState couple_polar_family(const MaterialParams& p, const FieldPoint& x,
                                          double ell) {
    const double r = x.r();
    const double r2 = r * r;
    const double bracket = r * capital_psi({r, ell});  // 1 - (r/ell) K1(r/ell)
    KinematicState k;
    k.u1 = -x.x2 * bracket / (4.0 * pi * p.mu_M * r2);
    k.u2 = x.x1 * bracket / (4.0 * pi * p.mu_M * r2);
    const double rot = bessel_k0(r / ell) / (2.0 * pi * p.curvature());
    k.P12 = -rot;
    k.P21 = rot;
    return with_theta(k);
}

inline KinematicState couple_classical(const MaterialParams& p, double mu,
                                       const FieldPoint& x) {
    const double r2 = x.x1 * x.x1 + x.x2 * x.x2;
    KinematicState k;
    k.u1 = -x.x2 / (4.0 * pi * mu * r2);
    k.u2 = x.x1 / (4.0 * pi * mu * r2);
    detail::couple_micro_block(p.mu_m, x, k);
    return with_theta(k);
}

}  // namespace detail

inline KinematicState eval_couple(const MaterialParams& p, ModelKind model,
                                  const FieldPoint& x, CoupleOptions opt = {}) {
    detail::require_point(x);
    detail::require_admissible_params(p);
    switch (model) {
        case ModelKind::RelaxedMicromorphic:
            if (p.mu_c == 0.0) return detail::couple_pure(p, x, opt);
            return detail::couple_relaxed(p, x);
        case ModelKind::ZeroPoissonRelaxed:
            // the couple solution does not depend on lambda_e, lambda_m
            detail::require_zero_poisson(p);
            if (p.mu_c == 0.0) return detail::couple_pure(p, x, opt);
            return detail::couple_relaxed(p, x);
        case ModelKind::PureRelaxed:
            detail::require_pure(p);
            return detail::couple_pure(p, x, opt);
        case ModelKind::MicroStretch:
        case ModelKind::Micropolar:
            if (p.mu_c == 0.0)
                throw std::invalid_argument(
                    "micro-stretch/micropolar couple solution needs mu_c > 0");
            return detail::couple_polar_family(p, x, ell2_micropolar(p));
        case ModelKind::CoupleStress:
            return detail::couple_polar_family(p, x, ell_couple_stress(p));
        case ModelKind::ClassicalMacro:
            return detail::couple_classical(p, p.mu_M, x);
        case ModelKind::ClassicalMicro:
            return detail::couple_classical(p, p.mu_m, x);
        case ModelKind::GaugeDislocation:
            throw std::invalid_argument(
                "gauge dislocation fields are distortions; use eval_gauge_couple");
    }
    throw std::logic_error("eval_couple: unknown model");
}

inline double micro_rotation_couple(const MaterialParams& p, ModelKind model,
                                    const FieldPoint& x, CoupleOptions opt = {}) {
    detail::require_point(x);
    detail::require_admissible_params(p);
    const double r = x.r();
    switch (model) {
        case ModelKind::ZeroPoissonRelaxed:
            detail::require_zero_poisson(p);
            [[fallthrough]];
        case ModelKind::RelaxedMicromorphic:
            if (p.mu_c == 0.0)
                return -(std::log(r) + (opt.drop_rigid_rotation ? 0.0 : euler_gamma))
                       / (2.0 * pi * p.curvature());
            return bessel_k0(r / p.ell_2) / (2.0 * pi * p.curvature());
        case ModelKind::PureRelaxed:
            detail::require_pure(p);
            return -(std::log(r) + (opt.drop_rigid_rotation ? 0.0 : euler_gamma))
                   / (2.0 * pi * p.curvature());
        case ModelKind::MicroStretch:
        case ModelKind::Micropolar:
            if (p.mu_c == 0.0)
                throw std::invalid_argument(
                    "micro-stretch/micropolar couple solution needs mu_c > 0");
            return bessel_k0(r / ell2_micropolar(p)) / (2.0 * pi * p.curvature());
        case ModelKind::CoupleStress:
            return bessel_k0(r / ell_couple_stress(p)) / (2.0 * pi * p.curvature());
        case ModelKind::ClassicalMacro:
        case ModelKind::ClassicalMicro:
            return 0.0;
        case ModelKind::GaugeDislocation:
            throw std::invalid_argument(
                "gauge dislocation fields are distortions; use eval_gauge_couple");
    }
    throw std::logic_error("micro_rotation_couple: unknown model");
}

}  // namespace rmg
