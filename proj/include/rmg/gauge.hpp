// Fundamental solution of the plane-strain gauge-invariant incompatible
// elasticity model for a concentrated couple: the traceless incompatible
// elastic distortion e, plus finite-difference residuals of its four
// component equilibrium equations.

#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

#include "rmg/bessel.hpp"
#include "rmg/greens_force.hpp"
#include "rmg/material.hpp"

namespace rmg {

struct DistortionState {
    double e11 = 0.0, e12 = 0.0, e21 = 0.0, e22 = 0.0;
};

inline DistortionState eval_gauge_couple(const MaterialParams& p, const FieldPoint& x) {
    detail::require_point(x);
    if (!(p.mu_c > 0.0))
        throw std::domain_error("eval_gauge_couple: mu_c > 0 required (solution unbounded at mu_c = 0)");
    const double r = x.r();
    const double r2 = r * r;
    const double l2 = p.ell_2;
    const double K0 = bessel_k0(r / l2);
    const double K2 = bessel_k2(r / l2);
    const double me = p.mu_c + p.mu_e;

    DistortionState e;
    e.e11 = -x.x1 * x.x2 * K2 / (4.0 * pi * me * l2 * l2 * r2);
    e.e22 = -e.e11;
    const double sym = (x.x1 * x.x1 - x.x2 * x.x2) * K2 / (8.0 * pi * me * l2 * l2 * r2);
    const double skew = p.mu_e * K0 / (8.0 * pi * p.mu_c * me * l2 * l2);
    e.e12 = skew + sym;
    e.e21 = -skew + sym;
    return e;
}

// Residuals of the four component equations, with M = 0 away from the
// origin, using O(h^2) central differences of eval_gauge_couple.
inline std::array<double, 4> gauge_residual(const MaterialParams& p, const FieldPoint& x,
                                            double h) {
    if (!(x.r() > 10.0 * h))
        throw std::invalid_argument("gauge_residual: step too large relative to r");
    if (!(p.mu_c > 0.0))
        throw std::domain_error("gauge_residual: mu_c > 0 required");

    auto e = [&](double a, double b) { return eval_gauge_couple(p, {a, b}); };
    auto d11 = [&](auto get) {
        return (get(e(x.x1 + h, x.x2)) - 2.0 * get(e(x.x1, x.x2)) + get(e(x.x1 - h, x.x2)))
               / (h * h);
    };
    auto d22 = [&](auto get) {
        return (get(e(x.x1, x.x2 + h)) - 2.0 * get(e(x.x1, x.x2)) + get(e(x.x1, x.x2 - h)))
               / (h * h);
    };
    auto d12 = [&](auto get) {
        return (get(e(x.x1 + h, x.x2 + h)) - get(e(x.x1 + h, x.x2 - h))
                - get(e(x.x1 - h, x.x2 + h)) + get(e(x.x1 - h, x.x2 - h)))
               / (4.0 * h * h);
    };

    auto e11 = [](const DistortionState& s) { return s.e11; };
    auto e12 = [](const DistortionState& s) { return s.e12; };
    auto e21 = [](const DistortionState& s) { return s.e21; };
    auto e22 = [](const DistortionState& s) { return s.e22; };

    const auto e0 = e(x.x1, x.x2);
    const double c = p.curvature();
    const double le = p.lambda_e, mue = p.mu_e, muc = p.mu_c;

    std::array<double, 4> resid{};
    resid[0] = -c * (d22(e11) - d12(e12)) + (le + 2.0 * mue) * e0.e11 + le * e0.e22;
    resid[1] = c * (d12(e11) - d11(e12)) + (muc + mue) * e0.e12 + (mue - muc) * e0.e21;
    resid[2] = -c * (d22(e21) - d12(e22)) + (mue - muc) * e0.e12 + (muc + mue) * e0.e21;
    resid[3] = c * (d12(e21) - d11(e22)) + le * e0.e11 + (le + 2.0 * mue) * e0.e22;
    return resid;
}

}  // namespace rmg
