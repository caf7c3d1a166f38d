// Constitutive post-processing: force stress, micro stress and moment
// stresses from kinematic fields, plus the finite-difference machinery that
// feeds them gradients of the closed-form solutions.

#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "rmg/greens_couple.hpp"
#include "rmg/greens_force.hpp"
#include "rmg/material.hpp"

namespace rmg {

struct Mat2 {
    double m11 = 0.0, m12 = 0.0, m21 = 0.0, m22 = 0.0;
};

struct StressState {
    Mat2 sigma;        // force stress
    double sigma33 = 0.0;
    Mat2 sigma_micro;  // micro stress (symmetric)
    double m13 = 0.0, m23 = 0.0;  // in-plane moment stresses
    double m31 = 0.0, m32 = 0.0;  // out-of-plane components
    Mat2 e;            // incompatible elastic distortion Du - P
};

enum class LoadKind { Force, Couple };

// sigma, sigma_micro and m from the displacement gradient, the
// micro-distortion and its curl components (P11,2 - P12,1, P21,2 - P22,1).
inline StressState stresses(const MaterialParams& p, const Mat2& Du, const Mat2& P,
                            const std::array<double, 2>& curl_rows) {
    StressState s;
    const double le = p.lambda_e, mue = p.mu_e, muc = p.mu_c;
    const double e11 = Du.m11 - P.m11, e12 = Du.m12 - P.m12;
    const double e21 = Du.m21 - P.m21, e22 = Du.m22 - P.m22;
    s.e = {e11, e12, e21, e22};
    s.sigma.m11 = (le + 2.0 * mue) * e11 + le * e22;
    s.sigma.m22 = (le + 2.0 * mue) * e22 + le * e11;
    s.sigma.m12 = (mue + muc) * e12 + (mue - muc) * e21;
    s.sigma.m21 = (mue + muc) * e21 + (mue - muc) * e12;
    s.sigma33 = le / (2.0 * (le + mue)) * (s.sigma.m11 + s.sigma.m22);

    const double trP = P.m11 + P.m22;
    s.sigma_micro.m11 = 2.0 * p.mu_m * P.m11 + p.lambda_m * trP;
    s.sigma_micro.m22 = 2.0 * p.mu_m * P.m22 + p.lambda_m * trP;
    s.sigma_micro.m12 = s.sigma_micro.m21 = p.mu_m * (P.m12 + P.m21);

    const double c = p.curvature();
    s.m13 = -c * curl_rows[0];
    s.m23 = -c * curl_rows[1];
    const double ratio = (p.a1 - p.a2) / (p.a1 + p.a2);
    s.m31 = ratio * s.m13;
    s.m32 = ratio * s.m23;
    return s;
}

inline Mat2 elastic_distortion(const Mat2& Du, const Mat2& P) {
    return {Du.m11 - P.m11, Du.m12 - P.m12, Du.m21 - P.m21, Du.m22 - P.m22};
}

// Kinematic fields of a (model, load) pair as a single callable.
struct FieldEvaluator {
    MaterialParams p;
    ModelKind model;
    LoadKind load;
    ForceDirection dir = ForceDirection::x2;
    CoupleOptions couple_opts{};

    KinematicState operator()(const FieldPoint& x) const {
        return load == LoadKind::Force ? eval_force(p, model, x, dir)
                                       : eval_couple(p, model, x, couple_opts);
    }
};

namespace detail {

inline double fd_step(const MaterialParams& p, double r) {
    const double ell = std::isinf(p.ell_2) ? p.ell_1 : p.ell_2;
    return 1e-4 * std::max(r, ell);
}

}  // namespace detail

// Richardson-extrapolated central differences of the displacement, O(h^4).
inline Mat2 gradient_u(const FieldEvaluator& f, const FieldPoint& x, double h = 0.0) {
    const double r = x.r();
    if (h == 0.0) h = detail::fd_step(f.p, r);
    if (!(r > 10.0 * h))
        throw std::invalid_argument("gradient_u: step too large relative to r");
    auto diff = [&](int comp, int axis, double step) {
        FieldPoint a = x, b = x;
        (axis == 0 ? a.x1 : a.x2) += step;
        (axis == 0 ? b.x1 : b.x2) -= step;
        const auto ka = f(a), kb = f(b);
        const double va = comp == 0 ? ka.u1 : ka.u2;
        const double vb = comp == 0 ? kb.u1 : kb.u2;
        if (!std::isfinite(va) || !std::isfinite(vb))
            throw std::runtime_error("gradient_u: non-finite field value in stencil");
        return (va - vb) / (2.0 * step);
    };
    auto rich = [&](int comp, int axis) {
        const double d1 = diff(comp, axis, h);
        const double d2 = diff(comp, axis, 0.5 * h);
        return (4.0 * d2 - d1) / 3.0;
    };
    return {rich(0, 0), rich(0, 1), rich(1, 0), rich(1, 1)};
}

// Curl rows (P11,2 - P12,1, P21,2 - P22,1) by the same FD scheme.
inline std::array<double, 2> curl_p(const FieldEvaluator& f, const FieldPoint& x,
                                    double h = 0.0) {
    const double r = x.r();
    if (h == 0.0) h = detail::fd_step(f.p, r);
    if (!(r > 10.0 * h))
        throw std::invalid_argument("curl_p: step too large relative to r");
    auto diff = [&](auto get, int axis, double step) {
        FieldPoint a = x, b = x;
        (axis == 0 ? a.x1 : a.x2) += step;
        (axis == 0 ? b.x1 : b.x2) -= step;
        return (get(f(a)) - get(f(b))) / (2.0 * step);
    };
    auto rich = [&](auto get, int axis) {
        const double d1 = diff(get, axis, h);
        const double d2 = diff(get, axis, 0.5 * h);
        return (4.0 * d2 - d1) / 3.0;
    };
    auto P11 = [](const KinematicState& k) { return k.P11; };
    auto P12 = [](const KinematicState& k) { return k.P12; };
    auto P21 = [](const KinematicState& k) { return k.P21; };
    auto P22 = [](const KinematicState& k) { return k.P22; };
    return {rich(P11, 1) - rich(P12, 0), rich(P21, 1) - rich(P22, 0)};
}

inline Mat2 micro_distortion(const KinematicState& k) {
    return {k.P11, k.P12, k.P21, k.P22};
}

// Full stress state of a closed-form solution at x, gradients by FD.
inline StressState stresses_at(const FieldEvaluator& f, const FieldPoint& x,
                               double h = 0.0) {
    const auto k = f(x);
    const auto Du = gradient_u(f, x, h);
    return stresses(f.p, Du, micro_distortion(k), curl_p(f, x, h));
}

}  // namespace rmg
