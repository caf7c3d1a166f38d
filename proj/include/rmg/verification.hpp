// Verification engine: finite-difference residuals of the governing
// equations for every implemented (model, load) pair, traction/moment flux
// balance on circles, singularity-order regression, and the Fourier
// consistency sweep.
//
// Moment-balance convention, fixed once numerically: the radius-independent
// unit-magnitude combination for the couple load is
//   M_R = circ_int [ m13 n1 + m23 n2 - (x1 t2 - x2 t1) ] ds = +1,
// with t = sigma n. The skew part of the second equilibrium equation gives
// (sigma12 - sigma21) + (m13,1 + m23,2) = delta, and the moment of the
// tractions integrates sigma21 - sigma12, which fixes the relative minus
// sign between the two flux terms.

#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "rmg/constitutive.hpp"
#include "rmg/fourier.hpp"
#include "rmg/gauge.hpp"
#include "rmg/greens_couple.hpp"
#include "rmg/greens_force.hpp"

namespace rmg {

namespace fd {

// 4th-order central stencils for d^n/dx^n, n = 1..4
struct Stencil {
    int radius;
    std::array<double, 7> w;
};

inline const Stencil& stencil(int n) {
    static const Stencil s1{2, {0.0, 1.0 / 12, -8.0 / 12, 0.0, 8.0 / 12, -1.0 / 12, 0.0}};
    static const Stencil s2{2, {0.0, -1.0 / 12, 16.0 / 12, -30.0 / 12, 16.0 / 12, -1.0 / 12, 0.0}};
    static const Stencil s3{3, {0.125, -1.0, 1.625, 0.0, -1.625, 1.0, -0.125}};
    static const Stencil s4{3, {-1.0 / 6, 2.0, -13.0 / 2, 28.0 / 3, -13.0 / 2, 2.0, -1.0 / 6}};
    switch (n) {
        case 1: return s1;
        case 2: return s2;
        case 3: return s3;
        default: return s4;
    }
}

// mixed partial d^{n1}_{x1} d^{n2}_{x2} f at x, 4th-order accurate
inline double partial(const std::function<double(FieldPoint)>& f, FieldPoint x, int n1,
                      int n2, double h) {
    if (n1 == 0 && n2 == 0) return f(x);
    if (n1 > 0) {
        const auto& s = stencil(n1);
        long double acc = 0.0L;
        for (int k = -s.radius; k <= s.radius; ++k) {
            const double w = s.w[k + 3];
            if (w == 0.0) continue;
            acc += static_cast<long double>(w)
                 * partial(f, {x.x1 + k * h, x.x2}, 0, n2, h);
        }
        return static_cast<double>(acc) / std::pow(h, n1);
    }
    const auto& s = stencil(n2);
    long double acc = 0.0L;
    for (int k = -s.radius; k <= s.radius; ++k) {
        const double w = s.w[k + 3];
        if (w == 0.0) continue;
        acc += static_cast<long double>(w) * f({x.x1, x.x2 + k * h});
    }
    return static_cast<double>(acc) / std::pow(h, n2);
}

}  // namespace fd

struct ResidualReport {
    std::vector<double> equation_residuals;  // at the finer step h/2
    std::vector<double> equation_scales;     // max |term| per equation
    double step = 0.0;
    FieldPoint point{};
    double order_estimate = 0.0;

    double max_normalized() const {
        double m = 0.0;
        for (size_t i = 0; i < equation_residuals.size(); ++i)
            m = std::max(m, std::abs(equation_residuals[i]) / equation_scales[i]);
        return m;
    }
};

namespace detail {

// accumulates one equation as a sum of terms, remembering the term scale
struct EquationAccum {
    double sum = 0.0;
    double scale = 0.0;
    EquationAccum& operator+=(double term) {
        sum += term;
        scale = std::max(scale, std::abs(term));
        return *this;
    }
};

struct KinematicDerivs {
    // getter index: 0 u1, 1 u2, 2 P11, 3 P12, 4 P21, 5 P22
    std::function<double(FieldPoint)> comp[6];

    KinematicDerivs(const FieldEvaluator& f) {
        auto pick = [f](int which) {
            return [f, which](FieldPoint y) {
                const auto k = f(y);
                switch (which) {
                    case 0: return k.u1;
                    case 1: return k.u2;
                    case 2: return k.P11;
                    case 3: return k.P12;
                    case 4: return k.P21;
                    default: return k.P22;
                }
            };
        };
        for (int i = 0; i < 6; ++i) comp[i] = pick(i);
    }
    double d(int which, FieldPoint x, int n1, int n2, double h) const {
        return fd::partial(comp[which], x, n1, n2, h);
    }
};

inline std::pair<std::vector<double>, std::vector<double>> residual_once(
    const MaterialParams& p, ModelKind model, LoadKind load, const FieldPoint& x,
    double h) {
    constexpr int U1 = 0, U2 = 1, P11 = 2, P12 = 3, P21 = 4, P22 = 5;
    const double c = p.curvature();

    std::vector<EquationAccum> eq;
    auto finish = [&eq]() {
        std::vector<double> r, s;
        for (auto& e : eq) {
            r.push_back(e.sum);
            s.push_back(e.scale == 0.0 ? 1.0 : e.scale);
        }
        return std::make_pair(r, s);
    };

    if (model == ModelKind::GaugeDislocation) {
        if (load != LoadKind::Couple)
            throw std::invalid_argument("pde_residual: gauge model supports the couple load only");
        auto e_comp = [&p](int which) {
            return [&p, which](FieldPoint y) {
                const auto e = eval_gauge_couple(p, y);
                switch (which) {
                    case 0: return e.e11;
                    case 1: return e.e12;
                    case 2: return e.e21;
                    default: return e.e22;
                }
            };
        };
        auto d = [&](int w, int n1, int n2) { return fd::partial(e_comp(w), x, n1, n2, h); };
        const auto e0 = eval_gauge_couple(p, x);
        eq.resize(4);
        eq[0] += -c * d(0, 0, 2);
        eq[0] += c * d(1, 1, 1);
        eq[0] += (p.lambda_e + 2.0 * p.mu_e) * e0.e11;
        eq[0] += p.lambda_e * e0.e22;
        eq[1] += c * d(0, 1, 1);
        eq[1] += -c * d(1, 2, 0);
        eq[1] += (p.mu_c + p.mu_e) * e0.e12;
        eq[1] += (p.mu_e - p.mu_c) * e0.e21;
        eq[2] += -c * d(2, 0, 2);
        eq[2] += c * d(3, 1, 1);
        eq[2] += (p.mu_e - p.mu_c) * e0.e12;
        eq[2] += (p.mu_c + p.mu_e) * e0.e21;
        eq[3] += c * d(2, 1, 1);
        eq[3] += -c * d(3, 2, 0);
        eq[3] += p.lambda_e * e0.e11;
        eq[3] += (p.lambda_e + 2.0 * p.mu_e) * e0.e22;
        return finish();
    }

    const FieldEvaluator f{p, model, load};
    const KinematicDerivs kd(f);
    auto d = [&](int w, int n1, int n2) { return kd.d(w, x, n1, n2, h); };
    const auto k0 = f(x);

    switch (model) {
        case ModelKind::RelaxedMicromorphic:
        case ModelKind::PureRelaxed:
        case ModelKind::ZeroPoissonRelaxed: {
            const double le = p.lambda_e, mue = p.mu_e, muc = p.mu_c;
            const double lm = p.lambda_m, mum = p.mu_m;
            eq.resize(6);
            eq[0] += (le + 2.0 * mue) * d(U1, 2, 0);
            eq[0] += -(le + 2.0 * mue) * d(P11, 1, 0);
            eq[0] += le * d(U2, 1, 1);
            eq[0] += -le * d(P22, 1, 0);
            eq[0] += muc * d(U1, 0, 2);
            eq[0] += -muc * d(U2, 1, 1);
            eq[0] += -muc * d(P12, 0, 1);
            eq[0] += muc * d(P21, 0, 1);
            eq[0] += mue * d(U1, 0, 2);
            eq[0] += mue * d(U2, 1, 1);
            eq[0] += -mue * d(P12, 0, 1);
            eq[0] += -mue * d(P21, 0, 1);

            eq[1] += (le + 2.0 * mue) * d(U2, 0, 2);
            eq[1] += -(le + 2.0 * mue) * d(P22, 0, 1);
            eq[1] += le * d(U1, 1, 1);
            eq[1] += -le * d(P11, 0, 1);
            eq[1] += muc * d(U2, 2, 0);
            eq[1] += -muc * d(U1, 1, 1);
            eq[1] += -muc * d(P21, 1, 0);
            eq[1] += muc * d(P12, 1, 0);
            eq[1] += mue * d(U2, 2, 0);
            eq[1] += mue * d(U1, 1, 1);
            eq[1] += -mue * d(P21, 1, 0);
            eq[1] += -mue * d(P12, 1, 0);

            eq[2] += c * d(P11, 0, 2);
            eq[2] += -c * d(P12, 1, 1);
            eq[2] += -(le + lm + 2.0 * (mue + mum)) * k0.P11;
            eq[2] += -(le + lm) * k0.P22;
            eq[2] += (le + 2.0 * mue) * d(U1, 1, 0);
            eq[2] += le * d(U2, 0, 1);

            eq[3] += -c * d(P11, 1, 1);
            eq[3] += c * d(P12, 2, 0);
            eq[3] += -(muc + mue + mum) * k0.P12;
            eq[3] += (muc - mue - mum) * k0.P21;
            eq[3] += (muc + mue) * d(U1, 0, 1);
            eq[3] += (mue - muc) * d(U2, 1, 0);

            eq[4] += c * d(P21, 0, 2);
            eq[4] += -c * d(P22, 1, 1);
            eq[4] += (muc - mue - mum) * k0.P12;
            eq[4] += -(muc + mue + mum) * k0.P21;
            eq[4] += (mue - muc) * d(U1, 0, 1);
            eq[4] += (muc + mue) * d(U2, 1, 0);

            eq[5] += -c * d(P21, 1, 1);
            eq[5] += c * d(P22, 2, 0);
            eq[5] += -(le + lm + 2.0 * (mue + mum)) * k0.P22;
            eq[5] += -(le + lm) * k0.P11;
            eq[5] += (le + 2.0 * mue) * d(U2, 0, 1);
            eq[5] += le * d(U1, 1, 0);
            return finish();
        }
        case ModelKind::MicroStretch: {
            // reduced system in (u, A12 = P12, omega = P11); the elastic
            // shear modulus of the limit model is mu_M
            const double ke = p.kappa_e, muM = p.mu_M, muc = p.mu_c;
            eq.resize(4);
            eq[0] += -2.0 * muc * d(P12, 0, 1);
            eq[0] += (ke + muM) * d(U1, 2, 0);
            eq[0] += ke * d(U2, 1, 1);
            eq[0] += -2.0 * ke * d(P11, 1, 0);
            eq[0] += (muc + muM) * d(U1, 0, 2);
            eq[0] += -muc * d(U2, 1, 1);

            eq[1] += 2.0 * muc * d(P12, 1, 0);
            eq[1] += (ke - muc) * d(U1, 1, 1);
            eq[1] += (ke + muM) * d(U2, 0, 2);
            eq[1] += -2.0 * ke * d(P11, 0, 1);
            eq[1] += (muc + muM) * d(U2, 2, 0);

            eq[2] += 0.5 * c * d(P12, 2, 0);
            eq[2] += 0.5 * c * d(P12, 0, 2);
            eq[2] += -2.0 * muc * k0.P12;
            eq[2] += muc * d(U1, 0, 1);
            eq[2] += -muc * d(U2, 1, 0);

            eq[3] += 0.5 * c * d(P11, 2, 0);
            eq[3] += 0.5 * c * d(P11, 0, 2);
            eq[3] += -2.0 * (p.kappa_e + p.kappa_m) * k0.P11;
            eq[3] += p.kappa_e * d(U1, 1, 0);
            eq[3] += p.kappa_e * d(U2, 0, 1);
            return finish();
        }
        case ModelKind::Micropolar: {
            const double mu = p.mu_M, la = p.lambda_M, muc = p.mu_c;
            eq.resize(3);
            eq[0] += -2.0 * muc * d(P12, 0, 1);
            eq[0] += (la - muc + mu) * d(U2, 1, 1);
            eq[0] += (la + 2.0 * mu) * d(U1, 2, 0);
            eq[0] += (muc + mu) * d(U1, 0, 2);

            eq[1] += 2.0 * muc * d(P12, 1, 0);
            eq[1] += (la - muc + mu) * d(U1, 1, 1);
            eq[1] += (la + 2.0 * mu) * d(U2, 0, 2);
            eq[1] += (muc + mu) * d(U2, 2, 0);

            eq[2] += 0.5 * c * d(P12, 2, 0);
            eq[2] += 0.5 * c * d(P12, 0, 2);
            eq[2] += -2.0 * muc * k0.P12;
            eq[2] += muc * d(U1, 0, 1);
            eq[2] += -muc * d(U2, 1, 0);
            return finish();
        }
        case ModelKind::CoupleStress: {
            // displacement equations with the reactive skew stress written
            // through the micro-rotation theta3 = -P12 (which coincides with
            // the continuum rotation in this model; the coincidence is the
            // third equation), keeping the FD order at three
            const double mu = p.mu_M, la = p.lambda_M;
            eq.resize(3);
            eq[0] += (la + 2.0 * mu) * d(U1, 2, 0);
            eq[0] += (la + mu) * d(U2, 1, 1);
            eq[0] += mu * d(U1, 0, 2);
            eq[0] += -0.5 * c * d(P12, 2, 1);
            eq[0] += -0.5 * c * d(P12, 0, 3);

            eq[1] += (la + mu) * d(U1, 1, 1);
            eq[1] += (la + 2.0 * mu) * d(U2, 0, 2);
            eq[1] += mu * d(U2, 2, 0);
            eq[1] += 0.5 * c * d(P12, 3, 0);
            eq[1] += 0.5 * c * d(P12, 1, 2);

            eq[2] += -k0.P12;
            eq[2] += -0.5 * d(U2, 1, 0);
            eq[2] += 0.5 * d(U1, 0, 1);
            return finish();
        }
        case ModelKind::ClassicalMacro: {
            const double mu = p.mu_M, la = p.lambda_M;
            eq.resize(2);
            eq[0] += (la + mu) * d(U2, 1, 1);
            eq[0] += (la + 2.0 * mu) * d(U1, 2, 0);
            eq[0] += mu * d(U1, 0, 2);
            eq[1] += (la + mu) * d(U1, 1, 1);
            eq[1] += (la + 2.0 * mu) * d(U2, 0, 2);
            eq[1] += mu * d(U2, 2, 0);
            return finish();
        }
        case ModelKind::ClassicalMicro: {
            // sigma-divergence (force only; for the couple u and P coincide
            // with a gradient field and sigma vanishes identically), plus the
            // micro-stress divergence in both cases
            const double le = p.lambda_e, mue = p.mu_e, muc = p.mu_c;
            const double lm = p.lambda_m, mum = p.mu_m;
            if (load == LoadKind::Force) {
                eq.resize(4);
                eq[0] += (le + 2.0 * mue) * d(U1, 2, 0);
                eq[0] += -(le + 2.0 * mue) * d(P11, 1, 0);
                eq[0] += le * d(U2, 1, 1);
                eq[0] += -le * d(P22, 1, 0);
                eq[0] += (muc + mue) * d(U1, 0, 2);
                eq[0] += (mue - muc) * d(U2, 1, 1);
                eq[0] += -(muc + mue) * d(P12, 0, 1);
                eq[0] += (muc - mue) * d(P21, 0, 1);
                eq[1] += (le + 2.0 * mue) * d(U2, 0, 2);
                eq[1] += -(le + 2.0 * mue) * d(P22, 0, 1);
                eq[1] += le * d(U1, 1, 1);
                eq[1] += -le * d(P11, 0, 1);
                eq[1] += (muc + mue) * d(U2, 2, 0);
                eq[1] += (mue - muc) * d(U1, 1, 1);
                eq[1] += -(muc + mue) * d(P21, 1, 0);
                eq[1] += (muc - mue) * d(P12, 1, 0);
            } else {
                eq.resize(2);
            }
            auto& m1 = eq[eq.size() - 2];
            auto& m2 = eq[eq.size() - 1];
            m1 += 2.0 * mum * d(P11, 1, 0);
            m1 += mum * d(P12, 0, 1);
            m1 += mum * d(P21, 0, 1);
            m1 += lm * d(P11, 1, 0);
            m1 += lm * d(P22, 1, 0);
            m2 += mum * d(P12, 1, 0);
            m2 += mum * d(P21, 1, 0);
            m2 += 2.0 * mum * d(P22, 0, 1);
            m2 += lm * d(P11, 0, 1);
            m2 += lm * d(P22, 0, 1);
            return finish();
        }
        default:
            throw std::invalid_argument("pde_residual: unsupported model");
    }
}

}  // namespace detail

inline ResidualReport pde_residual(const MaterialParams& p, ModelKind model, LoadKind load,
                                   const FieldPoint& x, double h) {
    if (!(x.r() > 10.0 * h))
        throw std::invalid_argument("pde_residual: step too large relative to r");
    const auto coarse = detail::residual_once(p, model, load, x, h);
    const auto fine = detail::residual_once(p, model, load, x, 0.5 * h);

    ResidualReport rep;
    rep.equation_residuals = fine.first;
    rep.equation_scales = fine.second;
    rep.step = 0.5 * h;
    rep.point = x;
    double nc = 0.0, nf = 0.0;
    for (size_t i = 0; i < fine.first.size(); ++i) {
        nc = std::max(nc, std::abs(coarse.first[i]) / coarse.second[i]);
        nf = std::max(nf, std::abs(fine.first[i]) / fine.second[i]);
    }
    rep.order_estimate = (nf > 0.0 && nc > 0.0) ? std::log2(nc / nf) : 4.0;
    return rep;
}

struct BalanceReport {
    double radius = 0.0;
    std::array<double, 2> force_resultant{};
    double moment_resultant = 0.0;
    int quadrature_nodes = 0;
};

namespace detail {

struct TractionState {
    double t1, t2;    // sigma . n
    double mflux;     // m13 n1 + m23 n2
};

inline TractionState traction_at(const MaterialParams& p, ModelKind model, LoadKind load,
                                 const FieldPoint& x, const std::array<double, 2>& n) {
    const FieldEvaluator f{p, model, load};
    const double r = x.r();
    const double h = 1e-3 * r;

    auto generic = [&](double mue, double le, double muc, bool with_P, bool with_m) {
        const auto k = f(x);
        const auto Du = gradient_u(f, x, h);
        const Mat2 P = with_P ? micro_distortion(k) : Mat2{};
        const double e11 = Du.m11 - P.m11, e12 = Du.m12 - P.m12;
        const double e21 = Du.m21 - P.m21, e22 = Du.m22 - P.m22;
        Mat2 sig;
        sig.m11 = (le + 2.0 * mue) * e11 + le * e22;
        sig.m22 = (le + 2.0 * mue) * e22 + le * e11;
        sig.m12 = (mue + muc) * e12 + (mue - muc) * e21;
        sig.m21 = (mue + muc) * e21 + (mue - muc) * e12;
        TractionState t;
        t.t1 = sig.m11 * n[0] + sig.m12 * n[1];
        t.t2 = sig.m21 * n[0] + sig.m22 * n[1];
        if (with_m) {
            const auto cr = curl_p(f, x, h);
            t.mflux = -p.curvature() * (cr[0] * n[0] + cr[1] * n[1]);
        } else {
            t.mflux = 0.0;
        }
        return t;
    };

    switch (model) {
        case ModelKind::RelaxedMicromorphic:
        case ModelKind::PureRelaxed:
        case ModelKind::ZeroPoissonRelaxed:
            return generic(p.mu_e, p.lambda_e, p.mu_c, true, true);
        case ModelKind::MicroStretch:
            return generic(p.mu_M, p.kappa_e - p.mu_M, p.mu_c, true, true);
        case ModelKind::Micropolar:
            return generic(p.mu_M, p.lambda_M, p.mu_c, true, true);
        case ModelKind::CoupleStress: {
            // symmetric part with macro moduli; the skew part is the
            // reactive stress tau = (c/2) laplacian(P12)
            const auto Du = gradient_u(f, x, h);
            auto p12 = [&f](FieldPoint y) { return f(y).P12; };
            const double tau = 0.5 * p.curvature()
                * (fd::partial(p12, x, 2, 0, h) + fd::partial(p12, x, 0, 2, h));
            Mat2 sig;
            const double la = p.lambda_M, mu = p.mu_M;
            sig.m11 = (la + 2.0 * mu) * Du.m11 + la * Du.m22;
            sig.m22 = (la + 2.0 * mu) * Du.m22 + la * Du.m11;
            const double sym = mu * (Du.m12 + Du.m21);
            sig.m12 = sym - tau;
            sig.m21 = sym + tau;
            TractionState t;
            t.t1 = sig.m11 * n[0] + sig.m12 * n[1];
            t.t2 = sig.m21 * n[0] + sig.m22 * n[1];
            const auto cr = curl_p(f, x, h);
            t.mflux = -p.curvature() * (cr[0] * n[0] + cr[1] * n[1]);
            return t;
        }
        case ModelKind::ClassicalMacro:
            return generic(p.mu_M, p.lambda_M, 0.0, false, false);
        case ModelKind::ClassicalMicro:
            if (load == LoadKind::Force)
                return generic(p.mu_e, p.lambda_e, p.mu_c, true, false);
            // couple load: the moment flows through the micro stress
            return generic(p.mu_m, p.lambda_m, 0.0, false, false);
        default:
            throw std::invalid_argument("flux_balance: unsupported model");
    }
}

}  // namespace detail

inline BalanceReport flux_balance(const MaterialParams& p, ModelKind model, LoadKind load,
                                  double R, int nodes) {
    if (!(R > 0.0)) throw std::invalid_argument("flux_balance: R must be positive");
    BalanceReport rep;
    rep.radius = R;
    rep.quadrature_nodes = nodes;
    double f1 = 0.0, f2 = 0.0, mom = 0.0;
    for (int i = 0; i < nodes; ++i) {
        const double ang = 2.0 * pi * i / nodes;
        const std::array<double, 2> n{std::cos(ang), std::sin(ang)};
        const FieldPoint x{R * n[0], R * n[1]};
        const auto t = detail::traction_at(p, model, load, x, n);
        f1 += t.t1;
        f2 += t.t2;
        mom += t.mflux - (x.x1 * t.t2 - x.x2 * t.t1);
    }
    const double ds = 2.0 * pi * R / nodes;
    rep.force_resultant = {f1 * ds, f2 * ds};
    rep.moment_resultant = mom * ds;
    return rep;
}

enum class SingularityKind { Power, Logarithmic };

struct SingularityFit {
    SingularityKind kind;
    double exponent;      // meaningful for Power
    double slope;         // raw log-log slope
};

inline SingularityFit singularity_order(const std::function<double(double)>& sampler,
                                        double r_lo, double r_hi, int n = 24) {
    if (!(r_hi > r_lo * 100.0 - 1e-300))
        throw std::invalid_argument("singularity_order: range must span >= 2 decades");
    std::vector<double> lr, lf, vals, rs;
    for (int i = 0; i < n; ++i) {
        const double r = r_lo * std::pow(r_hi / r_lo, double(i) / (n - 1));
        const double v = sampler(r);
        if (v == 0.0) throw std::domain_error("singularity_order: field vanishes along the ray");
        rs.push_back(r);
        vals.push_back(v);
        lr.push_back(std::log(r));
        lf.push_back(std::log(std::abs(v)));
    }
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (int i = 0; i < n; ++i) {
        sx += lr[i];
        sy += lf[i];
        sxx += lr[i] * lr[i];
        sxy += lr[i] * lf[i];
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);

    SingularityFit fit{};
    fit.slope = slope;
    if (std::abs(slope) < 0.35) {
        // logarithmic if |f| / |ln r| is nearly constant; bounded fields give
        // a ratio drifting to zero instead
        double cmin = 1e300, cmax = 0.0;
        for (int i = 0; i < n; ++i) {
            const double ratio = std::abs(vals[i]) / std::abs(std::log(rs[i]));
            cmin = std::min(cmin, ratio);
            cmax = std::max(cmax, ratio);
        }
        if (cmax <= 2.0 * cmin) {
            fit.kind = SingularityKind::Logarithmic;
            fit.exponent = 0.0;
            return fit;
        }
    }
    fit.kind = SingularityKind::Power;
    fit.exponent = slope;
    return fit;
}

// Max relative deviation between the closed-form transformed fields and the
// direct linear solve over random admissible wavevector draws.
inline double fourier_consistency(const MaterialParams& p, LoadCase load, int samples,
                                  unsigned seed = 12345) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double mag = std::pow(10.0, -2.0 + 4.0 * u(rng));
        const double ang = 2.0 * pi * u(rng);
        const double x1 = mag * std::cos(ang), x2 = mag * std::sin(ang);
        const auto solved = solve(p, x1, x2, load).u_hat;
        const auto closed = load == LoadCase::Force ? transformed_force_fields(p, x1, x2)
                                                    : transformed_couple_fields(p, x1, x2);
        double num = 0.0, den = 0.0;
        for (int j = 0; j < 6; ++j) {
            num = std::max(num, std::abs(closed[j] - solved[j]));
            den = std::max(den, std::abs(solved[j]));
        }
        worst = std::max(worst, num / den);
    }
    return worst;
}

}  // namespace rmg
