// Plane-strain Fourier system of the relaxed micromorphic equilibrium
// equations: the symmetric 6x6 matrix A(xi) acting on
// u_hat = {u1, u2, P11, P12, P21, P22}, its closed-form determinant, a small
// complex LU solver, and the closed-form transformed fields for the
// concentrated force and couple. The couple right-hand side in the
// symmetric-matrix convention is {0,0,0,-1/2,+1/2,0}: rows 3..6 of A carry
// the micro-distortion equations negated, which flips the sign of the
// M-components relative to the raw equilibrium form. The linear-solve versus
// closed-form cross checks pin this convention down.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "rmg/bessel.hpp"
#include "rmg/material.hpp"

namespace rmg {

using cplx = std::complex<double>;
using Vec6 = std::array<cplx, 6>;
using Mat6 = std::array<cplx, 36>;

enum class LoadCase { Force, Couple };

struct FourierState {
    std::array<double, 2> xi{};
    double xi_norm = 0.0;
    Mat6 A{};
    Vec6 rhs{};
    Vec6 u_hat{};
};

struct TransformedKernels {
    double phi_1;
    double phi_2;
};

// phi_j(xi) = 1/xi^2 - ell_j^2 / (1 + ell_j^2 xi^2); the ell = +inf limit is 0.
inline double transformed_phi(double ell, double xi_norm) {
    const double s = xi_norm * xi_norm;
    if (std::isinf(ell)) return 0.0;
    const double l2 = ell * ell;
    return 1.0 / s - l2 / (1.0 + l2 * s);
}

inline TransformedKernels transformed_kernels(const MaterialParams& p, double xi_norm) {
    return {transformed_phi(p.ell_1, xi_norm), transformed_phi(p.ell_2, xi_norm)};
}

inline Mat6 assemble(const MaterialParams& p, double xi1, double xi2) {
    if (xi1 == 0.0 && xi2 == 0.0)
        throw std::domain_error("assemble: xi must be nonzero");
    const cplx I(0.0, 1.0);
    const double le = p.lambda_e, mue = p.mu_e, muc = p.mu_c;
    const double lm = p.lambda_m, mum = p.mu_m;
    const double c = p.curvature();  // a_tilde * mu_M * L_c^2
    const double x1 = xi1, x2 = xi2;
    const double x12 = x1 * x2;
    const double diagP = le + 2.0 * (mue + mum) + lm;

    Mat6 A{};
    auto at = [&A](int r, int col) -> cplx& { return A[r * 6 + col]; };

    at(0, 0) = -(x2 * x2 * (muc + mue)) - x1 * x1 * (le + 2.0 * mue);
    at(0, 1) = -(x12 * (le + mue - muc));
    at(0, 2) = I * x1 * (le + 2.0 * mue);
    at(0, 3) = I * x2 * (muc + mue);
    at(0, 4) = I * x2 * (mue - muc);
    at(0, 5) = I * x1 * le;

    at(1, 0) = at(0, 1);
    at(1, 1) = -(x1 * x1 * (muc + mue)) - x2 * x2 * (le + 2.0 * mue);
    at(1, 2) = I * x2 * le;
    at(1, 3) = I * x1 * (mue - muc);
    at(1, 4) = I * x1 * (muc + mue);
    at(1, 5) = I * x2 * (le + 2.0 * mue);

    at(2, 0) = at(0, 2);
    at(2, 1) = at(1, 2);
    at(2, 2) = c * x2 * x2 + diagP;
    at(2, 3) = -c * x12;
    at(2, 4) = 0.0;
    at(2, 5) = le + lm;

    at(3, 0) = at(0, 3);
    at(3, 1) = at(1, 3);
    at(3, 2) = at(2, 3);
    at(3, 3) = c * x1 * x1 + muc + mue + mum;
    at(3, 4) = mue + mum - muc;
    at(3, 5) = 0.0;

    at(4, 0) = at(0, 4);
    at(4, 1) = at(1, 4);
    at(4, 2) = at(2, 4);
    at(4, 3) = at(3, 4);
    at(4, 4) = c * x2 * x2 + muc + mue + mum;
    at(4, 5) = -c * x12;

    at(5, 0) = at(0, 5);
    at(5, 1) = at(1, 5);
    at(5, 2) = at(2, 5);
    at(5, 3) = at(3, 5);
    at(5, 4) = at(4, 5);
    at(5, 5) = c * x1 * x1 + diagP;
    return A;
}

inline Vec6 load_rhs(LoadCase load) {
    if (load == LoadCase::Force) return {0.0, -1.0, 0.0, 0.0, 0.0, 0.0};
    return {0.0, 0.0, 0.0, -0.5, 0.5, 0.0};
}

inline double determinant_closed_form(const MaterialParams& p, double xi_norm) {
    const double s = xi_norm * xi_norm;
    const double c = p.a_tilde * p.L_c * p.L_c;
    const double common = c * c * p.mu_M * p.mu_M * p.mu_m
        * (p.lambda_e + 2.0 * p.mu_e) * (p.lambda_m + 2.0 * p.mu_m);
    const double f1 = 1.0 / (p.ell_1 * p.ell_1) + s;
    if (p.mu_c > 0.0) {
        const double f2 = 1.0 / (p.ell_2 * p.ell_2) + s;
        return common * (p.mu_e + p.mu_c) * f1 * f2 * s * s;
    }
    return common * p.mu_e * f1 * s * s * s;
}

namespace detail {

struct Lu6 {
    Mat6 lu;
    std::array<int, 6> perm;
    int sign;
};

inline Lu6 lu_factor(const Mat6& A) {
    Lu6 f{A, {0, 1, 2, 3, 4, 5}, 1};
    auto& m = f.lu;
    for (int c = 0; c < 6; ++c) {
        int piv = c;
        double best = std::abs(m[c * 6 + c]);
        for (int r = c + 1; r < 6; ++r) {
            const double v = std::abs(m[r * 6 + c]);
            if (v > best) { best = v; piv = r; }
        }
        if (best == 0.0) throw std::runtime_error("lu_factor: singular matrix");
        if (piv != c) {
            for (int k = 0; k < 6; ++k) std::swap(m[c * 6 + k], m[piv * 6 + k]);
            std::swap(f.perm[c], f.perm[piv]);
            f.sign = -f.sign;
        }
        for (int r = c + 1; r < 6; ++r) {
            const cplx mult = m[r * 6 + c] / m[c * 6 + c];
            m[r * 6 + c] = mult;
            for (int k = c + 1; k < 6; ++k) m[r * 6 + k] -= mult * m[c * 6 + k];
        }
    }
    return f;
}

inline Vec6 lu_solve(const Lu6& f, const Vec6& b) {
    Vec6 x{};
    for (int r = 0; r < 6; ++r) x[r] = b[f.perm[r]];
    for (int r = 1; r < 6; ++r)
        for (int c = 0; c < r; ++c) x[r] -= f.lu[r * 6 + c] * x[c];
    for (int r = 5; r >= 0; --r) {
        for (int c = r + 1; c < 6; ++c) x[r] -= f.lu[r * 6 + c] * x[c];
        x[r] /= f.lu[r * 6 + r];
    }
    return x;
}

inline Vec6 mat_vec(const Mat6& A, const Vec6& x) {
    Vec6 y{};
    for (int r = 0; r < 6; ++r)
        for (int c = 0; c < 6; ++c) y[r] += A[r * 6 + c] * x[c];
    return y;
}

}  // namespace detail

inline cplx determinant_numeric(const Mat6& A) {
    const auto f = detail::lu_factor(A);
    cplx det(static_cast<double>(f.sign), 0.0);
    for (int i = 0; i < 6; ++i) det *= f.lu[i * 6 + i];
    return det;
}

// Direct linear solve with one step of iterative refinement.
inline FourierState solve(const MaterialParams& p, double xi1, double xi2,
                          LoadCase load) {
    FourierState st;
    st.xi = {xi1, xi2};
    st.xi_norm = std::hypot(xi1, xi2);
    st.A = assemble(p, xi1, xi2);
    st.rhs = load_rhs(load);
    const auto f = detail::lu_factor(st.A);
    Vec6 x = detail::lu_solve(f, st.rhs);
    Vec6 resid = detail::mat_vec(st.A, x);
    for (int i = 0; i < 6; ++i) resid[i] = st.rhs[i] - resid[i];
    const Vec6 corr = detail::lu_solve(f, resid);
    for (int i = 0; i < 6; ++i) x[i] += corr[i];
    st.u_hat = x;
    return st;
}

// Closed-form transformed Kelvin fields (unit force along x2).
inline Vec6 transformed_force_fields(const MaterialParams& p, double xi1, double xi2) {
    if (xi1 == 0.0 && xi2 == 0.0)
        throw std::domain_error("transformed_force_fields: xi must be nonzero");
    const cplx I(0.0, 1.0);
    const double s = xi1 * xi1 + xi2 * xi2;
    const double s2 = s * s;
    const auto [phi1, phi2] = transformed_kernels(p, std::sqrt(s));
    const double c = p.curvature();
    const double kM = p.kappa_M, mM = p.mu_M, kmm = p.kappa_m + p.mu_m;
    const double kMmM = kM + mM;

    Vec6 u{};
    u[0] = -kM / (mM * kMmM) * xi1 * xi2 / s2
         - 0.25 * c * (p.zeta / kMmM) * (p.zeta / kMmM) * xi1 * xi2 * phi1
         + c / (4.0 * p.mu_e * p.mu_e) * xi1 * xi2 * phi2;
    u[1] = 1.0 / (mM * s) - kM / (mM * kMmM) * xi2 * xi2 / s2
         - 0.25 * c * (p.zeta / kMmM) * (p.zeta / kMmM) * xi2 * xi2 * phi1
         - c / (4.0 * p.mu_e * p.mu_e) * xi1 * xi1 * phi2;
    u[2] = I * kM / (p.mu_m * kMmM) * xi1 * xi1 * xi2 / s2
         + I * p.zeta * xi2 * (p.epsilon * c * xi1 * xi1 + 2.0 * kmm) * phi1
               / (4.0 * kMmM * kmm);
    u[3] = I * kM / (p.mu_m * kMmM) * xi1 * xi2 * xi2 / s2
         + I * p.zeta * p.epsilon * c * xi1 * xi2 * xi2 * phi1 / (4.0 * kMmM * kmm)
         + I * xi1 * phi2 / (2.0 * p.mu_e);
    u[4] = -I * xi1 * (kMmM * xi1 * xi1 + mM * xi2 * xi2) / (p.mu_m * kMmM * s2)
         + I * p.zeta * p.epsilon * c * xi1 * xi2 * xi2 * phi1 / (4.0 * kMmM * kmm)
         - I * xi1 * phi2 / (2.0 * p.mu_e);
    u[5] = -I * kM / (p.mu_m * kMmM) * xi1 * xi1 * xi2 / s2
         - I * xi2 / (kmm * s)
         - I * p.zeta * xi2 * (p.epsilon * c * xi1 * xi1 + 2.0 * (p.kappa_m - p.mu_m)) * phi1
               / (4.0 * kMmM * kmm);
    return u;
}

// Closed-form transformed fields for the concentrated couple; the mu_c = 0
// case uses its dedicated display.
inline Vec6 transformed_couple_fields(const MaterialParams& p, double xi1, double xi2) {
    if (xi1 == 0.0 && xi2 == 0.0)
        throw std::domain_error("transformed_couple_fields: xi must be nonzero");
    const cplx I(0.0, 1.0);
    const double s = xi1 * xi1 + xi2 * xi2;
    const double c = p.curvature();

    Vec6 u{};
    if (p.mu_c == 0.0) {
        u[0] = -I * xi2 / (2.0 * p.mu_m * s);
        u[1] = I * xi1 / (2.0 * p.mu_m * s);
        u[2] = -xi1 * xi2 / (2.0 * p.mu_m * s);
        u[3] = -(2.0 * p.mu_m + c * xi2 * xi2) / (2.0 * p.mu_m * c * s);
        u[4] = (2.0 * p.mu_m + c * xi1 * xi1) / (2.0 * p.mu_m * c * s);
        u[5] = xi1 * xi2 / (2.0 * p.mu_m * s);
        return u;
    }
    const double q = 1.0 / (p.ell_2 * p.ell_2) + s;
    u[0] = -I * xi2 / (2.0 * p.mu_M * s) + I * xi2 / (2.0 * p.mu_e * q);
    u[1] = I * xi1 / (2.0 * p.mu_M * s) - I * xi1 / (2.0 * p.mu_e * q);
    u[2] = -xi1 * xi2 / (2.0 * p.mu_m * s);
    u[3] = -xi2 * xi2 / (2.0 * p.mu_m * s) - 1.0 / (c * q);
    u[4] = xi1 * xi1 / (2.0 * p.mu_m * s) + 1.0 / (c * q);
    u[5] = xi1 * xi2 / (2.0 * p.mu_m * s);
    return u;
}

struct HankelResult {
    double value;
    bool converged;
};

// (1/2pi) int_0^inf  xi J0(xi r) / (ell^-2 + xi^2)  dxi, the I3 inverse
// transform. Segments between J0 zero crossings are summed with Aitken
// acceleration of the alternating tail.
inline HankelResult hankel_invert_radial(double r, double ell) {
    if (!(r > 0.0) || !(ell > 0.0))
        throw std::domain_error("hankel_invert_radial: r and ell must be positive");
    auto integrand = [r, ell](double xi) {
        return xi * bessel_j0(xi * r) / (1.0 / (ell * ell) + xi * xi);
    };
    // 20-point Gauss-Legendre per segment
    static constexpr double gx[10] = {
        0.0765265211334973338, 0.2277858511416450780, 0.3737060887154195607,
        0.5108670019508270980, 0.6360536807265150255, 0.7463319064601507926,
        0.8391169718222188234, 0.9122344282513259059, 0.9639719272779137913,
        0.9931285991850949247};
    static constexpr double gw[10] = {
        0.1527533871307258506, 0.1491729864726037467, 0.1420961093183820513,
        0.1316886384491766269, 0.1181945319615184173, 0.1019301198172404350,
        0.0832767415767047487, 0.0626720483341090636, 0.0406014298003869413,
        0.0176140071391521183};
    auto seg = [&](double a, double b) {
        const double cen = 0.5 * (a + b), h = 0.5 * (b - a);
        double sum = 0.0;
        for (int i = 0; i < 10; ++i)
            sum += gw[i] * (integrand(cen + h * gx[i]) + integrand(cen - h * gx[i]));
        return sum * h;
    };
    // head: [0, first J0 zero / r]
    const double first_zero = 2.404825557695773 / r;
    double head = 0.0;
    const int head_panels = 8;
    for (int i = 0; i < head_panels; ++i)
        head += seg(first_zero * i / head_panels, first_zero * (i + 1) / head_panels);

    // oscillatory tail: half-period segments between J0 sign changes form an
    // alternating series; iterated averaging (Euler transform) of the partial
    // sums accelerates it to near machine precision.
    const double period = pi / r;
    constexpr int nseg = 48;
    std::array<double, nseg> s{};
    double run = 0.0;
    for (int k = 0; k < nseg; ++k) {
        const double a = first_zero + k * period;
        run += seg(a, a + period);
        s[k] = run;
    }
    int m = nseg;
    while (m > 2) {
        for (int k = 0; k + 1 < m; ++k) s[k] = 0.5 * (s[k] + s[k + 1]);
        --m;
    }
    const bool converged = std::abs(s[1] - s[0]) < 1e-9 * (1.0 + std::abs(head + s[0]));
    return {(head + 0.5 * (s[0] + s[1])) / (2.0 * pi), converged};
}

}  // namespace rmg
