// Modified Bessel functions of the second kind K0, K1, K2 and the radial
// kernels built from them. Small arguments (z <= 2) use the ascending power
// series with the log term; large arguments use Chebyshev fits of the
// exponentially scaled functions in the SLATEC layout (coefficients from
// the public-domain FNLIB tables). K2 is always formed through the
// recurrence K2 = K0 + (2/z) K1 so that the recurrence identity holds
// exactly in the arithmetic used.

#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>

namespace rmg {

// Euler-Mascheroni constant.
inline constexpr double euler_gamma = 0.5772156649015329;

inline constexpr double pi = 3.141592653589793238462643383279502884;

struct BesselOrder {
    int n;
    constexpr explicit BesselOrder(int order) : n(order) {
        if (order < 0 || order > 2)
            throw std::domain_error("BesselOrder: only orders 0,1,2 are supported");
    }
};

namespace detail {

inline double cheb_eval(double x, const double* cs, int n) {
    double b0 = 0.0, b1 = 0.0, b2 = 0.0;
    const double twox = 2.0 * x;
    for (int i = n - 1; i >= 0; --i) {
        b2 = b1;
        b1 = b0;
        b0 = twox * b1 - b2 + cs[i];
    }
    return 0.5 * (b0 - b2);
}

// FNLIB Chebyshev tables for exp(z)*K0(z), exp(z)*K1(z) on (2,8] and (8,inf).
inline constexpr double ak0cs[18] = {
    -0.07643947903327941424082978270088,
    -0.02235652605699819052023095550791,
    7.734181154693858235300618174047e-4,
    -4.281006688886099464452146435416e-5,
    3.08170017386297474365001482666e-6,
    -2.639367222009664974067448892723e-7,
    2.563713036403469206294088265742e-8,
    -2.742705549900201263857211915244e-9,
    3.169429658097499592080832873403e-10,
    -3.902353286962184141601065717962e-11,
    5.068040698188575402050092127286e-12,
    -6.889574741007870679541713557984e-13,
    9.744978497825917691388201336831e-14,
    -1.427332841884548505389855340122e-14,
    2.156412571021463039558062976527e-15,
    -3.34965425514956277218878205853e-16,
    5.335260216952911692145280392601e-17,
    -8.693669980890753807639622378837e-18,
};
inline constexpr double ak02cs[14] = {
    -0.01201869826307592239839346212452,
    -0.009174852691025695310652561075713,
    1.444550931775005821048843878057e-4,
    -4.013614175435709728671021077879e-6,
    1.567831810852310672590348990333e-7,
    -7.77011043852173771031579975446e-9,
    4.611182576179717882533130529586e-10,
    -3.158592997860565770526665803309e-11,
    2.435018039365041127835887814329e-12,
    -2.074331387398347897709853373506e-13,
    1.925787280589917084742736504693e-14,
    -1.927554805838956103600347182218e-15,
    2.062198029197818278285237869644e-16,
    -2.341685117579242402603640195071e-17,
};
inline constexpr double ak1cs[18] = {
    0.27443134069738829695257666227266,
    0.07571989953199367817089237814929,
    -0.0014410515564754061229853116175625,
    6.6501169551257479394251385477036e-5,
    -4.3699847095201407660580845089167e-6,
    3.5402774997630526799417139008534e-7,
    -3.3111637792932920208982688245704e-8,
    3.4459775819010534532311499770992e-9,
    -3.8989323474754271048981937492758e-10,
    4.7208197504658356400947449339005e-11,
    -6.047835662875356234537359156289e-12,
    8.1284948748658747888193837985663e-13,
    -1.1386945747147891428923915951042e-13,
    1.654035840846228232597294820509e-14,
    -2.4809025677068848221516010440533e-15,
    3.8292378907024096948429227299157e-16,
    -6.0647341040012418187768210377386e-17,
    9.8324256232648616038194004650666e-18,
};
inline constexpr double ak12cs[14] = {
    0.06379308343739001036600488534102,
    0.02832887813049720935835030284708,
    -2.475370673905250345414545566732e-4,
    5.771972451607248820470976625763e-6,
    -2.068939219536548302745533196552e-7,
    9.739983441381804180309213097887e-9,
    -5.585336140380624984688895511129e-10,
    3.732996634046185240221212854731e-11,
    -2.825051961023225445135065754928e-12,
    2.372019002484144173643496955486e-13,
    -2.176677387991753979268301667938e-14,
    2.157914161616032453939562689706e-15,
    -2.290196930718269275991551338154e-16,
    2.582885729823274961919939565226e-17,
};

inline double i0_series(double z) {
    const double q = 0.25 * z * z;
    double term = 1.0, sum = 1.0;
    for (int k = 1; k <= 40; ++k) {
        term *= q / (static_cast<double>(k) * k);
        sum += term;
        if (term < sum * 1e-18) break;
    }
    return sum;
}

inline double i1_series(double z) {
    const double q = 0.25 * z * z;
    double term = 0.5 * z, sum = term;
    for (int k = 1; k <= 40; ++k) {
        term *= q / (static_cast<double>(k) * (k + 1));
        sum += term;
        if (term < sum * 1e-18) break;
    }
    return sum;
}

// K0 for z <= 2 through the ascending series
//   K0 = -(ln(z/2) + gamma) I0 + sum_{k>=1} H_k (z^2/4)^k / (k!)^2.
inline double k0_small(double z) {
    const double q = 0.25 * z * z;
    double term = 1.0, hk = 0.0, sum = 0.0;
    for (int k = 1; k <= 40; ++k) {
        term *= q / (static_cast<double>(k) * k);
        hk += 1.0 / k;
        sum += term * hk;
        if (term * hk < 1e-20) break;
    }
    return -(std::log(0.5 * z) + euler_gamma) * i0_series(z) + sum;
}

// The difference 1/z - K1(z), evaluated without cancellation:
//   1/z - K1 = -ln(z/2) I1 + (z/4) sum_k (H_k + H_{k+1} - 2*gamma_adj) ...
// spelled out from the ascending series of K1.
inline double one_over_z_minus_k1(double z) {
    const double q = 0.25 * z * z;
    // sum_{k>=0} [psi(k+1) + psi(k+2)] q^k / (k! (k+1)!), psi(k+1) = -gamma + H_k
    double term = 1.0;  // q^k / (k! (k+1)!) at k = 0
    double hk = 0.0, hk1 = 1.0;
    double sum = term * (hk + hk1 - 2.0 * euler_gamma);
    for (int k = 1; k <= 40; ++k) {
        term *= q / (static_cast<double>(k) * (k + 1));
        hk += 1.0 / k;
        hk1 += 1.0 / (k + 1);
        const double c = hk + hk1 - 2.0 * euler_gamma;
        sum += term * c;
        if (std::abs(term * c) < 1e-20) break;
    }
    return -std::log(0.5 * z) * i1_series(z) + 0.25 * z * sum;
}

inline double k1_small(double z) {
    return 1.0 / z - one_over_z_minus_k1(z);
}

// Exponentially scaled K0e = exp(z) K0(z) for z > 2.
inline double k0e_large(double z) {
    if (z <= 8.0)
        return (cheb_eval((16.0 / z - 5.0) / 3.0, ak0cs, 18) + 1.25) / std::sqrt(z);
    return (cheb_eval(16.0 / z - 1.0, ak02cs, 14) + 1.25) / std::sqrt(z);
}

inline double k1e_large(double z) {
    if (z <= 8.0)
        return (cheb_eval((16.0 / z - 5.0) / 3.0, ak1cs, 18) + 1.25) / std::sqrt(z);
    return (cheb_eval(16.0 / z - 1.0, ak12cs, 14) + 1.25) / std::sqrt(z);
}

inline void check_bessel_arg(double z) {
    if (std::isnan(z)) throw std::domain_error("bessel_k: NaN argument");
    if (z <= 0.0) throw std::domain_error("bessel_k: argument must be positive");
}

}  // namespace detail

struct BesselEval {
    double value;
    bool underflow;
};

// K_n(z) for n in {0,1,2}, with an explicit underflow flag once exp(-z)
// drops below the smallest normal double.
inline BesselEval bessel_k_eval(BesselOrder n, double z) {
    detail::check_bessel_arg(z);
    double k0, k1;
    if (z <= 2.0) {
        k0 = detail::k0_small(z);
        k1 = detail::k1_small(z);
    } else {
        const double e = std::exp(-z);
        if (e == 0.0) return {0.0, true};
        k0 = e * detail::k0e_large(z);
        k1 = e * detail::k1e_large(z);
        if (k0 == 0.0) return {0.0, true};
    }
    switch (n.n) {
        case 0: return {k0, false};
        case 1: return {k1, false};
        default: return {k0 + 2.0 * k1 / z, false};
    }
}

inline double bessel_k(BesselOrder n, double z) { return bessel_k_eval(n, z).value; }

inline double bessel_k0(double z) { return bessel_k(BesselOrder(0), z); }
inline double bessel_k1(double z) { return bessel_k(BesselOrder(1), z); }
inline double bessel_k2(double z) { return bessel_k(BesselOrder(2), z); }

// Ordinary Bessel J0 through the integral representation
// (1/pi) int_0^pi cos(x sin t) dt with composite Gauss-Legendre panels.
// Only used by the Hankel-inversion check; accuracy ~1e-12 for moderate x.
inline double bessel_j0(double x) {
    if (std::isnan(x)) throw std::domain_error("bessel_j0: NaN argument");
    x = std::abs(x);
    // 10-point Gauss-Legendre nodes/weights on [-1,1] (positive half).
    static constexpr double gx[5] = {
        0.1488743389816312108848260, 0.4333953941292471907992659,
        0.6794095682990244062343274, 0.8650633666889845107320967,
        0.9739065285171717200779640};
    static constexpr double gw[5] = {
        0.2955242247147528701738930, 0.2692667193099963550912269,
        0.2190863625159820439955349, 0.1494513491505805931457763,
        0.0666713443086881375935688};
    const int panels = 4 + static_cast<int>(x / 2.0);
    const double h = pi / panels;
    double sum = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double c = (p + 0.5) * h;
        for (int i = 0; i < 5; ++i) {
            const double d = 0.5 * h * gx[i];
            sum += gw[i] * (std::cos(x * std::sin(c + d)) + std::cos(x * std::sin(c - d)));
        }
    }
    return sum * 0.5 * h / pi;
}

inline constexpr double infinite_length = std::numeric_limits<double>::infinity();

struct CompositeKernelArgs {
    double r;    // radial distance, > 0
    double ell;  // characteristic length, > 0; +inf drops the K-term
};

namespace detail {
inline void check_kernel_args(const CompositeKernelArgs& a) {
    if (!(a.r > 0.0)) throw std::domain_error("composite kernel: r must be positive");
    if (!(a.ell > 0.0)) throw std::domain_error("composite kernel: ell must be positive");
}
}  // namespace detail

// Phi(r) = 2 ell^2 / r^2 - K2(r/ell). The z -> 0 regime cancels the 2/z^2
// poles analytically: Phi = -K0(z) + (2/z)(1/z - K1(z)).
inline double capital_phi(const CompositeKernelArgs& a) {
    detail::check_kernel_args(a);
    if (std::isinf(a.ell))
        throw std::domain_error("capital_phi: diverges for ell = +infinity");
    const double z = a.r / a.ell;
    if (z <= 2.0)
        return -detail::k0_small(z) + (2.0 / z) * detail::one_over_z_minus_k1(z);
    return 2.0 / (z * z) - bessel_k2(z);
}

// Psi(r) = (1 - (r/ell) K1(r/ell)) / r; the mu_c -> 0 limit value is 0.
inline double capital_psi(const CompositeKernelArgs& a) {
    detail::check_kernel_args(a);
    if (std::isinf(a.ell)) return 0.0;
    const double z = a.r / a.ell;
    if (z <= 2.0) return z * detail::one_over_z_minus_k1(z) / a.r;
    return (1.0 - z * bessel_k1(z)) / a.r;
}

// d Phi / dr. Using K2' = -K1 - (2/z) K2 and K2 = K0 + (2/z) K1:
//   dPhi/dr = -4 ell^2/r^3 + K1/ell + (2/r) K2
// which for small z is rewritten as 1/r + (2/r) K0 - (1/z - K1)(1/ell + 4 ell/r^2)
// to remove the cancelling poles.
inline double capital_phi_derivative(const CompositeKernelArgs& a) {
    detail::check_kernel_args(a);
    if (std::isinf(a.ell))
        throw std::domain_error("capital_phi_derivative: diverges for ell = +infinity");
    const double z = a.r / a.ell;
    if (z <= 2.0) {
        const double d = detail::one_over_z_minus_k1(z);
        return 1.0 / a.r + (2.0 / a.r) * detail::k0_small(z)
             - d * (1.0 / a.ell + 4.0 * a.ell / (a.r * a.r));
    }
    return -4.0 * a.ell * a.ell / (a.r * a.r * a.r) + bessel_k1(z) / a.ell
         + (2.0 / a.r) * bessel_k2(z);
}

}  // namespace rmg
