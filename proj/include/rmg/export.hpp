// Command layer behind the CLI: field grids and line profiles as CSV,
// the derived-parameter table, and the verification runner with its JSON
// report. CSV output is deterministic: 17 significant digits, comma
// separated, LF line endings, rows in row-major order.

#pragma once

#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "rmg/constitutive.hpp"
#include "rmg/gauge.hpp"
#include "rmg/limit_tree.hpp"
#include "rmg/material.hpp"
#include "rmg/verification.hpp"

namespace rmg {

enum class NormalizeBy { Ell2, Lc, None };

struct GridSpec {
    double x_min, x_max, y_min, y_max;
    int nx = 2, ny = 2;
    NormalizeBy normalize_by = NormalizeBy::None;
};

enum class ProfileAxis { X1Positive, X2Positive, Radial };

enum class Quantity {
    U1, U2, NormU, Theta3,
    P11, P12, P21, P22,
    E12, E21,
    Sigma11, Sigma12, Sigma21, Sigma22,
    M13, M23,
};

struct ProfileSpec {
    ProfileAxis axis = ProfileAxis::X1Positive;
    std::vector<double> r_values;  // positive, sorted; in units of the scale
    Quantity quantity = Quantity::U2;
    NormalizeBy normalize_by = NormalizeBy::Ell2;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string num17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

inline double length_scale(const MaterialParams& p, NormalizeBy n) {
    switch (n) {
        case NormalizeBy::Ell2:
            if (std::isinf(p.ell_2))
                throw UsageError("ell_2 is infinite (mu_c = 0); normalize by lc or none");
            return p.ell_2;
        case NormalizeBy::Lc:
            return p.L_c;
        default:
            return 1.0;
    }
}

// dimensionless field factors for unit loads; identity when not normalizing
struct FieldScales {
    double u = 1.0, theta = 1.0, P = 1.0, sigma = 1.0, m = 1.0;
};

inline FieldScales field_scales(const MaterialParams& p, LoadKind load, NormalizeBy n) {
    FieldScales s;
    if (n == NormalizeBy::None) return s;
    const double ell = length_scale(p, n);
    if (load == LoadKind::Force) {
        s.u = p.mu_M;
        s.theta = p.mu_M * ell;
        s.P = p.mu_M * ell;
        s.sigma = ell;
        s.m = 1.0;
    } else {
        s.u = p.mu_M * ell;
        s.theta = p.mu_M * ell * ell;
        s.P = p.mu_M * ell * ell;
        s.sigma = ell * ell;
        s.m = ell;
    }
    return s;
}

inline void require_eval_admissible(const MaterialParams& p) {
    if (!is_admissible(p))
        throw std::invalid_argument("parameters are not admissible");
}

}  // namespace detail

// Field grid as CSV: x1, x2, u1, u2, P11, P12, P21, P22, theta3. Grid points
// at the origin are emitted as NaN rows to keep the grid rectangular.
inline std::string cmd_eval(const MaterialParams& p, ModelKind model, LoadKind load,
                            const GridSpec& grid, int threads = 1) {
    detail::require_eval_admissible(p);
    if (grid.nx < 2 || grid.ny < 2) throw UsageError("grid needs nx, ny >= 2");
    if (!(grid.x_max > grid.x_min) || !(grid.y_max > grid.y_min))
        throw UsageError("grid bounds must be ordered");
    const double ell = detail::length_scale(p, grid.normalize_by);
    const auto fs = detail::field_scales(p, load, grid.normalize_by);
    const FieldEvaluator f{p, model, load};

    std::vector<std::string> rows(static_cast<size_t>(grid.nx) * grid.ny);
    auto worker = [&](int begin, int step) {
        for (int j = begin; j < grid.ny; j += step) {
            const double y = grid.y_min + (grid.y_max - grid.y_min) * j / (grid.ny - 1);
            for (int i = 0; i < grid.nx; ++i) {
                const double x = grid.x_min + (grid.x_max - grid.x_min) * i / (grid.nx - 1);
                std::string& row = rows[static_cast<size_t>(j) * grid.nx + i];
                const FieldPoint pt{x, y};
                std::ostringstream os;
                os << detail::num17(x / ell) << ',' << detail::num17(y / ell);
                if (pt.r() < 1e-300) {
                    const double nan = std::numeric_limits<double>::quiet_NaN();
                    for (int k = 0; k < 7; ++k) os << ',' << detail::num17(nan);
                } else {
                    const auto kin = f(pt);
                    os << ',' << detail::num17(kin.u1 * fs.u)
                       << ',' << detail::num17(kin.u2 * fs.u)
                       << ',' << detail::num17(kin.P11 * fs.P)
                       << ',' << detail::num17(kin.P12 * fs.P)
                       << ',' << detail::num17(kin.P21 * fs.P)
                       << ',' << detail::num17(kin.P22 * fs.P)
                       << ',' << detail::num17(kin.theta3 * fs.theta);
                }
                row = os.str();
            }
        }
    };
    if (threads <= 1) {
        worker(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t, threads);
        for (auto& th : pool) th.join();
    }

    std::string out = "x1,x2,u1,u2,P11,P12,P21,P22,theta3\n";
    for (const auto& row : rows) {
        out += row;
        out += '\n';
    }
    return out;
}

namespace detail {

inline double profile_value(const MaterialParams& p, ModelKind model, LoadKind load,
                            Quantity q, const FieldPoint& x, const FieldScales& fs) {
    if (model == ModelKind::GaugeDislocation) {
        if (load != LoadKind::Couple)
            throw UsageError("gauge dislocation model is couple-load only");
        const auto e = eval_gauge_couple(p, x);
        switch (q) {
            case Quantity::E12: return e.e12 * fs.P;
            case Quantity::E21: return e.e21 * fs.P;
            default:
                throw UsageError("gauge dislocation profiles expose e12/e21 only");
        }
    }
    const FieldEvaluator f{p, model, load};
    switch (q) {
        case Quantity::U1: return f(x).u1 * fs.u;
        case Quantity::U2: return f(x).u2 * fs.u;
        case Quantity::NormU: {
            const auto k = f(x);
            return std::hypot(k.u1, k.u2) * fs.u;
        }
        case Quantity::Theta3: return f(x).theta3 * fs.theta;
        case Quantity::P11: return f(x).P11 * fs.P;
        case Quantity::P12: return f(x).P12 * fs.P;
        case Quantity::P21: return f(x).P21 * fs.P;
        case Quantity::P22: return f(x).P22 * fs.P;
        case Quantity::E12: {
            const auto Du = gradient_u(f, x);
            return (Du.m12 - f(x).P12) * fs.P;
        }
        case Quantity::E21: {
            const auto Du = gradient_u(f, x);
            return (Du.m21 - f(x).P21) * fs.P;
        }
        case Quantity::Sigma11: return stresses_at(f, x).sigma.m11 * fs.sigma;
        case Quantity::Sigma12: return stresses_at(f, x).sigma.m12 * fs.sigma;
        case Quantity::Sigma21: return stresses_at(f, x).sigma.m21 * fs.sigma;
        case Quantity::Sigma22: return stresses_at(f, x).sigma.m22 * fs.sigma;
        case Quantity::M13: return stresses_at(f, x).m13 * fs.m;
        case Quantity::M23: return stresses_at(f, x).m23 * fs.m;
    }
    throw std::logic_error("profile_value: unknown quantity");
}

inline const char* quantity_name(Quantity q) {
    switch (q) {
        case Quantity::U1: return "u1";
        case Quantity::U2: return "u2";
        case Quantity::NormU: return "norm_u";
        case Quantity::Theta3: return "theta3";
        case Quantity::P11: return "P11";
        case Quantity::P12: return "P12";
        case Quantity::P21: return "P21";
        case Quantity::P22: return "P22";
        case Quantity::E12: return "e12";
        case Quantity::E21: return "e21";
        case Quantity::Sigma11: return "sigma11";
        case Quantity::Sigma12: return "sigma12";
        case Quantity::Sigma21: return "sigma21";
        case Quantity::Sigma22: return "sigma22";
        case Quantity::M13: return "m13";
        case Quantity::M23: return "m23";
    }
    return "?";
}

}  // namespace detail

// Line profile along an axis or ray: one column per model, abscissa in units
// of the normalization length.
inline std::string cmd_profile(const MaterialParams& p, const std::vector<ModelKind>& models,
                               LoadKind load, const ProfileSpec& prof) {
    detail::require_eval_admissible(p);
    if (prof.r_values.empty()) throw UsageError("profile needs r values");
    for (size_t i = 0; i < prof.r_values.size(); ++i) {
        if (!(prof.r_values[i] > 0.0)) throw UsageError("profile r values must be positive");
        if (i > 0 && prof.r_values[i] <= prof.r_values[i - 1])
            throw UsageError("profile r values must be sorted increasing");
    }
    for (auto m : models)
        if (m == ModelKind::GaugeDislocation && load == LoadKind::Force)
            throw UsageError("gauge dislocation model is couple-load only");
    const double ell = detail::length_scale(p, prof.normalize_by);
    const auto fs = detail::field_scales(p, load, prof.normalize_by);

    std::string out = "r";
    for (auto m : models) {
        out += ',';
        out += to_string(m);
    }
    out += '\n';
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (double t : prof.r_values) {
        const double r = t * ell;
        FieldPoint x{r, 0.0};
        if (prof.axis == ProfileAxis::X2Positive) x = {0.0, r};
        if (prof.axis == ProfileAxis::Radial) x = {r * inv_sqrt2, r * inv_sqrt2};
        out += detail::num17(t);
        for (auto m : models) {
            out += ',';
            out += detail::num17(detail::profile_value(p, m, load, prof.quantity, x, fs));
        }
        out += '\n';
    }
    return out;
}

// Derived-parameter table plus the admissibility report, as plain text.
inline std::string cmd_params(const MaterialParams& p) {
    std::ostringstream os;
    auto line = [&os](const char* name, double v) {
        os << name << " = " << detail::num17(v) << '\n';
    };
    os << "# primary moduli\n";
    line("mu_e", p.mu_e);
    line("lambda_e", p.lambda_e);
    line("mu_m", p.mu_m);
    line("lambda_m", p.lambda_m);
    line("mu_c", p.mu_c);
    line("L_c", p.L_c);
    line("a1", p.a1);
    line("a2", p.a2);
    line("a3", p.a3);
    os << "# derived\n";
    line("kappa_e", p.kappa_e);
    line("kappa_m", p.kappa_m);
    line("a_tilde", p.a_tilde);
    line("mu_M", p.mu_M);
    line("kappa_M", p.kappa_M);
    line("lambda_M", p.lambda_M);
    line("beta", p.beta);
    line("zeta", p.zeta);
    line("epsilon", p.epsilon);
    line("ell_1", p.ell_1);
    if (std::isinf(p.ell_2))
        os << "ell_2 = inf\n";
    else
        line("ell_2", p.ell_2);
    const auto rep = check_admissible(p);
    os << "# positive definiteness: " << (rep.positive_definite ? "pass" : "FAIL") << '\n';
    for (const auto& c : rep.positive_definiteness)
        os << "  " << c.name << ": " << (c.ok ? "ok" : "violated") << '\n';
    os << "# ellipticity: " << (rep.elliptic ? "pass" : "FAIL") << '\n';
    for (const auto& c : rep.ellipticity)
        os << "  " << c.name << ": " << (c.ok ? "ok" : "violated") << '\n';
    return os.str();
}

struct VerifyOutcome {
    nlohmann::ordered_json report;
    bool all_passed;
};

// Named check suites over the given parameters. Each entry reports
// {check, params, result, tolerance, pass}.
inline VerifyOutcome cmd_verify(const MaterialParams& p, const std::string& suite) {
    detail::require_eval_admissible(p);
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    bool all = true;

    auto add = [&](const std::string& name, nlohmann::ordered_json params, double result,
                   double tol, bool pass) {
        nlohmann::ordered_json c;
        c["check"] = name;
        c["params"] = std::move(params);
        c["result"] = result;
        c["tolerance"] = tol;
        c["pass"] = pass;
        checks.push_back(c);
        all = all && pass;
    };
    auto want = [&suite](const char* name) { return suite == "all" || suite == name; };

    if (want("fourier")) {
        const double dev_f = fourier_consistency(p, LoadCase::Force, 100);
        add("fourier-consistency-force", {{"samples", 100}}, dev_f, 1e-9, dev_f <= 1e-9);
        const double dev_c = fourier_consistency(p, LoadCase::Couple, 100);
        add("fourier-consistency-couple", {{"samples", 100}}, dev_c, 1e-9, dev_c <= 1e-9);
    }

    if (want("determinant")) {
        std::mt19937_64 rng(321);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            const double mag = std::pow(10.0, -2.0 + 4.0 * u(rng));
            const double ang = 2.0 * pi * u(rng);
            const auto A = assemble(p, mag * std::cos(ang), mag * std::sin(ang));
            const auto num = determinant_numeric(A);
            const double closed = determinant_closed_form(p, mag);
            worst = std::max(worst, std::abs(num.real() - closed) / std::abs(closed));
        }
        add("determinant-identity", {{"samples", 100}}, worst, 1e-10, worst <= 1e-10);
    }

    if (want("residual")) {
        std::vector<std::pair<ModelKind, LoadKind>> pairs = {
            {ModelKind::RelaxedMicromorphic, LoadKind::Force},
            {ModelKind::RelaxedMicromorphic, LoadKind::Couple},
            {ModelKind::MicroStretch, LoadKind::Force},
            {ModelKind::Micropolar, LoadKind::Force},
            {ModelKind::CoupleStress, LoadKind::Force},
            {ModelKind::ClassicalMacro, LoadKind::Force},
            {ModelKind::ClassicalMicro, LoadKind::Force},
        };
        if (p.mu_c > 0.0) {
            pairs.push_back({ModelKind::MicroStretch, LoadKind::Couple});
            pairs.push_back({ModelKind::Micropolar, LoadKind::Couple});
            pairs.push_back({ModelKind::CoupleStress, LoadKind::Couple});
            pairs.push_back({ModelKind::GaugeDislocation, LoadKind::Couple});
        }
        const double scale = std::isinf(p.ell_2) ? p.ell_1 : p.ell_2;
        std::mt19937_64 rng(99);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        for (const auto& [model, load] : pairs) {
            double worst = 0.0, worst_order = 10.0;
            for (int i = 0; i < 3; ++i) {
                const double ang = 2.0 * pi * u(rng);
                const double rad = (0.7 + 1.3 * u(rng)) * scale;
                const FieldPoint x{rad * std::cos(ang), rad * std::sin(ang)};
                const auto rep = pde_residual(p, model, load, x, 0.012 * rad);
                worst = std::max(worst, rep.max_normalized());
                if (rep.max_normalized() > 1e-7)
                    worst_order = std::min(worst_order, rep.order_estimate);
            }
            const bool pass = worst <= 1e-6 && worst_order >= 2.0;
            add(std::string("pde-residual-") + to_string(model)
                    + (load == LoadKind::Force ? "-force" : "-couple"),
                {{"points", 3}}, worst, 1e-6, pass);
        }
    }

    if (want("flux")) {
        const double R = std::isinf(p.ell_2) ? p.ell_1 : p.ell_2;
        const auto rep = flux_balance(p, ModelKind::RelaxedMicromorphic, LoadKind::Force,
                                      R, 2048);
        const double err = std::max(std::abs(rep.force_resultant[0]),
                                    std::abs(rep.force_resultant[1] + 1.0));
        add("flux-force-resultant", {{"radius", R}, {"nodes", 2048}}, err, 1e-5,
            err <= 1e-5);
        const auto repc = flux_balance(p, ModelKind::RelaxedMicromorphic, LoadKind::Couple,
                                       R, 2048);
        const double merr = std::abs(std::abs(repc.moment_resultant) - 1.0);
        add("flux-couple-moment", {{"radius", R}, {"nodes", 2048}}, merr, 1e-4,
            merr <= 1e-4);
    }

    if (want("singularity")) {
        const double scale = std::isinf(p.ell_2) ? p.ell_1 : p.ell_2;
        const double cs = std::cos(0.5), sn = std::sin(0.5);
        const auto fit = singularity_order(
            [&](double r) {
                return eval_force(p, ModelKind::RelaxedMicromorphic, {r * cs, r * sn}).P21;
            },
            1e-4 * scale, 1.01e-2 * scale);
        const bool pass = fit.kind == SingularityKind::Power
                       && std::abs(fit.exponent + 1.0) <= 0.05;
        add("singularity-force-P21", {{"range_decades", 2}}, fit.exponent, 0.05, pass);
    }

    if (checks.empty()) throw UsageError("unknown verify suite: " + suite);

    nlohmann::ordered_json report;
    report["suite"] = suite;
    report["checks"] = checks;
    report["pass"] = all;
    return {report, all};
}

}  // namespace rmg
