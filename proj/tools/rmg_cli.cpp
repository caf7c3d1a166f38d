// rmg: plane-strain fundamental solutions of the relaxed micromorphic
// model family. Subcommands: eval, profile, verify, params, tree.
// stdout carries data, stderr carries diagnostics.
// Exit codes: 0 ok, 1 failed checks, 2 usage error, 3 inadmissible parameters.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rmg/export.hpp"
#include "rmg/material_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitChecksFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInadmissible = 3;

rmg::MaterialParams load_params(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw rmg::UsageError("cannot open parameter file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return rmg::params_from_json_text(ss.str());
}

rmg::ModelKind parse_model(const std::string& name) {
    using rmg::ModelKind;
    static const std::vector<std::pair<std::string, ModelKind>> table = {
        {"relaxed", ModelKind::RelaxedMicromorphic},
        {"zero-poisson", ModelKind::ZeroPoissonRelaxed},
        {"pure", ModelKind::PureRelaxed},
        {"micro-stretch", ModelKind::MicroStretch},
        {"micropolar", ModelKind::Micropolar},
        {"couple-stress", ModelKind::CoupleStress},
        {"classical-macro", ModelKind::ClassicalMacro},
        {"classical-micro", ModelKind::ClassicalMicro},
        {"gauge-dislocation", ModelKind::GaugeDislocation},
    };
    for (const auto& [n, m] : table)
        if (n == name) return m;
    throw rmg::UsageError("unknown model: " + name);
}

rmg::LoadKind parse_load(const std::string& name) {
    if (name == "force") return rmg::LoadKind::Force;
    if (name == "couple") return rmg::LoadKind::Couple;
    throw rmg::UsageError("unknown load: " + name);
}

rmg::NormalizeBy parse_normalize(const std::string& name) {
    if (name == "ell2") return rmg::NormalizeBy::Ell2;
    if (name == "lc") return rmg::NormalizeBy::Lc;
    if (name == "none") return rmg::NormalizeBy::None;
    throw rmg::UsageError("unknown normalization: " + name);
}

rmg::Quantity parse_quantity(const std::string& name) {
    using rmg::Quantity;
    static const std::vector<std::pair<std::string, Quantity>> table = {
        {"u1", Quantity::U1},           {"u2", Quantity::U2},
        {"norm_u", Quantity::NormU},    {"theta3", Quantity::Theta3},
        {"P11", Quantity::P11},         {"P12", Quantity::P12},
        {"P21", Quantity::P21},         {"P22", Quantity::P22},
        {"e12", Quantity::E12},         {"e21", Quantity::E21},
        {"sigma11", Quantity::Sigma11}, {"sigma12", Quantity::Sigma12},
        {"sigma21", Quantity::Sigma21}, {"sigma22", Quantity::Sigma22},
        {"m13", Quantity::M13},         {"m23", Quantity::M23},
    };
    for (const auto& [n, q] : table)
        if (n == name) return q;
    throw rmg::UsageError("unknown quantity: " + name);
}

void emit(const std::string& data, const std::string& out_path) {
    if (out_path.empty()) {
        std::fwrite(data.data(), 1, data.size(), stdout);
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw rmg::UsageError("cannot open output file: " + out_path);
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"plane-strain fundamental solutions of the relaxed micromorphic model family"};
    app.require_subcommand(1);

    std::string params_path, out_path, model_name = "relaxed", load_name = "force";
    std::string normalize_name = "ell2";
    int threads = 1;

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate fields on a grid (CSV)");
    double x_min = -2.0, x_max = 2.0, y_min = -2.0, y_max = 2.0;
    int nx = 41, ny = 41;
    eval->add_option("--params", params_path, "parameter JSON file")->required();
    eval->add_option("--model", model_name, "model kind");
    eval->add_option("--load", load_name, "force|couple");
    eval->add_option("--out", out_path, "output path (default stdout)");
    eval->add_option("--normalize", normalize_name, "ell2|lc|none");
    eval->add_option("--threads", threads, "grid rows evaluated in parallel");
    eval->add_option("--x-min", x_min);
    eval->add_option("--x-max", x_max);
    eval->add_option("--y-min", y_min);
    eval->add_option("--y-max", y_max);
    eval->add_option("--nx", nx);
    eval->add_option("--ny", ny);

    // profile
    auto* profile = app.add_subcommand("profile", "line profiles per model (CSV)");
    std::vector<std::string> model_list{"relaxed"};
    std::string quantity_name = "u2", axis_name = "x1";
    double r_min = 0.2, r_max = 2.0;
    int nr = 37;
    profile->add_option("--params", params_path, "parameter JSON file")->required();
    profile->add_option("--models", model_list, "model kinds")->delimiter(',');
    profile->add_option("--load", load_name, "force|couple");
    profile->add_option("--quantity", quantity_name, "field quantity");
    profile->add_option("--axis", axis_name, "x1|x2 (positive axis) or radial (45-degree ray)");
    profile->add_option("--r-min", r_min, "first abscissa (units of the scale)");
    profile->add_option("--r-max", r_max, "last abscissa");
    profile->add_option("--nr", nr, "sample count");
    profile->add_option("--out", out_path, "output path (default stdout)");
    profile->add_option("--normalize", normalize_name, "ell2|lc|none");
    profile->add_option("--threads", threads, "accepted for interface parity; profiles run sequentially");

    // verify
    auto* verify = app.add_subcommand("verify", "run verification suites (JSON report)");
    std::string suite = "all";
    verify->add_option("--params", params_path, "parameter JSON file")->required();
    verify->add_option("--suite", suite, "all|fourier|determinant|residual|flux|singularity");
    verify->add_option("--out", out_path, "output path (default stdout)");
    verify->add_option("--threads", threads, "accepted for interface parity");

    // params
    auto* params_cmd = app.add_subcommand("params", "derived scalars and admissibility");
    params_cmd->add_option("--params", params_path, "parameter JSON file")->required();
    params_cmd->add_option("--out", out_path, "output path (default stdout)");

    // tree
    auto* tree = app.add_subcommand("tree", "limit-model family map (JSON)");
    tree->add_option("--out", out_path, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (tree->parsed()) {
            emit(rmg::limit_tree_json().dump(2) + "\n", out_path);
            return kExitOk;
        }

        const auto p = load_params(params_path);

        if (params_cmd->parsed()) {
            emit(rmg::cmd_params(p), out_path);
            return kExitOk;
        }

        if (!rmg::is_admissible(p)) {
            std::cerr << "error: parameters are not admissible\n"
                      << rmg::cmd_params(p);
            return kExitInadmissible;
        }

        if (eval->parsed()) {
            rmg::GridSpec grid{x_min, x_max, y_min, y_max, nx, ny,
                               parse_normalize(normalize_name)};
            emit(rmg::cmd_eval(p, parse_model(model_name), parse_load(load_name), grid,
                               threads),
                 out_path);
            return kExitOk;
        }
        if (profile->parsed()) {
            rmg::ProfileSpec spec;
            if (axis_name == "x1")
                spec.axis = rmg::ProfileAxis::X1Positive;
            else if (axis_name == "x2")
                spec.axis = rmg::ProfileAxis::X2Positive;
            else if (axis_name == "radial")
                spec.axis = rmg::ProfileAxis::Radial;
            else
                throw rmg::UsageError("unknown axis: " + axis_name);
            spec.quantity = parse_quantity(quantity_name);
            spec.normalize_by = parse_normalize(normalize_name);
            if (nr < 2 || !(r_max > r_min) || !(r_min > 0.0))
                throw rmg::UsageError("profile needs 0 < r-min < r-max and nr >= 2");
            for (int i = 0; i < nr; ++i)
                spec.r_values.push_back(r_min + (r_max - r_min) * i / (nr - 1));
            std::vector<rmg::ModelKind> models;
            for (const auto& n : model_list) models.push_back(parse_model(n));
            emit(rmg::cmd_profile(p, models, parse_load(load_name), spec), out_path);
            return kExitOk;
        }
        if (verify->parsed()) {
            const auto outcome = rmg::cmd_verify(p, suite);
            emit(outcome.report.dump(2) + "\n", out_path);
            return outcome.all_passed ? kExitOk : kExitChecksFailed;
        }
    } catch (const rmg::UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const rmg::ParamFileError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        // admissibility and model/load contract violations
        std::cerr << "error: " << e.what() << '\n';
        return kExitInadmissible;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitChecksFailed;
    }
    return kExitUsage;
}
