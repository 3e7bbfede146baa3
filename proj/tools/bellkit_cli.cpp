// bellkit command line: scenario scans (fig1..fig4), Bell-factor
// optimization, and state import/export.
//
// Exit codes: 0 success, 2 usage/parse error, 3 state validation error,
// 4 numerical failure.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "bellkit/dynamics.hpp"
#include "bellkit/optimize.hpp"
#include "bellkit/scan.hpp"
#include "bellkit/state_io.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitValidation = 3;
constexpr int kExitNumerical = 4;

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
}

std::map<std::string, std::string> parse_params(const std::string& spec) {
    std::map<std::string, std::string> out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("--params", "expected k=v pairs: " + item);
        out[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return out;
}

double param_or(const std::map<std::string, std::string>& params, const std::string& key,
                double fallback) {
    const auto it = params.find(key);
    if (it == params.end()) return fallback;
    return std::stod(it->second);
}

bellkit::U2Variant parse_variant(const std::string& name) {
    if (name == "u2-x") return bellkit::U2Variant::sigma1x;
    if (name == "u2-y") return bellkit::U2Variant::sigma1y;
    throw CLI::ValidationError("--variant", "unknown variant: " + name);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bellkit: qudit states, CHSH Bell factors and coupled-spin dynamics"};
    app.require_subcommand(1);

    std::string out_path = "out.csv";
    std::string params_spec;
    std::string variant_name = "u2-x";
    std::string preset;
    std::uint64_t seed = 0;
    int steps = 101;

    // ---- fig1..fig4 ----
    CLI::App* fig1 = app.add_subcommand("fig1", "Bell factor / E_F / beta over the (alpha, gamma) grid");
    CLI::App* fig2 = app.add_subcommand("fig2", "X-state Bell factor over the imaginary-part plane");
    CLI::App* fig3 = app.add_subcommand("fig3", "beta surface and family-A Bell surfaces (CSV bundle)");
    CLI::App* fig4 = app.add_subcommand("fig4", "family-B Bell traces for the p1=1 and p2=1 states");
    for (CLI::App* cmd : {fig1, fig2, fig3, fig4}) {
        cmd->add_option("--out", out_path, "output CSV path (fig3/fig4: path prefix)");
        cmd->add_option("--steps", steps, "grid steps per axis")->check(CLI::Range(2, 100000));
        cmd->add_option("--seed", seed, "accepted for interface uniformity; scans are deterministic");
        cmd->add_option("--params", params_spec, "k=v overrides, comma separated");
    }
    fig3->add_option("--variant", variant_name, "family-A u2 reading: u2-x | u2-y");

    // ---- optimize ----
    CLI::App* optimize = app.add_subcommand("optimize", "maximize the Bell factor over a family");
    std::string family_name = "qubit-rotations";
    optimize->add_option("--family", family_name,
                         "qubit-rotations | family-a | family-b");
    optimize->add_option("--out", out_path, "output JSON path (default: stdout)");
    optimize->add_option("--seed", seed, "RNG seed");
    optimize->add_option("--params", params_spec,
                         "state=phi-plus|dephased|xstate-p1|psi2, theta1=, theta2=, tau=, "
                         "starts=, max-evals=");
    optimize->add_option("--preset", preset, "set1 | familyB-p1 | familyB-p2 (first start)");
    optimize->add_option("--variant", variant_name, "family-A u2 reading: u2-x | u2-y");
    std::string state_file;
    optimize->add_option("--state", state_file, "state JSON file (overrides state= preset)");

    // ---- state import/export ----
    CLI::App* state = app.add_subcommand("state", "density-matrix file import/export");
    state->require_subcommand(1);
    std::string in_path;
    std::string state_out;
    CLI::App* state_import = state->add_subcommand("import", "validate a state document");
    state_import->add_option("input", in_path, "state JSON file")->required();
    state_import->add_option("--out", state_out, "write the canonical form here");
    CLI::App* state_export = state->add_subcommand("export", "canonicalize a state document");
    state_export->add_option("input", in_path, "state JSON file")->required();
    state_export->add_option("--out", state_out, "output JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : kExitUsage;
    }

    try {
        const auto params = parse_params(params_spec);

        if (fig1->parsed()) {
            bellkit::scan::Fig1Config config;
            config.alpha.steps = steps;
            config.gamma.steps = steps;
            write_file(out_path, bellkit::scan::run_fig1(config));
        } else if (fig2->parsed()) {
            bellkit::scan::Fig2Config config;
            config.x.steps = steps;
            config.y.steps = steps;
            write_file(out_path, bellkit::scan::run_fig2(config));
        } else if (fig3->parsed()) {
            bellkit::scan::Fig3Config config;
            config.steps = steps;
            config.variant = parse_variant(variant_name);
            config.theta1 = param_or(params, "theta1", config.theta1);
            config.theta2 = param_or(params, "theta2", config.theta2);
            config.theta3 = param_or(params, "theta3", config.theta3);
            config.tau = param_or(params, "tau", config.tau);
            for (size_t i = 0; i < config.family_params.size(); ++i)
                config.family_params[i] =
                    param_or(params, "fa" + std::to_string(i + 1), config.family_params[i]);
            const bellkit::scan::Fig3Output bundle = bellkit::scan::run_fig3(config);
            write_file(out_path + "_beta_surface.csv", bundle.beta_surface);
            write_file(out_path + "_fb_surface.csv", bundle.fb_surface);
            write_file(out_path + "_theta_slices.csv", bundle.theta_slices);
            write_file(out_path + "_tau_pi_slice.csv", bundle.tau_pi_slice);
        } else if (fig4->parsed()) {
            bellkit::scan::Fig4Config config;
            config.steps = steps;
            config.theta1 = param_or(params, "theta1", config.theta1);
            const bellkit::scan::Fig4Output bundle = bellkit::scan::run_fig4(config);
            write_file(out_path + "_p1_tau.csv", bundle.p1_trace);
            write_file(out_path + "_p2_theta2.csv", bundle.p2_trace);
        } else if (optimize->parsed()) {
            const bellkit::U2Variant variant = parse_variant(variant_name);
            std::optional<bellkit::ObservableFamily> family;
            if (family_name == "qubit-rotations")
                family = bellkit::qubit_rotation_family();
            else if (family_name == "family-a")
                family = bellkit::qubit_qutrit_family_a(variant);
            else if (family_name == "family-b")
                family = bellkit::qubit_qutrit_family_b();
            else
                throw CLI::ValidationError("--family", "unknown family: " + family_name);

            std::optional<bellkit::BipartiteState> target;
            if (!state_file.empty()) {
                target = bellkit::io::import_state(read_file(state_file)).as_bipartite();
            } else {
                const std::string state_name =
                    params.count("state") ? params.at("state") : "phi-plus";
                const double theta1 = param_or(params, "theta1", 3.0 * std::numbers::pi / 4.0);
                const double theta2 = param_or(params, "theta2", std::numbers::pi / 4.0);
                const double tau = param_or(params, "tau", 0.0);
                if (state_name == "phi-plus") {
                    target = bellkit::bell_basis_state(1.0, 0.0, 0.0, 0.0);
                } else if (state_name == "dephased") {
                    bellkit::OperatorMatrix m(4);
                    m(0, 0) = 0.5;
                    m(3, 3) = 0.5;
                    target = bellkit::BipartiteState(bellkit::Spin(1), bellkit::Spin(1), m);
                } else if (state_name == "xstate-p1") {
                    target = bellkit::xstate_p1(theta1, tau);
                } else if (state_name == "psi2") {
                    bellkit::MixtureSpec spec;
                    spec.p1 = 0.0;
                    spec.p2 = 1.0;
                    spec.theta2 = theta2;
                    spec.tau = tau;
                    target = bellkit::rho_of_tau(spec);
                } else {
                    throw CLI::ValidationError("--params", "unknown state: " + state_name);
                }
            }

            bellkit::OptimizeConfig config;
            config.seed = seed;
            config.starts = static_cast<int>(param_or(params, "starts", 16));
            config.max_evals = static_cast<long>(param_or(params, "max-evals", 4000));
            if (preset == "set1")
                config.first_start = bellkit::family_a_set1_params();
            else if (preset == "familyB-p1")
                config.first_start = bellkit::family_b_p1_params();
            else if (preset == "familyB-p2")
                config.first_start = bellkit::family_b_p2_params();
            else if (!preset.empty())
                throw CLI::ValidationError("--preset", "unknown preset: " + preset);

            const bellkit::BellResult result = bellkit::optimize_bell(*target, *family, config);
            if (result.evaluations <= 0) return kExitNumerical;

            nlohmann::ordered_json j;
            j["f_b"] = result.f_b;
            j["params"] = result.params;
            j["evaluations"] = result.evaluations;
            j["family"] = result.family;
            j["seed"] = seed;
            const std::string text = j.dump(2) + "\n";
            if (optimize->count("--out"))
                write_file(out_path, text);
            else
                std::cout << text;
        } else if (state_import->parsed() || state_export->parsed()) {
            const bellkit::io::StateDocument doc = bellkit::io::import_state(read_file(in_path));
            if (state_import->parsed()) std::cout << "ok: all invariants satisfied\n";
            if (!state_out.empty()) write_file(state_out, bellkit::io::export_state(doc));
        }
    } catch (const bellkit::ValidationError& e) {
        std::cerr << "validation error [" << e.invariant() << "]: " << e.what() << "\n";
        return kExitValidation;
    } catch (const bellkit::io::FormatError& e) {
        std::cerr << "format error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
    return 0;
}
