// spectral-gap-lab: Neumann spectral gaps of -d^2/dx^2 + v on (-L/2, L/2)
// for compactly supported potentials, the closed-form lower bounds on the
// gap, and empirical decay-rate fits over interval-length sweeps.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "sgl/cli.hpp"

namespace {

using nlohmann::json;

struct FlagSet {
    std::string config_path;
    std::string kind;
    double b = 0.0, height = 0.0, eps = 0.0, gamma = 0.0;
    double L = 0.0, L_min = 0.0, L_max = 0.0, tol = 0.0, snap_L = 0.0;
    int points = 0, jobs = 0;
    std::string csv, svg;
};

void add_spec_options(CLI::App* cmd, FlagSet& f, std::vector<CLI::Option*>& opts) {
    opts.push_back(cmd->add_option("--kind", f.kind, "step|trapezoid|bump|zero"));
    opts.push_back(cmd->add_option("--b", f.b, "support half-width"));
    opts.push_back(cmd->add_option("--height", f.height, "peak value of v"));
    opts.push_back(cmd->add_option("--eps", f.eps, "plateau half-width"));
    opts.push_back(cmd->add_option("--gamma", f.gamma, "required floor on [-eps,0]"));
    opts.push_back(cmd->add_option("--config", f.config_path,
                                   "JSON config; explicit flags override it"));
}

json load_config(const std::string& path) {
    if (path.empty()) return json::object();
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read config file " + path);
    json j;
    in >> j;
    if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
    return j;
}

// merged = config file overridden by whichever flags were actually given
json merge(const json& base, CLI::App* cmd, const FlagSet& f) {
    json j = base;
    auto given = [&](const std::string& name) {
        const auto* opt = cmd->get_option_no_throw(name);
        return opt != nullptr && opt->count() > 0;
    };
    if (given("--kind")) j["kind"] = f.kind;
    if (given("--b")) j["b"] = f.b;
    if (given("--height")) j["height"] = f.height;
    if (given("--eps")) j["eps"] = f.eps;
    if (given("--gamma")) j["gamma"] = f.gamma;
    if (given("--L")) j["L"] = f.L;
    if (given("--L-min")) j["L_min"] = f.L_min;
    if (given("--L-max")) j["L_max"] = f.L_max;
    if (given("--points")) j["points"] = f.points;
    if (given("--tol")) j["tol"] = f.tol;
    if (given("--jobs")) j["jobs"] = f.jobs;
    if (given("--snap-L")) j["snap_L"] = f.snap_L;
    if (given("--csv")) j["csv"] = f.csv;
    if (given("--svg")) j["svg"] = f.svg;
    return j;
}

sgl::RunConfig build_config(const json& j) {
    sgl::RunConfig config;
    json spec = json::object();
    spec["kind"] = j.value("kind", "zero");
    for (const char* key : {"b", "height", "eps", "gamma"})
        if (j.contains(key)) spec[key] = j.at(key);
    config.spec = sgl::spec_from_json_text(spec.dump());
    config.L = j.value("L", config.L);
    config.L_min = j.value("L_min", config.L_min);
    config.L_max = j.value("L_max", config.L_max);
    config.points = j.value("points", config.points);
    config.tol = j.value("tol", config.tol);
    config.jobs = j.value("jobs", config.jobs);
    config.snap_L = j.value("snap_L", config.snap_L);
    config.csv_path = j.value("csv", config.csv_path);
    config.svg_path = j.value("svg", config.svg_path);
    if (!(config.tol > 0.0)) throw std::invalid_argument("tol must be positive");
    return config;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Neumann spectral-gap laboratory for 1D Schrodinger operators"};
    app.require_subcommand(1);

    FlagSet f;
    std::vector<CLI::Option*> opts;

    CLI::App* solve = app.add_subcommand("solve", "two lowest eigenvalues at one L");
    CLI::App* quant = app.add_subcommand(
        "quantization", "analytic step-potential ground state at one L");
    CLI::App* sweep = app.add_subcommand("sweep", "CSV sweep of gap and bounds over L");
    CLI::App* verify =
        app.add_subcommand("verify-bounds", "audit gap >= bounds over a sweep");
    CLI::App* fit =
        app.add_subcommand("fit-exponent", "fit gap ~ c L^-p over a sweep");

    for (CLI::App* cmd : {solve, quant, sweep, verify, fit}) {
        add_spec_options(cmd, f, opts);
        cmd->add_option("--tol", f.tol, "relative eigenvalue tolerance");
    }
    for (CLI::App* cmd : {solve, quant})
        cmd->add_option("--L", f.L, "interval length");
    for (CLI::App* cmd : {sweep, verify, fit}) {
        cmd->add_option("--L-min", f.L_min, "smallest interval length");
        cmd->add_option("--L-max", f.L_max, "largest interval length");
        cmd->add_option("--points", f.points, "sweep points (geometric grid)");
        cmd->add_option("--jobs", f.jobs, "worker threads (default: cores, or SGL_JOBS)");
        cmd->add_option("--snap-L", f.snap_L,
                        "round sweep lengths to this quantum (0 disables)");
    }
    sweep->add_option("--csv", f.csv, "CSV output path (default: stdout)");
    sweep->add_option("--svg", f.svg, "also write a log-log SVG chart");

    CLI11_PARSE(app, argc, argv);

    CLI::App* cmd = app.get_subcommands().front();
    sgl::RunConfig config;
    try {
        config = build_config(merge(load_config(f.config_path), cmd, f));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return sgl::kExitConfig;
    }

    if (cmd == solve) return sgl::cmd_solve(config, std::cout, std::cerr);
    if (cmd == quant) return sgl::cmd_quantization(config, std::cout, std::cerr);
    if (cmd == sweep) return sgl::cmd_sweep(config, std::cout, std::cerr);
    if (cmd == verify) return sgl::cmd_verify_bounds(config, std::cout, std::cerr);
    if (cmd == fit) return sgl::cmd_fit_exponent(config, std::cout, std::cerr);
    return sgl::kExitConfig;
}
