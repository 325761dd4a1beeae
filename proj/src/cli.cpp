#include "sgl/cli.hpp"

#include <fstream>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

#include "sgl/eigensolver.hpp"
#include "sgl/stepsolver.hpp"
#include "sgl/svg.hpp"
#include "sgl/sweep.hpp"

namespace sgl {

namespace {

using nlohmann::json;

void emit(const json& j, std::ostream& out) { out << j.dump(2) << '\n'; }

SweepConfig to_sweep_config(const RunConfig& config) {
    SweepConfig sc;
    sc.spec = config.spec;
    sc.L_min = config.L_min;
    sc.L_max = config.L_max;
    sc.points = config.points;
    sc.tol = config.tol;
    sc.jobs = config.jobs;
    sc.snap_L = config.snap_L;
    return sc;
}

void write_file(const std::string& path, const std::string& body, std::ostream& out) {
    if (path.empty()) {
        out << body;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file " + path);
    f << body;
}

std::vector<SweepRecord> sweep_rows(const RunConfig& config) {
    return run_sweep(to_sweep_config(config));
}

int classify(const std::exception& e, std::ostream& err) {
    err << "error: " << e.what() << '\n';
    if (dynamic_cast<const std::invalid_argument*>(&e)) return kExitConfig;
    if (dynamic_cast<const std::domain_error*>(&e)) return kExitHypothesis;
    return kExitConvergence;
}

}  // namespace

int cmd_solve(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        if (!(config.L > 0.0)) throw std::invalid_argument("L must be positive");
        validate_shape(config.spec);
        const EigenResult res = solve_extrapolated(config.spec, config.L, config.tol);
        json j;
        j["L"] = config.L;
        j["lambda0"] = res.lambda0;
        j["lambda1"] = res.lambda1;
        j["gap"] = res.gap;
        j["k0"] = res.k0;
        j["inf_phi"] = res.inf_phi;
        j["sup_phi"] = res.sup_phi;
        j["err_estimate"] = res.err_estimate;
        j["n"] = res.n;
        j["converged"] = res.converged;
        emit(j, out);
        if (!res.converged) {
            err << "warning: grid cap reached before tolerance\n";
            return kExitConvergence;
        }
        return kExitOk;
    } catch (const std::exception& e) {
        return classify(e, err);
    }
}

int cmd_quantization(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        if (config.spec.kind != PotentialKind::Step)
            throw std::invalid_argument("quantization requires a step potential");
        if (!(config.L > 0.0)) throw std::invalid_argument("L must be positive");
        const StepProblem p =
            make_step_problem(config.L, config.spec.b, config.spec.height);
        const QuantizationRoot root = solve_ground(p);
        json j;
        j["L"] = p.L;
        j["c"] = p.c;
        j["vtilde"] = p.vtilde;
        j["l1"] = p.l1;
        j["l2"] = p.l2;
        j["omega0"] = root.omega0;
        j["M0"] = root.M0;
        j["ktilde0"] = root.ktilde0;
        j["lambda0"] = root.lambda0;
        j["separation"] = 0.5 * M_PI - root.omega0 * p.l1;
        j["residual"] = root.residual;
        emit(j, out);
        return kExitOk;
    } catch (const std::exception& e) {
        return classify(e, err);
    }
}

int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        const auto rows = sweep_rows(config);
        write_file(config.csv_path, sweep_to_csv(rows), out);
        if (!config.svg_path.empty()) {
            std::vector<SvgSeries> series(4);
            series[0] = {"gap", "#1f77b4", {}};
            series[1] = {"kirsch", "#2ca02c", {}};
            series[2] = {"lemma", "#d62728", {}};
            series[3] = {"theorem", "#9467bd", {}};
            for (const auto& r : rows) {
                series[0].points.push_back({r.L, r.gap});
                series[1].points.push_back({r.L, r.kirsch_rhs});
                if (r.lemma_gate) series[2].points.push_back({r.L, r.lemma_rhs});
                if (r.theorem_gate) series[3].points.push_back({r.L, r.theorem_rhs});
            }
            const std::string svg = render_loglog_svg(
                "spectral gap and lower bounds", "L", "energy", series);
            std::ofstream f(config.svg_path, std::ios::binary);
            if (!f) throw std::invalid_argument("cannot open output file " + config.svg_path);
            f << svg;
        }
        bool all_converged = true;
        for (const auto& r : rows) all_converged = all_converged && r.converged;
        if (!all_converged) {
            err << "warning: some rows hit the grid cap before tolerance\n";
            return kExitConvergence;
        }
        return kExitOk;
    } catch (const std::exception& e) {
        return classify(e, err);
    }
}

int cmd_verify_bounds(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        const HypothesisReport hyp = validate_hypotheses(config.spec);
        const auto rows = sweep_rows(config);

        int checked_kirsch = 0, ok_kirsch = 0;
        int checked_lemma = 0, ok_lemma = 0, gated_lemma = 0;
        int checked_theorem = 0, ok_theorem = 0, gated_theorem = 0;
        int checked_inter = 0, ok_inter = 0;
        for (const auto& r : rows) {
            ++checked_kirsch;
            ok_kirsch += r.dominated_kirsch;
            if (r.lemma_gate) {
                ++checked_lemma;
                ok_lemma += r.dominated_lemma;
                ++checked_inter;
                ok_inter += r.intermediate_ok;
            } else {
                ++gated_lemma;
            }
            if (r.theorem_gate) {
                ++checked_theorem;
                ok_theorem += r.dominated_theorem;
            } else {
                ++gated_theorem;
            }
        }
        const int violations = (checked_kirsch - ok_kirsch) + (checked_lemma - ok_lemma) +
                               (checked_theorem - ok_theorem) + (checked_inter - ok_inter);
        json j;
        j["rows"] = rows.size();
        j["hypotheses_ok"] = hyp.lemma_ok();
        j["kirsch"] = {{"checked", checked_kirsch}, {"dominated", ok_kirsch}};
        j["lemma"] = {{"checked", checked_lemma},
                      {"dominated", ok_lemma},
                      {"gated_out", gated_lemma}};
        j["theorem"] = {{"checked", checked_theorem},
                        {"dominated", ok_theorem},
                        {"gated_out", gated_theorem}};
        j["intermediate"] = {{"checked", checked_inter}, {"ok", ok_inter}};
        j["violations"] = violations;
        emit(j, out);

        if (!hyp.lemma_ok()) {
            err << "error: potential fails the bound hypotheses\n";
            return kExitHypothesis;
        }
        if (violations > 0) {
            err << "error: " << violations << " bound violation(s)\n";
            return kExitViolation;
        }
        return kExitOk;
    } catch (const std::exception& e) {
        return classify(e, err);
    }
}

int cmd_fit_exponent(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        const auto rows = sweep_rows(config);
        const FitResult fit = fit_exponent(rows);
        json j;
        j["exponent_p"] = fit.exponent_p;
        j["amplitude_c"] = fit.amplitude_c;
        j["r_squared"] = fit.r_squared;
        if (fit.delta_hat)
            j["delta_hat"] = *fit.delta_hat;
        else
            j["delta_hat"] = nullptr;
        j["beta_hat"] = fit.beta_hat;
        j["points"] = fit.points;
        emit(j, out);
        return kExitOk;
    } catch (const std::exception& e) {
        return classify(e, err);
    }
}

}  // namespace sgl
