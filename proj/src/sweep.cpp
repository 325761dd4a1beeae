#include "sgl/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "sgl/eigensolver.hpp"
#include "sgl/stepsolver.hpp"
#include "sgl/textio.hpp"

namespace sgl {

std::vector<double> sweep_lengths(double L_min, double L_max, int points, double snap) {
    if (!(L_min > 0.0) || !(L_min < L_max))
        throw std::invalid_argument("sweep: need 0 < L_min < L_max");
    if (points < 2) throw std::invalid_argument("sweep: need at least 2 points");
    std::vector<double> out(points);
    const double ratio = std::log(L_max / L_min) / (points - 1);
    for (int i = 0; i < points; ++i) {
        double L = L_min * std::exp(ratio * i);
        if (snap > 0.0) L = std::round(L / snap) * snap;
        out[i] = L;
    }
    out.front() = snap > 0.0 ? std::round(L_min / snap) * snap : L_min;
    out.back() = snap > 0.0 ? std::round(L_max / snap) * snap : L_max;
    for (int i = 1; i < points; ++i)
        if (!(out[i] > out[i - 1]))
            throw std::invalid_argument("sweep: grid collapsed; lower snap_L");
    return out;
}

int resolve_jobs(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("SGL_JOBS")) {
        const int j = std::atoi(env);
        if (j > 0) return j;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? int(hc) : 1;
}

namespace {

SweepRecord solve_one(const SweepConfig& config, double L,
                      const HypothesisReport& hyp) {
    const EigenResult res = solve_extrapolated(config.spec, L, config.tol);
    const BoundReport rep = evaluate_bounds(res, config.spec, L, hyp);

    SweepRecord row;
    row.L = L;
    row.lambda0 = res.lambda0;
    row.lambda1 = res.lambda1;
    row.gap = res.gap;
    row.k0 = res.k0;
    row.kirsch_rhs = rep.kirsch_rhs;
    row.lemma_rhs = rep.lemma_rhs;
    row.theorem_rhs = rep.theorem_rhs;
    if (config.spec.kind == PotentialKind::Step && norm_inf(config.spec) > 0.0) {
        const StepProblem p = make_step_problem(L, config.spec.b, config.spec.height);
        row.separation = separation(p);
    }
    row.err_estimate = res.err_estimate;
    row.hypotheses_ok = hyp.lemma_ok();
    row.lemma_gate = rep.lemma_gate;
    row.theorem_gate = rep.theorem_gate;
    row.dominated_kirsch = rep.dominated_kirsch;
    row.dominated_lemma = rep.dominated_lemma;
    row.dominated_theorem = rep.dominated_theorem;
    row.intermediate_ok = rep.intermediate_ok;
    row.converged = res.converged;
    return row;
}

}  // namespace

std::vector<SweepRecord> run_sweep(const SweepConfig& config) {
    validate_shape(config.spec);
    const std::vector<double> lengths =
        sweep_lengths(config.L_min, config.L_max, config.points, config.snap_L);
    const HypothesisReport hyp = validate_hypotheses(config.spec);

    std::vector<SweepRecord> rows(lengths.size());
    const int workers = std::min<int>(resolve_jobs(config.jobs), int(lengths.size()));

    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto work = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= lengths.size()) return;
            try {
                rows[i] = solve_one(config, lengths[i], hyp);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };

    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    if (error) std::rethrow_exception(error);
    return rows;
}

const char* const kSweepCsvHeader =
    "L,lambda0,lambda1,gap,k0,kirsch_rhs,lemma_rhs,theorem_rhs,separation,"
    "err_estimate,hypotheses_ok,lemma_gate,theorem_gate,dominated_kirsch,"
    "dominated_lemma,dominated_theorem,intermediate_ok,converged";

std::string sweep_to_csv(const std::vector<SweepRecord>& rows) {
    std::string out(kSweepCsvHeader);
    out += '\n';
    auto flag = [](bool b) { return b ? "1" : "0"; };
    for (const auto& r : rows) {
        out += format_g17(r.L);
        out += ',';
        out += format_g17(r.lambda0);
        out += ',';
        out += format_g17(r.lambda1);
        out += ',';
        out += format_g17(r.gap);
        out += ',';
        out += format_g17(r.k0);
        out += ',';
        out += format_g17(r.kirsch_rhs);
        out += ',';
        out += format_g17(r.lemma_rhs);
        out += ',';
        out += format_g17(r.theorem_rhs);
        out += ',';
        if (r.separation) out += format_g17(*r.separation);
        out += ',';
        out += format_g17(r.err_estimate);
        out += ',';
        out += flag(r.hypotheses_ok);
        out += ',';
        out += flag(r.lemma_gate);
        out += ',';
        out += flag(r.theorem_gate);
        out += ',';
        out += flag(r.dominated_kirsch);
        out += ',';
        out += flag(r.dominated_lemma);
        out += ',';
        out += flag(r.dominated_theorem);
        out += ',';
        out += flag(r.intermediate_ok);
        out += ',';
        out += flag(r.converged);
        out += '\n';
    }
    return out;
}

}  // namespace sgl
