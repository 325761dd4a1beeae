#include "sgl/bounds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace sgl {

namespace {

double pi2_over_L2(double L) { return M_PI * M_PI / (L * L); }

double coupling_prefactor(const PotentialSpec& spec) {
    const double q = 1.0 - 2.0 * spec.b * spec.b * norm_inf(spec);
    return q * q;
}

double edge_phase(const EigenResult& res, const PotentialSpec& spec, double L) {
    return res.k0 * (0.5 * L - spec.b);
}

double lemma_rhs_value(const EigenResult& res, const PotentialSpec& spec, double L) {
    const double c = std::cos(edge_phase(res, spec, L));
    return coupling_prefactor(spec) * pi2_over_L2(L) * c * c;
}

double theorem_rhs_value(const EigenResult& res, const PotentialSpec& spec, double L) {
    const double s = 0.5 * M_PI - edge_phase(res, spec, L);
    return coupling_prefactor(spec) * pi2_over_L2(L) * 0.25 * s * s;
}

bool small_coupling(const PotentialSpec& spec) {
    return spec.b * spec.b * norm_inf(spec) < 0.5;
}

}  // namespace

double lemma_L_min(const PotentialSpec& spec) { return 10.0 * spec.b; }

double kirsch_bound(const EigenResult& res, double L) {
    if (!(res.inf_phi > 0.0))
        throw std::domain_error("bounds: ground state infimum not positive");
    const double ratio = res.inf_phi / res.sup_phi;
    return ratio * ratio * pi2_over_L2(L);
}

double lemma_bound(const EigenResult& res, const PotentialSpec& spec, double L) {
    if (!small_coupling(spec))
        throw std::domain_error("bounds: b^2 ||v|| < 1/2 hypothesis violated");
    if (L < lemma_L_min(spec))
        throw std::domain_error("bounds: L below the asymptotic gate");
    return lemma_rhs_value(res, spec, L);
}

bool intermediate_ratio_check(const EigenResult& res, const PotentialSpec& spec,
                              double L) {
    const double q = 1.0 - 2.0 * spec.b * spec.b * norm_inf(spec);
    const double rhs = q * res.sup_phi * std::cos(edge_phase(res, spec, L));
    return res.inf_phi >= rhs - 1e-9 * res.sup_phi;
}

double compose_theorem(const EigenResult& res, const PotentialSpec& spec, double L) {
    if (!small_coupling(spec))
        throw std::domain_error("bounds: b^2 ||v|| < 1/2 hypothesis violated");
    const double s = 0.5 * M_PI - edge_phase(res, spec, L);
    if (!(std::fabs(s) < 0.5))
        throw std::domain_error("bounds: L too small for the sine linearization");
    return theorem_rhs_value(res, spec, L);
}

BoundReport evaluate_bounds(const EigenResult& res, const PotentialSpec& spec, double L,
                            const HypothesisReport& hyp) {
    BoundReport rep;
    rep.L = L;
    rep.gap_numeric = res.gap;
    rep.slack = 2.0 * res.err_estimate + 1e-12 * std::fabs(res.gap);
    rep.hypotheses = hyp;

    rep.kirsch_rhs = kirsch_bound(res, L);
    rep.lemma_rhs = lemma_rhs_value(res, spec, L);
    rep.theorem_rhs = theorem_rhs_value(res, spec, L);

    rep.lemma_gate = hyp.lemma_ok() && L >= lemma_L_min(spec);
    rep.theorem_gate =
        rep.lemma_gate && std::fabs(0.5 * M_PI - edge_phase(res, spec, L)) < 0.5;

    const double budget = res.gap + rep.slack;
    rep.dominated_kirsch = budget >= rep.kirsch_rhs;
    rep.dominated_lemma = budget >= rep.lemma_rhs;
    rep.dominated_theorem = budget >= rep.theorem_rhs;
    rep.intermediate_ok = intermediate_ratio_check(res, spec, L);
    return rep;
}

FitResult fit_exponent(const std::vector<SweepRecord>& sweep) {
    if (sweep.size() < 5)
        throw std::invalid_argument("fit: need at least 5 sweep points");
    for (std::size_t i = 1; i < sweep.size(); ++i)
        if (!(sweep[i].L > sweep[i - 1].L))
            throw std::invalid_argument("fit: L values must be strictly increasing");

    const std::size_t m = sweep.size();
    double sx = 0.0, sy = 0.0;
    std::vector<double> xs(m), ys(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (!(sweep[i].gap > 0.0))
            throw std::invalid_argument("fit: nonpositive gap in sweep");
        xs[i] = std::log(sweep[i].L);
        ys[i] = std::log(sweep[i].gap);
        sx += xs[i];
        sy += ys[i];
    }
    const double mx = sx / double(m), my = sy / double(m);
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
        syy += (ys[i] - my) * (ys[i] - my);
    }
    const double slope = sxy / sxx;

    FitResult fit;
    fit.points = int(m);
    fit.exponent_p = -slope;
    fit.amplitude_c = std::exp(my - slope * mx);
    double ss_res = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double e = ys[i] - (my + slope * (xs[i] - mx));
        ss_res += e * e;
    }
    fit.r_squared = syy > 0.0 ? 1.0 - ss_res / syy : 1.0;

    double beta = std::numeric_limits<double>::infinity();
    for (const auto& row : sweep)
        beta = std::min(beta, row.gap * row.L * row.L * row.L * row.L);
    fit.beta_hat = beta;

    bool have_sep = true;
    double delta = std::numeric_limits<double>::infinity();
    for (const auto& row : sweep) {
        if (!row.separation) {
            have_sep = false;
            break;
        }
        delta = std::min(delta, *row.separation * row.L);
    }
    if (have_sep) fit.delta_hat = delta;
    return fit;
}

}  // namespace sgl
