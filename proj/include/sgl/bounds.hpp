#ifndef SGL_BOUNDS_HPP
#define SGL_BOUNDS_HPP

#include <optional>
#include <vector>

#include "sgl/eigensolver.hpp"
#include "sgl/potential.hpp"

namespace sgl {

/// Every lower bound evaluated against one numerically computed gap,
/// together with the applicability gates that were in force.
struct BoundReport {
    double L = 0.0;
    double gap_numeric = 0.0;
    double kirsch_rhs = 0.0;   // (inf phi / sup phi)^2 * pi^2 / L^2
    double lemma_rhs = 0.0;    // (1 - 2 b^2 |v|)^2 * pi^2/L^2 * cos^2(k0 (L/2 - b))
    double theorem_rhs = 0.0;  // lemma prefactors * (1/4) (pi/2 - k0 (L/2 - b))^2
    double slack = 0.0;        // 2 err_estimate + 1e-12 |gap|

    HypothesisReport hypotheses;
    bool lemma_gate = false;    // hypotheses hold and L >= 10 b
    bool theorem_gate = false;  // lemma gate and |pi/2 - k0 (L/2-b)| < 1/2

    bool dominated_kirsch = false;  // gap + slack >= rhs
    bool dominated_lemma = false;
    bool dominated_theorem = false;
    bool intermediate_ok = false;   // inf >= (1 - 2 b^2 |v|) sup cos(k0 (L/2-b))
};

/// L gate below which the asymptotic bounds are not evaluated.
double lemma_L_min(const PotentialSpec& spec);

double kirsch_bound(const EigenResult& res, double L);

/// Throws std::domain_error unless b^2 ||v|| < 1/2 and L >= 10 b.
double lemma_bound(const EigenResult& res, const PotentialSpec& spec, double L);

/// True iff inf phi >= (1 - 2 b^2 ||v||) sup phi cos(k0 (L/2 - b)) up to a
/// small relative slack; vacuously true when the right side is negative.
bool intermediate_ratio_check(const EigenResult& res, const PotentialSpec& spec, double L);

/// Quadratic-minorant form of the gap bound.  Throws std::domain_error when
/// the small-coupling hypothesis fails or |pi/2 - k0 (L/2 - b)| >= 1/2
/// (L too small for the linearization).
double compose_theorem(const EigenResult& res, const PotentialSpec& spec, double L);

/// Evaluates every bound and gate for one solved (spec, L) pair.
BoundReport evaluate_bounds(const EigenResult& res, const PotentialSpec& spec, double L,
                            const HypothesisReport& hyp);

/// One row of an interval-length sweep, in CSV column order.
struct SweepRecord {
    double L = 0.0;
    double lambda0 = 0.0;
    double lambda1 = 0.0;
    double gap = 0.0;
    double k0 = 0.0;
    double kirsch_rhs = 0.0;
    double lemma_rhs = 0.0;
    double theorem_rhs = 0.0;
    std::optional<double> separation;  // step potentials only
    double err_estimate = 0.0;
    bool hypotheses_ok = false;
    bool lemma_gate = false;
    bool theorem_gate = false;
    bool dominated_kirsch = false;
    bool dominated_lemma = false;
    bool dominated_theorem = false;
    bool intermediate_ok = false;
    bool converged = false;
};

struct FitResult {
    double exponent_p = 0.0;   // gap ~ c L^-p
    double amplitude_c = 0.0;
    double r_squared = 0.0;
    std::optional<double> delta_hat;  // min over sweep of separation * L
    double beta_hat = 0.0;            // min over sweep of gap * L^4
    int points = 0;
};

/// Ordinary least squares of log gap against log L.  Requires at least 5
/// records with strictly increasing L; throws std::invalid_argument
/// otherwise.
FitResult fit_exponent(const std::vector<SweepRecord>& sweep);

}  // namespace sgl

#endif
