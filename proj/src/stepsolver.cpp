#include "sgl/stepsolver.hpp"

#include <cmath>
#include <stdexcept>

namespace sgl {

StepProblem make_step_problem(double L, double c, double vtilde) {
    if (!(L > 0.0)) throw std::invalid_argument("stepsolver: L must be positive");
    if (!(c > 0.0) || !(c < 0.5 * L))
        throw std::invalid_argument("stepsolver: need 0 < c < L/2");
    if (!(vtilde > 0.0))
        throw std::invalid_argument("stepsolver: vtilde must be positive");
    StepProblem p;
    p.L = L;
    p.c = c;
    p.vtilde = vtilde;
    p.l1 = 0.5 - c / L;
    p.l2 = c / L;
    return p;
}

double quantization_residual(const StepProblem& p, double omega) {
    const double barrier = p.L * p.L * p.vtilde;
    if (!(omega > 0.0) || omega * omega > barrier)
        throw std::domain_error("stepsolver: omega outside the below-barrier branch");
    const double M0 = std::sqrt(barrier - omega * omega);
    return (M0 / omega) * std::tanh(M0 * p.l2) - std::tan(omega * p.l1);
}

QuantizationRoot solve_ground(const StepProblem& p) {
    const double omega_barrier = p.L * std::sqrt(p.vtilde);
    const double omega_pole = 0.5 * M_PI / p.l1;
    const double hi_edge = std::min(omega_pole, omega_barrier);

    double lo = 1e-9;
    double hi = hi_edge - 1e-9;
    if (hi <= lo)
        throw std::runtime_error("stepsolver: degenerate bracket");
    double f_lo = quantization_residual(p, lo);
    double f_hi = quantization_residual(p, hi);
    if (!(f_lo > 0.0) || !(f_hi < 0.0))
        throw std::runtime_error(
            "stepsolver: no sign change in the ground-state bracket");

    while (hi - lo > 1e-14 * hi_edge) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (quantization_residual(p, mid) > 0.0)
            lo = mid;
        else
            hi = mid;
    }

    QuantizationRoot root;
    root.omega0 = 0.5 * (lo + hi);
    root.M0 = std::sqrt(p.L * p.L * p.vtilde - root.omega0 * root.omega0);
    root.ktilde0 = root.omega0 / p.L;
    root.lambda0 = root.ktilde0 * root.ktilde0;
    root.residual = quantization_residual(p, root.omega0);
    return root;
}

double separation(const StepProblem& p) {
    const QuantizationRoot root = solve_ground(p);
    return 0.5 * M_PI - root.omega0 * p.l1;
}

}  // namespace sgl
