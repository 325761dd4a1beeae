#ifndef SGL_STEPSOLVER_HPP
#define SGL_STEPSOLVER_HPP

namespace sgl {

/// Centered step barrier vtilde * 1_{[-c,+c]} inside the Neumann box of
/// length L, in the dimensionless variables l1 = 1/2 - c/L, l2 = c/L.
struct StepProblem {
    double L = 0.0;
    double c = 0.0;
    double vtilde = 0.0;
    double l1 = 0.0;
    double l2 = 0.0;
};

/// Validates L > 0, 0 < c < L/2, vtilde > 0 and fills l1, l2.
StepProblem make_step_problem(double L, double c, double vtilde);

/// Ground-state matching data.  omega0 is the dimensionless wavenumber
/// (omega0 = ktilde0 * L), M0 = sqrt(L^2 vtilde - omega0^2) the barrier
/// decay constant, lambda0 = ktilde0^2 the eigenvalue.
struct QuantizationRoot {
    double omega0 = 0.0;
    double M0 = 0.0;
    double ktilde0 = 0.0;
    double lambda0 = 0.0;
    double residual = 0.0;
};

/// (M0/omega) tanh(M0 l2) - tan(omega l1) with M0 = sqrt(L^2 vtilde - omega^2).
/// Throws std::domain_error outside 0 < omega <= L sqrt(vtilde).
double quantization_residual(const StepProblem& p, double omega);

/// Smallest positive root of the matching condition by bisection on
/// (0, min(pi/(2 l1), L sqrt(vtilde))); the even ground state always sits
/// below the barrier, so the bracket change of sign is structural.
/// Throws std::runtime_error if the bracket fails anyway.
QuantizationRoot solve_ground(const StepProblem& p);

/// pi/2 - omega0 l1: how far the scaled ground-state wavenumber stays below
/// the hard-wall limit.  Strictly positive.
double separation(const StepProblem& p);

}  // namespace sgl

#endif
