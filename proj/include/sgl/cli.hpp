#ifndef SGL_CLI_HPP
#define SGL_CLI_HPP

#include <iosfwd>
#include <string>

#include "sgl/potential.hpp"

namespace sgl {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;       // invalid configuration
inline constexpr int kExitHypothesis = 3;   // potential violates the assumptions
inline constexpr int kExitConvergence = 4;  // solver did not converge
inline constexpr int kExitViolation = 5;    // a bound exceeded the gap

struct RunConfig {
    PotentialSpec spec;
    double L = 50.0;  // solve / quantization
    double L_min = 50.0;
    double L_max = 1600.0;
    int points = 9;
    double tol = 1e-9;
    int jobs = 0;
    double snap_L = 0.25;
    std::string csv_path;  // empty: CSV to stdout
    std::string svg_path;  // empty: no plot
};

/// Single solve; prints the eigenpair summary as JSON.
int cmd_solve(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Analytic step-potential ground state; prints the root as JSON.
int cmd_quantization(const RunConfig& config, std::ostream& out, std::ostream& err);

/// L sweep; writes CSV (and optionally an SVG log-log chart).
int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Sweep plus domination audit; JSON summary, exit 5 on any violated bound,
/// exit 3 when the potential fails the bound hypotheses outright.
int cmd_verify_bounds(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Sweep plus log-log decay fit; prints the fit as JSON.
int cmd_fit_exponent(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace sgl

#endif
