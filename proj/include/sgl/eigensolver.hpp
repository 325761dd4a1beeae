#ifndef SGL_EIGENSOLVER_HPP
#define SGL_EIGENSOLVER_HPP

#include <vector>

#include "sgl/potential.hpp"
#include "sgl/tridiag.hpp"

namespace sgl {

/// Finite-difference Neumann discretization of -d^2/dx^2 + v on (-L/2, L/2).
///
/// Nodes x_i = -L/2 + i h, i = 0..n, h = L/n.  The Neumann condition enters
/// through symmetric ghost points; conjugating the resulting scheme by the
/// square roots of the trapezoid weights gives a genuinely symmetric
/// tridiagonal matrix (diagonal 2/h^2 + v_i everywhere, off-diagonal -1/h^2
/// except -sqrt(2)/h^2 in the two corner couplings) with the same
/// eigenvalues and O(h^2) accuracy.
struct Discretization {
    double L = 0.0;
    int n = 0;        // number of cells; the matrix is (n+1) x (n+1)
    double h = 0.0;   // L / n
    SymTridiag matrix;
    std::vector<double> v;  // potential samples at the nodes
};

struct EigenResult {
    double lambda0 = 0.0;
    double lambda1 = 0.0;
    double gap = 0.0;           // lambda1 - lambda0
    double k0 = 0.0;            // sqrt(lambda0)
    std::vector<double> phi0;   // ground state, positive, L^2-normalized
    double inf_phi = 0.0;
    double sup_phi = 0.0;
    double err_estimate = 0.0;  // |Richardson extrapolant - fine grid value|
    int n = 0;                  // cells of the grid phi0 lives on
    bool converged = true;      // false when the refinement cap was hit
};

/// Default cell count: roughly max(1024, 40 L), taken as a multiple of
/// ceil(40 L) so that grids stay even and potential breakpoints that are
/// commensurate with L land exactly on nodes at every refinement level.
int default_start_cells(double L);

/// Builds the symmetric tridiagonal matrix.  Node positions are mirrored
/// exactly about x = 0 and snapped onto potential breakpoints within
/// rounding distance, so symmetric potentials sample symmetrically and step
/// edges coincide with nodes whenever the grid allows it.
/// Throws std::invalid_argument for n < 2 or L <= 0.
Discretization discretize(const PotentialSpec& spec, double L, int n);

/// Two lowest eigenpairs of the discretized operator.  Eigenvalues come from
/// Sturm bisection and are then polished through the Rayleigh quotient of
/// the inverse-iteration eigenvectors, evaluated in difference form (all
/// terms nonnegative), which removes the eps*||T|| bisection noise that
/// otherwise dominates small eigenvalues on fine grids.  The ground-state
/// vector gets one residual-correction pass before inf/sup are read off.
EigenResult lowest_two(const Discretization& disc);

/// Grid-doubling driver: solves on n and 2n cells, Richardson-extrapolates
/// (order-2 scheme), and doubles until |extrapolated - fine| drops below
/// tol * max(|lambda|, L^-2) plus a machine-noise floor.  Gives up above
/// 2^22 cells and returns the best result with converged = false.
EigenResult solve_extrapolated(const PotentialSpec& spec, double L, double tol = 1e-9);

/// Max over nodes x in [-b, 0] of the defect in the ground-state identity
/// phi'(x) = integral_x^0 (lambda0 - v) phi, with a central-difference
/// derivative and trapezoid quadrature.  Shrinks under grid refinement.
double turning_point_residual(const EigenResult& res, const PotentialSpec& spec, double L);

}  // namespace sgl

#endif
