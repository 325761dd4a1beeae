#ifndef SGL_TRIDIAG_HPP
#define SGL_TRIDIAG_HPP

#include <cstddef>
#include <vector>

namespace sgl {

/// Symmetric tridiagonal matrix: diag.size() = m, offdiag.size() = m - 1.
struct SymTridiag {
    std::vector<double> diag;
    std::vector<double> offdiag;

    std::size_t size() const { return diag.size(); }
};

/// Half-width of the union of Gershgorin discs; every eigenvalue lies in
/// [gershgorin_lo, gershgorin_hi] and |lambda| <= gershgorin_scale.
double gershgorin_lo(const SymTridiag& t);
double gershgorin_hi(const SymTridiag& t);
double gershgorin_scale(const SymTridiag& t);

/// Number of eigenvalues strictly below x (Sturm count via the LDL^T
/// pivot recurrence, with the usual tiny-pivot guard).
int count_below(const SymTridiag& t, double x);

/// k-th smallest eigenvalue (k = 0 is the smallest) by bisection on the
/// Sturm count.  rel_tol bounds the final bracket width relative to the
/// eigenvalue magnitude; an absolute floor proportional to the matrix scale
/// terminates the search for eigenvalues near zero.
double eigenvalue_k(const SymTridiag& t, int k, double rel_tol = 1e-10);

/// Solves (T - shift I) x = rhs with partial pivoting.  Exactly singular
/// pivots are replaced by a tiny number, as inverse iteration expects.
std::vector<double> solve_shifted(const SymTridiag& t, double shift,
                                  const std::vector<double>& rhs);

/// Inverse iteration at the given shift from a fixed pseudo-random start.
/// Returns a unit-2-norm vector whose largest-magnitude entry is positive.
/// When `deflate` is given the iterates are kept orthogonal to it, so the
/// iteration cannot fall back onto an already-computed eigenvector even if
/// the shift is noisy.  Iterates until the growth per step saturates or the
/// residual reaches 1e-13 of the matrix scale (at least two solves either
/// way); throws std::runtime_error if 100 iterations fail to converge.
std::vector<double> inverse_iteration(const SymTridiag& t, double shift,
                                      const std::vector<double>* deflate = nullptr);

}  // namespace sgl

#endif
