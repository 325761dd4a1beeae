#include "sgl/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace sgl {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double pivmin(const SymTridiag& t) {
    double e2max = 1.0;
    for (double e : t.offdiag) e2max = std::max(e2max, e * e);
    return std::numeric_limits<double>::min() * e2max;
}

}  // namespace

double gershgorin_lo(const SymTridiag& t) {
    const std::size_t m = t.size();
    double lo = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m; ++i) {
        double r = 0.0;
        if (i > 0) r += std::fabs(t.offdiag[i - 1]);
        if (i + 1 < m) r += std::fabs(t.offdiag[i]);
        lo = std::min(lo, t.diag[i] - r);
    }
    return lo;
}

double gershgorin_hi(const SymTridiag& t) {
    const std::size_t m = t.size();
    double hi = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m; ++i) {
        double r = 0.0;
        if (i > 0) r += std::fabs(t.offdiag[i - 1]);
        if (i + 1 < m) r += std::fabs(t.offdiag[i]);
        hi = std::max(hi, t.diag[i] + r);
    }
    return hi;
}

double gershgorin_scale(const SymTridiag& t) {
    return std::max(std::fabs(gershgorin_lo(t)), std::fabs(gershgorin_hi(t)));
}

int count_below(const SymTridiag& t, double x) {
    const std::size_t m = t.size();
    const double guard = pivmin(t);
    int cnt = 0;
    double q = t.diag[0] - x;
    // a vanishing pivot counts as negative (x is an eigenvalue of a leading
    // submatrix, and interlacing puts an eigenvalue of T at or below it)
    if (std::fabs(q) < guard) q = -guard;
    if (q < 0.0) ++cnt;
    for (std::size_t i = 1; i < m; ++i) {
        q = (t.diag[i] - x) - t.offdiag[i - 1] * t.offdiag[i - 1] / q;
        if (std::fabs(q) < guard) q = -guard;
        if (q < 0.0) ++cnt;
    }
    return cnt;
}

double eigenvalue_k(const SymTridiag& t, int k, double rel_tol) {
    if (k < 0 || std::size_t(k) >= t.size())
        throw std::invalid_argument("tridiag: eigenvalue index out of range");
    double lo = gershgorin_lo(t);
    double hi = gershgorin_hi(t);
    // absolute floor: once the bracket is this small, further bisection only
    // resolves Sturm-count roundoff
    const double floor_abs = kEps * std::max(1e-300, gershgorin_scale(t)) * 1e-6;
    while (true) {
        const double width_tol =
            rel_tol * std::max(std::fabs(lo), std::fabs(hi)) + floor_abs;
        if (hi - lo <= width_tol) break;
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // bracket at roundoff resolution
        if (count_below(t, mid) >= k + 1)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

std::vector<double> solve_shifted(const SymTridiag& t, double shift,
                                  const std::vector<double>& rhs) {
    const std::size_t m = t.size();
    if (rhs.size() != m) throw std::invalid_argument("tridiag: rhs size mismatch");
    if (m == 1) {
        double p = t.diag[0] - shift;
        if (p == 0.0) p = pivmin(t);
        return {rhs[0] / p};
    }
    // LU with partial pivoting; U carries two superdiagonals
    std::vector<double> du(m), u1(m, 0.0), u2(m, 0.0), x(rhs);
    du[0] = t.diag[0] - shift;
    u1[0] = t.offdiag[0];
    for (std::size_t i = 0; i + 1 < m; ++i) {
        double sub = t.offdiag[i];                    // row i+1, column i
        double d_next = t.diag[i + 1] - shift;        // row i+1 diagonal
        double s_next = i + 2 < m ? t.offdiag[i + 1] : 0.0;
        if (std::fabs(sub) > std::fabs(du[i])) {
            // swap rows i and i+1
            std::swap(du[i], sub);
            std::swap(u1[i], d_next);
            u2[i] = s_next;
            s_next = 0.0;
            std::swap(x[i], x[i + 1]);
        } else {
            u2[i] = 0.0;
        }
        if (du[i] == 0.0) du[i] = pivmin(t);
        const double l = sub / du[i];
        du[i + 1] = d_next - l * u1[i];
        u1[i + 1] = s_next - l * u2[i];
        x[i + 1] -= l * x[i];
    }
    if (du[m - 1] == 0.0) du[m - 1] = pivmin(t);
    x[m - 1] /= du[m - 1];
    if (m >= 2) x[m - 2] = (x[m - 2] - u1[m - 2] * x[m - 1]) / du[m - 2];
    for (std::size_t ir = m; ir >= 3; --ir) {
        const std::size_t i = ir - 3;
        x[i] = (x[i] - u1[i] * x[i + 1] - u2[i] * x[i + 2]) / du[i];
    }
    return x;
}

std::vector<double> inverse_iteration(const SymTridiag& t, double shift,
                                      const std::vector<double>* deflate) {
    const std::size_t m = t.size();
    const double scale = std::max(1e-300, gershgorin_scale(t));

    auto project_off = [&](std::vector<double>& v) {
        if (!deflate) return;
        double dot = 0.0;
        for (std::size_t i = 0; i < m; ++i) dot += (*deflate)[i] * v[i];
        for (std::size_t i = 0; i < m; ++i) v[i] -= dot * (*deflate)[i];
    };

    // fixed-seed xorshift start so runs are reproducible
    std::vector<double> x(m);
    std::uint64_t state = 0x9e3779b97f4a7c15ull;
    for (std::size_t i = 0; i < m; ++i) {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        x[i] = 0.5 + double(state >> 11) * 0x1.0p-53;  // in [0.5, 1.5)
    }
    project_off(x);
    double nrm = 0.0;
    for (double v : x) nrm += v * v;
    nrm = std::sqrt(nrm);
    for (double& v : x) v /= nrm;

    // ||(T - shift) x_new|| = ||x_old|| / ||y_raw||, so the growth per step
    // is the reciprocal residual.  It saturates at 1/max(|shift - lambda|,
    // solve roundoff); run at least two solves, then accept a residual at
    // the 1e-13 scale or stagnating growth (the shift error is the floor,
    // and more sweeps cannot improve the vector).
    double prev_growth = 0.0;
    bool accepted = false;
    for (int it = 0; it < 100 && !accepted; ++it) {
        std::vector<double> y = solve_shifted(t, shift, x);
        project_off(y);
        double ynrm = 0.0;
        for (double v : y) ynrm += v * v;
        ynrm = std::sqrt(ynrm);
        if (!std::isfinite(ynrm)) break;  // exactly singular: x already converged
        if (ynrm == 0.0)
            throw std::runtime_error("tridiag: inverse iteration broke down");
        for (double& v : y) v /= ynrm;
        x = std::move(y);
        const double residual = 1.0 / ynrm;
        if (it >= 1 && residual <= 1e-13 * scale) accepted = true;
        if (it >= 2 && ynrm <= 4.0 * prev_growth && residual <= 1e-6 * scale)
            accepted = true;
        prev_growth = ynrm;
    }
    if (!accepted && prev_growth > 0.0 && 1.0 / prev_growth > 1e-6 * scale)
        throw std::runtime_error("tridiag: inverse iteration did not converge");

    std::size_t imax = 0;
    for (std::size_t i = 1; i < m; ++i)
        if (std::fabs(x[i]) > std::fabs(x[imax])) imax = i;
    if (x[imax] < 0.0)
        for (double& v : x) v = -v;
    return x;
}

}  // namespace sgl
