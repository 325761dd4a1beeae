#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "sgl/eigensolver.hpp"
#include "sgl/stepsolver.hpp"

using namespace sgl;

namespace {

double neumann_level(int k, double L) { return (k * M_PI / L) * (k * M_PI / L); }

}  // namespace

TEST_CASE("discretize validation and matrix shape") {
    const auto zero = make_zero();
    CHECK_THROWS_AS(discretize(zero, -1.0, 100), std::invalid_argument);
    CHECK_THROWS_AS(discretize(zero, 0.0, 100), std::invalid_argument);
    CHECK_THROWS_AS(discretize(zero, 1.0, 1), std::invalid_argument);

    const auto disc = discretize(make_step(0.5, 1.0), 10.0, 400);
    CHECK(disc.matrix.diag.size() == 401);
    CHECK(disc.matrix.offdiag.size() == 400);
    CHECK(disc.h == doctest::Approx(0.025));
    // potential samples are exactly mirror symmetric
    for (int i = 0; i <= 400; ++i) CHECK(disc.v[i] == disc.v[400 - i]);
    // jump lands on a node and picks up the half value
    CHECK(*std::max_element(disc.v.begin(), disc.v.end()) == 1.0);
    int halves = 0;
    for (double v : disc.v) halves += (v == 0.5);
    CHECK(halves == 2);
}

TEST_CASE("free operator: kernel of the Neumann scheme is numerically zero") {
    const auto disc = discretize(make_zero(), 10.0, 500);
    const auto res = lowest_two(disc);
    CHECK(std::fabs(res.lambda0) < 1e-12);
}

TEST_CASE("free operator eigenvalues match (k pi / L)^2") {
    const auto res_pi = lowest_two(discretize(make_zero(), M_PI, 1000));
    CHECK(std::fabs(res_pi.lambda0) < 1e-10);
    CHECK(res_pi.lambda1 == doctest::Approx(1.0).epsilon(1e-5));

    const auto res_1 = lowest_two(discretize(make_zero(), 1.0, 1000));
    CHECK(res_1.lambda1 == doctest::Approx(M_PI * M_PI).epsilon(1e-5));

    const auto res_10 = lowest_two(discretize(make_zero(), 10.0, 10000));
    CHECK(res_10.gap == doctest::Approx(neumann_level(1, 10.0)).epsilon(1e-6));
}

TEST_CASE("free operator ground state is the constant function") {
    const auto res = lowest_two(discretize(make_zero(), 10.0, 2048));
    const double expected = 1.0 / std::sqrt(10.0);
    for (int i = 0; i <= res.n; i += 97)
        CHECK(res.phi0[i] == doctest::Approx(expected).epsilon(1e-10));
    CHECK(res.inf_phi / res.sup_phi == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("step ground state: minimum at the center, maxima at the walls") {
    const auto res = lowest_two(discretize(make_step(0.5, 1.0), 20.0, 4000));
    CHECK(res.inf_phi < res.sup_phi);
    const auto& phi = res.phi0;
    const auto imin = std::min_element(phi.begin(), phi.end()) - phi.begin();
    const auto imax = std::max_element(phi.begin(), phi.end()) - phi.begin();
    CHECK(imin == res.n / 2);
    CHECK((imax == 0 || imax == res.n));
    CHECK(phi[0] == doctest::Approx(phi[res.n]).epsilon(1e-12));
    // strictly positive everywhere
    CHECK(res.inf_phi > 0.0);
}

TEST_CASE("ground state of symmetric potentials is symmetric") {
    const auto res = lowest_two(discretize(make_step(0.5, 1.0), 50.0, 2000));
    double worst = 0.0;
    for (int i = 0; i <= res.n; ++i)
        worst = std::max(worst, std::fabs(res.phi0[i] - res.phi0[res.n - i]));
    CHECK(worst / res.sup_phi < 1e-8);
}

TEST_CASE("adding a barrier raises the ground energy monotonically") {
    const double L = 20.0;
    const int n = 2000;
    const double l0_zero = lowest_two(discretize(make_zero(), L, n)).lambda0;
    const double l0_weak = lowest_two(discretize(make_step(0.5, 1.0), L, n)).lambda0;
    const double l0_strong = lowest_two(discretize(make_step(0.5, 2.0), L, n)).lambda0;
    CHECK(l0_zero < 1e-12);
    CHECK(l0_weak > l0_zero);
    CHECK(l0_strong > l0_weak);
}

TEST_CASE("the step with the same sup norm majorizes every shape") {
    const double L = 50.0;
    const auto step_root = solve_ground(make_step_problem(L, 0.5, 1.0));
    for (const auto& spec :
         {make_trapezoid(0.5, 0.25, 1.0), make_bump(0.5, 0.25, 1.0)}) {
        const auto res = solve_extrapolated(spec, L, 1e-9);
        CHECK(res.lambda0 <= step_root.lambda0 * (1.0 + 1e-7));
        CHECK(res.k0 <= step_root.ktilde0 * (1.0 + 1e-7));
    }
}

TEST_CASE("ground energy decreases to zero as the box grows") {
    double prev = 1e9;
    for (double L : {25.0, 50.0, 100.0, 200.0}) {
        const double l0 = solve_extrapolated(make_step(0.5, 1.0), L, 1e-8).lambda0;
        CHECK(l0 < prev);
        CHECK(l0 > 0.0);
        prev = l0;
    }
    CHECK(prev < 1e-3);
}

TEST_CASE("Richardson order sits near 4 on the free operator") {
    const double L = M_PI;
    const double exact = 1.0;  // lambda1 for L = pi
    double err_prev = -1.0;
    for (int n : {64, 128, 256}) {
        const double err =
            std::fabs(lowest_two(discretize(make_zero(), L, n)).lambda1 - exact);
        if (err_prev > 0.0) {
            const double ratio = err_prev / err;
            CHECK(ratio > 3.5);
            CHECK(ratio < 4.5);
        }
        err_prev = err;
    }
}

TEST_CASE("extrapolated solve: free gap to requested tolerance") {
    const auto res = solve_extrapolated(make_zero(), 100.0, 1e-8);
    CHECK(res.converged);
    CHECK(res.gap == doctest::Approx(neumann_level(1, 100.0)).epsilon(1e-8));
    CHECK(res.err_estimate >= 0.0);
    CHECK(int(res.phi0.size()) == res.n + 1);
}

TEST_CASE("extrapolated solve agrees with the analytic step root") {
    const double L = 100.0;
    const auto res = solve_extrapolated(make_step(0.5, 1.0), L, 1e-9);
    const auto root = solve_ground(make_step_problem(L, 0.5, 1.0));
    CHECK(res.lambda0 ==
          doctest::Approx(root.lambda0).epsilon(1e-8));
}

TEST_CASE("grid-doubling errors of the trapezoid contract by about 4") {
    const double L = 50.0;
    std::vector<double> lam;
    for (int n : {2000, 4000, 8000, 16000})
        lam.push_back(lowest_two(discretize(make_trapezoid(0.5, 0.25, 1.0), L, n)).lambda0);
    const double d1 = std::fabs(lam[1] - lam[0]);
    const double d2 = std::fabs(lam[2] - lam[1]);
    const double d3 = std::fabs(lam[3] - lam[2]);
    CHECK(d1 / d2 > 3.3);
    CHECK(d1 / d2 < 4.7);
    CHECK(d2 / d3 > 3.3);
    CHECK(d2 / d3 < 4.7);
}

TEST_CASE("default cell counts resolve the wavelength and stay aligned") {
    for (double L : {1.0, 10.0, 25.0, 77.25, 1600.0}) {
        const int n = default_start_cells(L);
        CHECK(n >= 1024);
        CHECK(n % 2 == 0);
        CHECK(n >= int(std::ceil(40.0 * L)));
        // multiples of ceil(40 L): refinement keeps node alignment
        const long base = long(std::ceil(40.0 * L));
        CHECK(n % (base % 2 ? 2 * base : base) == 0);
    }
}

TEST_CASE("turning-point identity: flat case vanishes, step case refines") {
    const auto zero_res = lowest_two(discretize(make_zero(), 10.0, 1024));
    CHECK(turning_point_residual(zero_res, make_zero(), 10.0) < 1e-9);

    const auto spec = make_step(0.5, 1.0);
    const double L = 50.0;
    double prev = -1.0;
    for (int n : {4000, 8000, 16000}) {
        const auto res = lowest_two(discretize(spec, L, n));
        const double r = turning_point_residual(res, spec, L);
        CHECK(r > 0.0);
        if (prev > 0.0) CHECK(prev / r > 1.8);
        prev = r;
    }

    // even eigenfunction: central derivative vanishes at the midpoint
    const auto res = lowest_two(discretize(spec, L, 4000));
    const int mid = res.n / 2;
    const double h = L / res.n;
    const double dmid = (res.phi0[mid + 1] - res.phi0[mid - 1]) / (2.0 * h);
    CHECK(std::fabs(dmid) < 1e-10 * res.sup_phi / h);
}
