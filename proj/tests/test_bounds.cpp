#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "sgl/bounds.hpp"
#include "sgl/eigensolver.hpp"

using namespace sgl;

namespace {

EigenResult fabricated(double inf, double sup, double k0, double gap = 1.0) {
    EigenResult res;
    res.inf_phi = inf;
    res.sup_phi = sup;
    res.k0 = k0;
    res.lambda0 = k0 * k0;
    res.gap = gap;
    res.lambda1 = res.lambda0 + gap;
    return res;
}

std::vector<SweepRecord> synthetic_sweep(int points) {
    std::vector<SweepRecord> rows(points);
    for (int i = 0; i < points; ++i) {
        const double L = 50.0 * std::pow(2.0, i);
        rows[i].L = L;
        rows[i].gap = M_PI * M_PI / (L * L);
        rows[i].separation = 3.4 / L;  // ~ delta / L shape
    }
    return rows;
}

}  // namespace

TEST_CASE("ratio bound: equality pattern and the free ceiling") {
    const double L = 10.0;
    CHECK(kirsch_bound(fabricated(1.0, 1.0, 0.0), L) ==
          doctest::Approx(M_PI * M_PI / 100.0).epsilon(1e-15));
    // inf <= sup forces the bound under pi^2/L^2
    for (double inf : {0.1, 0.5, 0.99})
        CHECK(kirsch_bound(fabricated(inf, 1.0, 0.0), L) <= M_PI * M_PI / (L * L));
    CHECK_THROWS_AS(kirsch_bound(fabricated(0.0, 1.0, 0.0), L), std::domain_error);
}

TEST_CASE("cosine bound: collapsed factors and the stated prefactor") {
    const double L = 10.0;
    // zero potential: prefactor 1, cos(0) = 1
    CHECK(lemma_bound(fabricated(1.0, 1.0, 0.0), make_zero(), L) ==
          doctest::Approx(M_PI * M_PI / 100.0).epsilon(1e-15));
    // b^2 |v| = 1/4 gives (1 - 1/2)^2 = 1/4
    const auto step = make_step(0.5, 1.0);
    CHECK(lemma_bound(fabricated(1.0, 1.0, 0.0), step, L) ==
          doctest::Approx(0.25 * M_PI * M_PI / 100.0).epsilon(1e-15));

    CHECK_THROWS_AS(lemma_bound(fabricated(1.0, 1.0, 0.0), make_step(1.0, 1.0), L),
                    std::domain_error);  // coupling too strong
    CHECK_THROWS_AS(lemma_bound(fabricated(1.0, 1.0, 0.0), step, 3.0),
                    std::domain_error);  // below the L gate
}

TEST_CASE("quadratic minorant never exceeds the cosine bound") {
    const auto step = make_step(0.5, 1.0);
    const double L = 100.0;
    for (double sep : {0.01, 0.1, 0.3, 0.49}) {
        const double k0 = (0.5 * M_PI - sep) / (0.5 * L - step.b);
        const auto res = fabricated(0.5, 1.0, k0);
        const double th = compose_theorem(res, step, L);
        const double le = lemma_bound(res, step, L);
        CHECK(th <= le * (1.0 + 1e-12));
        CHECK(th > 0.0);
    }
    // outside the linearization window the composition refuses
    const double far_k0 = (0.5 * M_PI - 0.7) / (0.5 * L - step.b);
    CHECK_THROWS_AS(compose_theorem(fabricated(0.5, 1.0, far_k0), step, L),
                    std::domain_error);
}

TEST_CASE("infimum inequality check") {
    // zero potential: inf = sup and the right side collapses to sup
    CHECK(intermediate_ratio_check(fabricated(1.0, 1.0, 0.0), make_zero(), 10.0));
    // strong coupling: negative right side, vacuously true
    CHECK(intermediate_ratio_check(fabricated(0.01, 1.0, 0.0), make_step(1.0, 1.0), 10.0));
    // genuine failure: inf far below the prefactor * sup
    CHECK_FALSE(
        intermediate_ratio_check(fabricated(0.2, 1.0, 0.0), make_step(0.5, 0.5), 10.0));
}

TEST_CASE("bound report on a real solve: zero potential is the equality case") {
    const auto spec = make_zero();
    const double L = 10.0;
    const auto res = solve_extrapolated(spec, L, 1e-9);
    const auto rep = evaluate_bounds(res, spec, L, validate_hypotheses(spec));
    CHECK(rep.kirsch_rhs == doctest::Approx(res.gap).epsilon(1e-8));
    CHECK(rep.dominated_kirsch);
    CHECK(rep.dominated_lemma);
    CHECK(rep.intermediate_ok);
    CHECK_FALSE(rep.lemma_gate);  // no positive floor, hypotheses fail
}

TEST_CASE("bound report on a real solve: weak step passes every gate") {
    const auto spec = make_step(0.5, 1.0, 0.5);
    const double L = 50.0;
    const auto res = solve_extrapolated(spec, L, 1e-9);
    const auto rep = evaluate_bounds(res, spec, L, validate_hypotheses(spec));
    CHECK(rep.lemma_gate);
    CHECK(rep.theorem_gate);
    CHECK(rep.dominated_kirsch);
    CHECK(rep.dominated_lemma);
    CHECK(rep.dominated_theorem);
    CHECK(rep.intermediate_ok);
    CHECK(rep.theorem_rhs <= rep.lemma_rhs);
    CHECK(rep.kirsch_rhs > 0.0);
    CHECK(rep.gap_numeric > rep.lemma_rhs);
}

TEST_CASE("bound values keep their L^4 scale along a doubling sweep") {
    const auto spec = make_step(0.5, 1.0, 0.5);
    const auto hyp = validate_hypotheses(spec);
    double lemma_lo = 1e300, lemma_hi = 0.0;
    double theorem_lo = 1e300, theorem_hi = 0.0;
    double gap_l2_first = 0.0, gap_l2_last = 0.0;
    for (double L : {50.0, 100.0, 200.0, 400.0}) {
        const auto res = solve_extrapolated(spec, L, 1e-9);
        const auto rep = evaluate_bounds(res, spec, L, hyp);
        REQUIRE(rep.theorem_gate);
        const double L4 = L * L * L * L;
        lemma_lo = std::min(lemma_lo, rep.lemma_rhs * L4);
        lemma_hi = std::max(lemma_hi, rep.lemma_rhs * L4);
        theorem_lo = std::min(theorem_lo, rep.theorem_rhs * L4);
        theorem_hi = std::max(theorem_hi, rep.theorem_rhs * L4);
        if (gap_l2_first == 0.0) gap_l2_first = res.gap * L * L;
        gap_l2_last = res.gap * L * L;
    }
    CHECK(lemma_lo > 0.0);
    CHECK(lemma_hi / lemma_lo < 10.0);
    CHECK(theorem_lo > 0.0);
    CHECK(theorem_hi / theorem_lo < 10.0);
    // gap * L^2 stays bounded (no assertion on a limit)
    CHECK(gap_l2_last > 0.0);
    CHECK(gap_l2_last < 1.1 * gap_l2_first);
}

TEST_CASE("log-log fit recovers an exact power law") {
    const auto fit = fit_exponent(synthetic_sweep(8));
    CHECK(fit.exponent_p == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(fit.amplitude_c == doctest::Approx(M_PI * M_PI).epsilon(1e-10));
    CHECK(fit.r_squared == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(fit.points == 8);
    // beta_hat = min gap L^4 = pi^2 L^2 at the smallest L
    CHECK(fit.beta_hat == doctest::Approx(M_PI * M_PI * 2500.0).epsilon(1e-12));
    REQUIRE(fit.delta_hat.has_value());
    CHECK(*fit.delta_hat == doctest::Approx(3.4).epsilon(1e-12));
}

TEST_CASE("fit input validation") {
    auto rows = synthetic_sweep(4);
    CHECK_THROWS_AS(fit_exponent(rows), std::invalid_argument);

    rows = synthetic_sweep(6);
    std::swap(rows[2].L, rows[3].L);
    CHECK_THROWS_AS(fit_exponent(rows), std::invalid_argument);

    rows = synthetic_sweep(6);
    rows[1].gap = 0.0;
    CHECK_THROWS_AS(fit_exponent(rows), std::invalid_argument);

    // missing separation on any row drops delta_hat
    rows = synthetic_sweep(6);
    rows[3].separation.reset();
    CHECK_FALSE(fit_exponent(rows).delta_hat.has_value());
}
