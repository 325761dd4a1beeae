#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdint>

#include "sgl/potential.hpp"

using namespace sgl;

namespace {

// deterministic uniform sampler for the property-style checks
struct Rng {
    std::uint64_t s = 0x243f6a8885a308d3ull;
    double next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return double(s >> 11) * 0x1.0p-53;
    }
    double uniform(double a, double b) { return a + (b - a) * next(); }
};

}  // namespace

TEST_CASE("pointwise values of the shape families") {
    const auto step = make_step(0.5, 1.0);
    CHECK(evaluate(step, 0.0) == 1.0);
    CHECK(evaluate(step, 0.6) == 0.0);
    CHECK(evaluate(step, -0.6) == 0.0);
    CHECK(evaluate(step, 0.49) == 1.0);
    CHECK(evaluate(step, 0.5) == 0.5);  // half-value on the jump

    const auto trap = make_trapezoid(1.0, 0.5, 1.0);
    CHECK(evaluate(trap, -0.75) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(evaluate(trap, 0.25) == 1.0);
    CHECK(evaluate(trap, 1.5) == 0.0);

    const auto bump = make_bump(0.5, 0.25, 2.0);
    CHECK(evaluate(bump, 0.0) == 2.0);
    CHECK(evaluate(bump, 0.5) == doctest::Approx(0.0).epsilon(1e-30));
    CHECK(evaluate(bump, 0.25) == doctest::Approx(1.0).epsilon(1e-14));

    CHECK(evaluate(make_zero(), 0.1) == 0.0);
}

TEST_CASE("symmetry, support and nonnegativity hold for sampled points") {
    Rng rng;
    const PotentialSpec specs[] = {
        make_step(0.5, 1.0),
        make_step(2.0, 0.3),
        make_trapezoid(1.0, 0.25, 2.0),
        make_bump(0.7, 0.2, 1.5),
        make_zero(),
    };
    for (const auto& spec : specs) {
        for (int i = 0; i < 2000; ++i) {
            const double x = rng.uniform(-3.0 * spec.b, 3.0 * spec.b);
            const double v = evaluate(spec, x);
            CHECK(evaluate(spec, -x) == v);  // exact mirror
            CHECK(v >= 0.0);
            if (std::fabs(x) > spec.b) CHECK(v == 0.0);
        }
    }
}

TEST_CASE("norm_inf comes from the parameters, not sampling") {
    CHECK(norm_inf(make_step(0.5, 3.0)) == 3.0);
    CHECK(norm_inf(make_trapezoid(1.0, 0.5, 2.5)) == 2.5);
    CHECK(norm_inf(make_bump(1.0, 0.5, 0.25)) == 0.25);
    CHECK(norm_inf(make_zero()) == 0.0);
}

TEST_CASE("hypothesis flags: small coupling arithmetic") {
    const auto ok = validate_hypotheses(make_step(0.5, 1.0, 0.5));
    CHECK(ok.symmetric);
    CHECK(ok.nonnegative);
    CHECK(ok.compact_support);
    CHECK(ok.monotone_on_ramp);  // vacuous for eps == b
    CHECK(ok.floor_on_core);
    CHECK(ok.small_coupling);    // 0.25 < 0.5
    CHECK(ok.lemma_ok());
    CHECK(ok.grid_points == 10000);

    const auto strong = validate_hypotheses(make_step(1.0, 1.0));
    CHECK_FALSE(strong.small_coupling);  // b^2 |v| = 1
    CHECK(strong.separation_ok());
    CHECK_FALSE(strong.lemma_ok());

    // flag equals the predicate exactly for random step parameters
    Rng rng;
    for (int i = 0; i < 200; ++i) {
        const double b = rng.uniform(0.1, 2.0);
        const double h = rng.uniform(0.0, 2.0);
        const auto rep = validate_hypotheses(make_step(b, h, 1e-3));
        CHECK(rep.small_coupling == (b * b * h < 0.5));
    }
}

TEST_CASE("hypothesis flags: ramp monotonicity and the core floor") {
    const auto trap = validate_hypotheses(make_trapezoid(0.5, 0.25, 1.0, 0.5));
    CHECK(trap.monotone_on_ramp);
    CHECK(trap.floor_on_core);
    CHECK(trap.lemma_ok());

    const auto bump = validate_hypotheses(make_bump(0.5, 0.25, 1.0, 0.4));
    CHECK(bump.monotone_on_ramp);
    CHECK(bump.floor_on_core);  // inf over [-eps,0] = cos^2(pi/4) = 1/2 > 0.4
    CHECK(bump.lemma_ok());

    const auto bump_high_gamma = validate_hypotheses(make_bump(0.5, 0.25, 1.0, 0.6));
    CHECK_FALSE(bump_high_gamma.floor_on_core);

    // zero potential never clears a positive floor
    const auto zero = validate_hypotheses(make_zero());
    CHECK_FALSE(zero.floor_on_core);
    CHECK(zero.small_coupling);
    CHECK_FALSE(zero.lemma_ok());

    // a step declared with eps < b is not strictly increasing on the ramp
    PotentialSpec bad = make_step(0.5, 1.0);
    bad.eps = 0.25;
    CHECK_FALSE(validate_hypotheses(bad).monotone_on_ramp);
}

TEST_CASE("shape validation rejects degenerate parameters") {
    PotentialSpec s = make_step(0.5, 1.0);
    s.b = -1.0;
    CHECK_THROWS_AS(validate_shape(s), std::invalid_argument);
    s = make_step(0.5, 1.0);
    s.eps = 0.7;
    CHECK_THROWS_AS(validate_shape(s), std::invalid_argument);
    s = make_step(0.5, 1.0);
    s.height = -0.5;
    CHECK_THROWS_AS(validate_shape(s), std::invalid_argument);
    s = make_step(0.5, 1.0);
    s.gamma = 0.0;
    CHECK_THROWS_AS(validate_shape(s), std::invalid_argument);
    CHECK_THROWS_AS(make_trapezoid(1.0, 2.0, 1.0), std::invalid_argument);
}

TEST_CASE("JSON schema round trip and defaults") {
    const auto spec = make_trapezoid(0.5, 0.25, 1.0, 0.4);
    const auto back = spec_from_json_text(spec_to_json_text(spec));
    CHECK(back.kind == spec.kind);
    CHECK(back.b == spec.b);
    CHECK(back.height == spec.height);
    CHECK(back.eps == spec.eps);
    CHECK(back.gamma == spec.gamma);

    const auto step = spec_from_json_text(R"({"kind":"step","b":0.5,"height":1.0})");
    CHECK(step.kind == PotentialKind::Step);
    CHECK(step.eps == 0.5);    // forced to b
    CHECK(step.gamma == 0.5);  // default height/2

    const auto zero = spec_from_json_text(R"({"kind":"zero"})");
    CHECK(zero.height == 0.0);

    CHECK_THROWS_AS(spec_from_json_text(R"({"kind":"well"})"), std::invalid_argument);
    CHECK_THROWS(spec_from_json_text("not json"));
}
