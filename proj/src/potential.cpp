#include "sgl/potential.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "json.hpp"

namespace sgl {

namespace {

constexpr int kHypothesisGrid = 10000;

double default_gamma(double height) { return height > 0.0 ? 0.5 * height : 0.5; }

}  // namespace

PotentialSpec make_step(double b, double height, double gamma) {
    PotentialSpec spec;
    spec.kind = PotentialKind::Step;
    spec.b = b;
    spec.height = height;
    spec.eps = b;  // the step is the eps == b limiting case of the family
    spec.gamma = gamma > 0.0 ? gamma : default_gamma(height);
    validate_shape(spec);
    return spec;
}

PotentialSpec make_trapezoid(double b, double eps, double height, double gamma) {
    PotentialSpec spec;
    spec.kind = PotentialKind::Trapezoid;
    spec.b = b;
    spec.height = height;
    spec.eps = eps;
    spec.gamma = gamma > 0.0 ? gamma : default_gamma(height);
    validate_shape(spec);
    return spec;
}

PotentialSpec make_bump(double b, double eps, double height, double gamma) {
    PotentialSpec spec;
    spec.kind = PotentialKind::TruncatedBump;
    spec.b = b;
    spec.height = height;
    spec.eps = eps;
    spec.gamma = gamma > 0.0 ? gamma : default_gamma(height);
    validate_shape(spec);
    return spec;
}

PotentialSpec make_zero() {
    PotentialSpec spec;
    spec.kind = PotentialKind::Zero;
    spec.b = 0.5;
    spec.height = 0.0;
    spec.eps = 0.5;
    spec.gamma = 0.5;
    return spec;
}

void validate_shape(const PotentialSpec& spec) {
    if (!(spec.b > 0.0) || !std::isfinite(spec.b))
        throw std::invalid_argument("potential: b must be positive and finite");
    if (!(spec.eps > 0.0) || !(spec.eps <= spec.b))
        throw std::invalid_argument("potential: eps must satisfy 0 < eps <= b");
    if (!(spec.height >= 0.0) || !std::isfinite(spec.height))
        throw std::invalid_argument("potential: height must be nonnegative and finite");
    if (!(spec.gamma > 0.0) || !std::isfinite(spec.gamma))
        throw std::invalid_argument("potential: gamma must be positive and finite");
}

double evaluate(const PotentialSpec& spec, double x) {
    const double u = std::fabs(x);  // evaluation through |x| keeps symmetry exact
    if (u > spec.b) return 0.0;
    switch (spec.kind) {
        case PotentialKind::Zero:
            return 0.0;
        case PotentialKind::Step:
            // half-value on the jump itself
            return u == spec.b ? 0.5 * spec.height : spec.height;
        case PotentialKind::Trapezoid:
            if (u <= spec.eps) return spec.height;
            if (spec.eps == spec.b) return u == spec.b ? 0.5 * spec.height : spec.height;
            return spec.height * (spec.b - u) / (spec.b - spec.eps);
        case PotentialKind::TruncatedBump: {
            const double c = std::cos(0.5 * M_PI * u / spec.b);
            return spec.height * c * c;
        }
    }
    return 0.0;
}

double norm_inf(const PotentialSpec& spec) {
    return spec.kind == PotentialKind::Zero ? 0.0 : spec.height;
}

std::vector<double> breakpoints(const PotentialSpec& spec) {
    switch (spec.kind) {
        case PotentialKind::Zero:
            return {};
        case PotentialKind::Step:
            return {spec.b};
        case PotentialKind::Trapezoid:
            if (spec.eps < spec.b) return {spec.eps, spec.b};
            return {spec.b};
        case PotentialKind::TruncatedBump:
            return {spec.b};
    }
    return {};
}

bool HypothesisReport::lemma_ok() const {
    return symmetric && nonnegative && compact_support && monotone_on_ramp &&
           floor_on_core && small_coupling;
}

bool HypothesisReport::separation_ok() const {
    return symmetric && nonnegative && compact_support && monotone_on_ramp && floor_on_core;
}

HypothesisReport validate_hypotheses(const PotentialSpec& spec) {
    HypothesisReport report;
    report.grid_points = kHypothesisGrid;
    if (!(spec.b > 0.0) || !(spec.eps > 0.0) || spec.eps > spec.b) return report;

    const int m = kHypothesisGrid;
    bool symmetric = true, nonnegative = true, compact = true;
    for (int i = 0; i <= m; ++i) {
        const double x = 2.0 * spec.b * (double(i) / m);  // [0, 2b]
        const double vp = evaluate(spec, x);
        if (evaluate(spec, -x) != vp) symmetric = false;
        if (!(vp >= 0.0)) nonnegative = false;
        if (x > spec.b && vp != 0.0) compact = false;
    }
    report.symmetric = symmetric;
    report.nonnegative = nonnegative;
    report.compact_support = compact;

    if (spec.eps == spec.b) {
        // ramp interval degenerates to a point; nothing to check
        report.monotone_on_ramp = true;
    } else {
        bool increasing = true;
        double prev = evaluate(spec, -spec.b);
        for (int i = 1; i <= m; ++i) {
            const double x = -spec.b + (spec.b - spec.eps) * (double(i) / m);
            const double v = evaluate(spec, x);
            if (!(v > prev)) {
                increasing = false;
                break;
            }
            prev = v;
        }
        report.monotone_on_ramp = increasing;
    }

    // cell midpoints of [-eps, 0]: the essential infimum is what matters,
    // and the half-value convention at a jump endpoint must not leak in
    double core_inf = std::numeric_limits<double>::infinity();
    for (int i = 0; i < m; ++i) {
        const double x = -spec.eps + spec.eps * ((double(i) + 0.5) / m);
        core_inf = std::min(core_inf, evaluate(spec, x));
    }
    report.floor_on_core = core_inf > spec.gamma;

    report.small_coupling = spec.b * spec.b * norm_inf(spec) < 0.5;
    return report;
}

std::string kind_name(PotentialKind kind) {
    switch (kind) {
        case PotentialKind::Step: return "step";
        case PotentialKind::Trapezoid: return "trapezoid";
        case PotentialKind::TruncatedBump: return "bump";
        case PotentialKind::Zero: return "zero";
    }
    return "zero";
}

PotentialKind kind_from_name(const std::string& name) {
    if (name == "step") return PotentialKind::Step;
    if (name == "trapezoid") return PotentialKind::Trapezoid;
    if (name == "bump") return PotentialKind::TruncatedBump;
    if (name == "zero") return PotentialKind::Zero;
    throw std::invalid_argument("potential: unknown kind \"" + name + "\"");
}

PotentialSpec spec_from_json_text(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    PotentialSpec spec;
    spec.kind = kind_from_name(j.at("kind").get<std::string>());
    spec.b = j.value("b", 0.5);
    spec.height = j.value("height", spec.kind == PotentialKind::Zero ? 0.0 : 1.0);
    if (spec.kind == PotentialKind::Zero) spec.height = 0.0;
    double eps_default = spec.b;
    if (spec.kind == PotentialKind::Trapezoid || spec.kind == PotentialKind::TruncatedBump)
        eps_default = 0.5 * spec.b;
    spec.eps = j.value("eps", eps_default);
    if (spec.kind == PotentialKind::Step) spec.eps = spec.b;
    spec.gamma = j.value("gamma", default_gamma(spec.height));
    validate_shape(spec);
    return spec;
}

std::string spec_to_json_text(const PotentialSpec& spec) {
    nlohmann::json j;
    j["kind"] = kind_name(spec.kind);
    j["b"] = spec.b;
    j["height"] = spec.height;
    j["eps"] = spec.eps;
    j["gamma"] = spec.gamma;
    return j.dump();
}

}  // namespace sgl
