#ifndef SGL_POTENTIAL_HPP
#define SGL_POTENTIAL_HPP

#include <string>
#include <vector>

namespace sgl {

enum class PotentialKind { Step, Trapezoid, TruncatedBump, Zero };

/// Symmetric, nonnegative potential with support [-b, +b], described by its
/// shape family plus the parameters (b, eps, gamma) that the validity checks
/// below refer to.  Immutable by convention: build one with a make_* factory
/// or from_json and treat it as a value.
struct PotentialSpec {
    PotentialKind kind = PotentialKind::Zero;
    double b = 0.5;       // half-width of the support
    double height = 0.0;  // sup norm of v (peak value)
    double eps = 0.5;     // plateau half-width; the ramp lives on [-b, -eps]
    double gamma = 0.5;   // required strict floor of v on [-eps, 0]
};

PotentialSpec make_step(double b, double height, double gamma = -1.0);
PotentialSpec make_trapezoid(double b, double eps, double height, double gamma = -1.0);
PotentialSpec make_bump(double b, double eps, double height, double gamma = -1.0);
PotentialSpec make_zero();

/// Throws std::invalid_argument unless 0 < b < inf, 0 < eps <= b,
/// height >= 0, gamma > 0 and all parameters are finite.
void validate_shape(const PotentialSpec& spec);

/// Pointwise value v(x).  Even in x by construction, exactly zero for
/// |x| > b.  At a jump of the Step family the symmetric half-value is
/// returned, so node sampling of the discontinuity stays second order.
double evaluate(const PotentialSpec& spec, double x);

/// Sup norm of v, computed from the shape parameters (equals `height` for
/// every family), never by sampling.
double norm_inf(const PotentialSpec& spec);

/// Abscissas in (0, b] where v or v' is discontinuous; grid generation
/// aligns nodes with these.  Sorted ascending.
std::vector<double> breakpoints(const PotentialSpec& spec);

/// Outcome of checking the standing assumptions on v.  Degenerate specs
/// yield false flags, never exceptions.
struct HypothesisReport {
    bool symmetric = false;
    bool nonnegative = false;
    bool compact_support = false;
    bool monotone_on_ramp = false;  // v strictly increasing on [-b, -eps]
    bool floor_on_core = false;     // inf of v over [-eps, 0] > gamma
    bool small_coupling = false;    // b^2 * ||v||_inf < 1/2
    int grid_points = 0;            // resolution used for the sampled checks

    /// All six flags; the cos^2 and L^-4 gap bounds need every one.
    bool lemma_ok() const;
    /// All but small_coupling; enough for the wavenumber separation bound.
    bool separation_ok() const;
};

/// Samples v on 10^4-point grids per check.  Strict monotonicity is tested
/// via consecutive differences; the ramp check is vacuous (true) when
/// eps == b, the limiting step case.
HypothesisReport validate_hypotheses(const PotentialSpec& spec);

std::string kind_name(PotentialKind kind);
PotentialKind kind_from_name(const std::string& name);

/// JSON schema: {"kind": "step"|"trapezoid"|"bump"|"zero",
///               "b": number, "height": number, "eps": number, "gamma": number}
/// Missing eps/gamma take the per-kind defaults of the make_* factories.
PotentialSpec spec_from_json_text(const std::string& text);
std::string spec_to_json_text(const PotentialSpec& spec);

}  // namespace sgl

#endif
