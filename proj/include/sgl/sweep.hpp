#ifndef SGL_SWEEP_HPP
#define SGL_SWEEP_HPP

#include <string>
#include <vector>

#include "sgl/bounds.hpp"
#include "sgl/potential.hpp"

namespace sgl {

struct SweepConfig {
    PotentialSpec spec;
    double L_min = 50.0;
    double L_max = 1600.0;
    int points = 9;
    double tol = 1e-9;
    int jobs = 0;            // 0: hardware concurrency (or SGL_JOBS)
    double snap_L = 0.25;    // round grid values to this quantum; 0 disables
};

/// Geometric grid of interval lengths, optionally rounded to multiples of
/// snap quantum.  Rounding keeps potential breakpoints commensurate with the
/// default cell counts, which is what lets the step-edge extrapolation stay
/// clean second order along the whole sweep.
std::vector<double> sweep_lengths(double L_min, double L_max, int points, double snap);

/// Solves every L (fanned out over worker threads, no shared mutable state)
/// and evaluates the bounds.  Row order is by L regardless of scheduling.
std::vector<SweepRecord> run_sweep(const SweepConfig& config);

extern const char* const kSweepCsvHeader;

/// Fixed-order CSV: 17-significant-digit cells, '.' decimal separator,
/// '\n' line endings; the separation cell is empty for non-step potentials.
std::string sweep_to_csv(const std::vector<SweepRecord>& rows);

int resolve_jobs(int requested);

}  // namespace sgl

#endif
