#pragma once

// Verification studies shared by the CLI and the acceptance suite:
// well-balance drift, convergence tables and shock-speed measurement.
// The flat-model convergence oracle is the exact pre-breaking solution by
// characteristic tracing.

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "cburgers/grid.hpp"
#include "cburgers/model.hpp"
#include "cburgers/schemes.hpp"
#include "cburgers/solver.hpp"

namespace cburgers {

/// C-infinity step: 0 for t <= 0, 1 for t >= 1, built from exp(-1/t).
double smooth_step(double t);

/// u0(x) = left + (right - left) * smooth_step((x - start)/width)
struct SmoothRamp {
    double left = 1.0;
    double right = 0.5;
    double start = 0.2;
    double width = 0.4;

    double operator()(double x) const;
};

/// First time characteristics of the ramp cross for a flat model.
double breaking_time(const ModelSpec& flat, const SmoothRamp& ramp);
/// Exact value at (t, x) for t below the breaking time: x = xi + t f'(u0(xi)).
double characteristic_solution(const ModelSpec& flat, const SmoothRamp& ramp, double t, double x);

/// Cell averages of f by 5-point Gauss-Legendre per cell.
std::vector<double> cell_averages(const Grid& grid, const std::function<double(double)>& f);

struct WbCheckRow {
    SchemeId scheme;
    double max_step_drift;  // max over steps of max_j |u^{n+1}_j - u^n_j|
    double total_drift;     // max over steps of max_j |u^n_j - u^0_j|
    std::size_t steps;
};

/// Runs `steps` steps of each scheme from the exact steady profile sampled at centers.
std::vector<WbCheckRow> wb_check(const ModelSpec& spec, const SteadyProfile& profile,
                                 std::size_t n_cells, std::size_t steps);

struct ConvergenceRow {
    std::size_t cells;
    double dr;
    double l1_error;
    double order;  // NaN on the first level and when errors are at roundoff
};

/// Flat models: smooth ramp advanced to half the breaking time, L1 error of the
/// cell averages against the characteristic solution.
std::vector<ConvergenceRow> convergence_flat(const ModelSpec& flat, SchemeId scheme,
                                             std::size_t base_cells, std::size_t levels,
                                             bool concurrent = false);
/// Geometric models: steady data with edge velocity v_at_R advanced to t_end,
/// L1 error against the closed-form steady profile.
std::vector<ConvergenceRow> convergence_steady(const ModelSpec& spec, SchemeId scheme,
                                               double v_at_R, double t_end,
                                               std::size_t base_cells, std::size_t levels,
                                               bool concurrent = false);

/// Flat Riemann problem (uL, uR) with the jump at x0 on (0, 1]; shock speed
/// from the steepest-jump position over t in [t_from, t_end].
double measured_shock_speed(const ModelSpec& flat, SchemeId scheme, double uL, double uR,
                            double x0, double dr, double t_end, double t_from);

}  // namespace cburgers
