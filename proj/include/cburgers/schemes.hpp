#pragma once

// Numerical fluxes, slope limiting, steady-state (well-balanced) interface
// reconstruction, source quadrature and the three single-step updates:
//
//   LF1  first-order local Lax-Friedrichs in conservative form
//   NT2  second-order central predictor-corrector (non-staggered
//        Nessyahu-Tadmor form) with minmod-limited slopes
//   WB2  NT2 applied to traces obtained by sliding each cell's steady
//        profile to the evaluation radius; preserves every steady state
//
// All updates act on the conserved density D = r^2 u (u for flat models)
// and are written in flux form, so the model I and flat updates conserve
// sum_j D_j dr up to the two boundary fluxes. The central viscosity acts
// on u weighted by the density factor at the face radius. Edge-cell slopes
// are limited against the frozen boundary value at inflow boundaries and
// extrapolated one-sided otherwise.

#include <cstddef>
#include <string_view>

#include "cburgers/grid.hpp"
#include "cburgers/model.hpp"

namespace cburgers {

enum class SchemeId { LF1, NT2, WB2 };

std::string_view to_string(SchemeId id);
SchemeId scheme_from_string(std::string_view name);
/// Largest admissible CFL number: 1 for LF1, 1/2 for the central schemes.
double scheme_cfl_cap(SchemeId id);

double minmod(double a, double b);

/// 0.5 (F(uL) + F(uR)) - 0.5 alpha (D(uR) - D(uL)) at radius r with
/// alpha = max |char_speed| of the two states.
double llf_flux(const ModelSpec& spec, double r, double uL, double uR);

/// Exact Riemann flux at radius r. Every model's flux is convex in u with
/// its minimum at u = 0.
double godunov_flux(const ModelSpec& spec, double r, double uL, double uR);

/// Steady profile through (r, u) used to move a cell value to another
/// radius. Falls back to the constant u when no steady profile passes
/// through the cell (model II radicand negative before r_reach, zero
/// values, m = 0 for model II, flat models).
class LocalProfile {
public:
    enum class Kind { Constant, Model1, Model2 };

    static LocalProfile through(const ModelSpec& spec, double r, double u, double r_reach);

    Kind kind() const { return kind_; }
    bool reconstructs() const { return kind_ != Kind::Constant; }
    /// K for model I, K^2 for model II, the value itself when constant.
    double invariant() const { return invariant_; }
    int sign() const { return sign_; }

    /// Evolved variable at radius r.
    double at(double r) const;
    /// Weighted flux at radius r; for model I profiles the constant K, which
    /// is also the limit at the horizon where the trace itself diverges.
    double flux_at(double r) const;

private:
    LocalProfile(const ModelSpec& spec, Kind kind, double invariant, int sign)
        : spec_(spec), kind_(kind), invariant_(invariant), sign_(sign) {}

    ModelSpec spec_;
    Kind kind_;
    double invariant_;
    int sign_;
};

/// Frozen initial edge-cell values feeding the no-influx Riemann problems.
struct EdgeData {
    double left = 0.0;
    double right = 0.0;
};

EdgeData edge_data_from(const State& initial);

/// Traces on the two faces of cell j: (left face -, left face +, right face -, right face +).
struct InterfaceTraces {
    double left_minus;
    double left_plus;
    double right_minus;
    double right_plus;
};

/// Model II traces from the steady family (c^2 - v^2)/(1 - 2m/r) = K^2.
/// Edge cells take the frozen edge value as ghost neighbor.
InterfaceTraces wb_reconstruct_model2(const ModelSpec& spec, const Grid& grid, std::size_t j,
                                      const State& state, const EdgeData& edge);
/// Model I traces from the steady family r(r-2m) f_eps(w) = K.
InterfaceTraces wb_reconstruct_model1(const ModelSpec& spec, const Grid& grid, std::size_t j,
                                      const State& state, const EdgeData& edge);

/// Cell average of the model II source along the in-cell profile:
/// the exact boundary term [r(r-2m) v^2/2] of the steady identity plus a
/// 3-point Gauss-Legendre quadrature of the remainder S - d/dr(r(r-2m) v^2/2),
/// which vanishes along steady profiles.
double source_quadrature(const ModelSpec& spec, const Grid& grid, std::size_t j,
                         const LocalProfile& in_cell);

struct BoundaryFluxes {
    double left;
    double right;
};

/// Godunov fluxes at r = 2m (frozen, current) and r = R (current, frozen).
/// With `reconstruct` the edge values are first slid to the boundary face
/// along their steady profiles.
BoundaryFluxes boundary_fluxes(const ModelSpec& spec, const Grid& grid, const EdgeData& edge,
                               const State& state, bool reconstruct);

struct StepResult {
    State state;
    double flux_left = 0.0;   // face r_{-1/2}
    double flux_right = 0.0;  // face r_{n-1/2}
};

StepResult step_lf1(const ModelSpec& spec, const Grid& grid, const State& state, double dt,
                    const EdgeData& edge);
StepResult step_nt2(const ModelSpec& spec, const Grid& grid, const State& state, double dt,
                    const EdgeData& edge);
StepResult step_wb2(const ModelSpec& spec, const Grid& grid, const State& state, double dt,
                    const EdgeData& edge);
StepResult step(SchemeId scheme, const ModelSpec& spec, const Grid& grid, const State& state,
                double dt, const EdgeData& edge);

/// Throws NumericalError on non-finite values or |v| >= c for model II.
void check_admissible(const ModelSpec& spec, const State& state);

}  // namespace cburgers
