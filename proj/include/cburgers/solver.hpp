#pragma once

// Time-stepping driver: initial data, CFL control, the run loop and the
// per-snapshot diagnostics written by the CLI.

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "cburgers/grid.hpp"
#include "cburgers/model.hpp"
#include "cburgers/schemes.hpp"

namespace cburgers {

/// Initial data. Edge values are physical velocities at r = R; for w-models
/// they are converted with v_to_w before building the steady profile.
struct InitialData {
    enum class Kind { Steady, Shock, Perturbed, Explicit };

    Kind kind = Kind::Steady;
    double value_at_R = 0.0;        // Steady, Perturbed
    double left_value_at_R = 0.0;   // Shock: branch used for r < r_shock
    double right_value_at_R = 0.0;  // Shock: branch used for r > r_shock
    double r_shock = 0.5;
    /// amplitude cos^2(pi (r - center)/width) on |r - center| < width/2, in the
    /// evolved variable. Added on top of Steady or Shock data.
    double bump_center = 0.4;
    double bump_width = 0.2;
    double bump_amplitude = 0.0;
    std::vector<double> values;  // Explicit: one value per cell

    static InitialData steady(double v_at_R);
    static InitialData shock(double left_v_at_R, double right_v_at_R, double r_shock);
    static InitialData perturbed(double v_at_R, double center, double width, double amplitude);
    static InitialData explicit_values(std::vector<double> values);
};

std::string_view to_string(InitialData::Kind kind);

/// Profile the diagnostics measure l1 distance against.
enum class ReferenceKind {
    Unperturbed,  // initial data without the bump
    Initial,
};

struct RunConfig {
    ModelSpec spec = ModelSpec::flat_classical();
    SchemeId scheme = SchemeId::WB2;
    std::size_t n_cells = 100;
    double cfl = 0.45;
    double t_end = 1.0;
    InitialData initial;
    ReferenceKind reference = ReferenceKind::Unperturbed;
    /// Snapshot cadence: a time interval, a step count, or both (0 disables).
    /// t = 0 and t = t_end are always recorded.
    double output_interval = 0.0;
    std::size_t output_every_steps = 0;
    /// Safety limit on the number of steps.
    std::size_t max_steps = 50'000'000;

    /// Throws ConfigError for inconsistent settings.
    void validate() const;
};

/// Value of the (unperturbed) steady branch at r, in the evolved variable.
double steady_branch_value(const ModelSpec& spec, double v_at_R, double r);

/// Point values of the initial data at the cell centers.
State make_initial_state(const ModelSpec& spec, const Grid& grid, const InitialData& init);
/// Reference profile at the cell centers.
std::vector<double> reference_profile(const ModelSpec& spec, const Grid& grid,
                                      const InitialData& init, ReferenceKind kind);

/// cfl dr / max_j |char_speed(r_j, u_j)|; cfl dr when the maximum is below 1e-12.
double compute_dt(const ModelSpec& spec, const Grid& grid, const State& state, double cfl);
double max_char_speed(const ModelSpec& spec, const Grid& grid, const State& state);

/// sum_j D(r_j, u_j) dr
double total_mass(const ModelSpec& spec, const Grid& grid, const State& state);
double total_variation(const State& state);
/// sum_j |u_j - ref_j| dr
double l1_error(const Grid& grid, const State& state, const std::vector<double>& reference);
double l1_error(const Grid& grid, const State& state, const std::function<double(double)>& ref);

struct Snapshot {
    double t = 0.0;
    std::vector<double> u;
};

struct DiagnosticsRow {
    double t;
    double total_mass;
    double total_variation;
    double l1_to_reference;
    double dt;  // last step taken before this snapshot (0 at t = 0)
};

struct RunResult {
    Grid grid;
    std::vector<Snapshot> snapshots;
    std::vector<DiagnosticsRow> diagnostics;
    std::vector<double> reference;
    std::size_t steps = 0;
    /// max over steps of dt * max|char_speed| / dr
    double max_courant = 0.0;
};

/// Called after every step with the state before the step, the step result and dt.
using StepObserver = std::function<void(const State&, const StepResult&, double)>;

RunResult run(const RunConfig& config, const StepObserver& observer = {});

/// Least-squares slope of the steepest-jump face position against time over
/// snapshots with t >= t_from. Throws DomainError when a snapshot has no
/// jump above `min_jump`.
double shock_speed_estimate(const Grid& grid, const std::vector<Snapshot>& snapshots,
                            double t_from = 0.0, double min_jump = 1e-3);

/// Face index i (1..n-1) of the largest |u_i - u_{i-1}|.
std::size_t steepest_face(const std::vector<double>& u);

}  // namespace cburgers
