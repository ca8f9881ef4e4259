#include "cburgers/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "cburgers/errors.hpp"

namespace cburgers {

namespace {

double bump(const InitialData& init, double r) {
    if (init.bump_amplitude == 0.0) return 0.0;
    const double x = r - init.bump_center;
    if (std::abs(x) >= 0.5 * init.bump_width) return 0.0;
    const double c = std::cos(std::numbers::pi * x / init.bump_width);
    return init.bump_amplitude * c * c;
}

double unperturbed_value(const ModelSpec& spec, const InitialData& init, double r) {
    switch (init.kind) {
        case InitialData::Kind::Steady:
        case InitialData::Kind::Perturbed:
            return steady_branch_value(spec, init.value_at_R, r);
        case InitialData::Kind::Shock:
            return steady_branch_value(
                spec, r < init.r_shock ? init.left_value_at_R : init.right_value_at_R, r);
        case InitialData::Kind::Explicit:
            break;
    }
    throw DomainError("explicit initial data has no closed form");
}

}  // namespace

InitialData InitialData::steady(double v_at_R) {
    InitialData d;
    d.kind = Kind::Steady;
    d.value_at_R = v_at_R;
    return d;
}

InitialData InitialData::shock(double left_v_at_R, double right_v_at_R, double r_shock) {
    InitialData d;
    d.kind = Kind::Shock;
    d.left_value_at_R = left_v_at_R;
    d.right_value_at_R = right_v_at_R;
    d.r_shock = r_shock;
    return d;
}

InitialData InitialData::perturbed(double v_at_R, double center, double width,
                                   double amplitude) {
    InitialData d;
    d.kind = Kind::Perturbed;
    d.value_at_R = v_at_R;
    d.bump_center = center;
    d.bump_width = width;
    d.bump_amplitude = amplitude;
    return d;
}

InitialData InitialData::explicit_values(std::vector<double> values) {
    InitialData d;
    d.kind = Kind::Explicit;
    d.values = std::move(values);
    return d;
}

std::string_view to_string(InitialData::Kind kind) {
    switch (kind) {
        case InitialData::Kind::Steady: return "steady";
        case InitialData::Kind::Shock: return "shock";
        case InitialData::Kind::Perturbed: return "perturbed";
        case InitialData::Kind::Explicit: return "explicit";
    }
    return "unknown";
}

void RunConfig::validate() const {
    if (n_cells < 3) throw ConfigError("cells must be at least 3");
    const double cap = scheme_cfl_cap(scheme);
    if (!(cfl > 0.0 && cfl <= cap)) {
        throw ConfigError("cfl must lie in (0, " + std::to_string(cap) + "] for scheme " +
                          std::string(to_string(scheme)));
    }
    if (!(t_end >= 0.0) || !std::isfinite(t_end)) throw ConfigError("t_end must be >= 0");
    if (!(output_interval >= 0.0)) throw ConfigError("output_interval must be >= 0");

    const double lo = spec.geometry().horizon();
    const double hi = spec.geometry().r_max;
    if (initial.kind == InitialData::Kind::Shock &&
        !(initial.r_shock > lo && initial.r_shock < hi)) {
        throw ConfigError("initial.r_shock must lie inside (2m, R)");
    }
    if (initial.bump_amplitude != 0.0) {
        if (initial.kind == InitialData::Kind::Explicit) {
            throw ConfigError("a bump cannot be added to explicit initial data");
        }
        if (!(initial.bump_width > 0.0) ||
            initial.bump_center - 0.5 * initial.bump_width < lo ||
            initial.bump_center + 0.5 * initial.bump_width > hi) {
            throw ConfigError("bump support must lie inside the domain");
        }
    }
    if (initial.kind == InitialData::Kind::Explicit && initial.values.size() != n_cells) {
        throw ConfigError("initial.values has " + std::to_string(initial.values.size()) +
                          " entries for " + std::to_string(n_cells) + " cells");
    }
}

double steady_branch_value(const ModelSpec& spec, double v_at_R, double r) {
    const double u_R = evolved_from_velocity(spec, v_at_R);
    return steady_value(spec, steady_profile_from_edge(spec, u_R), r);
}

State make_initial_state(const ModelSpec& spec, const Grid& grid, const InitialData& init) {
    State s;
    if (init.kind == InitialData::Kind::Explicit) {
        if (init.values.size() != grid.size()) {
            throw ConfigError("explicit initial data does not match the grid");
        }
        s.u = init.values;
        return s;
    }
    s.u.resize(grid.size());
    for (std::size_t j = 0; j < grid.size(); ++j) {
        const double r = grid.center(j);
        s.u[j] = unperturbed_value(spec, init, r) + bump(init, r);
    }
    return s;
}

std::vector<double> reference_profile(const ModelSpec& spec, const Grid& grid,
                                      const InitialData& init, ReferenceKind kind) {
    if (kind == ReferenceKind::Initial || init.kind == InitialData::Kind::Explicit) {
        return make_initial_state(spec, grid, init).u;
    }
    std::vector<double> ref(grid.size());
    for (std::size_t j = 0; j < grid.size(); ++j) {
        ref[j] = unperturbed_value(spec, init, grid.center(j));
    }
    return ref;
}

double max_char_speed(const ModelSpec& spec, const Grid& grid, const State& state) {
    double top = 0.0;
    for (std::size_t j = 0; j < grid.size(); ++j) {
        top = std::max(top, std::abs(char_speed(spec, grid.center(j), state.u[j])));
    }
    return top;
}

double compute_dt(const ModelSpec& spec, const Grid& grid, const State& state, double cfl) {
    const double speed = max_char_speed(spec, grid, state);
    if (speed < 1e-12) return cfl * grid.dr();
    return cfl * grid.dr() / speed;
}

double total_mass(const ModelSpec& spec, const Grid& grid, const State& state) {
    double sum = 0.0;
    for (std::size_t j = 0; j < grid.size(); ++j) {
        sum += conserved_density(spec, grid.center(j), state.u[j]);
    }
    return sum * grid.dr();
}

double total_variation(const State& state) {
    double tv = 0.0;
    for (std::size_t j = 1; j < state.u.size(); ++j) tv += std::abs(state.u[j] - state.u[j - 1]);
    return tv;
}

double l1_error(const Grid& grid, const State& state, const std::vector<double>& reference) {
    if (reference.size() != state.u.size()) throw DomainError("reference length mismatch");
    double sum = 0.0;
    for (std::size_t j = 0; j < state.u.size(); ++j) sum += std::abs(state.u[j] - reference[j]);
    return sum * grid.dr();
}

double l1_error(const Grid& grid, const State& state, const std::function<double(double)>& ref) {
    double sum = 0.0;
    for (std::size_t j = 0; j < state.u.size(); ++j) {
        sum += std::abs(state.u[j] - ref(grid.center(j)));
    }
    return sum * grid.dr();
}

RunResult run(const RunConfig& config, const StepObserver& observer) {
    config.validate();
    const ModelSpec& spec = config.spec;
    RunResult result{Grid(spec.geometry(), config.n_cells), {}, {}, {}, 0, 0.0};
    const Grid& grid = result.grid;
    State state = make_initial_state(spec, grid, config.initial);
    check_admissible(spec, state);
    const EdgeData edge = edge_data_from(state);
    result.reference = reference_profile(spec, grid, config.initial, config.reference);
    const double cap = scheme_cfl_cap(config.scheme);

    const auto record = [&](double dt) {
        result.snapshots.push_back(Snapshot{state.t, state.u});
        result.diagnostics.push_back(DiagnosticsRow{state.t, total_mass(spec, grid, state),
                                                    total_variation(state),
                                                    l1_error(grid, state, result.reference), dt});
    };
    record(0.0);

    const double interval = config.output_interval;
    std::size_t next_output = 1;
    const auto next_output_time = [&] {
        return interval > 0.0 ? static_cast<double>(next_output) * interval
                              : std::numeric_limits<double>::infinity();
    };

    while (state.t < config.t_end) {
        if (result.steps >= config.max_steps) {
            throw NumericalError("step limit reached", state.t, 0);
        }
        const double speed = max_char_speed(spec, grid, state);
        double dt = compute_dt(spec, grid, state, config.cfl);
        const double target = std::min(config.t_end, next_output_time());
        bool landed = false;
        // only ever clip downward; stretching a step would break the CFL bound
        if (state.t + dt >= target * (1.0 - 1e-14)) {
            dt = target - state.t;
            landed = true;
        }
        const double courant = dt * speed / grid.dr();
        if (courant > cap * (1.0 + 1e-12)) {
            throw NumericalError("CFL bound violated", state.t, 0);
        }
        result.max_courant = std::max(result.max_courant, courant);

        StepResult res = step(config.scheme, spec, grid, state, dt, edge);
        if (landed) res.state.t = target;
        if (observer) observer(state, res, dt);
        state = std::move(res.state);
        ++result.steps;

        bool due = false;
        if (landed && target == next_output_time()) {
            ++next_output;
            due = true;
        }
        if (config.output_every_steps > 0 && result.steps % config.output_every_steps == 0) {
            due = true;
        }
        if (state.t >= config.t_end) due = true;
        if (due) record(dt);
    }
    return result;
}

std::size_t steepest_face(const std::vector<double>& u) {
    std::size_t best = 1;
    double jump = -1.0;
    for (std::size_t i = 1; i < u.size(); ++i) {
        const double d = std::abs(u[i] - u[i - 1]);
        if (d > jump) {
            jump = d;
            best = i;
        }
    }
    return best;
}

double shock_speed_estimate(const Grid& grid, const std::vector<Snapshot>& snapshots,
                            double t_from, double min_jump) {
    std::vector<double> ts, xs;
    for (const auto& snap : snapshots) {
        if (snap.t < t_from) continue;
        const std::size_t i = steepest_face(snap.u);
        if (std::abs(snap.u[i] - snap.u[i - 1]) < min_jump) {
            throw DomainError("no discontinuity above the jump threshold at t = " +
                              std::to_string(snap.t));
        }
        ts.push_back(snap.t);
        xs.push_back(grid.face(i));
    }
    if (ts.size() < 2) throw DomainError("shock speed needs at least two snapshots");
    const double n = static_cast<double>(ts.size());
    double mt = 0.0, mx = 0.0;
    for (std::size_t k = 0; k < ts.size(); ++k) {
        mt += ts[k];
        mx += xs[k];
    }
    mt /= n;
    mx /= n;
    double stt = 0.0, stx = 0.0;
    for (std::size_t k = 0; k < ts.size(); ++k) {
        stt += (ts[k] - mt) * (ts[k] - mt);
        stx += (ts[k] - mt) * (xs[k] - mx);
    }
    return stx / stt;
}

}  // namespace cburgers
