#include "cburgers/studies.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <future>
#include <limits>

#include "cburgers/errors.hpp"

namespace cburgers {

namespace {

double psi(double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; }

double default_cfl(SchemeId scheme) { return scheme == SchemeId::LF1 ? 0.9 : 0.45; }

// d f'(u)/du for the flat fluxes
double speed_derivative(const ModelSpec& flat, double u) {
    if (flat.id() == ModelId::FlatClassical) return 1.0;
    const double s = 1.0 + flat.light().eps2() * u * u;
    return 1.0 / (s * std::sqrt(s));
}

void require_flat(const ModelSpec& spec) {
    if (spec.geometric()) throw DomainError("this study needs a flat model");
}

template <typename Fn>
std::vector<double> per_level(std::size_t levels, bool concurrent, Fn&& fn) {
    std::vector<double> out(levels);
    if (!concurrent) {
        for (std::size_t k = 0; k < levels; ++k) out[k] = fn(k);
        return out;
    }
    std::vector<std::future<double>> jobs;
    for (std::size_t k = 0; k < levels; ++k) jobs.push_back(std::async(std::launch::async, fn, k));
    for (std::size_t k = 0; k < levels; ++k) out[k] = jobs[k].get();
    return out;
}

std::vector<ConvergenceRow> table(const std::vector<double>& errors, std::size_t base_cells,
                                  double length) {
    std::vector<ConvergenceRow> rows;
    for (std::size_t k = 0; k < errors.size(); ++k) {
        const std::size_t cells = base_cells << k;
        double order = std::numeric_limits<double>::quiet_NaN();
        if (k > 0 && errors[k - 1] > 1e-13 && errors[k] > 1e-13) {
            order = std::log2(errors[k - 1] / errors[k]);
        }
        rows.push_back({cells, length / static_cast<double>(cells), errors[k], order});
    }
    return rows;
}

}  // namespace

double smooth_step(double t) {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    const double a = psi(t);
    return a / (a + psi(1.0 - t));
}

double SmoothRamp::operator()(double x) const {
    return left + (right - left) * smooth_step((x - start) / width);
}

double breaking_time(const ModelSpec& flat, const SmoothRamp& ramp) {
    require_flat(flat);
    // the steepest compression sits inside the ramp; sample it densely
    constexpr int kSamples = 20000;
    const double h = 1e-6 * ramp.width;
    double worst = 0.0;
    for (int k = 1; k < kSamples; ++k) {
        const double x = ramp.start + ramp.width * k / kSamples;
        const double du = (ramp(x + h) - ramp(x - h)) / (2.0 * h);
        worst = std::min(worst, speed_derivative(flat, ramp(x)) * du);
    }
    if (worst >= 0.0) return std::numeric_limits<double>::infinity();
    return -1.0 / worst;
}

double characteristic_solution(const ModelSpec& flat, const SmoothRamp& ramp, double t,
                               double x) {
    require_flat(flat);
    const auto speed = [&](double u) { return flux_f_prime(flat.light(), u); };
    const double a_lo = std::min(speed(ramp.left), speed(ramp.right));
    const double a_hi = std::max(speed(ramp.left), speed(ramp.right));
    // x = xi + t a(u0(xi)) is increasing in xi before breaking
    double lo = x - t * a_hi;
    double hi = x - t * a_lo;
    for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        if (mid + t * speed(ramp(mid)) < x) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return ramp(0.5 * (lo + hi));
}

std::vector<double> cell_averages(const Grid& grid, const std::function<double(double)>& f) {
    static constexpr std::array<double, 5> nodes{
        -0.90617984593866399280, -0.53846931010568309104, 0.0, 0.53846931010568309104,
        0.90617984593866399280};
    static constexpr std::array<double, 5> weights{
        0.23692688505618908751, 0.47862867049936646804, 0.56888888888888888889,
        0.47862867049936646804, 0.23692688505618908751};
    std::vector<double> out(grid.size());
    const double half = 0.5 * grid.dr();
    for (std::size_t j = 0; j < grid.size(); ++j) {
        double sum = 0.0;
        for (std::size_t g = 0; g < nodes.size(); ++g) {
            sum += weights[g] * f(grid.center(j) + half * nodes[g]);
        }
        out[j] = 0.5 * sum;
    }
    return out;
}

std::vector<WbCheckRow> wb_check(const ModelSpec& spec, const SteadyProfile& profile,
                                 std::size_t n_cells, std::size_t steps) {
    const Grid grid(spec.geometry(), n_cells);
    State initial;
    initial.u.resize(n_cells);
    for (std::size_t j = 0; j < n_cells; ++j) {
        initial.u[j] = steady_value(spec, profile, grid.center(j));
    }
    const EdgeData edge = edge_data_from(initial);

    std::vector<WbCheckRow> rows;
    for (SchemeId scheme : {SchemeId::LF1, SchemeId::NT2, SchemeId::WB2}) {
        WbCheckRow row{scheme, 0.0, 0.0, steps};
        State state = initial;
        for (std::size_t n = 0; n < steps; ++n) {
            const double dt = compute_dt(spec, grid, state, default_cfl(scheme));
            StepResult res = step(scheme, spec, grid, state, dt, edge);
            for (std::size_t j = 0; j < n_cells; ++j) {
                row.max_step_drift =
                    std::max(row.max_step_drift, std::abs(res.state.u[j] - state.u[j]));
                row.total_drift =
                    std::max(row.total_drift, std::abs(res.state.u[j] - initial.u[j]));
            }
            state = std::move(res.state);
        }
        rows.push_back(row);
    }
    return rows;
}

std::vector<ConvergenceRow> convergence_flat(const ModelSpec& flat, SchemeId scheme,
                                             std::size_t base_cells, std::size_t levels,
                                             bool concurrent) {
    require_flat(flat);
    const SmoothRamp ramp;
    const double t_final = 0.5 * breaking_time(flat, ramp);
    const auto error_at = [&](std::size_t k) {
        RunConfig cfg;
        cfg.spec = flat;
        cfg.scheme = scheme;
        cfg.n_cells = base_cells << k;
        cfg.cfl = default_cfl(scheme);
        cfg.t_end = t_final;
        const Grid grid(flat.geometry(), cfg.n_cells);
        cfg.initial = InitialData::explicit_values(cell_averages(grid, ramp));
        const RunResult res = run(cfg);
        const auto exact = cell_averages(
            grid, [&](double x) { return characteristic_solution(flat, ramp, t_final, x); });
        return l1_error(grid, State{res.snapshots.back().u, t_final}, exact);
    };
    const double length = flat.geometry().r_max - flat.geometry().horizon();
    return table(per_level(levels, concurrent, error_at), base_cells, length);
}

std::vector<ConvergenceRow> convergence_steady(const ModelSpec& spec, SchemeId scheme,
                                               double v_at_R, double t_end,
                                               std::size_t base_cells, std::size_t levels,
                                               bool concurrent) {
    const auto error_at = [&](std::size_t k) {
        RunConfig cfg;
        cfg.spec = spec;
        cfg.scheme = scheme;
        cfg.n_cells = base_cells << k;
        cfg.cfl = default_cfl(scheme);
        cfg.t_end = t_end;
        cfg.initial = InitialData::steady(v_at_R);
        return run(cfg).diagnostics.back().l1_to_reference;
    };
    const double length = spec.geometry().r_max - spec.geometry().horizon();
    return table(per_level(levels, concurrent, error_at), base_cells, length);
}

double measured_shock_speed(const ModelSpec& flat, SchemeId scheme, double uL, double uR,
                            double x0, double dr, double t_end, double t_from) {
    require_flat(flat);
    const Grid grid = Grid::with_spacing(flat.geometry(), dr);
    std::vector<double> u(grid.size());
    for (std::size_t j = 0; j < grid.size(); ++j) u[j] = grid.center(j) < x0 ? uL : uR;
    RunConfig cfg;
    cfg.spec = flat;
    cfg.scheme = scheme;
    cfg.n_cells = grid.size();
    cfg.cfl = default_cfl(scheme);
    cfg.t_end = t_end;
    cfg.output_interval = t_end / 40.0;
    cfg.initial = InitialData::explicit_values(std::move(u));
    const RunResult res = run(cfg);
    return shock_speed_estimate(res.grid, res.snapshots, t_from, 0.1 * std::abs(uL - uR));
}

}  // namespace cburgers
