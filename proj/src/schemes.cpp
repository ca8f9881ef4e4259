#include "cburgers/schemes.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "cburgers/errors.hpp"
#include "cburgers/kernels.hpp"

namespace cburgers {

namespace {

int sign_of(double x) { return x < 0.0 ? -1 : 1; }

// Exact Riemann flux for a flux convex in x with its minimum at x = 0.
template <typename F>
double convex_riemann(double xL, double xR, F&& flux) {
    if (xL <= xR) {
        if (xL >= 0.0) return flux(xL);
        if (xR <= 0.0) return flux(xR);
        return flux(0.0);
    }
    return std::max(flux(xL), flux(xR));
}

// 3-point Gauss-Legendre on [-1, 1]
constexpr std::array<double, 3> kGaussNodes{-0.77459666924148337704, 0.0,
                                            0.77459666924148337704};
constexpr std::array<double, 3> kGaussWeights{5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0};

struct Workspace {
    std::vector<double> flux, density, speed, src;
    std::vector<double> a, b, flux_slope, u_slope;
    std::vector<double> predicted_density, predicted;
    std::vector<double> fL, fR, dL, dR, sL, sR, face_flux, new_density;

    explicit Workspace(std::size_t n)
        : flux(n), density(n), speed(n), src(n), a(n), b(n), flux_slope(n), u_slope(n),
          predicted_density(n), predicted(n), fL(n - 1), fR(n - 1), dL(n - 1), dR(n - 1),
          sL(n - 1), sR(n - 1), face_flux(n + 1), new_density(n) {}
};

// Missing neighbors of the edge cells for slope limiting. At a boundary that
// characteristics enter, the frozen edge value is data and limits the slope.
// Elsewhere (outflow, and the horizon where the speed vanishes) it carries no
// information and the neighbor is extrapolated linearly, which gives the
// one-sided difference.
struct Ghosts {
    bool left_inflow;
    bool right_inflow;
};

Ghosts ghosts_of(const ModelSpec& spec, const Grid& grid, const EdgeData& edge) {
    return {char_speed(spec, grid.face(0), edge.left) > 0.0,
            char_speed(spec, grid.face(grid.size()), edge.right) < 0.0};
}

// minmod of the one-sided differences of `values`, with frozen_left/right
// standing in for the missing neighbors at inflow boundaries.
void limited_slopes(const std::vector<double>& values, const Ghosts& g, double frozen_left,
                    double frozen_right, Workspace& ws, std::vector<double>& out) {
    const std::size_t n = values.size();
    const double left = g.left_inflow ? frozen_left : 2.0 * values[0] - values[1];
    const double right = g.right_inflow ? frozen_right : 2.0 * values[n - 1] - values[n - 2];
    for (std::size_t j = 0; j < n; ++j) {
        ws.a[j] = (j + 1 < n ? values[j + 1] : right) - values[j];
        ws.b[j] = values[j] - (j > 0 ? values[j - 1] : left);
    }
    kernels::minmod(ws.a, ws.b, out);
}

// Viscosity acts on the evolved variable, weighted by the density weight at
// the face radius. Weighting cell values at their own centers instead makes
// the r^2 growth look like a jump, which drags v past c near the horizon.
void fill_central_inputs(const ModelSpec& spec, const Grid& grid, Workspace& ws,
                         const std::vector<double>& cell_flux, const std::vector<double>& uL,
                         const std::vector<double>& uR) {
    const std::size_t n = grid.size();
    for (std::size_t i = 1; i < n; ++i) {
        const double w = spec.density_weight(grid.face(i));
        ws.fL[i - 1] = cell_flux[i - 1];
        ws.fR[i - 1] = cell_flux[i];
        ws.dL[i - 1] = w * uL[i - 1];
        ws.dR[i - 1] = w * uR[i - 1];
        ws.sL[i - 1] = w * ws.u_slope[i - 1];
        ws.sR[i - 1] = w * ws.u_slope[i];
    }
}

StepResult finish(const ModelSpec& spec, const Grid& grid, const State& state, double dt,
                  Workspace& ws) {
    StepResult out;
    out.state.t = state.t + dt;
    out.state.u.resize(grid.size());
    kernels::state_from_density(kernels::params_of(spec), grid.centers(), ws.new_density,
                                out.state.u);
    out.flux_left = ws.face_flux.front();
    out.flux_right = ws.face_flux.back();
    check_admissible(spec, out.state);
    return out;
}

double horizon_flux_model1(const ModelSpec& spec, double r_edge, double u_frozen,
                           double u_current) {
    // Along a model I steady profile the weighted flux is the constant K while
    // w itself diverges at r = 2m; the Riemann problem is posed on x = sign sqrt(K).
    const auto proxy = [&](double u) {
        return sign_of(u) * std::sqrt(K_from_state_model1(spec.geometry(), spec.light(), r_edge, u));
    };
    return convex_riemann(proxy(u_frozen), proxy(u_current), [](double x) { return x * x; });
}

}  // namespace

std::string_view to_string(SchemeId id) {
    switch (id) {
        case SchemeId::LF1: return "LF1";
        case SchemeId::NT2: return "NT2";
        case SchemeId::WB2: return "WB2";
    }
    return "unknown";
}

SchemeId scheme_from_string(std::string_view name) {
    if (name == "LF1" || name == "lf1") return SchemeId::LF1;
    if (name == "NT2" || name == "nt2") return SchemeId::NT2;
    if (name == "WB2" || name == "wb2") return SchemeId::WB2;
    throw ConfigError("unknown scheme '" + std::string(name) + "' (expected LF1, NT2, WB2)");
}

double scheme_cfl_cap(SchemeId id) { return id == SchemeId::LF1 ? 1.0 : 0.5; }

double minmod(double a, double b) {
    if (a * b > 0.0) return std::copysign(std::min(std::abs(a), std::abs(b)), a);
    return 0.0;
}

double llf_flux(const ModelSpec& spec, double r, double uL, double uR) {
    const double alpha =
        std::max(std::abs(char_speed(spec, r, uL)), std::abs(char_speed(spec, r, uR)));
    return 0.5 * (physical_flux(spec, r, uL) + physical_flux(spec, r, uR)) -
           0.5 * alpha * (conserved_density(spec, r, uR) - conserved_density(spec, r, uL));
}

double godunov_flux(const ModelSpec& spec, double r, double uL, double uR) {
    return convex_riemann(uL, uR, [&](double u) { return physical_flux(spec, r, u); });
}

// ---------------------------------------------------------------------------

LocalProfile LocalProfile::through(const ModelSpec& spec, double r, double u, double r_reach) {
    switch (spec.id()) {
        case ModelId::GeomRelativistic:
            return LocalProfile(spec, Kind::Model1,
                                K_from_state_model1(spec.geometry(), spec.light(), r, u),
                                sign_of(u));
        case ModelId::GeomPressureless: {
            if (spec.mass() == 0.0 || u == 0.0) break;
            const double c = spec.c();
            const double K2 = K_from_state_model2(spec.geometry(), c, r, u);
            if (c * c - K2 * spec.geometry().lapse(r_reach) < 0.0) break;
            return LocalProfile(spec, Kind::Model2, K2, sign_of(u));
        }
        case ModelId::FlatClassical:
        case ModelId::FlatRelativistic:
            break;
    }
    return LocalProfile(spec, Kind::Constant, u, sign_of(u));
}

double LocalProfile::at(double r) const {
    switch (kind_) {
        case Kind::Constant: return invariant_;
        case Kind::Model1:
            return sign_ * flux_f_inverse(spec_.light(), invariant_ / spec_.geometry().omega(r));
        case Kind::Model2: {
            const double c = spec_.c();
            const double radicand = c * c - invariant_ * spec_.geometry().lapse(r);
            return sign_ * std::sqrt(std::max(radicand, 0.0));
        }
    }
    return invariant_;
}

double LocalProfile::flux_at(double r) const {
    if (kind_ == Kind::Model1) return invariant_;
    return physical_flux(spec_, r, at(r));
}

EdgeData edge_data_from(const State& initial) {
    if (initial.u.empty()) throw DomainError("edge data needs a nonempty state");
    return EdgeData{initial.u.front(), initial.u.back()};
}

namespace {

InterfaceTraces slide_traces(const ModelSpec& spec, const Grid& grid, std::size_t j,
                             const State& state, const EdgeData& edge) {
    const std::size_t n = grid.size();
    if (j >= n || state.u.size() != n) throw DomainError("cell index outside the grid");
    const double dr = grid.dr();
    const double reach = grid.r_max();
    const auto profile_at = [&](std::size_t k, double u) {
        return LocalProfile::through(spec, grid.center(k), u, std::min(grid.center(k) + dr, reach));
    };
    const LocalProfile self = profile_at(j, state.u[j]);
    const double r_left = grid.face(j);
    const double r_right = grid.face(j + 1);

    InterfaceTraces t{};
    t.left_plus = self.at(r_left);
    t.right_minus = self.at(r_right);
    if (j > 0) {
        t.left_minus = profile_at(j - 1, state.u[j - 1]).at(r_left);
    } else {
        t.left_minus = profile_at(0, edge.left).at(r_left);
    }
    if (j + 1 < n) {
        t.right_plus = profile_at(j + 1, state.u[j + 1]).at(r_right);
    } else {
        t.right_plus = profile_at(n - 1, edge.right).at(r_right);
    }
    return t;
}

}  // namespace

InterfaceTraces wb_reconstruct_model2(const ModelSpec& spec, const Grid& grid, std::size_t j,
                                      const State& state, const EdgeData& edge) {
    if (spec.id() != ModelId::GeomPressureless) {
        throw DomainError("wb_reconstruct_model2 called for another model");
    }
    return slide_traces(spec, grid, j, state, edge);
}

InterfaceTraces wb_reconstruct_model1(const ModelSpec& spec, const Grid& grid, std::size_t j,
                                      const State& state, const EdgeData& edge) {
    if (spec.id() != ModelId::GeomRelativistic) {
        throw DomainError("wb_reconstruct_model1 called for another model");
    }
    return slide_traces(spec, grid, j, state, edge);
}

double source_quadrature(const ModelSpec& spec, const Grid& grid, std::size_t j,
                         const LocalProfile& in_cell) {
    if (!spec.has_source()) return 0.0;
    const Geometry& geom = spec.geometry();
    const double m = geom.mass;
    const double c = spec.c();
    const double r_lo = grid.face(j);
    const double r_hi = grid.face(j + 1);
    const double dr = grid.dr();
    const double mid = grid.center(j);

    const auto omega_term = [&](double r) {
        const double v = in_cell.at(r);
        return geom.omega(r) * (0.5 * v * v);
    };
    // S - d/dr (r(r-2m) v^2/2) along the in-cell profile
    const auto remainder = [&](double r) {
        const double v = in_cell.at(r);
        const double v2 = v * v;
        double d_omega = (r - m) * v2;
        if (in_cell.kind() == LocalProfile::Kind::Model2) {
            d_omega -= m * in_cell.invariant() * (r - 2.0 * m) / r;
        }
        return (r * v2 - m * (c * c)) - d_omega;
    };

    double quad = 0.0;
    for (std::size_t g = 0; g < kGaussNodes.size(); ++g) {
        quad += kGaussWeights[g] * remainder(mid + 0.5 * dr * kGaussNodes[g]);
    }
    return (omega_term(r_hi) - omega_term(r_lo) + 0.5 * dr * quad) / dr;
}

BoundaryFluxes boundary_fluxes(const ModelSpec& spec, const Grid& grid, const EdgeData& edge,
                               const State& state, bool reconstruct) {
    const std::size_t n = grid.size();
    const double r0 = grid.face(0);
    const double rn = grid.face(n);
    BoundaryFluxes out{};

    if (reconstruct && spec.id() == ModelId::GeomRelativistic) {
        out.left = horizon_flux_model1(spec, grid.center(0), edge.left, state.u.front());
    } else {
        double uL = edge.left;
        double uR = state.u.front();
        if (reconstruct) {
            const double c0 = grid.center(0);
            const double reach = std::min(c0 + grid.dr(), rn);
            uL = LocalProfile::through(spec, c0, uL, reach).at(r0);
            uR = LocalProfile::through(spec, c0, uR, reach).at(r0);
        }
        out.left = godunov_flux(spec, r0, uL, uR);
    }

    double uL = state.u.back();
    double uR = edge.right;
    if (reconstruct) {
        const double cn = grid.center(n - 1);
        uL = LocalProfile::through(spec, cn, uL, rn).at(rn);
        uR = LocalProfile::through(spec, cn, uR, rn).at(rn);
    }
    out.right = godunov_flux(spec, rn, uL, uR);
    return out;
}

// ---------------------------------------------------------------------------

StepResult step_lf1(const ModelSpec& spec, const Grid& grid, const State& state, double dt,
                    const EdgeData& edge) {
    const std::size_t n = grid.size();
    const auto p = kernels::params_of(spec);
    const double lambda = dt / grid.dr();
    Workspace ws(n);
    const std::span<const double> u(state.u);

    kernels::eval_cells(p, grid.centers(), u, ws.flux, ws.density, ws.speed);
    kernels::llf_fluxes(p, grid.faces().subspan(1, n - 1), u.first(n - 1), u.subspan(1),
                        std::span(ws.face_flux).subspan(1, n - 1));
    const auto bc = boundary_fluxes(spec, grid, edge, state, false);
    ws.face_flux.front() = bc.left;
    ws.face_flux.back() = bc.right;

    std::span<const double> src;
    if (spec.has_source()) {
        kernels::eval_source(p, grid.centers(), u, ws.src);
        src = ws.src;
    }
    kernels::conservative_update(ws.density, ws.face_flux, src, lambda, dt, ws.new_density);
    return finish(spec, grid, state, dt, ws);
}

StepResult step_nt2(const ModelSpec& spec, const Grid& grid, const State& state, double dt,
                    const EdgeData& edge) {
    const std::size_t n = grid.size();
    const auto p = kernels::params_of(spec);
    const double lambda = dt / grid.dr();
    Workspace ws(n);
    const std::span<const double> u(state.u);

    kernels::eval_cells(p, grid.centers(), u, ws.flux, ws.density, ws.speed);
    const double r0 = grid.center(0), rn = grid.center(n - 1);
    const Ghosts ghosts = ghosts_of(spec, grid, edge);
    limited_slopes(ws.flux, ghosts, physical_flux(spec, r0, edge.left),
                   physical_flux(spec, rn, edge.right), ws, ws.flux_slope);
    limited_slopes(state.u, ghosts, edge.left, edge.right, ws, ws.u_slope);

    std::span<const double> src;
    if (spec.has_source()) {
        kernels::eval_source(p, grid.centers(), u, ws.src);
        src = ws.src;
    }
    kernels::predict(ws.density, ws.flux_slope, src, lambda, dt, ws.predicted_density);
    kernels::state_from_density(p, grid.centers(), ws.predicted_density, ws.predicted);

    // cell fluxes at the half step; ws.speed/ws.a are scratch here
    std::vector<double> predicted_flux(n);
    kernels::eval_cells(p, grid.centers(), ws.predicted, predicted_flux, ws.a, ws.speed);
    std::vector<double> uL(state.u.begin(), state.u.end() - 1), uR(state.u.begin() + 1, state.u.end());
    fill_central_inputs(spec, grid, ws, predicted_flux, uL, uR);
    kernels::central_fluxes(ws.fL, ws.fR, ws.dL, ws.dR, ws.sL, ws.sR, 1.0 / lambda,
                            std::span(ws.face_flux).subspan(1, n - 1));
    const auto bc = boundary_fluxes(spec, grid, edge, state, false);
    ws.face_flux.front() = bc.left;
    ws.face_flux.back() = bc.right;

    if (spec.has_source()) {
        kernels::eval_source(p, grid.centers(), ws.predicted, ws.src);
    }
    kernels::conservative_update(ws.density, ws.face_flux, src, lambda, dt, ws.new_density);
    return finish(spec, grid, state, dt, ws);
}

StepResult step_wb2(const ModelSpec& spec, const Grid& grid, const State& state, double dt,
                    const EdgeData& edge) {
    const std::size_t n = grid.size();
    const auto p = kernels::params_of(spec);
    const double lambda = dt / grid.dr();
    const double dr = grid.dr();
    const double reach_max = grid.r_max();
    Workspace ws(n);
    const std::span<const double> u(state.u);

    const auto reach = [&](std::size_t j) { return std::min(grid.center(j) + dr, reach_max); };
    std::vector<LocalProfile> profiles;
    profiles.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        profiles.push_back(LocalProfile::through(spec, grid.center(j), u[j], reach(j)));
    }

    kernels::eval_cells(p, grid.centers(), u, ws.flux, ws.density, ws.speed);

    // Differences against the neighbors' steady profiles slid to r_j: these
    // vanish on steady data, so the limited slopes see only the deviation.
    std::vector<double> df_plus(n), df_minus(n), du_plus(n), du_minus(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double r = grid.center(j);
        if (j + 1 < n) {
            const double up = profiles[j + 1].at(r);
            df_plus[j] = physical_flux(spec, r, up) - ws.flux[j];
            du_plus[j] = up - u[j];
        }
        if (j > 0) {
            const double um = profiles[j - 1].at(r);
            df_minus[j] = ws.flux[j] - physical_flux(spec, r, um);
            du_minus[j] = u[j] - um;
        }
    }
    // edge cells, with the frozen edge values at their own centers (see ghosts_of)
    const Ghosts ghosts = ghosts_of(spec, grid, edge);
    const double r0 = grid.center(0), rn = grid.center(n - 1);
    df_minus[0] = ghosts.left_inflow ? ws.flux[0] - physical_flux(spec, r0, edge.left) : df_plus[0];
    du_minus[0] = ghosts.left_inflow ? u[0] - edge.left : du_plus[0];
    df_plus[n - 1] =
        ghosts.right_inflow ? physical_flux(spec, rn, edge.right) - ws.flux[n - 1] : df_minus[n - 1];
    du_plus[n - 1] = ghosts.right_inflow ? edge.right - u[n - 1] : du_minus[n - 1];
    kernels::minmod(df_plus, df_minus, ws.flux_slope);
    kernels::minmod(du_plus, du_minus, ws.u_slope);

    // The source is balanced by the steady part of the flux gradient, which the slopes exclude.
    kernels::predict(ws.density, ws.flux_slope, {}, lambda, dt, ws.predicted_density);
    kernels::state_from_density(p, grid.centers(), ws.predicted_density, ws.predicted);

    std::vector<LocalProfile> half;
    half.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        half.push_back(LocalProfile::through(spec, grid.center(j), ws.predicted[j], reach(j)));
    }

    std::vector<double> uL(n - 1), uR(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
        const double r = grid.face(i);
        uL[i - 1] = profiles[i - 1].at(r);
        uR[i - 1] = profiles[i].at(r);
    }
    fill_central_inputs(spec, grid, ws, ws.flux, uL, uR);
    for (std::size_t i = 1; i < n; ++i) {
        const double r = grid.face(i);
        ws.fL[i - 1] = half[i - 1].flux_at(r);
        ws.fR[i - 1] = half[i].flux_at(r);
    }
    kernels::central_fluxes(ws.fL, ws.fR, ws.dL, ws.dR, ws.sL, ws.sR, 1.0 / lambda,
                            std::span(ws.face_flux).subspan(1, n - 1));
    const auto bc = boundary_fluxes(spec, grid, edge, state, true);
    ws.face_flux.front() = bc.left;
    ws.face_flux.back() = bc.right;

    std::span<const double> src;
    if (spec.has_source()) {
        for (std::size_t j = 0; j < n; ++j) ws.src[j] = source_quadrature(spec, grid, j, half[j]);
        src = ws.src;
    }
    kernels::conservative_update(ws.density, ws.face_flux, src, lambda, dt, ws.new_density);
    return finish(spec, grid, state, dt, ws);
}

StepResult step(SchemeId scheme, const ModelSpec& spec, const Grid& grid, const State& state,
                double dt, const EdgeData& edge) {
    if (state.u.size() != grid.size()) throw DomainError("state length does not match the grid");
    if (!(dt > 0.0) || !std::isfinite(dt)) throw DomainError("time step must be positive");
    switch (scheme) {
        case SchemeId::LF1: return step_lf1(spec, grid, state, dt, edge);
        case SchemeId::NT2: return step_nt2(spec, grid, state, dt, edge);
        case SchemeId::WB2: return step_wb2(spec, grid, state, dt, edge);
    }
    throw DomainError("unknown scheme");
}

void check_admissible(const ModelSpec& spec, const State& state) {
    const bool bounded = spec.id() == ModelId::GeomPressureless;
    const double c = spec.c();
    for (std::size_t j = 0; j < state.u.size(); ++j) {
        const double v = state.u[j];
        if (!std::isfinite(v)) {
            throw NumericalError("non-finite cell value", state.t, j);
        }
        if (bounded && !(std::abs(v) < c)) {
            throw NumericalError("|v| reached the light speed", state.t, j);
        }
    }
}

}  // namespace cburgers
