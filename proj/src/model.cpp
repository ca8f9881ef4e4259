#include "cburgers/model.hpp"

#include <cmath>
#include <limits>

namespace cburgers {

namespace {

int sign_of(double x) { return x < 0.0 ? -1 : 1; }

void require_outside_horizon(const Geometry& geom, double r, const char* where) {
    if (!(r > geom.horizon())) {
        throw DomainError(std::string(where) + ": r must lie strictly outside r = 2m");
    }
}

// 1 - eps^2 v^2 as a product, exact near the light cone.
double one_minus_eps2v2(const LightSpeed& eps, double v) {
    const double ev = eps.eps() * v;
    return (1.0 - ev) * (1.0 + ev);
}

void require_subluminal(const LightSpeed& eps, double v, const char* where) {
    if (!eps.classical() && !(std::abs(eps.eps() * v) < 1.0)) {
        throw DomainError(std::string(where) + ": |v| must be below the light speed 1/eps");
    }
}

}  // namespace

std::string_view to_string(ModelId id) {
    switch (id) {
        case ModelId::FlatClassical: return "flat-classical";
        case ModelId::FlatRelativistic: return "flat-relativistic";
        case ModelId::GeomRelativistic: return "geom-relativistic";
        case ModelId::GeomPressureless: return "geom-pressureless";
    }
    return "unknown";
}

ModelId model_id_from_string(std::string_view name) {
    if (name == "flat-classical" || name == "classical") return ModelId::FlatClassical;
    if (name == "flat-relativistic") return ModelId::FlatRelativistic;
    if (name == "geom-relativistic" || name == "model-1" || name == "I")
        return ModelId::GeomRelativistic;
    if (name == "geom-pressureless" || name == "model-2" || name == "II")
        return ModelId::GeomPressureless;
    throw DomainError("unknown model '" + std::string(name) +
                      "' (expected flat-classical, flat-relativistic, geom-relativistic, "
                      "geom-pressureless)");
}

LightSpeed::LightSpeed(double eps) : eps_(eps) {
    if (!(eps >= 0.0 && eps <= 1.0)) {
        throw DomainError("inverse light speed eps must lie in [0, 1]");
    }
}

double LightSpeed::c() const {
    return classical() ? std::numeric_limits<double>::infinity() : 1.0 / eps_;
}

Geometry::Geometry(double mass_, double r_max_) : mass(mass_), r_max(r_max_) {
    if (!(mass >= 0.0) || !std::isfinite(mass)) throw DomainError("mass must be >= 0");
    if (!(r_max > 2.0 * mass) || !std::isfinite(r_max)) {
        throw DomainError("outer radius R must exceed the horizon radius 2m");
    }
}

ModelSpec ModelSpec::flat_classical(double r_max) {
    return ModelSpec(ModelId::FlatClassical, LightSpeed(0.0), Geometry(0.0, r_max));
}

ModelSpec ModelSpec::flat_relativistic(double eps, double r_max) {
    return make(ModelId::FlatRelativistic, eps, 0.0, r_max);
}

ModelSpec ModelSpec::geom_relativistic(double eps, double mass, double r_max) {
    return make(ModelId::GeomRelativistic, eps, mass, r_max);
}

ModelSpec ModelSpec::geom_pressureless(double eps, double mass, double r_max) {
    return make(ModelId::GeomPressureless, eps, mass, r_max);
}

ModelSpec ModelSpec::make(ModelId id, double eps, double mass, double r_max) {
    switch (id) {
        case ModelId::FlatClassical:
            return ModelSpec(id, LightSpeed(0.0), Geometry(0.0, r_max));
        case ModelId::FlatRelativistic:
            if (!(eps > 0.0)) throw DomainError("flat-relativistic requires eps > 0");
            return ModelSpec(id, LightSpeed(eps), Geometry(0.0, r_max));
        case ModelId::GeomRelativistic:
        case ModelId::GeomPressureless:
            if (!(eps > 0.0)) throw DomainError(std::string(to_string(id)) + " requires eps > 0");
            return ModelSpec(id, LightSpeed(eps), Geometry(mass, r_max));
    }
    throw DomainError("unknown model id");
}

// ---------------------------------------------------------------------------

double flux_f(const LightSpeed& eps, double w) {
    if (eps.classical()) return 0.5 * w * w;
    return w * w / (1.0 + std::sqrt(1.0 + eps.eps2() * w * w));
}

double flux_f_prime(const LightSpeed& eps, double w) {
    if (eps.classical()) return w;
    return w / std::sqrt(1.0 + eps.eps2() * w * w);
}

double flux_f_inverse(const LightSpeed& eps, double y) {
    if (!(y >= 0.0)) throw DomainError("flux_f_inverse: f_eps takes only nonnegative values");
    if (eps.classical()) return std::sqrt(2.0 * y);
    return std::sqrt(y * (2.0 + eps.eps2() * y));
}

double v_to_w(const LightSpeed& eps, double v) {
    if (eps.classical()) return v;
    require_subluminal(eps, v, "v_to_w");
    return v / std::sqrt(one_minus_eps2v2(eps, v));
}

double w_to_v(const LightSpeed& eps, double w) {
    if (eps.classical()) return w;
    return w / std::sqrt(1.0 + eps.eps2() * w * w);
}

double lorentz_t1(const LightSpeed& eps, double v) {
    if (eps.classical()) return 0.5 * v * v;
    require_subluminal(eps, v, "lorentz_t1");
    const double s = std::sqrt(one_minus_eps2v2(eps, v));
    return v * v / (s * (1.0 + s));
}

// ---------------------------------------------------------------------------

double conserved_density(const ModelSpec& spec, double r, double u) {
    return spec.geometric() ? r * r * u : u;
}

double physical_flux(const ModelSpec& spec, double r, double u) {
    switch (spec.id()) {
        case ModelId::FlatClassical: return 0.5 * u * u;
        case ModelId::FlatRelativistic: return flux_f(spec.light(), u);
        case ModelId::GeomRelativistic:
            return spec.geometry().omega(r) * flux_f(spec.light(), u);
        case ModelId::GeomPressureless: return spec.geometry().omega(r) * (0.5 * u * u);
    }
    return 0.0;
}

double source(const ModelSpec& spec, double r, double u) {
    if (!spec.has_source()) return 0.0;
    const double c2 = 1.0 / spec.light().eps2();
    return r * u * u - spec.mass() * c2;
}

double char_speed(const ModelSpec& spec, double r, double u) {
    const double two_m = 2.0 * spec.mass();
    switch (spec.id()) {
        case ModelId::FlatClassical: return u;
        case ModelId::FlatRelativistic: return flux_f_prime(spec.light(), u);
        case ModelId::GeomRelativistic:
            return ((r - two_m) / r) * flux_f_prime(spec.light(), u);
        case ModelId::GeomPressureless: return ((r - two_m) / r) * u;
    }
    return 0.0;
}

double physical_velocity(const ModelSpec& spec, double u) {
    return spec.evolves_w() ? w_to_v(spec.light(), u) : u;
}

double evolved_from_velocity(const ModelSpec& spec, double v) {
    return spec.evolves_w() ? v_to_w(spec.light(), v) : v;
}

double steady_invariant(const ModelSpec& spec, double r, double u) {
    if (spec.id() == ModelId::GeomPressureless) {
        return K_from_state_model2(spec.geometry(), spec.c(), r, u);
    }
    return physical_flux(spec, r, u);
}

// ---------------------------------------------------------------------------

double steady_model2(const Geometry& geom, double c, const SteadyProfile& profile, double r) {
    if (r < geom.horizon()) throw DomainError("steady_model2: r inside the horizon");
    const double radicand = c * c - profile.K * profile.K * geom.lapse(r);
    if (radicand < 0.0) {
        throw DomainError("steady_model2: c^2 - K^2 (1 - 2m/r) is negative at r = " +
                          std::to_string(r));
    }
    return profile.sign * std::sqrt(radicand);
}

double steady_model1(const Geometry& geom, const LightSpeed& eps, const SteadyProfile& profile,
                     double r) {
    require_outside_horizon(geom, r, "steady_model1");
    if (!(profile.K >= 0.0)) throw DomainError("steady_model1: K must be nonnegative");
    return profile.sign * flux_f_inverse(eps, profile.K / geom.omega(r));
}

double K_from_state_model2(const Geometry& geom, double c, double r, double v) {
    require_outside_horizon(geom, r, "K_from_state_model2");
    const double gap = (c - v) * (c + v);
    if (gap < 0.0) throw DomainError("K_from_state_model2: |v| exceeds c");
    return gap / geom.lapse(r);
}

double K_from_state_model1(const Geometry& geom, const LightSpeed& eps, double r, double w) {
    require_outside_horizon(geom, r, "K_from_state_model1");
    return geom.omega(r) * flux_f(eps, w);
}

SteadyProfile steady_profile_from_edge(const ModelSpec& spec, double u_at_rmax) {
    const double R = spec.geometry().r_max;
    SteadyProfile p;
    p.model = spec.id();
    p.sign = sign_of(u_at_rmax);
    switch (spec.id()) {
        case ModelId::GeomPressureless:
            p.K = std::sqrt(K_from_state_model2(spec.geometry(), spec.c(), R, u_at_rmax));
            break;
        case ModelId::GeomRelativistic:
            p.K = K_from_state_model1(spec.geometry(), spec.light(), R, u_at_rmax);
            break;
        case ModelId::FlatClassical:
        case ModelId::FlatRelativistic:
            p.K = std::abs(u_at_rmax);
            break;
    }
    return p;
}

double steady_value(const ModelSpec& spec, const SteadyProfile& profile, double r) {
    if (profile.model != spec.id()) {
        throw DomainError("steady profile belongs to a different model");
    }
    switch (spec.id()) {
        case ModelId::GeomPressureless:
            return steady_model2(spec.geometry(), spec.c(), profile, r);
        case ModelId::GeomRelativistic:
            return steady_model1(spec.geometry(), spec.light(), profile, r);
        case ModelId::FlatClassical:
        case ModelId::FlatRelativistic:
            return profile.sign * profile.K;
    }
    return 0.0;
}

// ---------------------------------------------------------------------------

double lorentz_velocity(const LightSpeed& eps, double v, double V) {
    if (eps.classical()) return v - V;
    require_subluminal(eps, v, "lorentz_velocity");
    require_subluminal(eps, V, "lorentz_velocity");
    return (v - V) / (1.0 - eps.eps2() * V * v);
}

FluxPair relativistic_flux_pair() { return FluxPair{&v_to_w, &lorentz_t1}; }

std::pair<double, double> lorentz_identity_residuals(const LightSpeed& eps, double v, double V,
                                                     FluxPair pair) {
    const double boosted = lorentz_velocity(eps, v, V);
    const double gamma = eps.classical() ? 1.0 : 1.0 / std::sqrt(one_minus_eps2v2(eps, V));
    const double t0 = pair.t0(eps, v);
    const double t1 = pair.t1(eps, v);
    const double first =
        gamma * (t0 - eps.eps2() * V * t1) - (pair.t0(eps, boosted) - pair.t0(eps, -V));
    const double second = gamma * (-V * t0 + t1) - (pair.t1(eps, boosted) - pair.t1(eps, -V));
    return {first, second};
}

}  // namespace cburgers
