#pragma once

// Closed-form physics for the four Burgers-type models: fluxes, sources,
// conserved densities, characteristic speeds, steady-state families and the
// Lorentz-invariance identities of the flat relativistic flux.
//
// Evolved variable per model:
//   FlatClassical      u       dt u + dr (u^2/2) = 0
//   FlatRelativistic   w       dt w + dr f_eps(w) = 0
//   GeomRelativistic   w       dt (r^2 w) + dr (r(r-2m) f_eps(w)) = 0
//   GeomPressureless   v       dt (r^2 v) + dr (r(r-2m) v^2/2) = r v^2 - m c^2

#include <string>
#include <string_view>
#include <utility>

#include "cburgers/errors.hpp"

namespace cburgers {

enum class ModelId {
    FlatClassical,
    FlatRelativistic,
    GeomRelativistic,   // model I
    GeomPressureless,   // model II
};

std::string_view to_string(ModelId id);
ModelId model_id_from_string(std::string_view name);

/// Inverse light speed eps in [0, 1]. eps = 0 selects the classical formulas.
class LightSpeed {
public:
    constexpr LightSpeed() = default;
    explicit LightSpeed(double eps);

    double eps() const { return eps_; }
    double eps2() const { return eps_ * eps_; }
    /// c = 1/eps; infinite in the classical limit.
    double c() const;
    bool classical() const { return eps_ == 0.0; }

private:
    double eps_ = 0.0;
};

/// Radial domain (2m, R]. Flat models use m = 0 and the weight omega == 1.
struct Geometry {
    double mass = 0.0;
    double r_max = 1.0;

    Geometry() = default;
    Geometry(double mass, double r_max);

    double horizon() const { return 2.0 * mass; }
    /// r (r - 2m)
    double omega(double r) const { return r * (r - 2.0 * mass); }
    /// 1 - 2m/r
    double lapse(double r) const { return 1.0 - 2.0 * mass / r; }
};

class ModelSpec {
public:
    static ModelSpec flat_classical(double r_max = 1.0);
    static ModelSpec flat_relativistic(double eps, double r_max = 1.0);
    static ModelSpec geom_relativistic(double eps, double mass, double r_max);
    static ModelSpec geom_pressureless(double eps, double mass, double r_max);
    /// Validating constructor used by config parsing.
    static ModelSpec make(ModelId id, double eps, double mass, double r_max);

    ModelId id() const { return id_; }
    const LightSpeed& light() const { return light_; }
    const Geometry& geometry() const { return geom_; }
    double eps() const { return light_.eps(); }
    double c() const { return light_.c(); }
    double mass() const { return geom_.mass; }

    bool geometric() const {
        return id_ == ModelId::GeomRelativistic || id_ == ModelId::GeomPressureless;
    }
    /// True when the evolved variable is w = T0(v) rather than a velocity.
    bool evolves_w() const {
        return id_ == ModelId::FlatRelativistic || id_ == ModelId::GeomRelativistic;
    }
    bool has_source() const { return id_ == ModelId::GeomPressureless; }
    /// Spatial flux weight: r(r-2m) for geometric models, 1 otherwise.
    double flux_weight(double r) const { return geometric() ? geom_.omega(r) : 1.0; }
    /// Time-derivative weight: r^2 for geometric models, 1 otherwise.
    double density_weight(double r) const { return geometric() ? r * r : 1.0; }

private:
    ModelSpec(ModelId id, LightSpeed light, Geometry geom)
        : id_(id), light_(light), geom_(geom) {}

    ModelId id_ = ModelId::FlatClassical;
    LightSpeed light_;
    Geometry geom_;
};

/// One member of a steady family: K > 0 and a branch sign.
/// Model II stores K (not K^2); model I stores the flux constant K = r(r-2m) f_eps(w).
/// Flat models have constant steady states; K holds |u|.
struct SteadyProfile {
    double K = 0.0;
    int sign = 1;
    ModelId model = ModelId::GeomPressureless;
};

// ---------------------------------------------------------------------------
// Flat relativistic flux and change of variables

/// f_eps(w) = (sqrt(1 + eps^2 w^2) - 1)/eps^2, evaluated as w^2/(1 + sqrt(1 + eps^2 w^2)).
double flux_f(const LightSpeed& eps, double w);
double flux_f_prime(const LightSpeed& eps, double w);
/// Positive-branch inverse of f_eps on [0, inf).
double flux_f_inverse(const LightSpeed& eps, double y);

/// w = T0(v) = v / sqrt(1 - eps^2 v^2). Throws DomainError when |v| >= 1/eps.
double v_to_w(const LightSpeed& eps, double v);
/// v = w / sqrt(1 + eps^2 w^2).
double w_to_v(const LightSpeed& eps, double w);

/// T1(v) = (1/sqrt(1 - eps^2 v^2) - 1)/eps^2 without cancellation.
double lorentz_t1(const LightSpeed& eps, double v);

// ---------------------------------------------------------------------------
// Per-model pointwise quantities

double conserved_density(const ModelSpec& spec, double r, double u);
double physical_flux(const ModelSpec& spec, double r, double u);
double source(const ModelSpec& spec, double r, double u);
/// d(flux)/du divided by d(density)/du at fixed r.
double char_speed(const ModelSpec& spec, double r, double u);

/// Physical velocity carried by the evolved variable (w_to_v for w-models).
double physical_velocity(const ModelSpec& spec, double u);
/// Evolved variable for a physical velocity (v_to_w for w-models).
double evolved_from_velocity(const ModelSpec& spec, double v);

/// Steady-family invariant per cell: K^2 for model II, the weighted flux
/// otherwise (K for model I, f(u) for flat models).
double steady_invariant(const ModelSpec& spec, double r, double u);

// ---------------------------------------------------------------------------
// Steady families

/// v_s(r) = sign * sqrt(c^2 - K^2 (1 - 2m/r)).
double steady_model2(const Geometry& geom, double c, const SteadyProfile& profile, double r);
/// w_s(r) = sign * f_eps^{-1}(K / (r(r-2m))).
double steady_model1(const Geometry& geom, const LightSpeed& eps,
                     const SteadyProfile& profile, double r);

/// (c^2 - v^2)/(1 - 2m/r): returns K^2.
double K_from_state_model2(const Geometry& geom, double c, double r, double v);
/// r(r-2m) f_eps(w): returns K.
double K_from_state_model1(const Geometry& geom, const LightSpeed& eps, double r, double w);

/// Steady profile of `spec` whose value at r_max is `u_at_rmax` (evolved variable).
SteadyProfile steady_profile_from_edge(const ModelSpec& spec, double u_at_rmax);
/// Evaluate a steady profile of any model.
double steady_value(const ModelSpec& spec, const SteadyProfile& profile, double r);

// ---------------------------------------------------------------------------
// Lorentz transformations

/// (v - V)/(1 - eps^2 V v).
double lorentz_velocity(const LightSpeed& eps, double v, double V);

struct FluxPair {
    double (*t0)(const LightSpeed&, double);
    double (*t1)(const LightSpeed&, double);
};

/// The pair (T0, T1) of the relativistic Burgers equation.
FluxPair relativistic_flux_pair();

/// Left-minus-right residuals of the two boost identities
///   g(V)(T0(v) - eps^2 V T1(v)) = T0(vb) - T0(-V)
///   g(V)(-V T0(v) + T1(v))      = T1(vb) - T1(-V)
/// with vb the boosted velocity. Both vanish for the relativistic pair.
std::pair<double, double> lorentz_identity_residuals(const LightSpeed& eps, double v, double V,
                                                     FluxPair pair = relativistic_flux_pair());

}  // namespace cburgers
