#include <algorithm>
#include <cmath>
#include <vector>

#include <doctest.h>

#include "cburgers/schemes.hpp"
#include "cburgers/solver.hpp"

using namespace cburgers;
using doctest::Approx;

namespace {

const SchemeId kAll[] = {SchemeId::LF1, SchemeId::NT2, SchemeId::WB2};

State steady_state(const ModelSpec& spec, const Grid& g, const SteadyProfile& p) {
    State s;
    for (std::size_t j = 0; j < g.size(); ++j) s.u.push_back(steady_value(spec, p, g.center(j)));
    return s;
}

// Brute-force Riemann flux: extremum of F over samples of the interval.
double brute_riemann(const ModelSpec& spec, double r, double uL, double uR) {
    const double lo = std::min(uL, uR), hi = std::max(uL, uR);
    double best = uL <= uR ? INFINITY : -INFINITY;
    for (int k = 0; k <= 10000; ++k) {
        const double f = physical_flux(spec, r, lo + (hi - lo) * k / 10000.0);
        best = uL <= uR ? std::min(best, f) : std::max(best, f);
    }
    return best;
}

// Textbook local Lax-Friedrichs step for flat Burgers, frozen-edge Godunov boundaries.
std::vector<double> reference_lf_step(const std::vector<double>& u, double lambda,
                                      double left, double right) {
    const auto f = [](double x) { return 0.5 * x * x; };
    const auto god = [&](double a, double b) {
        if (a <= b) return (a > 0.0) ? f(a) : (b < 0.0 ? f(b) : 0.0);
        return std::max(f(a), f(b));
    };
    const std::size_t n = u.size();
    std::vector<double> F(n + 1);
    F[0] = god(left, u[0]);
    F[n] = god(u[n - 1], right);
    for (std::size_t i = 1; i < n; ++i) {
        const double a = std::max(std::abs(u[i - 1]), std::abs(u[i]));
        F[i] = 0.5 * (f(u[i - 1]) + f(u[i])) - 0.5 * a * (u[i] - u[i - 1]);
    }
    std::vector<double> out(n);
    for (std::size_t j = 0; j < n; ++j) out[j] = u[j] - lambda * (F[j + 1] - F[j]);
    return out;
}

}  // namespace

TEST_SUITE("schemes") {

TEST_CASE("scheme names and caps") {
    for (SchemeId s : kAll) CHECK(scheme_from_string(to_string(s)) == s);
    CHECK_THROWS_AS(scheme_from_string("WENO5"), ConfigError);
    CHECK(scheme_cfl_cap(SchemeId::LF1) == 1.0);
    CHECK(scheme_cfl_cap(SchemeId::NT2) == 0.5);
}

TEST_CASE("minmod") {
    CHECK(minmod(2.0, 3.0) == 2.0);
    CHECK(minmod(-1.0, 2.0) == 0.0);
    CHECK(minmod(-3.0, -2.0) == -2.0);
    CHECK(minmod(0.0, 4.0) == 0.0);
}

TEST_CASE("llf flux") {
    const ModelSpec fc = ModelSpec::flat_classical();
    CHECK(llf_flux(fc, 0.5, 1.0, -1.0) == 1.5);
    const ModelSpec specs[] = {fc, ModelSpec::flat_relativistic(1.0),
                               ModelSpec::geom_relativistic(1.0, 0.05, 1.0),
                               ModelSpec::geom_pressureless(1.0, 0.05, 1.0)};
    for (const auto& s : specs) {
        for (double u : {-0.6, 0.0, 0.4}) {
            CHECK(llf_flux(s, 0.6, u, u) == physical_flux(s, 0.6, u));
            CHECK(godunov_flux(s, 0.6, u, u) == physical_flux(s, 0.6, u));
        }
        // monotone: nondecreasing in uL, nonincreasing in uR
        for (double a = -0.8; a < 0.8; a += 0.1) {
            CHECK(llf_flux(s, 0.6, a + 0.05, 0.3) >= llf_flux(s, 0.6, a, 0.3) - 1e-15);
            CHECK(llf_flux(s, 0.6, 0.3, a + 0.05) <= llf_flux(s, 0.6, 0.3, a) + 1e-15);
        }
    }
}

TEST_CASE("godunov flux") {
    const ModelSpec fc = ModelSpec::flat_classical();
    const ModelSpec fr = ModelSpec::flat_relativistic(1.0);
    CHECK(godunov_flux(fc, 0.5, -1.0, 1.0) == 0.0);
    CHECK(godunov_flux(fc, 0.5, 1.0, -1.0) == 0.5);
    CHECK(godunov_flux(fr, 0.5, 1.0, -1.0) == Approx(std::sqrt(2.0) - 1.0).epsilon(1e-14));
    CHECK(godunov_flux(fr, 0.5, 1.0, -1.0) == Approx(brute_riemann(fr, 0.5, 1.0, -1.0)));
    const ModelSpec m2 = ModelSpec::geom_pressureless(1.0, 0.05, 1.0);
    for (double a : {-0.7, -0.2, 0.3, 0.8}) {
        for (double b : {-0.6, 0.1, 0.5}) {
            CHECK(godunov_flux(m2, 0.4, a, b) == Approx(brute_riemann(m2, 0.4, a, b)).epsilon(1e-7));
        }
    }
}

TEST_CASE("model II reconstruction on steady data is exact") {
    const ModelSpec s = ModelSpec::geom_pressureless(1.0, 0.05, 1.0);
    const Grid g(s.geometry(), 40);
    const SteadyProfile p{0.9, 1, ModelId::GeomPressureless};
    const State st = steady_state(s, g, p);
    const EdgeData edge = edge_data_from(st);
    for (std::size_t j = 1; j + 1 < g.size(); ++j) {
        const auto t = wb_reconstruct_model2(s, g, j, st, edge);
        const double left = steady_value(s, p, g.face(j));
        const double right = steady_value(s, p, g.face(j + 1));
        CHECK(t.left_minus == Approx(left).epsilon(1e-14));
        CHECK(t.left_plus == Approx(left).epsilon(1e-14));
        CHECK(t.right_minus == Approx(right).epsilon(1e-14));
        CHECK(t.right_plus == Approx(right).epsilon(1e-14));
    }
    CHECK_THROWS_AS(wb_reconstruct_model1(s, g, 3, st, edge), DomainError);
}

TEST_CASE("model II reconstruction with m = 0 is the identity") {
    const ModelSpec s = ModelSpec::geom_pressureless(1.0, 0.0, 1.0);
    const Grid g(s.geometry(), 10);
    State st;
    for (std::size_t j = 0; j < g.size(); ++j) st.u.push_back(0.1 * j - 0.3);
    const auto t = wb_reconstruct_model2(s, g, 4, st, edge_data_from(st));
    CHECK(t.left_minus == st.u[3]);
    CHECK(t.left_plus == st.u[4]);
    CHECK(t.right_minus == st.u[4]);
    CHECK(t.right_plus == st.u[5]);
}

TEST_CASE("reconstruction is local") {
    const ModelSpec s = ModelSpec::geom_pressureless(1.0, 0.05, 1.0);
    const Grid g(s.geometry(), 20);
    const SteadyProfile p{0.9, 1, ModelId::GeomPressureless};
    const State base = steady_state(s, g, p);
    State bumped = base;
    bumped.u[10] += 0.01;
    const EdgeData edge = edge_data_from(base);
    for (std::size_t j = 1; j + 1 < g.size(); ++j) {
        const auto a = wb_reconstruct_model2(s, g, j, base, edge);
        const auto b = wb_reconstruct_model2(s, g, j, bumped, edge);
        const int changed = (a.left_minus != b.left_minus) + (a.left_plus != b.left_plus) +
                            (a.right_minus != b.right_minus) + (a.right_plus != b.right_plus);
        if (j == 9) CHECK(changed == 1);
        if (j == 10) CHECK(changed == 2);
        if (j == 11) CHECK(changed == 1);
        if (j < 9 || j > 11) CHECK(changed == 0);
    }
}

TEST_CASE("model I reconstruction") {
    const ModelSpec s = ModelSpec::geom_relativistic(1.0, 0.05, 1.0);
    const Grid g(s.geometry(), 30);
    const SteadyProfile p{0.05, -1, ModelId::GeomRelativistic};
    const State st = steady_state(s, g, p);
    const auto t = wb_reconstruct_model1(s, g, 12, st, edge_data_from(st));
    CHECK(t.left_plus == Approx(steady_value(s, p, g.face(12))).epsilon(1e-14));
    CHECK(t.right_plus == Approx(steady_value(s, p, g.face(13))).epsilon(1e-14));

    State zero;
    zero.u.assign(g.size(), 0.0);
    const auto z = wb_reconstruct_model1(s, g, 5, zero, edge_data_from(zero));
    CHECK(z.left_minus == 0.0);
    CHECK(z.right_plus == 0.0);

    // m = 0 with constant w: the trace solves r_face^2 f(w_face) = r_j^2 f(w)
    const ModelSpec flatish = ModelSpec::geom_relativistic(1.0, 0.0, 1.0);
    const Grid g0(flatish.geometry(), 10);
    State c;
    c.u.assign(g0.size(), 0.5);
    const auto tc = wb_reconstruct_model1(flatish, g0, 4, c, edge_data_from(c));
    const double rj = g0.center(4), rf = g0.face(4);
    const double y = rj * rj * flux_f(LightSpeed(1.0), 0.5) / (rf * rf);
    CHECK(tc.left_plus == Approx(std::sqrt(y * (y + 2.0))).epsilon(1e-14));
    CHECK(tc.left_plus != 0.5);
}

TEST_CASE("source quadrature") {
    SUBCASE("m = 0, constant v: exact cell integral of r v^2") {
        const ModelSpec s = ModelSpec::geom_pressureless(1.0, 0.0, 1.0);
        const Grid g(s.geometry(), 10);
        const double v = 0.4;
        for (std::size_t j = 0; j < g.size(); ++j) {
            const auto prof = LocalProfile::through(s, g.center(j), v, g.r_max());
            const double exact =
                v * v * (g.face(j + 1) * g.face(j + 1) - g.face(j) * g.face(j)) / (2.0 * g.dr());
            CHECK(std::abs(source_quadrature(s, g, j, prof) - exact) <= 1e-10);
        }
    }
    SUBCASE("v = 0: second-order close to the pointwise source") {
        const ModelSpec s = ModelSpec::geom_pressureless(1.0, 0.05, 1.0);
        for (std::size_t n : {20u, 40u}) {
            const Grid g(s.geometry(), n);
            const auto prof = LocalProfile::through(s, g.center(7), 0.0, g.r_max());
            CHECK(source_quadrature(s, g, 7, prof) == Approx(-0.05).epsilon(1e-12));
        }
    }
    SUBCASE("steady data: flux difference balances the source") {
        const ModelSpec s = ModelSpec::geom_pressureless(1.0, 0.05, 1.0);
        const Grid g(s.geometry(), 64);
        const SteadyProfile p{0.9, 1, ModelId::GeomPressureless};
        for (std::size_t j = 0; j < g.size(); ++j) {
            const auto prof = LocalProfile::through(s, g.center(j),
                                                    steady_value(s, p, g.center(j)), g.r_max());
            const double fl = physical_flux(s, g.face(j), steady_value(s, p, g.face(j)));
            const double fr = physical_flux(s, g.face(j + 1), steady_value(s, p, g.face(j + 1)));
            const double residual = (fr - fl) / g.dr() - source_quadrature(s, g, j, prof);
            CHECK(std::abs(residual) <= 1e-13 * std::max(1.0, std::abs(fr / g.dr())));
        }
    }
    SUBCASE("no source outside model II") {
        const ModelSpec s = ModelSpec::geom_relativistic(1.0, 0.05, 1.0);
        const Grid g(s.geometry(), 8);
        CHECK(source_quadrature(s, g, 2, LocalProfile::through(s, g.center(2), 0.3, 1.0)) == 0.0);
    }
}

TEST_CASE("constant flat state is unchanged") {
    for (const ModelSpec& s : {ModelSpec::flat_classical(), ModelSpec::flat_relativistic(1.0)}) {
        const Grid g(s.geometry(), 25);
        State st;
        st.u.assign(g.size(), 0.37);
        for (SchemeId id : kAll) {
            const auto r = step(id, s, g, st, 0.01, edge_data_from(st));
            CHECK(r.state.u == st.u);
            CHECK(r.state.t == Approx(0.01));
        }
    }
}

TEST_CASE("LF1 matches an independent reference") {
    const ModelSpec s = ModelSpec::flat_classical();
    const Grid g(s.geometry(), 21);
    State st;
    st.u.assign(g.size(), -0.2);
    st.u[10] = 1.0;
    const EdgeData edge = edge_data_from(st);
    const double dt = 0.02;
    State cur = st;
    std::vector<double> ref = st.u;
    for (int n = 0; n < 5; ++n) {
        cur = step_lf1(s, g, cur, dt, edge).state;
        ref = reference_lf_step(ref, dt / g.dr(), edge.left, edge.right);
    }
    for (std::size_t j = 0; j < g.size(); ++j) CHECK(cur.u[j] == Approx(ref[j]).epsilon(1e-14));
}

TEST_CASE("WB2 keeps exact steady data") {
    const ModelSpec m2 = ModelSpec::geom_pressureless(1.0, 0.05, 1.0);
    const ModelSpec m1 = ModelSpec::geom_relativistic(1.0, 0.05, 1.0);
    const struct {
        ModelSpec spec;
        SteadyProfile p;
    } cases[] = {{m2, {0.9, 1, ModelId::GeomPressureless}},
                 {m2, {0.6, -1, ModelId::GeomPressureless}},
                 {m2, steady_profile_from_edge(m2, 0.1)},
                 {m1, {0.05, 1, ModelId::GeomRelativistic}},
                 {m1, {0.2, -1, ModelId::GeomRelativistic}}};
    for (const auto& c : cases) {
        const Grid g(c.spec.geometry(), 64);
        State st = steady_state(c.spec, g, c.p);
        const EdgeData edge = edge_data_from(st);
        const double dt = compute_dt(c.spec, g, st, 0.45);
        double worst = 0.0;
        for (int n = 0; n < 1000; ++n) {
            State next = step_wb2(c.spec, g, st, dt, edge).state;
            for (std::size_t j = 0; j < g.size(); ++j) {
                worst = std::max(worst, std::abs(next.u[j] - st.u[j]));
            }
            st = std::move(next);
        }
        CHECK(worst <= 1e-12);
    }
}

TEST_CASE("LF1 and NT2 drift from steady data, vanishing as dr shrinks") {
    // L1 rate of change away from the horizon, where the steady w stays
    // bounded as dr shrinks
    const ModelSpec s = ModelSpec::geom_relativistic(1.0, 0.05, 1.0);
    const SteadyProfile p = steady_profile_from_edge(s, v_to_w(s.light(), 0.3));
    for (SchemeId id : {SchemeId::LF1, SchemeId::NT2}) {
        std::vector<double> rates;
        for (std::size_t n : {90u, 180u, 360u, 720u}) {
            const Grid g(s.geometry(), n);
            const State st = steady_state(s, g, p);
            const double dt = 0.45 * g.dr();
            const auto r = step(id, s, g, st, dt, edge_data_from(st));
            double rate = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                if (g.center(j) >= 0.3) rate += std::abs(r.state.u[j] - st.u[j]) / dt * g.dr();
            }
            rates.push_back(rate);
        }
        CAPTURE(rates[0]);
        CAPTURE(rates[3]);
        for (std::size_t k = 1; k < rates.size(); ++k) {
            CHECK(rates[k] > 1e-6);
            const double order = std::log2(rates[k - 1] / rates[k]);
            if (id == SchemeId::LF1) {
                CHECK(order == Approx(1.0).epsilon(0.25));
            } else {
                CHECK(order >= 0.9);
            }
        }
    }
}

TEST_CASE("WB2 reduces to NT2 on flat models") {
    for (const ModelSpec& s : {ModelSpec::flat_classical(), ModelSpec::flat_relativistic(1.0)}) {
        const Grid g(s.geometry(), 50);
        State st;
        for (std::size_t j = 0; j < g.size(); ++j) {
            st.u.push_back(std::sin(6.0 * g.center(j)) + (j > 30 ? 0.5 : 0.0));
        }
        const EdgeData edge = edge_data_from(st);
        State a = st, b = st;
        for (int n = 0; n < 20; ++n) {
            a = step_nt2(s, g, a, 0.004, edge).state;
            b = step_wb2(s, g, b, 0.004, edge).state;
        }
        for (std::size_t j = 0; j < g.size(); ++j) CHECK(std::abs(a.u[j] - b.u[j]) <= 1e-14);
    }
}

TEST_CASE("NT2 creates no new extrema at a discontinuity") {
    const ModelSpec s = ModelSpec::flat_classical();
    const Grid g(s.geometry(), 40);
    State st;
    for (std::size_t j = 0; j < g.size(); ++j) st.u.push_back(g.center(j) < 0.5 ? 1.0 : 0.2);
    const EdgeData edge = edge_data_from(st);
    for (int n = 0; n < 50; ++n) {
        st = step_nt2(s, g, st, 0.45 * g.dr(), edge).state;
        for (double u : st.u) {
            CHECK(u - 1.0 <= 1e-14);
            CHECK(0.2 - u <= 1e-14);
        }
    }
}

TEST_CASE("LF1 max principle and TVD on flat Burgers") {
    const ModelSpec s = ModelSpec::flat_classical();
    const Grid g(s.geometry(), 60);
    State st;
    for (std::size_t j = 0; j < g.size(); ++j) st.u.push_back(std::sin(9.0 * g.center(j)));
    const double lo = *std::min_element(st.u.begin(), st.u.end());
    const double hi = *std::max_element(st.u.begin(), st.u.end());
    const EdgeData edge = edge_data_from(st);
    double tv = total_variation(st);
    for (int n = 0; n < 100; ++n) {
        st = step_lf1(s, g, st, compute_dt(s, g, st, 0.9), edge).state;
        for (double u : st.u) {
            CHECK(u >= lo - 1e-14);
            CHECK(u <= hi + 1e-14);
        }
        const double next = total_variation(st);
        CHECK(next <= tv + 1e-13);
        tv = next;
    }
}

TEST_CASE("admissibility checks") {
    const ModelSpec s = ModelSpec::geom_pressureless(1.0, 0.05, 1.0);
    State st;
    st.u = {0.2, 1.0, 0.3};
    CHECK_THROWS_AS(check_admissible(s, st), NumericalError);
    st.u = {0.2, NAN, 0.3};
    CHECK_THROWS_AS(check_admissible(s, st), NumericalError);
    st.u = {0.2, 0.99, -0.5};
    CHECK_NOTHROW(check_admissible(s, st));
    const Grid g(s.geometry(), 3);
    CHECK_THROWS_AS(step(SchemeId::LF1, s, g, st, -1.0, edge_data_from(st)), DomainError);
    State short_state;
    short_state.u = {0.1};
    CHECK_THROWS_AS(step(SchemeId::LF1, s, g, short_state, 0.1, edge_data_from(short_state)),
                    DomainError);
}

}  // TEST_SUITE
