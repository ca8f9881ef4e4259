// Scalar and AVX2 kernels must agree bit for bit, on odd lengths (tail
// handling) and on whole steps of every scheme.

#include <cstring>
#include <random>
#include <vector>

#include <doctest.h>

#include "cburgers/kernels.hpp"
#include "cburgers/schemes.hpp"
#include "cburgers/solver.hpp"

using namespace cburgers;
namespace k = cburgers::kernels;

namespace {

bool same_bits(const std::vector<double>& a, const std::vector<double>& b) {
    return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

std::vector<double> uniform(std::mt19937_64& rng, std::size_t n, double lo, double hi) {
    std::uniform_real_distribution<double> d(lo, hi);
    std::vector<double> v(n);
    for (auto& x : v) x = d(rng);
    return v;
}

struct Restore {
    k::Backend saved = k::active_backend();
    ~Restore() { k::select(saved); }
};

const ModelSpec kSpecs[] = {ModelSpec::flat_classical(), ModelSpec::flat_relativistic(1.0),
                            ModelSpec::geom_relativistic(1.0, 0.05, 1.0),
                            ModelSpec::geom_relativistic(0.3, 0.05, 1.0),
                            ModelSpec::geom_pressureless(1.0, 0.05, 1.0)};

}  // namespace

TEST_SUITE("kernels") {

TEST_CASE("scalar backend always available") {
    CHECK(k::backend_available(k::Backend::Scalar));
    CHECK(k::scalar_table().backend == k::Backend::Scalar);
}

TEST_CASE("table kernels agree bitwise") {
    const k::KernelTable* avx = k::avx2_table();
    if (avx == nullptr) {
        MESSAGE("AVX2 unavailable; equivalence not exercised");
        return;
    }
    const k::KernelTable& sc = k::scalar_table();
    std::mt19937_64 rng(11);
    for (std::size_t n : {1u, 3u, 4u, 7u, 64u, 101u}) {
        const auto r = uniform(rng, n, 0.11, 1.0);
        const auto u = uniform(rng, n, -0.95, 0.95);
        const auto u2 = uniform(rng, n, -0.95, 0.95);
        for (const auto& spec : kSpecs) {
            const auto p = k::params_of(spec);
            std::vector<double> f1(n), d1(n), s1(n), f2(n), d2(n), s2(n);
            sc.eval_cells(p, r.data(), u.data(), f1.data(), d1.data(), s1.data(), n);
            avx->eval_cells(p, r.data(), u.data(), f2.data(), d2.data(), s2.data(), n);
            CHECK(same_bits(f1, f2));
            CHECK(same_bits(d1, d2));
            CHECK(same_bits(s1, s2));

            sc.eval_source(p, r.data(), u.data(), f1.data(), n);
            avx->eval_source(p, r.data(), u.data(), f2.data(), n);
            CHECK(same_bits(f1, f2));

            sc.llf_fluxes(p, r.data(), u.data(), u2.data(), f1.data(), n);
            avx->llf_fluxes(p, r.data(), u.data(), u2.data(), f2.data(), n);
            CHECK(same_bits(f1, f2));

            sc.state_from_density(p, r.data(), d1.data(), f1.data(), n);
            avx->state_from_density(p, r.data(), d1.data(), f2.data(), n);
            CHECK(same_bits(f1, f2));
        }

        const auto a = uniform(rng, n, -1.0, 1.0);
        const auto b = uniform(rng, n, -1.0, 1.0);
        const auto c = uniform(rng, n, -1.0, 1.0);
        const auto d = uniform(rng, n, -1.0, 1.0);
        const auto e = uniform(rng, n, -1.0, 1.0);
        const auto f = uniform(rng, n, -1.0, 1.0);
        std::vector<double> o1(n), o2(n), faces = uniform(rng, n + 1, -1.0, 1.0);
        sc.minmod(a.data(), b.data(), o1.data(), n);
        avx->minmod(a.data(), b.data(), o2.data(), n);
        CHECK(same_bits(o1, o2));
        sc.central_fluxes(a.data(), b.data(), c.data(), d.data(), e.data(), f.data(), 3.7,
                          o1.data(), n);
        avx->central_fluxes(a.data(), b.data(), c.data(), d.data(), e.data(), f.data(), 3.7,
                            o2.data(), n);
        CHECK(same_bits(o1, o2));
        sc.conservative_update(a.data(), faces.data(), c.data(), 0.4, 0.01, o1.data(), n);
        avx->conservative_update(a.data(), faces.data(), c.data(), 0.4, 0.01, o2.data(), n);
        CHECK(same_bits(o1, o2));
        sc.conservative_update(a.data(), faces.data(), nullptr, 0.4, 0.01, o1.data(), n);
        avx->conservative_update(a.data(), faces.data(), nullptr, 0.4, 0.01, o2.data(), n);
        CHECK(same_bits(o1, o2));
        sc.predict(a.data(), b.data(), c.data(), 0.4, 0.01, o1.data(), n);
        avx->predict(a.data(), b.data(), c.data(), 0.4, 0.01, o2.data(), n);
        CHECK(same_bits(o1, o2));
    }
}

TEST_CASE("minmod kernel edge cases") {
    const std::vector<double> a = {2.0, -1.0, -3.0, 0.0, 1.0};
    const std::vector<double> b = {3.0, 2.0, -2.0, 5.0, 0.0};
    std::vector<double> out(a.size());
    k::scalar_table().minmod(a.data(), b.data(), out.data(), a.size());
    CHECK(out == std::vector<double>{2.0, 0.0, -2.0, 0.0, 0.0});
}

TEST_CASE("whole runs agree across backends") {
    if (!k::backend_available(k::Backend::Avx2)) return;
    Restore restore;
    for (const auto& spec : kSpecs) {
        for (SchemeId s : {SchemeId::LF1, SchemeId::NT2, SchemeId::WB2}) {
            RunConfig cfg;
            cfg.spec = spec;
            cfg.scheme = s;
            cfg.n_cells = 37;
            cfg.cfl = s == SchemeId::LF1 ? 0.9 : 0.45;
            cfg.t_end = 0.3;
            cfg.initial = spec.geometric() ? InitialData::perturbed(0.3, 0.5, 0.3, 0.05)
                                           : InitialData::shock(0.8, 0.2, 0.4);
            k::select(k::Backend::Scalar);
            const RunResult a = run(cfg);
            k::select(k::Backend::Avx2);
            const RunResult b = run(cfg);
            CHECK(a.steps == b.steps);
            CHECK(same_bits(a.snapshots.back().u, b.snapshots.back().u));
        }
    }
}

}  // TEST_SUITE
