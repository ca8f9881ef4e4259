#include <atomic>
#include <cassert>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "cburgers/kernels.hpp"

namespace cburgers::kernels {

const KernelTable* avx2_table_impl();

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

const KernelTable* initial_table() {
    const KernelTable* best = avx2_table() ? avx2_table() : &scalar_table();
    if (const char* env = std::getenv("CBURGERS_KERNELS")) {
        const std::string choice(env);
        if (choice == "scalar") return &scalar_table();
        if (choice == "avx2" && avx2_table()) return avx2_table();
        std::fprintf(stderr, "CBURGERS_KERNELS=%s not available, using %s kernels\n", env,
                     best == &scalar_table() ? "scalar" : "avx2");
    }
    return best;
}

std::atomic<const KernelTable*>& current() {
    static std::atomic<const KernelTable*> table{initial_table()};
    return table;
}

}  // namespace

std::string_view to_string(Backend b) {
    switch (b) {
        case Backend::Scalar: return "scalar";
        case Backend::Avx2: return "avx2";
    }
    return "unknown";
}

ModelParams params_of(const ModelSpec& spec) {
    ModelParams p;
    p.id = spec.id();
    p.eps2 = spec.light().eps2();
    p.two_m = 2.0 * spec.mass();
    p.mass_c2 = spec.has_source() ? spec.mass() * (1.0 / p.eps2) : 0.0;
    return p;
}

const KernelTable* avx2_table() {
    static const KernelTable* table = cpu_has_avx2() ? avx2_table_impl() : nullptr;
    return table;
}

bool backend_available(Backend b) {
    return b == Backend::Scalar || avx2_table() != nullptr;
}

const KernelTable& active() { return *current().load(std::memory_order_acquire); }

Backend active_backend() { return active().backend; }

void select(Backend b) {
    if (!backend_available(b)) {
        throw std::runtime_error("kernel backend '" + std::string(to_string(b)) +
                                 "' is not available on this build/CPU");
    }
    current().store(b == Backend::Scalar ? &scalar_table() : avx2_table(),
                    std::memory_order_release);
}

// ---------------------------------------------------------------------------

void eval_cells(const ModelParams& p, std::span<const double> r, std::span<const double> u,
                std::span<double> flux, std::span<double> density, std::span<double> speed) {
    assert(r.size() == u.size() && flux.size() == u.size());
    assert(density.size() == u.size() && speed.size() == u.size());
    active().eval_cells(p, r.data(), u.data(), flux.data(), density.data(), speed.data(),
                        u.size());
}

void eval_source(const ModelParams& p, std::span<const double> r, std::span<const double> u,
                 std::span<double> out) {
    assert(r.size() == u.size() && out.size() == u.size());
    active().eval_source(p, r.data(), u.data(), out.data(), u.size());
}

void llf_fluxes(const ModelParams& p, std::span<const double> r, std::span<const double> uL,
                std::span<const double> uR, std::span<double> out) {
    assert(r.size() == uL.size() && uR.size() == uL.size() && out.size() == uL.size());
    active().llf_fluxes(p, r.data(), uL.data(), uR.data(), out.data(), out.size());
}

void minmod(std::span<const double> a, std::span<const double> b, std::span<double> out) {
    assert(a.size() == b.size() && out.size() == a.size());
    active().minmod(a.data(), b.data(), out.data(), out.size());
}

void central_fluxes(std::span<const double> fL, std::span<const double> fR,
                    std::span<const double> dL, std::span<const double> dR,
                    std::span<const double> sL, std::span<const double> sR, double inv_lambda,
                    std::span<double> out) {
    assert(fL.size() == out.size() && fR.size() == out.size() && dL.size() == out.size());
    assert(dR.size() == out.size() && sL.size() == out.size() && sR.size() == out.size());
    active().central_fluxes(fL.data(), fR.data(), dL.data(), dR.data(), sL.data(), sR.data(),
                            inv_lambda, out.data(), out.size());
}

void conservative_update(std::span<const double> density, std::span<const double> face_flux,
                         std::span<const double> src, double lambda, double dt,
                         std::span<double> out) {
    assert(face_flux.size() == density.size() + 1 && out.size() == density.size());
    assert(src.empty() || src.size() == density.size());
    active().conservative_update(density.data(), face_flux.data(),
                                 src.empty() ? nullptr : src.data(), lambda, dt, out.data(),
                                 out.size());
}

void predict(std::span<const double> density, std::span<const double> flux_slope,
             std::span<const double> src, double lambda, double dt, std::span<double> out) {
    assert(flux_slope.size() == density.size() && out.size() == density.size());
    assert(src.empty() || src.size() == density.size());
    active().predict(density.data(), flux_slope.data(), src.empty() ? nullptr : src.data(),
                     lambda, dt, out.data(), out.size());
}

void state_from_density(const ModelParams& p, std::span<const double> r,
                        std::span<const double> density, std::span<double> out) {
    assert(r.size() == density.size() && out.size() == density.size());
    active().state_from_density(p, r.data(), density.data(), out.data(), out.size());
}

}  // namespace cburgers::kernels
