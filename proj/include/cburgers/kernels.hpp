#pragma once

// Data-parallel inner loops of the finite-volume steps.
//
// Every kernel exists as a scalar reference and, on x86-64, as an AVX2
// variant. Both perform the same IEEE operations in the same order (no FMA
// contraction), so the variants agree bit for bit; tests/test_kernels.cpp
// checks that. The active backend is picked once at startup from the CPU
// and can be forced with CBURGERS_KERNELS=scalar|avx2.

#include <cstddef>
#include <span>
#include <string_view>

#include "cburgers/model.hpp"

namespace cburgers::kernels {

enum class Backend { Scalar, Avx2 };

std::string_view to_string(Backend b);

/// Flattened model constants consumed by the kernels.
struct ModelParams {
    ModelId id = ModelId::FlatClassical;
    double eps2 = 0.0;
    double two_m = 0.0;
    double mass_c2 = 0.0;  // m c^2, model II source constant
};

ModelParams params_of(const ModelSpec& spec);

struct KernelTable {
    Backend backend;
    /// flux, density and characteristic speed at (r_j, u_j)
    void (*eval_cells)(const ModelParams&, const double* r, const double* u, double* flux,
                       double* density, double* speed, std::size_t n);
    /// r u^2 - m c^2 (model II only)
    void (*eval_source)(const ModelParams&, const double* r, const double* u, double* out,
                        std::size_t n);
    /// local Lax-Friedrichs flux at faces r with traces uL, uR
    void (*llf_fluxes)(const ModelParams&, const double* r, const double* uL, const double* uR,
                       double* out, std::size_t n);
    void (*minmod)(const double* a, const double* b, double* out, std::size_t n);
    /// 0.5(fL+fR) - 0.5 inv_lambda (dR-dL) + 0.25 inv_lambda (sL+sR)
    void (*central_fluxes)(const double* fL, const double* fR, const double* dL,
                           const double* dR, const double* sL, const double* sR,
                           double inv_lambda, double* out, std::size_t n);
    /// density_j - lambda (flux_{j+1} - flux_j) + dt src_j; src may be null
    void (*conservative_update)(const double* density, const double* face_flux,
                                const double* src, double lambda, double dt, double* out,
                                std::size_t n);
    /// density_j - 0.5 lambda slope_j + 0.5 dt src_j; src may be null
    void (*predict)(const double* density, const double* flux_slope, const double* src,
                    double lambda, double dt, double* out, std::size_t n);
    /// evolved variable from conserved density at r
    void (*state_from_density)(const ModelParams&, const double* r, const double* density,
                               double* out, std::size_t n);
};

const KernelTable& scalar_table();
/// nullptr when the build or the CPU lacks AVX2.
const KernelTable* avx2_table();

bool backend_available(Backend b);
/// Table used by the schemes. Thread-safe.
const KernelTable& active();
Backend active_backend();
/// Force a backend (tests, benchmarking). Throws if unavailable.
void select(Backend b);

// Span wrappers over the active table.

void eval_cells(const ModelParams& p, std::span<const double> r, std::span<const double> u,
                std::span<double> flux, std::span<double> density, std::span<double> speed);
void eval_source(const ModelParams& p, std::span<const double> r, std::span<const double> u,
                 std::span<double> out);
void llf_fluxes(const ModelParams& p, std::span<const double> r, std::span<const double> uL,
                std::span<const double> uR, std::span<double> out);
void minmod(std::span<const double> a, std::span<const double> b, std::span<double> out);
void central_fluxes(std::span<const double> fL, std::span<const double> fR,
                    std::span<const double> dL, std::span<const double> dR,
                    std::span<const double> sL, std::span<const double> sR, double inv_lambda,
                    std::span<double> out);
void conservative_update(std::span<const double> density, std::span<const double> face_flux,
                         std::span<const double> src, double lambda, double dt,
                         std::span<double> out);
void predict(std::span<const double> density, std::span<const double> flux_slope,
             std::span<const double> src, double lambda, double dt, std::span<double> out);
void state_from_density(const ModelParams& p, std::span<const double> r,
                        std::span<const double> density, std::span<double> out);

}  // namespace cburgers::kernels
