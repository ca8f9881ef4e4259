#include <algorithm>
#include <cmath>

#include "cburgers/kernels.hpp"
#include "pointwise.hpp"

namespace cburgers::kernels {

namespace {

void eval_cells_scalar(const ModelParams& p, const double* r, const double* u, double* flux,
                       double* density, double* speed, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const auto c = detail::eval_cell(p, r[i], u[i]);
        flux[i] = c.flux;
        density[i] = c.density;
        speed[i] = c.speed;
    }
}

void eval_source_scalar(const ModelParams& p, const double* r, const double* u, double* out,
                        std::size_t n) {
    if (p.id != ModelId::GeomPressureless) {
        std::fill(out, out + n, 0.0);
        return;
    }
    for (std::size_t i = 0; i < n; ++i) out[i] = r[i] * u[i] * u[i] - p.mass_c2;
}

void llf_fluxes_scalar(const ModelParams& p, const double* r, const double* uL,
                       const double* uR, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const auto left = detail::eval_cell(p, r[i], uL[i]);
        const auto right = detail::eval_cell(p, r[i], uR[i]);
        const double alpha = std::max(std::abs(left.speed), std::abs(right.speed));
        out[i] = 0.5 * (left.flux + right.flux) - 0.5 * alpha * (right.density - left.density);
    }
}

void minmod_scalar(const double* a, const double* b, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = detail::minmod(a[i], b[i]);
}

void central_fluxes_scalar(const double* fL, const double* fR, const double* dL,
                           const double* dR, const double* sL, const double* sR,
                           double inv_lambda, double* out, std::size_t n) {
    const double visc = 0.5 * inv_lambda;
    const double corr = 0.25 * inv_lambda;
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = 0.5 * (fL[i] + fR[i]) - visc * (dR[i] - dL[i]) + corr * (sL[i] + sR[i]);
    }
}

void conservative_update_scalar(const double* density, const double* face_flux,
                                const double* src, double lambda, double dt, double* out,
                                std::size_t n) {
    if (src == nullptr) {
        for (std::size_t i = 0; i < n; ++i) {
            out[i] = density[i] - lambda * (face_flux[i + 1] - face_flux[i]);
        }
        return;
    }
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = density[i] - lambda * (face_flux[i + 1] - face_flux[i]) + dt * src[i];
    }
}

void predict_scalar(const double* density, const double* flux_slope, const double* src,
                    double lambda, double dt, double* out, std::size_t n) {
    const double half_lambda = 0.5 * lambda;
    const double half_dt = 0.5 * dt;
    if (src == nullptr) {
        for (std::size_t i = 0; i < n; ++i) out[i] = density[i] - half_lambda * flux_slope[i];
        return;
    }
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = density[i] - half_lambda * flux_slope[i] + half_dt * src[i];
    }
}

void state_from_density_scalar(const ModelParams& p, const double* r, const double* density,
                               double* out, std::size_t n) {
    if (p.id == ModelId::FlatClassical || p.id == ModelId::FlatRelativistic) {
        std::copy(density, density + n, out);
        return;
    }
    for (std::size_t i = 0; i < n; ++i) out[i] = density[i] / (r[i] * r[i]);
}

}  // namespace

const KernelTable& scalar_table() {
    static const KernelTable table{
        Backend::Scalar,          &eval_cells_scalar,         &eval_source_scalar,
        &llf_fluxes_scalar,       &minmod_scalar,             &central_fluxes_scalar,
        &conservative_update_scalar, &predict_scalar,         &state_from_density_scalar,
    };
    return table;
}

}  // namespace cburgers::kernels
