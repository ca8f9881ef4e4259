// AVX2 variants of the reference kernels. Compiled with -mavx2 only; the
// dispatcher checks the CPU before handing out this table. Loop tails fall
// back to the scalar formulas, which are the same operations.

#include "cburgers/kernels.hpp"

#if defined(__AVX2__)

#include <immintrin.h>

#include "pointwise.hpp"

namespace cburgers::kernels {

namespace {

constexpr std::size_t kLanes = 4;

inline __m256d abs_pd(__m256d x) { return _mm256_andnot_pd(_mm256_set1_pd(-0.0), x); }

struct CellVec {
    __m256d flux;
    __m256d density;
    __m256d speed;
};

template <ModelId Id>
inline CellVec eval_cell_vec(const ModelParams& p, __m256d r, __m256d u) {
    const __m256d half = _mm256_set1_pd(0.5);
    const __m256d one = _mm256_set1_pd(1.0);
    if constexpr (Id == ModelId::FlatClassical) {
        return {_mm256_mul_pd(_mm256_mul_pd(half, u), u), u, u};
    } else if constexpr (Id == ModelId::FlatRelativistic) {
        const __m256d eps2 = _mm256_set1_pd(p.eps2);
        const __m256d s =
            _mm256_sqrt_pd(_mm256_add_pd(one, _mm256_mul_pd(_mm256_mul_pd(eps2, u), u)));
        const __m256d f = _mm256_div_pd(_mm256_mul_pd(u, u), _mm256_add_pd(one, s));
        return {f, u, _mm256_div_pd(u, s)};
    } else if constexpr (Id == ModelId::GeomRelativistic) {
        const __m256d eps2 = _mm256_set1_pd(p.eps2);
        const __m256d s =
            _mm256_sqrt_pd(_mm256_add_pd(one, _mm256_mul_pd(_mm256_mul_pd(eps2, u), u)));
        const __m256d rm = _mm256_sub_pd(r, _mm256_set1_pd(p.two_m));
        const __m256d f = _mm256_div_pd(_mm256_mul_pd(u, u), _mm256_add_pd(one, s));
        return {_mm256_mul_pd(_mm256_mul_pd(r, rm), f), _mm256_mul_pd(_mm256_mul_pd(r, r), u),
                _mm256_mul_pd(_mm256_div_pd(rm, r), _mm256_div_pd(u, s))};
    } else {
        const __m256d rm = _mm256_sub_pd(r, _mm256_set1_pd(p.two_m));
        const __m256d f = _mm256_mul_pd(_mm256_mul_pd(half, u), u);
        return {_mm256_mul_pd(_mm256_mul_pd(r, rm), f), _mm256_mul_pd(_mm256_mul_pd(r, r), u),
                _mm256_mul_pd(_mm256_div_pd(rm, r), u)};
    }
}

template <ModelId Id>
void eval_cells_impl(const ModelParams& p, const double* r, const double* u, double* flux,
                     double* density, double* speed, std::size_t n) {
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        const auto c = eval_cell_vec<Id>(p, _mm256_loadu_pd(r + i), _mm256_loadu_pd(u + i));
        _mm256_storeu_pd(flux + i, c.flux);
        _mm256_storeu_pd(density + i, c.density);
        _mm256_storeu_pd(speed + i, c.speed);
    }
    for (; i < n; ++i) {
        const auto c = detail::eval_cell(p, r[i], u[i]);
        flux[i] = c.flux;
        density[i] = c.density;
        speed[i] = c.speed;
    }
}

void eval_cells_avx2(const ModelParams& p, const double* r, const double* u, double* flux,
                     double* density, double* speed, std::size_t n) {
    switch (p.id) {
        case ModelId::FlatClassical:
            return eval_cells_impl<ModelId::FlatClassical>(p, r, u, flux, density, speed, n);
        case ModelId::FlatRelativistic:
            return eval_cells_impl<ModelId::FlatRelativistic>(p, r, u, flux, density, speed, n);
        case ModelId::GeomRelativistic:
            return eval_cells_impl<ModelId::GeomRelativistic>(p, r, u, flux, density, speed, n);
        case ModelId::GeomPressureless:
            return eval_cells_impl<ModelId::GeomPressureless>(p, r, u, flux, density, speed, n);
    }
}

void eval_source_avx2(const ModelParams& p, const double* r, const double* u, double* out,
                      std::size_t n) {
    if (p.id != ModelId::GeomPressureless) {
        for (std::size_t i = 0; i < n; ++i) out[i] = 0.0;
        return;
    }
    const __m256d mc2 = _mm256_set1_pd(p.mass_c2);
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        const __m256d ui = _mm256_loadu_pd(u + i);
        const __m256d ru = _mm256_mul_pd(_mm256_loadu_pd(r + i), ui);
        _mm256_storeu_pd(out + i, _mm256_sub_pd(_mm256_mul_pd(ru, ui), mc2));
    }
    for (; i < n; ++i) out[i] = r[i] * u[i] * u[i] - p.mass_c2;
}

template <ModelId Id>
void llf_impl(const ModelParams& p, const double* r, const double* uL, const double* uR,
              double* out, std::size_t n) {
    const __m256d half = _mm256_set1_pd(0.5);
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        const __m256d ri = _mm256_loadu_pd(r + i);
        const auto left = eval_cell_vec<Id>(p, ri, _mm256_loadu_pd(uL + i));
        const auto right = eval_cell_vec<Id>(p, ri, _mm256_loadu_pd(uR + i));
        const __m256d alpha = _mm256_max_pd(abs_pd(left.speed), abs_pd(right.speed));
        const __m256d central = _mm256_mul_pd(half, _mm256_add_pd(left.flux, right.flux));
        const __m256d visc = _mm256_mul_pd(_mm256_mul_pd(half, alpha),
                                           _mm256_sub_pd(right.density, left.density));
        _mm256_storeu_pd(out + i, _mm256_sub_pd(central, visc));
    }
    for (; i < n; ++i) {
        const auto left = detail::eval_cell(p, r[i], uL[i]);
        const auto right = detail::eval_cell(p, r[i], uR[i]);
        const double alpha = std::max(std::abs(left.speed), std::abs(right.speed));
        out[i] = 0.5 * (left.flux + right.flux) - 0.5 * alpha * (right.density - left.density);
    }
}

void llf_fluxes_avx2(const ModelParams& p, const double* r, const double* uL, const double* uR,
                     double* out, std::size_t n) {
    switch (p.id) {
        case ModelId::FlatClassical:
            return llf_impl<ModelId::FlatClassical>(p, r, uL, uR, out, n);
        case ModelId::FlatRelativistic:
            return llf_impl<ModelId::FlatRelativistic>(p, r, uL, uR, out, n);
        case ModelId::GeomRelativistic:
            return llf_impl<ModelId::GeomRelativistic>(p, r, uL, uR, out, n);
        case ModelId::GeomPressureless:
            return llf_impl<ModelId::GeomPressureless>(p, r, uL, uR, out, n);
    }
}

void minmod_avx2(const double* a, const double* b, double* out, std::size_t n) {
    const __m256d sign_bit = _mm256_set1_pd(-0.0);
    const __m256d zero = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        const __m256d av = _mm256_loadu_pd(a + i);
        const __m256d bv = _mm256_loadu_pd(b + i);
        const __m256d same_sign = _mm256_cmp_pd(_mm256_mul_pd(av, bv), zero, _CMP_GT_OQ);
        const __m256d mag = _mm256_min_pd(abs_pd(av), abs_pd(bv));
        const __m256d signed_mag = _mm256_or_pd(mag, _mm256_and_pd(av, sign_bit));
        _mm256_storeu_pd(out + i, _mm256_and_pd(same_sign, signed_mag));
    }
    for (; i < n; ++i) out[i] = detail::minmod(a[i], b[i]);
}

void central_fluxes_avx2(const double* fL, const double* fR, const double* dL, const double* dR,
                         const double* sL, const double* sR, double inv_lambda, double* out,
                         std::size_t n) {
    const double visc_s = 0.5 * inv_lambda;
    const double corr_s = 0.25 * inv_lambda;
    const __m256d half = _mm256_set1_pd(0.5);
    const __m256d visc = _mm256_set1_pd(visc_s);
    const __m256d corr = _mm256_set1_pd(corr_s);
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        const __m256d central =
            _mm256_mul_pd(half, _mm256_add_pd(_mm256_loadu_pd(fL + i), _mm256_loadu_pd(fR + i)));
        const __m256d jump =
            _mm256_mul_pd(visc, _mm256_sub_pd(_mm256_loadu_pd(dR + i), _mm256_loadu_pd(dL + i)));
        const __m256d slopes =
            _mm256_mul_pd(corr, _mm256_add_pd(_mm256_loadu_pd(sL + i), _mm256_loadu_pd(sR + i)));
        _mm256_storeu_pd(out + i, _mm256_add_pd(_mm256_sub_pd(central, jump), slopes));
    }
    for (; i < n; ++i) {
        out[i] = 0.5 * (fL[i] + fR[i]) - visc_s * (dR[i] - dL[i]) + corr_s * (sL[i] + sR[i]);
    }
}

void conservative_update_avx2(const double* density, const double* face_flux, const double* src,
                              double lambda, double dt, double* out, std::size_t n) {
    const __m256d lam = _mm256_set1_pd(lambda);
    const __m256d dtv = _mm256_set1_pd(dt);
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        const __m256d diff =
            _mm256_sub_pd(_mm256_loadu_pd(face_flux + i + 1), _mm256_loadu_pd(face_flux + i));
        __m256d acc = _mm256_sub_pd(_mm256_loadu_pd(density + i), _mm256_mul_pd(lam, diff));
        if (src != nullptr) acc = _mm256_add_pd(acc, _mm256_mul_pd(dtv, _mm256_loadu_pd(src + i)));
        _mm256_storeu_pd(out + i, acc);
    }
    for (; i < n; ++i) {
        double acc = density[i] - lambda * (face_flux[i + 1] - face_flux[i]);
        if (src != nullptr) acc = acc + dt * src[i];
        out[i] = acc;
    }
}

void predict_avx2(const double* density, const double* flux_slope, const double* src,
                  double lambda, double dt, double* out, std::size_t n) {
    const double half_lambda = 0.5 * lambda;
    const double half_dt = 0.5 * dt;
    const __m256d hl = _mm256_set1_pd(half_lambda);
    const __m256d hd = _mm256_set1_pd(half_dt);
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        __m256d acc = _mm256_sub_pd(_mm256_loadu_pd(density + i),
                                    _mm256_mul_pd(hl, _mm256_loadu_pd(flux_slope + i)));
        if (src != nullptr) acc = _mm256_add_pd(acc, _mm256_mul_pd(hd, _mm256_loadu_pd(src + i)));
        _mm256_storeu_pd(out + i, acc);
    }
    for (; i < n; ++i) {
        double acc = density[i] - half_lambda * flux_slope[i];
        if (src != nullptr) acc = acc + half_dt * src[i];
        out[i] = acc;
    }
}

void state_from_density_avx2(const ModelParams& p, const double* r, const double* density,
                             double* out, std::size_t n) {
    if (p.id == ModelId::FlatClassical || p.id == ModelId::FlatRelativistic) {
        for (std::size_t i = 0; i < n; ++i) out[i] = density[i];
        return;
    }
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        const __m256d ri = _mm256_loadu_pd(r + i);
        _mm256_storeu_pd(out + i,
                         _mm256_div_pd(_mm256_loadu_pd(density + i), _mm256_mul_pd(ri, ri)));
    }
    for (; i < n; ++i) out[i] = density[i] / (r[i] * r[i]);
}

}  // namespace

const KernelTable* avx2_table_impl() {
    static const KernelTable table{
        Backend::Avx2,           &eval_cells_avx2,         &eval_source_avx2,
        &llf_fluxes_avx2,        &minmod_avx2,             &central_fluxes_avx2,
        &conservative_update_avx2, &predict_avx2,          &state_from_density_avx2,
    };
    return &table;
}

}  // namespace cburgers::kernels

#else

namespace cburgers::kernels {
const KernelTable* avx2_table_impl() { return nullptr; }
}  // namespace cburgers::kernels

#endif
