#pragma once

// Scalar per-element formulas shared by the reference kernels. The AVX2
// variants in avx2.cpp mirror these operation for operation.

#include <algorithm>
#include <cmath>

#include "cburgers/kernels.hpp"

namespace cburgers::kernels::detail {

struct CellValues {
    double flux;
    double density;
    double speed;
};

inline CellValues eval_cell(const ModelParams& p, double r, double u) {
    switch (p.id) {
        case ModelId::FlatClassical:
            return {0.5 * u * u, u, u};
        case ModelId::FlatRelativistic: {
            const double s = std::sqrt(1.0 + p.eps2 * u * u);
            return {u * u / (1.0 + s), u, u / s};
        }
        case ModelId::GeomRelativistic: {
            const double s = std::sqrt(1.0 + p.eps2 * u * u);
            const double rm = r - p.two_m;
            return {(r * rm) * (u * u / (1.0 + s)), r * r * u, (rm / r) * (u / s)};
        }
        case ModelId::GeomPressureless: {
            const double rm = r - p.two_m;
            return {(r * rm) * (0.5 * u * u), r * r * u, (rm / r) * u};
        }
    }
    return {0.0, 0.0, 0.0};
}

inline double minmod(double a, double b) {
    if (a * b > 0.0) return std::copysign(std::min(std::abs(a), std::abs(b)), a);
    return 0.0;
}

}  // namespace cburgers::kernels::detail
