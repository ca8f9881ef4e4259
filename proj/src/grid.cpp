#include "cburgers/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace cburgers {

Grid::Grid(const Geometry& geom, std::size_t n_cells) {
    if (n_cells < 3) throw DomainError("grid needs at least 3 cells");
    const double r0 = geom.horizon();
    dr_ = (geom.r_max - r0) / static_cast<double>(n_cells);
    faces_.resize(n_cells + 1);
    centers_.resize(n_cells);
    for (std::size_t j = 0; j <= n_cells; ++j) faces_[j] = r0 + static_cast<double>(j) * dr_;
    for (std::size_t j = 0; j < n_cells; ++j) {
        centers_[j] = r0 + (static_cast<double>(j) + 0.5) * dr_;
    }
}

Grid Grid::with_spacing(const Geometry& geom, double dr) {
    if (!(dr > 0.0)) throw DomainError("cell width must be positive");
    const double cells = (geom.r_max - geom.horizon()) / dr;
    const double rounded = std::round(cells);
    if (std::abs(cells - rounded) > 1e-9 * std::max(1.0, cells)) {
        throw DomainError("cell width " + std::to_string(dr) +
                          " does not divide the domain (R - 2m) into whole cells");
    }
    return Grid(geom, static_cast<std::size_t>(rounded));
}

}  // namespace cburgers
