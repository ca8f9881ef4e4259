#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cburgers/model.hpp"

namespace cburgers {

/// Uniform mesh on (2m, R]: faces r_{j-1/2} = 2m + j dr (j = 0..n), centers 2m + (j+1/2) dr.
class Grid {
public:
    Grid(const Geometry& geom, std::size_t n_cells);
    /// Mesh with the given spacing; (R - 2m)/dr must be an integer to 1e-9.
    static Grid with_spacing(const Geometry& geom, double dr);

    std::size_t size() const { return centers_.size(); }
    double dr() const { return dr_; }
    double r_min() const { return faces_.front(); }
    double r_max() const { return faces_.back(); }

    /// r_{j-1/2}, j = 0..size()
    double face(std::size_t j) const { return faces_[j]; }
    double center(std::size_t j) const { return centers_[j]; }
    std::span<const double> faces() const { return faces_; }
    std::span<const double> centers() const { return centers_; }

private:
    double dr_;
    std::vector<double> faces_;
    std::vector<double> centers_;
};

/// Cell values of the evolved variable (w or v per model) at time t.
struct State {
    std::vector<double> u;
    double t = 0.0;
};

}  // namespace cburgers
