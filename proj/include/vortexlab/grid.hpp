// Discrete 2D domains: periodic square torus and a square plane patch
// ("disk", the plane surrogate).  Nodes are cell-centered.
#ifndef VORTEXLAB_GRID_HPP
#define VORTEXLAB_GRID_HPP

#include <stdexcept>

#include "vortexlab/util.hpp"

namespace vortexlab {

enum class Domain { torus, disk };

/// Cell-centered square grid.  torus: side L, x in (0,L), h = L/n.
/// disk: radius R, the patch [-R,R]^2, h = 2R/n; the outermost node
/// ring acts as the boundary.
struct Grid2D {
    Domain domain;
    double extent;  // L (torus) or R (disk)
    int n;          // points per side
    double h;       // grid spacing

    double side() const { return domain == Domain::torus ? extent : 2.0 * extent; }
    double area() const { return side() * side(); }
    double cell_area() const { return h * h; }

    // node coordinates, cell-centered
    double x1(int ix) const {
        return domain == Domain::torus ? (ix + 0.5) * h : -extent + (ix + 0.5) * h;
    }
    double x2(int iy) const { return x1(iy); }

    int idx(int ix, int iy) const { return iy * n + ix; }
    int wrap(int i) const { return ((i % n) + n) % n; }

    bool on_boundary_ring(int ix, int iy) const {
        return ix == 0 || iy == 0 || ix == n - 1 || iy == n - 1;
    }
};

inline Grid2D make_grid(Domain domain, double extent, int n) {
    if (n < 16) throw std::invalid_argument("make_grid: n must be >= 16");
    if (n % 2 != 0) throw std::invalid_argument("make_grid: n must be even");
    if (!(extent > 0.0)) throw std::invalid_argument("make_grid: extent must be positive");
    Grid2D g;
    g.domain = domain;
    g.extent = extent;
    g.n = n;
    g.h = (domain == Domain::torus ? extent : 2.0 * extent) / n;
    return g;
}

}  // namespace vortexlab

#endif
