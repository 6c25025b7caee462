// Flat row-major field storage (index = iy*n + ix) plus the small set of
// whole-field helpers the solvers and integrators need.
#ifndef VORTEXLAB_FIELD_HPP
#define VORTEXLAB_FIELD_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "vortexlab/grid.hpp"

namespace vortexlab {

using cplx = std::complex<double>;

template <typename T>
struct Field2D {
    int n = 0;
    std::vector<T> v;

    Field2D() = default;
    explicit Field2D(int n_, T fill = T{}) : n(n_), v(std::size_t(n_) * n_, fill) {}

    T& at(int ix, int iy) { return v[std::size_t(iy) * n + ix]; }
    const T& at(int ix, int iy) const { return v[std::size_t(iy) * n + ix]; }
    // periodic access
    T& atp(int ix, int iy) {
        return v[std::size_t(((iy % n) + n) % n) * n + ((ix % n) + n) % n];
    }
    const T& atp(int ix, int iy) const {
        return v[std::size_t(((iy % n) + n) % n) * n + ((ix % n) + n) % n];
    }
    std::size_t size() const { return v.size(); }
};

using RealField = Field2D<double>;
using CplxField = Field2D<cplx>;

struct FieldConfig {
    RealField a1, a2;  // real gauge potential on nodes
    CplxField phi;     // Higgs field on nodes
};

struct GaugeFunction {
    RealField chi;  // radians
};

inline RealField constant_field(const Grid2D& g, double c) { return RealField(g.n, c); }

template <typename T>
Field2D<T>& axpy(Field2D<T>& y, double a, const Field2D<T>& x) {
    for (std::size_t i = 0; i < y.v.size(); ++i) y.v[i] += a * x.v[i];
    return y;
}

inline double dot(const RealField& a, const RealField& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.v.size(); ++i) s += a.v[i] * b.v[i];
    return s;
}

// L2 norms use the midpoint quadrature weight h^2.
inline double l2_norm(const RealField& f, const Grid2D& g) {
    return std::sqrt(dot(f, f) * g.cell_area());
}

inline double l2_norm(const CplxField& f, const Grid2D& g) {
    double s = 0.0;
    for (const auto& z : f.v) s += std::norm(z);
    return std::sqrt(s * g.cell_area());
}

inline double integral(const RealField& f, const Grid2D& g) {
    double s = 0.0;
    for (double x : f.v) s += x;
    return s * g.cell_area();
}

inline double max_abs(const RealField& f) {
    double m = 0.0;
    for (double x : f.v) m = std::max(m, std::abs(x));
    return m;
}

inline bool all_finite(const RealField& f) {
    for (double x : f.v)
        if (!std::isfinite(x)) return false;
    return true;
}

inline bool all_finite(const CplxField& f) {
    for (const auto& z : f.v)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

}  // namespace vortexlab

#endif
