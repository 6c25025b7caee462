// Discrete differential operators.  Torus: trigonometric differentiation.
// Disk: 2nd-order central differences with one-sided stencils on the node
// ring, plus exact transposes (needed wherever an operation must be the
// exact gradient of a quadrature sum).
//
// Conventions (see docs/conventions.md): D_j phi = d_j phi - i a_j phi,
// b = d1 a2 - d2 a1, gauge transform (a, phi) -> (a - grad chi, e^{-i chi} phi).
#ifndef VORTEXLAB_OPS_HPP
#define VORTEXLAB_OPS_HPP

#include <utility>

#include "vortexlab/fft.hpp"
#include "vortexlab/field.hpp"
#include "vortexlab/grid.hpp"

namespace vortexlab {

namespace detail {

// central difference along x with 2nd-order one-sided ends
template <typename T>
Field2D<T> dx_disk(const Field2D<T>& f, double h) {
    const int n = f.n;
    Field2D<T> r(n);
    const double c = 1.0 / (2.0 * h);
    for (int iy = 0; iy < n; ++iy) {
        r.at(0, iy) = (-3.0 * f.at(0, iy) + 4.0 * f.at(1, iy) - f.at(2, iy)) * c;
        for (int ix = 1; ix < n - 1; ++ix)
            r.at(ix, iy) = (f.at(ix + 1, iy) - f.at(ix - 1, iy)) * c;
        r.at(n - 1, iy) =
            (3.0 * f.at(n - 1, iy) - 4.0 * f.at(n - 2, iy) + f.at(n - 3, iy)) * c;
    }
    return r;
}

template <typename T>
Field2D<T> dy_disk(const Field2D<T>& f, double h) {
    const int n = f.n;
    Field2D<T> r(n);
    const double c = 1.0 / (2.0 * h);
    for (int ix = 0; ix < n; ++ix) {
        r.at(ix, 0) = (-3.0 * f.at(ix, 0) + 4.0 * f.at(ix, 1) - f.at(ix, 2)) * c;
        r.at(ix, n - 1) =
            (3.0 * f.at(ix, n - 1) - 4.0 * f.at(ix, n - 2) + f.at(ix, n - 3)) * c;
    }
    for (int iy = 1; iy < n - 1; ++iy)
        for (int ix = 0; ix < n; ++ix)
            r.at(ix, iy) = (f.at(ix, iy + 1) - f.at(ix, iy - 1)) * c;
    return r;
}

// exact transpose of dx_disk (one-dimensional stencil transposed row-wise):
// central rows i=1..n-2 scatter -1 to column i-1 and +1 to column i+1,
// the one-sided end rows scatter their three coefficients.
template <typename T>
Field2D<T> dxT_disk(const Field2D<T>& f, double h) {
    const int n = f.n;
    Field2D<T> r(n);
    const double c = 1.0 / (2.0 * h);
    for (int iy = 0; iy < n; ++iy) {
        for (int j = 0; j < n; ++j) {
            T s{};
            if (j >= 2) s += f.at(j - 1, iy);
            if (j <= n - 3) s -= f.at(j + 1, iy);
            if (j == 0) s += -3.0 * f.at(0, iy);
            if (j == 1) s += 4.0 * f.at(0, iy);
            if (j == 2) s += -1.0 * f.at(0, iy);
            if (j == n - 1) s += 3.0 * f.at(n - 1, iy);
            if (j == n - 2) s += -4.0 * f.at(n - 1, iy);
            if (j == n - 3) s += 1.0 * f.at(n - 1, iy);
            r.at(j, iy) = s * c;
        }
    }
    return r;
}

template <typename T>
Field2D<T> dyT_disk(const Field2D<T>& f, double h) {
    const int n = f.n;
    Field2D<T> r(n);
    const double c = 1.0 / (2.0 * h);
    for (int ix = 0; ix < n; ++ix) {
        for (int j = 0; j < n; ++j) {
            T s{};
            if (j >= 2) s += f.at(ix, j - 1);
            if (j <= n - 3) s -= f.at(ix, j + 1);
            if (j == 0) s += -3.0 * f.at(ix, 0);
            if (j == 1) s += 4.0 * f.at(ix, 0);
            if (j == 2) s += -1.0 * f.at(ix, 0);
            if (j == n - 1) s += 3.0 * f.at(ix, n - 1);
            if (j == n - 2) s += -4.0 * f.at(ix, n - 1);
            if (j == n - 3) s += 1.0 * f.at(ix, n - 1);
            r.at(ix, j) = s * c;
        }
    }
    return r;
}

}  // namespace detail

inline RealField deriv_x(const RealField& f, const Grid2D& g) {
    return g.domain == Domain::torus ? torus_fft(g).deriv_x(f) : detail::dx_disk(f, g.h);
}
inline RealField deriv_y(const RealField& f, const Grid2D& g) {
    return g.domain == Domain::torus ? torus_fft(g).deriv_y(f) : detail::dy_disk(f, g.h);
}
inline CplxField deriv_x(const CplxField& f, const Grid2D& g) {
    return g.domain == Domain::torus ? torus_fft(g).deriv_x(f) : detail::dx_disk(f, g.h);
}
inline CplxField deriv_y(const CplxField& f, const Grid2D& g) {
    return g.domain == Domain::torus ? torus_fft(g).deriv_y(f) : detail::dy_disk(f, g.h);
}

/// transpose of deriv_x w.r.t. the unweighted node sum (torus: -deriv_x)
inline RealField deriv_xT(const RealField& f, const Grid2D& g) {
    if (g.domain == Domain::torus) {
        RealField r = torus_fft(g).deriv_x(f);
        for (auto& x : r.v) x = -x;
        return r;
    }
    return detail::dxT_disk(f, g.h);
}
inline RealField deriv_yT(const RealField& f, const Grid2D& g) {
    if (g.domain == Domain::torus) {
        RealField r = torus_fft(g).deriv_y(f);
        for (auto& x : r.v) x = -x;
        return r;
    }
    return detail::dyT_disk(f, g.h);
}

/// b = d1 a2 - d2 a1
inline RealField curvature(const RealField& a1, const RealField& a2, const Grid2D& g) {
    RealField b = deriv_x(a2, g);
    RealField t = deriv_y(a1, g);
    for (std::size_t i = 0; i < b.v.size(); ++i) b.v[i] -= t.v[i];
    return b;
}

/// (D1 phi, D2 phi) with D_j = d_j - i a_j
inline std::pair<CplxField, CplxField> covariant_derivative(const RealField& a1,
                                                            const RealField& a2,
                                                            const CplxField& phi,
                                                            const Grid2D& g) {
    CplxField d1 = deriv_x(phi, g);
    CplxField d2 = deriv_y(phi, g);
    const cplx mi(0.0, -1.0);
    for (std::size_t i = 0; i < phi.v.size(); ++i) {
        d1.v[i] += mi * a1.v[i] * phi.v[i];
        d2.v[i] += mi * a2.v[i] * phi.v[i];
    }
    return {std::move(d1), std::move(d2)};
}

}  // namespace vortexlab

#endif
