// Topological measurements: vortex number and zero tracking via plaquette
// phase winding, with bilinear sub-cell refinement of zero positions.
#ifndef VORTEXLAB_WINDING_HPP
#define VORTEXLAB_WINDING_HPP

#include <cmath>
#include <vector>

#include "vortexlab/ops.hpp"
#include "vortexlab/util.hpp"

namespace vortexlab {

namespace detail {

// principal value in (-pi, pi]
inline double pv(double a) {
    while (a > pi) a -= 2.0 * pi;
    while (a <= -pi) a += 2.0 * pi;
    return a;
}

// integer winding of arg(phi) around the plaquette with lower-left node (ix,iy)
inline int plaquette_winding(const CplxField& phi, int ix, int iy, bool wrap) {
    const int n = phi.n;
    const int ix1 = wrap ? (ix + 1) % n : ix + 1;
    const int iy1 = wrap ? (iy + 1) % n : iy + 1;
    const double t00 = std::arg(phi.at(ix, iy));
    const double t10 = std::arg(phi.at(ix1, iy));
    const double t11 = std::arg(phi.at(ix1, iy1));
    const double t01 = std::arg(phi.at(ix, iy1));
    const double w =
        pv(t10 - t00) + pv(t11 - t10) + pv(t01 - t11) + pv(t00 - t01);
    return int(std::lround(w / (2.0 * pi)));
}

inline double min_corner_modulus(const CplxField& phi, int ix, int iy, bool wrap) {
    const int n = phi.n;
    const int ix1 = wrap ? (ix + 1) % n : ix + 1;
    const int iy1 = wrap ? (iy + 1) % n : iy + 1;
    return std::min(std::min(std::abs(phi.at(ix, iy)), std::abs(phi.at(ix1, iy))),
                    std::min(std::abs(phi.at(ix1, iy1)), std::abs(phi.at(ix, iy1))));
}

// Zero of the bilinear interpolant inside the unit cell, if any; falls back
// to the cell center.
inline cplx bilinear_zero(const cplx& f00, const cplx& f10, const cplx& f01,
                          const cplx& f11) {
    const double a1 = f00.real(), b1 = f10.real() - f00.real();
    const double c1 = f01.real() - f00.real();
    const double d1 = f11.real() - f10.real() - f01.real() + f00.real();
    const double a2 = f00.imag(), b2 = f10.imag() - f00.imag();
    const double c2 = f01.imag() - f00.imag();
    const double d2 = f11.imag() - f10.imag() - f01.imag() + f00.imag();
    // eliminate t: (a2 + b2 s)(c1 + d1 s) - (c2 + d2 s)(a1 + b1 s) = 0
    const double qa = b2 * d1 - d2 * b1;
    const double qb = a2 * d1 + b2 * c1 - c2 * b1 - d2 * a1;
    const double qc = a2 * c1 - c2 * a1;
    double roots[2];
    int nroots = 0;
    if (std::abs(qa) < 1e-14 * (std::abs(qb) + std::abs(qc))) {
        if (qb != 0.0) roots[nroots++] = -qc / qb;
    } else {
        const double disc = qb * qb - 4.0 * qa * qc;
        if (disc >= 0.0) {
            const double sq = std::sqrt(disc);
            roots[nroots++] = (-qb + sq) / (2.0 * qa);
            roots[nroots++] = (-qb - sq) / (2.0 * qa);
        }
    }
    for (int r = 0; r < nroots; ++r) {
        const double s = roots[r];
        if (s < -0.05 || s > 1.05) continue;
        const double den1 = c1 + d1 * s, den2 = c2 + d2 * s;
        double t;
        if (std::abs(den1) >= std::abs(den2)) {
            if (den1 == 0.0) continue;
            t = -(a1 + b1 * s) / den1;
        } else {
            t = -(a2 + b2 * s) / den2;
        }
        if (t >= -0.05 && t <= 1.05) return cplx(s, t);
    }
    return cplx(0.5, 0.5);
}

}  // namespace detail

/// Vortex number.  Torus: hybrid plaquette measure, phase winding where the
/// corner modulus exceeds the reliability threshold and magnetic flux
/// otherwise, rounded to the nearest integer.  Disk: winding of arg(phi)
/// along the outermost node ring; throws WindingIllDefined when the field
/// modulus dips below the threshold on that contour.
inline int vortex_number(const FieldConfig& cfg, const Grid2D& g,
                         double threshold = 0.1) {
    const int n = g.n;
    if (g.domain == Domain::torus) {
        RealField b;
        bool have_b = false;
        double total = 0.0;
        for (int iy = 0; iy < n; ++iy)
            for (int ix = 0; ix < n; ++ix) {
                if (detail::min_corner_modulus(cfg.phi, ix, iy, true) > threshold) {
                    total += detail::plaquette_winding(cfg.phi, ix, iy, true);
                } else {
                    if (!have_b) {
                        b = curvature(cfg.a1, cfg.a2, g);
                        have_b = true;
                    }
                    total += b.at(ix, iy) * g.cell_area() / (2.0 * pi);
                }
            }
        return int(std::lround(total));
    }
    // disk: counterclockwise walk around the node ring
    double mn = 1e300;
    std::vector<cplx> ring;
    for (int ix = 0; ix < n; ++ix) ring.push_back(cfg.phi.at(ix, 0));
    for (int iy = 1; iy < n; ++iy) ring.push_back(cfg.phi.at(n - 1, iy));
    for (int ix = n - 2; ix >= 0; --ix) ring.push_back(cfg.phi.at(ix, n - 1));
    for (int iy = n - 2; iy >= 1; --iy) ring.push_back(cfg.phi.at(0, iy));
    for (const auto& z : ring) mn = std::min(mn, std::abs(z));
    if (mn < threshold)
        throw WindingIllDefined("vortex_number: |phi| < threshold on the contour");
    double w = 0.0;
    for (std::size_t i = 0; i < ring.size(); ++i) {
        const cplx za = ring[i];
        const cplx zb = ring[(i + 1) % ring.size()];
        w += detail::pv(std::arg(zb) - std::arg(za));
    }
    return int(std::lround(w / (2.0 * pi)));
}

/// Zeros of phi located by nonzero plaquette winding, refined inside the
/// cell by the bilinear interpolant.  A winding-w plaquette contributes |w|
/// copies.  Empty result is valid (vacuum).
inline std::vector<cplx> track_zeros(const CplxField& phi, const Grid2D& g) {
    std::vector<cplx> zeros;
    const int n = g.n;
    const int last = g.domain == Domain::torus ? n : n - 1;
    const bool wrap = g.domain == Domain::torus;
    for (int iy = 0; iy < last; ++iy)
        for (int ix = 0; ix < last; ++ix) {
            const int w = detail::plaquette_winding(phi, ix, iy, wrap);
            if (w == 0) continue;
            const int ix1 = wrap ? (ix + 1) % n : ix + 1;
            const int iy1 = wrap ? (iy + 1) % n : iy + 1;
            const cplx st = detail::bilinear_zero(phi.at(ix, iy), phi.at(ix1, iy),
                                                  phi.at(ix, iy1), phi.at(ix1, iy1));
            const cplx z(g.x1(ix) + st.real() * g.h, g.x2(iy) + st.imag() * g.h);
            for (int k = 0; k < std::abs(w); ++k) zeros.push_back(z);
        }
    return zeros;
}

}  // namespace vortexlab

#endif
