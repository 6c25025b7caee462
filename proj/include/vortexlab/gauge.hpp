// Gauge transforms, the vortex/anti-vortex conjugation, and random smooth
// gauge functions for property tests.
#ifndef VORTEXLAB_GAUGE_HPP
#define VORTEXLAB_GAUGE_HPP

#include "vortexlab/ops.hpp"
#include "vortexlab/util.hpp"

namespace vortexlab {

/// (a, phi) -> (a - grad chi, e^{-i chi} phi)
inline FieldConfig gauge_transform(const FieldConfig& cfg, const GaugeFunction& gf,
                                   const Grid2D& g) {
    FieldConfig out;
    RealField gx = deriv_x(gf.chi, g);
    RealField gy = deriv_y(gf.chi, g);
    out.a1 = cfg.a1;
    out.a2 = cfg.a2;
    out.phi = cfg.phi;
    for (std::size_t i = 0; i < gx.v.size(); ++i) {
        out.a1.v[i] -= gx.v[i];
        out.a2.v[i] -= gy.v[i];
        const double c = gf.chi.v[i];
        out.phi.v[i] *= cplx(std::cos(c), -std::sin(c));
    }
    return out;
}

/// (a, phi) -> (-a, conj phi): maps degree d vortex data to degree -d
/// anti-vortex data; the energy density is pointwise invariant.
inline FieldConfig conjugate_to_antivortex(const FieldConfig& cfg) {
    FieldConfig out;
    out.a1 = cfg.a1;
    out.a2 = cfg.a2;
    out.phi = cfg.phi;
    for (auto& x : out.a1.v) x = -x;
    for (auto& x : out.a2.v) x = -x;
    for (auto& z : out.phi.v) z = std::conj(z);
    return out;
}

/// Random band-limited gauge function.  Torus: a few periodic Fourier modes.
/// Disk: low-order polynomial in x/R (smooth, nothing special at the ring).
inline GaugeFunction random_smooth_chi(const Grid2D& g, SplitMix64& rng,
                                       double amplitude = 0.5) {
    GaugeFunction gf;
    gf.chi = RealField(g.n, 0.0);
    if (g.domain == Domain::torus) {
        const int kmax = 3;
        for (int my = -kmax; my <= kmax; ++my)
            for (int mx = -kmax; mx <= kmax; ++mx) {
                if (mx == 0 && my == 0) continue;
                const double cr = rng.uniform(-1.0, 1.0);
                const double ci = rng.uniform(-1.0, 1.0);
                const double kx = 2.0 * pi * mx / g.extent;
                const double ky = 2.0 * pi * my / g.extent;
                for (int iy = 0; iy < g.n; ++iy)
                    for (int ix = 0; ix < g.n; ++ix) {
                        const double ph = kx * g.x1(ix) + ky * g.x2(iy);
                        gf.chi.at(ix, iy) += cr * std::cos(ph) + ci * std::sin(ph);
                    }
            }
        const double m = max_abs(gf.chi);
        if (m > 0.0)
            for (auto& x : gf.chi.v) x *= amplitude / m;
    } else {
        double c[6];
        for (double& x : c) x = rng.uniform(-1.0, 1.0);
        for (int iy = 0; iy < g.n; ++iy)
            for (int ix = 0; ix < g.n; ++ix) {
                const double x = g.x1(ix) / g.extent, y = g.x2(iy) / g.extent;
                gf.chi.at(ix, iy) =
                    amplitude * (c[0] + c[1] * x + c[2] * y + c[3] * x * y +
                                 c[4] * (x * x - y * y) + c[5] * (x * x + y * y));
            }
    }
    return gf;
}

}  // namespace vortexlab

#endif
