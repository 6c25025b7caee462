// Hyperbolic Ginzburg-Landau evolution in temporal gauge.
//
// Discretization: phi on nodes, the gauge potential as line-averaged link
// variables abar_j, plaquette magnetic field, and covariant forward
// differences D_j phi = (e^{-i h abar_j} phi(x+j) - phi(x)) / h.  The
// discrete energy is exactly invariant under lattice gauge transforms, the
// accelerations are its exact negative gradient, and kick-drift-kick
// leapfrog therefore conserves the discrete Gauss constraint to roundoff
// and the energy without secular drift.  On the disk the node ring and the
// links touching it are clamped to their initial values.
#ifndef VORTEXLAB_EVOLUTION_HPP
#define VORTEXLAB_EVOLUTION_HPP

#include <vector>

#include "vortexlab/cg.hpp"
#include "vortexlab/energy.hpp"
#include "vortexlab/fft.hpp"
#include "vortexlab/winding.hpp"

namespace vortexlab {

struct DynamicState {
    RealField a1, a2;    // link variables: a1 at (x, x+e1) midpoints, a2 at (x, x+e2)
    CplxField phi;       // nodes
    RealField a1dot, a2dot;
    CplxField phidot;
    double t = 0.0;
};

struct EvolutionParams {
    double dt = 0.0;       // time step; dt/h <= 0.5 enforced
    int n_steps = 0;
    int sample_every = 100;
    double tau = 1.0;
    double blowup_factor = 1.10;  // abort when E exceeds this multiple of E(0)
};

struct EvolutionSample {
    double t = 0.0;
    double energy = 0.0;
    double kinetic = 0.0;
    double potential = 0.0;
    double gauss = 0.0;
    std::vector<cplx> zeros;
};

namespace detail {

inline bool link1_valid(const Grid2D& g, int ix, int) {
    return g.domain == Domain::torus || ix < g.n - 1;
}
inline bool link2_valid(const Grid2D& g, int, int iy) {
    return g.domain == Domain::torus || iy < g.n - 1;
}
// dynamic = both endpoints off the clamped ring (torus: everything)
inline bool link1_dynamic(const Grid2D& g, int ix, int iy) {
    if (g.domain == Domain::torus) return true;
    return ix >= 1 && ix <= g.n - 3 && iy >= 1 && iy <= g.n - 2;
}
inline bool link2_dynamic(const Grid2D& g, int ix, int iy) {
    if (g.domain == Domain::torus) return true;
    return iy >= 1 && iy <= g.n - 3 && ix >= 1 && ix <= g.n - 2;
}
inline bool node_dynamic(const Grid2D& g, int ix, int iy) {
    if (g.domain == Domain::torus) return true;
    return !g.on_boundary_ring(ix, iy);
}

// plaquette field b(ix,iy) on lower-left corners (invalid entries zero)
inline RealField plaquette_b(const RealField& a1, const RealField& a2,
                             const Grid2D& g) {
    const int n = g.n;
    RealField b(n, 0.0);
    const int last = g.domain == Domain::torus ? n : n - 1;
    for (int iy = 0; iy < last; ++iy)
        for (int ix = 0; ix < last; ++ix) {
            const int ix1 = (ix + 1) % n, iy1 = (iy + 1) % n;
            b.at(ix, iy) = (a1.at(ix, iy) + a2.at(ix1, iy) - a1.at(ix, iy1) -
                            a2.at(ix, iy)) /
                           g.h;
        }
    return b;
}

// covariant forward differences on links (invalid entries zero)
inline void covariant_links(const DynamicState& s, const Grid2D& g, CplxField& d1,
                            CplxField& d2) {
    const int n = g.n;
    d1 = CplxField(n, cplx(0.0, 0.0));
    d2 = CplxField(n, cplx(0.0, 0.0));
    for (int iy = 0; iy < n; ++iy)
        for (int ix = 0; ix < n; ++ix) {
            if (link1_valid(g, ix, iy)) {
                const int ix1 = (ix + 1) % n;
                const double ph = -g.h * s.a1.at(ix, iy);
                d1.at(ix, iy) = (cplx(std::cos(ph), std::sin(ph)) * s.phi.at(ix1, iy) -
                                 s.phi.at(ix, iy)) /
                                g.h;
            }
            if (link2_valid(g, ix, iy)) {
                const int iy1 = (iy + 1) % n;
                const double ph = -g.h * s.a2.at(ix, iy);
                d2.at(ix, iy) = (cplx(std::cos(ph), std::sin(ph)) * s.phi.at(ix, iy1) -
                                 s.phi.at(ix, iy)) /
                                g.h;
            }
        }
}

struct Accelerations {
    RealField a1dd, a2dd;
    CplxField phidd;
};

// exact negative gradient of the discrete energy; sign = +1 is the
// calibrated physical sign of the current coupling (tests exercise -1)
inline Accelerations accelerations_signed(const DynamicState& s, const Grid2D& g,
                                          double tau, double sign) {
    const int n = g.n;
    Accelerations acc;
    acc.a1dd = RealField(n, 0.0);
    acc.a2dd = RealField(n, 0.0);
    acc.phidd = CplxField(n, cplx(0.0, 0.0));

    RealField b = plaquette_b(s.a1, s.a2, g);
    CplxField d1, d2;
    covariant_links(s, g, d1, d2);

    for (int iy = 0; iy < n; ++iy)
        for (int ix = 0; ix < n; ++ix) {
            const int iym = (iy - 1 + n) % n, ixm = (ix - 1 + n) % n;
            if (link1_dynamic(g, ix, iy)) {
                const double db = (b.at(ix, iy) - b.at(ix, iym)) / g.h;
                acc.a1dd.at(ix, iy) =
                    -db + sign * std::imag(std::conj(s.phi.at(ix, iy)) * d1.at(ix, iy));
            }
            if (link2_dynamic(g, ix, iy)) {
                const double db = (b.at(ix, iy) - b.at(ixm, iy)) / g.h;
                acc.a2dd.at(ix, iy) =
                    +db + sign * std::imag(std::conj(s.phi.at(ix, iy)) * d2.at(ix, iy));
            }
            if (node_dynamic(g, ix, iy)) {
                cplx lap = cplx(0.0, 0.0);
                lap += (link1_valid(g, ix, iy) ? d1.at(ix, iy) : cplx(0.0, 0.0));
                lap += (link2_valid(g, ix, iy) ? d2.at(ix, iy) : cplx(0.0, 0.0));
                if (link1_valid(g, ixm, iy)) {
                    const double ph = g.h * s.a1.at(ixm, iy);
                    lap -= cplx(std::cos(ph), std::sin(ph)) * d1.at(ixm, iy);
                }
                if (link2_valid(g, ix, iym)) {
                    const double ph = g.h * s.a2.at(ix, iym);
                    lap -= cplx(std::cos(ph), std::sin(ph)) * d2.at(ix, iym);
                }
                lap /= g.h;
                const cplx ph0 = s.phi.at(ix, iy);
                acc.phidd.at(ix, iy) = lap + 0.5 * (tau - std::norm(ph0)) * ph0;
            }
        }
    return acc;
}

}  // namespace detail

/// Right-hand sides of the second-order system (exact discrete gradient).
inline detail::Accelerations accelerations(const DynamicState& s, const Grid2D& g,
                                           double tau = 1.0) {
    return detail::accelerations_signed(s, g, tau, +1.0);
}

/// Discrete potential energy of the link state (the conserved U).
inline EnergyBreakdown link_potential_energy(const DynamicState& s, const Grid2D& g,
                                             double tau) {
    RealField b = detail::plaquette_b(s.a1, s.a2, g);
    CplxField d1, d2;
    detail::covariant_links(s, g, d1, d2);
    double sb = 0.0, sg = 0.0, sp = 0.0;
    for (std::size_t i = 0; i < b.v.size(); ++i) {
        sb += b.v[i] * b.v[i];
        sg += std::norm(d1.v[i]) + std::norm(d2.v[i]);
        const double w = tau - std::norm(s.phi.v[i]);
        sp += w * w;
    }
    EnergyBreakdown e;
    const double dA = g.cell_area();
    e.field_term = 0.5 * sb * dA;
    e.gradient_term = 0.5 * sg * dA;
    e.potential_term = 0.125 * sp * dA;
    e.total = e.field_term + e.gradient_term + e.potential_term;
    return e;
}

inline double link_kinetic_energy(const DynamicState& s, const Grid2D& g) {
    double acc = 0.0;
    for (std::size_t i = 0; i < s.a1dot.v.size(); ++i)
        acc += s.a1dot.v[i] * s.a1dot.v[i] + s.a2dot.v[i] * s.a2dot.v[i] +
               std::norm(s.phidot.v[i]);
    return 0.5 * acc * g.cell_area();
}

/// L2 norm of the Gauss constraint G = div(adot) - Im(conj(phi) phidot),
/// evaluated in the link form over nodes whose four adjacent links are all
/// dynamic.  Conserved to roundoff along leapfrog evolution.
inline double gauss_residual(const DynamicState& s, const Grid2D& g) {
    const int n = g.n;
    double acc = 0.0;
    for (int iy = 0; iy < n; ++iy)
        for (int ix = 0; ix < n; ++ix) {
            const int ixm = (ix - 1 + n) % n, iym = (iy - 1 + n) % n;
            if (g.domain == Domain::disk) {
                const bool ok = detail::link1_dynamic(g, ix, iy) &&
                                detail::link1_dynamic(g, ixm, iy) &&
                                detail::link2_dynamic(g, ix, iy) &&
                                detail::link2_dynamic(g, ix, iym);
                if (!ok) continue;
            }
            const double div = (s.a1dot.at(ix, iy) - s.a1dot.at(ixm, iy) +
                                s.a2dot.at(ix, iy) - s.a2dot.at(ix, iym)) /
                               g.h;
            const double gsc =
                div - std::imag(std::conj(s.phi.at(ix, iy)) * s.phidot.at(ix, iy));
            acc += gsc * gsc;
        }
    return std::sqrt(acc * g.cell_area());
}

/// Remove the gauge-orbit component of a link-layout tangent so that the
/// linearized (link) Gauss constraint holds exactly: same normal equation
/// as gauge_fix_variation, assembled with forward link differences.
inline void project_tangent_links(const CplxField& phi, RealField& da1, RealField& da2,
                                  CplxField& dphi, const Grid2D& g) {
    const int n = g.n;
    RealField phi2(n);
    for (std::size_t i = 0; i < phi2.v.size(); ++i) phi2.v[i] = std::norm(phi.v[i]);

    auto gradp = [&](const std::vector<double>& chi, RealField& g1, RealField& g2) {
        g1 = RealField(n, 0.0);
        g2 = RealField(n, 0.0);
        for (int iy = 0; iy < n; ++iy)
            for (int ix = 0; ix < n; ++ix) {
                if (detail::link1_dynamic(g, ix, iy)) {
                    const int ix1 = (ix + 1) % n;
                    g1.at(ix, iy) = (chi[std::size_t(iy) * n + ix1] -
                                     chi[std::size_t(iy) * n + ix]) /
                                    g.h;
                }
                if (detail::link2_dynamic(g, ix, iy)) {
                    const int iy1 = (iy + 1) % n;
                    g2.at(ix, iy) = (chi[std::size_t(iy1) * n + ix] -
                                     chi[std::size_t(iy) * n + ix]) /
                                    g.h;
                }
            }
    };
    auto gradT = [&](const RealField& v1, const RealField& v2) {
        std::vector<double> out(std::size_t(n) * n, 0.0);
        for (int iy = 0; iy < n; ++iy)
            for (int ix = 0; ix < n; ++ix) {
                double s = 0.0;
                const int ixm = (ix - 1 + n) % n, iym = (iy - 1 + n) % n;
                if (detail::link1_dynamic(g, ix, iy)) s -= v1.at(ix, iy);
                if (detail::link1_dynamic(g, ixm, iy)) s += v1.at(ixm, iy);
                if (detail::link2_dynamic(g, ix, iy)) s -= v2.at(ix, iy);
                if (detail::link2_dynamic(g, ix, iym)) s += v2.at(ix, iym);
                out[std::size_t(iy) * n + ix] = s / g.h;
            }
        return out;
    };

    // rhs = -gradT(da) - Im(conj(phi) dphi) over dynamic nodes
    std::vector<double> rhs = gradT(da1, da2);
    for (int iy = 0; iy < n; ++iy)
        for (int ix = 0; ix < n; ++ix) {
            const std::size_t k = std::size_t(iy) * n + ix;
            if (!detail::node_dynamic(g, ix, iy)) {
                rhs[k] = 0.0;
                continue;
            }
            rhs[k] = -rhs[k] - std::imag(std::conj(phi.at(ix, iy)) * dphi.at(ix, iy));
        }

    double c = 0.0;
    for (double x : phi2.v) c += x;
    c = std::max(c / double(phi2.v.size()), 1e-8);

    auto apply = [&](const std::vector<double>& chi) {
        RealField g1, g2;
        gradp(chi, g1, g2);
        std::vector<double> y = gradT(g1, g2);  // = (grad+)^T grad+ chi
        for (int iy = 0; iy < n; ++iy)
            for (int ix = 0; ix < n; ++ix) {
                const std::size_t k = std::size_t(iy) * n + ix;
                if (!detail::node_dynamic(g, ix, iy)) {
                    y[k] = chi[k];  // pin chi = 0 off the dynamic region
                    continue;
                }
                y[k] += phi2.v[k] * chi[k];
            }
        return y;
    };
    auto precond = [&](const std::vector<double>& r) {
        if (g.domain == Domain::torus) {
            const TorusTransforms& fft = torus_fft(g);
            RealField rf(n);
            rf.v = r;
            return fft
                .filter_real(rf,
                             [&](int mx, int my) {
                                 const double sx = std::sin(pi * mx / double(n));
                                 const double sy = std::sin(pi * my / double(n));
                                 const double lam =
                                     4.0 / (g.h * g.h) * (sx * sx + sy * sy);
                                 return cplx(1.0 / (lam + c), 0.0);
                             })
                .v;
        }
        // disk: DST on interior, ring entries passed through
        const DiskDst& dst = disk_dst(g);
        const int m = n - 2;
        std::vector<double> ri(std::size_t(m) * m);
        for (int iy = 0; iy < m; ++iy)
            for (int ix = 0; ix < m; ++ix)
                ri[std::size_t(iy) * m + ix] = r[std::size_t(iy + 1) * n + (ix + 1)];
        std::vector<double> ui = dst.solve_shifted(ri, c);
        std::vector<double> out = r;
        for (int iy = 0; iy < m; ++iy)
            for (int ix = 0; ix < m; ++ix)
                out[std::size_t(iy + 1) * n + (ix + 1)] = ui[std::size_t(iy) * m + ix];
        return out;
    };
    std::vector<double> chi;
    pcg(apply, precond, rhs, chi, 1e-12, 4000);

    RealField g1, g2;
    gradp(chi, g1, g2);
    for (int iy = 0; iy < n; ++iy)
        for (int ix = 0; ix < n; ++ix) {
            // subtract the orbit direction (-grad chi, -i chi phi)
            da1.at(ix, iy) += g1.at(ix, iy);
            da2.at(ix, iy) += g2.at(ix, iy);
            if (detail::node_dynamic(g, ix, iy))
                dphi.at(ix, iy) += cplx(0.0, 1.0) * chi[std::size_t(iy) * n + ix] *
                                   phi.at(ix, iy);
        }
}

/// Build a link-layout dynamic state from a nodal configuration (link
/// values by endpoint averaging) with zero velocities.
inline DynamicState make_dynamic_state(const FieldConfig& cfg, const Grid2D& g) {
    const int n = g.n;
    DynamicState s;
    s.a1 = RealField(n, 0.0);
    s.a2 = RealField(n, 0.0);
    s.phi = cfg.phi;
    s.a1dot = RealField(n, 0.0);
    s.a2dot = RealField(n, 0.0);
    s.phidot = CplxField(n, cplx(0.0, 0.0));
    for (int iy = 0; iy < n; ++iy)
        for (int ix = 0; ix < n; ++ix) {
            if (detail::link1_valid(g, ix, iy))
                s.a1.at(ix, iy) =
                    0.5 * (cfg.a1.at(ix, iy) + cfg.a1.at((ix + 1) % n, iy));
            if (detail::link2_valid(g, ix, iy))
                s.a2.at(ix, iy) =
                    0.5 * (cfg.a2.at(ix, iy) + cfg.a2.at(ix, (iy + 1) % n));
        }
    return s;
}

/// Nodal view of a link state (adjacent-link averages) for analysis and
/// GLF1/GLD1 snapshots.
inline FieldConfig to_field_config(const DynamicState& s, const Grid2D& g) {
    const int n = g.n;
    FieldConfig cfg;
    cfg.a1 = RealField(n, 0.0);
    cfg.a2 = RealField(n, 0.0);
    cfg.phi = s.phi;
    for (int iy = 0; iy < n; ++iy)
        for (int ix = 0; ix < n; ++ix) {
            const int ixm = (ix - 1 + n) % n, iym = (iy - 1 + n) % n;
            if (g.domain == Domain::torus) {
                cfg.a1.at(ix, iy) = 0.5 * (s.a1.at(ix, iy) + s.a1.at(ixm, iy));
                cfg.a2.at(ix, iy) = 0.5 * (s.a2.at(ix, iy) + s.a2.at(ix, iym));
            } else {
                const bool l1 = detail::link1_valid(g, ix, iy), l1m = ix > 0;
                cfg.a1.at(ix, iy) = l1 && l1m ? 0.5 * (s.a1.at(ix, iy) + s.a1.at(ixm, iy))
                                   : l1      ? s.a1.at(ix, iy)
                                             : s.a1.at(ixm, iy);
                const bool l2 = detail::link2_valid(g, ix, iy), l2m = iy > 0;
                cfg.a2.at(ix, iy) = l2 && l2m ? 0.5 * (s.a2.at(ix, iy) + s.a2.at(ix, iym))
                                   : l2      ? s.a2.at(ix, iy)
                                             : s.a2.at(ix, iym);
            }
        }
    return cfg;
}

/// Kick-drift-kick leapfrog.  Samples diagnostics every sample_every steps
/// (always including the initial and final states); throws EnergyBlowUp when
/// the energy jumps beyond params.blowup_factor times its initial value.
inline std::vector<EvolutionSample> leapfrog_evolve(DynamicState& s, const Grid2D& g,
                                                    const EvolutionParams& params) {
    if (!(params.dt > 0.0)) throw CflViolation("leapfrog: dt must be positive");
    if (params.dt / g.h > 0.5 + 1e-12)
        throw CflViolation("leapfrog: dt/h exceeds the CFL bound 0.5");

    std::vector<EvolutionSample> samples;
    auto record = [&]() {
        EvolutionSample smp;
        smp.t = s.t;
        smp.kinetic = link_kinetic_energy(s, g);
        smp.potential = link_potential_energy(s, g, params.tau).total;
        smp.energy = smp.kinetic + smp.potential;
        smp.gauss = gauss_residual(s, g);
        smp.zeros = track_zeros(s.phi, g);
        samples.push_back(std::move(smp));
    };
    record();
    const double e0 = samples.front().energy;

    detail::Accelerations acc = detail::accelerations_signed(s, g, params.tau, +1.0);
    for (int step = 0; step < params.n_steps; ++step) {
        const double half = 0.5 * params.dt;
        for (std::size_t i = 0; i < s.a1dot.v.size(); ++i) {
            s.a1dot.v[i] += half * acc.a1dd.v[i];
            s.a2dot.v[i] += half * acc.a2dd.v[i];
            s.phidot.v[i] += half * acc.phidd.v[i];
        }
        for (std::size_t i = 0; i < s.a1.v.size(); ++i) {
            s.a1.v[i] += params.dt * s.a1dot.v[i];
            s.a2.v[i] += params.dt * s.a2dot.v[i];
            s.phi.v[i] += params.dt * s.phidot.v[i];
        }
        acc = detail::accelerations_signed(s, g, params.tau, +1.0);
        for (std::size_t i = 0; i < s.a1dot.v.size(); ++i) {
            s.a1dot.v[i] += half * acc.a1dd.v[i];
            s.a2dot.v[i] += half * acc.a2dd.v[i];
            s.phidot.v[i] += half * acc.phidd.v[i];
        }
        s.t += params.dt;
        if ((step + 1) % params.sample_every == 0 || step + 1 == params.n_steps) {
            record();
            const double e = samples.back().energy;
            if (e > params.blowup_factor * e0 || !std::isfinite(e))
                throw EnergyBlowUp("leapfrog: energy grew from " + std::to_string(e0) +
                                   " to " + std::to_string(e) + " at t = " +
                                   std::to_string(s.t));
        }
    }
    return samples;
}

}  // namespace vortexlab

#endif
