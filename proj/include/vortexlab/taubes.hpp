// Vortex solutions with a prescribed zero divisor via Newton iteration on
// the scalar reduction for u = log|phi|^2:
//
//     lap u = e^u - tau + 4 pi sum_j d_j delta_{z_j}
//
// Disk (plane surrogate): u = u_sing + v with the bounded singular profile
// u_sing = log(|P|^2/(1 + mu_c |P|^2)) built from the monic divisor
// polynomial P, Dirichlet tail data on the node ring, 5-point Laplacian,
// Newton steps by CG with a DST-I fast solver as preconditioner.  Torus:
// heat-kernel-regularized point sources, spectral Laplacian, Newton steps
// by CG with a spectral shifted-inverse preconditioner.  Solvability on
// the torus requires the strict margin tau L^2 - 4 pi d > 0.
#ifndef VORTEXLAB_TAUBES_HPP
#define VORTEXLAB_TAUBES_HPP

#include <cmath>
#include <functional>
#include <vector>

#include "vortexlab/cg.hpp"
#include "vortexlab/divisor.hpp"
#include "vortexlab/energy.hpp"
#include "vortexlab/fft.hpp"
#include "vortexlab/gauge.hpp"
#include "vortexlab/ops.hpp"
#include "vortexlab/winding.hpp"

namespace vortexlab {

struct SolverParams {
    double tol = 1e-10;        // L2 residual tolerance on the u-equation
    int max_iters = 50;        // Newton budget
    double delta_smoothing = 1.0;  // mu: core regularization scale
    double tau = 1.0;
};

struct TaubesSolution {
    RealField u;        // log |phi|^2 on the full grid
    RealField smooth_part;  // v (disk) or w (torus): u minus the singular profile
    FieldConfig cfg;    // reconstructed fields (torus: cut-chart, see docs)
    RealField b;        // magnetic field
    double r1 = 0.0;    // |(D1 + i D2) phi|_L2
    double r2 = 0.0;    // |b - (tau - |phi|^2)/2|_L2
    int newton_iters = 0;
    double newton_residual = 0.0;
    EnergyBreakdown energy;
};

/// tau * vol - 4 pi d; vortex solutions exist on the compact domain iff > 0.
inline double bradlow_margin(int d, double tau, double vol) {
    if (d < 1) throw std::invalid_argument("bradlow_margin: d >= 1 required");
    if (!(tau > 0.0) || !(vol > 0.0))
        throw std::invalid_argument("bradlow_margin: tau and vol must be positive");
    return tau * vol - 4.0 * pi * d;
}

/// (r1, r2): L2 residuals of the two first-order vortex equations for an
/// arbitrary smooth configuration, evaluated with the module's standard
/// discrete operators.  Both vanish (to discretization error) exactly on
/// vortex solutions.
inline std::pair<double, double> vortex_residual(const FieldConfig& cfg, double tau,
                                                 const Grid2D& g) {
    auto [d1, d2] = covariant_derivative(cfg.a1, cfg.a2, cfg.phi, g);
    RealField b = curvature(cfg.a1, cfg.a2, g);
    double s1 = 0.0, s2 = 0.0;
    for (std::size_t i = 0; i < b.v.size(); ++i) {
        s1 += std::norm(d1.v[i] + cplx(0.0, 1.0) * d2.v[i]);
        const double w = b.v[i] - 0.5 * (tau - std::norm(cfg.phi.v[i]));
        s2 += w * w;
    }
    const double dA = g.cell_area();
    return {std::sqrt(s1 * dA), std::sqrt(s2 * dA)};
}

namespace detail {

// The singular profile on the disk is built from the monic polynomial
// P(z) = prod (z - z_j)^{d_j} of the divisor,
//     u_sing = log( |P|^2 / (1 + mu_c |P|^2) ),
// so it is a smooth function of the moduli-chart coefficients (metric
// differentiation across coincident zeros stays smooth).  Its Laplacian is
// known in closed form:
//     lap u_sing = 4 pi sum_j d_j delta_{z_j} - 4 mu_c |P'|^2/(1+mu_c|P|^2)^2.
// mu_c = mu / (1 + sum_k |c_k|^2)^{(d-1)/d} keeps the effective core width
// O(1) independently of the zero separations; the normalizer is a smooth
// function of the monic coefficients c_k (quantities like |P'(z_j)|^2 or
// sum |z_j|^2 are not smooth at coincident zeros and would put a kink into
// the moduli metric).
struct DiskProfile {
    std::vector<cplx> zeros;  // with multiplicity
    double mu_c = 1.0;

    DiskProfile(const ZeroDivisor& dv, double mu) : zeros(dv.zeros_with_multiplicity()) {
        const std::size_t d = zeros.size();
        std::vector<cplx> c(d + 1, cplx(0.0, 0.0));
        c[0] = 1.0;
        std::size_t used = 0;
        for (const cplx& z : zeros) {
            ++used;
            for (std::size_t k = used; k >= 1; --k) c[k] = c[k] - z * c[k - 1];
        }
        double s = 0.0;
        for (std::size_t k = 1; k <= d; ++k) s += std::norm(c[k]);
        mu_c = mu / std::pow(1.0 + s, double(d - 1) / double(d));
    }

    cplx poly(const cplx& z) const {
        cplx p(1.0, 0.0);
        for (const cplx& z0 : zeros) p *= z - z0;
        return p;
    }
    cplx dpoly(const cplx& z) const {
        // P' via the product rule over the multiset
        cplx s(0.0, 0.0);
        for (std::size_t j = 0; j < zeros.size(); ++j) {
            cplx p(1.0, 0.0);
            for (std::size_t k = 0; k < zeros.size(); ++k)
                if (k != j) p *= z - zeros[k];
            s += p;
        }
        return s;
    }

    double exp_u_sing(const cplx& z) const {
        const double p2 = std::norm(poly(z));
        return p2 / (1.0 + mu_c * p2);
    }
    double u_sing(const cplx& z) const {
        const double p2 = std::norm(poly(z));
        return std::log(p2 / (1.0 + mu_c * p2));
    }
    // the smooth part of -lap u_sing
    double g_analytic(const cplx& z) const {
        const double q = 1.0 + mu_c * std::norm(poly(z));
        return 4.0 * mu_c * std::norm(dpoly(z)) / (q * q);
    }
};

// 5-point Laplacian of the full-grid field at interior nodes
inline void lap5_interior(const RealField& f, double h, std::vector<double>& out) {
    const int n = f.n, m = n - 2;
    const double ih2 = 1.0 / (h * h);
    out.resize(std::size_t(m) * m);
    for (int iy = 1; iy <= n - 2; ++iy)
        for (int ix = 1; ix <= n - 2; ++ix)
            out[std::size_t(iy - 1) * m + (ix - 1)] =
                (f.at(ix + 1, iy) + f.at(ix - 1, iy) + f.at(ix, iy + 1) +
                 f.at(ix, iy - 1) - 4.0 * f.at(ix, iy)) *
                ih2;
}

}  // namespace detail

/// Reconstruct (a, phi) from u and the divisor.
///
/// Disk: phi = e^{u/2} P/|P|; the singular parts of grad Theta and
/// grad u_sing cancel analytically, leaving
///   a1 = mu_c Im(conj(P) P')/(1+mu_c|P|^2) + dy(v)/2,
///   a2 = mu_c Re(conj(P) P')/(1+mu_c|P|^2) - dx(v)/2.
///
/// Torus: cut-chart construction on nearest-image displacements,
/// a = grad Theta + (du/dy, -du/dx)/2 with spectral derivatives of the
/// periodic u.  Seams are unavoidable (no global periodic connection exists
/// in a nonzero sector); gauge-invariant observables never use this chart.
inline FieldConfig reconstruct_fields(const RealField& u, const RealField& smooth_part,
                                      const ZeroDivisor& divisor, const Grid2D& g,
                                      double mu) {
    const int n = g.n;
    FieldConfig cfg;
    cfg.a1 = RealField(n);
    cfg.a2 = RealField(n);
    cfg.phi = CplxField(n);

    if (g.domain == Domain::disk) {
        detail::DiskProfile prof(divisor, mu);
        RealField dv_x = deriv_x(smooth_part, g);
        RealField dv_y = deriv_y(smooth_part, g);
        for (int iy = 0; iy < n; ++iy)
            for (int ix = 0; ix < n; ++ix) {
                const cplx z(g.x1(ix), g.x2(iy));
                const cplx P = prof.poly(z);
                const cplx PPd = std::conj(P) * prof.dpoly(z);
                const double q = 1.0 + prof.mu_c * std::norm(P);
                cfg.a1.at(ix, iy) =
                    prof.mu_c * PPd.imag() / q + 0.5 * dv_y.at(ix, iy);
                cfg.a2.at(ix, iy) =
                    prof.mu_c * PPd.real() / q - 0.5 * dv_x.at(ix, iy);
                const double mod = std::exp(0.5 * u.at(ix, iy));
                const double ap = std::abs(P);
                cfg.phi.at(ix, iy) = ap > 0.0 ? mod * P / ap : cplx(0.0, 0.0);
            }
        return cfg;
    }

    const double L = g.extent;
    RealField du_x = deriv_x(u, g);
    RealField du_y = deriv_y(u, g);
    for (int iy = 0; iy < n; ++iy)
        for (int ix = 0; ix < n; ++ix) {
            const double x = g.x1(ix), y = g.x2(iy);
            double a1 = 0.5 * du_y.at(ix, iy);
            double a2 = -0.5 * du_x.at(ix, iy);
            double theta = 0.0;
            for (const auto& zp : divisor.points) {
                double dx = x - zp.z.real(), dy = y - zp.z.imag();
                dx -= L * std::round(dx / L);
                dy -= L * std::round(dy / L);
                double r2 = dx * dx + dy * dy;
                if (r2 < 1e-24) r2 = 1e-24;
                a1 += zp.mult * (-dy) / r2;
                a2 += zp.mult * dx / r2;
                theta += zp.mult * std::atan2(dy, dx);
            }
            cfg.a1.at(ix, iy) = a1;
            cfg.a2.at(ix, iy) = a2;
            const double mod = std::exp(0.5 * u.at(ix, iy));
            cfg.phi.at(ix, iy) = mod * cplx(std::cos(theta), std::sin(theta));
        }
    return cfg;
}

/// d-vortex solution on the plane patch.  Newton on the smooth remainder v
/// with Dirichlet data v = log(tau) - u_sing on the node ring (the decaying
/// tail of the true solution).
inline TaubesSolution solve_taubes_disk(const ZeroDivisor& divisor, const Grid2D& g,
                                        const SolverParams& params,
                                        const RealField* v_init = nullptr) {
    if (g.domain != Domain::disk)
        throw std::invalid_argument("solve_taubes_disk: disk grid required");
    divisor.validate();
    if (!(params.tau > 0.0)) throw std::invalid_argument("solver: tau must be positive");
    const double R = g.extent;
    for (const auto& zp : divisor.points)
        if (std::abs(zp.z) > R - 3.0)
            throw ZeroTooCloseToBoundary("solve_taubes_disk: zeros must satisfy |z| <= R-3");

    const int n = g.n, m = n - 2;
    const double mu = params.delta_smoothing;
    const double tau = params.tau;
    const double log_tau = std::log(tau);

    detail::DiskProfile prof(divisor, mu);
    RealField g_an(n), e_using(n);
    for (int iy = 0; iy < n; ++iy)
        for (int ix = 0; ix < n; ++ix) {
            const cplx z(g.x1(ix), g.x2(iy));
            g_an.at(ix, iy) = prof.g_analytic(z);
            e_using.at(ix, iy) = prof.exp_u_sing(z);
        }

    // v on the full grid; ring nodes hold the Dirichlet data throughout
    RealField v(n, 0.0);
    if (v_init && v_init->n == n) v = *v_init;
    for (int iy = 0; iy < n; ++iy)
        for (int ix = 0; ix < n; ++ix)
            if (g.on_boundary_ring(ix, iy))
                v.at(ix, iy) =
                    log_tau - prof.u_sing(cplx(g.x1(ix), g.x2(iy)));

    const DiskDst& dst = disk_dst(g);
    auto eu_of = [&](const RealField& vv) {
        RealField eu(n);
        for (std::size_t i = 0; i < eu.v.size(); ++i)
            eu.v[i] = e_using.v[i] * std::exp(vv.v[i]);
        return eu;
    };
    auto residual_of = [&](const RealField& vv, const RealField& eu,
                           std::vector<double>& F) {
        detail::lap5_interior(vv, g.h, F);
        for (int iy = 1; iy <= n - 2; ++iy)
            for (int ix = 1; ix <= n - 2; ++ix) {
                const std::size_t k = std::size_t(iy - 1) * m + (ix - 1);
                F[k] += -eu.at(ix, iy) + tau - g_an.at(ix, iy);
            }
    };

    RealField eu = eu_of(v);
    std::vector<double> F;
    residual_of(v, eu, F);
    double rnorm = std::sqrt(vdot(F, F) * g.cell_area());

    int iters = 0;
    while (rnorm > params.tol) {
        if (iters >= params.max_iters) throw NonConvergence(rnorm, iters);
        ++iters;
        // (-lap5 + e^u) delta = F on the interior, delta = 0 on the ring
        double cmean = 0.0;
        for (int iy = 1; iy <= n - 2; ++iy)
            for (int ix = 1; ix <= n - 2; ++ix) cmean += eu.at(ix, iy);
        cmean /= double(m) * m;
        const double ih2 = 1.0 / (g.h * g.h);
        auto apply = [&](const std::vector<double>& x) {
            std::vector<double> y(x.size());
            for (int iy = 0; iy < m; ++iy)
                for (int ix = 0; ix < m; ++ix) {
                    const std::size_t k = std::size_t(iy) * m + ix;
                    double lap = -4.0 * x[k];
                    if (ix > 0) lap += x[k - 1];
                    if (ix < m - 1) lap += x[k + 1];
                    if (iy > 0) lap += x[k - m];
                    if (iy < m - 1) lap += x[k + m];
                    y[k] = -lap * ih2 + eu.at(ix + 1, iy + 1) * x[k];
                }
            return y;
        };
        auto precond = [&](const std::vector<double>& r) {
            return dst.solve_shifted(r, cmean);
        };
        std::vector<double> delta;
        pcg(apply, precond, F, delta, 1e-12, 2000);

        // damped update, deterministic backtracking
        double step = 1.0;
        for (int bt = 0; bt < 25; ++bt) {
            RealField vt = v;
            for (int iy = 1; iy <= n - 2; ++iy)
                for (int ix = 1; ix <= n - 2; ++ix)
                    vt.at(ix, iy) += step * delta[std::size_t(iy - 1) * m + (ix - 1)];
            RealField eut = eu_of(vt);
            std::vector<double> Ft;
            residual_of(vt, eut, Ft);
            const double rt = std::sqrt(vdot(Ft, Ft) * g.cell_area());
            if (rt < rnorm || step < 1e-4) {
                v = vt;
                eu = eut;
                F = Ft;
                rnorm = rt;
                break;
            }
            step *= 0.5;
        }
    }

    TaubesSolution sol;
    sol.newton_iters = iters;
    sol.newton_residual = rnorm;
    sol.smooth_part = v;
    sol.u = RealField(n);
    for (int iy = 0; iy < n; ++iy)
        for (int ix = 0; ix < n; ++ix)
            sol.u.at(ix, iy) =
                prof.u_sing(cplx(g.x1(ix), g.x2(iy))) + v.at(ix, iy);
    sol.cfg = reconstruct_fields(sol.u, v, divisor, g, mu);
    sol.b = curvature(sol.cfg.a1, sol.cfg.a2, g);
    auto [r1, r2] = vortex_residual(sol.cfg, tau, g);
    sol.r1 = r1;
    sol.r2 = r2;
    sol.energy = potential_energy(sol.cfg, tau, g);
    return sol;
}

/// d-vortex solution on the torus.  The point sources are heat-kernel
/// regularized at scale s = (2h)^2 * mu, which keeps the source band-limited
/// while preserving int delta = 1 exactly; the discrete mass identity
/// int e^u = tau L^2 - 4 pi d then holds to the Newton tolerance.
inline TaubesSolution solve_taubes_torus(const ZeroDivisor& divisor_in, const Grid2D& g,
                                         const SolverParams& params,
                                         const RealField* w_init = nullptr) {
    if (g.domain != Domain::torus)
        throw std::invalid_argument("solve_taubes_torus: torus grid required");
    divisor_in.validate();
    if (!(params.tau > 0.0)) throw std::invalid_argument("solver: tau must be positive");
    const double L = g.extent;
    const ZeroDivisor divisor = divisor_in.reduced_mod(L);
    const int d = divisor.degree();
    const double tau = params.tau;
    const double margin = tau * L * L - 4.0 * pi * d;
    if (!(margin > 0.0)) throw BradlowViolation(margin);

    const int n = g.n;
    const TorusTransforms& fft = torus_fft(g);
    const double s = 4.0 * g.h * g.h * params.delta_smoothing;

    // u_sing: lap u_sing = 4 pi sum_j d_j (delta_s - 1/L^2), mean zero
    auto source_hat = [&](int mx, int my) -> cplx {
        const double kx = fft.k_of(mx), ky = fft.k_of(my);
        cplx sum(0.0, 0.0);
        for (const auto& zp : divisor.points) {
            const double ph = -(kx * zp.z.real() + ky * zp.z.imag());
            sum += double(zp.mult) * cplx(std::cos(ph), std::sin(ph));
        }
        return sum * std::exp(-s * (kx * kx + ky * ky)) / (L * L);
    };
    RealField u_sing = fft.synthesize([&](int mx, int my) -> cplx {
        if (mx == 0 && my == 0) return cplx(0.0, 0.0);
        const double kx = fft.k_of(mx), ky = fft.k_of(my);
        return -4.0 * pi * source_hat(mx, my) / (kx * kx + ky * ky);
    });
    RealField delta_s = fft.synthesize(source_hat);  // sum_j d_j delta_s_j

    RealField w(n, 0.0);
    if (w_init && w_init->n == n) w = *w_init;

    const double bg = 4.0 * pi * d / (L * L);
    auto eu_of = [&](const RealField& ww) {
        RealField eu(n);
        for (std::size_t i = 0; i < eu.v.size(); ++i)
            eu.v[i] = std::exp(u_sing.v[i] + ww.v[i]);
        return eu;
    };
    // F(w) = lap w - e^u + tau - 4 pi d / L^2
    auto residual_of = [&](const RealField& ww, const RealField& eu) {
        RealField F = fft.laplacian(ww);
        for (std::size_t i = 0; i < F.v.size(); ++i) F.v[i] += -eu.v[i] + tau - bg;
        return F;
    };

    RealField eu = eu_of(w);
    RealField F = residual_of(w, eu);
    double rnorm = l2_norm(F, g);

    int iters = 0;
    while (rnorm > params.tol) {
        if (iters >= params.max_iters) throw NonConvergence(rnorm, iters);
        ++iters;
        const double cmean = margin / (L * L);  // mean of e^u on the solution
        auto apply = [&](const std::vector<double>& x) {
            RealField xf(n);
            xf.v = x;
            RealField lap = fft.laplacian(xf);
            std::vector<double> y(x.size());
            for (std::size_t i = 0; i < y.size(); ++i)
                y[i] = -lap.v[i] + eu.v[i] * x[i];
            return y;
        };
        auto precond = [&](const std::vector<double>& r) {
            RealField rf(n);
            rf.v = r;
            return fft.inv_shifted_laplacian(rf, cmean).v;
        };
        std::vector<double> delta;
        pcg(apply, precond, F.v, delta, 1e-12, 2000);

        double step = 1.0;
        for (int bt = 0; bt < 25; ++bt) {
            RealField wt = w;
            for (std::size_t i = 0; i < wt.v.size(); ++i) wt.v[i] += step * delta[i];
            RealField eut = eu_of(wt);
            RealField Ft = residual_of(wt, eut);
            const double rt = l2_norm(Ft, g);
            if (rt < rnorm || step < 1e-4) {
                w = wt;
                eu = eut;
                F = Ft;
                rnorm = rt;
                break;
            }
            step *= 0.5;
        }
    }

    TaubesSolution sol;
    sol.newton_iters = iters;
    sol.newton_residual = rnorm;
    sol.smooth_part = w;
    sol.u = RealField(n);
    for (std::size_t i = 0; i < sol.u.v.size(); ++i) sol.u.v[i] = u_sing.v[i] + w.v[i];

    // gauge-invariant magnetic field: b = -lap(w)/2 + 2 pi d / L^2
    RealField lw = fft.laplacian(w);
    sol.b = RealField(n);
    for (std::size_t i = 0; i < lw.v.size(); ++i)
        sol.b.v[i] = -0.5 * lw.v[i] + 2.0 * pi * d / (L * L);

    sol.cfg = reconstruct_fields(sol.u, w, divisor, g, params.delta_smoothing);

    // r2 from the two routes for b; r1 from the independent stream-function
    // inversion of b (both gauge-invariant; see docs/conventions.md)
    {
        RealField r2f(n);
        for (std::size_t i = 0; i < r2f.v.size(); ++i)
            r2f.v[i] = sol.b.v[i] - 0.5 * (tau - std::exp(sol.u.v[i]));
        sol.r2 = l2_norm(r2f, g);

        RealField rhs(n);
        for (std::size_t i = 0; i < rhs.v.size(); ++i)
            rhs.v[i] = sol.b.v[i] - 4.0 * pi * delta_s.v[i] / 2.0;
        RealField psi = fft.poisson_zero_mean(rhs);
        RealField c1 = fft.deriv_y(psi);
        RealField c2 = fft.deriv_x(psi);
        for (auto& x : c2.v) x = -x;
        RealField ux = fft.deriv_x(sol.u);
        RealField uy = fft.deriv_y(sol.u);
        double acc = 0.0;
        for (std::size_t i = 0; i < ux.v.size(); ++i) {
            const double e1 = 0.5 * ux.v[i] - c2.v[i];
            const double e2 = 0.5 * uy.v[i] + c1.v[i];
            acc += std::exp(sol.u.v[i]) * (e1 * e1 + e2 * e2);
        }
        sol.r1 = std::sqrt(acc * g.cell_area());
    }

    // energy via gauge-invariant densities: |D phi|^2 = e^u |grad u|^2 / 2
    {
        RealField ux = fft.deriv_x(sol.u);
        RealField uy = fft.deriv_y(sol.u);
        double sb = 0.0, sg = 0.0, sp = 0.0;
        for (std::size_t i = 0; i < ux.v.size(); ++i) {
            sb += sol.b.v[i] * sol.b.v[i];
            const double eui = std::exp(sol.u.v[i]);
            sg += 0.5 * eui * (ux.v[i] * ux.v[i] + uy.v[i] * uy.v[i]);
            const double wq = tau - eui;
            sp += wq * wq;
        }
        const double dA = g.cell_area();
        sol.energy.field_term = 0.5 * sb * dA;
        sol.energy.gradient_term = 0.5 * sg * dA;
        sol.energy.potential_term = 0.125 * sp * dA;
        sol.energy.total = sol.energy.field_term + sol.energy.gradient_term +
                           sol.energy.potential_term;
    }
    return sol;
}

/// Positions of the deepest local minima of e^u (gauge-invariant zero
/// locator; used for torus solutions where phi is chart-dependent).
inline std::vector<cplx> solution_minima(const RealField& u, const Grid2D& g,
                                         int count) {
    struct Min {
        double val;
        int ix, iy;
    };
    std::vector<Min> mins;
    const int n = g.n;
    const bool wrap = g.domain == Domain::torus;
    for (int iy = 0; iy < n; ++iy)
        for (int ix = 0; ix < n; ++ix) {
            if (!wrap && (ix == 0 || iy == 0 || ix == n - 1 || iy == n - 1)) continue;
            const double c = u.at(ix, iy);
            bool is_min = true;
            for (int dy = -1; dy <= 1 && is_min; ++dy)
                for (int dx = -1; dx <= 1 && is_min; ++dx) {
                    if (dx == 0 && dy == 0) continue;
                    const double nb = wrap ? u.atp(ix + dx, iy + dy)
                                           : u.at(ix + dx, iy + dy);
                    if (nb < c) is_min = false;
                }
            if (is_min) mins.push_back({c, ix, iy});
        }
    std::sort(mins.begin(), mins.end(),
              [](const Min& a, const Min& b) { return a.val < b.val; });
    std::vector<cplx> out;
    for (int i = 0; i < count && i < int(mins.size()); ++i)
        out.emplace_back(g.x1(mins[i].ix), g.x2(mins[i].iy));
    return out;
}

}  // namespace vortexlab

#endif
