// The adiabatic-principle test harness: build dynamic initial data from a
// vortex solution and an epsilon-scaled, gauge-fixed moduli tangent, evolve
// the hyperbolic equations to slow_time_end / epsilon, track zeros, rescale
// time, and compare against a geodesic trajectory in the same chart.
#ifndef VORTEXLAB_ADIABATIC_HPP
#define VORTEXLAB_ADIABATIC_HPP

#include <Eigen/Dense>

#include <functional>

#include "vortexlab/evolution.hpp"
#include "vortexlab/gaugefix.hpp"
#include "vortexlab/geodesic.hpp"
#include "vortexlab/tmetric.hpp"

namespace vortexlab {

using DivisorFamily = std::function<ZeroDivisor(const Eigen::VectorXd&)>;
using ZeroChart = std::function<Eigen::VectorXd(const std::vector<cplx>&)>;

struct ComparisonReport {
    double epsilon = 0.0;
    double slow_time_end = 0.0;
    // Deviations are measured in chart coordinates: near coincident zeros
    // the zero positions move like sqrt(slow time), so tiny parametrization
    // offsets are sqrt-amplified in zero coordinates while the chart stays
    // smooth (it is the correct metric structure on Sym^d C there).
    double dev = 0.0;          // max over samples of |chart(tracked) - q_geo|
    double path_length = 0.0;  // geodesic path length in chart coordinates
    double energy_drift = 0.0;
    double gauss_growth = 0.0;
    std::vector<double> slow_times;
    std::vector<std::vector<cplx>> tracked;
    std::vector<std::vector<cplx>> geodesic;
};

/// Chart map zeros -> coordinates for the single-vortex chart (z itself).
inline ZeroChart single_zero_chart() {
    return [](const std::vector<cplx>& zs) {
        Eigen::VectorXd q(2);
        if (zs.empty()) {
            q << 0.0, 0.0;
        } else {
            q << zs.front().real(), zs.front().imag();
        }
        return q;
    };
}

/// Chart map for antisymmetric pairs: c2 = z1 z2 (c1 is reported drift).
inline ZeroChart pair_zero_chart() {
    return [](const std::vector<cplx>& zs) {
        Eigen::VectorXd q(2);
        const cplx c2 = zs.size() >= 2 ? zs[0] * zs[1] : cplx(0.0, 0.0);
        q << c2.real(), c2.imag();
        return q;
    };
}

namespace detail {

inline Eigen::VectorXd interp_chart(const std::vector<GeodesicState>& traj,
                                    double sigma) {
    if (sigma <= traj.front().t) return traj.front().q;
    if (sigma >= traj.back().t) return traj.back().q;
    std::size_t lo = 0;
    while (lo + 1 < traj.size() && traj[lo + 1].t < sigma) ++lo;
    const auto& a = traj[lo];
    const auto& b = traj[lo + 1];
    const double w = (sigma - a.t) / (b.t - a.t);
    return (1.0 - w) * a.q + w * b.q;
}

}  // namespace detail

/// Central-difference moduli tangent of the solution family along qdot0,
/// as a nodal field variation (not yet gauge-fixed).
inline FieldVariation moduli_tangent(const DivisorFamily& family,
                                     const Eigen::VectorXd& q0,
                                     const Eigen::VectorXd& qdot0, const Grid2D& grid,
                                     const SolverParams& params, double fd,
                                     const TaubesSolution& base) {
    FieldVariation total;
    total.da1 = RealField(grid.n, 0.0);
    total.da2 = RealField(grid.n, 0.0);
    total.dphi = CplxField(grid.n, cplx(0.0, 0.0));
    for (int mu = 0; mu < q0.size(); ++mu) {
        if (qdot0[mu] == 0.0) continue;
        Eigen::VectorXd qp = q0, qm = q0;
        qp[mu] += fd;
        qm[mu] -= fd;
        TaubesSolution sp = grid.domain == Domain::disk
                                ? solve_taubes_disk(family(qp), grid, params,
                                                    &base.smooth_part)
                                : solve_taubes_torus(family(qp), grid, params,
                                                     &base.smooth_part);
        TaubesSolution sm = grid.domain == Domain::disk
                                ? solve_taubes_disk(family(qm), grid, params,
                                                    &base.smooth_part)
                                : solve_taubes_torus(family(qm), grid, params,
                                                     &base.smooth_part);
        const double w = qdot0[mu] / (2.0 * fd);
        for (std::size_t i = 0; i < total.da1.v.size(); ++i) {
            total.da1.v[i] += w * (sp.cfg.a1.v[i] - sm.cfg.a1.v[i]);
            total.da2.v[i] += w * (sp.cfg.a2.v[i] - sm.cfg.a2.v[i]);
            total.dphi.v[i] += w * (sp.cfg.phi.v[i] - sm.cfg.phi.v[i]);
        }
    }
    return total;
}

/// Dynamic initial data for a vortex at q0 moving with moduli velocity
/// epsilon * qdot0: link layout, velocities projected so the link Gauss
/// constraint holds exactly at t = 0.
inline DynamicState adiabatic_initial_data(const DivisorFamily& family,
                                           const Eigen::VectorXd& q0,
                                           const Eigen::VectorXd& qdot0, double epsilon,
                                           const Grid2D& grid, const SolverParams& params,
                                           double fd, const TaubesSolution& base) {
    FieldVariation tan = moduli_tangent(family, q0, qdot0, grid, params, fd, base);

    DynamicState s = make_dynamic_state(base.cfg, grid);
    // velocities: nodal tangent scaled by epsilon, links by endpoint average
    const int n = grid.n;
    RealField da1(n, 0.0), da2(n, 0.0);
    CplxField dphi(n, cplx(0.0, 0.0));
    for (int iy = 0; iy < n; ++iy)
        for (int ix = 0; ix < n; ++ix) {
            if (detail::link1_dynamic(grid, ix, iy))
                da1.at(ix, iy) = 0.5 * (tan.da1.at(ix, iy) + tan.da1.at((ix + 1) % n, iy));
            if (detail::link2_dynamic(grid, ix, iy))
                da2.at(ix, iy) = 0.5 * (tan.da2.at(ix, iy) + tan.da2.at(ix, (iy + 1) % n));
            if (detail::node_dynamic(grid, ix, iy)) dphi.at(ix, iy) = tan.dphi.at(ix, iy);
        }
    project_tangent_links(s.phi, da1, da2, dphi, grid);
    for (std::size_t i = 0; i < s.a1dot.v.size(); ++i) {
        s.a1dot.v[i] = epsilon * da1.v[i];
        s.a2dot.v[i] = epsilon * da2.v[i];
        s.phidot.v[i] = epsilon * dphi.v[i];
    }
    return s;
}

inline ComparisonReport adiabatic_compare(const DivisorFamily& family,
                                          const ZeroChart& chart,
                                          const Eigen::VectorXd& q0,
                                          const Eigen::VectorXd& qdot0,
                                          const std::vector<GeodesicState>& geo_traj,
                                          double epsilon, double slow_time_end,
                                          const Grid2D& grid, const SolverParams& params,
                                          double fd, EvolutionParams evo) {
    TaubesSolution base = grid.domain == Domain::disk
                              ? solve_taubes_disk(family(q0), grid, params)
                              : solve_taubes_torus(family(q0), grid, params);
    DynamicState s =
        adiabatic_initial_data(family, q0, qdot0, epsilon, grid, params, fd, base);
    const int degree = family(q0).degree();

    const double t_end = slow_time_end / epsilon;
    evo.n_steps = int(std::ceil(t_end / evo.dt - 1e-9));
    std::vector<EvolutionSample> samples = leapfrog_evolve(s, grid, evo);

    ComparisonReport rep;
    rep.epsilon = epsilon;
    rep.slow_time_end = slow_time_end;
    for (const EvolutionSample& smp : samples) {
        const double sigma = epsilon * smp.t;
        Eigen::VectorXd qg = detail::interp_chart(geo_traj, sigma);
        rep.slow_times.push_back(sigma);
        rep.tracked.push_back(smp.zeros);
        rep.geodesic.push_back(family(qg).zeros_with_multiplicity());
        // transient winding mergers can momentarily change the tracked
        // count; those samples are recorded but not scored
        if (int(smp.zeros.size()) == degree)
            rep.dev = std::max(rep.dev, (chart(smp.zeros) - qg).norm());
    }
    rep.energy_drift =
        std::abs(samples.back().energy - samples.front().energy) /
        std::max(1e-300, std::abs(samples.front().energy));
    rep.gauss_growth = samples.back().gauss - samples.front().gauss;

    // geodesic path length in chart coordinates over [0, slow_time_end]
    for (std::size_t i = 1; i < geo_traj.size(); ++i) {
        if (geo_traj[i].t > slow_time_end + 1e-12) break;
        rep.path_length += (geo_traj[i].q - geo_traj[i - 1].q).norm();
    }
    return rep;
}

}  // namespace vortexlab

#endif
