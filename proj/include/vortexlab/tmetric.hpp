// The kinetic (T-) metric on the vortex moduli space: central finite
// differences of the solver's solution family along moduli coordinates,
// gauge-fixed and paired in L2.
#ifndef VORTEXLAB_TMETRIC_HPP
#define VORTEXLAB_TMETRIC_HPP

#include <Eigen/Dense>

#include <future>
#include <map>
#include <optional>

#include "vortexlab/chart.hpp"
#include "vortexlab/gaugefix.hpp"
#include "vortexlab/geodesic.hpp"
#include "vortexlab/taubes.hpp"

namespace vortexlab {

struct TMetric {
    Eigen::MatrixXd g;       // 2d x 2d, coordinates (Re z_1, Im z_1, ...)
    ModuliPoint eval_point;
    double fd_step = 0.0;
    bool near_coincidence = false;  // zeros closer than 4 * fd_step
    bool spd = false;               // eigenvalues > 1e-8 * trace / dim
    double min_eigenvalue = 0.0;
};

namespace detail {

inline TaubesSolution solve_divisor(const ZeroDivisor& dv, const Grid2D& g,
                                    const SolverParams& params,
                                    const RealField* warm = nullptr) {
    return g.domain == Domain::disk ? solve_taubes_disk(dv, g, params, warm)
                                    : solve_taubes_torus(dv, g, params, warm);
}

inline FieldVariation central_difference(const FieldConfig& plus,
                                         const FieldConfig& minus, double step) {
    FieldVariation d;
    const double inv = 1.0 / (2.0 * step);
    d.da1 = plus.a1;
    d.da2 = plus.a2;
    d.dphi = plus.phi;
    for (std::size_t i = 0; i < d.da1.v.size(); ++i) {
        d.da1.v[i] = (plus.a1.v[i] - minus.a1.v[i]) * inv;
        d.da2.v[i] = (plus.a2.v[i] - minus.a2.v[i]) * inv;
        d.dphi.v[i] = (plus.phi.v[i] - minus.phi.v[i]) * inv;
    }
    return d;
}

inline double min_pair_separation(const std::vector<cplx>& zs) {
    double m = 1e300;
    for (std::size_t i = 0; i < zs.size(); ++i)
        for (std::size_t j = i + 1; j < zs.size(); ++j)
            m = std::min(m, std::abs(zs[i] - zs[j]));
    return m;
}

}  // namespace detail

/// T-metric at q in real zero coordinates.  One base solve plus two solves
/// per coordinate (central differences at fd_step), each projected by
/// gauge_fix_variation against the base configuration.
inline TMetric t_metric(const ModuliPoint& q, const Grid2D& grid,
                        const SolverParams& params, double fd_step = 1e-2) {
    if (grid.domain != Domain::disk)
        throw std::invalid_argument(
            "t_metric: nonzero-degree torus tangents are not representable in a "
            "single periodic chart (the cut seams dominate field differences); "
            "moduli dynamics runs on the disk");
    const int d = q.degree();
    const int dim = 2 * d;
    TMetric tm;
    tm.eval_point = q;
    tm.fd_step = fd_step;
    tm.near_coincidence =
        d > 1 && detail::min_pair_separation(q.zeros) < 4.0 * fd_step;

    TaubesSolution base = detail::solve_divisor(q.divisor(1e-12), grid, params);

    std::vector<FieldVariation> tangents;
    tangents.reserve(dim);
    for (int mu = 0; mu < dim; ++mu) {
        const int j = mu / 2;
        const cplx offset = (mu % 2 == 0) ? cplx(fd_step, 0.0) : cplx(0.0, fd_step);
        std::vector<cplx> zp = q.zeros, zm = q.zeros;
        zp[j] += offset;
        zm[j] -= offset;
        TaubesSolution sp = detail::solve_divisor(divisor_from_zeros(zp), grid, params,
                                                  &base.smooth_part);
        TaubesSolution sm = detail::solve_divisor(divisor_from_zeros(zm), grid, params,
                                                  &base.smooth_part);
        FieldVariation dv = detail::central_difference(sp.cfg, sm.cfg, fd_step);
        tangents.push_back(gauge_fix_variation(base.cfg, dv, grid));
    }

    tm.g = Eigen::MatrixXd(dim, dim);
    for (int mu = 0; mu < dim; ++mu)
        for (int nu = mu; nu < dim; ++nu) {
            const double v = variation_inner_product(tangents[mu], tangents[nu], grid);
            tm.g(mu, nu) = v;
            tm.g(nu, mu) = v;
        }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(tm.g);
    tm.min_eigenvalue = es.eigenvalues().minCoeff();
    tm.spd = tm.min_eigenvalue > 1e-8 * tm.g.trace() / dim;
    return tm;
}

/// Metric oracle in the monic-coefficient chart.  The leading coefficients
/// c_1..c_k may be pinned (fixed_prefix); the oracle's coordinates are the
/// real and imaginary parts of the remaining coefficients.  Solutions are
/// cached by exact coordinate value, which the geodesic integrators exploit
/// when their stencils revisit lattice points.
class ChartMetricOracle {
  public:
    ChartMetricOracle(int degree, std::vector<cplx> fixed_prefix, const Grid2D& grid,
                      const SolverParams& params, double fd_step = 1e-2,
                      int threads = 1)
        : d_(degree), prefix_(std::move(fixed_prefix)), grid_(grid), params_(params),
          fd_(fd_step), threads_(std::max(1, threads)) {
        if (int(prefix_.size()) >= d_)
            throw std::invalid_argument("ChartMetricOracle: nothing left to vary");
        if (grid_.domain != Domain::disk)
            throw std::invalid_argument("ChartMetricOracle: disk grids only (see t_metric)");
        nactive_ = d_ - int(prefix_.size());
    }

    void set_threads(int t) { threads_ = std::max(1, t); }

    int dim() const { return 2 * nactive(); }
    int nactive() const { return nactive_impl(); }
    double fd_step() const { return fd_; }

    ModuliPoint point(const Eigen::VectorXd& x) const {
        std::vector<cplx> coeffs = prefix_;
        for (int k = 0; k < nactive_impl(); ++k)
            coeffs.push_back(cplx(x[2 * k], x[2 * k + 1]));
        return moduli_from_chart(coeffs);
    }

    Eigen::MatrixXd operator()(const Eigen::VectorXd& x) const {
        if (auto it = cache_.find(key(x)); it != cache_.end()) return it->second;
        std::map<std::vector<int>, TaubesSolution> solves;
        Eigen::MatrixXd g = metric_at(x, std::vector<int>(2 * nactive_impl(), 0), solves);
        if (cache_.size() > 4096) cache_.clear();
        cache_.emplace(key(x), g);
        return g;
    }

    /// Metric and its coordinate derivatives from one shared stencil of
    /// solves: the five metric evaluations of a central-difference jet
    /// revisit the same divisor lattice, so each point is solved once.
    /// Independent solves and projections run on up to `threads` workers;
    /// assembly order is fixed, so results do not depend on the thread count.
    MetricJet jet(const Eigen::VectorXd& x) const {
        const int dim2 = 2 * nactive_impl();
        std::map<std::vector<int>, TaubesSolution> solves;

        // enumerate the full stencil and prefetch in parallel
        std::vector<std::vector<int>> bases;
        bases.push_back(std::vector<int>(dim2, 0));
        for (int l = 0; l < dim2; ++l)
            for (int s : {1, -1}) {
                std::vector<int> o(dim2, 0);
                o[l] = s;
                bases.push_back(o);
            }
        std::vector<std::vector<int>> wanted;
        for (const auto& b : bases) {
            wanted.push_back(b);
            for (int mu = 0; mu < dim2; ++mu)
                for (int s : {1, -1}) {
                    std::vector<int> o = b;
                    o[mu] += s;
                    wanted.push_back(o);
                }
        }
        std::sort(wanted.begin(), wanted.end());
        wanted.erase(std::unique(wanted.begin(), wanted.end()), wanted.end());
        prefetch(x, wanted, solves);

        MetricJet out;
        out.g = metric_at(x, bases[0], solves);
        out.dg.resize(dim2);
        for (int l = 0; l < dim2; ++l)
            out.dg[l] = (metric_at(x, bases[1 + 2 * l], solves) -
                         metric_at(x, bases[2 + 2 * l], solves)) /
                        (2.0 * fd_);
        last_base_ = solves[bases[0]].smooth_part;
        return out;
    }

    MetricJetOracle jet_oracle() const {
        return [this](const Eigen::VectorXd& x) { return jet(x); };
    }

  private:
    int nactive_impl() const { return nactive_; }

    std::vector<double> key(const Eigen::VectorXd& x) const {
        return std::vector<double>(x.data(), x.data() + x.size());
    }

    TaubesSolution solve_offset(const Eigen::VectorXd& x, const std::vector<int>& offset,
                                const RealField* warm) const {
        Eigen::VectorXd xx = x;
        for (int l = 0; l < int(offset.size()); ++l) xx[l] += fd_ * offset[l];
        ZeroDivisor dv = point(xx).divisor(1e-12);
        return detail::solve_divisor(dv, grid_, params_, warm);
    }

    // Solve every offset once.  The central point is solved first (warmed by
    // the previous jet's base); all others warm-start from it, so results do
    // not depend on scheduling.
    void prefetch(const Eigen::VectorXd& x, const std::vector<std::vector<int>>& offs,
                  std::map<std::vector<int>, TaubesSolution>& solves) const {
        const std::vector<int> zero(2 * nactive_impl(), 0);
        const RealField* warm0 = last_base_.n > 0 ? &last_base_ : nullptr;
        solves.emplace(zero, solve_offset(x, zero, warm0));
        const RealField& base_warm = solves[zero].smooth_part;

        std::vector<std::vector<int>> todo;
        for (const auto& o : offs)
            if (o != zero) todo.push_back(o);
        if (threads_ <= 1) {
            for (const auto& o : todo) solves.emplace(o, solve_offset(x, o, &base_warm));
            return;
        }
        for (std::size_t k = 0; k < todo.size(); k += threads_) {
            std::vector<std::future<TaubesSolution>> futs;
            for (std::size_t j = k; j < std::min(todo.size(), k + threads_); ++j)
                futs.push_back(std::async(std::launch::async, [&, j] {
                    return solve_offset(x, todo[j], &base_warm);
                }));
            for (std::size_t j = k; j < std::min(todo.size(), k + threads_); ++j)
                solves.emplace(todo[j], futs[j - k].get());
        }
    }

    const TaubesSolution& solve_at(const Eigen::VectorXd& x,
                                   const std::vector<int>& offset,
                                   std::map<std::vector<int>, TaubesSolution>& solves) const {
        auto it = solves.find(offset);
        if (it != solves.end()) return it->second;
        const std::vector<int> zero(2 * nactive_impl(), 0);
        auto base_it = solves.find(zero);
        const RealField* warm =
            base_it != solves.end() ? &base_it->second.smooth_part
                                    : (last_base_.n > 0 ? &last_base_ : nullptr);
        return solves.emplace(offset, solve_offset(x, offset, warm)).first->second;
    }

    Eigen::MatrixXd metric_at(const Eigen::VectorXd& x, const std::vector<int>& at,
                              std::map<std::vector<int>, TaubesSolution>& solves) const {
        const int dim2 = 2 * nactive_impl();
        const FieldConfig& base = solve_at(x, at, solves).cfg;
        std::vector<FieldVariation> raw;
        raw.reserve(dim2);
        for (int mu = 0; mu < dim2; ++mu) {
            std::vector<int> op = at, om = at;
            op[mu] += 1;
            om[mu] -= 1;
            raw.push_back(detail::central_difference(solve_at(x, op, solves).cfg,
                                                     solve_at(x, om, solves).cfg, fd_));
        }
        std::vector<FieldVariation> tang(dim2);
        if (threads_ <= 1) {
            for (int mu = 0; mu < dim2; ++mu)
                tang[mu] = gauge_fix_variation(base, raw[mu], grid_);
        } else {
            for (int k = 0; k < dim2; k += threads_) {
                std::vector<std::future<FieldVariation>> futs;
                for (int j = k; j < std::min(dim2, k + threads_); ++j)
                    futs.push_back(std::async(std::launch::async, [&, j] {
                        return gauge_fix_variation(base, raw[j], grid_);
                    }));
                for (int j = k; j < std::min(dim2, k + threads_); ++j)
                    tang[j] = futs[j - k].get();
            }
        }
        Eigen::MatrixXd g(dim2, dim2);
        for (int mu = 0; mu < dim2; ++mu)
            for (int nu = mu; nu < dim2; ++nu) {
                const double v = variation_inner_product(tang[mu], tang[nu], grid_);
                g(mu, nu) = v;
                g(nu, mu) = v;
            }
        return g;
    }

    int d_;
    std::vector<cplx> prefix_;
    int nactive_;
    Grid2D grid_;
    SolverParams params_;
    double fd_;
    int threads_;
    mutable std::map<std::vector<double>, Eigen::MatrixXd> cache_;
    mutable RealField last_base_;
};

}  // namespace vortexlab

#endif
