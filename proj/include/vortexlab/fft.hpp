// FFTW-backed transforms: trigonometric (spectral) calculus on the torus
// and DST-I fast diagonalization of the 5-point Dirichlet Laplacian on the
// disk interior.  Plan creation is serialized behind one global mutex;
// execution uses the new-array interface on per-call fftw buffers, so a
// cached transform object may be shared across threads.
#ifndef VORTEXLAB_FFT_HPP
#define VORTEXLAB_FFT_HPP

#include <fftw3.h>

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "vortexlab/field.hpp"
#include "vortexlab/grid.hpp"

namespace vortexlab {

namespace detail {

inline std::mutex& fftw_planner_mutex() {
    static std::mutex m;
    return m;
}

struct FftwComplexBuffer {
    fftw_complex* p = nullptr;
    explicit FftwComplexBuffer(std::size_t count) {
        p = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * count));
    }
    ~FftwComplexBuffer() { fftw_free(p); }
    FftwComplexBuffer(const FftwComplexBuffer&) = delete;
    FftwComplexBuffer& operator=(const FftwComplexBuffer&) = delete;
};

struct FftwRealBuffer {
    double* p = nullptr;
    explicit FftwRealBuffer(std::size_t count) {
        p = static_cast<double*>(fftw_malloc(sizeof(double) * count));
    }
    ~FftwRealBuffer() { fftw_free(p); }
    FftwRealBuffer(const FftwRealBuffer&) = delete;
    FftwRealBuffer& operator=(const FftwRealBuffer&) = delete;
};

}  // namespace detail

/// Spectral calculus on the periodic grid.  Wavenumbers are
/// k = (2*pi/L) * m with m in [-n/2, n/2); the Nyquist mode is zeroed in
/// odd-order derivatives, which keeps the derivative matrix antisymmetric.
class TorusTransforms {
  public:
    explicit TorusTransforms(const Grid2D& g) : n_(g.n), L_(g.extent) {
        const std::size_t sz = std::size_t(n_) * n_;
        detail::FftwComplexBuffer a(sz), b(sz);
        std::lock_guard<std::mutex> lock(detail::fftw_planner_mutex());
        fwd_ = fftw_plan_dft_2d(n_, n_, a.p, b.p, FFTW_FORWARD, FFTW_ESTIMATE);
        bwd_ = fftw_plan_dft_2d(n_, n_, a.p, b.p, FFTW_BACKWARD, FFTW_ESTIMATE);
    }
    ~TorusTransforms() {
        std::lock_guard<std::mutex> lock(detail::fftw_planner_mutex());
        fftw_destroy_plan(fwd_);
        fftw_destroy_plan(bwd_);
    }
    TorusTransforms(const TorusTransforms&) = delete;
    TorusTransforms& operator=(const TorusTransforms&) = delete;

    int n() const { return n_; }
    double L() const { return L_; }

    // signed mode index in [-n/2, n/2)
    int mode(int m) const { return m < n_ / 2 ? m : m - n_; }
    double k_of(int m) const { return 2.0 * pi / L_ * mode(m); }
    // wavenumber for odd-order derivatives: Nyquist row/column -> 0
    double k_deriv(int m) const { return m == n_ / 2 ? 0.0 : k_of(m); }

    /// out = invfft( mult(mx,my) * fft(f) ), complex multiplier, complex field.
    template <typename Mult>
    CplxField filter(const CplxField& f, Mult mult) const {
        const std::size_t sz = std::size_t(n_) * n_;
        detail::FftwComplexBuffer in(sz), out(sz);
        for (std::size_t i = 0; i < sz; ++i) {
            in.p[i][0] = f.v[i].real();
            in.p[i][1] = f.v[i].imag();
        }
        fftw_execute_dft(fwd_, in.p, out.p);
        const double scale = 1.0 / double(sz);
        for (int my = 0; my < n_; ++my)
            for (int mx = 0; mx < n_; ++mx) {
                const std::size_t i = std::size_t(my) * n_ + mx;
                const cplx m = mult(mx, my) * scale;
                const cplx z(out.p[i][0], out.p[i][1]);
                const cplx w = m * z;
                out.p[i][0] = w.real();
                out.p[i][1] = w.imag();
            }
        fftw_execute_dft(bwd_, out.p, in.p);
        CplxField r(n_);
        for (std::size_t i = 0; i < sz; ++i) r.v[i] = cplx(in.p[i][0], in.p[i][1]);
        return r;
    }

    template <typename Mult>
    RealField filter_real(const RealField& f, Mult mult) const {
        CplxField c(f.n);
        for (std::size_t i = 0; i < f.v.size(); ++i) c.v[i] = f.v[i];
        CplxField r = filter(c, mult);
        RealField out(f.n);
        for (std::size_t i = 0; i < r.v.size(); ++i) out.v[i] = r.v[i].real();
        return out;
    }

    RealField deriv_x(const RealField& f) const {
        return filter_real(f, [this](int mx, int) { return cplx(0.0, k_deriv(mx)); });
    }
    RealField deriv_y(const RealField& f) const {
        return filter_real(f, [this](int, int my) { return cplx(0.0, k_deriv(my)); });
    }
    CplxField deriv_x(const CplxField& f) const {
        return filter(f, [this](int mx, int) { return cplx(0.0, k_deriv(mx)); });
    }
    CplxField deriv_y(const CplxField& f) const {
        return filter(f, [this](int, int my) { return cplx(0.0, k_deriv(my)); });
    }
    RealField laplacian(const RealField& f) const {
        return filter_real(f, [this](int mx, int my) {
            const double kx = k_of(mx), ky = k_of(my);
            return cplx(-(kx * kx + ky * ky), 0.0);
        });
    }
    /// solve (-lap + c) u = f, c > 0
    RealField inv_shifted_laplacian(const RealField& f, double c) const {
        return filter_real(f, [this, c](int mx, int my) {
            const double kx = k_of(mx), ky = k_of(my);
            return cplx(1.0 / (c + kx * kx + ky * ky), 0.0);
        });
    }
    /// solve lap u = f - mean(f) with mean(u) = 0
    RealField poisson_zero_mean(const RealField& f) const {
        return filter_real(f, [this](int mx, int my) {
            if (mx == 0 && my == 0) return cplx(0.0, 0.0);
            const double kx = k_of(mx), ky = k_of(my);
            return cplx(-1.0 / (kx * kx + ky * ky), 0.0);
        });
    }

    /// Field with the given continuum Fourier coefficients against
    /// e^{i k.x} at the cell-centered node coordinates: the half-cell
    /// offset of node 0 is folded in here.
    template <typename Spec>
    RealField synthesize(Spec spec) const {
        const std::size_t sz = std::size_t(n_) * n_;
        const double x0 = 0.5 * L_ / n_;
        detail::FftwComplexBuffer in(sz), out(sz);
        for (int my = 0; my < n_; ++my)
            for (int mx = 0; mx < n_; ++mx) {
                const std::size_t i = std::size_t(my) * n_ + mx;
                const double ph = (k_of(mx) + k_of(my)) * x0;
                const cplx z = spec(mx, my) * cplx(std::cos(ph), std::sin(ph));
                in.p[i][0] = z.real();
                in.p[i][1] = z.imag();
            }
        fftw_execute_dft(bwd_, in.p, out.p);
        RealField r(n_);
        for (std::size_t i = 0; i < sz; ++i) r.v[i] = out.p[i][0];
        return r;
    }

  private:
    int n_;
    double L_;
    fftw_plan fwd_, bwd_;
};

/// DST-I fast solver for (-lap5 + c) on the (n-2)^2 interior nodes of the
/// disk patch with homogeneous Dirichlet data on the node ring.
class DiskDst {
  public:
    DiskDst(const Grid2D& g) : m_(g.n - 2), h_(g.h) {
        const std::size_t sz = std::size_t(m_) * m_;
        detail::FftwRealBuffer a(sz), b(sz);
        std::lock_guard<std::mutex> lock(detail::fftw_planner_mutex());
        plan_ = fftw_plan_r2r_2d(m_, m_, a.p, b.p, FFTW_RODFT00, FFTW_RODFT00,
                                 FFTW_ESTIMATE);
    }
    ~DiskDst() {
        std::lock_guard<std::mutex> lock(detail::fftw_planner_mutex());
        fftw_destroy_plan(plan_);
    }
    DiskDst(const DiskDst&) = delete;
    DiskDst& operator=(const DiskDst&) = delete;

    int m() const { return m_; }

    /// solve (-lap5 + c) u = f on the interior, u = 0 on the ring
    std::vector<double> solve_shifted(const std::vector<double>& f, double c) const {
        return solve_symbol(f, [this, c](int p, int q) {
            const double sp = std::sin(0.5 * pi * (p + 1) / (m_ + 1));
            const double sq = std::sin(0.5 * pi * (q + 1) / (m_ + 1));
            return 4.0 / (h_ * h_) * (sp * sp + sq * sq) + c;
        });
    }

    /// diagonal solve in the DST basis with an arbitrary mode symbol
    template <typename Symbol>
    std::vector<double> solve_symbol(const std::vector<double>& f, Symbol lam) const {
        const std::size_t sz = std::size_t(m_) * m_;
        detail::FftwRealBuffer in(sz), out(sz);
        for (std::size_t i = 0; i < sz; ++i) in.p[i] = f[i];
        fftw_execute_r2r(plan_, in.p, out.p);
        const double norm = 1.0 / (4.0 * double(m_ + 1) * double(m_ + 1));
        for (int q = 0; q < m_; ++q)
            for (int p = 0; p < m_; ++p)
                out.p[std::size_t(q) * m_ + p] *= norm / lam(p, q);
        fftw_execute_r2r(plan_, out.p, in.p);
        std::vector<double> u(sz);
        for (std::size_t i = 0; i < sz; ++i) u[i] = in.p[i];
        return u;
    }

    double h() const { return h_; }

  private:
    int m_;
    double h_;
    fftw_plan plan_;
};

/// Process-wide transform caches (plans are built once per grid shape).
inline const TorusTransforms& torus_fft(const Grid2D& g) {
    static std::map<std::pair<int, double>, std::unique_ptr<TorusTransforms>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(g.n, g.extent);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::make_unique<TorusTransforms>(g)).first;
    return *it->second;
}

inline const DiskDst& disk_dst(const Grid2D& g) {
    static std::map<std::pair<int, double>, std::unique_ptr<DiskDst>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(g.n, g.h);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, std::make_unique<DiskDst>(g)).first;
    return *it->second;
}

}  // namespace vortexlab

#endif
