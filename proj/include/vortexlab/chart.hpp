// The moduli chart: unordered d-tuples of zeros <-> coefficients of the
// monic polynomial prod (z - z_j) = z^d + c_1 z^{d-1} + ... + c_d.
// Coefficients are computed from a canonically sorted zero list, so they
// are exactly permutation invariant.
#ifndef VORTEXLAB_CHART_HPP
#define VORTEXLAB_CHART_HPP

#include <algorithm>
#include <complex>
#include <vector>

#include "vortexlab/divisor.hpp"

namespace vortexlab {

namespace detail {

inline bool zero_order(const cplx& a, const cplx& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}

}  // namespace detail

struct ModuliPoint {
    std::vector<cplx> zeros;  // unordered multiset, stored sorted

    static ModuliPoint from_zeros(std::vector<cplx> zs) {
        std::sort(zs.begin(), zs.end(), detail::zero_order);
        return ModuliPoint{std::move(zs)};
    }

    int degree() const { return int(zeros.size()); }

    /// (c_1, ..., c_d)
    std::vector<cplx> chart() const {
        std::vector<cplx> c(zeros.size() + 1, cplx(0.0, 0.0));
        c[0] = 1.0;
        std::size_t used = 0;
        for (const cplx& z : zeros) {
            ++used;
            for (std::size_t k = used; k >= 1; --k) c[k] = c[k] - z * c[k - 1];
        }
        return std::vector<cplx>(c.begin() + 1, c.end());
    }

    ZeroDivisor divisor(double merge_tol = 0.0) const {
        ZeroDivisor d;
        for (const cplx& z : zeros) {
            bool merged = false;
            for (auto& p : d.points)
                if (std::abs(p.z - z) <= merge_tol) {
                    p.mult += 1;
                    merged = true;
                    break;
                }
            if (!merged) d.points.push_back({z, 1});
        }
        return d;
    }
};

/// Roots of z^d + c_1 z^{d-1} + ... + c_d.  d = 1, 2 analytically (stable
/// quadratic), d >= 3 by Durand-Kerner with a fixed deterministic start.
inline ModuliPoint moduli_from_chart(const std::vector<cplx>& c) {
    const int d = int(c.size());
    std::vector<cplx> zs;
    if (d == 1) {
        zs = {-c[0]};
    } else if (d == 2) {
        const cplx b = c[0], q = c[1];
        cplx sq = std::sqrt(b * b - 4.0 * q);
        if (std::real(std::conj(b) * sq) < 0.0) sq = -sq;
        const cplx r1 = -0.5 * (b + sq);
        // product of roots = q; avoids cancellation in the small root
        const cplx r2 = (std::abs(r1) > 0.0) ? q / r1 : -0.5 * (b - sq);
        zs = {r1, r2};
    } else {
        double radius = 1.0;
        for (const auto& ck : c) radius = std::max(radius, 2.0 * std::abs(ck));
        auto eval = [&](const cplx& z) {
            cplx p(1.0, 0.0);
            for (const auto& ck : c) p = p * z + ck;
            return p;
        };
        zs.resize(d);
        for (int k = 0; k < d; ++k) {
            const double ang = 2.0 * pi * k / d + 0.4;
            zs[k] = radius * cplx(std::cos(ang), std::sin(ang));
        }
        for (int it = 0; it < 500; ++it) {
            double move = 0.0;
            for (int k = 0; k < d; ++k) {
                cplx denom(1.0, 0.0);
                for (int j = 0; j < d; ++j)
                    if (j != k) denom *= zs[k] - zs[j];
                if (std::abs(denom) == 0.0) denom = cplx(1e-30, 0.0);
                const cplx step = eval(zs[k]) / denom;
                zs[k] -= step;
                move = std::max(move, std::abs(step));
            }
            if (move < 1e-14 * radius) break;
        }
    }
    return ModuliPoint::from_zeros(std::move(zs));
}

}  // namespace vortexlab

#endif
