// Zero divisors: prescribed vortex positions with multiplicities.
#ifndef VORTEXLAB_DIVISOR_HPP
#define VORTEXLAB_DIVISOR_HPP

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "vortexlab/field.hpp"
#include "vortexlab/grid.hpp"

namespace vortexlab {

struct ZeroPoint {
    cplx z;
    int mult = 1;
};

struct ZeroDivisor {
    std::vector<ZeroPoint> points;

    int degree() const {
        int d = 0;
        for (const auto& p : points) d += p.mult;
        return d;
    }

    void validate() const {
        if (degree() < 1)
            throw std::invalid_argument("ZeroDivisor: degree must be >= 1");
        for (const auto& p : points)
            if (p.mult < 1)
                throw std::invalid_argument("ZeroDivisor: multiplicities must be >= 1");
        for (std::size_t i = 0; i < points.size(); ++i)
            for (std::size_t j = i + 1; j < points.size(); ++j)
                if (std::abs(points[i].z - points[j].z) == 0.0)
                    throw std::invalid_argument("ZeroDivisor: points must be distinct");
    }

    /// torus positions live in [0,L) x [0,L)
    ZeroDivisor reduced_mod(double L) const {
        ZeroDivisor d = *this;
        for (auto& p : d.points) {
            double x = std::fmod(p.z.real(), L);
            double y = std::fmod(p.z.imag(), L);
            if (x < 0.0) x += L;
            if (y < 0.0) y += L;
            p.z = cplx(x, y);
        }
        return d;
    }

    /// flat list with each point repeated mult times
    std::vector<cplx> zeros_with_multiplicity() const {
        std::vector<cplx> zs;
        for (const auto& p : points)
            for (int k = 0; k < p.mult; ++k) zs.push_back(p.z);
        return zs;
    }
};

inline ZeroDivisor divisor_from_zeros(const std::vector<cplx>& zs) {
    ZeroDivisor d;
    for (const auto& z : zs) {
        bool merged = false;
        for (auto& p : d.points)
            if (std::abs(p.z - z) == 0.0) {
                p.mult += 1;
                merged = true;
                break;
            }
        if (!merged) d.points.push_back({z, 1});
    }
    return d;
}

}  // namespace vortexlab

#endif
