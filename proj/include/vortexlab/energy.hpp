// Potential and kinetic energy quadratures.
// U_tau = 1/2 int { b^2 + |D1 phi|^2 + |D2 phi|^2 + 1/4 (tau - |phi|^2)^2 },
// T     = 1/2 int { a1dot^2 + a2dot^2 + |phidot|^2 }.
#ifndef VORTEXLAB_ENERGY_HPP
#define VORTEXLAB_ENERGY_HPP

#include "vortexlab/ops.hpp"

namespace vortexlab {

struct EnergyBreakdown {
    double field_term = 0.0;      // 1/2 int b^2
    double gradient_term = 0.0;   // 1/2 int |D phi|^2
    double potential_term = 0.0;  // 1/8 int (tau - |phi|^2)^2
    double total = 0.0;
};

inline EnergyBreakdown potential_energy(const FieldConfig& cfg, double tau,
                                        const Grid2D& g) {
    EnergyBreakdown e;
    RealField b = curvature(cfg.a1, cfg.a2, g);
    auto [d1, d2] = covariant_derivative(cfg.a1, cfg.a2, cfg.phi, g);
    double sb = 0.0, sg = 0.0, sp = 0.0;
    for (std::size_t i = 0; i < b.v.size(); ++i) {
        sb += b.v[i] * b.v[i];
        sg += std::norm(d1.v[i]) + std::norm(d2.v[i]);
        const double w = tau - std::norm(cfg.phi.v[i]);
        sp += w * w;
    }
    const double dA = g.cell_area();
    e.field_term = 0.5 * sb * dA;
    e.gradient_term = 0.5 * sg * dA;
    e.potential_term = 0.125 * sp * dA;
    e.total = e.field_term + e.gradient_term + e.potential_term;
    return e;
}

inline double kinetic_energy(const RealField& a1dot, const RealField& a2dot,
                             const CplxField& phidot, const Grid2D& g) {
    double s = 0.0;
    for (std::size_t i = 0; i < a1dot.v.size(); ++i)
        s += a1dot.v[i] * a1dot.v[i] + a2dot.v[i] * a2dot.v[i] + std::norm(phidot.v[i]);
    return 0.5 * s * g.cell_area();
}

}  // namespace vortexlab

#endif
