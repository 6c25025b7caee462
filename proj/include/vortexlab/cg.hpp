// Preconditioned conjugate gradients on flat double vectors.  Reduction
// order is fixed, so runs are bitwise reproducible.
#ifndef VORTEXLAB_CG_HPP
#define VORTEXLAB_CG_HPP

#include <cmath>
#include <vector>

#include "vortexlab/util.hpp"

namespace vortexlab {

inline double vdot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

/// Solve A x = b for SPD A.  apply/precond map vector -> vector.
/// Returns the iteration count; throws LinearSolveFailure if max_iters is hit.
template <typename Apply, typename Precond>
int pcg(const Apply& apply, const Precond& precond, const std::vector<double>& b,
        std::vector<double>& x, double rel_tol, int max_iters) {
    const std::size_t sz = b.size();
    const double bnorm = std::sqrt(vdot(b, b));
    if (bnorm == 0.0) {
        x.assign(sz, 0.0);
        return 0;
    }
    std::vector<double> r = b;
    if (!x.empty()) {
        std::vector<double> ax = apply(x);
        for (std::size_t i = 0; i < sz; ++i) r[i] -= ax[i];
    } else {
        x.assign(sz, 0.0);
    }
    std::vector<double> z = precond(r);
    std::vector<double> p = z;
    double rz = vdot(r, z);
    for (int it = 1; it <= max_iters; ++it) {
        std::vector<double> ap = apply(p);
        const double pap = vdot(p, ap);
        if (!(pap > 0.0)) throw LinearSolveFailure("pcg: operator not positive definite");
        const double alpha = rz / pap;
        for (std::size_t i = 0; i < sz; ++i) {
            x[i] += alpha * p[i];
            r[i] -= alpha * ap[i];
        }
        if (std::sqrt(vdot(r, r)) <= rel_tol * bnorm) return it;
        z = precond(r);
        const double rz_new = vdot(r, z);
        const double beta = rz_new / rz;
        rz = rz_new;
        for (std::size_t i = 0; i < sz; ++i) p[i] = z[i] + beta * p[i];
    }
    throw LinearSolveFailure("pcg: no convergence within iteration budget");
}

}  // namespace vortexlab

#endif
