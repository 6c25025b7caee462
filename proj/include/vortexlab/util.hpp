// Shared constants, error types and a deterministic RNG.
#ifndef VORTEXLAB_UTIL_HPP
#define VORTEXLAB_UTIL_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace vortexlab {

inline constexpr double pi = 3.14159265358979323846;

struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonConvergence : SolverError {
    double residual;
    int iters;
    NonConvergence(double res, int it)
        : SolverError("Newton iteration did not converge: residual " +
                      std::to_string(res) + " after " + std::to_string(it) + " iterations"),
          residual(res), iters(it) {}
};

struct BradlowViolation : SolverError {
    double margin;
    explicit BradlowViolation(double m)
        : SolverError("tau*vol - 4*pi*d = " + std::to_string(m) +
                      " <= 0: no vortex solution in this sector"),
          margin(m) {}
};

struct ZeroTooCloseToBoundary : SolverError {
    using SolverError::SolverError;
};

struct LinearSolveFailure : SolverError {
    using SolverError::SolverError;
};

struct CflViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EnergyBlowUp : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct WindingIllDefined : std::domain_error {
    using std::domain_error::domain_error;
};

struct NearCoincidence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// splitmix64: deterministic across platforms, used wherever tests or
// experiments need reproducible pseudo-random numbers.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    // uniform in [0,1)
    double uniform() { return double(next() >> 11) * 0x1.0p-53; }
    double uniform(double a, double b) { return a + (b - a) * uniform(); }
    int uniform_int(int lo, int hi) {  // inclusive range
        return lo + int(next() % std::uint64_t(hi - lo + 1));
    }
};

}  // namespace vortexlab

#endif
