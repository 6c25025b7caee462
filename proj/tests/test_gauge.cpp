#include <doctest.h>

#include "vortexlab/energy.hpp"
#include "vortexlab/gauge.hpp"

using namespace vortexlab;

namespace {

FieldConfig smooth_config(const Grid2D& g, SplitMix64& rng) {
    FieldConfig cfg;
    cfg.a1 = random_smooth_chi(g, rng, 0.4).chi;
    cfg.a2 = random_smooth_chi(g, rng, 0.4).chi;
    cfg.phi = CplxField(g.n);
    RealField pr = random_smooth_chi(g, rng, 0.3).chi;
    RealField pi = random_smooth_chi(g, rng, 0.3).chi;
    for (std::size_t i = 0; i < cfg.phi.v.size(); ++i)
        cfg.phi.v[i] = cplx(1.0 + pr.v[i], pi.v[i]);
    return cfg;
}

}  // namespace

TEST_CASE("chi = 0 is the identity") {
    Grid2D g = make_grid(Domain::torus, 8.0, 32);
    SplitMix64 rng(5);
    FieldConfig cfg = smooth_config(g, rng);
    GaugeFunction zero{RealField(g.n, 0.0)};
    FieldConfig out = gauge_transform(cfg, zero, g);
    for (std::size_t i = 0; i < cfg.a1.v.size(); ++i) {
        CHECK(out.a1.v[i] == cfg.a1.v[i]);
        CHECK(out.a2.v[i] == cfg.a2.v[i]);
        CHECK(out.phi.v[i] == cfg.phi.v[i]);
    }
}

TEST_CASE("constant chi leaves a fixed and rotates phi") {
    Grid2D g = make_grid(Domain::torus, 8.0, 32);
    SplitMix64 rng(6);
    FieldConfig cfg = smooth_config(g, rng);
    const double c = 0.8;
    GaugeFunction gf{RealField(g.n, c)};
    FieldConfig out = gauge_transform(cfg, gf, g);
    const cplx rot(std::cos(c), -std::sin(c));
    for (std::size_t i = 0; i < cfg.a1.v.size(); ++i) {
        CHECK(out.a1.v[i] == doctest::Approx(cfg.a1.v[i]).epsilon(1e-12));
        CHECK(std::abs(out.phi.v[i] - rot * cfg.phi.v[i]) < 1e-14);
    }
}

TEST_CASE("gauge transform is inverted by -chi") {
    Grid2D g = make_grid(Domain::torus, 8.0, 32);
    SplitMix64 rng(7);
    FieldConfig cfg = smooth_config(g, rng);
    GaugeFunction gf = random_smooth_chi(g, rng, 0.5);
    GaugeFunction neg{gf.chi};
    for (auto& x : neg.chi.v) x = -x;
    FieldConfig back = gauge_transform(gauge_transform(cfg, gf, g), neg, g);
    double err = 0.0;
    for (std::size_t i = 0; i < cfg.a1.v.size(); ++i) {
        err = std::max(err, std::abs(back.a1.v[i] - cfg.a1.v[i]));
        err = std::max(err, std::abs(back.phi.v[i] - cfg.phi.v[i]));
    }
    CHECK(err < 1e-11);
}

TEST_CASE("antivortex conjugation fixes the vacuum and preserves energy") {
    Grid2D g = make_grid(Domain::torus, 8.0, 32);
    FieldConfig vac;
    vac.a1 = RealField(g.n, 0.0);
    vac.a2 = RealField(g.n, 0.0);
    vac.phi = CplxField(g.n, cplx(1.0, 0.0));
    FieldConfig cvac = conjugate_to_antivortex(vac);
    for (std::size_t i = 0; i < vac.phi.v.size(); ++i)
        CHECK(cvac.phi.v[i] == vac.phi.v[i]);

    SplitMix64 rng(8);
    FieldConfig cfg = smooth_config(g, rng);
    EnergyBreakdown e0 = potential_energy(cfg, 1.0, g);
    EnergyBreakdown e1 = potential_energy(conjugate_to_antivortex(cfg), 1.0, g);
    CHECK(std::abs(e1.total - e0.total) <= 1e-12 * (1.0 + e0.total));

    FieldConfig twice = conjugate_to_antivortex(conjugate_to_antivortex(cfg));
    for (std::size_t i = 0; i < cfg.a1.v.size(); ++i) {
        CHECK(twice.a1.v[i] == cfg.a1.v[i]);
        CHECK(twice.phi.v[i] == cfg.phi.v[i]);
    }
}
