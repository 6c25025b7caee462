#include <doctest.h>

#include "support/radial_oracle.hpp"
#include "vortexlab/taubes.hpp"

using namespace vortexlab;

TEST_CASE("radial oracle reproduces the Bogomolny energy") {
    // independent route: shooting + radial quadrature
    radial_oracle::Profile p1 = radial_oracle::solve(1);
    CHECK(radial_oracle::energy(p1) == doctest::Approx(pi).epsilon(5e-3));
    radial_oracle::Profile p2 = radial_oracle::solve(2);
    CHECK(radial_oracle::energy(p2) == doctest::Approx(2.0 * pi).epsilon(5e-3));
}

TEST_CASE("d=1 disk solve: energy, degree, zero, profile vs oracle") {
    Grid2D g = make_grid(Domain::disk, 10.0, 128);
    ZeroDivisor dv{{{cplx(0.0, 0.0), 1}}};
    TaubesSolution sol = solve_taubes_disk(dv, g, SolverParams{});

    CHECK(sol.newton_residual <= 1e-10);
    CHECK(sol.energy.total == doctest::Approx(pi).epsilon(1e-2));
    CHECK(vortex_number(sol.cfg, g) == 1);

    auto zs = track_zeros(sol.cfg.phi, g);
    REQUIRE(zs.size() == 1);
    CHECK(std::abs(zs[0]) < g.h);

    // |phi| at the divisor point itself (bilinear interpolation of the
    // four surrounding nodes; the origin sits on a cell corner)
    const int i0 = g.n / 2 - 1;
    const cplx phi0 = 0.25 * (sol.cfg.phi.at(i0, i0) + sol.cfg.phi.at(i0 + 1, i0) +
                              sol.cfg.phi.at(i0, i0 + 1) + sol.cfg.phi.at(i0 + 1, i0 + 1));
    CHECK(std::abs(phi0) < 1e-3);

    // modulus against the shooting oracle along the x axis
    radial_oracle::Profile prof = radial_oracle::solve(1);
    for (double r : {0.5, 1.0, 2.0, 4.0}) {
        int ix = int((r - (-g.extent)) / g.h - 0.5);
        const double numeric = std::abs(sol.cfg.phi.at(ix, g.n / 2 - 1));
        const double rr = std::hypot(g.x1(ix), g.x2(g.n / 2 - 1));
        CHECK(numeric == doctest::Approx(radial_oracle::modulus_at(prof, rr)).epsilon(2e-2));
    }

    // maximum principle
    double maxphi2 = 0.0;
    for (const auto& z : sol.cfg.phi.v) maxphi2 = std::max(maxphi2, std::norm(z));
    CHECK(maxphi2 <= 1.0 + 10.0 * g.h * g.h);
}

TEST_CASE("solver contract violations") {
    Grid2D g = make_grid(Domain::disk, 10.0, 64);
    ZeroDivisor empty;
    CHECK_THROWS_AS(solve_taubes_disk(empty, g, SolverParams{}), std::invalid_argument);
    ZeroDivisor edge{{{cplx(8.5, 0.0), 1}}};
    CHECK_THROWS_AS(solve_taubes_disk(edge, g, SolverParams{}), ZeroTooCloseToBoundary);
    Grid2D t = make_grid(Domain::torus, 16.0, 64);
    ZeroDivisor dv{{{cplx(0.0, 0.0), 1}}};
    CHECK_THROWS_AS(solve_taubes_disk(dv, t, SolverParams{}), std::invalid_argument);
}

TEST_CASE("d=2 coincident pair") {
    Grid2D g = make_grid(Domain::disk, 10.0, 192);
    ZeroDivisor dv{{{cplx(0.0, 0.0), 2}}};
    TaubesSolution sol = solve_taubes_disk(dv, g, SolverParams{});
    CHECK(vortex_number(sol.cfg, g) == 2);
    CHECK(sol.energy.total == doctest::Approx(2.0 * pi).epsilon(1e-2));
    auto zs = track_zeros(sol.cfg.phi, g);
    CHECK(int(zs.size()) == 2);  // winding-2 plaquette contributes two copies
}

TEST_CASE("zero placement for a spread d=3 divisor") {
    Grid2D g = make_grid(Domain::disk, 10.0, 128);
    std::vector<cplx> zeros = {cplx(2.3, 1.1), cplx(-1.7, -2.9), cplx(0.4, 3.2)};
    ZeroDivisor dv = divisor_from_zeros(zeros);
    TaubesSolution sol = solve_taubes_disk(dv, g, SolverParams{});
    auto found = track_zeros(sol.cfg.phi, g);
    REQUIRE(found.size() == 3);
    for (const cplx& z : zeros) {
        double best = 1e9;
        for (const cplx& f : found) best = std::min(best, std::abs(f - z));
        CHECK(best < g.h);
    }
}

TEST_CASE("gauge-class uniqueness surrogate: two Newton starts agree") {
    Grid2D g = make_grid(Domain::disk, 8.0, 96);
    ZeroDivisor dv{{{cplx(1.0, 0.5), 1}}};
    TaubesSolution a = solve_taubes_disk(dv, g, SolverParams{});
    RealField init(g.n, 0.0);
    for (int iy = 0; iy < g.n; ++iy)
        for (int ix = 0; ix < g.n; ++ix)
            init.at(ix, iy) = 0.3 * std::sin(0.5 * g.x1(ix)) * std::cos(0.4 * g.x2(iy));
    TaubesSolution b = solve_taubes_disk(dv, g, SolverParams{}, &init);
    double dphi = 0.0, db = 0.0;
    for (std::size_t i = 0; i < a.cfg.phi.v.size(); ++i) {
        dphi = std::max(dphi, std::abs(std::abs(a.cfg.phi.v[i]) - std::abs(b.cfg.phi.v[i])));
        db = std::max(db, std::abs(a.b.v[i] - b.b.v[i]));
    }
    CHECK(dphi < 1e-8);
    CHECK(db < 1e-8);
}

TEST_CASE("vortex residual: vacuum exact, solver O(h^2), perturbations grow U") {
    Grid2D g = make_grid(Domain::disk, 8.0, 64);
    FieldConfig vac;
    vac.a1 = RealField(g.n, 0.0);
    vac.a2 = RealField(g.n, 0.0);
    const double tau = 1.3;
    vac.phi = CplxField(g.n, cplx(std::sqrt(tau), 0.0));
    auto [v1, v2] = vortex_residual(vac, tau, g);
    CHECK(v1 == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(v2 == doctest::Approx(0.0).epsilon(1e-14));

    // solver residuals converge at 2nd order
    double res[2];
    int k = 0;
    for (int n : {64, 128}) {
        Grid2D gg = make_grid(Domain::disk, 8.0, n);
        ZeroDivisor dv{{{cplx(0.0, 0.0), 1}}};
        TaubesSolution sol = solve_taubes_disk(dv, gg, SolverParams{});
        res[k++] = sol.r1 + sol.r2;
    }
    CHECK(res[1] < 0.35 * res[0]);

    // Bogomolny bound with an O(h) allowance, and perturbations only go up
    Grid2D gg = make_grid(Domain::disk, 8.0, 96);
    ZeroDivisor dv{{{cplx(0.0, 0.0), 1}}};
    TaubesSolution sol = solve_taubes_disk(dv, gg, SolverParams{});
    CHECK(sol.energy.total >= pi - 1.0 * gg.h);
    FieldConfig pert = sol.cfg;
    for (int iy = 0; iy < gg.n; ++iy)
        for (int ix = 0; ix < gg.n; ++ix)
            pert.phi.at(ix, iy) *= 1.0 + 0.2 * std::exp(-0.5 * (std::pow(gg.x1(ix), 2) +
                                                                std::pow(gg.x2(iy), 2)));
    CHECK(potential_energy(pert, 1.0, gg).total > sol.energy.total);
    auto [r1p, r2p] = vortex_residual(pert, 1.0, gg);
    CHECK(r2p > 2.0 * sol.r2);
}

TEST_CASE("antivortex conjugation of a solver output") {
    Grid2D g = make_grid(Domain::disk, 8.0, 96);
    ZeroDivisor dv{{{cplx(0.5, -0.5), 1}}};
    TaubesSolution sol = solve_taubes_disk(dv, g, SolverParams{});
    FieldConfig anti = conjugate_to_antivortex(sol.cfg);
    CHECK(vortex_number(anti, g) == -1);
    // anti-vortex first-order system: (D1 - i D2)phi = 0, b = -(tau-|phi|^2)/2
    auto [d1, d2] = covariant_derivative(anti.a1, anti.a2, anti.phi, g);
    RealField b = curvature(anti.a1, anti.a2, g);
    double s1 = 0.0, s2 = 0.0;
    for (std::size_t i = 0; i < b.v.size(); ++i) {
        s1 += std::norm(d1.v[i] - cplx(0.0, 1.0) * d2.v[i]);
        const double w = b.v[i] + 0.5 * (1.0 - std::norm(anti.phi.v[i]));
        s2 += w * w;
    }
    const double dA = g.cell_area();
    CHECK(std::sqrt(s1 * dA) == doctest::Approx(sol.r1).epsilon(1e-10));
    CHECK(std::sqrt(s2 * dA) == doctest::Approx(sol.r2).epsilon(1e-10));
    // energy invariant
    CHECK(potential_energy(anti, 1.0, g).total ==
          doctest::Approx(sol.energy.total).epsilon(1e-12));
}
