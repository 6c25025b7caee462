#include <doctest.h>

#include "vortexlab/tmetric.hpp"

using namespace vortexlab;

TEST_CASE("d=1 metric is flat: pi times the identity") {
    Grid2D g = make_grid(Domain::disk, 10.0, 128);
    SolverParams sp;
    for (const cplx z : {cplx(0.0, 0.0), cplx(1.0, -2.0)}) {
        TMetric tm = t_metric(ModuliPoint::from_zeros({z}), g, sp, 1e-2);
        CHECK(tm.spd);
        CHECK(!tm.near_coincidence);
        CHECK(tm.g(0, 0) == doctest::Approx(pi).epsilon(1e-2));
        CHECK(tm.g(1, 1) == doctest::Approx(pi).epsilon(1e-2));
        CHECK(std::abs(tm.g(0, 1)) < 1e-6);
    }
}

TEST_CASE("translation invariance of the metric") {
    Grid2D g = make_grid(Domain::disk, 10.0, 96);
    SolverParams sp;
    TMetric a = t_metric(ModuliPoint::from_zeros({cplx(0.5, 0.0)}), g, sp, 1e-2);
    TMetric b = t_metric(ModuliPoint::from_zeros({cplx(-0.7, 1.1)}), g, sp, 1e-2);
    CHECK((a.g - b.g).norm() < 1e-3 * a.g.norm());
}

TEST_CASE("pair metric: symmetric direction recovers the translation mass") {
    // the center-of-mass direction (dz, dz) must see g = 2 pi regardless of
    // the interaction in the relative coordinate
    Grid2D g = make_grid(Domain::disk, 8.0, 96);
    SolverParams sp;
    ModuliPoint q = ModuliPoint::from_zeros({cplx(-1.5, 0.0), cplx(1.5, 0.0)});
    TMetric tm = t_metric(q, g, sp, 1e-2);
    CHECK(tm.spd);
    Eigen::VectorXd com(4);
    com << 1.0, 0.0, 1.0, 0.0;
    CHECK(com.dot(tm.g * com) == doctest::Approx(2.0 * pi).epsilon(5e-3));
    // interaction decays with separation
    ModuliPoint far = ModuliPoint::from_zeros({cplx(-3.0, 0.0), cplx(3.0, 0.0)});
    Grid2D gfar = make_grid(Domain::disk, 10.0, 128);
    TMetric tf = t_metric(far, gfar, sp, 1e-2);
    CHECK(std::abs(tf.g(0, 2)) < 0.1 * std::abs(tm.g(0, 2)));
}

TEST_CASE("permutation of zero labels leaves the metric unchanged") {
    Grid2D g = make_grid(Domain::disk, 8.0, 64);
    SolverParams sp;
    ModuliPoint a = ModuliPoint::from_zeros({cplx(1.0, 0.7), cplx(-0.8, -0.4)});
    ModuliPoint b = ModuliPoint::from_zeros({cplx(-0.8, -0.4), cplx(1.0, 0.7)});
    TMetric ta = t_metric(a, g, sp, 1e-2);
    TMetric tb = t_metric(b, g, sp, 1e-2);
    CHECK((ta.g - tb.g).norm() == 0.0);
}

TEST_CASE("near-coincidence flag") {
    Grid2D g = make_grid(Domain::disk, 8.0, 64);
    SolverParams sp;
    ModuliPoint close = ModuliPoint::from_zeros({cplx(0.0, 0.0), cplx(0.02, 0.0)});
    TMetric tm = t_metric(close, g, sp, 1e-2);
    CHECK(tm.near_coincidence);
}

TEST_CASE("chart oracle matches the real-coordinate metric on pair directions") {
    Grid2D g = make_grid(Domain::disk, 8.0, 64);
    SolverParams sp;
    ChartMetricOracle oracle(2, {cplx(0.0, 0.0)}, g, sp, 1e-2);
    Eigen::VectorXd x(2);
    x << -2.25, 0.0;  // zeros at +-1.5
    Eigen::MatrixXd gc = oracle(x);
    TMetric tm =
        t_metric(ModuliPoint::from_zeros({cplx(-1.5, 0.0), cplx(1.5, 0.0)}), g, sp, 1e-2);
    // d c2 = -2 z dz on the antisymmetric direction: dz = -dc2 / (2 * 1.5)
    Eigen::VectorXd v(4);
    v << -1.0 / 3.0, 0.0, 1.0 / 3.0, 0.0;
    CHECK(gc(0, 0) == doctest::Approx(v.dot(tm.g * v)).epsilon(1e-3));
    // smooth and SPD across the coincidence
    Eigen::VectorXd zero2 = Eigen::VectorXd::Zero(2);
    Eigen::MatrixXd g0 = oracle(zero2);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g0);
    CHECK(es.eigenvalues().minCoeff() > 0.0);
}

TEST_CASE("torus grids are rejected by metric computations") {
    Grid2D t = make_grid(Domain::torus, 16.0, 64);
    SolverParams sp;
    CHECK_THROWS_AS(t_metric(ModuliPoint::from_zeros({cplx(8.0, 8.0)}), t, sp, 1e-2),
                    std::invalid_argument);
    CHECK_THROWS_AS(ChartMetricOracle(1, {}, t, sp, 1e-2), std::invalid_argument);
}

TEST_CASE("d=1 solver-backed geodesic is a straight line") {
    Grid2D g = make_grid(Domain::disk, 8.0, 64);
    SolverParams sp;
    ChartMetricOracle oracle(1, {}, g, sp, 1e-2);
    // chart coordinate is c1 = -z: straight lines in either convention
    Eigen::VectorXd q0(2), qd0(2);
    q0 << 0.3, -0.2;
    qd0 << 0.8, 0.5;
    auto traj = adiabatic_trajectory(q0, qd0, 0.5, 0.125, oracle.jet_oracle());
    for (const auto& s : traj) {
        Eigen::VectorXd expect = q0 + s.t * qd0;
        CHECK((s.q - expect).norm() < 2e-4);
    }
}

TEST_CASE("scattering deflection falls with impact parameter") {
    Grid2D g = make_grid(Domain::disk, 8.0, 64);
    SolverParams sp;
    ChartMetricOracle oracle(2, {cplx(0.0, 0.0)}, g, sp, 1e-2);
    auto angle_for = [&](double b) {
        const cplx z0(1.5, 0.5 * b);
        const cplx c2 = -z0 * z0;
        const cplx c2dot = -2.0 * z0 * cplx(-1.0, 0.0);
        Eigen::VectorXd q0(2), qd0(2);
        q0 << c2.real(), c2.imag();
        qd0 << c2dot.real(), c2dot.imag();
        auto traj = adiabatic_trajectory(q0, qd0, 3.2, 0.4, oracle.jet_oracle());
        std::vector<cplx> w;
        double closest = 1e300;
        for (const auto& s : traj) {
            w.push_back(std::sqrt(-cplx(s.q[0], s.q[1])));
            closest = std::min(closest, std::abs(w.back()));
        }
        return scattering_angle(w, 1.05 * closest);
    };
    const double a4 = angle_for(4.0);
    const double a8 = angle_for(8.0);
    CHECK(a4 < 35.0);
    CHECK(a8 < a4);
    CHECK(a8 < 5.0);
}
