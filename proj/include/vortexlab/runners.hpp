// Experiment orchestration: config validation, the eight experiment types,
// and report/artifact emission.  Validation happens before any compute or
// directory creation; artifacts are written atomically; CSV content is a
// deterministic function of the config (wall-clock times go only into
// report.json).
#ifndef VORTEXLAB_RUNNERS_HPP
#define VORTEXLAB_RUNNERS_HPP

#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>

#include "vortexlab/adiabatic.hpp"
#include "vortexlab/config.hpp"
#include "vortexlab/io.hpp"
#include "vortexlab/taubes.hpp"
#include "vortexlab/tmetric.hpp"

namespace vortexlab {

namespace detail {

inline void write_text_atomic(const std::string& path, const std::string& text) {
    write_atomic(path, text);
}

inline Grid2D grid_from_config(const Config& c) {
    const std::string kind = c.get_string("grid.kind");
    if (kind != "torus" && kind != "disk")
        throw ValidationError("grid.kind must be \"torus\" or \"disk\"");
    return make_grid(kind == "torus" ? Domain::torus : Domain::disk,
                     c.get_double("grid.extent"), c.get_int("grid.n"));
}

inline ZeroDivisor divisor_from_config(const Config& c) {
    auto re = c.get_array("divisor.re");
    auto im = c.get_array("divisor.im");
    auto mult = c.get_array("divisor.mult", std::vector<double>(re.size(), 1.0));
    if (re.size() != im.size() || re.size() != mult.size())
        throw ValidationError("divisor.re/im/mult must have equal lengths");
    ZeroDivisor d;
    for (std::size_t i = 0; i < re.size(); ++i) {
        if (mult[i] != std::floor(mult[i]) || mult[i] < 1.0)
            throw ValidationError("divisor.mult entries must be positive integers");
        d.points.push_back({cplx(re[i], im[i]), int(mult[i])});
    }
    d.validate();
    return d;
}

inline SolverParams solver_from_config(const Config& c) {
    SolverParams p;
    p.tol = c.get_double("solver.tol", p.tol);
    p.max_iters = c.get_int("solver.max_iters", p.max_iters);
    p.delta_smoothing = c.get_double("solver.mu", p.delta_smoothing);
    p.tau = c.get_double("solver.tau", p.tau);
    if (!(p.tau > 0.0)) throw ValidationError("solver.tau must be positive");
    if (!(p.tol > 0.0)) throw ValidationError("solver.tol must be positive");
    return p;
}

inline nlohmann::json config_echo_json(const Config& c) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [k, v] : c.echo()) j[k] = v;
    return j;
}

inline nlohmann::json energy_json(const EnergyBreakdown& e) {
    return {{"field_term", e.field_term},
            {"gradient_term", e.gradient_term},
            {"potential_term", e.potential_term},
            {"total", e.total}};
}

inline void write_json(const std::string& path, const nlohmann::json& j) {
    write_text_atomic(path, j.dump(2) + "\n");
}

struct Stopwatch {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    }
};

inline nlohmann::json solution_summary(const TaubesSolution& sol,
                                       const ZeroDivisor& dv, double tau) {
    nlohmann::json divisor = nlohmann::json::array();
    for (const auto& p : dv.points)
        divisor.push_back({{"re", p.z.real()}, {"im", p.z.imag()}, {"mult", p.mult}});
    return {{"divisor", divisor},
            {"tau", tau},
            {"residuals", {{"r1", sol.r1}, {"r2", sol.r2},
                           {"newton_residual", sol.newton_residual}}},
            {"energy_breakdown", energy_json(sol.energy)},
            {"iters", sol.newton_iters}};
}

}  // namespace detail

/// One experiment.  Validates the whole config (unknown keys rejected),
/// creates out_dir only afterwards, writes artifacts + report.json.
/// Exit codes: 0 success, 2 validation, 3 solver non-convergence,
/// 4 dynamics blow-up.
inline void run_experiment(const Config& cfg, const std::string& out_dir, int threads) {
    namespace fs = std::filesystem;
    const std::string type = cfg.get_string("experiment.type");
    const int seed = cfg.get_int("experiment.seed", 0);
    (void)seed;  // echoed in the report; reserved for randomized variants
    detail::Stopwatch clock;
    nlohmann::json report;
    report["experiment"] = type;
    report["config"] = detail::config_echo_json(cfg);

    if (type == "solve-disk" || type == "solve-torus") {
        Grid2D grid = detail::grid_from_config(cfg);
        ZeroDivisor dv = detail::divisor_from_config(cfg);
        SolverParams sp = detail::solver_from_config(cfg);
        const bool disk = type == "solve-disk";
        if (disk && grid.domain != Domain::disk)
            throw ValidationError("solve-disk requires grid.kind = \"disk\"");
        if (!disk && grid.domain != Domain::torus)
            throw ValidationError("solve-torus requires grid.kind = \"torus\"");
        if (!disk) {
            const double margin =
                bradlow_margin(dv.degree(), sp.tau, grid.area());
            if (!(margin > 0.0))
                throw ValidationError("infeasible: tau*L^2 - 4*pi*d = " +
                                      std::to_string(margin) + " <= 0");
        }
        cfg.reject_unconsumed();
        fs::create_directories(out_dir);

        TaubesSolution sol = disk ? solve_taubes_disk(dv, grid, sp)
                                  : solve_taubes_torus(dv, grid, sp);
        write_glf1(out_dir + "/fields.glf1", sol.cfg, grid);
        nlohmann::json summary = detail::solution_summary(sol, dv, sp.tau);
        if (!disk) {
            double mass = 0.0;
            for (double u : sol.u.v) mass += std::exp(u);
            mass *= grid.cell_area();
            summary["mass_identity"] = {
                {"integral_e_u", mass},
                {"expected", sp.tau * grid.area() - 4.0 * pi * dv.degree()}};
            summary["flux"] = integral(sol.b, grid) / (2.0 * pi);
        }
        detail::write_json(out_dir + "/solution.json", summary);

        CsvWriter csv(out_dir + "/summary.csv");
        csv.header({"degree", "tau", "energy", "field_term", "gradient_term",
                    "potential_term", "r1", "r2", "newton_iters", "newton_residual"});
        csv.row({double(dv.degree()), sp.tau, sol.energy.total, sol.energy.field_term,
                 sol.energy.gradient_term, sol.energy.potential_term, sol.r1, sol.r2,
                 double(sol.newton_iters), sol.newton_residual});
        csv.close();
        report["headline"] = {{"energy", sol.energy.total},
                              {"r1", sol.r1},
                              {"r2", sol.r2},
                              {"iters", sol.newton_iters}};
    } else if (type == "bradlow-sweep") {
        Grid2D grid = detail::grid_from_config(cfg);
        if (grid.domain != Domain::torus)
            throw ValidationError("bradlow-sweep requires grid.kind = \"torus\"");
        ZeroDivisor dv = detail::divisor_from_config(cfg);
        SolverParams sp = detail::solver_from_config(cfg);
        std::vector<double> taus = cfg.get_array("sweep.tau");
        for (std::size_t i = 1; i < taus.size(); ++i)
            if (taus[i] <= taus[i - 1])
                throw ValidationError("sweep.tau must be sorted ascending");
        cfg.reject_unconsumed();
        fs::create_directories(out_dir);

        CsvWriter csv(out_dir + "/sweep.csv");
        csv.header({"tau", "margin", "feasible", "max_phi2", "mass_defect",
                    "newton_iters"});
        nlohmann::json rows = nlohmann::json::array();
        double prev_max = -1.0;
        bool monotone = true;
        int max_iters_seen = 0;
        for (double tau : taus) {
            SolverParams p = sp;
            p.tau = tau;
            const double margin = tau * grid.area() - 4.0 * pi * dv.degree();
            if (!(margin > 0.0)) {
                csv.row({tau, margin, 0.0, 0.0, 0.0, 0.0});
                rows.push_back({{"tau", tau}, {"margin", margin}, {"feasible", false}});
                continue;
            }
            TaubesSolution sol = solve_taubes_torus(dv, grid, p);
            double maxphi2 = 0.0, mass = 0.0;
            for (double u : sol.u.v) {
                const double eu = std::exp(u);
                maxphi2 = std::max(maxphi2, eu);
                mass += eu;
            }
            mass *= grid.cell_area();
            const double defect = std::abs(mass - margin) / margin;
            csv.row({tau, margin, 1.0, maxphi2, defect, double(sol.newton_iters)});
            rows.push_back({{"tau", tau},
                            {"margin", margin},
                            {"feasible", true},
                            {"max_phi2", maxphi2},
                            {"mass_defect", defect},
                            {"newton_iters", sol.newton_iters}});
            if (prev_max >= 0.0 && maxphi2 <= prev_max) monotone = false;
            prev_max = maxphi2;
            max_iters_seen = std::max(max_iters_seen, sol.newton_iters);
        }
        csv.close();
        report["headline"] = {{"rows", rows},
                              {"max_phi2_monotone", monotone},
                              {"max_newton_iters", max_iters_seen}};
    } else if (type == "metric") {
        Grid2D grid = detail::grid_from_config(cfg);
        ZeroDivisor dv = detail::divisor_from_config(cfg);
        SolverParams sp = detail::solver_from_config(cfg);
        const double fd = cfg.get_double("metric.fd_step", 1e-2);
        cfg.reject_unconsumed();
        fs::create_directories(out_dir);

        ModuliPoint q = ModuliPoint::from_zeros(dv.zeros_with_multiplicity());
        TMetric tm = t_metric(q, grid, sp, fd);
        const int dim = int(tm.g.rows());
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(tm.g);

        CsvWriter csv(out_dir + "/metric.csv");
        std::vector<std::string> cols;
        for (int j = 0; j < dim; ++j) cols.push_back("g" + std::to_string(j));
        csv.header(cols);
        for (int i = 0; i < dim; ++i) {
            std::vector<double> row(dim);
            for (int j = 0; j < dim; ++j) row[j] = tm.g(i, j);
            csv.row(row);
        }
        // eigenvalues appended as a final row
        std::vector<double> eig(dim);
        for (int j = 0; j < dim; ++j) eig[j] = es.eigenvalues()[j];
        csv.row(eig);
        csv.close();

        report["headline"] = {{"min_eigenvalue", tm.min_eigenvalue},
                              {"spd", tm.spd},
                              {"near_coincidence", tm.near_coincidence},
                              {"fd_step", fd}};
    } else if (type == "geodesic" || type == "scatter") {
        Grid2D grid = detail::grid_from_config(cfg);
        if (grid.domain != Domain::disk)
            throw ValidationError(type + " runs on the disk (plane surrogate)");
        SolverParams sp = detail::solver_from_config(cfg);
        const double fd = cfg.get_double("metric.fd_step", 1e-2);
        const double h_step = cfg.get_double("geodesic.h_step", 0.05);
        const double t_end = cfg.get_double("geodesic.t_end");

        if (type == "geodesic") {
            const std::string chart = cfg.get_string("geodesic.chart");
            if (chart != "single" && chart != "pair")
                throw ValidationError("geodesic.chart must be \"single\" or \"pair\"");
            auto q0v = cfg.get_array("geodesic.q0");
            auto qd0v = cfg.get_array("geodesic.qdot0");
            if (q0v.size() != 2 || qd0v.size() != 2)
                throw ValidationError("geodesic.q0/qdot0 must have 2 entries");
            const bool cross = cfg.get_bool("geodesic.del_crosscheck", false);
            cfg.reject_unconsumed();
            fs::create_directories(out_dir);

            const int degree = chart == "single" ? 1 : 2;
            std::vector<cplx> prefix =
                chart == "pair" ? std::vector<cplx>{cplx(0.0, 0.0)} : std::vector<cplx>{};
            ChartMetricOracle oracle(degree, prefix, grid, sp, fd, threads);
            Eigen::VectorXd q0(2), qd0(2);
            q0 << q0v[0], q0v[1];
            qd0 << qd0v[0], qd0v[1];
            auto traj = adiabatic_trajectory(q0, qd0, t_end, h_step, oracle.jet_oracle());

            CsvWriter csv(out_dir + "/trajectory.csv");
            std::vector<std::string> cols = {"t", "q0", "q1", "qdot0", "qdot1"};
            for (int j = 1; j <= degree; ++j) {
                cols.push_back("z" + std::to_string(j) + "_re");
                cols.push_back("z" + std::to_string(j) + "_im");
            }
            cols.push_back("kinetic_scalar");
            csv.header(cols);
            for (const auto& s : traj) {
                std::vector<double> row = {s.t, s.q[0], s.q[1], s.qdot[0], s.qdot[1]};
                for (const cplx& z : oracle.point(s.q).zeros) {
                    row.push_back(z.real());
                    row.push_back(z.imag());
                }
                row.push_back(s.kinetic);
                csv.row(row);
            }
            csv.close();
            const double kin0 = traj.front().kinetic;
            double drift = 0.0;
            for (const auto& s : traj)
                drift = std::max(drift, std::abs(s.kinetic - kin0) / kin0);
            report["headline"] = {{"kinetic_drift", drift},
                                  {"steps", traj.size() - 1}};
            if (cross) {
                // Richardson-extrapolated variational route at matching times
                auto d1 = del_trajectory(q0, qd0, t_end, h_step, oracle.jet_oracle());
                auto d2 =
                    del_trajectory(q0, qd0, t_end, 0.5 * h_step, oracle.jet_oracle());
                double agree = 0.0;
                for (std::size_t k = 0;
                     k < traj.size() && k < d1.size() && 2 * k < d2.size(); ++k) {
                    Eigen::VectorXd ex = (4.0 * d2[2 * k].q - d1[k].q) / 3.0;
                    agree = std::max(agree, (ex - traj[k].q).norm());
                }
                report["headline"]["del_agreement"] = agree;
            }
        } else {
            auto impacts = cfg.get_array("scatter.impact_parameters");
            const double speed = cfg.get_double("scatter.speed", 1.0);
            const double s0 = cfg.get_double("scatter.start_separation", 3.0) / 2.0;
            const double ball = cfg.get_double("scatter.ball_radius", 1.0);
            cfg.reject_unconsumed();
            fs::create_directories(out_dir);

            ChartMetricOracle oracle(2, {cplx(0.0, 0.0)}, grid, sp, fd, threads);
            CsvWriter csv(out_dir + "/scatter.csv");
            csv.header({"impact_parameter", "angle_deg", "closest_approach",
                        "kinetic_drift"});
            nlohmann::json rows = nlohmann::json::array();
            for (double b : impacts) {
                // antisymmetric pair: zeros at +-z0, z0 = s0 + i b/2, heading
                // toward each other along the real axis
                const cplx z0(s0, 0.5 * b);
                const cplx c2 = -z0 * z0;
                const cplx c2dot = -2.0 * z0 * cplx(-speed, 0.0);
                Eigen::VectorXd q0(2), qd0(2);
                q0 << c2.real(), c2.imag();
                qd0 << c2dot.real(), c2dot.imag();
                auto traj =
                    adiabatic_trajectory(q0, qd0, t_end, h_step, oracle.jet_oracle());
                std::vector<cplx> w;
                double closest = 1e300;
                for (const auto& s : traj) {
                    w.push_back(std::sqrt(-cplx(s.q[0], s.q[1])));
                    closest = std::min(closest, std::abs(w.back()));
                }
                // the encounter ball widens with the impact parameter so the
                // guard still certifies an actual encounter + exit
                const double ball_b = std::max(ball, 1.05 * closest);
                const double angle = scattering_angle(w, ball_b);
                const double kin0 = traj.front().kinetic;
                double drift = 0.0;
                for (const auto& s : traj)
                    drift = std::max(drift, std::abs(s.kinetic - kin0) / kin0);
                csv.row({b, angle, closest, drift});
                rows.push_back({{"impact_parameter", b},
                                {"angle_deg", angle},
                                {"closest_approach", closest}});
            }
            csv.close();
            report["headline"] = {{"rows", rows}};
        }
    } else if (type == "evolve") {
        Grid2D grid = detail::grid_from_config(cfg);
        ZeroDivisor dv = detail::divisor_from_config(cfg);
        SolverParams sp = detail::solver_from_config(cfg);
        EvolutionParams ep;
        ep.dt = cfg.get_double("dynamics.dt", 0.25 * grid.h);
        ep.n_steps = cfg.get_int("dynamics.n_steps");
        ep.sample_every = cfg.get_int("dynamics.sample_every", 100);
        ep.tau = sp.tau;
        const double eps = cfg.get_double("dynamics.epsilon", 0.0);
        auto dir = cfg.get_array("dynamics.velocity", {0.0, 0.0});
        const int snap_every = cfg.get_int("dynamics.snapshot_every", 0);
        if (ep.dt / grid.h > 0.5)
            throw ValidationError("dynamics.dt violates the CFL bound dt/h <= 0.5");
        cfg.reject_unconsumed();
        fs::create_directories(out_dir);

        TaubesSolution base = grid.domain == Domain::disk
                                  ? solve_taubes_disk(dv, grid, sp)
                                  : solve_taubes_torus(dv, grid, sp);
        DynamicState s;
        if (eps != 0.0) {
            if (dv.points.size() != 1 || dv.degree() != 1)
                throw ValidationError(
                    "dynamics.epsilon boosts are implemented for d = 1 divisors");
            const cplx z0 = dv.points[0].z;
            DivisorFamily fam = [](const Eigen::VectorXd& q) {
                return ZeroDivisor{{{cplx(q[0], q[1]), 1}}};
            };
            Eigen::VectorXd q0(2), qd0(2);
            q0 << z0.real(), z0.imag();
            qd0 << dir[0], dir[1];
            s = adiabatic_initial_data(fam, q0, qd0, eps, grid, sp, 1e-2, base);
        } else {
            s = make_dynamic_state(base.cfg, grid);
        }
        auto samples = leapfrog_evolve(s, grid, ep);

        CsvWriter csv(out_dir + "/trajectory.csv");
        const int dmax = dv.degree();
        std::vector<std::string> cols = {"t", "E_total", "T", "U", "gauss_residual",
                                         "n_zeros"};
        for (int j = 1; j <= dmax; ++j) {
            cols.push_back("z" + std::to_string(j) + "_re");
            cols.push_back("z" + std::to_string(j) + "_im");
        }
        csv.header(cols);
        for (const auto& smp : samples) {
            std::vector<double> row = {smp.t, smp.energy, smp.kinetic, smp.potential,
                                       smp.gauss, double(smp.zeros.size())};
            for (int j = 0; j < dmax; ++j) {
                const cplx z = j < int(smp.zeros.size()) ? smp.zeros[j] : cplx(0.0, 0.0);
                row.push_back(z.real());
                row.push_back(z.imag());
            }
            csv.row(row);
        }
        csv.close();
        if (snap_every > 0) {
            FieldConfig final_cfg = to_field_config(s, grid);
            write_gld1(out_dir + "/final.gld1", final_cfg, s.a1dot, s.a2dot, s.phidot,
                       grid);
        }
        report["headline"] = {
            {"energy_drift", std::abs(samples.back().energy - samples.front().energy) /
                                 samples.front().energy},
            {"gauss_growth", samples.back().gauss - samples.front().gauss}};
    } else if (type == "adiabatic-compare") {
        Grid2D grid = detail::grid_from_config(cfg);
        if (grid.domain != Domain::disk)
            throw ValidationError("adiabatic-compare runs on the disk");
        SolverParams sp = detail::solver_from_config(cfg);
        auto epsilons = cfg.get_array("adiabatic.epsilons");
        const double slow_end = cfg.get_double("adiabatic.slow_time_end");
        const std::string chart_name = cfg.get_string("adiabatic.chart");
        auto q0v = cfg.get_array("adiabatic.q0");
        auto qd0v = cfg.get_array("adiabatic.qdot0");
        const double fd = cfg.get_double("metric.fd_step", 1e-2);
        const double h_step = cfg.get_double("geodesic.h_step", 0.05);
        const double dt_factor = cfg.get_double("dynamics.cfl", 0.25);
        const int oracle_n = cfg.get_int("adiabatic.oracle_n", grid.n);
        const double oracle_extent = cfg.get_double("adiabatic.oracle_extent", grid.extent);
        if (chart_name != "single" && chart_name != "pair")
            throw ValidationError("adiabatic.chart must be \"single\" or \"pair\"");
        if (q0v.size() != 2 || qd0v.size() != 2)
            throw ValidationError("adiabatic.q0/qdot0 must have 2 entries");
        cfg.reject_unconsumed();
        fs::create_directories(out_dir);

        Eigen::VectorXd q0(2), qd0(2);
        q0 << q0v[0], q0v[1];
        qd0 << qd0v[0], qd0v[1];
        DivisorFamily fam =
            chart_name == "single"
                ? DivisorFamily([](const Eigen::VectorXd& q) {
                      return ZeroDivisor{{{cplx(q[0], q[1]), 1}}};
                  })
                : DivisorFamily([](const Eigen::VectorXd& q) {
                      return moduli_from_chart({cplx(0.0, 0.0), cplx(q[0], q[1])})
                          .divisor(1e-9);
                  });

        // geodesic side: flat straight line for d = 1, solver oracle for pairs
        std::vector<GeodesicState> geo;
        if (chart_name == "single") {
            for (double t = 0.0; t <= slow_end + 1e-9; t += h_step) {
                GeodesicState gs;
                gs.q = q0 + t * qd0;
                gs.qdot = qd0;
                gs.t = t;
                gs.kinetic = 0.5 * pi * qd0.squaredNorm();
                geo.push_back(gs);
            }
        } else {
            Grid2D og = make_grid(Domain::disk, oracle_extent, oracle_n);
            ChartMetricOracle oracle(2, {cplx(0.0, 0.0)}, og, sp, fd, threads);
            geo = adiabatic_trajectory(q0, qd0, slow_end, h_step, oracle.jet_oracle());
        }

        CsvWriter dev_csv(out_dir + "/dev.csv");
        dev_csv.header({"epsilon", "dev", "path_length", "dev_over_path",
                        "energy_drift", "gauss_growth"});
        nlohmann::json rows = nlohmann::json::array();
        for (double eps : epsilons) {
            EvolutionParams ep;
            ep.dt = dt_factor * grid.h;
            ep.sample_every = std::max(1, int(0.25 / (eps * ep.dt)));  // ~4/slow unit
            ep.tau = sp.tau;
            ZeroChart chart = chart_name == "single" ? single_zero_chart()
                                                     : pair_zero_chart();
            ComparisonReport rep = adiabatic_compare(fam, chart, q0, qd0, geo, eps,
                                                     slow_end, grid, sp, fd, ep);
            dev_csv.row({eps, rep.dev, rep.path_length, rep.dev / rep.path_length,
                         rep.energy_drift, rep.gauss_growth});
            rows.push_back({{"epsilon", eps},
                            {"dev", rep.dev},
                            {"path_length", rep.path_length},
                            {"dev_over_path", rep.dev / rep.path_length}});

            CsvWriter tr(out_dir + "/compare_eps" + std::to_string(eps) + ".csv");
            tr.header({"slow_time", "tracked_re", "tracked_im", "geo_re", "geo_im"});
            for (std::size_t k = 0; k < rep.slow_times.size(); ++k) {
                const cplx tz =
                    rep.tracked[k].empty() ? cplx(0, 0) : rep.tracked[k].front();
                const cplx gz =
                    rep.geodesic[k].empty() ? cplx(0, 0) : rep.geodesic[k].front();
                tr.row({rep.slow_times[k], tz.real(), tz.imag(), gz.real(), gz.imag()});
            }
            tr.close();
        }
        dev_csv.close();
        report["headline"] = {{"rows", rows}};
    } else {
        throw ValidationError("unknown experiment.type: " + type);
    }

    report["wall_clock_seconds"] = clock.seconds();
    detail::write_json(out_dir + "/report.json", report);
}

/// CLI-facing wrapper mapping failures to exit codes.
inline int run(const std::string& config_path, const std::string& out_dir,
               int threads) {
    std::string text;
    {
        std::ifstream in(config_path);
        if (!in) {
            std::fprintf(stderr, "error: cannot open config %s\n", config_path.c_str());
            return 2;
        }
        text.assign((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());
    }
    try {
        Config cfg = Config::parse(text);
        run_experiment(cfg, out_dir, threads);
        return 0;
    } catch (const ValidationError& e) {
        std::fprintf(stderr, "validation error: %s\n", e.what());
        return 2;
    } catch (const BradlowViolation& e) {
        std::fprintf(stderr, "validation error: %s\n", e.what());
        return 2;
    } catch (const NonConvergence& e) {
        std::fprintf(stderr, "solver error: %s\n", e.what());
        return 3;
    } catch (const LinearSolveFailure& e) {
        std::fprintf(stderr, "solver error: %s\n", e.what());
        return 3;
    } catch (const EnergyBlowUp& e) {
        std::fprintf(stderr, "dynamics error: %s\n", e.what());
        return 4;
    } catch (const CflViolation& e) {
        std::fprintf(stderr, "validation error: %s\n", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "validation error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}

}  // namespace vortexlab

#endif
