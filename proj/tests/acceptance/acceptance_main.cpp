// Acceptance suite: one line per criterion, every tolerance pinned in code.
// Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <string>
#include <vector>

#include "vortexlab/adiabatic.hpp"
#include "vortexlab/runners.hpp"
#include "vortexlab/vortexlab.hpp"

using namespace vortexlab;

namespace {

struct Harness {
    int failures = 0;
    void report(int id, const std::string& name, bool pass, const std::string& detail,
                double seconds) {
        std::printf("%s  criterion %d (%s): %s  [%.1fs]\n", pass ? "PASS" : "FAIL", id,
                    name.c_str(), detail.c_str(), seconds);
        std::fflush(stdout);
        if (!pass) ++failures;
    }
    void run(int id, const std::string& name,
             const std::function<std::pair<bool, std::string>()>& fn) {
        const auto t0 = std::chrono::steady_clock::now();
        bool pass = false;
        std::string detail;
        try {
            auto [p, d] = fn();
            pass = p;
            detail = d;
        } catch (const std::exception& e) {
            pass = false;
            detail = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        report(id, name, pass, detail, secs);
    }
};

char buf[1024];

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return std::string((std::istreambuf_iterator<char>(in)),
                       std::istreambuf_iterator<char>());
}

// ---------------------------------------------------------------- criterion 1
std::pair<bool, std::string> bogomolny_saturation() {
    Grid2D g = make_grid(Domain::disk, 10.0, 256);
    SolverParams sp;
    const auto t0 = std::chrono::steady_clock::now();
    TaubesSolution s1 = solve_taubes_disk(ZeroDivisor{{{cplx(0.0, 0.0), 1}}}, g, sp);
    const double sec1 =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const auto t1 = std::chrono::steady_clock::now();
    TaubesSolution s2 = solve_taubes_disk(
        ZeroDivisor{{{cplx(-2.0, 0.0), 1}, {cplx(2.0, 0.0), 1}}}, g, sp);
    const double sec2 =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t1).count();
    const double e1 = std::abs(s1.energy.total - pi) / pi;
    const double e2 = std::abs(s2.energy.total - 2.0 * pi) / (2.0 * pi);
    const bool pass = e1 <= 5e-3 && e2 <= 5e-3 && sec1 < 30.0 && sec2 < 30.0;
    std::snprintf(buf, sizeof buf,
                  "U(d=1)=%.6f (err %.3f%%), U(d=2)=%.6f (err %.3f%%), solves %.1fs/%.1fs"
                  " (tol 0.5%%, 30s)",
                  s1.energy.total, 100.0 * e1, s2.energy.total, 100.0 * e2, sec1, sec2);
    return {pass, buf};
}

// ---------------------------------------------------------------- criterion 2
std::pair<bool, std::string> zero_placement() {
    SplitMix64 rng(20260808);
    SolverParams sp;
    double worst = 0.0;
    int count = 0;
    // three disk divisors (track_zeros), two torus divisors (minima of e^u)
    for (int rep = 0; rep < 3; ++rep) {
        Grid2D g = make_grid(Domain::disk, 10.0, 192);
        const int d = 1 + rng.uniform_int(0, 2);
        std::vector<cplx> zs;
        while (int(zs.size()) < d) {
            cplx z(rng.uniform(-4.0, 4.0), rng.uniform(-4.0, 4.0));
            bool ok = true;
            for (const cplx& w : zs)
                if (std::abs(w - z) < 1.5) ok = false;
            if (ok) zs.push_back(z);
        }
        TaubesSolution sol = solve_taubes_disk(divisor_from_zeros(zs), g, sp);
        auto found = track_zeros(sol.cfg.phi, g);
        for (const cplx& z : zs) {
            double best = 1e9;
            for (const cplx& f : found) best = std::min(best, std::abs(f - z));
            worst = std::max(worst, best / g.h);
        }
        ++count;
    }
    for (int rep = 0; rep < 2; ++rep) {
        Grid2D g = make_grid(Domain::torus, 16.0, 128);
        const int d = 1 + rng.uniform_int(0, 2);
        std::vector<cplx> zs;
        while (int(zs.size()) < d) {
            cplx z(rng.uniform(2.0, 14.0), rng.uniform(2.0, 14.0));
            bool ok = true;
            for (const cplx& w : zs)
                if (std::abs(w - z) < 2.0) ok = false;
            if (ok) zs.push_back(z);
        }
        TaubesSolution sol = solve_taubes_torus(divisor_from_zeros(zs), g, sp);
        auto mins = solution_minima(sol.u, g, d);
        for (const cplx& z : zs) {
            double best = 1e9;
            for (const cplx& m : mins) best = std::min(best, std::abs(m - z));
            worst = std::max(worst, best / g.h);
        }
        ++count;
    }
    const bool pass = worst <= 1.0 && count == 5;
    std::snprintf(buf, sizeof buf, "5 random divisors (d<=3), worst offset %.2f cells"
                  " (tol 1 cell)", worst);
    return {pass, buf};
}

// ---------------------------------------------------------------- criterion 3
std::pair<bool, std::string> bradlow_threshold() {
    Grid2D g = make_grid(Domain::torus, 16.0, 128);
    SolverParams sp;
    const double tau_star = 4.0 * pi / 256.0;
    // rejection exactly at the threshold
    bool rejected = false;
    try {
        SolverParams p = sp;
        p.tau = tau_star;
        solve_taubes_torus(ZeroDivisor{{{cplx(8.0, 8.0), 1}}}, g, p);
    } catch (const BradlowViolation&) {
        rejected = true;
    }
    double worst_mass = 0.0, prev = -1.0;
    bool monotone = true;
    int feasible = 0;
    for (double tau : {0.052, 0.0652, 0.113, 0.21, 0.5, 1.0}) {
        SolverParams p = sp;
        p.tau = tau;
        const double margin = tau * 256.0 - 4.0 * pi;
        if (!(margin > 0.0)) continue;
        TaubesSolution sol = solve_taubes_torus(ZeroDivisor{{{cplx(8.0, 8.0), 1}}}, g, p);
        double mass = 0.0, maxphi2 = 0.0;
        for (double u : sol.u.v) {
            const double eu = std::exp(u);
            mass += eu;
            maxphi2 = std::max(maxphi2, eu);
        }
        mass *= g.cell_area();
        worst_mass = std::max(worst_mass, std::abs(mass - margin) / margin);
        if (prev >= 0.0 && maxphi2 <= prev) monotone = false;
        prev = maxphi2;
        ++feasible;
    }
    const bool pass = rejected && feasible == 6 && worst_mass <= 1e-6 && monotone;
    std::snprintf(buf, sizeof buf,
                  "threshold tau=%.5f rejected=%d, 6 feasible rows, mass identity "
                  "%.1e (tol 1e-6), max|phi|^2 monotone=%d",
                  tau_star, int(rejected), worst_mass, int(monotone));
    return {pass, buf};
}

// ---------------------------------------------------------------- criterion 4
std::pair<bool, std::string> gauge_invariance() {
    Grid2D g = make_grid(Domain::torus, 16.0, 128);
    SplitMix64 rng(4040);
    FieldConfig cfg;
    cfg.a1 = random_smooth_chi(g, rng, 0.4).chi;
    cfg.a2 = random_smooth_chi(g, rng, 0.4).chi;
    cfg.phi = CplxField(g.n);
    RealField pr = random_smooth_chi(g, rng, 0.3).chi;
    RealField pim = random_smooth_chi(g, rng, 0.3).chi;
    for (std::size_t i = 0; i < cfg.phi.v.size(); ++i)
        cfg.phi.v[i] = cplx(1.0 + pr.v[i], pim.v[i]);
    const double tau = 1.0;
    EnergyBreakdown e0 = potential_energy(cfg, tau, g);
    const int w0 = vortex_number(cfg, g);
    double worst = 0.0;
    bool winding_ok = true;
    for (int k = 0; k < 20; ++k) {
        GaugeFunction gf = random_smooth_chi(g, rng, 0.5);
        FieldConfig gc = gauge_transform(cfg, gf, g);
        worst = std::max(worst, std::abs(potential_energy(gc, tau, g).total - e0.total) /
                                    (1.0 + e0.total));
        if (vortex_number(gc, g) != w0) winding_ok = false;
    }
    // winding invariance on a disk solver output as well
    Grid2D gd = make_grid(Domain::disk, 10.0, 128);
    TaubesSolution sol = solve_taubes_disk(
        ZeroDivisor{{{cplx(-2.0, 0.0), 1}, {cplx(2.0, 1.0), 1}}}, gd, SolverParams{});
    for (int k = 0; k < 20; ++k) {
        GaugeFunction gf = random_smooth_chi(gd, rng, 0.5);
        if (vortex_number(gauge_transform(sol.cfg, gf, gd), gd) != 2) winding_ok = false;
    }
    const bool pass = worst <= 1e-10 && winding_ok;
    std::snprintf(buf, sizeof buf,
                  "20 transforms: |dU|/(1+U) = %.1e (tol 1e-10), winding invariant=%d",
                  worst, int(winding_ok));
    return {pass, buf};
}

// ---------------------------------------------------------------- criterion 5
std::pair<bool, std::string> metric_flatness() {
    Grid2D g = make_grid(Domain::disk, 10.0, 192);
    SolverParams sp;
    const std::vector<cplx> positions = {cplx(0.0, 0.0), cplx(1.0, -2.0), cplx(-3.0, 1.0),
                                         cplx(2.0, 2.0), cplx(-2.0, -3.0)};
    double worst = 0.0;
    for (const cplx& z : positions) {
        TMetric tm = t_metric(ModuliPoint::from_zeros({z}), g, sp, 1e-2);
        if (!tm.spd) return {false, "metric not SPD"};
        worst = std::max(worst, std::abs(tm.g(0, 0) - pi) / pi);
        worst = std::max(worst, std::abs(tm.g(1, 1) - pi) / pi);
        worst = std::max(worst, std::abs(tm.g(0, 1)) / pi);
    }
    // independent translational kinetic-energy oracle (dynamics route)
    DivisorFamily fam = [](const Eigen::VectorXd& q) {
        return ZeroDivisor{{{cplx(q[0], q[1]), 1}}};
    };
    Eigen::VectorXd q0(2), qd0(2);
    q0 << 1.0, -2.0;
    qd0 << 1.0, 0.0;
    const double eps = 1e-2;
    TaubesSolution base = solve_taubes_disk(fam(q0), g, sp);
    DynamicState ds = adiabatic_initial_data(fam, q0, qd0, eps, g, sp, 1e-2, base);
    const double g_oracle = 2.0 * link_kinetic_energy(ds, g) / (eps * eps);
    const double oracle_err = std::abs(g_oracle - pi) / pi;
    const bool pass = worst <= 1e-2 && oracle_err <= 1e-2;
    std::snprintf(buf, sizeof buf,
                  "5 positions: max deviation from pi*I = %.2e rel; kinetic oracle "
                  "g=%.6f (err %.2e) (tol 1%%)",
                  worst, g_oracle, oracle_err);
    return {pass, buf};
}

// ---------------------------------------------------------------- criterion 6
std::pair<bool, std::string> right_angle_scattering() {
    Grid2D g = make_grid(Domain::disk, 8.0, 96);
    SolverParams sp;
    ChartMetricOracle oracle(2, {cplx(0.0, 0.0)}, g, sp, 1e-2);
    MetricJetOracle jets = oracle.jet_oracle();
    Eigen::VectorXd q0(2), qd0(2);
    q0 << -2.25, 0.0;
    qd0 << 3.0, 0.0;
    const double t_end = 1.5;
    auto rk4 = adiabatic_trajectory(q0, qd0, t_end, 0.1, jets);
    std::vector<cplx> w;
    for (const auto& s : rk4) w.push_back(std::sqrt(-cplx(s.q[0], s.q[1])));
    const double angle = scattering_angle(w, 0.8);

    auto d1 = del_trajectory(q0, qd0, t_end, 0.1, jets);
    auto d2 = del_trajectory(q0, qd0, t_end, 0.05, jets);
    double agree = 0.0;
    for (std::size_t k = 0; k < rk4.size() && 2 * k < d2.size(); ++k) {
        Eigen::VectorXd ext = (4.0 * d2[2 * k].q - d1[k].q) / 3.0;
        agree = std::max(agree, (ext - rk4[k].q).norm());
    }
    const bool pass = std::abs(angle - 90.0) <= 1.0 && agree <= 1e-4;
    std::snprintf(buf, sizeof buf,
                  "head-on angle = %.4f deg (tol 90 +- 1), integrator agreement %.2e "
                  "(tol 1e-4)",
                  angle, agree);
    return {pass, buf};
}

// ---------------------------------------------------------------- criterion 7
std::pair<bool, std::string> hyperbolic_conservation() {
    Grid2D g = make_grid(Domain::disk, 10.0, 256);
    SolverParams sp;
    DivisorFamily fam = [](const Eigen::VectorXd& q) {
        return ZeroDivisor{{{cplx(q[0], q[1]), 1}}};
    };
    Eigen::VectorXd q0 = Eigen::VectorXd::Zero(2), qd0(2);
    qd0 << 1.0, 0.0;
    TaubesSolution base = solve_taubes_disk(fam(q0), g, sp);
    DynamicState s = adiabatic_initial_data(fam, q0, qd0, 0.05, g, sp, 1e-2, base);
    const double g0 = gauss_residual(s, g);
    EvolutionParams ep;
    ep.dt = 0.25 * g.h;
    ep.n_steps = 10000;
    ep.sample_every = 1000;
    auto samples = leapfrog_evolve(s, g, ep);
    double edrift = 0.0, ggrow = 0.0;
    for (const auto& smp : samples) {
        edrift = std::max(edrift, std::abs(smp.energy - samples.front().energy) /
                                      samples.front().energy);
        ggrow = std::max(ggrow, smp.gauss - g0);
    }
    const bool pass = edrift <= 1e-4 && ggrow <= 1e-6 && g0 < 1e-8;
    std::snprintf(buf, sizeof buf,
                  "1e4 steps at n=256: |dE|/E = %.2e (tol 1e-4), Gauss growth %.2e "
                  "(tol 1e-6), Gauss(0)=%.1e",
                  edrift, ggrow, g0);
    return {pass, buf};
}

// ---------------------------------------------------------------- criterion 8
std::pair<bool, std::string> adiabatic_principle() {
    SolverParams sp;
    // Head-on pair through the coincidence.  The slow-time horizon keeps
    // the epsilon = 0.05 run inside the reflection-free window t < 2R of
    // the clamped boundary; the evolution grid is finer than the oracle's
    // because the deviation floor is set by the evolution's O(h^2) bias.
    Grid2D og = make_grid(Domain::disk, 8.0, 128);
    ChartMetricOracle oracle(2, {cplx(0.0, 0.0)}, og, sp, 7e-3);
    Eigen::VectorXd q0(2), qd0(2);
    q0 << -1.5, 0.0;
    qd0 << 3.0, 0.0;
    const double slow_end = 0.78;
    auto geo = adiabatic_trajectory(q0, qd0, slow_end, 0.05, oracle.jet_oracle());

    DivisorFamily fam = [](const Eigen::VectorXd& q) {
        return moduli_from_chart({cplx(0.0, 0.0), cplx(q[0], q[1])}).divisor(1e-9);
    };
    Grid2D g = make_grid(Domain::disk, 8.0, 192);
    std::vector<double> devs;
    double path = 0.0;
    for (double eps : {0.2, 0.1, 0.05}) {
        EvolutionParams ep;
        ep.dt = 0.25 * g.h;
        ep.sample_every = std::max(1, int(0.1 / (eps * ep.dt)));
        ComparisonReport rep = adiabatic_compare(fam, pair_zero_chart(), q0, qd0, geo,
                                                 eps, slow_end, g, sp, 1e-2, ep);
        devs.push_back(rep.dev);
        path = rep.path_length;
    }
    const bool decreasing = devs[0] > devs[1] && devs[1] > devs[2];
    const bool small = devs[2] <= 0.05 * path;
    std::snprintf(buf, sizeof buf,
                  "dev(0.2)=%.4f > dev(0.1)=%.4f > dev(0.05)=%.4f: %d; dev(0.05)/path "
                  "= %.3f (tol 0.05, path %.2f)",
                  devs[0], devs[1], devs[2], int(decreasing), devs[2] / path, path);
    return {decreasing && small, buf};
}

// ---------------------------------------------------------------- criterion 9
std::pair<bool, std::string> determinism() {
    namespace fs = std::filesystem;
    const std::string cfg_text = R"([experiment]
type = "solve-disk"
seed = 7
[grid]
kind = "disk"
extent = 10.0
n = 256
[divisor]
re = [0.0]
im = [0.0]
mult = [1]
[solver]
tol = 1e-10
tau = 1.0
)";
    const std::string sweep_text = R"([experiment]
type = "bradlow-sweep"
seed = 7
[grid]
kind = "torus"
extent = 16.0
n = 128
[divisor]
re = [8.0]
im = [8.0]
mult = [1]
[solver]
tol = 1e-10
[sweep]
tau = [0.01, 0.0652, 0.3, 1.0]
)";
    fs::remove_all("acc_det");
    bool ok = true;
    for (const auto& [name, text] :
         std::vector<std::pair<std::string, std::string>>{{"solve", cfg_text},
                                                          {"sweep", sweep_text}}) {
        Config c1 = Config::parse(text);
        run_experiment(c1, "acc_det/" + name + "_a", 1);
        Config c2 = Config::parse(text);
        run_experiment(c2, "acc_det/" + name + "_b", 1);
        for (const auto& entry : fs::directory_iterator("acc_det/" + name + "_a")) {
            const std::string fn = entry.path().filename().string();
            if (fn == "report.json") continue;  // carries wall-clock timing
            if (slurp(entry.path().string()) !=
                slurp("acc_det/" + name + "_b/" + fn))
                ok = false;
        }
    }
    fs::remove_all("acc_det");
    std::snprintf(buf, sizeof buf,
                  "repeated solve-disk and bradlow-sweep runs byte-identical: %d",
                  int(ok));
    return {ok, buf};
}

}  // namespace

int main() {
    Harness h;
    h.run(1, "Bogomolny saturation", bogomolny_saturation);
    h.run(2, "zero placement", zero_placement);
    h.run(3, "Bradlow threshold", bradlow_threshold);
    h.run(4, "gauge invariance", gauge_invariance);
    h.run(5, "d=1 metric", metric_flatness);
    h.run(6, "90 degree scattering", right_angle_scattering);
    h.run(7, "hyperbolic conservation", hyperbolic_conservation);
    h.run(8, "adiabatic principle", adiabatic_principle);
    h.run(9, "determinism", determinism);
    if (h.failures == 0) {
        std::printf("acceptance: all 9 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) failed\n", h.failures);
    return 1;
}
