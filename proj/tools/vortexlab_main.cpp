// vortexlab command line: run one experiment from a config file.
//
//   vortexlab <subcommand> --config <path> [--out <dir>] [--threads N]
//
// Subcommands mirror experiment types; the subcommand must match the
// config's experiment.type.  VORTEXLAB_THREADS is the fallback for
// --threads.

#include <CLI11.hpp>

#include <cstdlib>

#include "vortexlab/runners.hpp"
#include "vortexlab/version.hpp"

int main(int argc, char** argv) {
    CLI::App app{"vortexlab: critically coupled Ginzburg-Landau vortex laboratory"};
    app.set_version_flag("--version", vortexlab::version_string);

    const std::vector<std::string> types = {
        "solve-disk",  "solve-torus", "bradlow-sweep", "metric",
        "geodesic",    "scatter",     "evolve",        "adiabatic-compare"};

    int exit_code = 2;
    bool ran = false;
    for (const std::string& type : types) {
        CLI::App* sub = app.add_subcommand(type, "run a " + type + " experiment");
        auto config_path = std::make_shared<std::string>();
        auto out_dir = std::make_shared<std::string>("out");
        auto threads = std::make_shared<int>(0);
        sub->add_option("--config", *config_path, "experiment config file")->required();
        sub->add_option("--out", *out_dir, "output directory (default: out)");
        sub->add_option("--threads", *threads, "worker threads for independent solves");
        sub->callback([&, type, config_path, out_dir, threads] {
            int t = *threads;
            if (t <= 0) {
                if (const char* env = std::getenv("VORTEXLAB_THREADS")) t = std::atoi(env);
            }
            if (t <= 0) t = 1;
            // the subcommand must agree with the config
            std::ifstream in(*config_path);
            if (!in) {
                std::fprintf(stderr, "error: cannot open config %s\n",
                             config_path->c_str());
                exit_code = 2;
                ran = true;
                return;
            }
            std::string text((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
            try {
                vortexlab::Config probe = vortexlab::Config::parse(text);
                if (probe.get_string("experiment.type") != type) {
                    std::fprintf(stderr,
                                 "validation error: config experiment.type \"%s\" does "
                                 "not match subcommand \"%s\"\n",
                                 probe.get_string("experiment.type").c_str(),
                                 type.c_str());
                    exit_code = 2;
                    ran = true;
                    return;
                }
            } catch (const std::exception& e) {
                std::fprintf(stderr, "validation error: %s\n", e.what());
                exit_code = 2;
                ran = true;
                return;
            }
            exit_code = vortexlab::run(*config_path, *out_dir, t);
            ran = true;
        });
    }
    app.require_subcommand(1);

    CLI11_PARSE(app, argc, argv);
    return ran ? exit_code : 2;
}
