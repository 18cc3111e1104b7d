// Command-line front end: runs the simulation campaigns and writes one CSV
// and one JSON sidecar per experiment.
//
// Exit codes: 0 success, 2 usage error, 3 config error, 4 numerical error,
// 5 I/O error.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dopplerkey/dopplerkey.hpp"

namespace {

struct CommonArgs {
    std::string config_path;
    std::string out_dir;
    std::uint64_t seed = 0;
    bool seed_set = false;
    std::int64_t trials = 0;
    int threads = 0;
    double theta_t = 5.0;
    double alpha = 1.0;
    double v_max = 1000.0;
};

std::string default_out_dir() {
    if (const char* env = std::getenv("DOPPLERKEY_OUTDIR"); env && *env) return env;
    return "results";
}

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("-c,--config", args.config_path, "scenario config file (INI)");
    cmd->add_option("-o,--out", args.out_dir, "output directory")
        ->default_val(default_out_dir());
    cmd->add_option("-s,--seed", args.seed, "override the master seed")
        ->each([&args](const std::string&) { args.seed_set = true; });
    cmd->add_option("-t,--trials", args.trials,
                    "override trial/duration counts for all experiments");
    cmd->add_option("-j,--threads", args.threads, "worker threads (0 = auto)");
}

int run(const std::vector<std::string>& names, const CommonArgs& args) {
    using namespace dopplerkey;
    ScenarioConfig cfg =
        args.config_path.empty() ? finalize(default_scenario()) : load_config(args.config_path);
    if (args.seed_set) cfg.master_seed = args.seed;
    if (args.trials < 0) throw config_error("--trials must be positive");
    if (args.trials > 0) {
        cfg.trials = args.trials;
        cfg.n_durations = args.trials;
    }
    validate(cfg);

    ExperimentOptions opts;
    opts.out_dir = args.out_dir;
    opts.threads = args.threads;
    opts.trials_override = args.trials;
    opts.theta_t = args.theta_t;
    opts.alpha = args.alpha;
    opts.v_max = args.v_max;

    for (const auto& name : names) {
        const ExperimentResult res = run_named_experiment(name, cfg, opts);
        write_result(res, cfg, opts.out_dir);
        std::printf("%s: wrote %s (%zu rows, %.3f s, config %s)\n", name.c_str(),
                    (opts.out_dir / (res.name + ".csv")).string().c_str(), res.rows.size(),
                    res.runtime_seconds, config_hash(cfg).c_str());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Doppler-based secret-key generation simulator"};
    app.require_subcommand(1);

    CommonArgs args;
    std::vector<std::pair<std::string, CLI::App*>> cmds;
    cmds.emplace_back("key-rate",
                      app.add_subcommand("key-rate", "achievable key-rate surface"));
    cmds.emplace_back("npsds-pdf",
                      app.add_subcommand("npsds-pdf", "spectral-shift density vs mobility"));
    cmds.emplace_back("estimator",
                      app.add_subcommand("estimator", "ML estimator histograms"));
    cmds.emplace_back("mse", app.add_subcommand("mse", "estimator MSE vs pilot count"));
    cmds.emplace_back("kdr", app.add_subcommand("kdr", "key disagreement rates"));
    cmds.emplace_back("timing", app.add_subcommand("timing", "pilot-exchange timing bounds"));
    CLI::App* all = app.add_subcommand("all", "run every experiment");
    for (auto& [name, cmd] : cmds) add_common(cmd, args);
    add_common(all, args);

    for (auto& [name, cmd] : cmds) {
        if (name == "estimator" || name == "mse")
            cmd->add_option("--theta", args.theta_t, "true spectral shift for the sampler");
        if (name == "timing") {
            cmd->add_option("--alpha", args.alpha, "processing overhead factor");
            cmd->add_option("--vmax", args.v_max, "velocity tolerance (m/s)");
        }
    }
    all->add_option("--theta", args.theta_t, "true spectral shift for the sampler");
    all->add_option("--alpha", args.alpha, "processing overhead factor");
    all->add_option("--vmax", args.v_max, "velocity tolerance (m/s)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    std::vector<std::string> names;
    if (all->parsed()) {
        names = dopplerkey::experiment_names();
    } else {
        for (auto& [name, cmd] : cmds)
            if (cmd->parsed()) names.push_back(name);
    }

    try {
        return run(names, args);
    } catch (const dopplerkey::config_error& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 3;
    } catch (const dopplerkey::numerical_error& e) {
        std::fprintf(stderr, "numerical error: %s\n", e.what());
        return 4;
    } catch (const dopplerkey::io_error& e) {
        std::fprintf(stderr, "I/O error: %s\n", e.what());
        return 5;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 4;
    }
}
