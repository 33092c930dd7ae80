// wavebreak: spectral laboratory for wave breaking in nonlocal perturbations
// of the Burgers equation. Subcommands: criteria, simulate, sweep, kernels,
// verify. Exit codes: 0 pass/inconclusive, 1 theorem-check failure,
// 2 usage/config error.

#include <CLI11.hpp>

#include "wavebreak/cli_commands.hpp"
#include "wavebreak/version.hpp"

int main(int argc, char** argv) {
    CLI::App app{"wave-breaking criteria and pseudospectral simulation"};
    app.set_version_flag("--version", wavebreak::kVersion);
    app.require_subcommand(1);

    wavebreak::CliOptions opt;
    auto add_common = [&](CLI::App* cmd, bool config_required) {
        auto* c = cmd->add_option("--config", opt.config_path, "configuration file (key = value sections)");
        if (config_required) c->required();
        cmd->add_option("--out", opt.out_dir, "output directory");
        cmd->add_option("--workers", opt.workers, "worker thread count for sweeps");
        cmd->add_option("--seed", opt.seed, "seed for randomized corpora");
    };

    auto* criteria = app.add_subcommand("criteria", "evaluate a wave-breaking criterion");
    add_common(criteria, true);
    auto* simulate = app.add_subcommand("simulate", "run a breaking simulation and reconcile with the criterion");
    add_common(simulate, true);
    auto* sweep = app.add_subcommand("sweep", "run a parameter sweep");
    add_common(sweep, true);
    auto* kernels = app.add_subcommand("kernels", "tabulate kernels and bound margins");
    add_common(kernels, true);
    auto* verify = app.add_subcommand("verify", "run the verification corpus");
    add_common(verify, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (criteria->parsed()) return wavebreak::cmd_criteria(opt);
    if (simulate->parsed()) return wavebreak::cmd_simulate(opt);
    if (sweep->parsed()) return wavebreak::cmd_sweep(opt);
    if (kernels->parsed()) return wavebreak::cmd_kernels(opt);
    if (verify->parsed()) return wavebreak::cmd_verify(opt);
    return 2;
}
