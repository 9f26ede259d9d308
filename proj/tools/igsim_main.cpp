// igsim command-line front end. Talks to the simulator exclusively through
// the C API in igsim.h.

#include "igsim.h"

#include <CLI11.hpp>

#include <cstdio>
#include <string>
#include <vector>

namespace {

std::string last_error() {
    std::vector<char> buf(4096);
    igsim_last_error(buf.data(), buf.size());
    return std::string(buf.data());
}

int run_command(const char* experiment, const std::string& config, const std::string& out_dir,
                double dt) {
    char summary[512] = {0};
    const igsim_status st =
        igsim_run_config(config.c_str(), experiment, out_dir.empty() ? nullptr : out_dir.c_str(),
                         dt, summary, sizeof(summary));
    if (st != IGSIM_OK) {
        std::fprintf(stderr, "igsim %s: %s\n", experiment, last_error().c_str());
        return static_cast<int>(st);
    }
    std::printf("%s\n", summary);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"behavioral IGBT switching-transient simulator"};
    app.require_subcommand(1);
    app.footer("Config format and examples: see README.md");

    std::string config;
    std::string out_dir;
    std::string input;
    double dt = 0.0;
    unsigned seed = 0;

    auto add_common = [&](CLI::App* cmd, bool config_required) {
        cmd->add_option("--config", config, "run configuration file")->required(config_required);
        cmd->add_option("--out", out_dir, "output directory (overrides the config)");
        cmd->add_option("--dt", dt, "simulation step override in seconds");
        cmd->add_option("--seed", seed, "reserved; no stochastic elements at present");
    };

    CLI::App* edge = app.add_subcommand("edge", "simulate both edges of one drive");
    add_common(edge, true);
    CLI::App* sweep = app.add_subcommand("sweep", "run the i_3 trade-off sweep");
    add_common(sweep, true);
    CLI::App* compare = app.add_subcommand("compare", "equal-loss CSP vs CATS comparison");
    add_common(compare, true);
    CLI::App* fom = app.add_subcommand("fom", "signature co-spread of an edge CSV");
    add_common(fom, false);
    fom->add_option("--input", input, "edge waveform CSV (t_s,v_ce_V columns)");

    CLI11_PARSE(app, argc, argv);

    if (edge->parsed()) return run_command("edge", config, out_dir, dt);
    if (sweep->parsed()) return run_command("sweep", config, out_dir, dt);
    if (compare->parsed()) return run_command("compare", config, out_dir, dt);

    // fom: either a bare --input file or a config-driven fom-on-file run.
    if (!input.empty()) {
        double product = 0.0;
        const igsim_status st = igsim_fom_of_file(input.c_str(), &product);
        if (st != IGSIM_OK) {
            std::fprintf(stderr, "igsim fom: %s\n", last_error().c_str());
            return static_cast<int>(st);
        }
        std::printf("sigma_t*sigma_w = %.6g\n", product);
        return 0;
    }
    if (config.empty()) {
        std::fprintf(stderr, "igsim fom: needs --input <csv> or --config <file>\n");
        return static_cast<int>(IGSIM_ERR_ARGUMENT);
    }
    return run_command("fom-on-file", config, out_dir, dt);
}
