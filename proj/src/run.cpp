#include "igsim/run.hpp"

#include "igsim/csv.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace igsim {

namespace {

namespace fs = std::filesystem;

struct Context {
    RunConfig cfg;
    ExperimentKind kind;
    fs::path out_dir;
    std::string config_label;
    RunOverrides overrides;
    std::vector<std::string> outputs;
    std::vector<std::string> notes;  // experiment-specific manifest lines
};

std::string path_of(Context& ctx, const std::string& name) {
    ctx.outputs.push_back(name);
    return (ctx.out_dir / name).string();
}

const DriveConfig& require_drive(const RunConfig& cfg, const std::string& key,
                                 const std::string& name) {
    if (name.empty())
        throw config_error("experiment." + key + " is not set but the experiment needs it");
    const DriveConfig* d = cfg.find_drive(name);
    if (!d)
        throw config_error("experiment." + key + " = '" + name + "': no such drive is configured");
    return *d;
}

std::string mA_label(double amps) { return format_double(amps * 1e3) + "mA"; }

void run_edge(Context& ctx) {
    const auto& cfg = ctx.cfg;
    const DriveConfig& drive = require_drive(cfg, "drive", cfg.experiment.drive);

    EdgePair edges;
    if (const auto* in = std::get_if<CspDesignInputs>(&drive.spec)) {
        const CspProfile on_profile = design_csp(cfg.device, cfg.circuit, *in);
        edges.on = simulate_edge(on_profile, cfg.device, cfg.circuit, cfg.sim, EdgeKind::turn_on);
        edges.off = simulate_edge(mirror_for_turn_off(on_profile), cfg.device, cfg.circuit,
                                  cfg.sim, EdgeKind::turn_off);
        write_csp_steps_csv(on_profile, path_of(ctx, "csp_steps.csv"));
    } else if (const auto* cats = std::get_if<CatsProfile>(&drive.spec)) {
        edges.on = simulate_edge(*cats, cfg.device, cfg.circuit, cfg.sim, EdgeKind::turn_on);
        edges.off = simulate_edge(*cats, cfg.device, cfg.circuit, cfg.sim, EdgeKind::turn_off);
    } else {
        const auto& plain = std::get<PlainDrive>(drive.spec);
        edges.on = simulate_edge(plain, cfg.device, cfg.circuit, cfg.sim, EdgeKind::turn_on);
        edges.off = simulate_edge(plain, cfg.device, cfg.circuit, cfg.sim, EdgeKind::turn_off);
    }

    const LossReport loss = switching_energy(edges.on, edges.off, cfg.device, cfg.circuit);
    const double span = cfg.circuit.v_bus - cfg.circuit.v_ce_sat;
    const EdgeSignature sig_on = edge_signature(edges.on, span);
    const EdgeSignature sig_off = edge_signature(edges.off, span);

    write_waveforms_csv(edges.on, path_of(ctx, "waveforms_on.csv"));
    write_waveforms_csv(edges.off, path_of(ctx, "waveforms_off.csv"));
    write_loss_csv(loss, path_of(ctx, "loss.csv"));
    write_signature_csv(sig_on, path_of(ctx, "signature_on.csv"));
    write_signature_csv(sig_off, path_of(ctx, "signature_off.csv"));

    std::ostringstream os;
    os << "edge '" << drive.name << "': p_sw = " << format_double(loss.p_sw)
       << " W, fom = " << format_double(fom(sig_on, sig_off));
    ctx.notes.push_back("loss windows: on [" + format_double(loss.window_on.first) + ", " +
                        format_double(loss.window_on.second) + "] s, off [" +
                        format_double(loss.window_off.first) + ", " +
                        format_double(loss.window_off.second) + "] s");
    ctx.notes.push_back(os.str());
}

void run_sweep(Context& ctx) {
    const auto& cfg = ctx.cfg;
    const DriveConfig& drive = require_drive(cfg, "drive", cfg.experiment.drive);
    const auto* base = std::get_if<CspDesignInputs>(&drive.spec);
    if (!base)
        throw config_error("experiment.drive = '" + drive.name +
                           "': the sweep experiment needs a csp drive");

    std::vector<EdgePair> edges;
    const auto records =
        sweep_i3(*base, cfg.experiment.i3_values, cfg.device, cfg.circuit, cfg.sim, &edges);
    write_tradeoff_csv(records, path_of(ctx, "tradeoff.csv"));

    for (std::size_t i = 0; i < records.size(); ++i) {
        const Waveforms pwm =
            build_pwm_cycle(edges[i].on, edges[i].off, cfg.circuit.t_s, cfg.experiment.duty);
        const Spectrum spec = spectrum_envelope(pwm, cfg.circuit.t_s);
        write_spectrum_csv(spec, path_of(ctx, "spectrum_i3_" + mA_label(*records[i].i_3) + ".csv"));
    }
    ctx.notes.push_back("duty cycle for spectra: " + format_double(cfg.experiment.duty));
    std::ostringstream os;
    os << "sweep: " << records.size() << " points, p_sw "
       << format_double(records.front().p_sw) << ".." << format_double(records.back().p_sw)
       << " W";
    ctx.notes.push_back(os.str());
}

void run_compare(Context& ctx) {
    const auto& cfg = ctx.cfg;
    const DriveConfig& csp_drive = require_drive(cfg, "drive", cfg.experiment.drive);
    const DriveConfig& cats_drive = require_drive(cfg, "cats_drive", cfg.experiment.cats_drive);
    const auto* base = std::get_if<CspDesignInputs>(&csp_drive.spec);
    if (!base)
        throw config_error("experiment.drive = '" + csp_drive.name +
                           "': the compare experiment needs a csp drive");
    const auto* cats = std::get_if<CatsProfile>(&cats_drive.spec);
    if (!cats)
        throw config_error("experiment.cats_drive = '" + cats_drive.name +
                           "': the compare experiment needs a cats drive");

    const ComparisonReport report =
        compare_at_equal_loss(*base, *cats, cfg.experiment.target_loss, cfg.experiment.bounds,
                              cfg.device, cfg.circuit, cfg.sim, cfg.experiment.duty);

    write_tradeoff_csv({report.csp_record, report.cats_record}, path_of(ctx, "tradeoff.csv"));
    write_spectrum_csv(report.csp_spectrum, path_of(ctx, "spectrum_csp.csv"));
    write_spectrum_csv(report.cats_spectrum, path_of(ctx, "spectrum_cats.csv"));
    write_csp_steps_csv(design_csp(cfg.device, cfg.circuit, report.tuned_inputs),
                        path_of(ctx, "csp_steps_tuned.csv"));

    std::ofstream os(ctx.out_dir / "comparison.txt", std::ios::binary);
    if (!os) throw io_error("cannot write comparison.txt");
    ctx.outputs.push_back("comparison.txt");
    os << "equal-loss comparison\n";
    os << "convention: CATS runs with its configured profile; the CSP step-3 amplitude is\n";
    os << "calibrated by bisection until its switching power matches the target.\n";
    os << "target_loss_W = " << format_double(report.target_loss)
       << (cfg.experiment.target_loss ? "" : " (measured CATS loss)") << '\n';
    os << "duty = " << format_double(report.duty) << '\n';
    os << "cats.r_g_ohm = " << format_double(cats->r_g) << '\n';
    os << "csp.i_3_A = " << format_double(report.tuned_inputs.i_3) << '\n';
    os << "csp.p_sw_W = " << format_double(report.csp_record.p_sw) << '\n';
    os << "cats.p_sw_W = " << format_double(report.cats_record.p_sw) << '\n';
    os << "loss_mismatch = " << format_double(report.loss_mismatch) << '\n';
    os << "csp.fom = " << format_double(report.csp_record.fom) << '\n';
    os << "cats.fom = " << format_double(report.cats_record.fom) << '\n';

    std::ostringstream note;
    note << "compare: fom csp = " << format_double(report.csp_record.fom)
         << ", fom cats = " << format_double(report.cats_record.fom)
         << ", loss mismatch = " << format_double(report.loss_mismatch);
    ctx.notes.push_back(note.str());
}

void run_fom_on_file(Context& ctx) {
    const auto& cfg = ctx.cfg;
    if (cfg.experiment.input.empty())
        throw config_error("experiment.input is not set but fom-on-file needs a CSV path");
    const Waveforms w = read_edge_csv(cfg.experiment.input);
    const EdgeSignature sig = edge_signature(w);
    write_signature_csv(sig, path_of(ctx, "signature.csv"));

    std::ostringstream os;
    os << "sigma_t = " << format_double(sig.sigma_t)
       << " s, sigma_w = " << format_double(sig.sigma_w)
       << " rad/s, sigma_t*sigma_w = " << format_double(sig.product());
    ctx.notes.push_back(os.str());
}

void write_manifest(Context& ctx, const std::string& summary) {
    std::ofstream os(ctx.out_dir / "manifest.txt", std::ios::binary);
    if (!os) throw io_error("cannot write manifest.txt");
    os << "igsim manifest\n";
    os << "command: " << to_string(ctx.kind) << '\n';
    os << "config: " << ctx.config_label << '\n';
    if (ctx.overrides.experiment)
        os << "override.experiment = " << to_string(*ctx.overrides.experiment) << '\n';
    if (ctx.overrides.out_dir) os << "override.out = " << *ctx.overrides.out_dir << '\n';
    if (ctx.overrides.dt) os << "override.dt = " << format_double(*ctx.overrides.dt) << '\n';
    if (ctx.overrides.seed) os << "override.seed = " << *ctx.overrides.seed << " (reserved)\n";

    os << "\n[inputs]\n";
    for (const auto& line : ctx.cfg.resolved) os << line << '\n';

    os << "\n[conventions]\n";
    os << "csp turn-off: mirrored turn-on profile (reversed, negated steps)\n";
    os << "csp hold after the last step: step-4 amplitude unless 'hold' overrides it\n";
    os << "pwm assembly: on-edge at t = 0, off-edge at duty * t_s\n";
    os << "spectrum reference: harmonic amplitudes in dBuV across 1 Ohm, no receiver model\n";
    for (const auto& line : ctx.notes) os << line << '\n';

    os << "\n[outputs]\n";
    for (const auto& name : ctx.outputs) os << name << '\n';
    os << "manifest.txt\n";

    os << "\n[result]\n";
    os << summary << '\n';
}

}  // namespace

RunResult run_experiment(const RunConfig& config, const RunOverrides& overrides,
                         const std::string& config_label) {
    Context ctx;
    ctx.cfg = config;
    ctx.kind = overrides.experiment.value_or(config.experiment.kind);
    ctx.overrides = overrides;
    ctx.config_label = config_label;
    if (overrides.out_dir) ctx.cfg.output_dir = *overrides.out_dir;
    if (overrides.dt) ctx.cfg.sim.dt = *overrides.dt;
    ctx.cfg.sim.validate();

    ctx.out_dir = fs::path(ctx.cfg.output_dir);
    std::error_code ec;
    fs::create_directories(ctx.out_dir, ec);
    if (ec) throw io_error("cannot create output directory: " + ctx.cfg.output_dir);

    switch (ctx.kind) {
        case ExperimentKind::edge: run_edge(ctx); break;
        case ExperimentKind::sweep: run_sweep(ctx); break;
        case ExperimentKind::compare: run_compare(ctx); break;
        case ExperimentKind::fom_on_file: run_fom_on_file(ctx); break;
    }

    RunResult result;
    result.out_dir = ctx.cfg.output_dir;
    result.summary = ctx.notes.empty() ? "done" : ctx.notes.back();
    write_manifest(ctx, result.summary);
    ctx.outputs.push_back("manifest.txt");
    result.outputs = ctx.outputs;
    return result;
}

RunResult run_config_file(const std::string& config_path, const RunOverrides& overrides) {
    const RunConfig cfg = parse_config_file(config_path);
    return run_experiment(cfg, overrides, config_path);
}

double fom_contribution_of_file(const std::string& csv_path) {
    const Waveforms w = read_edge_csv(csv_path);
    return edge_signature(w).product();
}

}  // namespace igsim
