#include "igsim.h"

#include "igsim/csv.hpp"
#include "igsim/run.hpp"

#include <cstring>
#include <string>

using namespace igsim;

namespace {

thread_local std::string g_last_error;

igsim_status status_of(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::domain: return IGSIM_ERR_DOMAIN;
        case ErrorKind::design: return IGSIM_ERR_DESIGN;
        case ErrorKind::config: return IGSIM_ERR_CONFIG;
        case ErrorKind::incomplete_edge: return IGSIM_ERR_INCOMPLETE_EDGE;
        case ErrorKind::protocol: return IGSIM_ERR_PROTOCOL;
        case ErrorKind::signature: return IGSIM_ERR_SIGNATURE;
        case ErrorKind::framing: return IGSIM_ERR_FRAMING;
        case ErrorKind::assembly: return IGSIM_ERR_ASSEMBLY;
        case ErrorKind::calibration: return IGSIM_ERR_CALIBRATION;
        case ErrorKind::io: return IGSIM_ERR_IO;
    }
    return IGSIM_ERR_UNKNOWN;
}

template <typename Fn>
igsim_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return IGSIM_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return status_of(e.kind());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return IGSIM_ERR_UNKNOWN;
    } catch (...) {
        g_last_error = "unknown error";
        return IGSIM_ERR_UNKNOWN;
    }
}

igsim_status bad_argument(const char* what) {
    g_last_error = what;
    return IGSIM_ERR_ARGUMENT;
}

CircuitParams to_circuit(const igsim_circuit_params& c) {
    return CircuitParams{c.v_bus, c.i_load, c.t_s, c.v_ce_sat};
}

}  // namespace

struct igsim_device {
    DeviceParams params;
};

struct igsim_profile {
    GateDriveProfile drive;
};

struct igsim_waveforms {
    Waveforms data;
};

struct igsim_signature {
    EdgeSignature data;
};

extern "C" {

uint32_t igsim_abi_version(void) { return IGSIM_ABI_VERSION; }

const char* igsim_version_string(void) { return "igsim 1.0.0"; }

size_t igsim_last_error(char* buf, size_t len) {
    if (buf && len > 0) {
        const size_t n = g_last_error.size() < len - 1 ? g_last_error.size() : len - 1;
        std::memcpy(buf, g_last_error.data(), n);
        buf[n] = '\0';
    }
    return g_last_error.size();
}

igsim_status igsim_device_create(const igsim_device_params* params, igsim_device** out) {
    if (!params || !out) return bad_argument("igsim_device_create: null argument");
    *out = nullptr;
    return guarded([&] {
        DeviceParams d{params->c_ies,    params->c_gc,         params->g_m,      params->v_geth,
                       params->v_ge_max, params->c_gate_total, params->c_gc_lowv};
        d.validate();
        *out = new igsim_device{d};
    });
}

void igsim_device_destroy(igsim_device* dev) { delete dev; }

igsim_status igsim_csp_design(const igsim_device* dev, const igsim_circuit_params* circuit,
                              const igsim_csp_inputs* inputs, igsim_profile** out) {
    if (!dev || !circuit || !inputs || !out)
        return bad_argument("igsim_csp_design: null argument");
    *out = nullptr;
    return guarded([&] {
        CspDesignInputs in;
        in.dt_s1 = inputs->dt_s1;
        in.alpha = inputs->alpha;
        in.i2_ratio = inputs->i2_ratio;
        in.dt_3 = inputs->dt_3;
        in.i_3 = inputs->i_3;
        in.dt_4 = inputs->dt_4;
        in.dv_4 = inputs->dv_4;
        in.c_eff2 = inputs->c_eff2;
        if (inputs->hold != IGSIM_HOLD_STEP4) in.hold_current = inputs->hold;
        *out = new igsim_profile{design_csp(dev->params, to_circuit(*circuit), in)};
    });
}

igsim_status igsim_cats_create(const igsim_cats_params* params, igsim_profile** out) {
    if (!params || !out) return bad_argument("igsim_cats_create: null argument");
    *out = nullptr;
    return guarded([&] {
        CatsProfile c;
        c.v_int = params->v_int;
        c.t_int = params->t_int;
        c.v_final = params->v_final;
        c.v_off = params->v_off;
        c.t_0 = params->t_0;
        c.v_int0 = params->v_int0;
        c.t_int0 = params->t_int0;
        c.v_end = params->v_end;
        c.r_g = params->r_g;
        c.validate();
        *out = new igsim_profile{c};
    });
}

igsim_status igsim_profile_mirror(const igsim_profile* profile, igsim_profile** out) {
    if (!profile || !out) return bad_argument("igsim_profile_mirror: null argument");
    *out = nullptr;
    return guarded([&] {
        const auto* csp = std::get_if<CspProfile>(&profile->drive);
        if (!csp) throw domain_error("igsim_profile_mirror: not a current-step profile");
        *out = new igsim_profile{mirror_for_turn_off(*csp)};
    });
}

igsim_status igsim_profile_step_count(const igsim_profile* profile, size_t* out) {
    if (!profile || !out) return bad_argument("igsim_profile_step_count: null argument");
    return guarded([&] {
        const auto* csp = std::get_if<CspProfile>(&profile->drive);
        *out = csp ? csp->steps.size() : 0;
    });
}

igsim_status igsim_profile_step(const igsim_profile* profile, size_t index, double* amplitude_a,
                                double* duration_s) {
    if (!profile || !amplitude_a || !duration_s)
        return bad_argument("igsim_profile_step: null argument");
    return guarded([&] {
        const auto* csp = std::get_if<CspProfile>(&profile->drive);
        if (!csp) throw domain_error("igsim_profile_step: not a current-step profile");
        if (index >= csp->steps.size()) throw domain_error("igsim_profile_step: index out of range");
        *amplitude_a = csp->steps[index].amplitude;
        *duration_s = csp->steps[index].duration;
    });
}

igsim_status igsim_profile_drive_current(const igsim_profile* profile, double t, double* out) {
    if (!profile || !out) return bad_argument("igsim_profile_drive_current: null argument");
    return guarded([&] {
        const auto* csp = std::get_if<CspProfile>(&profile->drive);
        if (!csp) throw domain_error("igsim_profile_drive_current: not a current-step profile");
        *out = drive_current(*csp, t);
    });
}

void igsim_profile_destroy(igsim_profile* profile) { delete profile; }

igsim_status igsim_simulate_edge(const igsim_device* dev, const igsim_circuit_params* circuit,
                                 const igsim_sim_params* sim, const igsim_profile* profile,
                                 igsim_edge edge, igsim_waveforms** out) {
    if (!dev || !circuit || !sim || !profile || !out)
        return bad_argument("igsim_simulate_edge: null argument");
    *out = nullptr;
    return guarded([&] {
        const SimConfig cfg{sim->dt, sim->t_max};
        const EdgeKind kind = edge == IGSIM_TURN_ON ? EdgeKind::turn_on : EdgeKind::turn_off;
        *out = new igsim_waveforms{
            simulate_edge(profile->drive, dev->params, to_circuit(*circuit), cfg, kind)};
    });
}

igsim_status igsim_waveforms_size(const igsim_waveforms* w, size_t* out) {
    if (!w || !out) return bad_argument("igsim_waveforms_size: null argument");
    *out = w->data.size();
    return IGSIM_OK;
}

igsim_status igsim_waveforms_dt(const igsim_waveforms* w, double* out) {
    if (!w || !out) return bad_argument("igsim_waveforms_dt: null argument");
    *out = w->data.dt;
    return IGSIM_OK;
}

igsim_status igsim_waveforms_channel(const igsim_waveforms* w, igsim_channel ch,
                                     const double** data, size_t* len) {
    if (!w || !data || !len) return bad_argument("igsim_waveforms_channel: null argument");
    const std::vector<double>* v = nullptr;
    switch (ch) {
        case IGSIM_CH_V_GE: v = &w->data.v_ge; break;
        case IGSIM_CH_V_CE: v = &w->data.v_ce; break;
        case IGSIM_CH_I_C: v = &w->data.i_c; break;
        case IGSIM_CH_I_G: v = &w->data.i_g; break;
    }
    if (!v) return bad_argument("igsim_waveforms_channel: unknown channel");
    *data = v->data();
    *len = v->size();
    return IGSIM_OK;
}

igsim_status igsim_waveforms_write_csv(const igsim_waveforms* w, const char* path) {
    if (!w || !path) return bad_argument("igsim_waveforms_write_csv: null argument");
    return guarded([&] { write_waveforms_csv(w->data, path); });
}

void igsim_waveforms_destroy(igsim_waveforms* w) { delete w; }

igsim_status igsim_switching_energy(const igsim_waveforms* on, const igsim_waveforms* off,
                                    const igsim_device* dev, const igsim_circuit_params* circuit,
                                    igsim_loss_report* out) {
    if (!on || !off || !dev || !circuit || !out)
        return bad_argument("igsim_switching_energy: null argument");
    return guarded([&] {
        const LossReport r = switching_energy(on->data, off->data, dev->params, to_circuit(*circuit));
        out->e_on = r.e_on;
        out->e_off = r.e_off;
        out->p_sw = r.p_sw;
    });
}

igsim_status igsim_edge_signature(const igsim_waveforms* w, double expected_span_v,
                                  igsim_signature** out) {
    if (!w || !out) return bad_argument("igsim_edge_signature: null argument");
    *out = nullptr;
    return guarded([&] {
        std::optional<double> span;
        if (expected_span_v > 0.0) span = expected_span_v;
        *out = new igsim_signature{edge_signature(w->data, span)};
    });
}

igsim_status igsim_signature_spreads(const igsim_signature* sig, double* sigma_t,
                                     double* sigma_w) {
    if (!sig || !sigma_t || !sigma_w) return bad_argument("igsim_signature_spreads: null argument");
    *sigma_t = sig->data.sigma_t;
    *sigma_w = sig->data.sigma_w;
    return IGSIM_OK;
}

igsim_status igsim_fom(const igsim_signature* on, const igsim_signature* off, double* out) {
    if (!on || !off || !out) return bad_argument("igsim_fom: null argument");
    *out = fom(on->data, off->data);
    return IGSIM_OK;
}

void igsim_signature_destroy(igsim_signature* sig) { delete sig; }

igsim_status igsim_run_config(const char* config_path, const char* experiment,
                              const char* out_dir, double dt_override, char* summary,
                              size_t summary_len) {
    if (!config_path) return bad_argument("igsim_run_config: null config path");
    return guarded([&] {
        RunOverrides ov;
        if (experiment) {
            const std::string kind = experiment;
            if (kind == "edge")
                ov.experiment = ExperimentKind::edge;
            else if (kind == "sweep")
                ov.experiment = ExperimentKind::sweep;
            else if (kind == "compare")
                ov.experiment = ExperimentKind::compare;
            else if (kind == "fom-on-file")
                ov.experiment = ExperimentKind::fom_on_file;
            else
                throw config_error("unknown experiment '" + kind + "'");
        }
        if (out_dir) ov.out_dir = std::string(out_dir);
        if (dt_override != 0.0) ov.dt = dt_override;
        const RunResult result = run_config_file(config_path, ov);
        if (summary && summary_len > 0) {
            const size_t n =
                result.summary.size() < summary_len - 1 ? result.summary.size() : summary_len - 1;
            std::memcpy(summary, result.summary.data(), n);
            summary[n] = '\0';
        }
    });
}

igsim_status igsim_fom_of_file(const char* csv_path, double* out) {
    if (!csv_path || !out) return bad_argument("igsim_fom_of_file: null argument");
    return guarded([&] { *out = fom_contribution_of_file(csv_path); });
}

}  // extern "C"
