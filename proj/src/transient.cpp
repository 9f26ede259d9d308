#include "igsim/transient.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace igsim {

namespace {

enum class VceStage { held_start, transitioning, held_end };

struct DriveEval {
    const CspProfile* csp = nullptr;
    const CatsProfile* cats = nullptr;
    const PlainDrive* plain = nullptr;
    EdgeKind edge = EdgeKind::turn_on;

    double gate_current(double t, double v_ge) const {
        if (csp) return drive_current(*csp, t);
        if (cats) return (cats_drive_voltage(*cats, t, edge) - v_ge) / cats->r_g;
        const double v = edge == EdgeKind::turn_on ? plain->v_on : plain->v_off;
        return (v - v_ge) / plain->r_g;
    }
};

DriveEval make_eval(const GateDriveProfile& drive, EdgeKind edge) {
    DriveEval ev;
    ev.edge = edge;
    if (const auto* p = std::get_if<CspProfile>(&drive)) {
        p->validate();
        ev.csp = p;
    } else if (const auto* c = std::get_if<CatsProfile>(&drive)) {
        c->validate();
        ev.cats = c;
    } else {
        const auto* pl = std::get_if<PlainDrive>(&drive);
        pl->validate();
        ev.plain = pl;
    }
    return ev;
}

}  // namespace

void SimConfig::validate() const {
    if (!(dt > 0.0)) throw config_error("sim: dt must be positive");
    if (dt > 1e-9) throw config_error("sim: dt must not exceed 1 ns");
    if (!(t_max >= dt)) throw config_error("sim: t_max must cover at least one step");
}

void Waveforms::validate(const CircuitParams& circ) const {
    const std::size_t n = v_ce.size();
    if (n < 2 || v_ge.size() != n || i_c.size() != n || i_g.size() != n)
        throw domain_error("waveforms: channels must share a length of at least 2");
    for (std::size_t i = 0; i < n; ++i) {
        if (v_ce[i] < -1.0 || v_ce[i] > 1.2 * circ.v_bus)
            throw domain_error("waveforms: v_ce excursion out of bounds");
        if (i_c[i] < -0.2 * circ.i_load || i_c[i] > 1.2 * circ.i_load)
            throw domain_error("waveforms: i_c excursion out of bounds");
    }
}

Waveforms simulate_edge(const GateDriveProfile& drive, const DeviceParams& dev,
                        const CircuitParams& circ, const SimConfig& cfg, EdgeKind edge) {
    dev.validate();
    circ.validate();
    cfg.validate();
    const DriveEval ev = make_eval(drive, edge);

    const GateChargeCurve curve = synthesize_gate_charge_curve(dev, circ);
    const double v_gem = miller_plateau_voltage(dev, circ.i_load);
    const double q_total = curve.points.back().first;
    const bool turning_on = edge == EdgeKind::turn_on;

    // Completion thresholds; the turn-off condition mirrors the turn-on one.
    const double vce_done_on = circ.v_ce_sat + 1e-3;
    const double vce_done_off = circ.v_bus - 1e-3;
    const double vge_done_on = 0.99 * dev.v_ge_max;
    const double vge_done_off = 0.01 * dev.v_ge_max;

    const double dt = cfg.dt;
    const std::size_t max_steps = static_cast<std::size_t>(std::floor(cfg.t_max / dt)) + 1;

    Waveforms w;
    w.dt = dt;
    w.edge = edge;
    w.v_ge.reserve(4096);
    w.v_ce.reserve(4096);
    w.i_c.reserve(4096);
    w.i_g.reserve(4096);

    double q = turning_on ? 0.0 : q_total;
    double v_ce = turning_on ? circ.v_bus : circ.v_ce_sat;
    VceStage stage = VceStage::held_start;
    std::size_t stop_index = max_steps;
    bool completed = false;
    w.q_g_initial = q;

    for (std::size_t n = 0; n < max_steps; ++n) {
        const double t = static_cast<double>(n) * dt;
        const double v_ge = vge_from_charge(q, curve);
        const double i_c = stage == VceStage::transitioning ? circ.i_load
                                                            : collector_current(v_ge, dev, circ.i_load);
        const double i_g = ev.gate_current(t, v_ge);

        w.v_ge.push_back(v_ge);
        w.v_ce.push_back(v_ce);
        w.i_c.push_back(i_c);
        w.i_g.push_back(i_g);

        if (!completed) {
            const bool done = turning_on ? (v_ce <= vce_done_on && v_ge >= vge_done_on)
                                         : (v_ce >= vce_done_off && v_ge <= vge_done_off);
            if (done) {
                completed = true;
                w.completion_time = t;
                const auto settle = static_cast<std::size_t>(std::ceil(1.1 * static_cast<double>(n)));
                stop_index = std::min(max_steps, std::max(settle, n + 1));
            }
        }
        if (completed && n + 1 >= stop_index) break;

        // Advance state.
        q = std::max(0.0, q + i_g * dt);
        switch (stage) {
            case VceStage::held_start: {
                const double v_next = vge_from_charge(q, curve);
                const bool enter = turning_on ? v_next >= v_gem : v_next <= v_gem;
                if (enter) stage = VceStage::transitioning;
                break;
            }
            case VceStage::transitioning: {
                // split the step at the capacitance boundary so segment
                // timings stay exact for piecewise-constant c_gc
                const double boundary = 0.5 * circ.v_bus;
                double remaining = dt;
                for (int split = 0; split < 2 && remaining > 0.0; ++split) {
                    const double slope =
                        -i_g / gate_collector_capacitance(v_ce, dev, circ.v_bus);
                    const double v_next = v_ce + slope * remaining;
                    const bool crosses = (v_ce > boundary && v_next < boundary) ||
                                         (v_ce < boundary && v_next > boundary);
                    if (crosses) {
                        remaining -= (boundary - v_ce) / slope;
                        v_ce = boundary;
                    } else {
                        v_ce = v_next;
                        remaining = 0.0;
                    }
                }
                v_ce = std::clamp(v_ce, circ.v_ce_sat, circ.v_bus);
                const bool exit = turning_on ? v_ce <= circ.v_ce_sat : v_ce >= circ.v_bus;
                if (exit) {
                    v_ce = turning_on ? circ.v_ce_sat : circ.v_bus;
                    stage = VceStage::held_end;
                }
                break;
            }
            case VceStage::held_end:
                break;
        }
    }

    w.q_g_final = q;
    w.completed = completed;
    if (!completed) {
        throw IncompleteEdgeError(
            std::string("simulate_edge: ") + (turning_on ? "turn-on" : "turn-off") +
                " edge did not complete within t_max",
            std::move(w));
    }
    return w;
}

Waveforms build_pwm_cycle(const Waveforms& on_edge, const Waveforms& off_edge, double t_s,
                          double duty) {
    if (!on_edge.completed || !off_edge.completed)
        throw assembly_error("pwm: both edges must be complete");
    if (on_edge.dt != off_edge.dt) throw assembly_error("pwm: edge sample intervals differ");
    if (!(duty > 0.0 && duty < 1.0)) throw assembly_error("pwm: duty must lie in (0, 1)");
    const double dt = on_edge.dt;
    const auto n_total = static_cast<std::size_t>(std::llround(t_s / dt));
    const auto off_start = static_cast<std::size_t>(std::llround(duty * t_s / dt));
    if (on_edge.size() > off_start || off_start + off_edge.size() > n_total)
        throw assembly_error("pwm: edges too long for the requested period");

    Waveforms w;
    w.dt = dt;
    w.edge = EdgeKind::turn_on;
    w.completed = true;
    auto fill = [&](std::vector<double> Waveforms::*ch) {
        auto& out = w.*ch;
        out.resize(n_total);
        const auto& on = on_edge.*ch;
        const auto& off = off_edge.*ch;
        std::size_t i = 0;
        for (; i < on.size(); ++i) out[i] = on[i];
        for (; i < off_start; ++i) out[i] = on.back();
        for (; i < off_start + off.size(); ++i) out[i] = off[i - off_start];
        for (; i < n_total; ++i) out[i] = off.back();
    };
    fill(&Waveforms::v_ge);
    fill(&Waveforms::v_ce);
    fill(&Waveforms::i_c);
    fill(&Waveforms::i_g);
    return w;
}

}  // namespace igsim
