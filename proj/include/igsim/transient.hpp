#pragma once

#include "igsim/device.hpp"
#include "igsim/gate_drive.hpp"

#include <cstddef>
#include <vector>

namespace igsim {

struct SimConfig {
    double dt = 100e-12;   // integration/sample step (s), at most 1 ns
    double t_max = 20e-6;  // simulation horizon (s)

    void validate() const;
};

/// Uniformly sampled switching-edge record.
struct Waveforms {
    double dt = 0.0;
    double t0 = 0.0;
    EdgeKind edge = EdgeKind::turn_on;
    std::vector<double> v_ge;  // gate-emitter voltage (V)
    std::vector<double> v_ce;  // collector-emitter voltage (V)
    std::vector<double> i_c;   // collector current (A)
    std::vector<double> i_g;   // gate current (A)

    bool completed = false;
    double completion_time = 0.0;  // valid when completed
    double q_g_initial = 0.0;      // gate charge at the first sample (C)
    double q_g_final = 0.0;        // gate charge at the last sample (C)

    std::size_t size() const { return v_ce.size(); }
    double time_at(std::size_t i) const { return t0 + static_cast<double>(i) * dt; }

    /// Channel-length and bounded-excursion checks against an operating point.
    void validate(const CircuitParams& circ) const;
};

/// Raised when the stage machine does not finish within t_max; the partial
/// record is attached for inspection.
class IncompleteEdgeError : public Error {
public:
    IncompleteEdgeError(const std::string& what, Waveforms partial)
        : Error(ErrorKind::incomplete_edge, what), partial_(std::move(partial)) {}
    const Waveforms& partial() const { return partial_; }

private:
    Waveforms partial_;
};

/// Fixed-step (explicit Euler) simulation of one switching edge of the
/// clamped-inductive test circuit under the given gate drive.
///
/// The gate charge is the single integrated state; v_ge follows the gate
/// charge curve (which carries the Miller plateau), and v_ce is held at its
/// boundary value outside the plateau while dv_ce/dt = -i_g / c_gc(v_ce)
/// during it. A CSP profile is evaluated as given: pass the mirrored
/// profile for a turn-off edge. CATS and plain voltage drives select their
/// edge-specific level sequence internally.
Waveforms simulate_edge(const GateDriveProfile& drive, const DeviceParams& dev,
                        const CircuitParams& circ, const SimConfig& cfg, EdgeKind edge);

/// Assemble one full PWM period of the collector voltage: on-edge at t = 0,
/// off-edge at duty * t_s, flat segments elsewhere. Sample count is
/// round(t_s / dt).
Waveforms build_pwm_cycle(const Waveforms& on_edge, const Waveforms& off_edge, double t_s,
                          double duty);

}  // namespace igsim
