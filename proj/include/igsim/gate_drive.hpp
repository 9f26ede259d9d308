#pragma once

#include "igsim/device.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace igsim {

enum class EdgeKind { turn_on, turn_off };

/// One constant-current interval of a CSP.
struct CspStep {
    double amplitude = 0.0;  // gate current (A), sign gives charge/discharge direction
    double duration = 0.0;   // interval length (s)
};

/// Current Step Profile: consecutive constant-current steps, then
/// hold_current for the rest of time.
struct CspProfile {
    std::vector<CspStep> steps;
    double hold_current = 0.0;  // applied after the last step (A)

    void validate() const;
    double total_duration() const;
    /// Sum of amplitude * duration over the steps.
    double injected_charge() const;
};

/// Inputs of the four-step CSP design procedure.
struct CspDesignInputs {
    double dt_s1 = 100e-9;     // stage-1 target duration (s)
    double alpha = 0.8;        // fraction of i_load reached in step 1
    double i2_ratio = 0.1;     // I2 / I1
    double dt_3 = 400e-9;      // step-3 duration (s)
    double i_3 = 20e-3;        // step-3 amplitude (A), the dv/dt control
    double dt_4 = 500e-9;      // step-4 duration (s)
    double dv_4 = 7.4;         // residual gate-voltage rise covered by step 4 (V)
    double c_eff2 = 250e-12;   // effective input capacitance for the step-2 duration (F)
    std::optional<double> hold_current;  // overrides the default step-4 hold when set (A)

    void validate() const;
};

/// Multi-level gate-voltage drive holding an intermediate level near the
/// threshold (turn-on) and a two-level discharge sequence (turn-off).
struct CatsProfile {
    // turn-on
    double v_int = 7.5;      // intermediate level (V)
    double t_int = 400e-9;   // intermediate-level duration (s)
    double v_final = 15.0;   // final level (V)
    // turn-off
    double v_off = 0.0;      // first forced level (V)
    double t_0 = 200e-9;     // first-level duration (s)
    double v_int0 = 3.75;    // second level (V)
    double t_int0 = 400e-9;  // second-level duration (s)
    double v_end = 0.0;      // final level (V)

    double r_g = 10.0;       // series gate resistance (Ohm)

    void validate() const;
};

/// Constant-voltage-plus-resistor baseline drive.
struct PlainDrive {
    double v_on = 15.0;   // level applied for turn-on (V)
    double v_off = 0.0;   // level applied for turn-off (V)
    double r_g = 10.0;    // series gate resistance (Ohm)

    void validate() const;
};

using GateDriveProfile = std::variant<CspProfile, CatsProfile, PlainDrive>;

/// Size the four CSP steps from the device, the operating point and the
/// design inputs:
///   I1 = c_ies * v_geth / dt_s1
///   dt1 = dt_s1 + (c_ies / g_m) * (alpha * i_load) / I1
///   I2 = i2_ratio * I1,  dt2 = (c_eff2 / g_m) * ((1 - alpha) * i_load) / I2
///   I3 = i_3, dt3 = dt_3 (free parameters)
///   I4 = c_gate_total * dv_4 / dt_4, dt4 = dt_4
/// hold_current is set to I4 so the driver finishes the residual gate
/// charge; see design notes in the README.
CspProfile design_csp(const DeviceParams& dev, const CircuitParams& circ, const CspDesignInputs& in);

/// Piecewise-constant lookup. Exact step boundaries belong to the later
/// step; past the last step returns hold_current.
double drive_current(const CspProfile& profile, double t);

/// Step order reversed, amplitudes (and hold) negated: discharges the
/// gate through the same stages in reverse.
CspProfile mirror_for_turn_off(const CspProfile& profile);

/// Driver output voltage of a CATS profile at time t for the given edge.
double cats_drive_voltage(const CatsProfile& profile, double t, EdgeKind edge);

}  // namespace igsim
