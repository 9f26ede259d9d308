#pragma once

#include "igsim/errors.hpp"

#include <utility>
#include <vector>

namespace igsim {

/// Behavioral IGBT description. All quantities SI.
struct DeviceParams {
    double c_ies = 2.475e-9;       // input capacitance (F)
    double c_gc = 25e-12;          // reverse-transfer (Miller) capacitance at high v_ce (F)
    double g_m = 21.0;             // transconductance (S)
    double v_geth = 5.8;           // gate threshold voltage (V)
    double v_ge_max = 15.0;        // final gate drive voltage (V)
    double c_gate_total = 20e-9;   // effective total gate capacitance past the plateau (F)
    double c_gc_lowv = 250e-12;    // enlarged gate-collector capacitance at low v_ce (F)

    void validate() const;
};

/// Clamped-inductive test circuit operating point.
struct CircuitParams {
    double v_bus = 130.0;     // DC bus voltage (V)
    double i_load = 10.0;     // clamped load current (A)
    double t_s = 50e-6;       // switching period (s)
    double v_ce_sat = 2.0;    // on-state collector voltage (V)

    void validate() const;
};

/// v_ge as a function of injected gate charge, piecewise linear.
/// Charge strictly increasing, voltage non-decreasing (flat across the
/// Miller plateau), first point (0, 0).
struct GateChargeCurve {
    std::vector<std::pair<double, double>> points;  // (q_g in C, v_ge in V)

    void validate() const;
};

/// Build the default charge curve for a device at a given operating point:
/// a c_ies segment up to the plateau voltage, a flat plateau spanning the
/// Miller charge (c_gc + c_gc_lowv)/2 * v_bus, then a c_gate_total segment
/// up to v_ge_max.
GateChargeCurve synthesize_gate_charge_curve(const DeviceParams& dev, const CircuitParams& circ);

/// Piecewise-linear interpolation on the curve; clamps to the final
/// voltage beyond the last breakpoint. Negative charge is a domain error.
double vge_from_charge(double q_g, const GateChargeCurve& curve);

/// clamp(g_m * (v_ge - v_geth), 0, i_load)
double collector_current(double v_ge, const DeviceParams& dev, double i_load);

/// Gate voltage during the Miller plateau: v_geth + i_load / g_m.
double miller_plateau_voltage(const DeviceParams& dev, double i_load);

/// Two-segment Miller capacitance: c_gc above v_bus/2, c_gc_lowv at or
/// below it.
double gate_collector_capacitance(double v_ce, const DeviceParams& dev, double v_bus);

}  // namespace igsim
