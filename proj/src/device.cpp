#include "igsim/device.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace igsim {

void DeviceParams::validate() const {
    auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
    if (!positive(c_ies) || !positive(c_gc) || !positive(c_gate_total) || !positive(c_gc_lowv))
        throw domain_error("device: all capacitances must be positive");
    if (!positive(g_m)) throw domain_error("device: g_m must be positive");
    if (!(v_geth > 0.0 && v_geth < v_ge_max))
        throw domain_error("device: requires 0 < v_geth < v_ge_max");
    if (!(c_gc < c_ies)) throw domain_error("device: c_gc must be smaller than c_ies");
}

void CircuitParams::validate() const {
    if (!(v_bus > 0.0)) throw domain_error("circuit: v_bus must be positive");
    if (!(i_load > 0.0)) throw domain_error("circuit: i_load must be positive");
    if (!(t_s > 0.0)) throw domain_error("circuit: t_s must be positive");
    if (!(v_ce_sat >= 0.0 && v_ce_sat < v_bus))
        throw domain_error("circuit: requires 0 <= v_ce_sat < v_bus");
}

void GateChargeCurve::validate() const {
    if (points.size() < 2) throw domain_error("gate charge curve: needs at least two points");
    if (points.front().first != 0.0 || points.front().second != 0.0)
        throw domain_error("gate charge curve: first point must be (0, 0)");
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (!(points[i].first > points[i - 1].first))
            throw domain_error("gate charge curve: charge must be strictly increasing");
        if (points[i].second < points[i - 1].second)
            throw domain_error("gate charge curve: voltage must be non-decreasing");
    }
}

GateChargeCurve synthesize_gate_charge_curve(const DeviceParams& dev, const CircuitParams& circ) {
    dev.validate();
    circ.validate();
    const double v_gem = miller_plateau_voltage(dev, circ.i_load);
    const double q_thresh = dev.c_ies * dev.v_geth;
    const double q_plateau_start = dev.c_ies * v_gem;
    const double q_miller = 0.5 * (dev.c_gc + dev.c_gc_lowv) * circ.v_bus;
    const double q_plateau_end = q_plateau_start + q_miller;
    const double q_total = q_plateau_end + dev.c_gate_total * (dev.v_ge_max - v_gem);

    GateChargeCurve curve;
    curve.points = {
        {0.0, 0.0},
        {q_thresh, dev.v_geth},
        {q_plateau_start, v_gem},
        {q_plateau_end, v_gem},
        {q_total, dev.v_ge_max},
    };
    curve.validate();
    return curve;
}

double vge_from_charge(double q_g, const GateChargeCurve& curve) {
    if (!(q_g >= 0.0)) throw domain_error("vge_from_charge: negative gate charge");
    const auto& pts = curve.points;
    if (q_g >= pts.back().first) return pts.back().second;
    auto hi = std::upper_bound(pts.begin(), pts.end(), q_g,
                               [](double q, const auto& p) { return q < p.first; });
    auto lo = hi - 1;
    const double span = hi->first - lo->first;
    const double frac = (q_g - lo->first) / span;
    return lo->second + frac * (hi->second - lo->second);
}

double collector_current(double v_ge, const DeviceParams& dev, double i_load) {
    return std::clamp(dev.g_m * (v_ge - dev.v_geth), 0.0, i_load);
}

double miller_plateau_voltage(const DeviceParams& dev, double i_load) {
    return dev.v_geth + i_load / dev.g_m;
}

double gate_collector_capacitance(double v_ce, const DeviceParams& dev, double v_bus) {
    return v_ce > 0.5 * v_bus ? dev.c_gc : dev.c_gc_lowv;
}

}  // namespace igsim
