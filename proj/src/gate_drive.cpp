#include "igsim/gate_drive.hpp"

#include <cmath>
#include <string>

namespace igsim {

void CspProfile::validate() const {
    if (steps.empty()) throw domain_error("csp: profile needs at least one step");
    for (const auto& s : steps) {
        if (!(s.duration > 0.0) || !std::isfinite(s.duration))
            throw domain_error("csp: step durations must be positive");
        if (!std::isfinite(s.amplitude)) throw domain_error("csp: step amplitudes must be finite");
    }
    if (!std::isfinite(hold_current)) throw domain_error("csp: hold current must be finite");
}

double CspProfile::total_duration() const {
    double t = 0.0;
    for (const auto& s : steps) t += s.duration;
    return t;
}

double CspProfile::injected_charge() const {
    double q = 0.0;
    for (const auto& s : steps) q += s.amplitude * s.duration;
    return q;
}

void CspDesignInputs::validate() const {
    if (!(alpha > 0.0 && alpha <= 1.0)) throw domain_error("csp design: requires 0 < alpha <= 1");
    if (!(i2_ratio > 0.0 && i2_ratio < 1.0)) throw domain_error("csp design: requires 0 < i2_ratio < 1");
    if (!(dt_s1 > 0.0 && dt_3 > 0.0 && dt_4 > 0.0))
        throw domain_error("csp design: durations must be positive");
    if (!(i_3 > 0.0)) throw domain_error("csp design: i_3 must be positive");
    if (!(dv_4 > 0.0)) throw domain_error("csp design: dv_4 must be positive");
    if (!(c_eff2 > 0.0)) throw domain_error("csp design: c_eff2 must be positive");
}

void CatsProfile::validate() const {
    if (!(t_int > 0.0 && t_0 > 0.0 && t_int0 > 0.0))
        throw domain_error("cats: durations must be positive");
    if (!(v_int < v_final)) throw domain_error("cats: requires v_int < v_final");
    if (!(v_int0 < v_int)) throw domain_error("cats: requires v_int0 < v_int");
    if (!(r_g > 0.0)) throw domain_error("cats: r_g must be positive");
}

void PlainDrive::validate() const {
    if (!(r_g > 0.0)) throw domain_error("plain drive: r_g must be positive");
    if (!(v_on > v_off)) throw domain_error("plain drive: requires v_on > v_off");
}

CspProfile design_csp(const DeviceParams& dev, const CircuitParams& circ, const CspDesignInputs& in) {
    dev.validate();
    circ.validate();
    in.validate();

    const double i1 = dev.c_ies * dev.v_geth / in.dt_s1;
    const double dt_s2 = (dev.c_ies / dev.g_m) * (in.alpha * circ.i_load) / i1;
    const double dt1 = in.dt_s1 + dt_s2;
    const double i2 = in.i2_ratio * i1;
    const double dt2 = (in.c_eff2 / dev.g_m) * ((1.0 - in.alpha) * circ.i_load) / i2;
    const double i4 = dev.c_gate_total * in.dv_4 / in.dt_4;

    CspProfile p;
    p.steps = {{i1, dt1}, {i2, dt2}, {in.i_3, in.dt_3}, {i4, in.dt_4}};
    p.hold_current = in.hold_current.value_or(i4);

    for (const auto& s : p.steps) {
        if (!std::isfinite(s.duration) || !(s.duration > 0.0))
            throw design_error("csp design: computed a non-positive or non-finite duration");
        if (!std::isfinite(s.amplitude))
            throw design_error("csp design: computed a non-finite amplitude");
    }
    return p;
}

double drive_current(const CspProfile& profile, double t) {
    double t_end = 0.0;
    for (const auto& s : profile.steps) {
        t_end += s.duration;
        if (t < t_end) return s.amplitude;
    }
    return profile.hold_current;
}

CspProfile mirror_for_turn_off(const CspProfile& profile) {
    CspProfile out;
    out.steps.reserve(profile.steps.size());
    for (auto it = profile.steps.rbegin(); it != profile.steps.rend(); ++it)
        out.steps.push_back({-it->amplitude, it->duration});
    out.hold_current = -profile.hold_current;
    return out;
}

double cats_drive_voltage(const CatsProfile& profile, double t, EdgeKind edge) {
    if (edge == EdgeKind::turn_on) {
        return t < profile.t_int ? profile.v_int : profile.v_final;
    }
    if (t < profile.t_0) return profile.v_off;
    if (t < profile.t_0 + profile.t_int0) return profile.v_int0;
    return profile.v_end;
}

}  // namespace igsim
