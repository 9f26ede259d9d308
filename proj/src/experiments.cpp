#include "igsim/experiments.hpp"

#include <cmath>
#include <sstream>

namespace igsim {

namespace {

std::string format_amps(double i) {
    std::ostringstream os;
    os << i * 1e3 << " mA";
    return os.str();
}

TradeoffRecord analyze_pair(const EdgePair& edges, const DeviceParams& dev,
                            const CircuitParams& circ, const std::string& drive_id,
                            std::optional<double> i3) {
    const LossReport loss = switching_energy(edges.on, edges.off, dev, circ);
    const double span = circ.v_bus - circ.v_ce_sat;
    const EdgeSignature sig_on = edge_signature(edges.on, span);
    const EdgeSignature sig_off = edge_signature(edges.off, span);

    TradeoffRecord rec;
    rec.drive_id = drive_id;
    rec.i_3 = i3;
    rec.p_sw = loss.p_sw;
    rec.fom = fom(sig_on, sig_off);
    rec.e_on = loss.e_on;
    rec.e_off = loss.e_off;
    return rec;
}

}  // namespace

TradeoffRecord evaluate_csp_point(const CspDesignInputs& inputs, const DeviceParams& dev,
                                  const CircuitParams& circ, const SimConfig& cfg,
                                  const std::string& drive_id, EdgePair* edges_out) {
    const CspProfile on_profile = design_csp(dev, circ, inputs);
    const CspProfile off_profile = mirror_for_turn_off(on_profile);

    EdgePair edges;
    edges.on = simulate_edge(on_profile, dev, circ, cfg, EdgeKind::turn_on);
    edges.off = simulate_edge(off_profile, dev, circ, cfg, EdgeKind::turn_off);
    TradeoffRecord rec = analyze_pair(edges, dev, circ, drive_id, inputs.i_3);
    if (edges_out) *edges_out = std::move(edges);
    return rec;
}

TradeoffRecord evaluate_cats(const CatsProfile& cats, const DeviceParams& dev,
                             const CircuitParams& circ, const SimConfig& cfg,
                             const std::string& drive_id, EdgePair* edges_out) {
    EdgePair edges;
    edges.on = simulate_edge(cats, dev, circ, cfg, EdgeKind::turn_on);
    edges.off = simulate_edge(cats, dev, circ, cfg, EdgeKind::turn_off);
    TradeoffRecord rec = analyze_pair(edges, dev, circ, drive_id, std::nullopt);
    if (edges_out) *edges_out = std::move(edges);
    return rec;
}

std::vector<TradeoffRecord> sweep_i3(const CspDesignInputs& base, const std::vector<double>& values,
                                     const DeviceParams& dev, const CircuitParams& circ,
                                     const SimConfig& cfg, std::vector<EdgePair>* edges_out) {
    if (values.empty()) throw domain_error("sweep_i3: no i_3 values given");
    for (double v : values)
        if (!(v > 0.0)) throw domain_error("sweep_i3: i_3 values must be positive");

    std::vector<TradeoffRecord> records;
    records.reserve(values.size());
    if (edges_out) edges_out->clear();
    for (double i3 : values) {
        CspDesignInputs in = base;
        in.i_3 = i3;
        try {
            EdgePair edges;
            records.push_back(
                evaluate_csp_point(in, dev, circ, cfg, "csp", edges_out ? &edges : nullptr));
            if (edges_out) edges_out->push_back(std::move(edges));
        } catch (const Error& e) {
            throw Error(e.kind(), "sweep at i_3 = " + format_amps(i3) + ": " + e.what());
        }
    }
    return records;
}

double bisect_decreasing(const std::function<double(double)>& f, double target, double lo,
                         double hi, double rel_tol, int max_iter) {
    if (!(target > 0.0)) throw calibration_error("bisection: target must be positive");
    if (!(lo < hi)) throw calibration_error("bisection: empty interval");
    const double f_lo = f(lo);
    const double f_hi = f(hi);
    auto close = [&](double v) { return std::abs(v - target) <= rel_tol * target; };
    if (close(f_lo)) return lo;
    if (close(f_hi)) return hi;
    if (!(f_lo >= target && target >= f_hi)) {
        std::ostringstream os;
        os << "bisection: target " << target << " not bracketed; achievable range [" << f_hi
           << ", " << f_lo << "]";
        throw calibration_error(os.str());
    }
    double x = 0.5 * (lo + hi);
    for (int it = 0; it < max_iter; ++it) {
        x = 0.5 * (lo + hi);
        const double v = f(x);
        if (close(v)) return x;
        // decreasing map: overshooting the target means x is left of the root
        if (v > target)
            lo = x;
        else
            hi = x;
    }
    return x;
}

CspDesignInputs calibrate_to_loss(double target_p, const I3Bounds& bounds,
                                  const CspDesignInputs& base, const DeviceParams& dev,
                                  const CircuitParams& circ, const SimConfig& cfg) {
    auto loss_at = [&](double i3) {
        CspDesignInputs in = base;
        in.i_3 = i3;
        return evaluate_csp_point(in, dev, circ, cfg, "csp").p_sw;
    };
    const double i3 = bisect_decreasing(loss_at, target_p, bounds.lo, bounds.hi);
    CspDesignInputs tuned = base;
    tuned.i_3 = i3;
    return tuned;
}

ComparisonReport compare_at_equal_loss(const CspDesignInputs& csp_base, const CatsProfile& cats,
                                       std::optional<double> target_p, const I3Bounds& bounds,
                                       const DeviceParams& dev, const CircuitParams& circ,
                                       const SimConfig& cfg, double duty) {
    ComparisonReport report;
    report.duty = duty;

    EdgePair cats_edges;
    report.cats_record = evaluate_cats(cats, dev, circ, cfg, "cats", &cats_edges);
    report.target_loss = target_p.value_or(report.cats_record.p_sw);

    report.tuned_inputs = calibrate_to_loss(report.target_loss, bounds, csp_base, dev, circ, cfg);
    EdgePair csp_edges;
    report.csp_record = evaluate_csp_point(report.tuned_inputs, dev, circ, cfg, "csp", &csp_edges);

    report.loss_mismatch =
        std::abs(report.csp_record.p_sw - report.cats_record.p_sw) / report.cats_record.p_sw;

    const Waveforms csp_pwm = build_pwm_cycle(csp_edges.on, csp_edges.off, circ.t_s, duty);
    const Waveforms cats_pwm = build_pwm_cycle(cats_edges.on, cats_edges.off, circ.t_s, duty);
    report.csp_spectrum = spectrum_envelope(csp_pwm, circ.t_s);
    report.cats_spectrum = spectrum_envelope(cats_pwm, circ.t_s);
    return report;
}

}  // namespace igsim
