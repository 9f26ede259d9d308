#pragma once

#include "igsim/analysis.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace igsim {

/// One sweep point of the loss-vs-EMI trade-off study.
struct TradeoffRecord {
    std::string drive_id;
    std::optional<double> i_3;  // step-3 amplitude (A); absent for CATS
    double p_sw = 0.0;          // switching power (W)
    double fom = 0.0;
    double e_on = 0.0;          // J
    double e_off = 0.0;         // J
};

struct ComparisonReport {
    double target_loss = 0.0;  // W
    TradeoffRecord csp_record;
    TradeoffRecord cats_record;
    double loss_mismatch = 0.0;  // |p_csp - p_cats| / p_cats
    Spectrum csp_spectrum;
    Spectrum cats_spectrum;
    CspDesignInputs tuned_inputs;
    double duty = 0.5;
};

/// Simulated turn-on / turn-off pair of one drive.
struct EdgePair {
    Waveforms on;
    Waveforms off;
};

/// Design, simulate (both edges) and analyze one CSP operating point.
TradeoffRecord evaluate_csp_point(const CspDesignInputs& inputs, const DeviceParams& dev,
                                  const CircuitParams& circ, const SimConfig& cfg,
                                  const std::string& drive_id, EdgePair* edges_out = nullptr);

/// Simulate and analyze a CATS drive.
TradeoffRecord evaluate_cats(const CatsProfile& cats, const DeviceParams& dev,
                             const CircuitParams& circ, const SimConfig& cfg,
                             const std::string& drive_id, EdgePair* edges_out = nullptr);

/// One record per i_3 value, in input order. Errors propagate tagged with
/// the failing i_3. When edges_out is given it receives the simulated edge
/// pair of every point (for spectra or waveform export).
std::vector<TradeoffRecord> sweep_i3(const CspDesignInputs& base, const std::vector<double>& values,
                                     const DeviceParams& dev, const CircuitParams& circ,
                                     const SimConfig& cfg,
                                     std::vector<EdgePair>* edges_out = nullptr);

struct I3Bounds {
    double lo = 5e-3;   // A
    double hi = 150e-3; // A
};

/// Bisection on a decreasing scalar map: returns x in [lo, hi] with
/// |f(x) - target| / target <= rel_tol, or the best midpoint after
/// max_iter halvings. The target must be bracketed: f(lo) >= target >= f(hi).
double bisect_decreasing(const std::function<double(double)>& f, double target, double lo,
                         double hi, double rel_tol = 5e-3, int max_iter = 40);

/// Tune i_3 until the simulated switching power matches target_p within
/// 0.5%. Loss decreases with i_3; an unbracketed target raises a
/// calibration error reporting the achievable range.
CspDesignInputs calibrate_to_loss(double target_p, const I3Bounds& bounds,
                                  const CspDesignInputs& base, const DeviceParams& dev,
                                  const CircuitParams& circ, const SimConfig& cfg);

/// Loss-matched CSP-vs-CATS comparison. CATS runs as given; the CSP is
/// calibrated toward target_p (defaulting to the measured CATS loss).
ComparisonReport compare_at_equal_loss(const CspDesignInputs& csp_base, const CatsProfile& cats,
                                       std::optional<double> target_p, const I3Bounds& bounds,
                                       const DeviceParams& dev, const CircuitParams& circ,
                                       const SimConfig& cfg, double duty = 0.5);

}  // namespace igsim
