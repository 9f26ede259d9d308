#pragma once

#include "igsim/transient.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace igsim {

struct LossReport {
    double e_on = 0.0;   // turn-on switching energy (J)
    double e_off = 0.0;  // turn-off switching energy (J)
    double p_sw = 0.0;   // (e_on + e_off) / t_s (W)
    std::pair<double, double> window_on{0.0, 0.0};   // measurement interval (s)
    std::pair<double, double> window_off{0.0, 0.0};  // measurement interval (s)
};

/// Normalized switching-edge kernel lambda(t) with its time/frequency
/// spreads. lambda has unit area; sigma_t * sigma_w obeys the
/// Heisenberg-Gabor bound (>= 1/2, equality for a Gaussian kernel).
struct EdgeSignature {
    double dt = 0.0;
    std::vector<double> lambda;  // 1/s
    double sigma_t = 0.0;        // s
    double sigma_w = 0.0;        // rad/s

    double product() const { return sigma_t * sigma_w; }
};

struct Spectrum {
    std::vector<double> f;            // harmonic frequencies, k / t_s (Hz)
    std::vector<double> mag_db;       // harmonic magnitude (dBuV)
    std::vector<double> envelope_db;  // running maximum toward higher f (dBuV)
    double dc = 0.0;                  // mean value of the analyzed signal (V)
};

/// Datasheet-style loss measurement:
///   e_on  over [v_ge >= 10% of v_ge_max, v_ce <= 2% of v_bus]
///   e_off over [v_ge <= 90% of v_ge_max, i_c <= 2% of i_load]
/// Trapezoidal integration of v_ce * i_c; a threshold that is never
/// crossed raises a protocol error naming it.
LossReport switching_energy(const Waveforms& on, const Waveforms& off, const DeviceParams& dev,
                            const CircuitParams& circ);

/// Normalized edge kernel and its spreads. The edge must traverse at least
/// 96% of the expected span (v_bus - v_ce_sat when supplied, the sample
/// min/max range otherwise). sigma_w is evaluated on the DFT of lambda,
/// zero-padded to at least pad_factor (>= 8) times the record length.
EdgeSignature edge_signature(const Waveforms& w, std::optional<double> expected_span = std::nullopt,
                             std::size_t pad_factor = 8);

/// Sum of the two co-spreads; >= 1 up to discretization, reached when both
/// edges follow a Gaussian-integral profile.
double fom(const EdgeSignature& on_sig, const EdgeSignature& off_sig);

/// One-period DFT of the v_ce waveform (no window; the record is exactly
/// periodic). Harmonic amplitudes are reported in dBuV; the envelope is the
/// running maximum over descending frequency, capped at
/// min(1/(2 dt), 500 MHz).
Spectrum spectrum_envelope(const Waveforms& pwm, double t_s);

/// Envelope resampled onto a log-spaced frequency grid (for plots and
/// slope checks): pairs of (f, envelope_dBuV).
std::vector<std::pair<double, double>> envelope_log_grid(const Spectrum& spec,
                                                         int points_per_decade = 20);

}  // namespace igsim
