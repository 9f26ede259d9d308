#include "igsim/analysis.hpp"

#include "igsim/fft.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace igsim {

namespace {

std::size_t first_index(const std::vector<double>& ch, double threshold, bool rising_past,
                        const char* what) {
    for (std::size_t i = 0; i < ch.size(); ++i) {
        if (rising_past ? ch[i] >= threshold : ch[i] <= threshold) return i;
    }
    throw protocol_error(std::string("switching_energy: threshold never crossed: ") + what);
}

double trapezoid_power(const Waveforms& w, std::size_t i0, std::size_t i1) {
    if (i1 <= i0) return 0.0;
    double e = 0.0;
    for (std::size_t i = i0; i < i1; ++i) {
        const double p0 = w.v_ce[i] * w.i_c[i];
        const double p1 = w.v_ce[i + 1] * w.i_c[i + 1];
        e += 0.5 * (p0 + p1) * w.dt;
    }
    return e;
}

std::size_t padded_length(std::size_t n, std::size_t factor) {
    std::size_t p = 1;
    while (p < factor * n) p <<= 1;
    return p;
}

}  // namespace

LossReport switching_energy(const Waveforms& on, const Waveforms& off, const DeviceParams& dev,
                            const CircuitParams& circ) {
    if (on.size() < 2 || off.size() < 2)
        throw domain_error("switching_energy: edges must carry samples");

    const std::size_t on_a =
        first_index(on.v_ge, 0.10 * dev.v_ge_max, true, "turn-on v_ge >= 10% of v_ge_max");
    const std::size_t on_b =
        first_index(on.v_ce, 0.02 * circ.v_bus, false, "turn-on v_ce <= 2% of v_bus");
    const std::size_t off_a =
        first_index(off.v_ge, 0.90 * dev.v_ge_max, false, "turn-off v_ge <= 90% of v_ge_max");
    const std::size_t off_b =
        first_index(off.i_c, 0.02 * circ.i_load, false, "turn-off i_c <= 2% of i_load");

    LossReport r;
    r.e_on = trapezoid_power(on, on_a, on_b);
    r.e_off = trapezoid_power(off, off_a, off_b);
    r.p_sw = (r.e_on + r.e_off) / circ.t_s;
    r.window_on = {on.time_at(on_a), on.time_at(on_b)};
    r.window_off = {off.time_at(off_a), off.time_at(off_b)};
    return r;
}

EdgeSignature edge_signature(const Waveforms& w, std::optional<double> expected_span,
                             std::size_t pad_factor) {
    if (pad_factor < 8) throw domain_error("edge_signature: pad factor must be at least 8");
    const std::size_t n = w.v_ce.size();
    if (n < 8) throw signature_error("edge_signature: record too short");
    const double dt = w.dt;
    const double v_first = w.v_ce.front();
    const double v_last = w.v_ce.back();

    const auto [mn, mx] = std::minmax_element(w.v_ce.begin(), w.v_ce.end());
    const double range = *mx - *mn;
    const double span = expected_span ? *expected_span : range;
    if (!(span > 0.0) || std::abs(v_first - v_last) < 0.96 * span)
        throw signature_error("edge_signature: v_ce does not traverse the edge");

    // lambda = -d/dt of the normalized edge, positive for a monotone edge.
    const double denom = v_first - v_last;
    std::vector<double> lambda(n);
    lambda[0] = -(w.v_ce[1] - w.v_ce[0]) / (denom * dt);
    lambda[n - 1] = -(w.v_ce[n - 1] - w.v_ce[n - 2]) / (denom * dt);
    for (std::size_t i = 1; i + 1 < n; ++i)
        lambda[i] = -(w.v_ce[i + 1] - w.v_ce[i - 1]) / (denom * 2.0 * dt);

    double area = 0.0;
    for (double v : lambda) area += v * dt;
    if (!(area > 0.0)) throw signature_error("edge_signature: kernel area is not positive");
    for (double& v : lambda) v /= area;

    // Energy-normalized time moments.
    double energy = 0.0;
    for (double v : lambda) energy += v * v;
    if (!(energy > 0.0)) throw signature_error("edge_signature: kernel energy is zero");
    double t_mean = 0.0;
    for (std::size_t i = 0; i < n; ++i) t_mean += static_cast<double>(i) * dt * lambda[i] * lambda[i];
    t_mean /= energy;
    double t_var = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = static_cast<double>(i) * dt - t_mean;
        t_var += d * d * lambda[i] * lambda[i];
    }
    t_var /= energy;

    // Frequency moments on the zero-padded DFT.
    const std::size_t m = padded_length(n, pad_factor);
    std::vector<std::complex<double>> padded(m, {0.0, 0.0});
    for (std::size_t i = 0; i < n; ++i) padded[i] = {lambda[i], 0.0};
    fft_pow2(padded, false);

    const double dw = 2.0 * std::numbers::pi / (static_cast<double>(m) * dt);
    double w_energy = 0.0;
    double w_mean = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
        const double wk = (k <= m / 2 ? static_cast<double>(k)
                                      : static_cast<double>(k) - static_cast<double>(m)) *
                          dw;
        const double p = std::norm(padded[k]);
        w_energy += p;
        w_mean += wk * p;
    }
    w_mean /= w_energy;
    double w_var = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
        const double wk = (k <= m / 2 ? static_cast<double>(k)
                                      : static_cast<double>(k) - static_cast<double>(m)) *
                          dw;
        const double d = wk - w_mean;
        w_var += d * d * std::norm(padded[k]);
    }
    w_var /= w_energy;

    EdgeSignature sig;
    sig.dt = dt;
    sig.lambda = std::move(lambda);
    sig.sigma_t = std::sqrt(t_var);
    sig.sigma_w = std::sqrt(w_var);
    return sig;
}

double fom(const EdgeSignature& on_sig, const EdgeSignature& off_sig) {
    return on_sig.product() + off_sig.product();
}

Spectrum spectrum_envelope(const Waveforms& pwm, double t_s) {
    const std::size_t n = pwm.v_ce.size();
    const auto expected = static_cast<std::size_t>(std::llround(t_s / pwm.dt));
    if (n != expected || n < 4)
        throw framing_error("spectrum_envelope: waveform does not span exactly one period");

    const auto x = dft(pwm.v_ce);
    const double f_cap = std::min(0.5 / pwm.dt, 500e6);
    const auto k_max = std::min<std::size_t>(
        n / 2, static_cast<std::size_t>(std::floor(f_cap * t_s)));

    Spectrum spec;
    spec.dc = x[0].real() / static_cast<double>(n);
    spec.f.reserve(k_max);
    spec.mag_db.reserve(k_max);
    const double floor_db = -400.0;  // stand-in for exact spectral zeros
    for (std::size_t k = 1; k <= k_max; ++k) {
        const double amplitude = 2.0 * std::abs(x[k]) / static_cast<double>(n);
        spec.f.push_back(static_cast<double>(k) / t_s);
        spec.mag_db.push_back(amplitude > 0.0 ? 20.0 * std::log10(amplitude / 1e-6) : floor_db);
    }
    spec.envelope_db.resize(spec.mag_db.size());
    double running = floor_db;
    for (std::size_t i = spec.mag_db.size(); i-- > 0;) {
        running = std::max(running, spec.mag_db[i]);
        spec.envelope_db[i] = running;
    }
    return spec;
}

std::vector<std::pair<double, double>> envelope_log_grid(const Spectrum& spec,
                                                         int points_per_decade) {
    std::vector<std::pair<double, double>> out;
    if (spec.f.empty() || points_per_decade < 1) return out;
    const double f_lo = spec.f.front();
    const double f_hi = spec.f.back();
    const double step = std::pow(10.0, 1.0 / points_per_decade);
    for (double f = f_lo; f <= f_hi * (1.0 + 1e-12); f *= step) {
        // first harmonic at or above f carries the running-max envelope
        const auto it = std::lower_bound(spec.f.begin(), spec.f.end(), f * (1.0 - 1e-12));
        if (it == spec.f.end()) break;
        const auto idx = static_cast<std::size_t>(it - spec.f.begin());
        out.emplace_back(f, spec.envelope_db[idx]);
    }
    return out;
}

}  // namespace igsim
