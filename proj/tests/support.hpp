#pragma once

// Shared helpers for the test suites: synthetic edges and an independent
// high-resolution route to the signature spreads (direct moments plus
// Simpson quadrature of the DTFT, all in long double). The oracle shares
// no code with the library path it checks.

#include "igsim/transient.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

namespace testsupport {

inline igsim::Waveforms waveform_from_vce(std::vector<double> vce, double dt) {
    igsim::Waveforms w;
    w.dt = dt;
    w.v_ce = std::move(vce);
    w.v_ge.assign(w.v_ce.size(), 0.0);
    w.i_c.assign(w.v_ce.size(), 0.0);
    w.i_g.assign(w.v_ce.size(), 0.0);
    w.completed = true;
    return w;
}

/// Falling collector edge v_hi -> v_lo shaped by g: [0, T] -> [0, 1].
inline igsim::Waveforms edge_from_profile(const std::function<double(double)>& g, double T,
                                          double dt, double v_hi = 130.0, double v_lo = 2.0) {
    const auto n = static_cast<std::size_t>(std::llround(T / dt)) + 1;
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i)
        v[i] = v_lo + (v_hi - v_lo) * g(static_cast<double>(i) * dt);
    return waveform_from_vce(std::move(v), dt);
}

/// Error-function edge: lambda is a Gaussian of the given sigma.
inline std::function<double(double)> erf_profile(double center, double sigma) {
    return [=](double t) { return 0.5 * std::erfc((t - center) / (sigma * std::numbers::sqrt2)); };
}

/// Raised-cosine edge of the given width.
inline std::function<double(double)> raised_cosine_profile(double start, double width) {
    return [=](double t) {
        if (t <= start) return 1.0;
        if (t >= start + width) return 0.0;
        return 0.5 * (1.0 + std::cos(std::numbers::pi * (t - start) / width));
    };
}

/// Random smooth monotone composite of erf / raised-cosine components.
inline std::function<double(double)> random_smooth_profile(std::mt19937& rng, double T) {
    std::uniform_int_distribution<int> n_components(1, 3);
    std::uniform_real_distribution<double> center_dist(0.3 * T, 0.7 * T);
    std::uniform_real_distribution<double> width_dist(0.02 * T, 0.12 * T);
    std::uniform_real_distribution<double> weight_dist(0.2, 1.0);
    std::uniform_int_distribution<int> kind(0, 1);

    const int n = n_components(rng);
    std::vector<std::function<double(double)>> parts;
    std::vector<double> weights;
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
        const double c = center_dist(rng);
        const double w = width_dist(rng);
        if (kind(rng) == 0)
            parts.push_back(erf_profile(c, w / 4.0));
        else
            parts.push_back(raised_cosine_profile(c - w / 2.0, w));
        const double wt = weight_dist(rng);
        weights.push_back(wt);
        total += wt;
    }
    for (double& w : weights) w /= total;
    return [parts, weights](double t) {
        double g = 0.0;
        for (std::size_t i = 0; i < parts.size(); ++i) g += weights[i] * parts[i](t);
        return g;
    };
}

struct OracleSpreads {
    double sigma_t = 0.0;
    double sigma_w = 0.0;
    double product() const { return sigma_t * sigma_w; }
};

/// Independent spread computation on a v_ce record: re-derives lambda with
/// central differences, takes long-double moments in time, and integrates
/// the DTFT with composite Simpson over [-pi/dt, pi/dt].
inline OracleSpreads oracle_spreads_of_vce(const std::vector<double>& vce, double dt,
                                           std::size_t omega_intervals = 32768) {
    using ld = long double;
    const std::size_t n = vce.size();
    const ld denom = static_cast<ld>(vce.front()) - static_cast<ld>(vce.back());

    std::vector<ld> lambda(n);
    lambda[0] = -(static_cast<ld>(vce[1]) - vce[0]) / (denom * dt);
    lambda[n - 1] = -(static_cast<ld>(vce[n - 1]) - vce[n - 2]) / (denom * dt);
    for (std::size_t i = 1; i + 1 < n; ++i)
        lambda[i] = -(static_cast<ld>(vce[i + 1]) - vce[i - 1]) / (denom * 2.0L * dt);

    ld area = 0.0L;
    for (ld v : lambda) area += v * dt;
    for (ld& v : lambda) v /= area;

    ld energy = 0.0L;
    ld mean = 0.0L;
    for (std::size_t i = 0; i < n; ++i) {
        energy += lambda[i] * lambda[i];
        mean += static_cast<ld>(i) * dt * lambda[i] * lambda[i];
    }
    mean /= energy;
    ld var_t = 0.0L;
    for (std::size_t i = 0; i < n; ++i) {
        const ld d = static_cast<ld>(i) * dt - mean;
        var_t += d * d * lambda[i] * lambda[i];
    }
    var_t /= energy;

    // Simpson over omega in [0, pi/dt]; the spectrum is even in omega.
    const std::size_t m = omega_intervals % 2 ? omega_intervals + 1 : omega_intervals;
    const ld pi = std::numbers::pi_v<ld>;
    const ld w_max = pi / static_cast<ld>(dt);
    const ld h = w_max / static_cast<ld>(m);
    ld sum0 = 0.0L;
    ld sum2 = 0.0L;
    for (std::size_t j = 0; j <= m; ++j) {
        const ld w = static_cast<ld>(j) * h;
        const std::complex<ld> rot(std::cos(-w * dt), std::sin(-w * dt));
        std::complex<ld> phase(1.0L, 0.0L);
        std::complex<ld> acc(0.0L, 0.0L);
        for (std::size_t i = 0; i < n; ++i) {
            acc += lambda[i] * phase;
            phase *= rot;
        }
        const ld p = std::norm(acc * static_cast<ld>(dt));
        const ld weight = (j == 0 || j == m) ? 1.0L : (j % 2 ? 4.0L : 2.0L);
        sum0 += weight * p;
        sum2 += weight * w * w * p;
    }
    const ld var_w = sum2 / sum0;

    OracleSpreads out;
    out.sigma_t = static_cast<double>(std::sqrt(var_t));
    out.sigma_w = static_cast<double>(std::sqrt(var_w));
    return out;
}

}  // namespace testsupport
