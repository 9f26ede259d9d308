#include "igsim/fft.hpp"

#include "igsim/errors.hpp"

#include <cmath>
#include <numbers>

namespace igsim {

namespace {

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

// Bluestein chirp-z: expresses an arbitrary-length DFT as a convolution,
// evaluated with power-of-two FFTs.
std::vector<std::complex<double>> bluestein(const std::vector<std::complex<double>>& x) {
    const std::size_t n = x.size();
    const std::size_t m = next_pow2(2 * n - 1);
    const double pi = std::numbers::pi;

    std::vector<std::complex<double>> chirp(n);
    for (std::size_t k = 0; k < n; ++k) {
        // k^2 mod 2n keeps the phase argument small for large n
        const std::size_t k2 = static_cast<std::size_t>((static_cast<unsigned long long>(k) * k) % (2 * n));
        const double phase = pi * static_cast<double>(k2) / static_cast<double>(n);
        chirp[k] = std::polar(1.0, -phase);
    }

    std::vector<std::complex<double>> a(m, {0.0, 0.0});
    std::vector<std::complex<double>> b(m, {0.0, 0.0});
    for (std::size_t k = 0; k < n; ++k) a[k] = x[k] * chirp[k];
    b[0] = std::conj(chirp[0]);
    for (std::size_t k = 1; k < n; ++k) b[k] = b[m - k] = std::conj(chirp[k]);

    fft_pow2(a, false);
    fft_pow2(b, false);
    for (std::size_t k = 0; k < m; ++k) a[k] *= b[k];
    fft_pow2(a, true);

    std::vector<std::complex<double>> out(n);
    for (std::size_t k = 0; k < n; ++k) out[k] = a[k] * chirp[k];
    return out;
}

}  // namespace

void fft_pow2(std::vector<std::complex<double>>& data, bool inverse) {
    const std::size_t n = data.size();
    if (!is_pow2(n)) throw domain_error("fft_pow2: length must be a power of two");
    if (n < 2) return;

    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(data[i], data[j]);
    }

    const double pi = std::numbers::pi;
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = (inverse ? 2.0 : -2.0) * pi / static_cast<double>(len);
        const std::complex<double> wlen = std::polar(1.0, ang);
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w{1.0, 0.0};
            for (std::size_t k = 0; k < len / 2; ++k) {
                const auto u = data[i + k];
                const auto v = data[i + k + len / 2] * w;
                data[i + k] = u + v;
                data[i + k + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
    if (inverse) {
        const double inv_n = 1.0 / static_cast<double>(n);
        for (auto& c : data) c *= inv_n;
    }
}

std::vector<std::complex<double>> dft(const std::vector<std::complex<double>>& x) {
    if (x.empty()) return {};
    if (is_pow2(x.size())) {
        auto data = x;
        fft_pow2(data, false);
        return data;
    }
    return bluestein(x);
}

std::vector<std::complex<double>> dft(const std::vector<double>& x) {
    std::vector<std::complex<double>> cx(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) cx[i] = {x[i], 0.0};
    return dft(cx);
}

}  // namespace igsim
