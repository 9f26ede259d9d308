#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace igsim {

/// In-place complex FFT, length must be a power of two.
void fft_pow2(std::vector<std::complex<double>>& data, bool inverse);

/// Forward DFT of arbitrary length (Bluestein for non-power-of-two sizes).
/// Returns X_k = sum_n x_n * exp(-2*pi*i*k*n/N).
std::vector<std::complex<double>> dft(const std::vector<double>& x);

std::vector<std::complex<double>> dft(const std::vector<std::complex<double>>& x);

}  // namespace igsim
