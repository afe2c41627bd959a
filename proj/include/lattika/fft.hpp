#pragma once
// Complex FFT: mixed radix for lengths whose prime factors are small,
// Bluestein (chirp-z over a power of two) otherwise.
#include <complex>
#include <vector>

namespace lattika {

// a[k] <- Σ_j a[j] exp(sign * 2πi jk / n), sign = ±1, unnormalized.
void fft(std::vector<std::complex<double>>& a, int sign);
// Same on a row-major rows x cols array, both axes.
void fft2d(std::vector<std::complex<double>>& a, int rows, int cols, int sign);

}  // namespace lattika
