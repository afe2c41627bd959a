#include "lattika/fft.hpp"

#include <cmath>
#include <numbers>

#include "lattika/parallel.hpp"

namespace lattika {

namespace {

using cplx = std::complex<double>;
constexpr int kMaxRadix = 13;

int smallest_factor(int n) {
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) return p;
  return n;
}

bool smooth(int n) {
  while (n > 1) {
    int p = smallest_factor(n);
    if (p > kMaxRadix) return false;
    n /= p;
  }
  return true;
}

cplx twiddle(long long num, long long n, int sign) {
  // reduce first so that the angle stays small and accurate
  num %= n;
  return std::polar(1.0, sign * 2 * std::numbers::pi * static_cast<double>(num) / static_cast<double>(n));
}

// Decimation in time on the smallest prime factor: x has stride `stride`.
void mixed(const cplx* x, std::size_t stride, int n, int sign, cplx* out) {
  if (n == 1) {
    out[0] = x[0];
    return;
  }
  int p = smallest_factor(n);
  int m = n / p;
  std::vector<cplx> sub(n);
  for (int r = 0; r < p; ++r) mixed(x + r * stride, stride * p, m, sign, sub.data() + r * m);
  std::vector<cplx> rot(p);
  for (int k = 0; k < p; ++k) rot[k] = twiddle(k, p, sign);
  for (int k = 0; k < m; ++k) {
    std::vector<cplx> y(p);
    for (int r = 0; r < p; ++r) y[r] = sub[r * m + k] * twiddle(static_cast<long long>(r) * k, n, sign);
    for (int q = 0; q < p; ++q) {
      cplx s = 0;
      for (int r = 0; r < p; ++r) s += y[r] * rot[(r * q) % p];
      out[q * m + k] = s;
    }
  }
}

void bluestein(std::vector<cplx>& a, int sign) {
  const long long n = static_cast<long long>(a.size());
  std::size_t m = 1;
  while (m < static_cast<std::size_t>(2 * n - 1)) m <<= 1;
  std::vector<cplx> w(n), A(m, 0.0), B(m, 0.0);
  // chirp exp(sign πi j²/n), with j² reduced mod 2n
  for (long long j = 0; j < n; ++j) w[j] = twiddle((j * j) % (2 * n), 2 * n, sign);
  for (long long j = 0; j < n; ++j) A[j] = a[j] * w[j];
  B[0] = std::conj(w[0]);
  for (long long j = 1; j < n; ++j) B[j] = B[m - j] = std::conj(w[j]);
  fft(A, -1);
  fft(B, -1);
  for (std::size_t i = 0; i < m; ++i) A[i] *= B[i];
  fft(A, 1);
  for (long long k = 0; k < n; ++k) a[k] = w[k] * A[k] / static_cast<double>(m);
}

}  // namespace

void fft(std::vector<cplx>& a, int sign) {
  int n = static_cast<int>(a.size());
  if (n <= 1) return;
  if (!smooth(n)) {
    bluestein(a, sign);
    return;
  }
  std::vector<cplx> out(n);
  mixed(a.data(), 1, n, sign, out.data());
  a.swap(out);
}

void fft2d(std::vector<cplx>& a, int rows, int cols, int sign) {
  parallel_for(static_cast<std::size_t>(rows), [&](std::size_t r) {
    std::vector<cplx> v(a.begin() + r * cols, a.begin() + (r + 1) * cols);
    fft(v, sign);
    std::copy(v.begin(), v.end(), a.begin() + r * cols);
  }, 8);
  parallel_for(static_cast<std::size_t>(cols), [&](std::size_t c) {
    std::vector<cplx> v(rows);
    for (int r = 0; r < rows; ++r) v[r] = a[r * cols + c];
    fft(v, sign);
    for (int r = 0; r < rows; ++r) a[r * cols + c] = v[r];
  }, 8);
}

}  // namespace lattika
