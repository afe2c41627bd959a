#include "lattika/hexfft.hpp"

#include <algorithm>

#include "lattika/fft.hpp"

namespace lattika {

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

std::size_t grid_slot(const IndexPoint& k, int n) {
  return static_cast<std::size_t>(mod(k.h[0], n)) * n + mod(k.h[1], n);
}

void check_grid(const HexSampleGrid& g) {
  if (g.n < 1 || g.values.size() != static_cast<std::size_t>(g.n) * g.n)
    throw Error(ErrorCode::SampleCountMismatch, "hexagonal grid needs n^2 values");
}

}  // namespace

HomoExact node_map(int n, int j1, int j2) {
  return {Rational(2 * j1 - j2, n), Rational(2 * j2 - j1, n), Rational(-j1 - j2, n)};
}

HomoExact reorder_index(int n, int j1, int j2) {
  if (n < 1 || j1 < 0 || j2 < 0 || j1 >= n || j2 >= n)
    throw Error(ErrorCode::IndexOutOfRange, "grid index outside [0, n)^2");
  return reduce_mod_lattice(LatticeCase{CaseTag::HexHexTranspose, n}, node_map(n, j1, j2));
}

std::vector<IndexPoint> hex_frequencies(int n) {
  auto m = build_index_set({CaseTag::HexHexTranspose, n}, Variant::dagger_open).members;
  std::sort(m.begin(), m.end(), [](const IndexPoint& a, const IndexPoint& b) { return a.h < b.h; });
  return m;
}

HexSampleGrid sample_grid(int n, const std::function<cplx(const HomoPoint&)>& f) {
  HexSampleGrid g{n, std::vector<cplx>(static_cast<std::size_t>(n) * n)};
  for (int j1 = 0; j1 < n; ++j1)
    for (int j2 = 0; j2 < n; ++j2) g.values[j1 * n + j2] = f(node_map(n, j1, j2).to_double());
  return g;
}

// At node_j the phase k·t/3 reduces to (k1 j1 + k2 j2)/n, so the transform is a
// plain 2D DFT of the grid read at (k1 mod n, k2 mod n).
HexSpectrum forward(const HexSampleGrid& grid) {
  check_grid(grid);
  const int n = grid.n;
  std::vector<cplx> a = grid.values;
  fft2d(a, n, n, -1);
  HexSpectrum s{n, hex_frequencies(n), {}};
  const double inv = 1.0 / (static_cast<double>(n) * n);
  s.coeffs.reserve(s.labels.size());
  for (const auto& k : s.labels) s.coeffs.push_back(a[grid_slot(k, n)] * inv);
  return s;
}

HexSampleGrid inverse(const HexSpectrum& sp) {
  const int n = sp.n;
  if (n < 1 || sp.coeffs.size() != static_cast<std::size_t>(n) * n || sp.labels.size() != sp.coeffs.size())
    throw Error(ErrorCode::SampleCountMismatch, "hexagonal spectrum needs n^2 coefficients");
  std::vector<cplx> a(static_cast<std::size_t>(n) * n, 0.0);
  for (std::size_t i = 0; i < sp.labels.size(); ++i) a[grid_slot(sp.labels[i], n)] += sp.coeffs[i];
  fft2d(a, n, n, 1);
  return {n, std::move(a)};
}

HexSpectrum naive_dft(const HexSampleGrid& grid) {
  check_grid(grid);
  const int n = grid.n;
  HexSpectrum s{n, hex_frequencies(n), {}};
  std::vector<HomoPoint> nodes;
  for (int j1 = 0; j1 < n; ++j1)
    for (int j2 = 0; j2 < n; ++j2) nodes.push_back(node_map(n, j1, j2).to_double());
  const double inv = 1.0 / (static_cast<double>(n) * n);
  for (const auto& k : s.labels) {
    cplx sum = 0;
    for (std::size_t j = 0; j < nodes.size(); ++j) sum += grid.values[j] * std::conj(phi(k, nodes[j]));
    s.coeffs.push_back(sum * inv);
  }
  return s;
}

}  // namespace lattika
