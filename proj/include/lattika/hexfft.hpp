#pragma once
// Discrete Fourier transform on the hexagon (hexagon–hexagon-transpose case,
// N = nI) by reordering the nodes onto a rectangular n x n grid.
#include <vector>

#include "lattika/fourier.hpp"

namespace lattika {

// values[j1 * n + j2] = f at the node ((2j1 - j2), (2j2 - j1), (-j1 - j2)) / n.
struct HexSampleGrid {
  int n = 0;
  std::vector<cplx> values;
};

// coeffs[i] belongs to labels[i], a frequency of 𝕂n† with homogeneous label
// (k1, k2, -k1-k2), ordered lexicographically in (k1, k2).
struct HexSpectrum {
  int n = 0;
  std::vector<IndexPoint> labels;
  std::vector<cplx> coeffs;
};

// Unreduced node of grid index j (the transform never needs reduction).
HomoExact node_map(int n, int j1, int j2);
// node_map reduced into the hexagon Ω (IndexOutOfRange unless 0 <= j < n).
HomoExact reorder_index(int n, int j1, int j2);
// 𝕂n† in the fixed enumeration order.
std::vector<IndexPoint> hex_frequencies(int n);

HexSampleGrid sample_grid(int n, const std::function<cplx(const HomoPoint&)>& f);

// f̂_k = n^{-2} Σ_j f(node_j) conj(φ_k(node_j)), via a 2D FFT.
HexSpectrum forward(const HexSampleGrid& grid);
// f(node_j) = Σ_k f̂_k φ_k(node_j).
HexSampleGrid inverse(const HexSpectrum& sp);
// Direct O(n^4) summation of the forward transform with φ_k evaluated at the node coordinates.
HexSpectrum naive_dft(const HexSampleGrid& grid);

}  // namespace lattika
