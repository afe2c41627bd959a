#pragma once
// Lattice interpolation: the generic operator on Λ_N, the starred hexagonal
// near-interpolant with its compact kernel, and interpolation on the triangle Δ.
#include <vector>

#include "lattika/triangle_trig.hpp"

namespace lattika {

// ---- generic operator

// Interpolation nodes B^{-T}j, j ∈ Λ_N, in the order samples are expected.
std::vector<Vec2q> interp_nodes(const LatticeCase& c);
// Unique element of H_N = span{phi_k : k ∈ Λ_N†} matching the samples.
TrigPoly interp_generic(const LatticeCase& c, const std::vector<cplx>& samples);
// Ψ(x) = |det N|^{-1} Σ_{k∈Λ_N†} phi_k(x), so that I_N f(x) = Σ_j f(x_j) Ψ(x - x_j).
cplx psi_kernel(const LatticeCase& c, const Point2& x);

// ---- hexagon-transpose kernels (homogeneous coordinates)

// 𝕂n* labels j (nodes j/n) with starred weights, and 𝕂n†* frequency labels.
struct StarredHexSets {
  int n = 0;
  std::vector<IndexPoint> nodes;
  std::vector<Rational> c;
  std::vector<IndexPoint> freqs;
  std::vector<Rational> freq_weight;  // c_{k̂} for each frequency
};
const StarredHexSets& starred_hex_sets(int n);  // cached, thread-safe

enum class KernelMethod { compact, direct_sum };

// Φn(t) = n^{-2} Σ_{j∈𝕂n†*} c_{ĵ} phi_j(t). The compact form needs 3 | n
// (NotMultipleOf3); near the lines sin(pi t_i) = 0 it falls back to the sum.
double phi_n_kernel(const HomoPoint& t, int n, KernelMethod m);
cplx phi_n_direct(const HomoPoint& t, int n);  // complex value of the sum
double phi_n_compact_raw(const HomoPoint& t, int n);  // formula only, no fallback

// Θn(t) = Σ_{j∈𝕂n†*} phi_j(t).
cplx dirichlet_theta(int n, const HomoPoint& t);
// Θn split by the classes j ≡ 0, 1, 2 (mod 3) of 𝕂n*, in the variable
// s_i = (t_{i+2} - t_{i+1}) / 3.
std::array<cplx, 3> dirichlet_theta_parts(int n, const HomoPoint& t);
HomoPoint s_variable(const HomoPoint& t);

// I_n* f(t) = Σ_{j∈𝕂n*} f(j/n) Φn(t - j/n).
class StarredHexInterpolant {
 public:
  StarredHexInterpolant(int n, std::vector<cplx> samples);  // one sample per starred_hex_sets(n).nodes
  cplx operator()(const HomoPoint& t) const;

 private:
  int n_;
  std::vector<cplx> f_;
};

// ---- triangle

enum class TriangleFlavor { sine, cosine };

// λ̂_k = c_{k̂} |k 𝒜₂| for k ∈ Υn† (frequency weight of the triangle kernels).
Rational lambda_hat(const IndexPoint& k, int n);

// L_n (sine, nodes Υn°, functions TS_k, k ∈ Υn† with k1, k2 > 0) and
// L_n* (cosine, nodes Υn, functions TC_k, k ∈ Υn†).
class TriangleInterpolant {
 public:
  TriangleInterpolant(TriangleFlavor flavor, int n, std::vector<cplx> samples);
  static IndexSet node_set(TriangleFlavor flavor, int n);
  static IndexSet freq_set(TriangleFlavor flavor, int n);

  cplx operator()(const HomoPoint& t) const;
  // ℓ_j(t) for every node j.
  std::vector<cplx> cardinal(const HomoPoint& t) const;
  std::size_t size() const { return nodes_.size(); }

 private:
  cplx basis(std::size_t k, const HomoPoint& t) const;
  TriangleFlavor flavor_;
  int n_;
  std::vector<IndexPoint> nodes_, freqs_;
  std::vector<std::vector<cplx>> M_;  // M_[j][k]: ℓ_j = Σ_k M_[j][k] basis_k
  std::vector<cplx> coef_;            // interpolant = Σ_k coef_[k] basis_k
};

// ---- Lebesgue constants

enum class LebesgueOperator { starred_hex, triangle_sine, triangle_cosine };

// max over the barycentric grid {(a, b, -a-b)/density} of Δ of Σ_j |ℓ_j(t)|.
// For I_n* the Lebesgue function is 𝒜₂-invariant, so Δ covers the hexagon.
double lebesgue_constant(LebesgueOperator op, int n, int density);

struct LebesgueReport {
  std::vector<int> n_values;
  std::vector<double> constants;
  double fitted_ratio = 0;  // max constant / (log n)^2
  double min_ratio = 0;
};
LebesgueReport lebesgue_report(LebesgueOperator op, const std::vector<int>& ns, int density);

}  // namespace lattika
