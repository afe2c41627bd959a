#pragma once
#include <complex>
#include <functional>
#include <map>
#include <vector>

#include "lattika/index_sets.hpp"

namespace lattika {

using cplx = std::complex<double>;
using Polygon = std::vector<Point2>;

// phi_k(x) = exp(2 pi i k^T A^{-1} x).
cplx phi(const LatticeCase& c, const IndexPoint& k, const Point2& x);
// Hexagonal form exp(2 pi i k·t / 3) for homogeneous k and t.
cplx phi(const IndexPoint& k, const HomoPoint& t);
// Exact points: the phase is reduced mod 1 in exact arithmetic when rational.
cplx phi(const LatticeCase& c, const IndexPoint& k, const Vec2q& x);

// exp(2 pi i q) for exact rational q.
cplx unit_root(const Rational& q);

struct TrigPoly {
  LatticeCase lcase{CaseTag::SquareSquare, 1};
  std::map<std::array<int, 2>, cplx> coeffs;  // Cartesian frequency index -> coefficient

  cplx operator()(const Point2& x) const;
  cplx operator()(const Vec2q& x) const;
  std::vector<cplx> evaluate(const std::vector<Point2>& xs) const;
  // Largest |2 pi A^{-T}k| over the support.
  double bandwidth() const;
  TrigPoly conj_times(const TrigPoly& g) const;  // f * conj(g)
};

// Node set of <.,.>_N: open (B^{-T}Λ_N, weight 1) or starred (closed set with
// c_j = 1/|S_j|, S_j the closed nodes congruent to j). Normalization 1/|det N|.
struct DiscreteNodes {
  LatticeCase lcase{CaseTag::SquareSquare, 1};
  bool starred = false;
  std::vector<IndexPoint> index;
  std::vector<Vec2q> nodes;
  std::vector<Rational> c;
  Rational normalization;
};

enum class DiscreteVariant { open, starred };

DiscreteNodes discrete_nodes(const LatticeCase& c, DiscreteVariant v);
// Starred weights for any closed node set: 1/(number of members congruent mod the A-lattice).
std::vector<Rational> congruence_weights(const LatticeCase& c, const std::vector<Vec2q>& nodes);

cplx discrete_inner(const DiscreteNodes& d, const std::vector<cplx>& f, const std::vector<cplx>& g);
cplx discrete_inner(const LatticeCase& c, DiscreteVariant v, const TrigPoly& f, const TrigPoly& g);
cplx discrete_inner(const LatticeCase& c, DiscreteVariant v, const std::function<cplx(const Vec2q&)>& f,
                    const std::function<cplx(const Vec2q&)>& g);

struct InnerProductReport {
  std::vector<std::vector<cplx>> gram;
  double max_offdiag = 0;
  double max_diag_deviation = 0;
};

InnerProductReport gram_discrete(const LatticeCase& c, DiscreteVariant v);
InnerProductReport gram_continuous(const LatticeCase& c);

// ---- integration oracle

// Gauss–Legendre nodes/weights on [0, 1].
void gauss_legendre(int m, std::vector<double>& x, std::vector<double>& w);

// Normalized quadrature (weights sum to 1) over a convex polygon: fan
// triangulation, collapsed tensor Gauss–Legendre per triangle with
// m = 10 + 2*ceil(bandwidth * diam) points per axis, each triangle split into
// 4^level subtriangles.
struct PolygonQuadrature {
  std::vector<Point2> x;
  std::vector<double> w;
  PolygonQuadrature(const Polygon& poly, double bandwidth, int level);
};

// Coarse and once-refined grids; every mean is computed on both and must
// agree to 1e-12 relative to the mean of |F| (else OracleAccuracy).
class Oracle {
 public:
  Oracle(const Polygon& poly, double bandwidth);
  cplx mean(const std::function<cplx(const Point2&)>& F) const;
  // ∫F rho / ∫rho
  cplx weighted_mean(const std::function<cplx(const Point2&)>& F,
                     const std::function<double(const Point2&)>& rho) const;
  // Same with F given as values on fine().x and coarse().x.
  cplx mean_values(const std::vector<cplx>& coarse_vals, const std::vector<cplx>& fine_vals) const;
  // Weighted means of `count` functions evaluated together: F(x, out) fills
  // out[0..count). rho may be null (weight 1). Each mean is checked separately.
  using BatchFn = std::function<void(const Point2&, cplx*)>;
  std::vector<cplx> weighted_means(std::size_t count, const BatchFn& F,
                                   const std::function<double(const Point2&)>* rho) const;
  const PolygonQuadrature& coarse() const { return coarse_; }
  const PolygonQuadrature& fine() const { return fine_; }
  double tolerance = 1e-12;

 private:
  PolygonQuadrature coarse_, fine_;
};

double polygon_area(const Polygon& p);
double polygon_diameter(const Polygon& p);

cplx continuous_inner_oracle(const Polygon& domain, const TrigPoly& f, const TrigPoly& g);

// Fundamental domain of the case as a polygon.
Polygon case_polygon(CaseTag t);

}  // namespace lattika
