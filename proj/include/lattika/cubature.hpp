#pragma once
// Cubature rules on the lattice fundamental domains, their triangle folds and
// their algebraic images under the Chebyshev-type substitutions.
#include <optional>
#include <string>
#include <vector>

#include "lattika/triangle_trig.hpp"

namespace lattika {

enum class RuleTag {
  SS1, SS2a, SS2b, SS3, SS4, SS4Lobatto, SS4W1,
  SRcuba1, SRcubaT,
  RS, RS2, RS2TS,
  RR, RR2, RR2TS,
  HH, HH2, HH3a1, HH3a2, HHD, HHT2, HHW1, HHT2W, GaussWHalf,
};

const std::vector<RuleTag>& all_rule_tags();
const char* rule_name(RuleTag t);
RuleTag parse_rule(const std::string& s);  // UnknownTag
CaseTag rule_case(RuleTag t);
bool rule_supports(RuleTag t, int n);
// Trigonometric rules map into the coordinates of the image rule.
bool is_algebraic(RuleTag t);

struct ExactnessSpace {
  std::string space;  // e.g. "H*", "TC", "Pi2", "PixPi"
  int degree = 0;     // maximal index or polynomial degree
  std::string description;
};

struct RuleNode {
  Point2 x{};                     // rule coordinates (Cartesian x, or (x, y) for algebraic rules)
  std::optional<Vec2q> exact;     // exact Cartesian point when the node is in Q(sqrt3)^2
  std::optional<HomoExact> homo;  // exact homogeneous coordinates (hexagonal rules)
  NodeClass cls = NodeClass::interior;
  std::optional<Rational> weight_q;  // exact weight when rational
  double weight = 0;
};

struct CubatureRule {
  RuleTag tag = RuleTag::SS1;
  CaseTag lcase = CaseTag::SquareSquare;
  int n = 0;
  std::vector<RuleNode> nodes;
  Rational normalization{1};
  ExactnessSpace exactness;
  std::string domain;   // "Omega", "[0,1/2]^2", "T_R", "Delta", "[-1,1]^2", "T_S", "Delta*"
  std::string measure;  // normalized measure: "dx", "W0", "W1", "w-1/2", "w1/2"
  Polygon outline;      // closed domain outline (empty for Delta*)

  // normalization * sum w_i f(x_i)
  cplx apply(const std::function<cplx(const Point2&)>& f) const;
  bool rational_weights() const;
  // Exact sum w_i * normalization when all weights are rational.
  std::optional<Rational> total_weight() const;
};

CubatureRule build_rule(RuleTag tag, int n);

struct ExactnessReport {
  std::string tested_space;
  std::size_t basis_size = 0;
  double max_error = 0;
  std::string worst_function;
  bool passed(double tol = 1e-9) const { return max_error < tol; }
};

// Compares the rule against the oracle on every basis function of the
// exactness space of (rule.tag, rule.n); node data is taken from `rule`.
ExactnessReport verify_exactness(const CubatureRule& rule);
// Constant function only.
double constant_error(const CubatureRule& rule);

// Stage-4 image of a trigonometric rule (NoSubstitution otherwise).
CubatureRule chebyshev_image(const CubatureRule& rule);

// Gaussian rule for w_{1/2} on the hypocycloid region: n(n+1)/2 nodes.
CubatureRule gaussian_rule_w_half(int n);

}  // namespace lattika
