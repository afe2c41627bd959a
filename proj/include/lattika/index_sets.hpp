#pragma once
#include <array>
#include <string>
#include <vector>

#include "lattika/lattice.hpp"

namespace lattika {

enum class NodeClass { interior, edge, vertex };
const char* class_name(NodeClass c);
NodeClass parse_class(const std::string& s);

// k: Cartesian integer index. h: homogeneous label (zero sum), only
// meaningful when has_h; for the hexagonal sets h is the natural coordinate.
struct IndexPoint {
  std::array<int, 2> k{};
  std::array<int, 3> h{};
  bool has_h = false;
  NodeClass cls = NodeClass::interior;

  static IndexPoint cart(int k1, int k2) { return {{k1, k2}, {}, false}; }
  static IndexPoint homo(int h1, int h2, int h3) { return {{h1, h2}, {h1, h2, h3}, true}; }
  // Homogeneous labels compare by label; otherwise by Cartesian index.
  friend bool operator==(const IndexPoint& a, const IndexPoint& b) {
    return (a.has_h && b.has_h) ? a.h == b.h : a.k == b.k;
  }
};

enum class Variant { open, closed, dagger_open, dagger_closed };
const char* variant_name(Variant v);
inline bool is_closed(Variant v) { return v == Variant::closed || v == Variant::dagger_closed; }
inline bool is_dagger(Variant v) { return v == Variant::dagger_open || v == Variant::dagger_closed; }

// Closed linear bound lo <= a·v <= hi on the coordinate vector v (h for
// homogeneous sets, (k1,k2,0) otherwise). Bounds with classifies=false cut the
// set but are not part of the region boundary.
struct IntBound {
  std::array<Rational, 3> a;
  Rational lo, hi;
  bool classifies = true;
};

struct IndexSet {
  std::string name;
  LatticeCase lcase{CaseTag::SquareSquare, 1};
  Variant variant = Variant::open;
  bool homogeneous = false;
  std::vector<IndexPoint> members;
  std::vector<IntBound> bounds;  // closed description used for classification

  std::size_t size() const { return members.size(); }
  bool contains(const IndexPoint& p) const;
  std::array<int, 3> count_classes() const;  // interior, edge, vertex
};

// Λ_N (open/closed) and Λ_N† (dagger_open/dagger_closed) from Def. 2.1.
IndexSet build_index_set(const LatticeCase& c, Variant v);
// Tags every member of a closed set by the number of saturated bounds.
IndexSet classify_nodes(IndexSet set);

// Exact node B^{-T}k (or A^{-T}k for dagger sets).
Vec2q index_point_vector(const LatticeCase& c, Variant v, const IndexPoint& k);

IndexPoint hat_map(const IndexPoint& k);

// Triangle and minimal-rule sets.
struct TriangleSets {
  IndexSet upsilon;               // Υn
  IndexSet upsilon_interior;      // Υn°
  IndexSet upsilon_dagger;        // Υn†
  IndexSet upsilon_dagger_sine;   // Υn† with k1, k2 > 0
  IndexSet triangle;              // {0 <= j1, j2, -j3 <= n}
  IndexSet xi;                    // Ξn of the Square–Rhombus minimal rule
};
TriangleSets triangle_index_sets(int n);

IndexSet upsilon(int n);
IndexSet upsilon_interior(int n);
IndexSet upsilon_dagger(int n);
IndexSet upsilon_dagger_sine(int n);
IndexSet hex_triangle(int n);
IndexSet xi_set(int n);
IndexSet x_star(int n);          // Xn* = {k in [-n,n]^2 : k1 = k2 mod 2}
IndexSet rs_triangle(int n);     // {0 <= k1, k2, k1 + k2 <= n}
IndexSet rr_triangle(int n);     // {a, b >= 0, a = b mod 2, a + b <= n - 1}

}  // namespace lattika
