#include "lattika/index_sets.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace lattika {

const char* class_name(NodeClass c) {
  switch (c) {
    case NodeClass::interior: return "interior";
    case NodeClass::edge: return "edge";
    case NodeClass::vertex: return "vertex";
  }
  return "?";
}

NodeClass parse_class(const std::string& s) {
  if (s == "interior") return NodeClass::interior;
  if (s == "edge") return NodeClass::edge;
  if (s == "vertex") return NodeClass::vertex;
  throw Error(ErrorCode::Parse, "unknown node class '" + s + "'");
}

const char* variant_name(Variant v) {
  switch (v) {
    case Variant::open: return "open";
    case Variant::closed: return "closed";
    case Variant::dagger_open: return "dagger_open";
    case Variant::dagger_closed: return "dagger_closed";
  }
  return "?";
}

namespace {

std::array<Rational, 3> coord_vector(const IndexSet& s, const IndexPoint& p) {
  if (s.homogeneous) return {Rational(p.h[0]), Rational(p.h[1]), Rational(p.h[2])};
  return {Rational(p.k[0]), Rational(p.k[1]), Rational(0)};
}

Rational dot(const std::array<Rational, 3>& a, const std::array<Rational, 3>& v) {
  return a[0] * v[0] + a[1] * v[1] + a[2] * v[2];
}

// Homogeneous label attached to Cartesian indices of the two hex cases.
void attach_label(const LatticeCase& c, Variant v, IndexPoint& p) {
  if (!is_hex(c.tag)) return;
  int k1 = p.k[0], k2 = p.k[1];
  p.has_h = true;
  if (c.tag == CaseTag::HexHexTranspose && !is_dagger(v))
    p.h = {2 * k1 - k2, 2 * k2 - k1, -k1 - k2};
  else
    p.h = {k1, k2, -k1 - k2};
}

// Enumerates integer homogeneous (or Cartesian) points in a box that satisfy
// the closed bounds, a strictness predicate and an optional filter.
IndexSet scan(std::string name, bool homogeneous, int lo, int hi, std::vector<IntBound> bounds,
              const std::function<bool(const IndexPoint&)>& keep) {
  IndexSet s;
  s.name = std::move(name);
  s.variant = Variant::closed;
  s.homogeneous = homogeneous;
  s.bounds = std::move(bounds);
  for (int a = lo; a <= hi; ++a)
    for (int b = lo; b <= hi; ++b) {
      IndexPoint p = homogeneous ? IndexPoint::homo(a, b, -a - b) : IndexPoint::cart(a, b);
      auto v = coord_vector(s, p);
      bool ok = std::all_of(s.bounds.begin(), s.bounds.end(), [&](const IntBound& bd) {
        Rational d = dot(bd.a, v);
        return bd.lo <= d && d <= bd.hi;
      });
      if (ok && (!keep || keep(p))) s.members.push_back(p);
    }
  return s;
}

IntBound hb(int a1, int a2, int a3, int lo, int hi, bool cls = true) {
  return {{Rational(a1), Rational(a2), Rational(a3)}, Rational(lo), Rational(hi), cls};
}

int mod(int a, int m) { return ((a % m) + m) % m; }

bool congruent_mod3(const IndexPoint& p) {
  return mod(p.h[0] - p.h[1], 3) == 0 && mod(p.h[1] - p.h[2], 3) == 0;
}

}  // namespace

bool IndexSet::contains(const IndexPoint& p) const {
  return std::find(members.begin(), members.end(), p) != members.end();
}

std::array<int, 3> IndexSet::count_classes() const {
  std::array<int, 3> c{0, 0, 0};
  for (const auto& m : members) ++c[static_cast<int>(m.cls)];
  return c;
}

Vec2q index_point_vector(const LatticeCase& c, Variant v, const IndexPoint& k) {
  auto g = generator_matrices(c);
  Mat2 M = is_dagger(v) ? g.A.transpose().inverse() : g.B.transpose().inverse();
  return M * Vec2q{QSqrt3(k.k[0]), QSqrt3(k.k[1])};
}

IndexSet build_index_set(const LatticeCase& c, Variant v) {
  auto g = generator_matrices(c);
  // k ∈ set iff M^{-1} k ∈ D, M = B^T (nodes) or A^T (frequencies)
  Mat2 M = is_dagger(v) ? g.A.transpose() : g.B.transpose();
  Domain D = is_dagger(v) ? omega_B(c) : omega_A(c.tag);
  Mat2 Minv = M.inverse();

  IndexSet s;
  s.name = std::string(is_dagger(v) ? "Lambda_dagger" : "Lambda") + (is_closed(v) ? "*" : "");
  s.lcase = c;
  s.variant = v;
  s.homogeneous = false;
  // Bounds rewritten in k: a·M^{-1}k = (M^{-T} a)·k, rational for all built-in cases.
  Mat2 MinvT = Minv.transpose();
  for (const auto& sl : D.slabs) {
    Vec2q a = MinvT * Vec2q{sl.a1, sl.a2};
    if (!a.x.is_rational() || !a.y.is_rational() || !sl.lo.is_rational() || !sl.hi.is_rational())
      throw std::logic_error("irrational index-space bound");
    s.bounds.push_back({{a.x.rational_part(), a.y.rational_part(), Rational(0)},
                        sl.lo.rational_part(), sl.hi.rational_part(), true});
  }
  double R = 0;
  auto Md = M.to_double();
  for (const auto& p : D.polygon()) {
    R = std::max(R, std::abs(Md[0] * p[0] + Md[1] * p[1]));
    R = std::max(R, std::abs(Md[2] * p[0] + Md[3] * p[1]));
  }
  const int box = static_cast<int>(std::ceil(R)) + 1;
  for (int a = -box; a <= box; ++a)
    for (int b = -box; b <= box; ++b) {
      IndexPoint p = IndexPoint::cart(a, b);
      Vec2q x = Minv * Vec2q{QSqrt3(a), QSqrt3(b)};
      bool in = is_closed(v) ? D.contains_closed(x) : D.contains(x);
      if (!in) continue;
      attach_label(c, v, p);
      s.members.push_back(p);
    }
  if (is_closed(v)) s = classify_nodes(std::move(s));
  return s;
}

IndexSet classify_nodes(IndexSet set) {
  for (auto& m : set.members) {
    if (!is_closed(set.variant)) {
      m.cls = NodeClass::interior;
      continue;
    }
    auto v = coord_vector(set, m);
    int sat = 0;
    for (const auto& bd : set.bounds) {
      if (!bd.classifies) continue;
      Rational d = dot(bd.a, v);
      if (d == bd.lo || d == bd.hi) ++sat;
    }
    m.cls = sat >= 2 ? NodeClass::vertex : (sat == 1 ? NodeClass::edge : NodeClass::interior);
  }
  return set;
}

IndexPoint hat_map(const IndexPoint& k) {
  return IndexPoint::homo(k.h[2] - k.h[1], k.h[0] - k.h[2], k.h[1] - k.h[0]);
}

// Homogeneous bounds below use v = (j1, j2, j3); "-j3 <= n" is 0 <= -j3 <= n etc.

IndexSet upsilon(int n) {
  auto s = scan("Upsilon", true, 0, n, {hb(1, 0, 0, 0, n), hb(0, 1, 0, 0, n), hb(0, 0, -1, 0, n)},
                congruent_mod3);
  return classify_nodes(std::move(s));
}

IndexSet upsilon_interior(int n) {
  auto s = scan("Upsilon_interior", true, 0, n,
                {hb(1, 0, 0, 1, n), hb(0, 1, 0, 1, n), hb(0, 0, -1, 0, n - 1)}, congruent_mod3);
  for (auto& m : s.members) m.cls = NodeClass::interior;
  return s;
}

// {k1, k2 >= 0, -k3 <= n, k2 - k3 <= n, k1 - k3 <= n}; the last two make
// -k3 <= n redundant, leaving a quadrilateral.
IndexSet upsilon_dagger(int n) {
  auto s = scan("Upsilon_dagger", true, 0, n,
                {hb(1, 0, 0, 0, n), hb(0, 1, 0, 0, n), hb(1, 0, -1, 0, n), hb(0, 1, -1, 0, n)}, {});
  return classify_nodes(std::move(s));
}

IndexSet upsilon_dagger_sine(int n) {
  auto s = scan("Upsilon_dagger_sine", true, 1, n,
                {hb(1, 0, 0, 1, n), hb(0, 1, 0, 1, n), hb(1, 0, -1, 0, n), hb(0, 1, -1, 0, n)}, {});
  for (auto& m : s.members) m.cls = NodeClass::interior;
  return s;
}

IndexSet hex_triangle(int n) {
  auto s = scan("Triangle", true, 0, n, {hb(1, 0, 0, 0, n), hb(0, 1, 0, 0, n), hb(0, 0, -1, 0, n)}, {});
  return classify_nodes(std::move(s));
}

IndexSet xi_set(int n) {
  auto s = scan("Xi", false, 0, n, {hb(1, 0, 0, 0, n), hb(0, 1, 0, 0, n)},
                [](const IndexPoint& p) { return mod(p.k[0] - p.k[1], 2) == 0; });
  return classify_nodes(std::move(s));
}

IndexSet x_star(int n) {
  auto s = scan("X*", false, -n, n, {hb(1, 0, 0, -n, n), hb(0, 1, 0, -n, n)},
                [](const IndexPoint& p) { return mod(p.k[0] - p.k[1], 2) == 0; });
  return classify_nodes(std::move(s));
}

IndexSet rs_triangle(int n) {
  auto s = scan("RS_triangle", false, 0, n, {hb(1, 0, 0, 0, n), hb(0, 1, 0, 0, n), hb(1, 1, 0, 0, n)}, {});
  return classify_nodes(std::move(s));
}

IndexSet rr_triangle(int n) {
  auto s = scan("RR_triangle", false, 0, n,
                {hb(1, 0, 0, 0, n), hb(0, 1, 0, 0, n), hb(1, 1, 0, 0, n - 1, false)},
                [](const IndexPoint& p) { return mod(p.k[0] - p.k[1], 2) == 0; });
  return classify_nodes(std::move(s));
}

TriangleSets triangle_index_sets(int n) {
  return {upsilon(n), upsilon_interior(n), upsilon_dagger(n), upsilon_dagger_sine(n), hex_triangle(n), xi_set(n)};
}

}  // namespace lattika
