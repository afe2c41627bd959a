#include "lattika/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace lattika {

Mat2 operator*(const Mat2& a, const Mat2& b) {
  return {{a.e[0] * b.e[0] + a.e[1] * b.e[2], a.e[0] * b.e[1] + a.e[1] * b.e[3],
           a.e[2] * b.e[0] + a.e[3] * b.e[2], a.e[2] * b.e[1] + a.e[3] * b.e[3]}};
}

Mat2 Mat2::inverse() const {
  QSqrt3 d = det();
  if (d.sign() == 0) throw std::domain_error("singular Mat2");
  return {{e[3] / d, -e[1] / d, -e[2] / d, e[0] / d}};
}

bool Mat2::is_integer() const {
  for (const auto& v : e)
    if (!v.is_rational() || !v.rational_part().is_integer()) return false;
  return true;
}

const char* case_name(CaseTag t) {
  switch (t) {
    case CaseTag::SquareSquare: return "SquareSquare";
    case CaseTag::SquareRhombus: return "SquareRhombus";
    case CaseTag::RhombicSquare: return "RhombicSquare";
    case CaseTag::RhombicRhombic: return "RhombicRhombic";
    case CaseTag::HexHex: return "HexHex";
    case CaseTag::HexHexTranspose: return "HexHexTranspose";
    case CaseTag::HexH1: return "HexH1";
    case CaseTag::HexH2: return "HexH2";
  }
  return "?";
}

CaseTag parse_case(const std::string& s) {
  for (CaseTag t : kAllCases)
    if (s == case_name(t)) return t;
  throw Error(ErrorCode::UnknownTag, "unknown case '" + s + "'");
}

namespace {

const QSqrt3 kS3 = QSqrt3::sqrt3();
const QSqrt3 kHalf = QSqrt3(Rational(1, 2));

Mat2 mat(QSqrt3 a, QSqrt3 b, QSqrt3 c, QSqrt3 d) { return {{a, b, c, d}}; }

const Mat2 kR = mat(1, 1, -1, 1);
const Mat2 kH = mat(kS3, 0, -1, 2);
const Mat2 kH1 = mat(1, 1, -2, 1);
const Mat2 kH2 = mat(1, 2, -1, 1);

Mat2 matrix_A(CaseTag t) {
  switch (t) {
    case CaseTag::SquareSquare:
    case CaseTag::SquareRhombus: return Mat2::identity();
    case CaseTag::RhombicSquare:
    case CaseTag::RhombicRhombic: return kR;
    case CaseTag::HexHex:
    case CaseTag::HexHexTranspose: return kH;
    case CaseTag::HexH1: return kH1;
    case CaseTag::HexH2: return kH2;
  }
  return Mat2::identity();
}

Domain square() {
  return {{{1, 0, -kHalf, kHalf}, {0, 1, -kHalf, kHalf}}};
}
Domain rhombus() {
  return {{{1, 1, -1, 1}, {-1, 1, -1, 1}}};
}
// -1 <= t1, t2, -t3 < 1
Domain hexagon() {
  return {{{kS3 * kHalf, -kHalf, -1, 1}, {0, 1, -1, 1}, {kS3 * kHalf, kHalf, -1, 1}}};
}
// -1 <= t2-t1, t1-t3, t2-t3 < 1 (hexagon rotated by 90 degrees)
Domain hexagon_rotated() {
  QSqrt3 th(Rational(3, 2));
  return {{{-kS3 * kHalf, th, -1, 1}, {kS3, 0, -1, 1}, {kS3 * kHalf, th, -1, 1}}};
}
// Voronoi cells of H1 Z^2 and H2 Z^2 over an obtuse superbase g1, g2, g1+g2.
Domain voronoi_h1() {
  QSqrt3 c(Rational(5, 2));
  return {{{1, 1, -1, 1}, {1, -2, -c, c}, {2, -1, -c, c}}};
}
Domain voronoi_h2() {
  QSqrt3 c(Rational(5, 2));
  return {{{1, -1, -1, 1}, {1, 2, -c, c}, {2, 1, -c, c}}};
}

bool in_slab(const Slab& s, const Vec2q& x, bool closed) {
  QSqrt3 v = s.a1 * x.x + s.a2 * x.y;
  if (v < s.lo) return false;
  return closed ? v <= s.hi : v < s.hi;
}

}  // namespace

GeneratorPair generator_matrices(const LatticeCase& c) {
  if (c.n < 1) throw Error(ErrorCode::UnsupportedN, "n must be >= 1");
  QSqrt3 n(c.n);
  Mat2 A = matrix_A(c.tag), B;
  switch (c.tag) {
    case CaseTag::SquareSquare: B = Mat2::identity().scaled(n * 2); break;
    case CaseTag::SquareRhombus: B = kR.scaled(n); break;
    case CaseTag::RhombicSquare: B = Mat2::identity().scaled(n); break;
    case CaseTag::RhombicRhombic: B = kR.scaled(n * kHalf); break;
    case CaseTag::HexHex: B = kH.scaled(n * kHalf); break;
    case CaseTag::HexHexTranspose: B = kH.transpose().inverse().scaled(n); break;
    case CaseTag::HexH1:
    case CaseTag::HexH2: B = Mat2::identity().scaled(n); break;
  }
  Mat2 N = B.transpose() * A;
  if (!N.is_integer()) throw Error(ErrorCode::NonIntegerN, case_name(c.tag));
  GeneratorPair g{A, B, {}};
  for (int i = 0; i < 4; ++i) g.N[i] = N.e[i].rational_part().num();
  if (g.abs_det_N() == 0) throw Error(ErrorCode::NonIntegerN, "singular N");
  return g;
}

HomoPoint to_homogeneous(const Point2& x) {
  const double h = std::sqrt(3.0) / 2;
  return {h * x[0] - x[1] / 2, x[1], -h * x[0] - x[1] / 2};
}

Point2 from_homogeneous(const HomoPoint& t) {
  return {(t.t1 - t.t3) / std::sqrt(3.0), t.t2};
}

HomoExact to_homogeneous(const Vec2q& x) {
  QSqrt3 t1 = kS3 * kHalf * x.x - kHalf * x.y;
  QSqrt3 t2 = x.y;
  if (!t1.is_rational() || !t2.is_rational())
    throw std::domain_error("point has no rational homogeneous coordinates");
  Rational a = t1.rational_part(), b = t2.rational_part();
  return {a, b, -a - b};
}

Vec2q from_homogeneous(const HomoExact& t) {
  // x1 = (t1 - t3)/sqrt3 = (t1 - t3) sqrt3 / 3
  return {QSqrt3(Rational(0), (t.t1 - t.t3) / Rational(3)), QSqrt3(t.t2)};
}

bool Domain::contains(const Vec2q& x) const {
  return std::all_of(slabs.begin(), slabs.end(), [&](const Slab& s) { return in_slab(s, x, false); });
}

bool Domain::contains_closed(const Vec2q& x) const {
  return std::all_of(slabs.begin(), slabs.end(), [&](const Slab& s) { return in_slab(s, x, true); });
}

int Domain::saturated(const Vec2q& x) const {
  int cnt = 0;
  for (const auto& s : slabs) {
    QSqrt3 v = s.a1 * x.x + s.a2 * x.y;
    if (v == s.lo || v == s.hi) ++cnt;
  }
  return cnt;
}

bool Domain::contains(const Point2& x) const {
  for (const auto& s : slabs) {
    double v = s.a1.to_double() * x[0] + s.a2.to_double() * x[1];
    if (v < s.lo.to_double() || v >= s.hi.to_double()) return false;
  }
  return true;
}

Domain Domain::scaled(const QSqrt3& f) const {
  Domain d = *this;
  for (auto& s : d.slabs) {
    s.lo *= f;
    s.hi *= f;
  }
  return d;
}

std::vector<Point2> Domain::polygon() const {
  struct Line { double a, b, c; };  // a x + b y = c
  std::vector<Line> lines;
  for (const auto& s : slabs) {
    lines.push_back({s.a1.to_double(), s.a2.to_double(), s.lo.to_double()});
    lines.push_back({s.a1.to_double(), s.a2.to_double(), s.hi.to_double()});
  }
  double scale = 0;
  for (const auto& l : lines) scale = std::max(scale, std::abs(l.c));
  const double tol = 1e-12 * std::max(1.0, scale);
  std::vector<Point2> pts;
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      double d = lines[i].a * lines[j].b - lines[i].b * lines[j].a;
      if (std::abs(d) < 1e-14) continue;
      Point2 p{(lines[i].c * lines[j].b - lines[i].b * lines[j].c) / d,
               (lines[i].a * lines[j].c - lines[i].c * lines[j].a) / d};
      bool ok = true;
      for (const auto& s : slabs) {
        double v = s.a1.to_double() * p[0] + s.a2.to_double() * p[1];
        if (v < s.lo.to_double() - tol || v > s.hi.to_double() + tol) ok = false;
      }
      if (!ok) continue;
      bool dup = false;
      for (const auto& q : pts)
        if (std::abs(q[0] - p[0]) < tol && std::abs(q[1] - p[1]) < tol) dup = true;
      if (!dup) pts.push_back(p);
    }
  double cx = 0, cy = 0;
  for (const auto& p : pts) { cx += p[0]; cy += p[1]; }
  cx /= static_cast<double>(pts.size());
  cy /= static_cast<double>(pts.size());
  std::sort(pts.begin(), pts.end(), [&](const Point2& a, const Point2& b) {
    return std::atan2(a[1] - cy, a[0] - cx) < std::atan2(b[1] - cy, b[0] - cx);
  });
  return pts;
}

Domain omega_A(CaseTag t) {
  switch (t) {
    case CaseTag::SquareSquare:
    case CaseTag::SquareRhombus: return square();
    case CaseTag::RhombicSquare:
    case CaseTag::RhombicRhombic: return rhombus();
    case CaseTag::HexHex:
    case CaseTag::HexHexTranspose: return hexagon();
    case CaseTag::HexH1: return voronoi_h1();
    case CaseTag::HexH2: return voronoi_h2();
  }
  return square();
}

Domain omega_B(const LatticeCase& c) {
  QSqrt3 n(c.n);
  switch (c.tag) {
    case CaseTag::SquareSquare: return square().scaled(n * 2);
    case CaseTag::SquareRhombus: return rhombus().scaled(n);
    case CaseTag::RhombicSquare: return square().scaled(n);
    case CaseTag::RhombicRhombic: return rhombus().scaled(n * kHalf);
    case CaseTag::HexHex: return hexagon().scaled(n * kHalf);
    case CaseTag::HexHexTranspose: return hexagon_rotated().scaled(n * kHalf);
    case CaseTag::HexH1:
    case CaseTag::HexH2: return square().scaled(n);
  }
  return square();
}

bool domain_contains(const LatticeCase& c, const Vec2q& x) { return omega_A(c.tag).contains(x); }

bool domain_contains(const LatticeCase& c, const HomoExact& t) {
  if (is_hex(c.tag)) {
    // -1 <= t1, t2, -t3 < 1, decided directly on the homogeneous triple
    auto in = [](const Rational& v) { return Rational(-1) <= v && v < Rational(1); };
    return in(t.t1) && in(t.t2) && in(-t.t3);
  }
  return domain_contains(c, from_homogeneous(t));
}

bool domain_contains(const LatticeCase& c, const Point2& x) { return omega_A(c.tag).contains(x); }

namespace {

template <class Member, class Shift>
bool search_translates(const std::array<double, 2>& u, Member&& member, Shift&& shift) {
  const long k0 = static_cast<long>(std::floor(u[0])), k1 = static_cast<long>(std::floor(u[1]));
  for (long r = 0; r <= 4; ++r)
    for (long a = -r; a <= r; ++a)
      for (long b = -r; b <= r; ++b) {
        if (std::max(std::labs(a), std::labs(b)) != r) continue;
        if (member(k0 + a, k1 + b)) {
          shift(k0 + a, k1 + b);
          return true;
        }
      }
  return false;
}

}  // namespace

Vec2q reduce_mod_lattice(const LatticeCase& c, const Vec2q& x) {
  Mat2 A = matrix_A(c.tag);
  Domain om = omega_A(c.tag);
  if (om.contains(x)) return x;
  Vec2q u = A.inverse() * x;
  Vec2q out;
  auto translate = [&](long a, long b) { return x - A * Vec2q{QSqrt3(a), QSqrt3(b)}; };
  bool ok = search_translates(
      u.to_double(), [&](long a, long b) { return om.contains(translate(a, b)); },
      [&](long a, long b) { out = translate(a, b); });
  if (!ok) throw Error(ErrorCode::NoReduction, "search radius exhausted");
  return out;
}

HomoExact reduce_mod_lattice(const LatticeCase& c, const HomoExact& t) {
  return to_homogeneous(reduce_mod_lattice(c, from_homogeneous(t)));
}

Point2 reduce_mod_lattice(const LatticeCase& c, const Point2& x) {
  auto A = matrix_A(c.tag).to_double();
  auto Ai = matrix_A(c.tag).inverse().to_double();
  Domain om = omega_A(c.tag);
  if (om.contains(x)) return x;
  Point2 u{Ai[0] * x[0] + Ai[1] * x[1], Ai[2] * x[0] + Ai[3] * x[1]};
  auto translate = [&](long a, long b) {
    return Point2{x[0] - A[0] * a - A[1] * b, x[1] - A[2] * a - A[3] * b};
  };
  Point2 out{};
  bool ok = search_translates(
      u, [&](long a, long b) { return om.contains(translate(a, b)); },
      [&](long a, long b) { out = translate(a, b); });
  if (!ok) throw Error(ErrorCode::NoReduction, "search radius exhausted");
  return out;
}

TilingReport verify_tiling(const LatticeCase& c, int sample_count, std::uint64_t seed,
                           const Rational& domain_scale) {
  Mat2 A = matrix_A(c.tag);
  Domain om = omega_A(c.tag).scaled(QSqrt3(domain_scale));
  std::mt19937_64 rng(seed);
  TilingReport rep;
  for (int s = 0; s < sample_count; ++s) {
    // Points are sampled in lattice coordinates u (x = A u). Small
    // denominators land on domain faces and vertices often, which is where
    // the half-open convention actually gets exercised.
    std::int64_t q = (s % 2 == 0) ? std::uniform_int_distribution<std::int64_t>(1, 12)(rng)
                                  : (std::int64_t{1} << 20);
    std::uniform_int_distribution<std::int64_t> pd(-3 * q, 3 * q);
    Rational u0(pd(rng), q), u1(pd(rng), q);
    int count = 0;
    for (std::int64_t a = u0.floor() - 3; a <= u0.floor() + 3; ++a)
      for (std::int64_t b = u1.floor() - 3; b <= u1.floor() + 3; ++b)
        if (om.contains(A * Vec2q{QSqrt3(u0 - a), QSqrt3(u1 - b)})) ++count;
    rep.max_cover_deviation = std::max(rep.max_cover_deviation, std::abs(count - 1));
    ++rep.samples;
  }
  return rep;
}

}  // namespace lattika
