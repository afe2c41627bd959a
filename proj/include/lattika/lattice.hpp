#pragma once
// Generator matrices, fundamental domains and homogeneous coordinates.
#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "lattika/qsqrt3.hpp"

namespace lattika {

using Point2 = std::array<double, 2>;

struct Vec2q {
  QSqrt3 x, y;
  friend Vec2q operator+(const Vec2q& a, const Vec2q& b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2q operator-(const Vec2q& a, const Vec2q& b) { return {a.x - b.x, a.y - b.y}; }
  friend bool operator==(const Vec2q&, const Vec2q&) = default;
  Point2 to_double() const { return {x.to_double(), y.to_double()}; }
};

struct Mat2 {
  std::array<QSqrt3, 4> e;  // row-major

  static Mat2 identity() { return {{QSqrt3(1), QSqrt3(0), QSqrt3(0), QSqrt3(1)}}; }
  const QSqrt3& operator()(int r, int c) const { return e[2 * r + c]; }
  QSqrt3 det() const { return e[0] * e[3] - e[1] * e[2]; }
  Mat2 transpose() const { return {{e[0], e[2], e[1], e[3]}}; }
  Mat2 inverse() const;
  Mat2 scaled(const QSqrt3& s) const { return {{e[0] * s, e[1] * s, e[2] * s, e[3] * s}}; }
  bool is_integer() const;
  friend Mat2 operator*(const Mat2& a, const Mat2& b);
  friend Vec2q operator*(const Mat2& a, const Vec2q& v) {
    return {a.e[0] * v.x + a.e[1] * v.y, a.e[2] * v.x + a.e[3] * v.y};
  }
  friend bool operator==(const Mat2&, const Mat2&) = default;
  std::array<double, 4> to_double() const {
    return {e[0].to_double(), e[1].to_double(), e[2].to_double(), e[3].to_double()};
  }
};

enum class CaseTag {
  SquareSquare,
  SquareRhombus,
  RhombicSquare,
  RhombicRhombic,
  HexHex,
  HexHexTranspose,
  HexH1,
  HexH2,
};

inline constexpr std::array<CaseTag, 8> kAllCases = {
    CaseTag::SquareSquare, CaseTag::SquareRhombus, CaseTag::RhombicSquare, CaseTag::RhombicRhombic,
    CaseTag::HexHex,       CaseTag::HexHexTranspose, CaseTag::HexH1,       CaseTag::HexH2};

const char* case_name(CaseTag t);
CaseTag parse_case(const std::string& s);
// Cases whose A is the hexagonal H and which are naturally written in
// homogeneous coordinates.
inline bool is_hex(CaseTag t) { return t == CaseTag::HexHex || t == CaseTag::HexHexTranspose; }

struct LatticeCase {
  CaseTag tag;
  int n;
};

struct GeneratorPair {
  Mat2 A, B;
  std::array<std::int64_t, 4> N;  // row-major, integer
  std::int64_t abs_det_N() const {
    std::int64_t d = N[0] * N[3] - N[1] * N[2];
    return d < 0 ? -d : d;
  }
};

GeneratorPair generator_matrices(const LatticeCase& c);

// Homogeneous coordinates t = E x on the plane t1+t2+t3 = 0.
struct HomoPoint {
  double t1 = 0, t2 = 0, t3 = 0;
};
struct HomoExact {
  Rational t1, t2, t3;
  friend bool operator==(const HomoExact&, const HomoExact&) = default;
  HomoPoint to_double() const { return {t1.to_double(), t2.to_double(), t3.to_double()}; }
};

HomoPoint to_homogeneous(const Point2& x);
Point2 from_homogeneous(const HomoPoint& t);
// Exact forms. to_homogeneous throws if the image is not rational.
HomoExact to_homogeneous(const Vec2q& x);
Vec2q from_homogeneous(const HomoExact& t);

// lo <= a·x < hi
struct Slab {
  QSqrt3 a1, a2, lo, hi;
};

// Intersection of half-open slabs; translates of the fundamental domains
// below partition the plane.
struct Domain {
  std::vector<Slab> slabs;

  bool contains(const Vec2q& x) const;
  bool contains_closed(const Vec2q& x) const;
  // Number of slab faces x lies on (x assumed in the closure).
  int saturated(const Vec2q& x) const;
  bool contains(const Point2& x) const;
  Domain scaled(const QSqrt3& s) const;
  // Vertices of the closure, counter-clockwise.
  std::vector<Point2> polygon() const;
};

Domain omega_A(CaseTag t);
Domain omega_B(const LatticeCase& c);

bool domain_contains(const LatticeCase& c, const Vec2q& x);
bool domain_contains(const LatticeCase& c, const HomoExact& t);
bool domain_contains(const LatticeCase& c, const Point2& x);

Vec2q reduce_mod_lattice(const LatticeCase& c, const Vec2q& x);
HomoExact reduce_mod_lattice(const LatticeCase& c, const HomoExact& t);
Point2 reduce_mod_lattice(const LatticeCase& c, const Point2& x);

struct TilingReport {
  int samples = 0;
  int max_cover_deviation = 0;
};

// domain_scale != 1 is a test hook: the domain is shrunk/grown about the origin.
TilingReport verify_tiling(const LatticeCase& c, int sample_count, std::uint64_t seed,
                           const Rational& domain_scale = Rational(1));

}  // namespace lattika
