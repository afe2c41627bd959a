#include "lattika/triangle_trig.hpp"

#include <cmath>
#include <numbers>

namespace lattika {

namespace {
constexpr double kPi = std::numbers::pi;
}

const std::array<GroupElementA2, 6>& a2_group() {
  static const std::array<GroupElementA2, 6> g = {{
      {{0, 1, 2}, 1},
      {{1, 2, 0}, 1},
      {{2, 0, 1}, 1},
      {{0, 2, 1}, -1},
      {{2, 1, 0}, -1},
      {{1, 0, 2}, -1},
  }};
  return g;
}

HomoPoint act(const GroupElementA2& s, const HomoPoint& t) {
  const double v[3] = {t.t1, t.t2, t.t3};
  return {s.sign * v[s.perm[0]], s.sign * v[s.perm[1]], s.sign * v[s.perm[2]]};
}

HomoExact act(const GroupElementA2& s, const HomoExact& t) {
  const Rational v[3] = {t.t1, t.t2, t.t3};
  Rational sg(s.sign);
  return {sg * v[s.perm[0]], sg * v[s.perm[1]], sg * v[s.perm[2]]};
}

IndexPoint act(const GroupElementA2& s, const IndexPoint& k) {
  return IndexPoint::homo(s.sign * k.h[s.perm[0]], s.sign * k.h[s.perm[1]], s.sign * k.h[s.perm[2]]);
}

bool in_cone(const IndexPoint& k) { return k.h[0] >= 0 && k.h[1] >= 0 && k.h[2] <= 0; }
bool in_cone_interior(const IndexPoint& k) { return k.h[0] > 0 && k.h[1] > 0 && k.h[2] < 0; }

namespace {

template <class Trig>
cplx three_term(const IndexPoint& k, const HomoPoint& t, Trig trig) {
  const double a = kPi / 3 * (k.h[1] - k.h[2]);
  const double b = k.h[0] * kPi;
  return (std::polar(1.0, a * (t.t2 - t.t3)) * trig(b * t.t1) +
          std::polar(1.0, a * (t.t3 - t.t1)) * trig(b * t.t2) +
          std::polar(1.0, a * (t.t1 - t.t2)) * trig(b * t.t3)) /
         3.0;
}

}  // namespace

cplx tc(const IndexPoint& k, const HomoPoint& t) {
  if (!in_cone(k)) throw Error(ErrorCode::IndexOutsideCone, "TC index outside k1,k2 >= 0 >= k3");
  return three_term(k, t, [](double v) { return std::cos(v); });
}

cplx ts(const IndexPoint& k, const HomoPoint& t) {
  if (!in_cone_interior(k)) throw Error(ErrorCode::IndexOutsideCone, "TS index outside the open cone");
  return three_term(k, t, [](double v) { return std::sin(v); });
}

HomoFn project_pm(HomoFn f, int sign) {
  return [f = std::move(f), sign](const HomoPoint& t) {
    cplx s = 0;
    for (const auto& g : a2_group()) s += static_cast<double>(sign < 0 ? g.sign : 1) * f(act(g, t));
    return s;
  };
}

Point2 steiner_map(const HomoPoint& t) {
  cplx z = tc(IndexPoint::homo(0, 1, -1), t);
  return {z.real(), z.imag()};
}

double steiner_jacobian(const HomoPoint& t) {
  // z = (1/3) sum exp(i theta_m), theta = (2pi/3)(t2-t3, t3-t1, t1-t2)
  const double c = 2 * kPi / 3, r3 = std::sqrt(3.0);
  const double th[3] = {c * (t.t2 - t.t3), c * (t.t3 - t.t1), c * (t.t1 - t.t2)};
  const double d1[3] = {c * r3 / 2, -c * r3, c * r3 / 2};  // d theta / d x1
  const double d2[3] = {c * 1.5, 0, -c * 1.5};           // d theta / d x2
  cplx z1 = 0, z2 = 0;
  for (int m = 0; m < 3; ++m) {
    cplx e = std::polar(1.0, th[m]) * cplx(0, 1.0 / 3);
    z1 += e * d1[m];
    z2 += e * d2[m];
  }
  return z1.real() * z2.imag() - z2.real() * z1.imag();
}

double bracket(double x, double y) {
  double r = x * x + y * y + 1;
  return -3 * r * r + 8 * (x * x * x - 3 * x * y * y) + 4;
}

double w_alpha(double x, double y, double alpha) {
  double b = bracket(x, y);
  if (b < 0) {
    if (alpha < 0) throw Error(ErrorCode::NegativeBracket, "w_alpha outside the hypocycloid");
    return 0;
  }
  return std::pow(4.0 / 27.0, alpha) * std::pow(kPi, 4 * alpha) * std::pow(b, alpha);
}

namespace {
double sine_product(const HomoPoint& t) {
  return std::sin(kPi * t.t1) * std::sin(kPi * t.t2) * std::sin(kPi * t.t3);
}
}  // namespace

double bracket_at(const HomoPoint& t) {
  double s = sine_product(t);
  return 64.0 / 27.0 * s * s;
}

double steiner_density(const HomoPoint& t, double alpha) {
  double s = std::abs(sine_product(t));
  double J = 8 * kPi * kPi / (9 * std::sqrt(3.0)) * s;
  if (alpha < 0 && s == 0) throw Error(ErrorCode::NegativeBracket, "w_alpha singular on the boundary");
  return J * std::pow(4.0 / 27.0, alpha) * std::pow(kPi, 4 * alpha) * std::pow(64.0 / 27.0 * s * s, alpha);
}

bool in_hypocycloid(double x, double y) { return bracket(x, y) >= 0 && x * x + y * y <= 1 + 1e-12; }

namespace {

cplx u_quotient(int k, int m, const HomoPoint& t) {
  return ts(IndexPoint::homo(k + 1, m - k + 1, -m - 2), t) / ts(IndexPoint::homo(1, 1, -2), t);
}

}  // namespace

cplx generalized_chebyshev(ChebKind kind, int k, int m, const HomoPoint& t) {
  if (k < 0 || k > m) throw Error(ErrorCode::IndexOutsideCone, "need 0 <= k <= m");
  if (kind == ChebKind::first) return tc(IndexPoint::homo(k, m - k, -m), t);
  if (std::abs(ts(IndexPoint::homo(1, 1, -2), t)) > 1e-6) return u_quotient(k, m, t);
  // Removable singularity: symmetric averages along a generic direction,
  // extrapolated twice (error O(h^6)).
  const double d1 = 0.6180339887498949, d2 = -0.2360679774997897;
  auto S = [&](double h) {
    HomoPoint p{t.t1 + h * d1, t.t2 + h * d2, t.t3 - h * (d1 + d2)};
    HomoPoint q{t.t1 - h * d1, t.t2 - h * d2, t.t3 + h * (d1 + d2)};
    return (u_quotient(k, m, p) + u_quotient(k, m, q)) / 2.0;
  };
  const double h = 2e-3;
  cplx a = S(h), b = S(h / 2), c = S(h / 4);
  cplx r1 = (4.0 * b - a) / 3.0, r2 = (4.0 * c - b) / 3.0;
  return (16.0 * r2 - r1) / 15.0;
}

Polygon delta_polygon() {
  return {{0, 0}, {2 / std::sqrt(3.0), 0}, {1 / std::sqrt(3.0), 1}};
}

}  // namespace lattika
