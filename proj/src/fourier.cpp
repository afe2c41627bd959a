#include "lattika/fourier.hpp"

#include <cmath>
#include <map>
#include <numbers>

#include "lattika/parallel.hpp"

namespace lattika {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

Point2 dual_vector(const LatticeCase& c, const IndexPoint& k) {
  auto AiT = generator_matrices(c).A.transpose().inverse().to_double();
  return {AiT[0] * k.k[0] + AiT[1] * k.k[1], AiT[2] * k.k[0] + AiT[3] * k.k[1]};
}

cplx cis_turns(double turns) {
  turns -= std::nearbyint(turns);
  return std::polar(1.0, kTwoPi * turns);
}

}  // namespace

cplx unit_root(const Rational& q) {
  Rational r = q - Rational(q.floor());
  if (Rational(1, 2) < r) r -= Rational(1);
  // exact eighth-turn values avoid sin(pi) ~ 1e-16 residue
  if (r.sign() == 0) return {1, 0};
  if (r == Rational(1, 2)) return {-1, 0};
  if (r == Rational(1, 4)) return {0, 1};
  if (r == Rational(-1, 4)) return {0, -1};
  return std::polar(1.0, kTwoPi * static_cast<double>(r.num()) / static_cast<double>(r.den()));
}

cplx phi(const LatticeCase& c, const IndexPoint& k, const Point2& x) {
  Point2 w = dual_vector(c, k);
  return cis_turns(w[0] * x[0] + w[1] * x[1]);
}

cplx phi(const IndexPoint& k, const HomoPoint& t) {
  return cis_turns((k.h[0] * t.t1 + k.h[1] * t.t2 + k.h[2] * t.t3) / 3.0);
}

cplx phi(const LatticeCase& c, const IndexPoint& k, const Vec2q& x) {
  Mat2 AiT = generator_matrices(c).A.transpose().inverse();
  Vec2q w = AiT * Vec2q{QSqrt3(k.k[0]), QSqrt3(k.k[1])};
  QSqrt3 ph = w.x * x.x + w.y * x.y;
  if (ph.is_rational()) return unit_root(ph.rational_part());
  return cis_turns(ph.to_double());
}

// ---- TrigPoly

cplx TrigPoly::operator()(const Point2& x) const {
  cplx s = 0;
  for (const auto& [k, v] : coeffs) s += v * phi(lcase, IndexPoint::cart(k[0], k[1]), x);
  return s;
}

cplx TrigPoly::operator()(const Vec2q& x) const {
  cplx s = 0;
  for (const auto& [k, v] : coeffs) s += v * phi(lcase, IndexPoint::cart(k[0], k[1]), x);
  return s;
}

std::vector<cplx> TrigPoly::evaluate(const std::vector<Point2>& xs) const {
  std::vector<cplx> out(xs.size());
  if (coeffs.empty()) return out;
  auto Ai = generator_matrices(lcase).A.inverse().to_double();
  int lo0 = 0, hi0 = 0, lo1 = 0, hi1 = 0;
  bool first = true;
  for (const auto& [k, v] : coeffs) {
    if (first) { lo0 = hi0 = k[0]; lo1 = hi1 = k[1]; first = false; }
    lo0 = std::min(lo0, k[0]); hi0 = std::max(hi0, k[0]);
    lo1 = std::min(lo1, k[1]); hi1 = std::max(hi1, k[1]);
  }
  parallel_ranges(xs.size(), [&](std::size_t b, std::size_t e) {
    std::vector<cplx> e0(hi0 - lo0 + 1), e1(hi1 - lo1 + 1);
    for (std::size_t i = b; i < e; ++i) {
      // phase k^T A^{-1} x = k1 u1 + k2 u2
      double u0 = Ai[0] * xs[i][0] + Ai[1] * xs[i][1];
      double u1 = Ai[2] * xs[i][0] + Ai[3] * xs[i][1];
      for (int k = lo0; k <= hi0; ++k) e0[k - lo0] = cis_turns(k * u0);
      for (int k = lo1; k <= hi1; ++k) e1[k - lo1] = cis_turns(k * u1);
      cplx s = 0;
      for (const auto& [k, v] : coeffs) s += v * e0[k[0] - lo0] * e1[k[1] - lo1];
      out[i] = s;
    }
  });
  return out;
}

double TrigPoly::bandwidth() const {
  double bw = 0;
  for (const auto& [k, v] : coeffs) {
    Point2 w = dual_vector(lcase, IndexPoint::cart(k[0], k[1]));
    bw = std::max(bw, kTwoPi * std::hypot(w[0], w[1]));
  }
  return bw;
}

TrigPoly TrigPoly::conj_times(const TrigPoly& g) const {
  TrigPoly r{lcase, {}};
  for (const auto& [a, va] : coeffs)
    for (const auto& [b, vb] : g.coeffs) r.coeffs[{a[0] - b[0], a[1] - b[1]}] += va * std::conj(vb);
  return r;
}

// ---- discrete inner products

std::vector<Rational> congruence_weights(const LatticeCase& c, const std::vector<Vec2q>& nodes) {
  using Key = std::array<std::int64_t, 8>;
  auto key = [](const Vec2q& v) {
    return Key{v.x.rational_part().num(), v.x.rational_part().den(), v.x.sqrt3_part().num(),
               v.x.sqrt3_part().den(),     v.y.rational_part().num(), v.y.rational_part().den(),
               v.y.sqrt3_part().num(),     v.y.sqrt3_part().den()};
  };
  std::vector<Key> keys(nodes.size());
  parallel_for(nodes.size(), [&](std::size_t i) { keys[i] = key(reduce_mod_lattice(c, nodes[i])); }, 64);
  std::map<Key, int> count;
  for (const auto& k : keys) ++count[k];
  std::vector<Rational> w;
  w.reserve(nodes.size());
  for (const auto& k : keys) w.emplace_back(1, count[k]);
  return w;
}

DiscreteNodes discrete_nodes(const LatticeCase& c, DiscreteVariant v) {
  DiscreteNodes d;
  d.lcase = c;
  d.starred = v == DiscreteVariant::starred;
  Variant var = d.starred ? Variant::closed : Variant::open;
  IndexSet s = build_index_set(c, var);
  d.index = s.members;
  for (const auto& m : s.members) d.nodes.push_back(index_point_vector(c, var, m));
  if (d.starred)
    d.c = congruence_weights(c, d.nodes);
  else
    d.c.assign(d.nodes.size(), Rational(1));
  d.normalization = Rational(1, generator_matrices(c).abs_det_N());
  return d;
}

cplx discrete_inner(const DiscreteNodes& d, const std::vector<cplx>& f, const std::vector<cplx>& g) {
  if (f.size() != d.nodes.size() || g.size() != d.nodes.size())
    throw Error(ErrorCode::SampleCountMismatch, "expected one value per node");
  cplx s = 0;
  for (std::size_t i = 0; i < f.size(); ++i) s += d.c[i].to_double() * f[i] * std::conj(g[i]);
  return s * d.normalization.to_double();
}

cplx discrete_inner(const LatticeCase& c, DiscreteVariant v, const std::function<cplx(const Vec2q&)>& f,
                    const std::function<cplx(const Vec2q&)>& g) {
  DiscreteNodes d = discrete_nodes(c, v);
  std::vector<cplx> fv, gv;
  for (const auto& x : d.nodes) {
    fv.push_back(f(x));
    gv.push_back(g(x));
  }
  return discrete_inner(d, fv, gv);
}

cplx discrete_inner(const LatticeCase& c, DiscreteVariant v, const TrigPoly& f, const TrigPoly& g) {
  return discrete_inner(c, v, [&](const Vec2q& x) { return f(x); }, [&](const Vec2q& x) { return g(x); });
}

namespace {

void fill_report(InnerProductReport& r) {
  for (std::size_t i = 0; i < r.gram.size(); ++i)
    for (std::size_t j = 0; j < r.gram.size(); ++j) {
      if (i == j)
        r.max_diag_deviation = std::max(r.max_diag_deviation, std::abs(r.gram[i][j] - 1.0));
      else
        r.max_offdiag = std::max(r.max_offdiag, std::abs(r.gram[i][j]));
    }
}

}  // namespace

InnerProductReport gram_discrete(const LatticeCase& c, DiscreteVariant v) {
  DiscreteNodes d = discrete_nodes(c, v);
  IndexSet freq = build_index_set(c, Variant::dagger_open);
  const std::size_t F = freq.size(), M = d.nodes.size();
  std::vector<std::vector<cplx>> V(F, std::vector<cplx>(M));
  parallel_for(F, [&](std::size_t a) {
    for (std::size_t i = 0; i < M; ++i) V[a][i] = phi(c, freq.members[a], d.nodes[i]);
  }, 1);
  InnerProductReport r;
  r.gram.assign(F, std::vector<cplx>(F));
  parallel_for(F, [&](std::size_t a) {
    for (std::size_t b = 0; b < F; ++b) r.gram[a][b] = discrete_inner(d, V[a], V[b]);
  }, 1);
  fill_report(r);
  return r;
}

InnerProductReport gram_continuous(const LatticeCase& c) {
  IndexSet freq = build_index_set(c, Variant::dagger_open);
  TrigPoly probe{c, {}};
  for (const auto& m : freq.members) probe.coeffs[m.k] = 1;
  Oracle oracle(case_polygon(c.tag), 2 * probe.bandwidth());
  std::map<std::array<int, 2>, cplx> by_diff;
  for (const auto& a : freq.members)
    for (const auto& b : freq.members) by_diff[{a.k[0] - b.k[0], a.k[1] - b.k[1]}] = 0;
  for (auto& [d, val] : by_diff) {
    TrigPoly t{c, {{d, 1.0}}};
    val = oracle.mean_values(t.evaluate(oracle.coarse().x), t.evaluate(oracle.fine().x));
  }
  InnerProductReport r;
  r.gram.assign(freq.size(), std::vector<cplx>(freq.size()));
  for (std::size_t a = 0; a < freq.size(); ++a)
    for (std::size_t b = 0; b < freq.size(); ++b)
      r.gram[a][b] = by_diff[{freq.members[a].k[0] - freq.members[b].k[0],
                              freq.members[a].k[1] - freq.members[b].k[1]}];
  fill_report(r);
  return r;
}

// ---- oracle

void gauss_legendre(int m, std::vector<double>& x, std::vector<double>& w) {
  x.assign(m, 0);
  w.assign(m, 0);
  for (int i = 0; i < (m + 1) / 2; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (m + 0.5)), dp = 0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1, p1 = z;
      for (int k = 2; k <= m; ++k) {
        double p2 = ((2 * k - 1) * z * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = m * (z * p1 - p0) / (z * z - 1);
      double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    // recompute derivative at the converged root
    double p0 = 1, p1 = z;
    for (int k = 2; k <= m; ++k) {
      double p2 = ((2 * k - 1) * z * p1 - (k - 1) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = m * (z * p1 - p0) / (z * z - 1);
    double wt = 2 / ((1 - z * z) * dp * dp);
    x[i] = (1 - z) / 2;
    x[m - 1 - i] = (1 + z) / 2;
    w[i] = w[m - 1 - i] = wt / 2;
  }
}

double polygon_area(const Polygon& p) {
  double a = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto& u = p[i];
    const auto& v = p[(i + 1) % p.size()];
    a += u[0] * v[1] - u[1] * v[0];
  }
  return std::abs(a) / 2;
}

double polygon_diameter(const Polygon& p) {
  double d = 0;
  for (const auto& a : p)
    for (const auto& b : p) d = std::max(d, std::hypot(a[0] - b[0], a[1] - b[1]));
  return d;
}

namespace {

using Tri = std::array<Point2, 3>;

Point2 mid(const Point2& a, const Point2& b) { return {(a[0] + b[0]) / 2, (a[1] + b[1]) / 2}; }

void add_triangle(const Tri& t, double bandwidth, std::vector<Point2>& xs, std::vector<double>& ws) {
  double diam = std::max({std::hypot(t[1][0] - t[0][0], t[1][1] - t[0][1]),
                          std::hypot(t[2][0] - t[1][0], t[2][1] - t[1][1]),
                          std::hypot(t[0][0] - t[2][0], t[0][1] - t[2][1])});
  int m = 10 + 2 * static_cast<int>(std::ceil(bandwidth * diam));
  std::vector<double> gx, gw;
  gauss_legendre(m, gx, gw);
  double e1x = t[1][0] - t[0][0], e1y = t[1][1] - t[0][1];
  double e2x = t[2][0] - t[1][0], e2y = t[2][1] - t[1][1];
  double jac = std::abs(e1x * e2y - e1y * e2x);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      double s = gx[i], u = gx[j];
      xs.push_back({t[0][0] + s * e1x + s * u * e2x, t[0][1] + s * e1y + s * u * e2y});
      ws.push_back(gw[i] * gw[j] * s * jac);
    }
}

void subdivide(const Tri& t, int level, double bandwidth, std::vector<Point2>& xs, std::vector<double>& ws) {
  if (level == 0) {
    add_triangle(t, bandwidth, xs, ws);
    return;
  }
  Point2 a = mid(t[0], t[1]), b = mid(t[1], t[2]), c = mid(t[2], t[0]);
  subdivide({t[0], a, c}, level - 1, bandwidth, xs, ws);
  subdivide({a, t[1], b}, level - 1, bandwidth, xs, ws);
  subdivide({c, b, t[2]}, level - 1, bandwidth, xs, ws);
  subdivide({a, b, c}, level - 1, bandwidth, xs, ws);
}

}  // namespace

PolygonQuadrature::PolygonQuadrature(const Polygon& poly, double bandwidth, int level) {
  Point2 ctr{0, 0};
  for (const auto& p : poly) { ctr[0] += p[0]; ctr[1] += p[1]; }
  ctr[0] /= static_cast<double>(poly.size());
  ctr[1] /= static_cast<double>(poly.size());
  for (std::size_t i = 0; i < poly.size(); ++i)
    subdivide({ctr, poly[i], poly[(i + 1) % poly.size()]}, level, bandwidth, x, w);
  double tot = 0;
  for (double v : w) tot += v;
  for (double& v : w) v /= tot;
}

Oracle::Oracle(const Polygon& poly, double bandwidth) : coarse_(poly, bandwidth, 0), fine_(poly, bandwidth, 1) {}

namespace {

struct Sums {
  cplx fw = 0;
  double aw = 0, rw = 0;
};

Sums accumulate(const PolygonQuadrature& q, const std::function<cplx(const Point2&)>& F,
                const std::function<double(const Point2&)>* rho) {
  std::vector<Sums> part(q.x.size() / 512 + 1);
  parallel_for(part.size(), [&](std::size_t c) {
    Sums s;
    std::size_t b = c * 512, e = std::min(q.x.size(), b + 512);
    for (std::size_t i = b; i < e; ++i) {
      double r = rho ? (*rho)(q.x[i]) : 1.0;
      cplx v = F(q.x[i]);
      s.fw += q.w[i] * r * v;
      s.aw += q.w[i] * r * std::abs(v);
      s.rw += q.w[i] * r;
    }
    part[c] = s;
  }, 1);
  Sums t;
  for (const auto& s : part) {
    t.fw += s.fw;
    t.aw += s.aw;
    t.rw += s.rw;
  }
  return t;
}

cplx checked(const Sums& c, const Sums& f, double tol) {
  cplx ic = c.fw / c.rw, ifn = f.fw / f.rw;
  double scale = f.aw / f.rw;
  if (std::abs(ic - ifn) > tol * std::max(scale, 1e-300))
    throw Error(ErrorCode::OracleAccuracy, "refinement changed the integral by " + std::to_string(std::abs(ic - ifn)));
  return ifn;
}

}  // namespace

cplx Oracle::mean(const std::function<cplx(const Point2&)>& F) const {
  return checked(accumulate(coarse_, F, nullptr), accumulate(fine_, F, nullptr), tolerance);
}

cplx Oracle::weighted_mean(const std::function<cplx(const Point2&)>& F,
                           const std::function<double(const Point2&)>& rho) const {
  return checked(accumulate(coarse_, F, &rho), accumulate(fine_, F, &rho), tolerance);
}

cplx Oracle::mean_values(const std::vector<cplx>& cv, const std::vector<cplx>& fv) const {
  auto sum = [](const PolygonQuadrature& q, const std::vector<cplx>& v) {
    Sums s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      s.fw += q.w[i] * v[i];
      s.aw += q.w[i] * std::abs(v[i]);
      s.rw += q.w[i];
    }
    return s;
  };
  return checked(sum(coarse_, cv), sum(fine_, fv), tolerance);
}

namespace {

std::vector<Sums> accumulate_batch(const PolygonQuadrature& q, std::size_t count, const Oracle::BatchFn& F,
                                   const std::function<double(const Point2&)>* rho) {
  std::size_t chunks = q.x.size() / 256 + 1;
  std::vector<std::vector<Sums>> part(chunks, std::vector<Sums>(count));
  parallel_for(chunks, [&](std::size_t c) {
    std::vector<cplx> v(count);
    auto& s = part[c];
    std::size_t b = c * 256, e = std::min(q.x.size(), b + 256);
    for (std::size_t i = b; i < e; ++i) {
      double wr = q.w[i] * (rho ? (*rho)(q.x[i]) : 1.0);
      F(q.x[i], v.data());
      for (std::size_t k = 0; k < count; ++k) {
        s[k].fw += wr * v[k];
        s[k].aw += wr * std::abs(v[k]);
        s[k].rw += wr;
      }
    }
  }, 1);
  std::vector<Sums> t(count);
  for (const auto& p : part)
    for (std::size_t k = 0; k < count; ++k) {
      t[k].fw += p[k].fw;
      t[k].aw += p[k].aw;
      t[k].rw += p[k].rw;
    }
  return t;
}

}  // namespace

std::vector<cplx> Oracle::weighted_means(std::size_t count, const BatchFn& F,
                                         const std::function<double(const Point2&)>* rho) const {
  auto c = accumulate_batch(coarse_, count, F, rho);
  auto f = accumulate_batch(fine_, count, F, rho);
  std::vector<cplx> out(count);
  for (std::size_t k = 0; k < count; ++k) out[k] = checked(c[k], f[k], tolerance);
  return out;
}

cplx continuous_inner_oracle(const Polygon& domain, const TrigPoly& f, const TrigPoly& g) {
  TrigPoly h = f.conj_times(g);
  Oracle o(domain, h.bandwidth());
  return o.mean_values(h.evaluate(o.coarse().x), h.evaluate(o.fine().x));
}

Polygon case_polygon(CaseTag t) { return omega_A(t).polygon(); }

}  // namespace lattika
