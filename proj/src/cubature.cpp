#include "lattika/cubature.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "lattika/parallel.hpp"

namespace lattika {

namespace {

constexpr double kPi = std::numbers::pi;

struct TagInfo {
  RuleTag tag;
  const char* name;
  CaseTag lcase;
};

const std::vector<TagInfo>& tag_table() {
  using C = CaseTag;
  static const std::vector<TagInfo> t = {
      {RuleTag::SS1, "SS1", C::SquareSquare},          {RuleTag::SS2a, "SS2a", C::SquareSquare},
      {RuleTag::SS2b, "SS2b", C::SquareSquare},        {RuleTag::SS3, "SS3", C::SquareSquare},
      {RuleTag::SS4, "SS4", C::SquareSquare},          {RuleTag::SS4Lobatto, "SS4-Lobatto", C::SquareSquare},
      {RuleTag::SS4W1, "SS4-W1", C::SquareSquare},     {RuleTag::SRcuba1, "SR-cuba1", C::SquareRhombus},
      {RuleTag::SRcubaT, "SR-cubaT", C::SquareRhombus}, {RuleTag::RS, "RS", C::RhombicSquare},
      {RuleTag::RS2, "RS2", C::RhombicSquare},         {RuleTag::RS2TS, "RS2-TS", C::RhombicSquare},
      {RuleTag::RR, "RR", C::RhombicRhombic},          {RuleTag::RR2, "RR2", C::RhombicRhombic},
      {RuleTag::RR2TS, "RR2-TS", C::RhombicRhombic},   {RuleTag::HH, "HH", C::HexHex},
      {RuleTag::HH2, "HH2", C::HexHex},                {RuleTag::HH3a1, "HH3a1", C::HexHex},
      {RuleTag::HH3a2, "HH3a2", C::HexHex},            {RuleTag::HHD, "HHD", C::HexHexTranspose},
      {RuleTag::HHT2, "HHT2", C::HexHexTranspose},     {RuleTag::HHW1, "HH-W1", C::HexHex},
      {RuleTag::HHT2W, "HHT2-W", C::HexHexTranspose},  {RuleTag::GaussWHalf, "Gauss-W½", C::HexHex},
  };
  return t;
}

const TagInfo& info(RuleTag t) {
  for (const auto& i : tag_table())
    if (i.tag == t) return i;
  throw Error(ErrorCode::UnknownTag, "unknown rule tag");
}

Polygon box(double lo, double hi) { return {{lo, lo}, {hi, lo}, {hi, hi}, {lo, hi}}; }
Polygon t_r() { return {{0, 0}, {1, 0}, {0, 1}}; }
Polygon t_s() { return {{1, -1}, {1, 1}, {-1, 1}}; }

Vec2q qpoint(const Rational& a, const Rational& b) { return {QSqrt3(a), QSqrt3(b)}; }

RuleNode exact_node(const Vec2q& x, NodeClass cls, const Rational& w, bool hex) {
  RuleNode r;
  r.exact = x;
  r.x = x.to_double();
  if (hex) r.homo = to_homogeneous(x);
  r.cls = cls;
  r.weight_q = w;
  r.weight = w.to_double();
  return r;
}

RuleNode plain_node(const Point2& x, NodeClass cls, double w) {
  RuleNode r;
  r.x = x;
  r.cls = cls;
  r.weight = w;
  return r;
}

RuleNode rational_weight_node(const Point2& x, NodeClass cls, const Rational& w) {
  RuleNode r = plain_node(x, cls, w.to_double());
  r.weight_q = w;
  return r;
}

NodeClass class_from_weight(const Rational& c) {
  if (c == Rational(1)) return NodeClass::interior;
  if (c == Rational(1, 2)) return NodeClass::edge;
  return NodeClass::vertex;
}

// Class of k in the closed square [lo, hi]^2 by the number of saturated sides.
NodeClass square_class(int k1, int k2, int lo, int hi) {
  int s = (k1 == lo || k1 == hi) + (k2 == lo || k2 == hi);
  return s == 0 ? NodeClass::interior : s == 1 ? NodeClass::edge : NodeClass::vertex;
}

Rational class_weight(NodeClass c, int interior, int edge, int vertex) {
  return Rational(c == NodeClass::interior ? interior : c == NodeClass::edge ? edge : vertex);
}

std::string num(int v) { return std::to_string(v); }

// ---- rule builders

CubatureRule base(RuleTag tag, int n) {
  CubatureRule r;
  r.tag = tag;
  r.lcase = info(tag).lcase;
  r.n = n;
  r.domain = "Omega";
  r.measure = "dx";
  r.outline = case_polygon(r.lcase);
  return r;
}

void from_discrete(CubatureRule& r, const DiscreteNodes& d) {
  bool hex = is_hex(r.lcase);
  for (std::size_t i = 0; i < d.nodes.size(); ++i)
    r.nodes.push_back(exact_node(d.nodes[i], d.starred ? class_from_weight(d.c[i]) : NodeClass::interior,
                                 d.c[i], hex));
  r.normalization = d.normalization;
}

CubatureRule build_ss(RuleTag tag, int n) {
  CubatureRule r = base(tag, n);
  int m = 2 * n - 1;
  r.exactness = {"H*", m, "exp(2 pi i k.x), |k1|,|k2| <= " + num(m)};
  r.normalization = Rational(1, 4LL * n * n);
  switch (tag) {
    case RuleTag::SS1:
      for (int a = -n; a < n; ++a)
        for (int b = -n; b < n; ++b)
          r.nodes.push_back(exact_node(qpoint(Rational(a, 2 * n), Rational(b, 2 * n)), NodeClass::interior, 1, false));
      break;
    case RuleTag::SS2a:
      for (int a = -n; a <= n; ++a)
        for (int b = -n; b <= n; ++b) {
          NodeClass c = square_class(a, b, -n, n);
          Rational w = c == NodeClass::interior ? Rational(1) : c == NodeClass::edge ? Rational(1, 2) : Rational(1, 4);
          r.nodes.push_back(exact_node(qpoint(Rational(a, 2 * n), Rational(b, 2 * n)), c, w, false));
        }
      break;
    case RuleTag::SS2b:
      for (int a = -n; a < n; ++a)
        for (int b = -n; b < n; ++b)
          r.nodes.push_back(exact_node(qpoint(Rational(2 * a + 1, 4 * n), Rational(2 * b + 1, 4 * n)),
                                       NodeClass::interior, 1, false));
      break;
    case RuleTag::SS3:
      r.domain = "[0,1/2]^2";
      r.outline = box(0, 0.5);
      r.normalization = Rational(1, 1LL * n * n);
      r.exactness = {"TC-square", m, "cos(2 pi k1 x1) cos(2 pi k2 x2), 0 <= k1,k2 <= " + num(m)};
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          r.nodes.push_back(exact_node(qpoint(Rational(2 * a + 1, 4 * n), Rational(2 * b + 1, 4 * n)),
                                       NodeClass::interior, 1, false));
      break;
    default: break;
  }
  return r;
}

CubatureRule build_ss_algebraic(RuleTag tag, int n) {
  CubatureRule r = base(tag, n);
  r.domain = "[-1,1]^2";
  r.measure = "W0";
  r.outline = box(-1, 1);
  int m = 2 * n - 1;
  r.exactness = {"PixPi", m, "x^a y^b, 0 <= a,b <= " + num(m)};
  if (tag == RuleTag::SS4) {
    r.normalization = Rational(1, 1LL * n * n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        r.nodes.push_back(rational_weight_node(
            {std::cos(kPi * (2 * a + 1) / (2 * n)), std::cos(kPi * (2 * b + 1) / (2 * n))}, NodeClass::interior, 1));
  } else if (tag == RuleTag::SS4Lobatto) {
    r.normalization = Rational(1, 4LL * n * n);
    for (int a = 0; a <= n; ++a)
      for (int b = 0; b <= n; ++b) {
        NodeClass c = square_class(a, b, 0, n);
        r.nodes.push_back(rational_weight_node({std::cos(kPi * a / n), std::cos(kPi * b / n)}, c,
                                               class_weight(c, 4, 2, 1)));
      }
  } else {  // SS4W1
    r.measure = "W1";
    r.exactness = {"PixPi", 2 * n - 3, "x^a y^b, 0 <= a,b <= " + num(2 * n - 3)};
    for (int a = 1; a < n; ++a)
      for (int b = 1; b < n; ++b) {
        double sa = std::sin(kPi * a / n), sb = std::sin(kPi * b / n);
        r.nodes.push_back(plain_node({std::cos(kPi * a / n), std::cos(kPi * b / n)}, NodeClass::interior,
                                     4.0 / (1.0 * n * n) * sa * sa * sb * sb));
      }
  }
  return r;
}

CubatureRule build_sr(RuleTag tag, int n) {
  CubatureRule r = base(tag, n);
  int m = 2 * n - 1;
  r.normalization = Rational(1, 2LL * n * n);
  if (tag == RuleTag::SRcuba1) {
    r.exactness = {"H*", m, "exp(2 pi i k.x), |k2 + k1|, |k2 - k1| <= " + num(m)};
    IndexSet xs = x_star(n);
    std::vector<Vec2q> pts;
    for (const auto& k : xs.members) pts.push_back(qpoint(Rational(k.k[0], 2 * n), Rational(k.k[1], 2 * n)));
    auto c = congruence_weights({r.lcase, n}, pts);
    for (std::size_t i = 0; i < pts.size(); ++i) r.nodes.push_back(exact_node(pts[i], class_from_weight(c[i]), c[i], false));
  } else {
    r.domain = "[-1,1]^2";
    r.measure = "W0";
    r.outline = box(-1, 1);
    r.exactness = {"Pi2", m, "x^a y^b, a + b <= " + num(m)};
    for (const auto& k : xi_set(n).members)
      r.nodes.push_back(rational_weight_node({std::cos(kPi * k.k[0] / n), std::cos(kPi * k.k[1] / n)}, k.cls,
                                             class_weight(k.cls, 4, 2, 1)));
  }
  return r;
}

CubatureRule build_rs(RuleTag tag, int n) {
  CubatureRule r = base(tag, n);
  int m = 2 * n - 1;
  if (tag == RuleTag::RS) {
    r.exactness = {"H*", m, "exp(pi i j.x), |j1|,|j2| <= " + num(m) + ", j1 = j2 mod 2"};
    from_discrete(r, discrete_nodes({r.lcase, n}, DiscreteVariant::starred));
    return r;
  }
  r.normalization = Rational(1, 2LL * n * n);
  auto lambda = [&](const IndexPoint& k) {
    if (k.cls == NodeClass::vertex) return k.k == std::array<int, 2>{0, 0} ? Rational(1) : Rational(1, 2);
    return class_weight(k.cls, 4, 2, 1);
  };
  IndexSet tri = rs_triangle(n);
  if (tag == RuleTag::RS2) {
    r.domain = "T_R";
    r.outline = t_r();
    r.exactness = {"T", m, "cos(pi j1 x1) cos(pi j2 x2), 0 <= j1,j2 <= " + num(m) + ", j1 = j2 mod 2"};
    for (const auto& k : tri.members)
      r.nodes.push_back(exact_node(qpoint(Rational(k.k[0], n), Rational(k.k[1], n)), k.cls, lambda(k), false));
  } else {
    r.domain = "T_S";
    r.measure = "W0";
    r.outline = t_s();
    r.exactness = {"Pi*", m, "x^a y^b, 0 <= a,b <= " + num(m) + ", a = b mod 2"};
    for (const auto& k : tri.members)
      r.nodes.push_back(rational_weight_node({std::cos(kPi * k.k[0] / n), std::cos(kPi * k.k[1] / n)}, k.cls, lambda(k)));
  }
  return r;
}

CubatureRule build_rr(RuleTag tag, int n) {
  if (n % 2 == 0) throw Error(ErrorCode::UnsupportedN, std::string(rule_name(tag)) + " requires odd n");
  CubatureRule r = base(tag, n);
  int m = 2 * n - 1;
  if (tag == RuleTag::RR) {
    r.exactness = {"H*", m, "exp(pi i ((k1+k2) x1 + (k2-k1) x2)), |k1|,|k2| <= " + num(n - 1)};
    from_discrete(r, discrete_nodes({r.lcase, n}, DiscreteVariant::open));
    return r;
  }
  r.normalization = Rational(1, 1LL * n * n);
  IndexSet tri = rr_triangle(n);
  if (tag == RuleTag::RR2) {
    r.domain = "T_R";
    r.outline = t_r();
    r.exactness = {"T-RR", m, "cos(pi j1 x1) cos(pi j2 x2), j1,j2 >= 0, j1 + j2 <= " + num(m) + ", j1 = j2 mod 2"};
    for (const auto& k : tri.members)
      r.nodes.push_back(exact_node(qpoint(Rational(k.k[0], n), Rational(k.k[1], n)), k.cls,
                                   class_weight(k.cls, 4, 2, 1), false));
  } else {
    r.domain = "T_S";
    r.measure = "W0";
    r.outline = t_s();
    r.exactness = {"Pi*-RR", m, "x^a y^b, a + b <= " + num(m) + ", a = b mod 2"};
    for (const auto& k : tri.members)
      r.nodes.push_back(rational_weight_node({std::cos(kPi * k.k[0] / n), std::cos(kPi * k.k[1] / n)}, k.cls,
                                             class_weight(k.cls, 4, 2, 1)));
  }
  return r;
}

HomoExact homo_over(const IndexPoint& j, int n) {
  return {Rational(j.h[0], n), Rational(j.h[1], n), Rational(j.h[2], n)};
}

Point2 steiner_exact(const HomoExact& t) { return steiner_map(t.to_double()); }

CubatureRule build_hex(RuleTag tag, int n) {
  CubatureRule r = base(tag, n);
  int m = 2 * n - 1;
  LatticeCase lc{r.lcase, n};
  switch (tag) {
    case RuleTag::HH:
    case RuleTag::HH3a1:
    case RuleTag::HH3a2: {
      r.exactness = {"H*", m, "exp(2 pi i k.t / 3), -" + num(m) + " <= k1,k2,-k3 <= " + num(m)};
      if (tag == RuleTag::HH) {
        from_discrete(r, discrete_nodes(lc, DiscreteVariant::starred));
        break;
      }
      int s = tag == RuleTag::HH3a1 ? 1 : -1;
      HomoExact a{Rational(s, 3 * n), Rational(s, 3 * n), Rational(-2 * s, 3 * n)};
      Vec2q av = from_homogeneous(a);
      auto d = discrete_nodes(lc, DiscreteVariant::open);
      for (const auto& x : d.nodes)
        r.nodes.push_back(exact_node(reduce_mod_lattice(lc, x + av), NodeClass::interior, 1, true));
      r.normalization = d.normalization;
      break;
    }
    case RuleTag::HHD:
      r.exactness = {"K*", m, "exp(2 pi i j.t / 3), -" + num(m) + " <= j2-j1, j1-j3, j2-j3 <= " + num(m)};
      from_discrete(r, discrete_nodes(lc, DiscreteVariant::starred));
      break;
    case RuleTag::HH2:
    case RuleTag::HHW1: {
      r.normalization = Rational(1, 3LL * n * n);
      bool img = tag == RuleTag::HHW1;
      for (const auto& j : hex_triangle(n).members) {
        Rational w = class_weight(j.cls, 6, 3, 1);
        HomoExact t = homo_over(j, n);
        r.nodes.push_back(img ? rational_weight_node(steiner_exact(t), j.cls, w)
                              : exact_node(from_homogeneous(t), j.cls, w, true));
      }
      if (img) {
        r.domain = "Delta*";
        r.measure = "w-1/2";
        r.outline.clear();
        r.exactness = {"Pi2", m, "x^a y^b, a + b <= " + num(m)};
      } else {
        r.domain = "Delta";
        r.outline = delta_polygon();
        r.exactness = {"TC", m, "TC_k, k in cone, -k3 <= " + num(m)};
      }
      break;
    }
    case RuleTag::HHT2:
    case RuleTag::HHT2W: {
      r.normalization = Rational(1, 1LL * n * n);
      bool img = tag == RuleTag::HHT2W;
      for (const auto& j : upsilon(n).members) {
        Rational w = class_weight(j.cls, 6, 3, 1);
        HomoExact t = homo_over(j, n);
        r.nodes.push_back(img ? rational_weight_node(steiner_exact(t), j.cls, w)
                              : exact_node(from_homogeneous(t), j.cls, w, true));
      }
      if (img) {
        r.domain = "Delta*";
        r.measure = "w-1/2";
        r.outline.clear();
        r.exactness = {"Pi2", n - 1, "x^a y^b, a + b <= " + num(n - 1)};
      } else {
        r.domain = "Delta";
        r.outline = delta_polygon();
        r.exactness = {"TC-dagger", m, "TC_k, k in Upsilon-dagger_" + num(m)};
      }
      break;
    }
    default: break;
  }
  return r;
}

CubatureRule build_gauss(int n) {
  CubatureRule r = base(RuleTag::GaussWHalf, n);
  r.domain = "Delta*";
  r.measure = "w1/2";
  r.outline.clear();
  int m = 2 * n - 1;
  r.exactness = {"Pi2", m, "x^a y^b, a + b <= " + num(m)};
  int N = n + 2;
  IndexPoint k112 = IndexPoint::homo(1, 1, -2);
  double tot = 0;
  for (int j1 = 1; j1 < N; ++j1)
    for (int j2 = 1; j1 + j2 < N; ++j2) {
      HomoPoint t{static_cast<double>(j1) / N, static_cast<double>(j2) / N, -static_cast<double>(j1 + j2) / N};
      double w = std::norm(ts(k112, t));
      tot += w;
      r.nodes.push_back(plain_node(steiner_map(t), NodeClass::interior, w));
    }
  for (auto& nd : r.nodes) nd.weight /= tot;
  return r;
}

// ---- verification plans

struct Plan {
  Polygon param;                                // oracle domain
  std::function<Point2(const Point2&)> map;     // param -> rule coordinates (null = identity)
  std::function<double(const Point2&)> density;  // null = 1
  double bandwidth = 0;
  std::size_t count = 0;
  std::vector<std::string> labels;
  Oracle::BatchFn eval;  // basis at rule coordinates
};

double dual_norm(CaseTag c, int k1, int k2) {
  auto AiT = generator_matrices({c, 1}).A.transpose().inverse().to_double();
  return 2 * kPi * std::hypot(AiT[0] * k1 + AiT[1] * k2, AiT[2] * k1 + AiT[3] * k2);
}

void exp_basis(Plan& p, CaseTag c, std::vector<std::array<int, 2>> ks) {
  int lo = 0, hi = 0;
  for (const auto& k : ks) {
    lo = std::min({lo, k[0], k[1]});
    hi = std::max({hi, k[0], k[1]});
    p.bandwidth = std::max(p.bandwidth, dual_norm(c, k[0], k[1]));
    p.labels.push_back("exp[" + num(k[0]) + "," + num(k[1]) + "]");
  }
  p.count = ks.size();
  auto Ai = generator_matrices({c, 1}).A.inverse().to_double();
  p.eval = [Ai, ks = std::move(ks), lo, hi](const Point2& x, cplx* out) {
    double u0 = Ai[0] * x[0] + Ai[1] * x[1], u1 = Ai[2] * x[0] + Ai[3] * x[1];
    std::vector<cplx> e0(hi - lo + 1), e1(hi - lo + 1);
    for (int k = lo; k <= hi; ++k) {
      e0[k - lo] = std::polar(1.0, 2 * kPi * k * u0);
      e1[k - lo] = std::polar(1.0, 2 * kPi * k * u1);
    }
    for (std::size_t i = 0; i < ks.size(); ++i) out[i] = e0[ks[i][0] - lo] * e1[ks[i][1] - lo];
  };
}

void cos_basis(Plan& p, double scale, std::vector<std::array<int, 2>> js) {
  for (const auto& j : js) {
    p.bandwidth = std::max(p.bandwidth, scale * std::hypot(j[0], j[1]));
    p.labels.push_back("cos[" + num(j[0]) + "," + num(j[1]) + "]");
  }
  p.count = js.size();
  p.eval = [scale, js = std::move(js)](const Point2& x, cplx* out) {
    for (std::size_t i = 0; i < js.size(); ++i) out[i] = std::cos(scale * js[i][0] * x[0]) * std::cos(scale * js[i][1] * x[1]);
  };
}

void tc_basis(Plan& p, std::vector<IndexPoint> ks) {
  for (const auto& k : ks) {
    p.bandwidth = std::max(p.bandwidth, dual_norm(CaseTag::HexHex, k.h[0], k.h[1]));
    p.labels.push_back("TC[" + num(k.h[0]) + "," + num(k.h[1]) + "," + num(k.h[2]) + "]");
  }
  p.count = ks.size();
  p.eval = [ks = std::move(ks)](const Point2& x, cplx* out) {
    HomoPoint t = to_homogeneous(x);
    for (std::size_t i = 0; i < ks.size(); ++i) out[i] = tc(ks[i], t);
  };
}

// Monomials x^a y^b; `freq` is the bandwidth of x and y as functions of the parameter.
void monomial_basis(Plan& p, std::vector<std::array<int, 2>> ab, double freq) {
  int top = 0;
  for (const auto& e : ab) {
    top = std::max({top, e[0], e[1]});
    p.bandwidth = std::max(p.bandwidth, freq * (e[0] + e[1]));
    p.labels.push_back("x^" + num(e[0]) + " y^" + num(e[1]));
  }
  p.count = ab.size();
  p.eval = [ab = std::move(ab), top](const Point2& y, cplx* out) {
    std::vector<double> px(top + 1, 1.0), py(top + 1, 1.0);
    for (int i = 1; i <= top; ++i) {
      px[i] = px[i - 1] * y[0];
      py[i] = py[i - 1] * y[1];
    }
    for (std::size_t i = 0; i < ab.size(); ++i) out[i] = px[ab[i][0]] * py[ab[i][1]];
  };
}

std::vector<std::array<int, 2>> grid_if(int lo, int hi, const std::function<bool(int, int)>& keep) {
  std::vector<std::array<int, 2>> v;
  for (int a = lo; a <= hi; ++a)
    for (int b = lo; b <= hi; ++b)
      if (keep(a, b)) v.push_back({a, b});
  return v;
}

Plan make_plan(RuleTag tag, int n) {
  Plan p;
  int m = 2 * n - 1;
  CaseTag c = info(tag).lcase;
  auto cos2pi = [](const Point2& u) { return Point2{std::cos(2 * kPi * u[0]), std::cos(2 * kPi * u[1])}; };
  auto cospi = [](const Point2& u) { return Point2{std::cos(kPi * u[0]), std::cos(kPi * u[1])}; };
  auto steiner = [](const Point2& u) { return steiner_map(to_homogeneous(u)); };
  double steiner_freq = dual_norm(CaseTag::HexHex, 0, 1);
  auto all = [](int, int) { return true; };
  switch (tag) {
    case RuleTag::SS1:
    case RuleTag::SS2a:
    case RuleTag::SS2b:
      p.param = case_polygon(c);
      exp_basis(p, c, grid_if(-m, m, all));
      break;
    case RuleTag::SS3:
      p.param = box(0, 0.5);
      cos_basis(p, 2 * kPi, grid_if(0, m, all));
      break;
    case RuleTag::SS4:
    case RuleTag::SS4Lobatto:
    case RuleTag::SS4W1: {
      p.param = box(0, 0.5);
      p.map = cos2pi;
      int d = tag == RuleTag::SS4W1 ? 2 * n - 3 : m;
      monomial_basis(p, grid_if(0, d, all), 2 * kPi);
      if (tag == RuleTag::SS4W1) {
        p.density = [](const Point2& u) {
          double a = std::sin(2 * kPi * u[0]), b = std::sin(2 * kPi * u[1]);
          return a * a * b * b;
        };
        p.bandwidth += 4 * kPi * std::sqrt(2.0);
      }
      break;
    }
    case RuleTag::SRcuba1:
    case RuleTag::RS:
      p.param = case_polygon(c);
      exp_basis(p, c, grid_if(-m, m, [m](int a, int b) { return std::abs(b + a) <= m && std::abs(b - a) <= m; }));
      break;
    case RuleTag::SRcubaT:
      p.param = box(0, 0.5);
      p.map = cos2pi;
      monomial_basis(p, grid_if(0, m, [m](int a, int b) { return a + b <= m; }), 2 * kPi);
      break;
    case RuleTag::RS2:
      p.param = t_r();
      cos_basis(p, kPi, grid_if(0, m, [](int a, int b) { return (a - b) % 2 == 0; }));
      break;
    case RuleTag::RS2TS:
      p.param = t_r();
      p.map = cospi;
      monomial_basis(p, grid_if(0, m, [](int a, int b) { return (a - b) % 2 == 0; }), kPi);
      break;
    case RuleTag::RR:
      p.param = case_polygon(c);
      exp_basis(p, c, grid_if(-(n - 1), n - 1, all));
      break;
    case RuleTag::RR2:
      p.param = t_r();
      cos_basis(p, kPi, grid_if(0, m, [m](int a, int b) { return (a - b) % 2 == 0 && a + b <= m; }));
      break;
    case RuleTag::RR2TS:
      p.param = t_r();
      p.map = cospi;
      monomial_basis(p, grid_if(0, m, [m](int a, int b) { return (a - b) % 2 == 0 && a + b <= m; }), kPi);
      break;
    case RuleTag::HH:
    case RuleTag::HH3a1:
    case RuleTag::HH3a2:
      p.param = case_polygon(c);
      exp_basis(p, c, grid_if(-m, m, [m](int a, int b) { return std::abs(a + b) <= m; }));
      break;
    case RuleTag::HHD: {
      p.param = case_polygon(c);
      std::vector<std::array<int, 2>> ks;
      for (const auto& k : build_index_set({c, m}, Variant::dagger_closed).members) ks.push_back(k.k);
      exp_basis(p, c, std::move(ks));
      break;
    }
    case RuleTag::HH2:
      p.param = delta_polygon();
      tc_basis(p, hex_triangle(m).members);
      break;
    case RuleTag::HHT2:
      p.param = delta_polygon();
      tc_basis(p, upsilon_dagger(m).members);
      break;
    case RuleTag::HHW1:
    case RuleTag::HHT2W:
    case RuleTag::GaussWHalf: {
      p.param = delta_polygon();
      p.map = steiner;
      int d = tag == RuleTag::HHT2W ? n - 1 : m;
      monomial_basis(p, grid_if(0, d, [d](int a, int b) { return a + b <= d; }), steiner_freq);
      double alpha = tag == RuleTag::GaussWHalf ? 0.5 : -0.5;
      p.density = [alpha](const Point2& u) { return steiner_density(to_homogeneous(u), alpha); };
      if (tag == RuleTag::GaussWHalf) p.bandwidth += 4 * steiner_freq;
      break;
    }
  }
  return p;
}

}  // namespace

const std::vector<RuleTag>& all_rule_tags() {
  static const std::vector<RuleTag> v = [] {
    std::vector<RuleTag> r;
    for (const auto& i : tag_table()) r.push_back(i.tag);
    return r;
  }();
  return v;
}

const char* rule_name(RuleTag t) { return info(t).name; }

RuleTag parse_rule(const std::string& s) {
  for (const auto& i : tag_table())
    if (s == i.name) return i.tag;
  if (s == "Gauss-W1/2" || s == "Gauss-Whalf") return RuleTag::GaussWHalf;
  throw Error(ErrorCode::UnknownTag, "unknown rule tag '" + s + "'");
}

CaseTag rule_case(RuleTag t) { return info(t).lcase; }

bool rule_supports(RuleTag t, int n) {
  if (n < 1) return false;
  if (t == RuleTag::RR || t == RuleTag::RR2 || t == RuleTag::RR2TS) return n % 2 == 1;
  if (t == RuleTag::SRcuba1 || t == RuleTag::SRcubaT || t == RuleTag::GaussWHalf || t == RuleTag::SS4W1) return n >= 2;
  return true;
}

bool is_algebraic(RuleTag t) {
  switch (t) {
    case RuleTag::SS4: case RuleTag::SS4Lobatto: case RuleTag::SS4W1: case RuleTag::SRcubaT:
    case RuleTag::RS2TS: case RuleTag::RR2TS: case RuleTag::HHW1: case RuleTag::HHT2W:
    case RuleTag::GaussWHalf:
      return true;
    default:
      return false;
  }
}

cplx CubatureRule::apply(const std::function<cplx(const Point2&)>& f) const {
  cplx s = 0;
  for (const auto& nd : nodes) s += nd.weight * f(nd.x);
  return s * normalization.to_double();
}

bool CubatureRule::rational_weights() const {
  for (const auto& nd : nodes)
    if (!nd.weight_q) return false;
  return true;
}

std::optional<Rational> CubatureRule::total_weight() const {
  if (!rational_weights()) return std::nullopt;
  Rational s(0);
  for (const auto& nd : nodes) s += *nd.weight_q;
  return s * normalization;
}

CubatureRule build_rule(RuleTag tag, int n) {
  if (!rule_supports(tag, n)) {
    if (tag == RuleTag::RR || tag == RuleTag::RR2 || tag == RuleTag::RR2TS)
      throw Error(ErrorCode::UnsupportedN, std::string(rule_name(tag)) + " requires odd n");
    throw Error(ErrorCode::UnsupportedN, std::string(rule_name(tag)) + " does not support n = " + num(n));
  }
  switch (tag) {
    case RuleTag::SS1: case RuleTag::SS2a: case RuleTag::SS2b: case RuleTag::SS3:
      return build_ss(tag, n);
    case RuleTag::SS4: case RuleTag::SS4Lobatto: case RuleTag::SS4W1:
      return build_ss_algebraic(tag, n);
    case RuleTag::SRcuba1: case RuleTag::SRcubaT:
      return build_sr(tag, n);
    case RuleTag::RS: case RuleTag::RS2: case RuleTag::RS2TS:
      return build_rs(tag, n);
    case RuleTag::RR: case RuleTag::RR2: case RuleTag::RR2TS:
      return build_rr(tag, n);
    case RuleTag::GaussWHalf:
      return build_gauss(n);
    default:
      return build_hex(tag, n);
  }
}

ExactnessReport verify_exactness(const CubatureRule& rule) {
  Plan p = make_plan(rule.tag, rule.n);
  ExactnessReport rep;
  rep.tested_space = rule.exactness.space + "_" + num(rule.exactness.degree);
  rep.basis_size = p.count;
  Oracle oracle(p.param, p.bandwidth);
  Oracle::BatchFn pulled = p.map ? Oracle::BatchFn([&](const Point2& u, cplx* out) { p.eval(p.map(u), out); })
                                 : p.eval;
  auto exact = oracle.weighted_means(p.count, pulled, p.density ? &p.density : nullptr);
  std::vector<cplx> approx(p.count, 0.0), v(p.count);
  double norm = rule.normalization.to_double();
  for (const auto& nd : rule.nodes) {
    p.eval(nd.x, v.data());
    for (std::size_t i = 0; i < p.count; ++i) approx[i] += nd.weight * norm * v[i];
  }
  for (std::size_t i = 0; i < p.count; ++i) {
    double e = std::abs(approx[i] - exact[i]);
    if (i == 0 || e > rep.max_error) {
      rep.max_error = e;
      rep.worst_function = p.labels[i];
    }
  }
  return rep;
}

double constant_error(const CubatureRule& rule) {
  return std::abs(rule.apply([](const Point2&) { return cplx(1); }) - 1.0);
}

CubatureRule chebyshev_image(const CubatureRule& rule) {
  RuleTag img;
  switch (rule.tag) {
    case RuleTag::SS3: img = RuleTag::SS4; break;
    case RuleTag::SRcuba1: img = RuleTag::SRcubaT; break;
    case RuleTag::RS2: img = RuleTag::RS2TS; break;
    case RuleTag::RR2: img = RuleTag::RR2TS; break;
    case RuleTag::HH2: img = RuleTag::HHW1; break;
    case RuleTag::HHT2: img = RuleTag::HHT2W; break;
    default:
      throw Error(ErrorCode::NoSubstitution, std::string("no Chebyshev substitution for ") + rule_name(rule.tag));
  }
  if (rule.tag == RuleTag::SRcuba1) return build_rule(img, rule.n);  // fold to Ξn, then map
  // Same weights, nodes pushed through the substitution.
  CubatureRule out = build_rule(img, rule.n);
  out.nodes.clear();
  for (const auto& nd : rule.nodes) {
    RuleNode r = nd;
    r.exact.reset();
    r.homo.reset();
    if (rule.tag == RuleTag::SS3)
      r.x = {std::cos(2 * kPi * nd.x[0]), std::cos(2 * kPi * nd.x[1])};
    else if (rule.tag == RuleTag::RS2 || rule.tag == RuleTag::RR2)
      r.x = {std::cos(kPi * nd.x[0]), std::cos(kPi * nd.x[1])};
    else
      r.x = steiner_map(nd.homo->to_double());
    out.nodes.push_back(r);
  }
  return out;
}

CubatureRule gaussian_rule_w_half(int n) { return build_rule(RuleTag::GaussWHalf, n); }

}  // namespace lattika
