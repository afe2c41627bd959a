#include <random>

#include "doctest.h"
#include "lattika/interpolation.hpp"

using namespace lattika;

namespace {

HomoPoint random_t(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1, 1);
  double a = u(rng), b = u(rng);
  return {a, b, -a - b};
}

HomoPoint over(const IndexPoint& j, int n) {
  return {static_cast<double>(j.h[0]) / n, static_cast<double>(j.h[1]) / n, static_cast<double>(j.h[2]) / n};
}

// (k - j)/n is a period of the hexagonal lattice: integer with all coordinates congruent mod 3.
bool congruent(const IndexPoint& k, const IndexPoint& j, int n) {
  int l[3];
  for (int i = 0; i < 3; ++i) {
    int d = k.h[i] - j.h[i];
    if (d % n != 0) return false;
    l[i] = d / n;
  }
  return ((l[0] - l[1]) % 3 == 0) && ((l[1] - l[2]) % 3 == 0);
}

}  // namespace

TEST_CASE("generic interpolation") {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g;
  for (CaseTag t : kAllCases)
    for (int n = 1; n <= 5; ++n) {
      LatticeCase c{t, n};
      auto nodes = interp_nodes(c);
      INFO(case_name(t) << " n=" << n);
      // constant
      auto p1 = interp_generic(c, std::vector<cplx>(nodes.size(), 1.0));
      for (const auto& [k, v] : p1.coeffs) CHECK(std::abs(v - (k == std::array<int, 2>{0, 0} ? 1.0 : 0.0)) < 1e-13);
      // random samples reproduce at the nodes
      std::vector<cplx> f(nodes.size());
      for (auto& v : f) v = {g(rng), g(rng)};
      auto p = interp_generic(c, f);
      double res = 0;
      for (std::size_t j = 0; j < nodes.size(); ++j) res = std::max(res, std::abs(p(nodes[j]) - f[j]));
      CHECK(res < 1e-11);
      // kernel form agrees off the nodes
      Point2 x{0.123, -0.0456};
      cplx ker = 0;
      for (std::size_t j = 0; j < nodes.size(); ++j) {
        Point2 xj = nodes[j].to_double();
        ker += f[j] * psi_kernel(c, {x[0] - xj[0], x[1] - xj[1]});
      }
      CHECK(std::abs(ker - p(x)) < 1e-10);
    }
  // a basis function is recovered exactly
  LatticeCase c{CaseTag::HexHex, 3};
  auto nodes = interp_nodes(c);
  auto freqs = build_index_set(c, Variant::dagger_open);
  const auto& k = freqs.members[5];
  std::vector<cplx> f;
  for (const auto& x : nodes) f.push_back(phi(c, k, x));
  auto p = interp_generic(c, f);
  for (const auto& [kk, v] : p.coeffs) CHECK(std::abs(v - (kk == k.k ? 1.0 : 0.0)) < 1e-12);
  CHECK_THROWS_AS(interp_generic(c, {1.0, 2.0}), Error);
}

TEST_CASE("starred hexagon sets") {
  for (int n = 1; n <= 9; ++n) {
    const auto& s = starred_hex_sets(n);
    std::size_t want = n % 3 == 1 ? n * n + n - 1 : n * n + n + 1;
    CHECK(s.nodes.size() == want);
    CHECK(s.freqs.size() == want);
    Rational tot(0);
    for (const auto& w : s.freq_weight) tot += w;
    CHECK(tot == Rational(n * n));
    // node label j gives the node j/n
    auto d = discrete_nodes({CaseTag::HexHexTranspose, n}, DiscreteVariant::starred);
    for (std::size_t i = 0; i < d.nodes.size(); ++i) {
      HomoExact t = to_homogeneous(d.nodes[i]);
      CHECK(t == HomoExact{Rational(s.nodes[i].h[0], n), Rational(s.nodes[i].h[1], n), Rational(s.nodes[i].h[2], n)});
    }
  }
}

TEST_CASE("kernel Phi_n") {
  std::mt19937_64 rng(11);
  for (int n : {1, 2, 3, 4, 6}) CHECK(std::abs(phi_n_kernel({0, 0, 0}, n, KernelMethod::direct_sum) - 1.0) < 1e-13);
  CHECK(std::abs(phi_n_kernel({0, 0, 0}, 6, KernelMethod::compact) - 1.0) < 1e-13);
  for (int n : {3, 6, 9}) {
    double diff = 0, imag = 0;
    for (int i = 0; i < 1000; ++i) {
      HomoPoint t = random_t(rng);
      cplx d = phi_n_direct(t, n);
      imag = std::max(imag, std::abs(d.imag()));
      diff = std::max(diff, std::abs(phi_n_kernel(t, n, KernelMethod::compact) - d.real()));
    }
    INFO("n=" << n);
    CHECK(diff < 1e-9);
    CHECK(imag < 1e-12);
  }
  // the fallback handles the singular lines, including the vertices
  for (HomoPoint t : {HomoPoint{0, 0.3, -0.3}, HomoPoint{1, 0, -1}, HomoPoint{1.0 / 3, 1.0 / 3, -2.0 / 3}})
    CHECK(std::abs(phi_n_kernel(t, 6, KernelMethod::compact) - phi_n_direct(t, 6).real()) < 1e-12);
  try {
    phi_n_kernel({0.1, 0.2, -0.3}, 4, KernelMethod::compact);
    FAIL("expected NotMultipleOf3");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotMultipleOf3);
  }
  // Φn((k - j)/n) is 1 on congruent pairs and 0 otherwise
  for (int n : {3, 4, 6}) {
    const auto& s = starred_hex_sets(n);
    double err = 0;
    for (const auto& k : s.nodes)
      for (const auto& j : s.nodes) {
        HomoPoint a = over(k, n), b = over(j, n);
        double v = phi_n_kernel({a.t1 - b.t1, a.t2 - b.t2, a.t3 - b.t3}, n, KernelMethod::direct_sum);
        err = std::max(err, std::abs(v - (congruent(k, j, n) ? 1.0 : 0.0)));
      }
    CHECK(err < 1e-12);
  }
}

TEST_CASE("Dirichlet kernel Theta_n") {
  std::mt19937_64 rng(5);
  for (int n : {3, 6, 9}) CHECK(std::abs(dirichlet_theta(n, {0, 0, 0}) - double(n * n + n + 1)) < 1e-11);
  for (int n : {4, 6}) {
    double part = 0, sym = 0, sum0 = 0;
    for (int i = 0; i < 100; ++i) {
      HomoPoint t = random_t(rng);
      cplx th = dirichlet_theta(n, t);
      auto p = dirichlet_theta_parts(n, t);
      part = std::max(part, std::abs(p[0] + p[1] + p[2] - th));
      sym = std::max(sym, std::abs(dirichlet_theta(n, {-t.t1, -t.t2, -t.t3}) - std::conj(th)));
      // closed form of the class j ≡ 0 (mod 3)
      double a = 1, b = 1;
      for (double v : {t.t1, t.t2, t.t3}) {
        a *= std::sin(std::numbers::pi * ((n + 3) / 3) * v) / std::sin(std::numbers::pi * v);
        b *= std::sin(std::numbers::pi * (n / 3) * v) / std::sin(std::numbers::pi * v);
      }
      sum0 = std::max(sum0, std::abs(p[0] - (a - b)));
    }
    INFO("n=" << n);
    CHECK(part < 1e-11);
    CHECK(sym < 1e-11);
    CHECK(sum0 < 1e-10);
  }
}

TEST_CASE("starred near-interpolation") {
  std::mt19937_64 rng(9);
  std::normal_distribution<double> g;
  for (int n : {3, 4, 6}) {
    const auto& s = starred_hex_sets(n);
    std::vector<cplx> f(s.nodes.size());
    for (auto& v : f) v = {g(rng), g(rng)};
    StarredHexInterpolant I(n, f);
    double err = 0;
    for (std::size_t j = 0; j < s.nodes.size(); ++j) {
      cplx want = 0;
      for (std::size_t k = 0; k < s.nodes.size(); ++k)
        if (congruent(s.nodes[k], s.nodes[j], n)) want += f[k];
      if (s.nodes[j].cls == NodeClass::interior) CHECK(std::abs(want - f[j]) == 0.0);
      err = std::max(err, std::abs(I(over(s.nodes[j], n)) - want));
    }
    INFO("n=" << n);
    CHECK(err < 1e-10);
  }
  CHECK_THROWS_AS(StarredHexInterpolant(3, {1.0}), Error);
}

TEST_CASE("lambda-hat table") {
  for (int n : {6, 12}) {
    for (const auto& k : upsilon_dagger(n).members) {
      int k1 = k.h[0], k2 = k.h[1], k3 = k.h[2];
      Rational want(3);
      if (k1 == 0 && k2 == 0) want = Rational(1);
      else if (3 * k1 == n && 3 * k2 == n) want = Rational(2);
      else if ((2 * k1 == n && k2 == 0) || (k1 == 0 && 2 * k2 == n)) want = Rational(3, 2);
      else if (k1 > 0 && k2 > 0 && n + k3 - k1 > 0 && n + k3 - k2 > 0) want = Rational(6);
      INFO("n=" << n << " k=" << k1 << "," << k2);
      CHECK(lambda_hat(k, n) == want);
    }
  }
}

TEST_CASE("triangle interpolation") {
  std::mt19937_64 rng(21);
  std::normal_distribution<double> g;
  for (auto flavor : {TriangleFlavor::sine, TriangleFlavor::cosine})
    for (int n : {3, 4, 5, 6}) {
      auto nodes = TriangleInterpolant::node_set(flavor, n).members;
      TriangleInterpolant L(flavor, n, std::vector<cplx>(nodes.size(), 0.0));
      double err = 0;
      for (std::size_t l = 0; l < nodes.size(); ++l) {
        auto c = L.cardinal(over(nodes[l], n));
        for (std::size_t j = 0; j < c.size(); ++j) err = std::max(err, std::abs(c[j] - (j == l ? 1.0 : 0.0)));
      }
      INFO("n=" << n << " sine=" << (flavor == TriangleFlavor::sine));
      CHECK(err < 1e-10);
      std::vector<cplx> f(nodes.size());
      for (auto& v : f) v = {g(rng), g(rng)};
      TriangleInterpolant Lf(flavor, n, f);
      double res = 0;
      for (std::size_t j = 0; j < nodes.size(); ++j) res = std::max(res, std::abs(Lf(over(nodes[j], n)) - f[j]));
      CHECK(res < 1e-10);
    }
  // constants
  auto nodes = upsilon(6).members;
  TriangleInterpolant one(TriangleFlavor::cosine, 6, std::vector<cplx>(nodes.size(), 1.0));
  for (HomoPoint t : {HomoPoint{0.2, 0.3, -0.5}, HomoPoint{0.7, 0.1, -0.8}}) CHECK(std::abs(one(t) - 1.0) < 1e-12);
  CHECK_THROWS_AS(TriangleInterpolant(TriangleFlavor::sine, 6, {1.0}), Error);
}

TEST_CASE("cosine interpolant reproduces its space modulo aliasing pairs") {
  std::mt19937_64 rng(4);
  std::normal_distribution<double> g;
  std::vector<HomoPoint> dense;
  for (int a = 0; a <= 40; ++a)
    for (int b = 0; a + b <= 40; ++b) dense.push_back({a / 40.0, b / 40.0, -(a + b) / 40.0});
  for (int n : {6, 8}) {
    auto nodes = upsilon(n).members;
    auto freqs = upsilon_dagger(n).members;
    // group frequencies whose TC agree on every node
    std::vector<int> group(freqs.size(), -1);
    int groups = 0;
    for (std::size_t a = 0; a < freqs.size(); ++a) {
      if (group[a] >= 0) continue;
      group[a] = groups;
      for (std::size_t b = a + 1; b < freqs.size(); ++b) {
        bool same = true;
        for (const auto& j : nodes) same = same && std::abs(tc(freqs[a], over(j, n)) - tc(freqs[b], over(j, n))) < 1e-12;
        if (same) group[b] = groups;
      }
      ++groups;
    }
    CHECK(static_cast<std::size_t>(groups) == nodes.size());
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<cplx> gc(groups);
      for (auto& v : gc) v = {g(rng), g(rng)};
      auto gf = [&](const HomoPoint& t) {
        cplx s = 0;
        for (std::size_t k = 0; k < freqs.size(); ++k) s += gc[group[k]] * tc(freqs[k], t);
        return s;
      };
      std::vector<cplx> f;
      for (const auto& j : nodes) f.push_back(gf(over(j, n)));
      TriangleInterpolant L(TriangleFlavor::cosine, n, f);
      double err = 0;
      for (const auto& t : dense) err = std::max(err, std::abs(L(t) - gf(t)));
      CHECK(err < 1e-9);
    }
    // a lone member of an aliasing pair is not reproduced
    for (std::size_t a = 0; a < freqs.size(); ++a) {
      if (std::count(group.begin(), group.end(), group[a]) < 2) continue;
      std::vector<cplx> f;
      for (const auto& j : nodes) f.push_back(tc(freqs[a], over(j, n)));
      TriangleInterpolant L(TriangleFlavor::cosine, n, f);
      double err = 0;
      for (const auto& t : dense) err = std::max(err, std::abs(L(t) - tc(freqs[a], t)));
      CHECK(err > 1e-3);
      break;
    }
  }
}

TEST_CASE("Lebesgue constants") {
  CHECK(lebesgue_constant(LebesgueOperator::starred_hex, 3, 64) >= 1.0);
  CHECK(lebesgue_constant(LebesgueOperator::triangle_cosine, 3, 64) >= 1.0);
  CHECK(lebesgue_constant(LebesgueOperator::triangle_sine, 6, 64) >= 1.0);
  double a = lebesgue_constant(LebesgueOperator::starred_hex, 6, 64);
  double b = lebesgue_constant(LebesgueOperator::starred_hex, 6, 128);
  CHECK(std::abs(a - b) / b < 0.02);
  auto r = lebesgue_report(LebesgueOperator::starred_hex, {3, 6, 9}, 64);
  REQUIRE(r.constants.size() == 3);
  for (double c : r.constants) CHECK(c >= 1.0);
  CHECK(r.fitted_ratio >= r.min_ratio);
}

TEST_CASE("cosine cardinal functions are orbit sums of the kernel at interior nodes") {
  // Secondary route: for an interior node j of Υn, ℓ_j(t) = Σ_{k ∈ j𝒜₂} Φn(t - k/n).
  for (int n : {6, 9}) {
    auto nodes = upsilon(n).members;
    TriangleInterpolant L(TriangleFlavor::cosine, n, std::vector<cplx>(nodes.size(), 0.0));
    double err = 0;
    for (HomoPoint t : {HomoPoint{0.21, 0.33, -0.54}, HomoPoint{0.6, 0.05, -0.65}}) {
      auto c = L.cardinal(t);
      for (std::size_t j = 0; j < nodes.size(); ++j) {
        if (nodes[j].cls != NodeClass::interior) continue;
        double s = 0;
        for (const auto& g : a2_group()) {
          HomoPoint k = over(act(g, nodes[j]), n);
          s += phi_n_kernel({t.t1 - k.t1, t.t2 - k.t2, t.t3 - k.t3}, n, KernelMethod::compact);
        }
        err = std::max(err, std::abs(c[j] - s));
      }
    }
    INFO("n=" << n);
    CHECK(err < 1e-10);
  }
}
