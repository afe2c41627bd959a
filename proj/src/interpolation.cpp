#include "lattika/interpolation.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include "lattika/parallel.hpp"

namespace lattika {

namespace {

constexpr double kPi = std::numbers::pi;

HomoPoint over(const IndexPoint& j, int n) {
  return {static_cast<double>(j.h[0]) / n, static_cast<double>(j.h[1]) / n, static_cast<double>(j.h[2]) / n};
}

HomoPoint minus(const HomoPoint& a, const HomoPoint& b) { return {a.t1 - b.t1, a.t2 - b.t2, a.t3 - b.t3}; }

void check_count(std::size_t got, std::size_t want, const char* what) {
  if (got != want)
    throw Error(ErrorCode::SampleCountMismatch,
                std::string(what) + ": expected " + std::to_string(want) + " samples, got " + std::to_string(got));
}

}  // namespace

// ---- generic operator

std::vector<Vec2q> interp_nodes(const LatticeCase& c) {
  return discrete_nodes(c, DiscreteVariant::open).nodes;
}

TrigPoly interp_generic(const LatticeCase& c, const std::vector<cplx>& samples) {
  auto d = discrete_nodes(c, DiscreteVariant::open);
  check_count(samples.size(), d.nodes.size(), "interp_generic");
  auto freqs = build_index_set(c, Variant::dagger_open);
  TrigPoly p;
  p.lcase = c;
  const double norm = d.normalization.to_double();
  for (const auto& k : freqs.members) {
    cplx s = 0;
    for (std::size_t j = 0; j < d.nodes.size(); ++j) s += samples[j] * std::conj(phi(c, k, d.nodes[j]));
    p.coeffs[k.k] = s * norm;
  }
  return p;
}

cplx psi_kernel(const LatticeCase& c, const Point2& x) {
  auto freqs = build_index_set(c, Variant::dagger_open);
  cplx s = 0;
  for (const auto& k : freqs.members) s += phi(c, k, x);
  return s / static_cast<double>(generator_matrices(c).abs_det_N());
}

// ---- hexagon-transpose kernels

const StarredHexSets& starred_hex_sets(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<StarredHexSets>> cache;
  std::lock_guard<std::mutex> lk(mu);
  auto& slot = cache[n];
  if (slot) return *slot;
  auto s = std::make_unique<StarredHexSets>();
  s->n = n;
  LatticeCase lc{CaseTag::HexHexTranspose, n};
  auto d = discrete_nodes(lc, DiscreteVariant::starred);
  s->nodes = d.index;
  s->c = d.c;
  std::map<std::array<int, 3>, Rational> weight;
  for (std::size_t i = 0; i < d.index.size(); ++i) weight[d.index[i].h] = d.c[i];
  for (const auto& k : build_index_set(lc, Variant::dagger_closed).members) {
    auto it = weight.find(hat_map(k).h);
    if (it == weight.end()) throw Error(ErrorCode::IndexOutOfRange, "hat of a dagger index is not a starred node");
    s->freqs.push_back(k);
    s->freq_weight.push_back(it->second);
  }
  slot = std::move(s);
  return *slot;
}

cplx phi_n_direct(const HomoPoint& t, int n) {
  const auto& s = starred_hex_sets(n);
  cplx sum = 0;
  for (std::size_t i = 0; i < s.freqs.size(); ++i) sum += s.freq_weight[i].to_double() * phi(s.freqs[i], t);
  return sum / (static_cast<double>(n) * n);
}

double phi_n_compact_raw(const HomoPoint& t, int n) {
  if (n % 3 != 0) throw Error(ErrorCode::NotMultipleOf3, "compact kernel needs n divisible by 3");
  const double tv[3] = {t.t1, t.t2, t.t3};
  HomoPoint sp = s_variable(t);
  const double sv[3] = {sp.t1, sp.t2, sp.t3};
  double prod = 1, num = 0, tail = 0;
  for (int i = 0; i < 3; ++i) {
    double si = std::sin(kPi * tv[i]);
    double cn = std::cos(2 * kPi * n * tv[i] / 3);
    prod *= si;
    num += cn * si * (std::cos(kPi * tv[i]) + 2 * std::cos(kPi * sv[i]));
    tail += cn;
  }
  return (-num / (2 * prod) - tail / 3) / (static_cast<double>(n) * n);
}

double phi_n_kernel(const HomoPoint& t, int n, KernelMethod m) {
  if (m == KernelMethod::direct_sum) return phi_n_direct(t, n).real();
  if (n % 3 != 0) throw Error(ErrorCode::NotMultipleOf3, "compact kernel needs n divisible by 3");
  for (double v : {t.t1, t.t2, t.t3})
    if (std::abs(std::sin(kPi * v)) < 1e-8) return phi_n_direct(t, n).real();
  return phi_n_compact_raw(t, n);
}

HomoPoint s_variable(const HomoPoint& t) {
  return {(t.t3 - t.t2) / 3, (t.t1 - t.t3) / 3, (t.t2 - t.t1) / 3};
}

cplx dirichlet_theta(int n, const HomoPoint& t) {
  cplx s = 0;
  for (const auto& k : starred_hex_sets(n).freqs) s += phi(k, t);
  return s;
}

std::array<cplx, 3> dirichlet_theta_parts(int n, const HomoPoint& t) {
  std::array<cplx, 3> parts{};
  HomoPoint s = s_variable(t);
  for (const auto& j : starred_hex_sets(n).nodes) {
    int r = ((j.h[0] % 3) + 3) % 3;
    parts[r] += phi(j, s);
  }
  return parts;
}

StarredHexInterpolant::StarredHexInterpolant(int n, std::vector<cplx> samples) : n_(n), f_(std::move(samples)) {
  check_count(f_.size(), starred_hex_sets(n).nodes.size(), "starred interpolant");
}

cplx StarredHexInterpolant::operator()(const HomoPoint& t) const {
  const auto& s = starred_hex_sets(n_);
  auto m = n_ % 3 == 0 ? KernelMethod::compact : KernelMethod::direct_sum;
  cplx v = 0;
  for (std::size_t j = 0; j < s.nodes.size(); ++j) v += f_[j] * phi_n_kernel(minus(t, over(s.nodes[j], n_)), n_, m);
  return v;
}

// ---- triangle

Rational lambda_hat(const IndexPoint& k, int n) {
  const auto& s = starred_hex_sets(n);
  Rational c(0);
  bool found = false;
  for (std::size_t i = 0; i < s.freqs.size(); ++i)
    if (s.freqs[i].h == k.h) {
      c = s.freq_weight[i];
      found = true;
      break;
    }
  if (!found) throw Error(ErrorCode::IndexOutOfRange, "frequency outside the dagger set");
  std::vector<std::array<int, 3>> orbit;
  for (const auto& g : a2_group()) {
    auto h = act(g, k).h;
    if (std::find(orbit.begin(), orbit.end(), h) == orbit.end()) orbit.push_back(h);
  }
  return c * Rational(static_cast<std::int64_t>(orbit.size()));
}

IndexSet TriangleInterpolant::node_set(TriangleFlavor flavor, int n) {
  return flavor == TriangleFlavor::sine ? upsilon_interior(n) : upsilon(n);
}

IndexSet TriangleInterpolant::freq_set(TriangleFlavor flavor, int n) {
  return flavor == TriangleFlavor::sine ? upsilon_dagger_sine(n) : upsilon_dagger(n);
}

cplx TriangleInterpolant::basis(std::size_t k, const HomoPoint& t) const {
  return flavor_ == TriangleFlavor::sine ? ts(freqs_[k], t) : tc(freqs_[k], t);
}

TriangleInterpolant::TriangleInterpolant(TriangleFlavor flavor, int n, std::vector<cplx> samples)
    : flavor_(flavor), n_(n) {
  nodes_ = node_set(flavor, n).members;
  freqs_ = freq_set(flavor, n).members;
  check_count(samples.size(), nodes_.size(), "triangle interpolant");
  const double inv = 1.0 / (static_cast<double>(n) * n);
  std::vector<double> lh(freqs_.size());
  for (std::size_t k = 0; k < freqs_.size(); ++k) lh[k] = lambda_hat(freqs_[k], n).to_double();
  M_.assign(nodes_.size(), std::vector<cplx>(freqs_.size()));
  coef_.assign(freqs_.size(), 0);
  for (std::size_t j = 0; j < nodes_.size(); ++j) {
    double lam = flavor == TriangleFlavor::sine
                     ? 6.0
                     : (nodes_[j].cls == NodeClass::interior ? 6.0 : nodes_[j].cls == NodeClass::edge ? 3.0 : 1.0);
    HomoPoint tj = over(nodes_[j], n);
    for (std::size_t k = 0; k < freqs_.size(); ++k) {
      M_[j][k] = lam * inv * lh[k] * std::conj(basis(k, tj));
      coef_[k] += samples[j] * M_[j][k];
    }
  }
}

cplx TriangleInterpolant::operator()(const HomoPoint& t) const {
  cplx v = 0;
  for (std::size_t k = 0; k < freqs_.size(); ++k) v += coef_[k] * basis(k, t);
  return v;
}

std::vector<cplx> TriangleInterpolant::cardinal(const HomoPoint& t) const {
  std::vector<cplx> b(freqs_.size());
  for (std::size_t k = 0; k < freqs_.size(); ++k) b[k] = basis(k, t);
  std::vector<cplx> out(nodes_.size());
  for (std::size_t j = 0; j < nodes_.size(); ++j) {
    cplx s = 0;
    for (std::size_t k = 0; k < freqs_.size(); ++k) s += M_[j][k] * b[k];
    out[j] = s;
  }
  return out;
}

// ---- Lebesgue constants

double lebesgue_constant(LebesgueOperator op, int n, int density) {
  std::vector<HomoPoint> grid;
  for (int a = 0; a <= density; ++a)
    for (int b = 0; a + b <= density; ++b)
      grid.push_back({static_cast<double>(a) / density, static_cast<double>(b) / density,
                      -static_cast<double>(a + b) / density});
  std::vector<double> val(grid.size());
  if (op == LebesgueOperator::starred_hex) {
    const auto& s = starred_hex_sets(n);
    std::vector<HomoPoint> nodes;
    for (const auto& j : s.nodes) nodes.push_back(over(j, n));
    auto m = n % 3 == 0 ? KernelMethod::compact : KernelMethod::direct_sum;
    parallel_for(grid.size(), [&](std::size_t i) {
      double sum = 0;
      for (const auto& tj : nodes) sum += std::abs(phi_n_kernel(minus(grid[i], tj), n, m));
      val[i] = sum;
    }, 16);
  } else {
    auto flavor = op == LebesgueOperator::triangle_sine ? TriangleFlavor::sine : TriangleFlavor::cosine;
    TriangleInterpolant L(flavor, n, std::vector<cplx>(TriangleInterpolant::node_set(flavor, n).size(), 0.0));
    parallel_for(grid.size(), [&](std::size_t i) {
      double sum = 0;
      for (const cplx& l : L.cardinal(grid[i])) sum += std::abs(l);
      val[i] = sum;
    }, 16);
  }
  return *std::max_element(val.begin(), val.end());
}

LebesgueReport lebesgue_report(LebesgueOperator op, const std::vector<int>& ns, int density) {
  LebesgueReport r;
  r.n_values = ns;
  for (int n : ns) {
    double c = lebesgue_constant(op, n, density);
    r.constants.push_back(c);
    double ratio = c / std::pow(std::log(static_cast<double>(n)), 2);
    r.fitted_ratio = r.constants.size() == 1 ? ratio : std::max(r.fitted_ratio, ratio);
    r.min_ratio = r.constants.size() == 1 ? ratio : std::min(r.min_ratio, ratio);
  }
  return r;
}

}  // namespace lattika
