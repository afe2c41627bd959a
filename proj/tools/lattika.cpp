// lattika: cubature rules, exactness checks, interpolation, hexagonal FFT,
// node plots and tiling checks from the command line.
#include <cstdio>
#include <iostream>

#include "CLI11.hpp"
#include "lattika/interpolation.hpp"
#include "lattika/io.hpp"

using namespace lattika;

namespace {

void emit(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-")
    std::cout << text;
  else
    write_file(out, text);
}

int cmd_rule(const std::string& case_s, const std::string& tag_s, int n, const std::string& out) {
  RuleTag tag = parse_rule(tag_s);
  if (!case_s.empty() && parse_case_flexible(case_s) != rule_case(tag))
    throw Error(ErrorCode::UnsupportedN, std::string("rule ") + rule_name(tag) + " belongs to case " +
                                             case_name(rule_case(tag)));
  CubatureRule r = build_rule(tag, n);
  emit(out, serialize_rule(r));
  if (!out.empty() && out != "-")
    std::cout << "rule=" << rule_name(tag) << " case=" << case_name(r.lcase) << " n=" << n
              << " nodes=" << r.nodes.size() << " out=" << out << "\n";
  return 0;
}

int cmd_verify(const std::string& path, double tol) {
  CubatureRule r = parse_rule_json(read_file(path));
  ExactnessReport rep = verify_exactness(r);
  bool ok = rep.max_error < tol;
  char err[32];
  std::snprintf(err, sizeof err, "%.3e", rep.max_error);
  std::cout << "rule=" << rule_name(r.tag) << " n=" << r.n << " space=" << rep.tested_space
            << " basis=" << rep.basis_size << " max_error=" << err << " worst=" << rep.worst_function
            << " tol=" << tol << " result=" << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? 0 : 1;
}

std::vector<cplx> values_from_csv(const std::string& text) {
  std::vector<cplx> v;
  for (const auto& row : read_csv(text)) {
    if (row.empty() || row.size() > 2) throw Error(ErrorCode::Parse, "value rows are re[,im]");
    v.emplace_back(row[0], row.size() == 2 ? row[1] : 0.0);
  }
  return v;
}

int cmd_interp(const std::string& kind, const std::string& case_s, int n, const std::string& input,
               const std::string& eval, const std::string& out) {
  std::vector<Point2> nodes;
  if (kind == "generic") {
    if (case_s.empty()) throw Error(ErrorCode::Parse, "--case is required for generic interpolation");
    for (const auto& x : interp_nodes({parse_case_flexible(case_s), n})) nodes.push_back(x.to_double());
  } else if (kind == "starred") {
    for (const auto& j : starred_hex_sets(n).nodes)
      nodes.push_back(from_homogeneous(HomoPoint{double(j.h[0]) / n, double(j.h[1]) / n, double(j.h[2]) / n}));
  } else if (kind == "sine" || kind == "cosine") {
    auto fl = kind == "sine" ? TriangleFlavor::sine : TriangleFlavor::cosine;
    for (const auto& j : TriangleInterpolant::node_set(fl, n).members)
      nodes.push_back(from_homogeneous(HomoPoint{double(j.h[0]) / n, double(j.h[1]) / n, double(j.h[2]) / n}));
  } else {
    throw Error(ErrorCode::UnknownTag, "unknown interpolation kind '" + kind + "'");
  }
  if (input.empty()) {  // list the nodes in sample order
    std::string s = "i,x1,x2\n";
    for (std::size_t i = 0; i < nodes.size(); ++i)
      s += std::to_string(i) + "," + fmt17(nodes[i][0]) + "," + fmt17(nodes[i][1]) + "\n";
    emit(out, s);
    return 0;
  }
  auto f = values_from_csv(read_file(input));
  std::function<cplx(const Point2&)> F;
  if (kind == "generic") {
    auto p = std::make_shared<TrigPoly>(interp_generic({parse_case_flexible(case_s), n}, f));
    F = [p](const Point2& x) { return (*p)(x); };
  } else if (kind == "starred") {
    auto I = std::make_shared<StarredHexInterpolant>(n, f);
    F = [I](const Point2& x) { return (*I)(to_homogeneous(x)); };
  } else {
    auto L = std::make_shared<TriangleInterpolant>(kind == "sine" ? TriangleFlavor::sine : TriangleFlavor::cosine, n, f);
    F = [L](const Point2& x) { return (*L)(to_homogeneous(x)); };
  }
  std::vector<Point2> pts = nodes;
  if (!eval.empty()) {
    pts.clear();
    for (const auto& row : read_csv(read_file(eval))) {
      if (row.size() != 2) throw Error(ErrorCode::Parse, "evaluation rows are x1,x2");
      pts.push_back({row[0], row[1]});
    }
  }
  std::string s = "x1,x2,re,im\n";
  for (const auto& x : pts) {
    cplx v = F(x);
    s += fmt17(x[0]) + "," + fmt17(x[1]) + "," + fmt17(v.real()) + "," + fmt17(v.imag()) + "\n";
  }
  emit(out, s);
  return 0;
}

int cmd_fft(int n, const std::string& input, bool inv, const std::string& out) {
  if (n < 1) throw Error(ErrorCode::UnsupportedN, "n must be positive");
  std::string text = read_file(input);
  if (inv)
    emit(out, grid_to_csv(inverse(spectrum_from_csv(n, text))));
  else
    emit(out, spectrum_to_csv(forward(grid_from_csv(n, text))));
  return 0;
}

int cmd_plot(const std::string& path, const std::string& svg, int size) {
  CubatureRule r = parse_rule_json(read_file(path));
  emit(svg, plot_svg(r, size));
  if (!svg.empty() && svg != "-") std::cout << "plot=" << svg << " nodes=" << r.nodes.size() << "\n";
  return 0;
}

int cmd_tiling(const std::string& case_s, int n, int samples, std::uint64_t seed) {
  LatticeCase c{parse_case_flexible(case_s), n};
  auto rep = verify_tiling(c, samples, seed);
  std::cout << "case=" << case_name(c.tag) << " n=" << n << " samples=" << rep.samples
            << " max_cover_deviation=" << rep.max_cover_deviation << "\n";
  return rep.max_cover_deviation == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrete Fourier analysis on planar lattices"};
  app.require_subcommand(1);

  std::string case_s, tag_s, out, rule_path, input, eval, kind = "generic", svg;
  int n = 0, size = 600, samples = 10000;
  double tol = 1e-9;
  bool inv = false;
  std::uint64_t seed = 1;

  auto* rule = app.add_subcommand("rule", "build a cubature rule and write it as JSON");
  rule->add_option("--case", case_s, "lattice case (checked against the tag)");
  rule->add_option("--tag", tag_s, "rule tag, e.g. HH, SR-cubaT, RR2")->required();
  rule->add_option("--n", n, "rule parameter")->required();
  rule->add_option("--out", out, "output file (default: standard output)");

  auto* verify = app.add_subcommand("verify", "check a rule file against the integration oracle");
  verify->add_option("--rule", rule_path, "rule file")->required();
  verify->add_option("--tol", tol, "tolerance on the maximal error");

  auto* interp = app.add_subcommand("interp", "interpolate node values (without --input: list the nodes)");
  interp->add_option("--kind", kind, "generic, starred, sine or cosine");
  interp->add_option("--case", case_s, "lattice case (generic)");
  interp->add_option("--n", n, "parameter")->required();
  interp->add_option("--input", input, "CSV of re[,im] per node, in node order");
  interp->add_option("--eval", eval, "CSV of x1,x2 evaluation points (default: the nodes)");
  interp->add_option("--out", out, "output file");

  auto* fftc = app.add_subcommand("fft", "hexagonal DFT of n^2 samples (j1,j2,re,im)");
  fftc->add_option("--n", n, "grid size")->required();
  fftc->add_option("--input", input, "input CSV")->required();
  fftc->add_flag("--inverse", inv, "input is a spectrum k1,k2,k3,re,im");
  fftc->add_option("--out", out, "output file");

  auto* plot = app.add_subcommand("plot", "render the nodes of a rule file as SVG");
  plot->add_option("--rule", rule_path, "rule file")->required();
  plot->add_option("--svg", svg, "output file (default: standard output)");
  plot->add_option("--size", size, "pixels");

  auto* tiling = app.add_subcommand("tiling-check", "check that lattice translates of the domain tile the plane");
  tiling->add_option("--case", case_s, "lattice case")->required();
  tiling->add_option("--n", n, "parameter (default 3)");
  tiling->add_option("--samples", samples, "number of sample points");
  tiling->add_option("--seed", seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "lattika: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*rule) return cmd_rule(case_s, tag_s, n, out);
    if (*verify) return cmd_verify(rule_path, tol);
    if (*interp) return cmd_interp(kind, case_s, n, input, eval, out);
    if (*fftc) return cmd_fft(n, input, inv, out);
    if (*plot) return cmd_plot(rule_path, svg, size);
    if (*tiling) return cmd_tiling(case_s, n == 0 ? 3 : n, samples, seed);
  } catch (const std::exception& e) {
    std::cerr << "lattika: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
