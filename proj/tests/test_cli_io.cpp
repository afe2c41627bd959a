#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <random>
#include <regex>

#include "doctest.h"
#include "lattika/io.hpp"

using namespace lattika;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path p = fs::temp_directory_path() / ("lattika_cli_test_" + std::to_string(::getpid()));
  TempDir() { fs::create_directories(p); }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(p, ec);
  }
};

fs::path workdir() {
  static TempDir d;
  return d.p;
}

std::string path(const std::string& name) { return (workdir() / name).string(); }

// Runs the CLI; returns the exit code, captures stdout and stderr.
int run(const std::string& args, std::string* out = nullptr, std::string* err = nullptr) {
  std::string o = path("stdout.txt"), e = path("stderr.txt");
  std::string cmd = std::string(LATTIKA_CLI) + " " + args + " >" + o + " 2>" + e;
  int st = std::system(cmd.c_str());
  if (out) *out = read_file(o);
  if (err) *err = read_file(e);
  return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

int count(const std::string& s, const std::string& needle) {
  int c = 0;
  for (std::size_t p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++c;
  return c;
}

}  // namespace

TEST_CASE("rule files round-trip byte-stably") {
  for (RuleTag t : all_rule_tags())
    for (int n = 1; n <= 6; ++n) {
      if (!rule_supports(t, n)) continue;
      auto r = build_rule(t, n);
      std::string s = serialize_rule(r);
      auto p = parse_rule_json(s);
      INFO(rule_name(t) << " n=" << n);
      CHECK(serialize_rule(p) == s);
      REQUIRE(p.nodes.size() == r.nodes.size());
      CHECK(p.normalization == r.normalization);
      for (std::size_t i = 0; i < r.nodes.size(); ++i) {
        CHECK(std::abs(p.nodes[i].x[0] - r.nodes[i].x[0]) < 1e-15);
        CHECK(std::abs(p.nodes[i].x[1] - r.nodes[i].x[1]) < 1e-15);
        CHECK(p.nodes[i].cls == r.nodes[i].cls);
        CHECK(p.nodes[i].weight == r.nodes[i].weight);
        if (r.nodes[i].homo) CHECK(*p.nodes[i].homo == *r.nodes[i].homo);
      }
      if (auto tot = p.total_weight()) CHECK(*tot == Rational(1));
    }
}

TEST_CASE("decimal rendering and malformed input") {
  CHECK(fmt17(0.1) == "0.10000000000000001");
  CHECK(std::stod(fmt17(std::sqrt(3.0) / 2)) == std::sqrt(3.0) / 2);
  CHECK_THROWS_AS(parse_rule_json("{"), Error);
  CHECK_THROWS_AS(parse_rule_json("{\"schema_version\": 2}"), Error);
  CHECK_THROWS_AS(parse_rule_json("{\"schema_version\": 1, \"tag\": \"HH\"}"), Error);
}

TEST_CASE("CSV shapes") {
  std::mt19937_64 rng(2);
  std::normal_distribution<double> g;
  HexSampleGrid grid{4, std::vector<cplx>(16)};
  for (auto& v : grid.values) v = {g(rng), g(rng)};
  auto back = grid_from_csv(4, grid_to_csv(grid));
  for (std::size_t i = 0; i < 16; ++i) CHECK(back.values[i] == grid.values[i]);
  auto sp = forward(grid);
  auto sp2 = spectrum_from_csv(4, spectrum_to_csv(sp));
  for (std::size_t i = 0; i < sp.coeffs.size(); ++i) CHECK(sp2.coeffs[i] == sp.coeffs[i]);
  CHECK(spectrum_to_csv(sp).rfind("k1,k2,k3,re,im\n", 0) == 0);
  CHECK_THROWS_AS(grid_from_csv(5, grid_to_csv(grid)), Error);
}

TEST_CASE("SVG plots") {
  auto hh = build_rule(RuleTag::HH, 4);
  std::string s = plot_svg(hh, 400);
  CHECK(s == plot_svg(hh, 400));
  CHECK(s.find("<svg") != std::string::npos);
  CHECK(count(s, "class=\"outline\"") == 1);
  CHECK(count(s, "class=\"vertex\"") == 6);  // the closed hexagon has six corner nodes
  CHECK(count(s, "class=\"interior\"") + count(s, "class=\"edge\"") + 6 == static_cast<int>(hh.nodes.size()));
  auto w = plot_svg(build_rule(RuleTag::HHW1, 3), 300);
  std::smatch m;
  REQUIRE(std::regex_search(w, m, std::regex("class=\"outline\"[^>]*points=\"([^\"]*)\"")));
  CHECK(count(m[1].str(), ",") == 720);
}

TEST_CASE("CLI: rule and verify") {
  std::string out, err;
  CHECK(run("rule --tag HH --n 4 --out " + path("hh4.json"), &out) == 0);
  auto r = parse_rule_json(read_file(path("hh4.json")));
  CHECK(r.nodes.size() == build_rule(RuleTag::HH, 4).nodes.size());
  CHECK(run("rule --case HH --tag SR-cubaT --n 2", &out, &err) == 2);
  CHECK(run("rule --case SR --tag SR-cubaT --n 2", &out) == 0);
  CHECK(parse_rule_json(out).nodes.size() == 5);
  CHECK(run("rule --tag RR2 --n 4", &out, &err) == 2);
  CHECK(count(err, "\n") == 1);
  CHECK(run("rule --tag nope --n 4", &out, &err) == 2);
  CHECK(run("verify --rule " + path("hh4.json") + " --tol 1e-9", &out) == 0);
  CHECK(out.find("result=PASS") != std::string::npos);
  CHECK(run("verify --rule " + path("hh4.json") + " --tol 0", &out) == 1);
  CHECK(out.find("max_error=") != std::string::npos);
  r.nodes[3].weight_q.reset();
  r.nodes[3].weight += 1e-3;
  write_file(path("broken.json"), serialize_rule(r));
  CHECK(run("verify --rule " + path("broken.json"), &out) == 1);
  write_file(path("bad.json"), "{ not json");
  CHECK(run("verify --rule " + path("bad.json"), &out, &err) == 2);
  CHECK(run("verify --rule " + path("missing.json"), &out, &err) == 2);
}

TEST_CASE("CLI: fft") {
  int n = 3;
  std::string csv = "j1,j2,re,im\n";
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) csv += std::to_string(a) + "," + std::to_string(b) + ",2.5,0\n";
  write_file(path("const.csv"), csv);
  std::string out;
  CHECK(run("fft --n 3 --input " + path("const.csv") + " --out " + path("spectrum.csv")) == 0);
  int nonzero = 0;
  for (const auto& row : read_csv(read_file(path("spectrum.csv")))) {
    REQUIRE(row.size() == 5);
    if (std::abs(row[3]) + std::abs(row[4]) > 1e-13) {
      ++nonzero;
      CHECK(row[0] == 0);
      CHECK(row[1] == 0);
      CHECK(std::abs(row[3] - 2.5) < 1e-13);
    }
  }
  CHECK(nonzero == 1);
  // random round trip
  std::mt19937_64 rng(4);
  std::normal_distribution<double> g;
  HexSampleGrid grid{6, std::vector<cplx>(36)};
  for (auto& v : grid.values) v = {g(rng), g(rng)};
  write_file(path("rand.csv"), grid_to_csv(grid));
  CHECK(run("fft --n 6 --input " + path("rand.csv") + " --out " + path("rspectrum.csv")) == 0);
  CHECK(run("fft --n 6 --inverse --input " + path("rspectrum.csv") + " --out " + path("rback.csv")) == 0);
  auto back = grid_from_csv(6, read_file(path("rback.csv")));
  double e = 0;
  for (std::size_t i = 0; i < 36; ++i) e = std::max(e, std::abs(back.values[i] - grid.values[i]));
  CHECK(e < 1e-12);
  CHECK(run("fft --n 4 --input " + path("const.csv")) == 2);
}

TEST_CASE("CLI: plot, interp, tiling-check") {
  std::string out, err;
  CHECK(run("rule --tag HH --n 4 --out " + path("p.json")) == 0);
  CHECK(run("plot --rule " + path("p.json") + " --svg " + path("a.svg")) == 0);
  CHECK(run("plot --rule " + path("p.json") + " --svg " + path("b.svg")) == 0);
  CHECK(read_file(path("a.svg")) == read_file(path("b.svg")));
  CHECK(count(read_file(path("a.svg")), "class=\"vertex\"") == 6);
  CHECK(run("rule --tag SR-cubaT --n 3 --out " + path("sr.json")) == 0);
  CHECK(run("plot --rule " + path("sr.json"), &out) == 0);
  CHECK(out.find("class=\"outline\"") != std::string::npos);
  CHECK(run("plot --rule " + path("bad.json") + " --svg " + path("c.svg"), &out, &err) == 2);

  // interpolation: node listing, then values reproduced at the nodes
  CHECK(run("interp --kind cosine --n 6", &out) == 0);
  auto nodes = read_csv(out);
  std::string vals;
  for (std::size_t i = 0; i < nodes.size(); ++i) vals += std::to_string(0.5 * i) + ",0\n";
  write_file(path("vals.csv"), vals);
  CHECK(run("interp --kind cosine --n 6 --input " + path("vals.csv"), &out) == 0);
  auto rows = read_csv(out);
  REQUIRE(rows.size() == nodes.size());
  for (std::size_t i = 0; i < rows.size(); ++i) CHECK(std::abs(rows[i][2] - 0.5 * i) < 1e-10);
  CHECK(run("interp --kind generic --case HH --n 2 --input " + path("vals.csv"), &out, &err) == 2);

  CHECK(run("tiling-check --case HexH2 --n 2 --samples 2000", &out) == 0);
  CHECK(out.find("max_cover_deviation=0") != std::string::npos);
  CHECK(run("tiling-check --case Nope", &out, &err) == 2);
}
