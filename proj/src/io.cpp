#include "lattika/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

namespace lattika {

using json = nlohmann::ordered_json;

CaseTag parse_case_flexible(const std::string& s) {
  static const std::map<std::string, CaseTag> shorts = {
      {"SS", CaseTag::SquareSquare}, {"SR", CaseTag::SquareRhombus},  {"RS", CaseTag::RhombicSquare},
      {"RR", CaseTag::RhombicRhombic}, {"HH", CaseTag::HexHex},       {"HHT", CaseTag::HexHexTranspose},
      {"H1", CaseTag::HexH1},        {"H2", CaseTag::HexH2}};
  auto it = shorts.find(s);
  return it != shorts.end() ? it->second : parse_case(s);
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

Error parse_error(const std::string& what) { return Error(ErrorCode::Parse, what); }

json rational_triple(const HomoExact& t) { return json::array({t.t1.str(), t.t2.str(), t.t3.str()}); }

}  // namespace

std::string serialize_rule(const CubatureRule& r) {
  json j;
  j["schema_version"] = 1;
  j["case"] = case_name(r.lcase);
  j["tag"] = rule_name(r.tag);
  j["n"] = r.n;
  j["normalization"] = r.normalization.str();
  j["domain"] = r.domain;
  j["measure"] = r.measure;
  j["exactness"] = {{"space", r.exactness.space},
                    {"max_index_or_degree", r.exactness.degree},
                    {"description", r.exactness.description}};
  json outline = json::array();
  for (const auto& p : r.outline) outline.push_back({p[0], p[1]});
  j["outline"] = outline;
  json nodes = json::array();
  for (const auto& nd : r.nodes) {
    json o;
    o["cartesian"] = {nd.x[0], nd.x[1]};
    if (nd.exact && nd.exact->x.is_rational() && nd.exact->y.is_rational())
      o["cartesian_exact"] = {nd.exact->x.rational_part().str(), nd.exact->y.rational_part().str()};
    if (nd.homo) {
      HomoPoint h = nd.homo->to_double();
      o["homogeneous"] = {h.t1, h.t2, h.t3};
      o["homogeneous_exact"] = rational_triple(*nd.homo);
    }
    o["weight"] = nd.weight_q ? nd.weight_q->str() : fmt17(nd.weight);
    o["class"] = class_name(nd.cls);
    nodes.push_back(o);
  }
  j["nodes"] = nodes;
  return j.dump(1) + "\n";
}

CubatureRule parse_rule_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw parse_error(std::string("rule file is not JSON: ") + e.what());
  }
  try {
    if (j.at("schema_version").get<int>() != 1) throw parse_error("unsupported schema_version");
    CubatureRule r;
    r.tag = parse_rule(j.at("tag").get<std::string>());
    r.lcase = parse_case(j.at("case").get<std::string>());
    if (r.lcase != rule_case(r.tag)) throw parse_error("case does not match tag");
    r.n = j.at("n").get<int>();
    r.normalization = Rational::parse(j.at("normalization").get<std::string>());
    r.domain = j.at("domain").get<std::string>();
    r.measure = j.at("measure").get<std::string>();
    const auto& ex = j.at("exactness");
    r.exactness = {ex.at("space").get<std::string>(), ex.at("max_index_or_degree").get<int>(),
                   ex.at("description").get<std::string>()};
    for (const auto& p : j.at("outline")) r.outline.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
    for (const auto& o : j.at("nodes")) {
      RuleNode nd;
      nd.x = {o.at("cartesian").at(0).get<double>(), o.at("cartesian").at(1).get<double>()};
      if (o.contains("cartesian_exact")) {
        const auto& c = o["cartesian_exact"];
        nd.exact = Vec2q{QSqrt3(Rational::parse(c.at(0).get<std::string>())),
                         QSqrt3(Rational::parse(c.at(1).get<std::string>()))};
      }
      if (o.contains("homogeneous_exact")) {
        const auto& h = o["homogeneous_exact"];
        nd.homo = HomoExact{Rational::parse(h.at(0).get<std::string>()), Rational::parse(h.at(1).get<std::string>()),
                            Rational::parse(h.at(2).get<std::string>())};
      }
      std::string w = o.at("weight").get<std::string>();
      if (w.find_first_of(".eE") != std::string::npos) {
        std::size_t used = 0;
        nd.weight = std::stod(w, &used);
        if (used != w.size()) throw parse_error("bad weight '" + w + "'");
      } else {
        nd.weight_q = Rational::parse(w);
        nd.weight = nd.weight_q->to_double();
      }
      nd.cls = parse_class(o.at("class").get<std::string>());
      r.nodes.push_back(nd);
    }
    return r;
  } catch (const json::exception& e) {
    throw parse_error(std::string("malformed rule file: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw parse_error("malformed number in rule file");
  } catch (const std::out_of_range&) {
    throw parse_error("number out of range in rule file");
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw parse_error("cannot write '" + path + "'");
  out << text;
}

std::vector<std::vector<double>> read_csv(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos || std::isalpha(static_cast<unsigned char>(line[first]))) continue;
    std::vector<double> row;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) {
      std::size_t used = 0;
      try {
        row.push_back(std::stod(cell, &used));
      } catch (const std::exception&) {
        throw parse_error("bad CSV number '" + cell + "'");
      }
      if (cell.find_first_not_of(" \t", used) != std::string::npos) throw parse_error("bad CSV number '" + cell + "'");
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

HexSampleGrid grid_from_csv(int n, const std::string& text) {
  auto rows = read_csv(text);
  if (rows.size() != static_cast<std::size_t>(n) * n)
    throw Error(ErrorCode::SampleCountMismatch,
                "expected " + std::to_string(n * n) + " rows, got " + std::to_string(rows.size()));
  HexSampleGrid g{n, std::vector<cplx>(rows.size())};
  std::vector<bool> seen(rows.size(), false);
  for (const auto& r : rows) {
    if (r.size() != 4) throw parse_error("sample rows are j1,j2,re,im");
    int j1 = static_cast<int>(r[0]), j2 = static_cast<int>(r[1]);
    if (j1 != r[0] || j2 != r[1] || j1 < 0 || j2 < 0 || j1 >= n || j2 >= n)
      throw Error(ErrorCode::IndexOutOfRange, "grid index outside [0, n)^2");
    std::size_t i = static_cast<std::size_t>(j1) * n + j2;
    if (seen[i]) throw parse_error("duplicate grid index");
    seen[i] = true;
    g.values[i] = {r[2], r[3]};
  }
  return g;
}

std::string grid_to_csv(const HexSampleGrid& g) {
  std::string s = "j1,j2,re,im\n";
  for (int j1 = 0; j1 < g.n; ++j1)
    for (int j2 = 0; j2 < g.n; ++j2) {
      const cplx& v = g.values[j1 * g.n + j2];
      s += std::to_string(j1) + "," + std::to_string(j2) + "," + fmt17(v.real()) + "," + fmt17(v.imag()) + "\n";
    }
  return s;
}

std::string spectrum_to_csv(const HexSpectrum& sp) {
  std::string s = "k1,k2,k3,re,im\n";
  for (std::size_t i = 0; i < sp.labels.size(); ++i) {
    const auto& h = sp.labels[i].h;
    s += std::to_string(h[0]) + "," + std::to_string(h[1]) + "," + std::to_string(h[2]) + "," +
         fmt17(sp.coeffs[i].real()) + "," + fmt17(sp.coeffs[i].imag()) + "\n";
  }
  return s;
}

HexSpectrum spectrum_from_csv(int n, const std::string& text) {
  auto rows = read_csv(text);
  HexSpectrum s{n, hex_frequencies(n), {}};
  if (rows.size() != s.labels.size())
    throw Error(ErrorCode::SampleCountMismatch,
                "expected " + std::to_string(s.labels.size()) + " rows, got " + std::to_string(rows.size()));
  std::map<std::array<int, 3>, std::size_t> slot;
  for (std::size_t i = 0; i < s.labels.size(); ++i) slot[s.labels[i].h] = i;
  s.coeffs.assign(rows.size(), 0.0);
  std::vector<bool> seen(rows.size(), false);
  for (const auto& r : rows) {
    if (r.size() != 5) throw parse_error("spectrum rows are k1,k2,k3,re,im");
    std::array<int, 3> h{static_cast<int>(r[0]), static_cast<int>(r[1]), static_cast<int>(r[2])};
    auto it = slot.find(h);
    if (it == slot.end()) throw Error(ErrorCode::IndexOutOfRange, "frequency outside the dagger set");
    if (seen[it->second]) throw parse_error("duplicate frequency");
    seen[it->second] = true;
    s.coeffs[it->second] = {r[3], r[4]};
  }
  return s;
}

namespace {

Polygon hypocycloid() {
  // image of the edges of Δ: vertices (0,0,0), (1,0,-1), (0,1,-1)
  const HomoPoint v[3] = {{0, 0, 0}, {1, 0, -1}, {0, 1, -1}};
  Polygon p;
  for (int e = 0; e < 3; ++e) {
    const HomoPoint& a = v[e];
    const HomoPoint& b = v[(e + 1) % 3];
    for (int i = 0; i < 240; ++i) {
      double s = i / 240.0;
      p.push_back(steiner_map({a.t1 + s * (b.t1 - a.t1), a.t2 + s * (b.t2 - a.t2), a.t3 + s * (b.t3 - a.t3)}));
    }
  }
  return p;
}

std::string f3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

std::string plot_svg(const CubatureRule& r, int size) {
  if (size < 16) throw Error(ErrorCode::Parse, "plot size too small");
  Polygon outline = r.domain == "Delta*" ? hypocycloid() : r.outline;
  double lo[2] = {1e300, 1e300}, hi[2] = {-1e300, -1e300};
  auto grow = [&](const Point2& p) {
    for (int i = 0; i < 2; ++i) {
      lo[i] = std::min(lo[i], p[i]);
      hi[i] = std::max(hi[i], p[i]);
    }
  };
  for (const auto& p : outline) grow(p);
  for (const auto& nd : r.nodes) grow(nd.x);
  const double margin = 0.06 * size;
  double span = std::max({hi[0] - lo[0], hi[1] - lo[1], 1e-12});
  double scale = (size - 2 * margin) / span;
  auto px = [&](const Point2& p) {
    return std::pair<double, double>{margin + (p[0] - lo[0]) * scale, size - margin - (p[1] - lo[1]) * scale};
  };
  std::ostringstream s;
  s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << size << "\" height=\"" << size
    << "\" viewBox=\"0 0 " << size << " " << size << "\">\n"
    << "<title>" << rule_name(r.tag) << " n=" << r.n << "</title>\n"
    << "<rect width=\"" << size << "\" height=\"" << size << "\" fill=\"white\"/>\n";
  if (!outline.empty()) {
    s << "<polygon class=\"outline\" fill=\"none\" stroke=\"black\" stroke-width=\"1\" points=\"";
    for (std::size_t i = 0; i < outline.size(); ++i) {
      auto [x, y] = px(outline[i]);
      s << (i ? " " : "") << f3(x) << "," << f3(y);
    }
    s << "\"/>\n";
  }
  const double m = std::max(2.0, size / 120.0);
  for (const auto& nd : r.nodes) {
    auto [x, y] = px(nd.x);
    switch (nd.cls) {
      case NodeClass::interior:
        s << "<circle class=\"interior\" cx=\"" << f3(x) << "\" cy=\"" << f3(y) << "\" r=\"" << f3(m)
          << "\" fill=\"black\"/>\n";
        break;
      case NodeClass::edge:
        s << "<rect class=\"edge\" x=\"" << f3(x - m) << "\" y=\"" << f3(y - m) << "\" width=\"" << f3(2 * m)
          << "\" height=\"" << f3(2 * m) << "\" fill=\"blue\"/>\n";
        break;
      case NodeClass::vertex:
        s << "<polygon class=\"vertex\" points=\"" << f3(x) << "," << f3(y - 1.3 * m) << " " << f3(x - 1.2 * m)
          << "," << f3(y + m) << " " << f3(x + 1.2 * m) << "," << f3(y + m) << "\" fill=\"red\"/>\n";
        break;
    }
  }
  s << "</svg>\n";
  return s.str();
}

}  // namespace lattika
