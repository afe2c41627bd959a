#pragma once
// Rule files (JSON, schema version 1), CSV shapes and SVG node plots.
#include <iosfwd>
#include <string>
#include <vector>

#include "lattika/cubature.hpp"
#include "lattika/hexfft.hpp"

namespace lattika {

// Case names: full names ("HexHex") or the short forms SS, SR, RS, RR, HH, HHT, H1, H2.
CaseTag parse_case_flexible(const std::string& s);

// Schema v1: {schema_version, case, tag, n, normalization "p/q", domain, measure,
// exactness {space, max_index_or_degree, description}, outline [[x,y]...],
// nodes [{cartesian [x,y], cartesian_exact ["p/q","p/q"]?, homogeneous [t1,t2,t3]?,
// homogeneous_exact ["p/q"x3]?, weight "p/q" or decimal string, class}]}.
std::string serialize_rule(const CubatureRule& r);
CubatureRule parse_rule_json(const std::string& text);  // Parse on malformed input
std::string read_file(const std::string& path);          // Parse if unreadable
void write_file(const std::string& path, const std::string& text);

// "%.17g" in the C locale.
std::string fmt17(double v);

// CSV rows of numbers; blank lines and lines starting with a letter (headers) are skipped.
std::vector<std::vector<double>> read_csv(const std::string& text);

// Samples "j1,j2,re,im" (n^2 rows, any order) -> grid.
HexSampleGrid grid_from_csv(int n, const std::string& text);
std::string grid_to_csv(const HexSampleGrid& g);
// Spectrum "k1,k2,k3,re,im" in the fixed enumeration order.
std::string spectrum_to_csv(const HexSpectrum& s);
HexSpectrum spectrum_from_csv(int n, const std::string& text);

// One marker per node (circle interior, square edge, triangle vertex) and the
// domain outline; the hypocycloid of Δ* is sampled at 720 points.
std::string plot_svg(const CubatureRule& r, int size);

}  // namespace lattika
