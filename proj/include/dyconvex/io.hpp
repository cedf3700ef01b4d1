#pragma once

// Text plumbing for the command-line tool: point files, machine-readable
// report documents, and SVG rendering of 2-dimensional scenes.  Everything
// here serializes exact values; no floating point is involved anywhere.

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "dyconvex/hull.hpp"

namespace dyconvex {

using Json = nlohmann::ordered_json;

// Plain-text point list.  Format:
//   # comment lines and blank lines are skipped
//   dim <N>
//   <point>          one per line, comma-separated dyadic literals
struct PointFile {
  int dimension = 0;
  std::vector<DyadicPoint> points;
};

PointFile read_point_file(std::istream& in, const std::string& name);
PointFile read_point_file(const std::string& path);
std::string write_point_file(const PointFile& f);

// Machine-readable command output.  Key order is fixed so identical inputs
// produce byte-identical documents.
struct ReportDocument {
  std::string op;
  Json inputs = Json::object();
  Json result = Json::object();
  Json certificate = Json::object();
  Json evidence = Json::object();

  std::string to_string() const;
};

Json point_to_json(const DyadicPoint& p);
Json points_to_json(const std::vector<DyadicPoint>& pts);

// Exact finite decimal for a rational whose denominator has only the prime
// factors 2 and 5; throws std::invalid_argument otherwise.
std::string rat_decimal_string(const BigRat& q);

// 2-dimensional scene: hull edges, generator markers, and extra points.
// The viewBox is the hull bounding box padded by 10% on each side; all
// coordinates are exact decimals (the y axis is negated for screen space).
std::string render_svg(const RationalPolytope& hull, const std::vector<DyadicPoint>& generators,
                       const std::vector<DyadicPoint>& found);

}  // namespace dyconvex
