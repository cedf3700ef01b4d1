#include <fstream>
#include <sstream>
#include <stdexcept>

#include "dyconvex/io.hpp"

namespace dyconvex {

namespace {

std::string strip(const std::string& line) {
  size_t b = line.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = line.find_last_not_of(" \t\r");
  return line.substr(b, e - b + 1);
}

[[noreturn]] void fail(const std::string& name, int lineno, const std::string& what) {
  throw std::runtime_error(name + ":" + std::to_string(lineno) + ": " + what);
}

}  // namespace

PointFile read_point_file(std::istream& in, const std::string& name) {
  PointFile f;
  std::string line;
  int lineno = 0;
  bool have_dim = false;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = strip(line);
    if (s.empty() || s[0] == '#') continue;
    if (!have_dim) {
      std::istringstream hs(s);
      std::string word;
      hs >> word;
      long long n = 0;
      if (word != "dim" || !(hs >> n) || n < 1) fail(name, lineno, "expected header \"dim <N>\"");
      std::string rest;
      if (hs >> rest) fail(name, lineno, "trailing text after dimension header");
      f.dimension = static_cast<int>(n);
      have_dim = true;
      continue;
    }
    DyadicPoint p = [&] {
      try {
        return DyadicPoint::parse(s);
      } catch (const std::invalid_argument& e) {
        fail(name, lineno, e.what());
      }
    }();
    if (p.dim() != f.dimension) {
      fail(name, lineno, "point has dimension " + std::to_string(p.dim()) + ", header says " +
                             std::to_string(f.dimension));
    }
    f.points.push_back(std::move(p));
  }
  if (!have_dim) throw std::runtime_error(name + ": missing \"dim <N>\" header");
  return f;
}

PointFile read_point_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path + ": cannot open");
  return read_point_file(in, path);
}

std::string write_point_file(const PointFile& f) {
  std::string out = "dim " + std::to_string(f.dimension) + "\n";
  for (const auto& p : f.points) out += p.to_string() + "\n";
  return out;
}

std::string ReportDocument::to_string() const {
  Json doc = Json::object();
  doc["op"] = op;
  doc["inputs"] = inputs;
  doc["result"] = result;
  doc["certificate"] = certificate;
  doc["evidence"] = evidence;
  return doc.dump(2) + "\n";
}

Json point_to_json(const DyadicPoint& p) { return p.to_string(); }

Json points_to_json(const std::vector<DyadicPoint>& pts) {
  Json a = Json::array();
  for (const auto& p : pts) a.push_back(point_to_json(p));
  return a;
}

std::string rat_decimal_string(const BigRat& q) {
  BigInt num = boost::multiprecision::numerator(q);
  BigInt den = boost::multiprecision::denominator(q);
  // Scale the denominator to a power of ten: den = 2^a 5^b divides 10^max(a,b).
  int a = 0, b = 0;
  BigInt d = den;
  while (d % 2 == 0) {
    d /= 2;
    ++a;
  }
  while (d % 5 == 0) {
    d /= 5;
    ++b;
  }
  if (d != 1) throw std::invalid_argument("rat_decimal_string: denominator is not 2^a 5^b");
  int digits = std::max(a, b);
  BigInt scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  BigInt scaled = num * (scale / den);
  bool neg = scaled < 0;
  if (neg) scaled = -scaled;
  std::string s = scaled.str();
  if (digits > 0) {
    if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<size_t>(digits) - s.size() + 1, '0');
    s.insert(s.size() - static_cast<size_t>(digits), ".");
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  }
  return (neg && s != "0") ? "-" + s : s;
}

namespace {

std::string svg_xy(const DyadicPoint& p) {
  // Screen space: y grows downward, so the exact negation keeps the figure
  // in the usual mathematical orientation.
  return rat_decimal_string(p[0].to_rational()) + "\" cy=\"" +
         rat_decimal_string(-p[1].to_rational());
}

}  // namespace

std::string render_svg(const RationalPolytope& hull, const std::vector<DyadicPoint>& generators,
                       const std::vector<DyadicPoint>& found) {
  if (hull.ambient_dim() != 2) throw std::invalid_argument("render_svg: 2-dimensional scenes only");
  BigRat min_x, max_x, min_y, max_y;
  bool first = true;
  for (const auto& v : hull.vertices()) {
    BigRat x = v[0].to_rational(), y = v[1].to_rational();
    if (first || x < min_x) min_x = x;
    if (first || x > max_x) max_x = x;
    if (first || y < min_y) min_y = y;
    if (first || y > max_y) max_y = y;
    first = false;
  }
  BigRat width = max_x - min_x, height = max_y - min_y;
  if (width == 0) width = 1;
  if (height == 0) height = 1;
  BigRat mx = width / 10, my = height / 10;
  BigRat vb_x = min_x - mx, vb_y = -max_y - my;
  BigRat vb_w = width + 2 * mx, vb_h = height + 2 * my;
  BigRat unit = std::max(vb_w, vb_h);
  std::string r_gen = rat_decimal_string(unit / 100);
  std::string r_found = rat_decimal_string(unit / 200);
  std::string stroke = rat_decimal_string(unit / 250);

  std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" +
                    rat_decimal_string(vb_x) + " " + rat_decimal_string(vb_y) + " " +
                    rat_decimal_string(vb_w) + " " + rat_decimal_string(vb_h) + "\">\n";

  // Hull edges: 2-dimensional hulls draw every facet segment; segments and
  // points fall back to the vertex list itself.
  if (hull.dim() == 2) {
    for (const auto& f : hull.facets()) {
      const DyadicPoint& p = hull.vertices()[static_cast<size_t>(f.tight[0])];
      const DyadicPoint& q = hull.vertices()[static_cast<size_t>(f.tight[1])];
      svg += "  <line x1=\"" + rat_decimal_string(p[0].to_rational()) + "\" y1=\"" +
             rat_decimal_string(-p[1].to_rational()) + "\" x2=\"" +
             rat_decimal_string(q[0].to_rational()) + "\" y2=\"" +
             rat_decimal_string(-q[1].to_rational()) + "\" stroke=\"#444\" stroke-width=\"" +
             stroke + "\"/>\n";
    }
  } else if (hull.vertices().size() == 2) {
    const DyadicPoint& p = hull.vertices()[0];
    const DyadicPoint& q = hull.vertices()[1];
    svg += "  <line x1=\"" + rat_decimal_string(p[0].to_rational()) + "\" y1=\"" +
           rat_decimal_string(-p[1].to_rational()) + "\" x2=\"" +
           rat_decimal_string(q[0].to_rational()) + "\" y2=\"" +
           rat_decimal_string(-q[1].to_rational()) + "\" stroke=\"#444\" stroke-width=\"" + stroke +
           "\"/>\n";
  }
  for (const auto& p : found) {
    svg += "  <circle cx=\"" + svg_xy(p) + "\" r=\"" + r_found + "\" fill=\"#2a6fdb\"/>\n";
  }
  for (const auto& p : generators) {
    svg += "  <circle cx=\"" + svg_xy(p) + "\" r=\"" + r_gen + "\" fill=\"#d1342f\"/>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace dyconvex
