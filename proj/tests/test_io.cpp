#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "dyconvex/io.hpp"
#include "oracle_helpers.hpp"

using namespace dyconvex;
using dytest::dr;
using dytest::pt2;

TEST_CASE("point files parse and round trip") {
  std::istringstream in(
      "# generated scene\n"
      "\n"
      "dim 2\n"
      "0, 0\n"
      "1*2^-1, 3\n"
      "3/4, -2\n");
  PointFile f = read_point_file(in, "scene");
  CHECK(f.dimension == 2);
  REQUIRE(f.points.size() == 3);
  CHECK(f.points[1] == dytest::dpt2(dr(1, -1), dr(3, 0)));
  CHECK(f.points[2] == dytest::dpt2(dr(3, -2), dr(-2, 0)));

  std::istringstream again(write_point_file(f));
  PointFile g = read_point_file(again, "echo");
  CHECK(g.dimension == f.dimension);
  CHECK(g.points == f.points);
}

TEST_CASE("point file errors carry the file name and line") {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return read_point_file(in, "bad");
  };
  CHECK_THROWS_AS(parse(""), std::runtime_error);
  CHECK_THROWS_AS(parse("dim 0\n"), std::runtime_error);
  CHECK_THROWS_AS(parse("0, 1\n"), std::runtime_error);          // missing header
  CHECK_THROWS_AS(parse("dim 2\n0\n"), std::runtime_error);      // wrong arity
  CHECK_THROWS_AS(parse("dim 2\n1/3, 0\n"), std::runtime_error); // non-dyadic
  try {
    parse("dim 2\n0, 0\nx, 1\n");
    CHECK(false);
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find("bad:3") != std::string::npos);
  }
}

TEST_CASE("report documents serialize with fixed key order") {
  ReportDocument doc;
  doc.op = "demo";
  doc.result["value"] = 7;
  std::string text = doc.to_string();
  CHECK(text.rfind("{\n  \"op\": \"demo\"", 0) == 0);
  CHECK(text.find("\"inputs\"") < text.find("\"result\""));
  CHECK(text.find("\"result\"") < text.find("\"certificate\""));
  CHECK(text.find("\"certificate\"") < text.find("\"evidence\""));
  CHECK(text.back() == '\n');
  CHECK(doc.to_string() == text);
}

TEST_CASE("points serialize as canonical literals") {
  CHECK(point_to_json(pt2(0, 0)) == "0, 0");
  CHECK(point_to_json(dytest::dpt2(dr(3, -2), dr(-1, 0))) == "3*2^-2, -1*2^0");
  Json arr = points_to_json({pt2(1, 2), pt2(3, 4)});
  CHECK(arr == Json::array({"1*2^0, 1*2^1", "3*2^0, 1*2^2"}));
}

TEST_CASE("exact decimal serialization") {
  CHECK(rat_decimal_string(BigRat(3, 4)) == "0.75");
  CHECK(rat_decimal_string(BigRat(-3, 4)) == "-0.75");
  CHECK(rat_decimal_string(BigRat(1, 10)) == "0.1");
  CHECK(rat_decimal_string(BigRat(7)) == "7");
  CHECK(rat_decimal_string(BigRat(0)) == "0");
  CHECK(rat_decimal_string(BigRat(11, 8)) == "1.375");
  CHECK(rat_decimal_string(BigRat(1, 200)) == "0.005");
  CHECK_THROWS_AS(rat_decimal_string(BigRat(1, 3)), std::invalid_argument);

  auto g = dytest::rng(701);
  for (int iter = 0; iter < 100; ++iter) {
    DyadicRational d = dytest::random_dyadic(g, 6, 500);
    CHECK(rat_decimal_string(d.to_rational()) == d.to_decimal_string());
  }
}

TEST_CASE("svg rendering is planar only") {
  auto seg = convex_hull({DyadicPoint{dr(0, 0)}, DyadicPoint{dr(1, 0)}});
  CHECK_THROWS_AS(render_svg(seg, {}, {}), std::invalid_argument);
  auto tri = convex_hull({pt2(0, 0), pt2(1, 0), pt2(0, 1)});
  std::string svg = render_svg(tri, tri.vertices(), {dytest::dpt2(dr(1, -2), dr(1, -2))});
  CHECK(svg.rfind("<svg xmlns=", 0) == 0);
  CHECK(svg.find("cx=\"0.25\" cy=\"-0.25\"") != std::string::npos);
  CHECK(svg.find("NaN") == std::string::npos);
}
