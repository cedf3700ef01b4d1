#pragma once

#include <vector>

#include "dyconvex/lattice.hpp"

namespace dyconvex {

// Supporting halfspace of the hull: normal . x >= offset, with equality on
// the listed vertices. Normals are primitive integer vectors pointing inward.
struct Facet {
  std::vector<BigInt> normal;
  BigRat offset;
  std::vector<int> tight;  // vertex indices, sorted ascending
};

// Equation normal . x == value satisfied by every hull point; present only
// when the hull is lower-dimensional than its ambient space.
struct SpanEquation {
  std::vector<BigInt> normal;
  BigRat value;
};

struct Face {
  std::vector<int> vertices;  // indices into RationalPolytope::vertices(), sorted
  int dim = 0;

  bool operator==(const Face& o) const { return vertices == o.vertices; }
};

// Exact convex hull over the rationals. Vertices keep the order in which
// they were first encountered in the input.
class RationalPolytope {
 public:
  RationalPolytope() = default;  // empty; meaningful instances come from convex_hull

  int ambient_dim() const { return ambient_dim_; }
  int dim() const { return dim_; }
  const std::vector<DyadicPoint>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }
  const std::vector<SpanEquation>& span_equations() const { return span_eqs_; }

  bool contains(const DyadicPoint& p) const;
  bool contains_rational(const std::vector<BigRat>& p) const;
  bool relint_contains(const DyadicPoint& p) const;
  bool relint_contains_rational(const std::vector<BigRat>& p) const;

  Face whole_face() const;
  // Unique face having p in its relative interior; requires contains(p).
  Face minimal_face(const DyadicPoint& p) const;
  bool face_contains(const Face& f, const DyadicPoint& p) const;
  std::vector<Face> face_lattice() const;  // all nonempty faces, ascending dim
  std::vector<DyadicPoint> face_points(const Face& f) const;

 private:
  friend RationalPolytope convex_hull(const std::vector<DyadicPoint>& points);

  int ambient_dim_ = 0;
  int dim_ = 0;
  std::vector<DyadicPoint> vertices_;
  std::vector<Facet> facets_;
  std::vector<SpanEquation> span_eqs_;
};

RationalPolytope convex_hull(const std::vector<DyadicPoint>& points);

// Dimension of the affine span over the rationals.
int affine_rank(const std::vector<DyadicPoint>& points);

}  // namespace dyconvex
