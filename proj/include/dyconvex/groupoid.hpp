#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "dyconvex/hull.hpp"

namespace dyconvex {

// Finite set of generators with its cached hull geometry. The midpoint
// closure <X> is never materialized; membership is decided exactly via the
// hull's face structure plus lattice arithmetic (see member below).
class GeneratorSet {
 public:
  explicit GeneratorSet(std::vector<DyadicPoint> points);
  GeneratorSet(std::initializer_list<DyadicPoint> points)
      : GeneratorSet(std::vector<DyadicPoint>(points)) {}

  int dim() const { return dim_; }
  const std::vector<DyadicPoint>& points() const { return points_; }
  const RationalPolytope& hull() const { return hull_; }
  const AffineDyadicSubspace& affine_span() const { return span_; }

  std::vector<DyadicPoint> points_on_face(const Face& f) const;

 private:
  int dim_;
  std::vector<DyadicPoint> points_;
  RationalPolytope hull_;
  AffineDyadicSubspace span_;
};

struct ClosureReport {
  int exp_cap = 0;
  int slack = 0;
  std::vector<DyadicPoint> found;  // sorted by max denominator exponent, then lex
  std::size_t frontier_size = 0;   // peak frontier size over all rounds
  bool saturated = false;          // final round produced no new points
};

// Thrown when the closure exceeds the configured point budget
// (DYCONVEX_POINT_LIMIT, default 10^6); distinct from saturation.
class closure_limit_error : public std::runtime_error {
 public:
  explicit closure_limit_error(const std::string& what) : std::runtime_error(what) {}
};

// Breadth-first midpoint closure. Keeps every point whose coordinates have
// denominator exponent <= exp_cap + slack (generators are always kept) and
// reports those within exp_cap. Sound but not complete: a reported point is
// in <X>; an absent point proves nothing, since low-exponent points can be
// midpoints of higher-exponent ones.
ClosureReport closure_bfs(const GeneratorSet& x, int exp_cap, int slack);
ClosureReport closure_bfs_serial(const GeneratorSet& x, int exp_cap, int slack);

// Exact decision for p in <X>:
//   (i) p lies in the convex hull of X (over the rationals);
//  (ii) F := the unique face with p in its relative interior;
// (iii) p lies in the affine D-hull of the generators on F.
// The closure is a semipolytope: its interior fills the hull's relative
// interior within aff_D(X), and the wall property pushes boundary points
// down to the face's own generator subgroupoid.
bool member(const DyadicPoint& p, const GeneratorSet& x);

// Mutual generator membership.
bool equals_groupoid(const GeneratorSet& x, const GeneratorSet& y);

// True iff <X> equals the full dyadic convex hull conv_D(X): every face's
// generator subspace must be saturated (its lattice invariants all 1).
bool is_geometric(const GeneratorSet& x);

struct SemipolytopeDescriptor {
  RationalPolytope hull;
  std::vector<std::pair<Face, AffineDyadicSubspace>> per_face_subspace;
  std::vector<DyadicPoint> vertex_set;

  const AffineDyadicSubspace& subspace_for(const Face& f) const;
};

// Hull plus the affine D-hull of the generators on every face; this data
// determines <X> exactly (member factors through it).
SemipolytopeDescriptor semipolytope_descriptor(const GeneratorSet& x);

// Extreme points of the hull, always a subset of the generators.
std::vector<DyadicPoint> vertices_in(const GeneratorSet& x);

}  // namespace dyconvex
