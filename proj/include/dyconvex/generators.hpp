#pragma once

#include <string>
#include <vector>

#include "dyconvex/groupoid.hpp"

namespace dyconvex {

// Outcome of a constructive generator synthesis. validate() re-derives the
// descriptor of the produced set and compares it with the target, so the
// check is independent of how the construction log says the set was built.
struct GenerationCertificate {
  SemipolytopeDescriptor target;
  bool target_is_polytope = false;  // target is every dyadic point of target.hull
  std::vector<DyadicPoint> produced;
  std::vector<std::string> construction_log;

  bool validate() const;
};

// Same subgroupoid: equal hulls (as vertex sets) and, face by matching face,
// equal affine subspaces. Membership factors through exactly this data.
bool descriptor_equal(const SemipolytopeDescriptor& a, const SemipolytopeDescriptor& b);

// A polytope viewed as a geometric convex set: every face carries all dyadic
// points of its affine span (saturated lattices).
SemipolytopeDescriptor polytope_descriptor(const RationalPolytope& p);

// True iff [a,b] or [b,c] has 2-power length; then {a,b,c} generates every
// dyadic point of [a,c]. Requires a < b < c.
bool three_point_generates_interval(const DyadicRational& a, const DyadicRational& b,
                                    const DyadicRational& c);

// Dyadic value strictly inside (t1, t2), of minimal denominator exponent,
// ties broken by minimal value.
DyadicRational dyadic_between_scalar(const BigRat& t1, const BigRat& t2);

// p + d (q - p) for d = dyadic_between_scalar(t1, t2).
DyadicPoint dyadic_between(const DyadicPoint& p, const DyadicPoint& q, const BigRat& t1,
                           const BigRat& t2);

// {a, a + 2^-k e_1, ..., a + 2^-k e_n} for the least k >= 0 keeping every
// point inside the full-dimensional polytope p; requires a in the interior.
std::vector<DyadicPoint> inner_simplex(const RationalPolytope& p, const DyadicPoint& a);

struct WallLineTriple {
  DyadicPoint b, c, d;
};

// For an interior point a outside the simplex hull: b on a maximal wall of s
// (inside the wall's subgroupoid), c and d in the simplex hull's interior,
// all collinear with a strictly between b and c, and [d, c] of segment type
// 1. Then a is generated by b together with generators of the simplex.
WallLineTriple wall_line_triple(const SemipolytopeDescriptor& s,
                                const std::vector<DyadicPoint>& simplex, const DyadicPoint& a);
WallLineTriple wall_line_triple(const RationalPolytope& p, const std::vector<DyadicPoint>& simplex,
                                const DyadicPoint& a);

// Recursive generator synthesis for a polytope: segment endpoints plus a
// 2-power breakpoint when the type is not 1; in higher dimension the walls'
// generators, plus an inner simplex when the boundary alone is not enough.
GenerationCertificate generating_set_polytope(const RationalPolytope& p);

// One relative-interior point per maximal wall, inside the wall's
// subgroupoid; chosen at minimal exponent, then lexicographically, in the
// wall subspace's standard coordinates.
std::vector<DyadicPoint> anchors(const SemipolytopeDescriptor& s);

// Convex hull of the anchors; throws if it drops dimension.
RationalPolytope inner_polytope(const SemipolytopeDescriptor& s,
                                const std::vector<DyadicPoint>& anchor_points);

// Recursive generator synthesis for a semipolytope descriptor: generators of
// all maximal walls (each a semipolytope in its affine D-hull) plus a
// generating set of an inner polytope; 2-dimensional descriptors with
// triangle hulls use side generators plus two right-simplex tips instead.
GenerationCertificate generating_set_semipolytope(const SemipolytopeDescriptor& s);
GenerationCertificate generating_set_semipolytope(const GeneratorSet& x);

// Greedy single-pass removal, candidates ordered by descending denominator
// exponent then ascending lexicographic order; x is dropped only when both
// member(x, rest) and equals_groupoid(rest, original) hold. The result is
// irredundant: removing any single element changes the groupoid.
GeneratorSet irredundant_reduce(const GeneratorSet& x);

}  // namespace dyconvex
