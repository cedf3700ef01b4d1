#pragma once

#include <array>
#include <string>
#include <utility>

#include "dyconvex/groupoid.hpp"

namespace dyconvex {

// Isomorphism type of a one-dimensional groupoid: <X> is isomorphic to the
// integer interval [0, type_k] with its midpoint structure.
struct IntervalDescriptor {
  BigInt type_k;  // odd positive
  std::pair<DyadicPoint, DyadicPoint> endpoints;
  DyadicRational lattice_step;  // odd invariant of the line's lattice
};

IntervalDescriptor interval_type(const GeneratorSet& x);
bool intervals_isomorphic(const GeneratorSet& x, const GeneratorSet& y);

// Type of the full dyadic segment [v1, v2]: the gcd of the odd parts of the
// nonzero coordinate differences.
BigInt segment_type(const DyadicPoint& v1, const DyadicPoint& v2);

enum class TriangleClass { Right, Hat, Other };
std::string class_name(TriangleClass c);

// Representative triangle with vertices (0,0), (i,j), (m,n) in first-quadrant
// position; boundary lists the side types opposite each vertex in that order.
struct TriangleDescriptor {
  BigInt i, j, m, n;
  TriangleClass cls = TriangleClass::Right;
  std::array<BigInt, 3> boundary{};
};

// Class of a representative parameter tuple. Requires the first-quadrant
// conventions (0 <= i < m, 0 <= n < j, odd gcd{i,m} and gcd{j,n}); throws
// when the tuple matches no class.
TriangleClass classify_representative(const BigInt& i, const BigInt& j, const BigInt& m,
                                      const BigInt& n);

// classify_representative plus the boundary types of the representative.
TriangleDescriptor make_triangle_descriptor(const BigInt& i, const BigInt& j, const BigInt& m,
                                            const BigInt& n);

std::array<DyadicPoint, 3> representative_vertices(const TriangleDescriptor& d);

// Side types opposite v1, v2, v3, in that order.
std::array<BigInt, 3> boundary_type(const DyadicPoint& v1, const DyadicPoint& v2,
                                    const DyadicPoint& v3);

struct TriangleRepresentative {
  TriangleDescriptor desc;
  AffineMap witness;  // carries the input vertex set exactly onto the representative's
  int depth = 0;      // moves composed in the witness
  bool reduced_odd_content = false;  // witness divides by an odd scalar (not a D-map)
};

struct NormalizeResult {
  TriangleRepresentative chosen;
  std::vector<TriangleRepresentative> candidates;  // unique tuples, best first
};

// Bounded search for a representative triangle isomorphic to the input: each
// pointing translation is followed by a breadth-first search over reflections,
// integer shears, axis swaps and single-axis doublings, in two passes (the
// raw vertex differences, and the differences with their common odd content
// divided out; the latter witnesses carry an odd scaling and are flagged).
// Chosen representative: best class (Right > Hat > Other), then least depth,
// raw pass before reduced, then least tuple. Throws when the search space is
// exhausted without finding any representative (not a proof of non-existence).
NormalizeResult normalize_triangle(const DyadicPoint& v1, const DyadicPoint& v2,
                                   const DyadicPoint& v3, int max_depth = 12);

// |X| equals affine rank + 1 (an affinely independent generating family).
bool is_algebraic_simplex(const GeneratorSet& x);

}  // namespace dyconvex
