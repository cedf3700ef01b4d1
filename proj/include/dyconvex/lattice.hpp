#pragma once

// D-submodules of D^n and affine D-subspaces.  Because 2 is a unit of
// D = Z[1/2], a lattice spanned by dyadic vectors can always be rescaled to
// an integer matrix; its Smith normal form then exposes the only data that
// matters over D, the odd parts of the invariant factors.

#include "dyconvex/dyadic.hpp"

#include <optional>
#include <vector>

namespace dyconvex {

using IntMatrix = std::vector<std::vector<BigInt>>;  // row-major
using RatMatrix = std::vector<std::vector<BigRat>>;

struct SmithDecomposition {
  IntMatrix u;      // rows x rows, unimodular
  IntMatrix u_inv;  // exact inverse of u
  IntMatrix s;      // diagonal, non-negative, divisibility chain
  IntMatrix v;      // cols x cols, unimodular
  int rank = 0;
};

// U * M * V = S with U, V unimodular and S = diag(s_1 | s_2 | ...), s_i >= 0.
SmithDecomposition smith_normal_form(const IntMatrix& m);

IntMatrix identity_matrix(int n);
std::vector<BigInt> mat_vec(const IntMatrix& m, const std::vector<BigInt>& x);
IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
BigInt int_det(IntMatrix m);  // exact, fraction-free elimination
BigRat rat_det(RatMatrix m);
int rat_rank(RatMatrix m);

// A finitely generated D-submodule of D^n.
class DyadicLattice {
 public:
  // Span over D of the given vectors (dyadic coordinates allowed; powers of
  // two are units and never change the span).
  static DyadicLattice from_generators(int ambient_dim, const std::vector<std::vector<DyadicRational>>& gens);
  static DyadicLattice zero(int ambient_dim) { return from_generators(ambient_dim, {}); }

  int ambient_dim() const { return ambient_dim_; }
  int rank() const { return static_cast<int>(invariants_.size()); }
  // Odd parts of the Smith invariant factors, one per rank, each >= 1.
  const std::vector<BigInt>& invariants() const { return invariants_; }
  // Integer basis vectors; basis()[i] spans invariant i's direction and the
  // lattice equals the D-span of the basis.
  const std::vector<std::vector<BigInt>>& basis() const { return basis_; }

  bool member(const std::vector<DyadicRational>& v) const;
  bool member(const DyadicPoint& v) const { return member(v.coords()); }

  bool includes(const DyadicLattice& other) const;
  bool operator==(const DyadicLattice& other) const;

  // Same rational span with every invariant forced to 1: all dyadic points
  // of the real span of the lattice.
  DyadicLattice saturate() const;
  bool is_saturated() const;

 private:
  int ambient_dim_ = 0;
  std::vector<std::vector<BigInt>> basis_;
  std::vector<BigInt> invariants_;
  IntMatrix to_smith_;  // unimodular; maps ambient integer vectors to Smith coordinates
};

// An affine map p -> p * matrix + translation acting on row vectors, with
// exact rational entries.  Maps produced by triangle normalization have
// dyadic entries and determinant +-2^k (automorphisms of D^n); subspace
// rescaling isomorphisms carry odd denominators and leave that subgroup.
class AffineMap {
 public:
  AffineMap(RatMatrix matrix, std::vector<BigRat> translation);

  static AffineMap identity(int n);
  static AffineMap translation(const std::vector<BigRat>& t);

  int in_dim() const { return static_cast<int>(matrix_.size()); }
  int out_dim() const { return static_cast<int>(translation_.size()); }
  const RatMatrix& matrix() const { return matrix_; }
  const std::vector<BigRat>& translation_vector() const { return translation_; }

  std::vector<BigRat> apply_rational(const std::vector<BigRat>& p) const;
  // Exact action; throws std::domain_error if the image leaves D^n.
  DyadicPoint apply(const DyadicPoint& p) const;

  // this, then g.
  AffineMap compose(const AffineMap& g) const;
  AffineMap invert() const;  // square and nonsingular only

  BigRat det() const;  // square only
  bool has_dyadic_entries() const;
  // Member of the affine group of D^n: dyadic entries and det = +-2^k.
  bool in_affine_group() const;

 private:
  RatMatrix matrix_;  // in_dim x out_dim
  std::vector<BigRat> translation_;
};

// base + lattice: the affine D-hull of a finite point set.
class AffineDyadicSubspace {
 public:
  AffineDyadicSubspace(DyadicPoint base, DyadicLattice lattice);

  const DyadicPoint& base() const { return base_; }
  const DyadicLattice& lattice() const { return lattice_; }
  int ambient_dim() const { return lattice_.ambient_dim(); }
  int rank() const { return lattice_.rank(); }

  bool contains(const DyadicPoint& p) const;

 private:
  DyadicPoint base_;
  DyadicLattice lattice_;
};

// Smallest affine D-subspace containing the points: base = first point,
// lattice spanned by the differences.
AffineDyadicSubspace affine_hull(const std::vector<DyadicPoint>& points);

bool subspace_equal(const AffineDyadicSubspace& a, const AffineDyadicSubspace& b);

// Mutually inverse affine isomorphisms between a subspace and the standard
// space D^rank.  to_standard is exact on subspace points; its matrix divides
// by the odd invariants, so it is generally not an automorphism of D^n.
struct SubspaceIso {
  AffineMap to_standard;    // D^n restricted to the subspace -> D^rank
  AffineMap from_standard;  // D^rank -> the subspace
};

SubspaceIso rescale_iso(const AffineDyadicSubspace& a);

std::vector<BigRat> to_rational_vector(const DyadicPoint& p);
std::optional<DyadicPoint> to_dyadic_point(const std::vector<BigRat>& v);

}  // namespace dyconvex
