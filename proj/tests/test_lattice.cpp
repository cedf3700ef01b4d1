#include <doctest.h>

#include <stdexcept>

#include "dyconvex/lattice.hpp"
#include "oracle_helpers.hpp"

using namespace dyconvex;
using dytest::dr;
using dytest::pt2;

namespace {

IntMatrix random_int_matrix(std::mt19937_64& g, int rows, int cols, long long mag) {
  std::uniform_int_distribution<long long> d(-mag, mag);
  IntMatrix m(static_cast<size_t>(rows), std::vector<BigInt>(static_cast<size_t>(cols)));
  for (auto& row : m)
    for (auto& v : row) v = BigInt(d(g));
  return m;
}

bool is_identity(const IntMatrix& m) {
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m[i].size(); ++j)
      if (m[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

RatMatrix to_rat(const IntMatrix& m) {
  RatMatrix r(m.size());
  for (size_t i = 0; i < m.size(); ++i)
    for (const auto& v : m[i]) r[i].emplace_back(v);
  return r;
}

}  // namespace

TEST_CASE("smith normal form properties on random matrices") {
  auto g = dytest::rng(201);
  std::uniform_int_distribution<int> dim(1, 4);
  for (int iter = 0; iter < 120; ++iter) {
    int rows = dim(g), cols = dim(g);
    IntMatrix m = random_int_matrix(g, rows, cols, 9);
    SmithDecomposition w = smith_normal_form(m);
    BigInt du = int_det(w.u);
    CHECK((du == 1 || du == -1));
    BigInt dv = int_det(w.v);
    CHECK((dv == 1 || dv == -1));
    CHECK(is_identity(mat_mul(w.u_inv, w.u)));
    CHECK(mat_mul(mat_mul(w.u, m), w.v) == w.s);
    int nonzero = 0;
    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j < cols; ++j) {
        if (i != j) CHECK(w.s[static_cast<size_t>(i)][static_cast<size_t>(j)] == 0);
      }
      if (i < cols && w.s[static_cast<size_t>(i)][static_cast<size_t>(i)] != 0) ++nonzero;
    }
    CHECK(nonzero == w.rank);
    CHECK(w.rank == rat_rank(to_rat(m)));
    for (int i = 0; i + 1 < std::min(rows, cols); ++i) {
      const BigInt& a = w.s[static_cast<size_t>(i)][static_cast<size_t>(i)];
      const BigInt& b = w.s[static_cast<size_t>(i) + 1][static_cast<size_t>(i) + 1];
      CHECK(a >= 0);
      if (a != 0 && b != 0) CHECK(b % a == 0);
      if (a == 0) CHECK(b == 0);
    }
  }
}

TEST_CASE("determinants") {
  CHECK(int_det({{BigInt(2), BigInt(3)}, {BigInt(1), BigInt(4)}}) == 5);
  CHECK(int_det(identity_matrix(5)) == 1);
  auto g = dytest::rng(202);
  for (int iter = 0; iter < 60; ++iter) {
    IntMatrix m = random_int_matrix(g, 3, 3, 7);
    CHECK(rat_det(to_rat(m)) == BigRat(int_det(m)));
  }
}

TEST_CASE("lattice membership and span invariance") {
  // D-span of (3,0),(0,1): first coordinate must be divisible by 3 over D.
  auto l = DyadicLattice::from_generators(2, {{dr(3, 0), dr(0, 0)}, {dr(0, 0), dr(1, 0)}});
  CHECK(l.rank() == 2);
  CHECK(l.invariants() == std::vector<BigInt>{BigInt(1), BigInt(3)});
  CHECK(l.member(pt2(3, 5)));
  CHECK(l.member(dytest::dpt2(dr(3, -1), dr(7, -4))));
  CHECK(!l.member(pt2(1, 0)));
  CHECK(!l.member(dytest::dpt2(dr(1, -1), dr(0, 0))));
  CHECK(!l.is_saturated());

  // Powers of two are units: doubling generators changes nothing.
  auto doubled = DyadicLattice::from_generators(2, {{dr(6, 0), dr(0, 0)}, {dr(0, 0), dr(4, 0)}});
  CHECK(l == doubled);

  auto sat = l.saturate();
  CHECK(sat.member(pt2(1, 0)));
  CHECK(sat.is_saturated());
  CHECK(sat.includes(l));
  CHECK(!l.includes(sat));
  CHECK(sat.invariants() == std::vector<BigInt>{BigInt(1), BigInt(1)});

  auto zero = DyadicLattice::zero(2);
  CHECK(zero.rank() == 0);
  CHECK(zero.member(pt2(0, 0)));
  CHECK(!zero.member(pt2(0, 1)));
}

TEST_CASE("random combinations stay inside their lattice") {
  auto g = dytest::rng(203);
  std::uniform_int_distribution<int> nd(1, 3);
  for (int iter = 0; iter < 60; ++iter) {
    int dim = nd(g) + 1;
    int ngen = nd(g);
    std::vector<std::vector<DyadicRational>> gens;
    for (int k = 0; k < ngen; ++k) {
      std::vector<DyadicRational> v;
      for (int i = 0; i < dim; ++i) v.push_back(dytest::random_dyadic(g, 3, 6));
      gens.push_back(std::move(v));
    }
    auto lat = DyadicLattice::from_generators(dim, gens);
    std::vector<DyadicRational> combo(static_cast<size_t>(dim));
    for (const auto& gen : gens) {
      DyadicRational c = dytest::random_dyadic(g, 4, 9);
      for (int i = 0; i < dim; ++i) combo[static_cast<size_t>(i)] += c * gen[static_cast<size_t>(i)];
    }
    CHECK(lat.member(combo));
    CHECK(lat.saturate().member(combo));
    // Unimodular recombination of two generators preserves the span.
    if (gens.size() >= 2) {
      auto gens2 = gens;
      // Coefficient matrix [[1,2],[1,1]] has determinant -1.
      for (int i = 0; i < dim; ++i) {
        gens2[0][static_cast<size_t>(i)] += gens[1][static_cast<size_t>(i)].mul_pow2(1);
        gens2[1][static_cast<size_t>(i)] += gens[0][static_cast<size_t>(i)];
      }
      CHECK(lat == DyadicLattice::from_generators(dim, gens2));
    }
  }
}

TEST_CASE("affine maps compose, invert, and classify") {
  AffineMap f({{BigRat(0), BigRat(1)}, {BigRat(1), BigRat(0)}}, {BigRat(1), BigRat(-2)});
  AffineMap h({{BigRat(1, 2), BigRat(0)}, {BigRat(3), BigRat(1)}}, {BigRat(0), BigRat(5)});
  auto g = dytest::rng(204);
  for (int iter = 0; iter < 40; ++iter) {
    DyadicPoint p = dytest::random_point(g, 2, 4, 20);
    auto pr = to_rational_vector(p);
    CHECK(f.compose(h).apply_rational(pr) == h.apply_rational(f.apply_rational(pr)));
    CHECK(f.invert().apply(f.apply(p)) == p);
    CHECK(AffineMap::identity(2).apply(p) == p);
  }
  CHECK(f.compose(h).det() == f.det() * h.det());
  CHECK(f.in_affine_group());
  CHECK(h.in_affine_group());

  AffineMap odd_scale({{BigRat(3), BigRat(0)}, {BigRat(0), BigRat(1)}}, {BigRat(0), BigRat(0)});
  CHECK(odd_scale.has_dyadic_entries());
  CHECK(!odd_scale.in_affine_group());
  AffineMap third({{BigRat(1, 3), BigRat(0)}, {BigRat(0), BigRat(1)}}, {BigRat(0), BigRat(0)});
  CHECK(!third.has_dyadic_entries());
  CHECK_THROWS_AS(third.apply(pt2(1, 0)), std::domain_error);
  CHECK(third.apply(pt2(3, 1)) == pt2(1, 1));

  CHECK(AffineMap::translation({BigRat(2), BigRat(-1)}).apply(pt2(0, 0)) == pt2(2, -1));
}

TEST_CASE("affine subspaces and their hulls") {
  auto s = affine_hull({pt2(1, 1), pt2(4, 1), pt2(1, 3)});
  CHECK(s.rank() == 2);
  CHECK(s.lattice().invariants() == std::vector<BigInt>{BigInt(1), BigInt(3)});
  CHECK(s.contains(pt2(4, 3)));
  CHECK(s.contains(dytest::dpt2(dr(5, -1), dr(0, 0))));  // 1 + 3/2
  CHECK(!s.contains(pt2(2, 1)));
  CHECK(subspace_equal(s, affine_hull({pt2(4, 1), pt2(1, 3), pt2(1, 1)})));
  CHECK(!subspace_equal(s, affine_hull({pt2(0, 0), pt2(1, 0), pt2(0, 1)})));

  auto line = affine_hull({pt2(0, 3), pt2(2, 3)});
  CHECK(line.rank() == 1);
  CHECK(line.contains(dytest::dpt2(dr(7, -2), dr(3, 0))));
  CHECK(!line.contains(pt2(0, 0)));
}

TEST_CASE("rescale iso round trips") {
  auto g = dytest::rng(205);
  std::vector<AffineDyadicSubspace> cases = {
      affine_hull({pt2(1, 1), pt2(4, 1), pt2(1, 3)}),
      affine_hull({pt2(0, 3), pt2(2, 3)}),
      affine_hull({pt2(0, 0), pt2(3, 15), pt2(6, 0)}),
      AffineDyadicSubspace(pt2(5, -2), DyadicLattice::from_generators(2, {{dr(3, 0), dr(9, 0)}})),
  };
  for (const auto& s : cases) {
    auto iso = rescale_iso(s);
    auto base_std = iso.to_standard.apply(s.base());
    for (int i = 0; i < s.rank(); ++i) CHECK(base_std[i].is_zero());
    for (int iter = 0; iter < 25; ++iter) {
      DyadicPoint z = dytest::random_point(g, s.rank(), 4, 12);
      DyadicPoint back = iso.from_standard.apply(z);
      CHECK(s.contains(back));
      CHECK(iso.to_standard.apply(back) == z);
    }
    // Subspace points map exactly and return unchanged.
    DyadicPoint q = s.base();
    for (const auto& bvec : s.lattice().basis()) {
      std::vector<DyadicRational> c;
      for (const auto& v : bvec) c.push_back(DyadicRational::from_integer(v));
      q = q + DyadicPoint(std::move(c));
    }
    CHECK(s.contains(q));
    CHECK(iso.from_standard.apply(iso.to_standard.apply(q)) == q);
  }
}

TEST_CASE("rational vector conversions") {
  DyadicPoint p{dr(3, -2), dr(-5, 0)};
  auto v = to_rational_vector(p);
  CHECK(v == std::vector<BigRat>{BigRat(3, 4), BigRat(-5)});
  CHECK(to_dyadic_point(v) == p);
  CHECK(!to_dyadic_point({BigRat(1, 3), BigRat(0)}).has_value());
}
