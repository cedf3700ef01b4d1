#include "dyconvex/classify.hpp"

#include <algorithm>
#include <optional>

#include <boost/multiprecision/cpp_int.hpp>

namespace dyconvex {

namespace {

using boost::multiprecision::gcd;

std::optional<TriangleClass> classify_opt(const BigInt& i, const BigInt& j, const BigInt& m,
                                          const BigInt& n) {
  if (i < 0 || j < 0 || m < 0 || n < 0) return std::nullopt;
  if (!(i < m) || !(n < j)) return std::nullopt;
  if (gcd(i, m) % 2 == 0 || gcd(j, n) % 2 == 0) return std::nullopt;

  if (i.is_zero() && n.is_zero()) {
    if ((j % 2) != 0 && (m % 2) != 0 && j <= m) return TriangleClass::Right;
    return std::nullopt;
  }
  if (n.is_zero()) {
    if (i > 0 && 2 * i <= m && (j % 2) != 0 && j > 1 && gcd(i, j) != j) return TriangleClass::Hat;
    return std::nullopt;
  }
  if (!i.is_zero()) {
    BigInt gij = gcd(i, j), gmn = gcd(m, n);
    if (j <= m && gij != i && gij != j && gij != 1 && gmn != m && gmn != n && gmn != 1) {
      return TriangleClass::Other;
    }
  }
  return std::nullopt;
}

}  // namespace

std::string class_name(TriangleClass c) {
  switch (c) {
    case TriangleClass::Right: return "right";
    case TriangleClass::Hat: return "hat";
    case TriangleClass::Other: return "other";
  }
  throw std::logic_error("class_name: invalid class");
}

TriangleClass classify_representative(const BigInt& i, const BigInt& j, const BigInt& m,
                                      const BigInt& n) {
  auto c = classify_opt(i, j, m, n);
  if (!c) throw std::invalid_argument("classify_representative: non-representative parameter tuple");
  return *c;
}

std::array<DyadicPoint, 3> representative_vertices(const TriangleDescriptor& d) {
  auto pt = [](const BigInt& a, const BigInt& b) {
    return DyadicPoint{DyadicRational(a, 0), DyadicRational(b, 0)};
  };
  return {pt(0, 0), pt(d.i, d.j), pt(d.m, d.n)};
}

TriangleDescriptor make_triangle_descriptor(const BigInt& i, const BigInt& j, const BigInt& m,
                                            const BigInt& n) {
  TriangleDescriptor d;
  d.i = i;
  d.j = j;
  d.m = m;
  d.n = n;
  d.cls = classify_representative(i, j, m, n);
  auto v = representative_vertices(d);
  d.boundary = boundary_type(v[0], v[1], v[2]);
  return d;
}

BigInt segment_type(const DyadicPoint& v1, const DyadicPoint& v2) {
  if (v1 == v2) throw std::invalid_argument("segment_type: equal endpoints");
  DyadicPoint diff = v1 - v2;
  BigInt g = 0;
  for (int c = 0; c < diff.dim(); ++c) {
    if (diff[c].is_zero()) continue;
    g = gcd(g, odd_part(diff[c].mantissa()).first);
  }
  return boost::multiprecision::abs(g);
}

std::array<BigInt, 3> boundary_type(const DyadicPoint& v1, const DyadicPoint& v2,
                                    const DyadicPoint& v3) {
  if (affine_rank({v1, v2, v3}) != 2) throw std::invalid_argument("boundary_type: collinear input");
  return {segment_type(v2, v3), segment_type(v1, v3), segment_type(v1, v2)};
}

IntervalDescriptor interval_type(const GeneratorSet& x) {
  int rank = x.hull().dim();
  if (rank == 0) throw std::invalid_argument("interval_type: single point");
  if (rank != 1) throw std::invalid_argument("interval_type: generators are not collinear");

  const auto& verts = x.hull().vertices();
  DyadicPoint lo = std::min(verts[0], verts[1]);
  DyadicPoint hi = std::max(verts[0], verts[1]);

  const DyadicLattice& lat = x.affine_span().lattice();
  const BigInt& step = lat.invariants()[0];
  std::vector<BigInt> unit(lat.basis()[0].size());
  for (size_t c = 0; c < unit.size(); ++c) unit[c] = lat.basis()[0][c] / step;

  // Scalar position of p along the primitive direction.
  auto param = [&](const DyadicPoint& p) {
    DyadicPoint d = p - x.affine_span().base();
    for (int c = 0; c < d.dim(); ++c) {
      if (unit[static_cast<size_t>(c)].is_zero()) continue;
      auto t = DyadicRational::from_rational(d[c].to_rational() / BigRat(unit[static_cast<size_t>(c)]));
      if (!t) throw std::logic_error("interval_type: non-dyadic line parameter");
      return *t;
    }
    throw std::logic_error("interval_type: zero direction");
  };

  DyadicRational length = (param(hi) - param(lo)).abs();
  IntervalDescriptor d{odd_part(length.mantissa()).first / step,
                       {lo, hi},
                       DyadicRational(step, 0)};
  return d;
}

bool intervals_isomorphic(const GeneratorSet& x, const GeneratorSet& y) {
  return interval_type(x).type_k == interval_type(y).type_k;
}

bool is_algebraic_simplex(const GeneratorSet& x) {
  return static_cast<int>(x.points().size()) == affine_rank(x.points()) + 1;
}

}  // namespace dyconvex
