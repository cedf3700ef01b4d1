#include "dyconvex/groupoid.hpp"

#include <algorithm>
#include <set>

namespace dyconvex {

namespace {

std::vector<DyadicPoint> dedup_in_order(std::vector<DyadicPoint> points) {
  if (points.empty()) throw std::invalid_argument("GeneratorSet: empty point set");
  const int dim = points[0].dim();
  std::vector<DyadicPoint> out;
  std::set<DyadicPoint> seen;
  for (auto& p : points) {
    if (p.dim() != dim) throw std::invalid_argument("GeneratorSet: mixed dimensions");
    if (seen.insert(p).second) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

GeneratorSet::GeneratorSet(std::vector<DyadicPoint> points)
    : dim_(0),
      points_(dedup_in_order(std::move(points))),
      hull_(convex_hull(points_)),
      span_(affine_hull(points_)) {
  dim_ = points_[0].dim();
}

std::vector<DyadicPoint> GeneratorSet::points_on_face(const Face& f) const {
  std::vector<DyadicPoint> out;
  for (const auto& p : points_) {
    if (hull_.face_contains(f, p)) out.push_back(p);
  }
  return out;
}

bool member(const DyadicPoint& p, const GeneratorSet& x) {
  if (p.dim() != x.dim()) throw std::invalid_argument("member: dimension mismatch");
  if (!x.hull().contains(p)) return false;
  Face f = x.hull().minimal_face(p);
  std::vector<DyadicPoint> on_face = x.points_on_face(f);
  return affine_hull(on_face).contains(p);
}

bool equals_groupoid(const GeneratorSet& x, const GeneratorSet& y) {
  if (x.dim() != y.dim()) throw std::invalid_argument("equals_groupoid: dimension mismatch");
  for (const auto& p : x.points()) {
    if (!member(p, y)) return false;
  }
  for (const auto& q : y.points()) {
    if (!member(q, x)) return false;
  }
  return true;
}

bool is_geometric(const GeneratorSet& x) {
  for (const Face& f : x.hull().face_lattice()) {
    if (!affine_hull(x.points_on_face(f)).lattice().is_saturated()) return false;
  }
  return true;
}

const AffineDyadicSubspace& SemipolytopeDescriptor::subspace_for(const Face& f) const {
  for (const auto& [face, sub] : per_face_subspace) {
    if (face == f) return sub;
  }
  throw std::invalid_argument("SemipolytopeDescriptor: unknown face");
}

SemipolytopeDescriptor semipolytope_descriptor(const GeneratorSet& x) {
  SemipolytopeDescriptor d;
  d.hull = x.hull();
  d.vertex_set = x.hull().vertices();
  for (const Face& f : x.hull().face_lattice()) {
    d.per_face_subspace.emplace_back(f, affine_hull(x.points_on_face(f)));
  }
  return d;
}

std::vector<DyadicPoint> vertices_in(const GeneratorSet& x) {
  return x.hull().vertices();
}

}  // namespace dyconvex
