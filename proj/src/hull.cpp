#include "dyconvex/hull.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace dyconvex {

namespace {

using boost::multiprecision::gcd;
using boost::multiprecision::lcm;

BigRat dot_int_rat(const std::vector<BigInt>& a, const std::vector<BigRat>& x) {
  if (a.size() != x.size()) throw std::invalid_argument("dot: dimension mismatch");
  BigRat s = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero() || x[i].is_zero()) continue;
    s += BigRat(a[i]) * x[i];
  }
  return s;
}

// Divides out the integer content; flips sign so the first nonzero entry is
// positive when `canonical_sign` is set. Returns false for the zero vector.
bool make_primitive(std::vector<BigInt>& v, bool canonical_sign) {
  BigInt g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g.is_zero()) return false;
  for (auto& x : v) x /= g;
  if (canonical_sign) {
    for (const auto& x : v) {
      if (x.is_zero()) continue;
      if (x < 0) {
        for (auto& y : v) y = -y;
      }
      break;
    }
  }
  return true;
}

// Clears denominators of a rational matrix with one positive factor.
IntMatrix scale_matrix_to_int(const RatMatrix& m) {
  BigInt l = 1;
  for (const auto& row : m) {
    for (const auto& x : row) l = lcm(l, boost::multiprecision::denominator(x));
  }
  IntMatrix out(m.size());
  for (size_t i = 0; i < m.size(); ++i) {
    out[i].reserve(m[i].size());
    for (const auto& x : m[i]) {
      out[i].push_back(boost::multiprecision::numerator(x) * (l / boost::multiprecision::denominator(x)));
    }
  }
  return out;
}

// Integer normal of the hyperplane through r rational points in Q^r, via
// cofactor expansion of the (r-1) x r difference matrix. Zero vector means
// the points are affinely dependent.
std::vector<BigInt> hyperplane_normal(const std::vector<std::vector<BigRat>>& pts,
                                      const std::vector<int>& subset) {
  size_t r = subset.size();
  RatMatrix diff(r - 1, std::vector<BigRat>(r));
  for (size_t t = 1; t < r; ++t) {
    for (size_t j = 0; j < r; ++j) {
      diff[t - 1][j] = pts[static_cast<size_t>(subset[t])][j] - pts[static_cast<size_t>(subset[0])][j];
    }
  }
  IntMatrix d = scale_matrix_to_int(diff);
  std::vector<BigInt> normal(r);
  for (size_t j = 0; j < r; ++j) {
    IntMatrix minor(r - 1, std::vector<BigInt>(r - 1));
    for (size_t i = 0; i + 1 < r; ++i) {
      size_t cc = 0;
      for (size_t c = 0; c < r; ++c) {
        if (c == j) continue;
        minor[i][cc++] = d[i][c];
      }
    }
    BigInt det = int_det(minor);
    normal[j] = (j % 2 == 0) ? det : -det;
  }
  return normal;
}

bool next_combination(std::vector<int>& idx, int n) {
  int k = static_cast<int>(idx.size());
  for (int i = k - 1; i >= 0; --i) {
    if (idx[static_cast<size_t>(i)] < n - (k - i)) {
      ++idx[static_cast<size_t>(i)];
      for (int j = i + 1; j < k; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

int affine_rank(const std::vector<DyadicPoint>& points) {
  if (points.empty()) throw std::invalid_argument("affine_rank: empty point set");
  RatMatrix diffs;
  for (size_t i = 1; i < points.size(); ++i) {
    diffs.push_back(to_rational_vector(points[i] - points[0]));
  }
  return rat_rank(std::move(diffs));
}

RationalPolytope convex_hull(const std::vector<DyadicPoint>& points) {
  if (points.empty()) throw std::invalid_argument("convex_hull: empty point set");
  int n = points[0].dim();

  std::vector<DyadicPoint> pts;
  {
    std::set<DyadicPoint> seen;
    for (const auto& p : points) {
      if (p.dim() != n) throw std::invalid_argument("convex_hull: mixed dimensions");
      if (seen.insert(p).second) pts.push_back(p);
    }
  }
  size_t m = pts.size();

  RationalPolytope hull;
  hull.ambient_dim_ = n;

  std::vector<std::vector<BigRat>> rat_pts;
  rat_pts.reserve(m);
  for (const auto& p : pts) rat_pts.push_back(to_rational_vector(p));

  // Equations cutting out the affine span, read off the Smith transform of
  // the difference matrix: rows of U past the rank annihilate all differences.
  {
    RatMatrix diffs(m > 0 ? m - 1 : 0, std::vector<BigRat>(static_cast<size_t>(n)));
    for (size_t i = 1; i < m; ++i) {
      for (int j = 0; j < n; ++j) diffs[i - 1][static_cast<size_t>(j)] = rat_pts[i][static_cast<size_t>(j)] - rat_pts[0][static_cast<size_t>(j)];
    }
    IntMatrix cols_mat(static_cast<size_t>(n), std::vector<BigInt>(m > 1 ? m - 1 : 0));
    if (m > 1) {
      IntMatrix scaled = scale_matrix_to_int(diffs);
      for (size_t i = 0; i + 1 < m; ++i) {
        for (int j = 0; j < n; ++j) cols_mat[static_cast<size_t>(j)][i] = scaled[i][static_cast<size_t>(j)];
      }
    }
    SmithDecomposition snf = smith_normal_form(cols_mat);
    hull.dim_ = snf.rank;
    for (int i = snf.rank; i < n; ++i) {
      std::vector<BigInt> a = snf.u[static_cast<size_t>(i)];
      make_primitive(a, true);
      BigRat value = dot_int_rat(a, rat_pts[0]);
      hull.span_eqs_.push_back(SpanEquation{std::move(a), std::move(value)});
    }
  }

  int r = hull.dim_;
  if (r == 0) {
    hull.vertices_.push_back(pts[0]);
    return hull;
  }

  SubspaceIso iso = rescale_iso(affine_hull(pts));
  std::vector<std::vector<BigRat>> w;
  w.reserve(m);
  for (const auto& p : rat_pts) w.push_back(iso.to_standard.apply_rational(p));

  // Every supporting hyperplane spanned by r affinely independent input
  // points is a facet; enumerate all r-subsets and keep the supporting ones.
  std::map<std::pair<std::vector<BigInt>, BigRat>, std::vector<int>> candidates;
  std::vector<int> idx(static_cast<size_t>(r));
  for (int i = 0; i < r; ++i) idx[static_cast<size_t>(i)] = i;
  if (static_cast<size_t>(r) <= m) {
    do {
      std::vector<BigInt> a = hyperplane_normal(w, idx);
      if (!make_primitive(a, false)) continue;
      BigRat c = dot_int_rat(a, w[static_cast<size_t>(idx[0])]);
      bool pos = false, neg = false;
      std::vector<int> tight;
      for (size_t k = 0; k < m; ++k) {
        BigRat v = dot_int_rat(a, w[k]) - c;
        int s = v.sign();
        if (s > 0) pos = true;
        else if (s < 0) neg = true;
        else tight.push_back(static_cast<int>(k));
        if (pos && neg) break;
      }
      if (pos && neg) continue;
      if (neg) {
        for (auto& x : a) x = -x;
        c = -c;
      }
      candidates.emplace(std::make_pair(std::move(a), std::move(c)), std::move(tight));
    } while (next_combination(idx, static_cast<int>(m)));
  }

  // A point is a vertex exactly when its tight facet normals span the space.
  std::vector<int> vertex_index(m, -1);
  for (size_t k = 0; k < m; ++k) {
    RatMatrix normals;
    for (const auto& [key, tight] : candidates) {
      if (!std::binary_search(tight.begin(), tight.end(), static_cast<int>(k))) continue;
      std::vector<BigRat> row;
      row.reserve(key.first.size());
      for (const auto& x : key.first) row.emplace_back(x);
      normals.push_back(std::move(row));
    }
    if (rat_rank(std::move(normals)) == r) {
      vertex_index[k] = static_cast<int>(hull.vertices_.size());
      hull.vertices_.push_back(pts[k]);
    }
  }

  // Pull facet data back to ambient coordinates: a . w >= c with
  // w = p . T + t becomes (T a) . p >= c - a . t.
  const RatMatrix& t_mat = iso.to_standard.matrix();
  const std::vector<BigRat>& t_vec = iso.to_standard.translation_vector();
  for (const auto& [key, tight] : candidates) {
    const std::vector<BigInt>& a = key.first;
    std::vector<BigRat> alpha(static_cast<size_t>(n), 0);
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < r; ++i) {
        if (a[static_cast<size_t>(i)].is_zero()) continue;
        alpha[static_cast<size_t>(j)] += t_mat[static_cast<size_t>(j)][static_cast<size_t>(i)] * BigRat(a[static_cast<size_t>(i)]);
      }
    }
    BigRat c_amb = key.second;
    for (int i = 0; i < r; ++i) c_amb -= BigRat(a[static_cast<size_t>(i)]) * t_vec[static_cast<size_t>(i)];

    BigInt l = 1;
    for (const auto& x : alpha) l = lcm(l, boost::multiprecision::denominator(x));
    std::vector<BigInt> normal(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
      normal[static_cast<size_t>(j)] = boost::multiprecision::numerator(alpha[static_cast<size_t>(j)]) *
                                       (l / boost::multiprecision::denominator(alpha[static_cast<size_t>(j)]));
    }
    BigInt g = 0;
    for (const auto& x : normal) g = gcd(g, x);
    if (g.is_zero()) throw std::logic_error("convex_hull: degenerate facet normal");
    for (auto& x : normal) x /= g;
    BigRat offset = c_amb * BigRat(l, g);

    Facet f;
    f.normal = std::move(normal);
    f.offset = std::move(offset);
    for (int k : tight) {
      if (vertex_index[static_cast<size_t>(k)] >= 0) f.tight.push_back(vertex_index[static_cast<size_t>(k)]);
    }
    hull.facets_.push_back(std::move(f));
  }

  std::sort(hull.facets_.begin(), hull.facets_.end(), [](const Facet& x, const Facet& y) {
    if (x.normal != y.normal) return x.normal < y.normal;
    return x.offset < y.offset;
  });
  return hull;
}

bool RationalPolytope::contains_rational(const std::vector<BigRat>& p) const {
  if (static_cast<int>(p.size()) != ambient_dim_) throw std::invalid_argument("contains: dimension mismatch");
  for (const auto& eq : span_eqs_) {
    if (dot_int_rat(eq.normal, p) != eq.value) return false;
  }
  for (const auto& f : facets_) {
    if (dot_int_rat(f.normal, p) < f.offset) return false;
  }
  return true;
}

bool RationalPolytope::contains(const DyadicPoint& p) const {
  return contains_rational(to_rational_vector(p));
}

bool RationalPolytope::relint_contains_rational(const std::vector<BigRat>& p) const {
  if (static_cast<int>(p.size()) != ambient_dim_) throw std::invalid_argument("relint: dimension mismatch");
  for (const auto& eq : span_eqs_) {
    if (dot_int_rat(eq.normal, p) != eq.value) return false;
  }
  for (const auto& f : facets_) {
    if (dot_int_rat(f.normal, p) <= f.offset) return false;
  }
  return true;
}

bool RationalPolytope::relint_contains(const DyadicPoint& p) const {
  return relint_contains_rational(to_rational_vector(p));
}

Face RationalPolytope::whole_face() const {
  Face f;
  f.vertices.resize(vertices_.size());
  for (size_t i = 0; i < vertices_.size(); ++i) f.vertices[i] = static_cast<int>(i);
  f.dim = dim_;
  return f;
}

Face RationalPolytope::minimal_face(const DyadicPoint& p) const {
  std::vector<BigRat> x = to_rational_vector(p);
  if (!contains_rational(x)) throw std::invalid_argument("minimal_face: point outside the hull");
  std::vector<const Facet*> tight_facets;
  for (const auto& f : facets_) {
    if (dot_int_rat(f.normal, x) == f.offset) tight_facets.push_back(&f);
  }
  if (tight_facets.empty()) return whole_face();

  std::vector<int> verts = tight_facets[0]->tight;
  for (size_t i = 1; i < tight_facets.size(); ++i) {
    std::vector<int> next;
    std::set_intersection(verts.begin(), verts.end(), tight_facets[i]->tight.begin(),
                          tight_facets[i]->tight.end(), std::back_inserter(next));
    verts = std::move(next);
  }
  Face f;
  f.dim = verts.empty() ? 0 : affine_rank(face_points(Face{verts, 0}));
  f.vertices = std::move(verts);
  return f;
}

bool RationalPolytope::face_contains(const Face& f, const DyadicPoint& p) const {
  std::vector<BigRat> x = to_rational_vector(p);
  if (!contains_rational(x)) return false;
  for (const auto& facet : facets_) {
    if (!std::includes(facet.tight.begin(), facet.tight.end(), f.vertices.begin(), f.vertices.end())) {
      continue;
    }
    if (dot_int_rat(facet.normal, x) != facet.offset) return false;
  }
  return true;
}

std::vector<Face> RationalPolytope::face_lattice() const {
  std::set<std::vector<int>> sets;
  for (const auto& f : facets_) {
    if (!f.tight.empty()) sets.insert(f.tight);
  }
  // Faces are intersections of facets; close under pairwise intersection.
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<std::vector<int>> current(sets.begin(), sets.end());
    for (size_t i = 0; i < current.size(); ++i) {
      for (size_t j = i + 1; j < current.size(); ++j) {
        std::vector<int> inter;
        std::set_intersection(current[i].begin(), current[i].end(), current[j].begin(),
                              current[j].end(), std::back_inserter(inter));
        if (!inter.empty() && sets.insert(std::move(inter)).second) grew = true;
      }
    }
  }

  std::vector<Face> out;
  for (const auto& s : sets) {
    Face f;
    f.vertices = s;
    f.dim = affine_rank(face_points(f));
    out.push_back(std::move(f));
  }
  out.push_back(whole_face());
  std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.vertices < b.vertices;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<DyadicPoint> RationalPolytope::face_points(const Face& f) const {
  std::vector<DyadicPoint> out;
  out.reserve(f.vertices.size());
  for (int i : f.vertices) out.push_back(vertices_.at(static_cast<size_t>(i)));
  return out;
}

}  // namespace dyconvex
