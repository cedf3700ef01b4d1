#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "dyconvex/generators.hpp"

namespace dyconvex {

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;

BigRat dot_rat(const std::vector<BigInt>& n, const std::vector<BigRat>& x) {
  BigRat s = 0;
  for (size_t i = 0; i < n.size(); ++i) s += BigRat(n[i]) * x[i];
  return s;
}

BigInt rat_ceil(const BigRat& q) { return -rat_floor(-q); }

std::vector<DyadicPoint> dedup_points(const std::vector<DyadicPoint>& in) {
  std::vector<DyadicPoint> out;
  std::set<DyadicPoint> seen;
  for (const auto& p : in) {
    if (seen.insert(p).second) out.push_back(p);
  }
  return out;
}

// Left midpoint fold; positive dyadic weights on every input, so the result
// is in the relative interior of the hull when the inputs span it.
DyadicPoint cascade(const std::vector<DyadicPoint>& pts) {
  DyadicPoint r = pts.at(0);
  for (size_t i = 1; i < pts.size(); ++i) r = midpoint(r, pts[i]);
  return r;
}

// to - from = odd_content * 2^unit_exp * w with w a primitive integer vector.
std::vector<BigInt> primitive_integer_direction(const DyadicPoint& from, const DyadicPoint& to,
                                                std::int64_t* unit_exp, BigInt* odd_content) {
  std::int64_t s = 0;
  bool any = false;
  for (int i = 0; i < from.dim(); ++i) {
    DyadicRational d = to[i] - from[i];
    if (d.is_zero()) continue;
    s = any ? std::min(s, d.exponent()) : d.exponent();
    any = true;
  }
  if (!any) throw std::invalid_argument("primitive_integer_direction: equal points");
  std::vector<BigInt> v(static_cast<size_t>(from.dim()), 0);
  BigInt g = 0;
  for (int i = 0; i < from.dim(); ++i) {
    DyadicRational d = to[i] - from[i];
    if (d.is_zero()) continue;
    v[static_cast<size_t>(i)] = d.mantissa() << static_cast<unsigned>(d.exponent() - s);
    g = gcd(g, v[static_cast<size_t>(i)]);
  }
  g = abs(g);
  for (auto& c : v) c /= g;
  if (unit_exp) *unit_exp = s;
  if (odd_content) *odd_content = g;  // odd: some v[i] had exponent exactly s
  return v;
}

DyadicPoint add_scaled(const DyadicPoint& p, const DyadicRational& s,
                       const std::vector<BigInt>& w) {
  std::vector<DyadicRational> c = p.coords();
  for (size_t i = 0; i < c.size(); ++i) c[i] += s * DyadicRational(w[i], 0);
  return DyadicPoint(std::move(c));
}

// Open parameter interval with a + s w in the relative interior of sp, or
// nothing when the line misses it (or leaves sp's affine span).
std::optional<std::pair<BigRat, BigRat>> line_relint_interval(const RationalPolytope& sp,
                                                              const DyadicPoint& a,
                                                              const std::vector<BigInt>& w) {
  std::vector<BigRat> ar = to_rational_vector(a);
  std::vector<BigRat> wr(w.size());
  for (size_t i = 0; i < w.size(); ++i) wr[i] = BigRat(w[i]);
  for (const auto& eq : sp.span_equations()) {
    if (dot_rat(eq.normal, wr) != 0) return std::nullopt;
    if (dot_rat(eq.normal, ar) != eq.value) return std::nullopt;
  }
  std::optional<BigRat> lo, hi;
  for (const auto& f : sp.facets()) {
    BigRat slope = dot_rat(f.normal, wr);
    BigRat v = dot_rat(f.normal, ar);
    if (slope == 0) {
      if (v <= f.offset) return std::nullopt;
      continue;
    }
    BigRat t = (f.offset - v) / slope;
    if (slope > 0) {
      if (!lo || t > *lo) lo = t;
    } else {
      if (!hi || t < *hi) hi = t;
    }
  }
  if (!lo || !hi || *lo >= *hi) return std::nullopt;
  return std::make_pair(*lo, *hi);
}

std::vector<BigRat> apply_linear(const AffineMap& m, const std::vector<BigRat>& v) {
  std::vector<BigRat> r(static_cast<size_t>(m.out_dim()), 0);
  for (size_t i = 0; i < v.size(); ++i) {
    for (size_t j = 0; j < r.size(); ++j) r[j] += v[i] * m.matrix()[i][j];
  }
  return r;
}

DyadicPoint as_dyadic(const std::vector<BigRat>& v, const char* who) {
  auto p = to_dyadic_point(v);
  if (!p) throw std::logic_error(std::string(who) + ": expected a dyadic image");
  return *p;
}

bool descriptor_geometric(const SemipolytopeDescriptor& s) {
  for (const auto& [face, sub] : s.per_face_subspace) {
    if (!sub.lattice().is_saturated()) return false;
  }
  return true;
}

Face facet_face(const RationalPolytope& hull, const Facet& f) {
  return Face{f.tight, hull.dim() - 1};
}

// Given an admissible wall point b, finish the construction: c and d inside
// the simplex hull on the line through b and a, beyond a.
std::optional<WallLineTriple> finish_triple(const DyadicPoint& b, const DyadicPoint& a,
                                            const RationalPolytope& sp) {
  std::vector<BigInt> w = primitive_integer_direction(b, a, nullptr, nullptr);
  auto interval = line_relint_interval(sp, a, w);
  if (!interval) return std::nullopt;
  auto [s_lo, s_hi] = *interval;
  if (s_lo <= 0) return std::nullopt;  // simplex on the wrong side of a
  DyadicRational s_c = dyadic_between_scalar(s_lo, s_hi);
  BigRat gap = s_c.to_rational() - s_lo;
  std::int64_t j = 0;
  BigRat p2 = 1;
  while (p2 >= gap) {
    p2 /= 2;
    --j;
  }
  while (p2 * 2 < gap) {
    p2 *= 2;
    ++j;
  }
  DyadicRational s_d = s_c - DyadicRational(1, j);
  return WallLineTriple{b, add_scaled(a, s_c, w), add_scaled(a, s_d, w)};
}

std::vector<DyadicPoint> synth_polytope(const RationalPolytope& p, std::vector<std::string>& log);
std::vector<DyadicPoint> synth_semipolytope(const SemipolytopeDescriptor& s,
                                            std::vector<std::string>& log);

std::vector<DyadicPoint> segment_generators(const RationalPolytope& p,
                                            std::vector<std::string>& log) {
  const DyadicPoint& u = p.vertices()[0];
  const DyadicPoint& v = p.vertices()[1];
  std::int64_t t = 0;
  BigInt c = 0;
  std::vector<BigInt> w = primitive_integer_direction(u, v, &t, &c);
  std::vector<DyadicPoint> gens{u, v};
  if (c != 1) {
    DyadicPoint extra = add_scaled(u, DyadicRational(1, t), w);
    gens.push_back(extra);
    log.push_back("segment " + u.to_string() + " .. " + v.to_string() + ": type " + c.str() +
                  ", breakpoint " + extra.to_string());
  } else {
    log.push_back("segment " + u.to_string() + " .. " + v.to_string() + ": type 1");
  }
  return gens;
}

std::vector<DyadicPoint> synth_polytope(const RationalPolytope& p,
                                        std::vector<std::string>& log) {
  if (p.dim() == 0) {
    log.push_back("point " + p.vertices()[0].to_string());
    return {p.vertices()[0]};
  }
  if (p.dim() == 1) return segment_generators(p, log);
  if (p.dim() < p.ambient_dim()) {
    AffineDyadicSubspace span = affine_hull(p.vertices());
    AffineDyadicSubspace sat(span.base(), span.lattice().saturate());
    SubspaceIso iso = rescale_iso(sat);
    std::vector<DyadicPoint> std_verts;
    std_verts.reserve(p.vertices().size());
    for (const auto& v : p.vertices()) std_verts.push_back(iso.to_standard.apply(v));
    log.push_back("transported a " + std::to_string(p.dim()) +
                  "-dimensional polytope to standard coordinates");
    std::vector<DyadicPoint> rec = synth_polytope(convex_hull(std_verts), log);
    std::vector<DyadicPoint> out;
    out.reserve(rec.size());
    for (const auto& q : rec) out.push_back(iso.from_standard.apply(q));
    return out;
  }
  std::vector<DyadicPoint> sides;
  for (const auto& f : p.facets()) {
    auto wall = synth_polytope(convex_hull(p.face_points(facet_face(p, f))), log);
    sides.insert(sides.end(), wall.begin(), wall.end());
  }
  sides = dedup_points(sides);
  if (is_geometric(GeneratorSet(sides))) {
    log.push_back("boundary generators already generate the whole polytope");
    return sides;
  }
  DyadicPoint a = cascade(p.vertices());
  std::vector<DyadicPoint> simplex = inner_simplex(p, a);
  log.push_back("added an inner simplex at the vertex cascade point " + a.to_string());
  sides.insert(sides.end(), simplex.begin(), simplex.end());
  return dedup_points(sides);
}

// Wall of a descriptor as a semipolytope in its own right: sub-hull of the
// wall's vertices, face subspaces looked up from the parent.
SemipolytopeDescriptor wall_descriptor(const SemipolytopeDescriptor& s, const Facet& f) {
  SemipolytopeDescriptor sub;
  std::vector<DyadicPoint> wall_pts = s.hull.face_points(facet_face(s.hull, f));
  sub.hull = convex_hull(wall_pts);
  sub.vertex_set = wall_pts;
  for (const Face& g : sub.hull.face_lattice()) {
    Face parent;
    parent.dim = g.dim;
    for (int idx : g.vertices) parent.vertices.push_back(f.tight[static_cast<size_t>(idx)]);
    std::sort(parent.vertices.begin(), parent.vertices.end());
    sub.per_face_subspace.emplace_back(g, s.subspace_for(parent));
  }
  return sub;
}

std::vector<DyadicPoint> wall_generators(const SemipolytopeDescriptor& s,
                                         std::vector<std::string>& log) {
  std::vector<DyadicPoint> out;
  for (const auto& f : s.hull.facets()) {
    auto gens = synth_semipolytope(wall_descriptor(s, f), log);
    out.insert(out.end(), gens.begin(), gens.end());
  }
  return dedup_points(out);
}

std::vector<DyadicPoint> synth_semipolytope(const SemipolytopeDescriptor& s,
                                            std::vector<std::string>& log) {
  if (descriptor_geometric(s)) {
    log.push_back("descriptor is geometric: plain polytope synthesis");
    return synth_polytope(s.hull, log);
  }
  if (s.hull.dim() == 0) return {s.hull.vertices()[0]};
  const AffineDyadicSubspace& top = s.subspace_for(s.hull.whole_face());
  if (s.hull.dim() < s.hull.ambient_dim() || !top.lattice().is_saturated()) {
    SubspaceIso iso = rescale_iso(top);
    SemipolytopeDescriptor std_desc;
    std::vector<DyadicPoint> std_verts;
    for (const auto& v : s.hull.vertices()) std_verts.push_back(iso.to_standard.apply(v));
    std_desc.hull = convex_hull(std_verts);
    std_desc.vertex_set = std_verts;
    for (const auto& [face, sub] : s.per_face_subspace) {
      DyadicPoint base = iso.to_standard.apply(sub.base());
      std::vector<std::vector<DyadicRational>> basis_images;
      for (const auto& bv : sub.lattice().basis()) {
        std::vector<BigRat> vr(bv.size());
        for (size_t i = 0; i < bv.size(); ++i) vr[i] = BigRat(bv[i]);
        basis_images.push_back(
            as_dyadic(apply_linear(iso.to_standard, vr), "wall basis transport").coords());
      }
      DyadicLattice lat = DyadicLattice::from_generators(std_desc.hull.ambient_dim(), basis_images);
      std_desc.per_face_subspace.emplace_back(face, AffineDyadicSubspace(base, std::move(lat)));
    }
    log.push_back("transported the semipolytope to its top subspace's standard coordinates");
    std::vector<DyadicPoint> rec = synth_semipolytope(std_desc, log);
    std::vector<DyadicPoint> out;
    for (const auto& q : rec) out.push_back(iso.from_standard.apply(q));
    return out;
  }
  // Full-dimensional with a saturated top lattice but unsaturated walls.
  std::vector<DyadicPoint> sides = wall_generators(s, log);
  if (s.hull.dim() == 2 && s.hull.vertices().size() == 3) {
    // Semitriangle: the side generators reach a right simplex with
    // axis-parallel legs at a cascade point E (E itself is a dyadic
    // barycentric combination of the vertices, so it is already generated).
    DyadicPoint e = cascade(s.hull.vertices());
    for (std::int64_t k = 0; k <= 4096; ++k) {
      std::vector<DyadicPoint> tips;
      bool ok = true;
      for (int i = 0; i < 2 && ok; ++i) {
        std::vector<DyadicRational> c = e.coords();
        c[static_cast<size_t>(i)] += DyadicRational(1, -k);
        DyadicPoint tip{std::move(c)};
        if (!s.hull.relint_contains(tip)) ok = false;
        else tips.push_back(std::move(tip));
      }
      if (!ok) continue;
      std::vector<DyadicPoint> produced = sides;
      produced.insert(produced.end(), tips.begin(), tips.end());
      produced = dedup_points(produced);
      if (descriptor_equal(semipolytope_descriptor(GeneratorSet(produced)), s)) {
        log.push_back("semitriangle: side generators plus right-simplex tips at " + e.to_string());
        return produced;
      }
      break;  // tips fit but do not generate; fall back to the inner polytope
    }
  }
  std::vector<DyadicPoint> anchor_pts = anchors(s);
  RationalPolytope inner = inner_polytope(s, anchor_pts);
  log.push_back("inner polytope on " + std::to_string(anchor_pts.size()) + " anchors");
  std::vector<DyadicPoint> inner_gens = synth_polytope(inner, log);
  sides.insert(sides.end(), inner_gens.begin(), inner_gens.end());
  return dedup_points(sides);
}

}  // namespace

bool descriptor_equal(const SemipolytopeDescriptor& a, const SemipolytopeDescriptor& b) {
  std::vector<DyadicPoint> va = a.hull.vertices(), vb = b.hull.vertices();
  std::sort(va.begin(), va.end());
  std::sort(vb.begin(), vb.end());
  if (va != vb) return false;
  auto face_key = [](const RationalPolytope& hull, const Face& f) {
    std::vector<DyadicPoint> pts = hull.face_points(f);
    std::sort(pts.begin(), pts.end());
    return pts;
  };
  std::map<std::vector<DyadicPoint>, Face> b_faces;
  for (const Face& f : b.hull.face_lattice()) b_faces.emplace(face_key(b.hull, f), f);
  std::vector<Face> a_lattice = a.hull.face_lattice();
  if (a_lattice.size() != b_faces.size()) return false;
  for (const Face& f : a_lattice) {
    auto it = b_faces.find(face_key(a.hull, f));
    if (it == b_faces.end()) return false;
    if (!subspace_equal(a.subspace_for(f), b.subspace_for(it->second))) return false;
  }
  return true;
}

bool GenerationCertificate::validate() const {
  if (produced.empty()) return false;
  return descriptor_equal(semipolytope_descriptor(GeneratorSet(produced)), target);
}

SemipolytopeDescriptor polytope_descriptor(const RationalPolytope& p) {
  SemipolytopeDescriptor d;
  d.hull = p;
  d.vertex_set = p.vertices();
  for (const Face& f : p.face_lattice()) {
    AffineDyadicSubspace sub = affine_hull(p.face_points(f));
    d.per_face_subspace.emplace_back(f,
                                     AffineDyadicSubspace(sub.base(), sub.lattice().saturate()));
  }
  return d;
}

bool three_point_generates_interval(const DyadicRational& a, const DyadicRational& b,
                                    const DyadicRational& c) {
  if (!(a < b && b < c)) throw std::invalid_argument("three_point_generates_interval: need a < b < c");
  return (b - a).mantissa() == 1 || (c - b).mantissa() == 1;
}

DyadicRational dyadic_between_scalar(const BigRat& t1, const BigRat& t2) {
  if (t1 >= t2) throw std::invalid_argument("dyadic_between_scalar: empty interval");
  BigRat pow2 = 1;
  for (std::int64_t e = 0;; ++e, pow2 *= 2) {
    BigRat lo = t1 * pow2, hi = t2 * pow2;
    BigInt m_lo = rat_floor(lo) + 1;
    BigInt m_hi = rat_floor(hi);
    if (BigRat(m_hi) == hi) --m_hi;
    if (m_lo <= m_hi) return DyadicRational(m_lo, -e);
  }
}

DyadicPoint dyadic_between(const DyadicPoint& p, const DyadicPoint& q, const BigRat& t1,
                           const BigRat& t2) {
  if (p == q) throw std::invalid_argument("dyadic_between: equal points");
  DyadicRational d = dyadic_between_scalar(t1, t2);
  return p + d * (q - p);
}

std::vector<DyadicPoint> inner_simplex(const RationalPolytope& p, const DyadicPoint& a) {
  if (p.dim() != p.ambient_dim()) {
    throw std::invalid_argument("inner_simplex: polytope is not full-dimensional");
  }
  if (!p.relint_contains(a)) throw std::invalid_argument("inner_simplex: point not interior");
  for (std::int64_t k = 0; k <= 4096; ++k) {
    std::vector<DyadicPoint> pts{a};
    bool ok = true;
    for (int i = 0; i < p.ambient_dim() && ok; ++i) {
      std::vector<DyadicRational> c = a.coords();
      c[static_cast<size_t>(i)] += DyadicRational(1, -k);
      DyadicPoint q{std::move(c)};
      if (!p.contains(q)) ok = false;
      else pts.push_back(std::move(q));
    }
    if (ok) return pts;
  }
  throw std::logic_error("inner_simplex: no 2-power scale fits");
}

WallLineTriple wall_line_triple(const SemipolytopeDescriptor& s,
                                const std::vector<DyadicPoint>& simplex, const DyadicPoint& a) {
  const RationalPolytope& hull = s.hull;
  if (hull.dim() < 1) throw std::invalid_argument("wall_line_triple: trivial target");
  if (!hull.relint_contains(a)) {
    throw std::invalid_argument(hull.contains(a)
                                    ? "wall_line_triple: point lies on the boundary"
                                    : "wall_line_triple: point lies outside the target");
  }
  RationalPolytope sp = convex_hull(simplex);
  if (sp.contains(a)) throw std::invalid_argument("wall_line_triple: point lies in the simplex");

  std::vector<DyadicPoint> ray_anchors{cascade(simplex)};
  for (const auto& v : simplex) ray_anchors.push_back(midpoint(ray_anchors[0], v));
  ray_anchors = dedup_points(ray_anchors);

  std::vector<BigRat> ar = to_rational_vector(a);
  for (const DyadicPoint& c1 : ray_anchors) {
    // Exit point of the ray from c1 through a, beyond a.
    std::vector<BigRat> c1r = to_rational_vector(c1);
    std::vector<BigRat> dir(ar.size());
    for (size_t i = 0; i < ar.size(); ++i) dir[i] = ar[i] - c1r[i];
    std::optional<BigRat> t_exit;
    for (const auto& f : hull.facets()) {
      BigRat slope = dot_rat(f.normal, dir);
      if (slope >= 0) continue;
      BigRat t = (f.offset - dot_rat(f.normal, c1r)) / slope;
      if (!t_exit || t < *t_exit) t_exit = t;
    }
    if (!t_exit) continue;
    std::vector<BigRat> r1(ar.size());
    for (size_t i = 0; i < ar.size(); ++i) r1[i] = c1r[i] + *t_exit * dir[i];

    for (const auto& f : hull.facets()) {
      if (dot_rat(f.normal, r1) != f.offset) continue;
      Face wf = facet_face(hull, f);
      const AffineDyadicSubspace& sub = s.subspace_for(wf);

      if (sub.rank() == 0) {
        if (hull.minimal_face(sub.base()) == wf) {
          if (auto triple = finish_triple(sub.base(), a, sp)) return *triple;
        }
        continue;
      }

      SubspaceIso iso = rescale_iso(sub);
      for (int w1_idx : f.tight) {
        const DyadicPoint& w1 = hull.vertices()[static_cast<size_t>(w1_idx)];
        std::vector<BigRat> w1r = to_rational_vector(w1);
        if (w1r == r1) continue;
        std::vector<BigRat> std_w1 = iso.to_standard.apply_rational(w1r);
        std::vector<BigRat> std_r1 = iso.to_standard.apply_rational(r1);
        // Dyadic multiples of n/2^e land in D^rank along the wall line.
        BigInt denom_lcm = 1;
        bool nonzero = false;
        std::vector<BigRat> delta(std_r1.size());
        for (size_t i = 0; i < delta.size(); ++i) {
          delta[i] = std_r1[i] - std_w1[i];
          if (delta[i] != 0) {
            nonzero = true;
            denom_lcm = lcm(denom_lcm, boost::multiprecision::denominator(delta[i]));
          }
        }
        if (!nonzero) continue;
        BigRat step(denom_lcm);
        std::set<BigRat> tried;
        for (int e = 0; e <= 64; ++e, step /= 2) {
          BigInt k = rat_floor(1 / step);
          for (int off = 0; off < 2; ++off) {
            BigRat u = BigRat(k + off) * step;
            if (!tried.insert(u).second) continue;
            std::vector<BigRat> b_std(delta.size());
            for (size_t i = 0; i < delta.size(); ++i) b_std[i] = std_w1[i] + u * delta[i];
            DyadicPoint b = iso.from_standard.apply(as_dyadic(b_std, "wall line point"));
            if (!hull.contains(b) || !(hull.minimal_face(b) == wf)) continue;
            if (auto triple = finish_triple(b, a, sp)) return *triple;
          }
        }
      }
    }
  }
  throw std::runtime_error("wall_line_triple: search exhausted without an admissible wall point");
}

WallLineTriple wall_line_triple(const RationalPolytope& p, const std::vector<DyadicPoint>& simplex,
                                const DyadicPoint& a) {
  return wall_line_triple(polytope_descriptor(p), simplex, a);
}

GenerationCertificate generating_set_polytope(const RationalPolytope& p) {
  if (p.vertices().empty()) throw std::invalid_argument("generating_set_polytope: empty polytope");
  GenerationCertificate cert;
  cert.target = polytope_descriptor(p);
  cert.target_is_polytope = true;
  cert.produced = dedup_points(synth_polytope(p, cert.construction_log));
  return cert;
}

std::vector<DyadicPoint> anchors(const SemipolytopeDescriptor& s) {
  if (s.hull.dim() < 1) throw std::invalid_argument("anchors: need dimension at least 1");
  std::vector<DyadicPoint> out;
  for (const auto& f : s.hull.facets()) {
    Face wf = facet_face(s.hull, f);
    const AffineDyadicSubspace& sub = s.subspace_for(wf);
    if (sub.rank() == 0) {
      out.push_back(sub.base());
      continue;
    }
    SubspaceIso iso = rescale_iso(sub);
    std::vector<DyadicPoint> std_verts;
    for (int idx : f.tight) {
      std_verts.push_back(iso.to_standard.apply(s.hull.vertices()[static_cast<size_t>(idx)]));
    }
    RationalPolytope wall_std = convex_hull(std_verts);
    const size_t r = static_cast<size_t>(wall_std.ambient_dim());
    std::vector<BigRat> mins(r), maxs(r);
    for (size_t i = 0; i < r; ++i) {
      for (size_t vi = 0; vi < std_verts.size(); ++vi) {
        BigRat c = std_verts[vi][static_cast<int>(i)].to_rational();
        if (vi == 0 || c < mins[i]) mins[i] = c;
        if (vi == 0 || c > maxs[i]) maxs[i] = c;
      }
    }
    bool found = false;
    BigRat pow2 = 1;
    for (std::int64_t e = 0; !found && e <= 64; ++e, pow2 *= 2) {
      std::vector<BigInt> lo(r), hi(r), k(r);
      bool empty = false;
      for (size_t i = 0; i < r; ++i) {
        lo[i] = rat_ceil(mins[i] * pow2);
        hi[i] = rat_floor(maxs[i] * pow2);
        if (lo[i] > hi[i]) empty = true;
        k[i] = lo[i];
      }
      if (empty) continue;
      while (true) {
        std::vector<DyadicRational> coords(r);
        for (size_t i = 0; i < r; ++i) coords[i] = DyadicRational(k[i], -e);
        DyadicPoint z{coords};
        if (wall_std.relint_contains(z)) {
          out.push_back(iso.from_standard.apply(z));
          found = true;
          break;
        }
        // lexicographic odometer
        size_t pos = r;
        while (pos > 0) {
          --pos;
          if (k[pos] < hi[pos]) {
            ++k[pos];
            for (size_t q = pos + 1; q < r; ++q) k[q] = lo[q];
            break;
          }
          if (pos == 0) {
            pos = r + 1;  // exhausted
            break;
          }
        }
        if (pos == r + 1) break;
      }
    }
    if (!found) throw std::runtime_error("anchors: no lattice point in a wall's relative interior");
  }
  return out;
}

RationalPolytope inner_polytope(const SemipolytopeDescriptor& s,
                                const std::vector<DyadicPoint>& anchor_points) {
  RationalPolytope q = convex_hull(anchor_points);
  if (q.dim() != s.hull.dim()) throw std::invalid_argument("inner_polytope: degenerate anchors");
  return q;
}

GenerationCertificate generating_set_semipolytope(const SemipolytopeDescriptor& s) {
  if (s.hull.vertices().empty()) {
    throw std::invalid_argument("generating_set_semipolytope: empty target");
  }
  GenerationCertificate cert;
  cert.target = s;
  cert.target_is_polytope = false;
  cert.produced = dedup_points(synth_semipolytope(s, cert.construction_log));
  return cert;
}

GenerationCertificate generating_set_semipolytope(const GeneratorSet& x) {
  return generating_set_semipolytope(semipolytope_descriptor(x));
}

GeneratorSet irredundant_reduce(const GeneratorSet& x) {
  std::vector<DyadicPoint> order = x.points();
  std::sort(order.begin(), order.end(), [](const DyadicPoint& a, const DyadicPoint& b) {
    auto ea = a.max_denominator_exponent(), eb = b.max_denominator_exponent();
    if (ea != eb) return ea > eb;
    return a < b;
  });
  std::vector<DyadicPoint> current = order;
  for (const DyadicPoint& cand : order) {
    if (current.size() <= 1) break;
    std::vector<DyadicPoint> rest;
    rest.reserve(current.size() - 1);
    for (const auto& p : current) {
      if (!(p == cand)) rest.push_back(p);
    }
    if (rest.size() == current.size()) continue;  // already dropped
    GeneratorSet g_rest(rest);
    if (member(cand, g_rest) && equals_groupoid(g_rest, x)) current = std::move(rest);
  }
  std::sort(current.begin(), current.end(), [](const DyadicPoint& a, const DyadicPoint& b) {
    auto ea = a.max_denominator_exponent(), eb = b.max_denominator_exponent();
    if (ea != eb) return ea < eb;
    return a < b;
  });
  return GeneratorSet(std::move(current));
}

}  // namespace dyconvex
