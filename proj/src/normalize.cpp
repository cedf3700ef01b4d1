#include <algorithm>
#include <array>
#include <map>
#include <optional>

#include <boost/multiprecision/cpp_int.hpp>

#include "dyconvex/classify.hpp"

namespace dyconvex {

namespace {

using boost::multiprecision::gcd;

// Canonical search state: the two vertex-difference vectors, integer, with
// their common 2-power divided out, the lexicographically smaller first.
using Key = std::array<BigInt, 4>;

struct Node {
  Key pair;
  int parent = -1;
  int move = -1;
  int depth = 0;
};

// Row-vector moves p -> p * [[a, b], [c, d]].
struct Move {
  int a, b, c, d;
};
constexpr std::array<Move, 9> kMoves{{
    {1, 0, 0, -1},   // reflect across the x-axis
    {-1, 0, 0, 1},   // reflect across the y-axis
    {0, 1, 1, 0},    // swap axes
    {1, 0, 1, 1},    // (x, y) -> (x + y, y)
    {1, 0, -1, 1},   // (x, y) -> (x - y, y)
    {1, 1, 0, 1},    // (x, y) -> (x, y + x)
    {1, -1, 0, 1},   // (x, y) -> (x, y - x)
    {2, 0, 0, 1},    // double x
    {1, 0, 0, 2},    // double y
}};

constexpr std::size_t kNodeCap = 150000;

void canonicalize_key(Key& k) {
  std::int64_t shift = -1;
  for (const auto& c : k) {
    if (c.is_zero()) continue;
    std::int64_t v = two_valuation(c);
    shift = shift < 0 ? v : std::min(shift, v);
  }
  if (shift > 0) {
    for (auto& c : k) c >>= static_cast<unsigned>(shift);
  }
  if (std::make_pair(k[2], k[3]) < std::make_pair(k[0], k[1])) {
    std::swap(k[0], k[2]);
    std::swap(k[1], k[3]);
  }
}

BigInt key_magnitude(const Key& k) {
  BigInt m = 0;
  for (const auto& c : k) m = std::max(m, BigInt(boost::multiprecision::abs(c)));
  return m;
}

Key apply_move(const Key& k, const Move& mv) {
  Key out;
  out[0] = mv.a * k[0] + mv.c * k[1];
  out[1] = mv.b * k[0] + mv.d * k[1];
  out[2] = mv.a * k[2] + mv.c * k[3];
  out[3] = mv.b * k[2] + mv.d * k[3];
  canonicalize_key(out);
  return out;
}

std::vector<Node> breadth_first(Key root, int max_depth, const BigInt& mag_cap) {
  std::vector<Node> nodes;
  std::map<Key, int> seen;
  nodes.push_back(Node{root, -1, -1, 0});
  seen.emplace(root, 0);
  for (std::size_t idx = 0; idx < nodes.size() && nodes.size() < kNodeCap; ++idx) {
    if (nodes[idx].depth == max_depth) continue;
    for (int m = 0; m < static_cast<int>(kMoves.size()); ++m) {
      Key child = apply_move(nodes[idx].pair, kMoves[static_cast<size_t>(m)]);
      if (key_magnitude(child) > mag_cap) continue;
      if (seen.count(child)) continue;
      seen.emplace(child, static_cast<int>(nodes.size()));
      nodes.push_back(Node{std::move(child), static_cast<int>(idx), m, nodes[idx].depth + 1});
      if (nodes.size() >= kNodeCap) break;
    }
  }
  return nodes;
}

std::optional<TriangleClass> representative_class(const BigInt& i, const BigInt& j, const BigInt& m,
                                                  const BigInt& n) {
  try {
    return classify_representative(i, j, m, n);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

struct Candidate {
  Key tuple;  // (i, j, m, n)
  TriangleClass cls = TriangleClass::Right;
  int pointing = 0;
  int phase = 0;
  int node = 0;
  int labeling = 0;
  int depth = 0;
};

struct DyadicVec2 {
  DyadicRational x, y;
};

// Exact replay of a search path: the same canonical scalings the BFS applied
// are composed into the returned 2x2 matrix.
struct Replay {
  std::array<DyadicVec2, 2> pair;
  RatMatrix matrix;

  void scale_pow2(std::int64_t k) {
    if (k == 0) return;
    for (auto& v : pair) {
      v.x = v.x.mul_pow2(-k);
      v.y = v.y.mul_pow2(-k);
    }
    BigRat f = k > 0 ? BigRat(1, BigInt(1) << static_cast<unsigned>(k))
                     : BigRat(BigInt(1) << static_cast<unsigned>(-k));
    for (auto& row : matrix) {
      for (auto& e : row) e *= f;
    }
  }

  void canonical_scale() {
    std::int64_t k = 0;
    bool any = false;
    for (const auto& v : pair) {
      for (const DyadicRational* c : {&v.x, &v.y}) {
        if (c->is_zero()) continue;
        k = any ? std::min(k, c->exponent()) : c->exponent();
        any = true;
      }
    }
    if (any) scale_pow2(k);
  }

  void divide_odd(const BigInt& c) {
    for (auto& v : pair) {
      v.x = DyadicRational(v.x.mantissa() / c, v.x.exponent());
      v.y = DyadicRational(v.y.mantissa() / c, v.y.exponent());
    }
    BigRat f(1, c);
    for (auto& row : matrix) {
      for (auto& e : row) e *= f;
    }
  }

  void apply(const Move& mv) {
    for (auto& v : pair) {
      DyadicRational nx = DyadicRational(mv.a, 0) * v.x + DyadicRational(mv.c, 0) * v.y;
      DyadicRational ny = DyadicRational(mv.b, 0) * v.x + DyadicRational(mv.d, 0) * v.y;
      v.x = std::move(nx);
      v.y = std::move(ny);
    }
    RatMatrix mm{{BigRat(mv.a), BigRat(mv.b)}, {BigRat(mv.c), BigRat(mv.d)}};
    RatMatrix next(2, std::vector<BigRat>(2, 0));
    for (size_t r = 0; r < 2; ++r) {
      for (size_t s = 0; s < 2; ++s) {
        for (size_t t = 0; t < 2; ++t) next[r][s] += matrix[r][t] * mm[t][s];
      }
    }
    matrix = std::move(next);
    canonical_scale();
  }
};

}  // namespace

NormalizeResult normalize_triangle(const DyadicPoint& v1, const DyadicPoint& v2,
                                   const DyadicPoint& v3, int max_depth) {
  if (v1.dim() != 2 || v2.dim() != 2 || v3.dim() != 2) {
    throw std::invalid_argument("normalize_triangle: vertices must be two-dimensional");
  }
  if (affine_rank({v1, v2, v3}) != 2) {
    throw std::invalid_argument("normalize_triangle: collinear vertices");
  }
  if (max_depth < 0) throw std::invalid_argument("normalize_triangle: negative depth bound");

  const std::array<DyadicPoint, 3> verts{v1, v2, v3};

  struct Pass {
    int pointing;
    int phase;
    BigInt odd_content;  // 1 for the raw pass
    std::vector<Node> nodes;
  };
  std::vector<Pass> passes;
  std::vector<Candidate> cands;

  for (int p = 0; p < 3; ++p) {
    DyadicPoint d1 = verts[static_cast<size_t>((p + 1) % 3)] - verts[static_cast<size_t>(p)];
    DyadicPoint d2 = verts[static_cast<size_t>((p + 2) % 3)] - verts[static_cast<size_t>(p)];

    // Integer form of the difference pair (a 2-power rescale, a unit map).
    std::int64_t k0 = 0;
    bool any = false;
    for (const DyadicRational& c : {d1[0], d1[1], d2[0], d2[1]}) {
      if (c.is_zero()) continue;
      k0 = any ? std::min(k0, c.exponent()) : c.exponent();
      any = true;
    }
    Key root;
    {
      std::array<DyadicRational, 4> cs{d1[0], d1[1], d2[0], d2[1]};
      for (size_t t = 0; t < 4; ++t) {
        root[t] = cs[t].is_zero()
                      ? BigInt(0)
                      : BigInt(cs[t].mantissa() << static_cast<unsigned>(cs[t].exponent() - k0));
      }
    }
    canonicalize_key(root);

    BigInt c_odd = 0;
    for (const auto& c : root) {
      if (c.is_zero()) continue;
      c_odd = gcd(c_odd, odd_part(c).first);
    }
    c_odd = boost::multiprecision::abs(c_odd);

    for (int phase = 0; phase < 2; ++phase) {
      if (phase == 1 && c_odd <= 1) continue;
      Key start = root;
      if (phase == 1) {
        for (auto& c : start) c /= c_odd;
        canonicalize_key(start);
      }
      BigInt mag_cap = std::max(BigInt(64), 4 * key_magnitude(start));
      Pass pass{p, phase, phase == 1 ? c_odd : BigInt(1), breadth_first(start, max_depth, mag_cap)};

      for (size_t ni = 0; ni < pass.nodes.size(); ++ni) {
        const Key& k = pass.nodes[ni].pair;
        for (int lab = 0; lab < 2; ++lab) {
          const BigInt& i = lab == 0 ? k[0] : k[2];
          const BigInt& j = lab == 0 ? k[1] : k[3];
          const BigInt& m = lab == 0 ? k[2] : k[0];
          const BigInt& n = lab == 0 ? k[3] : k[1];
          auto cls = representative_class(i, j, m, n);
          if (!cls) continue;
          cands.push_back(Candidate{{i, j, m, n}, *cls, p, phase, static_cast<int>(ni), lab,
                                    pass.nodes[ni].depth});
        }
      }
      passes.push_back(std::move(pass));
    }
  }

  if (cands.empty()) {
    throw std::runtime_error("normalize_triangle: no representative found within bound");
  }

  // Discovery order: shallower first, raw pass before reduced, then pointing.
  std::stable_sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
    if (a.depth != b.depth) return a.depth < b.depth;
    if (a.phase != b.phase) return a.phase < b.phase;
    if (a.pointing != b.pointing) return a.pointing < b.pointing;
    if (a.node != b.node) return a.node < b.node;
    return a.labeling < b.labeling;
  });
  std::map<Key, Candidate> unique;
  for (const auto& c : cands) {
    unique.emplace(c.tuple, c);  // keeps the first (best) discovery
  }

  auto find_pass = [&](const Candidate& c) -> const Pass& {
    for (const auto& pass : passes) {
      if (pass.pointing == c.pointing && pass.phase == c.phase) return pass;
    }
    throw std::logic_error("normalize_triangle: missing search pass");
  };

  auto build_rep = [&](const Candidate& c) {
    const Pass& pass = find_pass(c);
    std::vector<int> path;
    for (int at = c.node; pass.nodes[static_cast<size_t>(at)].move >= 0;
         at = pass.nodes[static_cast<size_t>(at)].parent) {
      path.push_back(pass.nodes[static_cast<size_t>(at)].move);
    }
    std::reverse(path.begin(), path.end());

    const DyadicPoint& pointed = verts[static_cast<size_t>(c.pointing)];
    DyadicPoint d1 = verts[static_cast<size_t>((c.pointing + 1) % 3)] - pointed;
    DyadicPoint d2 = verts[static_cast<size_t>((c.pointing + 2) % 3)] - pointed;

    Replay rp{{DyadicVec2{d1[0], d1[1]}, DyadicVec2{d2[0], d2[1]}},
              RatMatrix{{BigRat(1), BigRat(0)}, {BigRat(0), BigRat(1)}}};
    rp.canonical_scale();
    if (c.phase == 1) rp.divide_odd(pass.odd_content);
    for (int mv : path) rp.apply(kMoves[static_cast<size_t>(mv)]);

    const Key& goal = pass.nodes[static_cast<size_t>(c.node)].pair;
    auto as_int = [](const DyadicRational& d) {
      if (!d.is_integer()) throw std::logic_error("normalize_triangle: replay left the lattice");
      return d.is_zero() ? BigInt(0) : BigInt(d.mantissa() << static_cast<unsigned>(d.exponent()));
    };
    Key got{as_int(rp.pair[0].x), as_int(rp.pair[0].y), as_int(rp.pair[1].x), as_int(rp.pair[1].y)};
    Key sorted = got;
    canonicalize_key(sorted);
    if (sorted != goal) throw std::logic_error("normalize_triangle: replay mismatch");

    std::vector<BigRat> translation(2, 0);
    for (size_t col = 0; col < 2; ++col) {
      for (size_t row = 0; row < 2; ++row) {
        translation[col] -= pointed[static_cast<int>(row)].to_rational() * rp.matrix[row][col];
      }
    }
    TriangleRepresentative rep{make_triangle_descriptor(c.tuple[0], c.tuple[1], c.tuple[2], c.tuple[3]),
                               AffineMap(rp.matrix, std::move(translation)), c.depth, c.phase == 1};
    return rep;
  };

  // The result is the lexicographically least representative at the minimal
  // search depth, preferring witnesses that stay inside the affine group over
  // odd-content reductions; the full ordered candidate list is kept alongside.
  std::vector<const Candidate*> ordered;
  ordered.reserve(unique.size());
  for (const auto& [tuple, cand] : unique) ordered.push_back(&cand);
  std::stable_sort(ordered.begin(), ordered.end(), [](const Candidate* a, const Candidate* b) {
    if (a->depth != b->depth) return a->depth < b->depth;
    if (a->phase != b->phase) return a->phase < b->phase;
    return a->tuple < b->tuple;
  });

  NormalizeResult result{build_rep(*ordered.front()), {}};
  result.candidates.reserve(ordered.size());
  for (const Candidate* c : ordered) result.candidates.push_back(build_rep(*c));
  return result;
}

}  // namespace dyconvex
