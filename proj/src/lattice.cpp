#include "dyconvex/lattice.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace dyconvex {

IntMatrix identity_matrix(int n) {
  IntMatrix m(static_cast<size_t>(n), std::vector<BigInt>(static_cast<size_t>(n), 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

std::vector<BigInt> mat_vec(const IntMatrix& m, const std::vector<BigInt>& x) {
  std::vector<BigInt> y(m.size(), 0);
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != x.size()) throw std::invalid_argument("mat_vec: shape mismatch");
    for (size_t j = 0; j < x.size(); ++j) y[i] += m[i][j] * x[j];
  }
  return y;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
  IntMatrix c(n, std::vector<BigInt>(m, 0));
  for (size_t i = 0; i < n; ++i) {
    if (a[i].size() != k) throw std::invalid_argument("mat_mul: shape mismatch");
    for (size_t t = 0; t < k; ++t) {
      if (a[i][t].is_zero()) continue;
      for (size_t j = 0; j < m; ++j) c[i][j] += a[i][t] * b[t][j];
    }
  }
  return c;
}

BigInt int_det(IntMatrix m) {
  // Bareiss fraction-free elimination.
  size_t n = m.size();
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      size_t piv = k + 1;
      while (piv < n && m[piv][k].is_zero()) ++piv;
      if (piv == n) return 0;
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

BigRat rat_det(RatMatrix m) {
  size_t n = m.size();
  if (n == 0) return 1;
  BigRat det = 1;
  for (size_t k = 0; k < n; ++k) {
    size_t piv = k;
    while (piv < n && m[piv][k].is_zero()) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(m[k], m[piv]);
      det = -det;
    }
    det *= m[k][k];
    for (size_t i = k + 1; i < n; ++i) {
      if (m[i][k].is_zero()) continue;
      BigRat f = m[i][k] / m[k][k];
      for (size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return det;
}

int rat_rank(RatMatrix m) {
  size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  int rank = 0;
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t piv = row;
    while (piv < rows && m[piv][col].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(m[row], m[piv]);
    for (size_t i = row + 1; i < rows; ++i) {
      if (m[i][col].is_zero()) continue;
      BigRat f = m[i][col] / m[row][col];
      for (size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
    }
    ++row;
    ++rank;
  }
  return rank;
}

namespace {

// Elementary operations applied simultaneously to S, U, U^-1 (rows) or
// S, V (columns), keeping U * M * V = S at every step.
struct SmithWorker {
  IntMatrix s, u, u_inv, v;
  size_t rows, cols;

  explicit SmithWorker(const IntMatrix& m) : s(m), rows(m.size()), cols(m.empty() ? 0 : m[0].size()) {
    u = identity_matrix(static_cast<int>(rows));
    u_inv = identity_matrix(static_cast<int>(rows));
    v = identity_matrix(static_cast<int>(cols));
  }

  void row_swap(size_t i, size_t j) {
    std::swap(s[i], s[j]);
    std::swap(u[i], u[j]);
    for (size_t r = 0; r < rows; ++r) std::swap(u_inv[r][i], u_inv[r][j]);
  }
  void row_add(size_t i, size_t j, const BigInt& k) {  // row i += k * row j
    for (size_t c = 0; c < cols; ++c) s[i][c] += k * s[j][c];
    for (size_t c = 0; c < rows; ++c) u[i][c] += k * u[j][c];
    for (size_t r = 0; r < rows; ++r) u_inv[r][j] -= k * u_inv[r][i];
  }
  void row_negate(size_t i) {
    for (auto& x : s[i]) x = -x;
    for (auto& x : u[i]) x = -x;
    for (size_t r = 0; r < rows; ++r) u_inv[r][i] = -u_inv[r][i];
  }
  void col_swap(size_t i, size_t j) {
    for (size_t r = 0; r < rows; ++r) std::swap(s[r][i], s[r][j]);
    for (size_t r = 0; r < cols; ++r) std::swap(v[r][i], v[r][j]);
  }
  void col_add(size_t i, size_t j, const BigInt& k) {  // col i += k * col j
    for (size_t r = 0; r < rows; ++r) s[r][i] += k * s[r][j];
    for (size_t r = 0; r < cols; ++r) v[r][i] += k * v[r][j];
  }

  bool find_pivot(size_t t, size_t& pi, size_t& pj) const {
    bool found = false;
    BigInt best;
    for (size_t i = t; i < rows; ++i) {
      for (size_t j = t; j < cols; ++j) {
        if (s[i][j].is_zero()) continue;
        BigInt a = boost::multiprecision::abs(s[i][j]);
        if (!found || a < best) {
          found = true;
          best = a;
          pi = i;
          pj = j;
        }
      }
    }
    return found;
  }

  // Clears row t and column t beyond the pivot via the Euclidean algorithm.
  void clear_cross(size_t t) {
    for (;;) {
      bool clean = true;
      for (size_t i = t + 1; i < rows; ++i) {
        while (!s[i][t].is_zero()) {
          BigInt q = s[i][t] / s[t][t];
          row_add(i, t, -q);
          if (!s[i][t].is_zero()) {
            row_swap(i, t);
            clean = false;
          }
        }
      }
      for (size_t j = t + 1; j < cols; ++j) {
        while (!s[t][j].is_zero()) {
          BigInt q = s[t][j] / s[t][t];
          col_add(j, t, -q);
          if (!s[t][j].is_zero()) {
            col_swap(j, t);
            clean = false;
          }
        }
      }
      bool col_dirty = false;
      for (size_t i = t + 1; i < rows; ++i) col_dirty |= !s[i][t].is_zero();
      if (clean && !col_dirty) return;
    }
  }
};

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m) {
  for (const auto& row : m) {
    if (row.size() != (m.empty() ? 0 : m[0].size())) {
      throw std::invalid_argument("smith_normal_form: ragged matrix");
    }
  }
  SmithWorker w(m);
  size_t limit = std::min(w.rows, w.cols);

  size_t rank = 0;
  for (size_t t = 0; t < limit; ++t) {
    size_t pi = t, pj = t;
    if (!w.find_pivot(t, pi, pj)) break;
    if (pi != t) w.row_swap(pi, t);
    if (pj != t) w.col_swap(pj, t);
    w.clear_cross(t);
    if (w.s[t][t] < 0) w.row_negate(t);
    rank = t + 1;
  }

  // Enforce the divisibility chain s_t | s_{t+1}.
  for (bool settled = false; !settled;) {
    settled = true;
    for (size_t t = 0; t + 1 < rank; ++t) {
      if (w.s[t + 1][t + 1] % w.s[t][t] == 0) continue;
      settled = false;
      w.col_add(t, t + 1, 1);
      w.clear_cross(t);
      if (w.s[t][t] < 0) w.row_negate(t);
      if (w.s[t + 1][t + 1] < 0) w.row_negate(t + 1);
    }
  }

  SmithDecomposition out;
  out.u = std::move(w.u);
  out.u_inv = std::move(w.u_inv);
  out.s = std::move(w.s);
  out.v = std::move(w.v);
  out.rank = static_cast<int>(rank);
  return out;
}

DyadicLattice DyadicLattice::from_generators(int ambient_dim,
                                             const std::vector<std::vector<DyadicRational>>& gens) {
  if (ambient_dim < 1) throw std::invalid_argument("DyadicLattice: ambient dimension must be >= 1");
  DyadicLattice lat;
  lat.ambient_dim_ = ambient_dim;

  // Rescale each generator by a unit 2^k to a primitive integer vector.
  std::vector<std::vector<BigInt>> cols;
  for (const auto& g : gens) {
    if (static_cast<int>(g.size()) != ambient_dim) {
      throw std::invalid_argument("DyadicLattice: generator dimension mismatch");
    }
    std::int64_t min_exp = 0;
    bool nonzero = false;
    for (const auto& c : g) {
      if (c.is_zero()) continue;
      min_exp = nonzero ? std::min(min_exp, c.exponent()) : c.exponent();
      nonzero = true;
    }
    if (!nonzero) continue;
    std::vector<BigInt> col(static_cast<size_t>(ambient_dim), 0);
    for (int i = 0; i < ambient_dim; ++i) {
      if (g[static_cast<size_t>(i)].is_zero()) continue;
      col[static_cast<size_t>(i)] = g[static_cast<size_t>(i)].mantissa()
                                    << static_cast<unsigned>(g[static_cast<size_t>(i)].exponent() - min_exp);
    }
    cols.push_back(std::move(col));
  }

  if (cols.empty()) {
    lat.to_smith_ = identity_matrix(ambient_dim);
    return lat;
  }

  IntMatrix m(static_cast<size_t>(ambient_dim), std::vector<BigInt>(cols.size(), 0));
  for (size_t j = 0; j < cols.size(); ++j) {
    for (int i = 0; i < ambient_dim; ++i) m[static_cast<size_t>(i)][j] = cols[j][static_cast<size_t>(i)];
  }

  SmithDecomposition snf = smith_normal_form(m);
  lat.to_smith_ = std::move(snf.u);
  for (int i = 0; i < snf.rank; ++i) {
    BigInt inv = odd_part(snf.s[static_cast<size_t>(i)][static_cast<size_t>(i)]).first;
    std::vector<BigInt> b(static_cast<size_t>(ambient_dim));
    for (int r = 0; r < ambient_dim; ++r) {
      b[static_cast<size_t>(r)] = inv * snf.u_inv[static_cast<size_t>(r)][static_cast<size_t>(i)];
    }
    lat.invariants_.push_back(std::move(inv));
    lat.basis_.push_back(std::move(b));
  }
  return lat;
}

bool DyadicLattice::member(const std::vector<DyadicRational>& v) const {
  if (static_cast<int>(v.size()) != ambient_dim_) {
    throw std::invalid_argument("lattice member: dimension mismatch");
  }
  // Clear denominators with a unit 2^k, then test in Smith coordinates.
  std::int64_t shift = 0;
  for (const auto& c : v) shift = std::max(shift, c.denominator_exponent());
  std::vector<BigInt> w(v.size(), 0);
  bool any = false;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    w[i] = v[i].mantissa() << static_cast<unsigned>(v[i].exponent() + shift);
    any = true;
  }
  if (!any) return true;

  std::vector<BigInt> y = mat_vec(to_smith_, w);
  size_t r = invariants_.size();
  for (size_t i = 0; i < y.size(); ++i) {
    if (y[i].is_zero()) continue;
    if (i >= r) return false;
    if (!(odd_part(y[i]).first % invariants_[i]).is_zero()) return false;
  }
  return true;
}

bool DyadicLattice::includes(const DyadicLattice& other) const {
  if (ambient_dim_ != other.ambient_dim_) return false;
  for (const auto& b : other.basis_) {
    std::vector<DyadicRational> v;
    v.reserve(b.size());
    for (const auto& x : b) v.emplace_back(x, 0);
    if (!member(v)) return false;
  }
  return true;
}

bool DyadicLattice::operator==(const DyadicLattice& other) const {
  return ambient_dim_ == other.ambient_dim_ && includes(other) && other.includes(*this);
}

DyadicLattice DyadicLattice::saturate() const {
  std::vector<std::vector<DyadicRational>> gens;
  for (size_t i = 0; i < basis_.size(); ++i) {
    std::vector<DyadicRational> g;
    g.reserve(basis_[i].size());
    for (const auto& x : basis_[i]) {
      // basis_[i] = invariant * primitive direction; divide the invariant out.
      g.emplace_back(x / invariants_[i], 0);
    }
    gens.push_back(std::move(g));
  }
  return from_generators(ambient_dim_, gens);
}

bool DyadicLattice::is_saturated() const {
  return std::all_of(invariants_.begin(), invariants_.end(), [](const BigInt& x) { return x == 1; });
}

AffineMap::AffineMap(RatMatrix matrix, std::vector<BigRat> translation)
    : matrix_(std::move(matrix)), translation_(std::move(translation)) {
  for (const auto& row : matrix_) {
    if (row.size() != translation_.size()) {
      throw std::invalid_argument("AffineMap: matrix and translation shapes disagree");
    }
  }
}

AffineMap AffineMap::identity(int n) {
  RatMatrix m(static_cast<size_t>(n), std::vector<BigRat>(static_cast<size_t>(n), 0));
  for (int i = 0; i < n; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
  return AffineMap(std::move(m), std::vector<BigRat>(static_cast<size_t>(n), 0));
}

AffineMap AffineMap::translation(const std::vector<BigRat>& t) {
  AffineMap id = identity(static_cast<int>(t.size()));
  return AffineMap(id.matrix_, t);
}

std::vector<BigRat> AffineMap::apply_rational(const std::vector<BigRat>& p) const {
  if (p.size() != matrix_.size()) throw std::invalid_argument("AffineMap: dimension mismatch");
  std::vector<BigRat> out = translation_;
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i].is_zero()) continue;
    for (size_t j = 0; j < out.size(); ++j) out[j] += p[i] * matrix_[i][j];
  }
  return out;
}

DyadicPoint AffineMap::apply(const DyadicPoint& p) const {
  std::vector<BigRat> image = apply_rational(to_rational_vector(p));
  auto q = to_dyadic_point(image);
  if (!q) throw std::domain_error("AffineMap: image has a non-dyadic coordinate");
  return *q;
}

AffineMap AffineMap::compose(const AffineMap& g) const {
  if (out_dim() != g.in_dim()) throw std::invalid_argument("AffineMap compose: shape mismatch");
  RatMatrix m(matrix_.size(), std::vector<BigRat>(g.translation_.size(), 0));
  for (size_t i = 0; i < matrix_.size(); ++i) {
    for (size_t k = 0; k < g.matrix_.size(); ++k) {
      if (matrix_[i][k].is_zero()) continue;
      for (size_t j = 0; j < g.translation_.size(); ++j) m[i][j] += matrix_[i][k] * g.matrix_[k][j];
    }
  }
  std::vector<BigRat> t = g.apply_rational(translation_);
  return AffineMap(std::move(m), std::move(t));
}

AffineMap AffineMap::invert() const {
  size_t n = matrix_.size();
  if (n != translation_.size()) throw std::invalid_argument("AffineMap invert: not square");
  // Gauss-Jordan on [M | I].
  RatMatrix a = matrix_;
  RatMatrix inv(n, std::vector<BigRat>(n, 0));
  for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (size_t k = 0; k < n; ++k) {
    size_t piv = k;
    while (piv < n && a[piv][k].is_zero()) ++piv;
    if (piv == n) throw std::domain_error("AffineMap invert: singular matrix");
    std::swap(a[k], a[piv]);
    std::swap(inv[k], inv[piv]);
    BigRat d = a[k][k];
    for (size_t j = 0; j < n; ++j) {
      a[k][j] /= d;
      inv[k][j] /= d;
    }
    for (size_t i = 0; i < n; ++i) {
      if (i == k || a[i][k].is_zero()) continue;
      BigRat f = a[i][k];
      for (size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[k][j];
        inv[i][j] -= f * inv[k][j];
      }
    }
  }
  std::vector<BigRat> t(n, 0);
  for (size_t j = 0; j < n; ++j) {
    for (size_t i = 0; i < n; ++i) t[j] -= translation_[i] * inv[i][j];
  }
  return AffineMap(std::move(inv), std::move(t));
}

BigRat AffineMap::det() const {
  if (matrix_.size() != translation_.size()) throw std::invalid_argument("AffineMap det: not square");
  return rat_det(matrix_);
}

bool AffineMap::has_dyadic_entries() const {
  for (const auto& row : matrix_) {
    for (const auto& x : row) {
      if (!DyadicRational::from_rational(x)) return false;
    }
  }
  for (const auto& x : translation_) {
    if (!DyadicRational::from_rational(x)) return false;
  }
  return true;
}

bool AffineMap::in_affine_group() const {
  if (matrix_.size() != translation_.size()) return false;
  if (!has_dyadic_entries()) return false;
  BigRat d = det();
  if (d.is_zero()) return false;
  BigInt num = boost::multiprecision::numerator(d);
  BigInt den = boost::multiprecision::denominator(d);
  return boost::multiprecision::abs(odd_part(num).first) == 1 && odd_part(den).first == 1;
}

AffineDyadicSubspace::AffineDyadicSubspace(DyadicPoint base, DyadicLattice lattice)
    : base_(std::move(base)), lattice_(std::move(lattice)) {
  if (base_.dim() != lattice_.ambient_dim()) {
    throw std::invalid_argument("AffineDyadicSubspace: base and lattice dimensions disagree");
  }
}

bool AffineDyadicSubspace::contains(const DyadicPoint& p) const {
  if (p.dim() != base_.dim()) throw std::invalid_argument("subspace contains: dimension mismatch");
  return lattice_.member(p - base_);
}

AffineDyadicSubspace affine_hull(const std::vector<DyadicPoint>& points) {
  if (points.empty()) throw std::invalid_argument("affine_hull: empty point set");
  std::vector<std::vector<DyadicRational>> gens;
  for (size_t i = 1; i < points.size(); ++i) gens.push_back((points[i] - points[0]).coords());
  return AffineDyadicSubspace(points[0], DyadicLattice::from_generators(points[0].dim(), gens));
}

bool subspace_equal(const AffineDyadicSubspace& a, const AffineDyadicSubspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) return false;
  return a.lattice() == b.lattice() && a.lattice().member(b.base() - a.base());
}

SubspaceIso rescale_iso(const AffineDyadicSubspace& a) {
  int n = a.ambient_dim();
  int r = a.rank();
  if (r == 0) throw std::invalid_argument("rescale_iso: subspace has rank zero");

  // Recover the Smith transform for the stored basis; the basis is already in
  // Smith position so the decomposition is cheap and exact.
  std::vector<std::vector<DyadicRational>> gens;
  for (const auto& b : a.lattice().basis()) {
    std::vector<DyadicRational> g;
    for (const auto& x : b) g.emplace_back(x, 0);
    gens.push_back(std::move(g));
  }
  IntMatrix m(static_cast<size_t>(n), std::vector<BigInt>(static_cast<size_t>(r), 0));
  for (int j = 0; j < r; ++j) {
    for (int i = 0; i < n; ++i) {
      m[static_cast<size_t>(i)][static_cast<size_t>(j)] = a.lattice().basis()[static_cast<size_t>(j)][static_cast<size_t>(i)];
    }
  }
  SmithDecomposition snf = smith_normal_form(m);
  if (snf.rank != r) throw std::logic_error("rescale_iso: basis rank degenerated");

  std::vector<BigRat> base = to_rational_vector(a.base());

  // Forward: p -> ((U (p - base))_i / odd(s_i))_{i < r}.
  RatMatrix fwd(static_cast<size_t>(n), std::vector<BigRat>(static_cast<size_t>(r), 0));
  for (int i = 0; i < r; ++i) {
    BigInt inv = odd_part(snf.s[static_cast<size_t>(i)][static_cast<size_t>(i)]).first;
    BigInt two = snf.s[static_cast<size_t>(i)][static_cast<size_t>(i)] / inv;  // power of two, a unit
    for (int j = 0; j < n; ++j) {
      fwd[static_cast<size_t>(j)][static_cast<size_t>(i)] =
          BigRat(snf.u[static_cast<size_t>(i)][static_cast<size_t>(j)], inv * two);
    }
  }
  std::vector<BigRat> fwd_t(static_cast<size_t>(r), 0);
  for (int j = 0; j < r; ++j) {
    for (int i = 0; i < n; ++i) {
      fwd_t[static_cast<size_t>(j)] -= base[static_cast<size_t>(i)] * fwd[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
  }
  AffineMap to_standard(fwd, std::move(fwd_t));

  // Backward: s -> base + sum s_i * (s_i-th scaled basis direction).
  RatMatrix bwd(static_cast<size_t>(r), std::vector<BigRat>(static_cast<size_t>(n), 0));
  for (int i = 0; i < r; ++i) {
    BigInt inv = odd_part(snf.s[static_cast<size_t>(i)][static_cast<size_t>(i)]).first;
    BigInt two = snf.s[static_cast<size_t>(i)][static_cast<size_t>(i)] / inv;
    for (int j = 0; j < n; ++j) {
      bwd[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          BigRat(snf.u_inv[static_cast<size_t>(j)][static_cast<size_t>(i)] * inv * two);
    }
  }
  AffineMap from_standard(bwd, base);

  return SubspaceIso{std::move(to_standard), std::move(from_standard)};
}

std::vector<BigRat> to_rational_vector(const DyadicPoint& p) {
  std::vector<BigRat> v;
  v.reserve(static_cast<size_t>(p.dim()));
  for (int i = 0; i < p.dim(); ++i) v.push_back(p[i].to_rational());
  return v;
}

std::optional<DyadicPoint> to_dyadic_point(const std::vector<BigRat>& v) {
  std::vector<DyadicRational> coords;
  coords.reserve(v.size());
  for (const auto& x : v) {
    auto d = DyadicRational::from_rational(x);
    if (!d) return std::nullopt;
    coords.push_back(*d);
  }
  return DyadicPoint(std::move(coords));
}

}  // namespace dyconvex
