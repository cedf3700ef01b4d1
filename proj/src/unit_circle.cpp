#include "dyconvex/dyadic.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <algorithm>
#include <stdexcept>

namespace dyconvex {

namespace {

// Exact dyadic square roots of t >= 0, largest first.  A canonical t = m*2^e
// (m odd) has a dyadic root iff e is even and m is a perfect square; the odd
// root mantissa then squares back to m exactly.
bool dyadic_sqrt(const DyadicRational& t, DyadicRational& root) {
  if (t.sign() < 0) return false;
  if (t.is_zero()) {
    root = DyadicRational();
    return true;
  }
  if (t.exponent() % 2 != 0) return false;
  BigInt s = boost::multiprecision::sqrt(t.mantissa());
  if (s * s != t.mantissa()) return false;
  root = DyadicRational(s, t.exponent() / 2);
  return true;
}

// Circle points with first coordinate j / 2^exp_cap, appended to out.
void circle_points_at(std::int64_t j, std::int64_t exp_cap, std::vector<DyadicPoint>& out) {
  DyadicRational x(BigInt(j), -exp_cap);
  DyadicRational y2 = DyadicRational(1, 0) - x * x;
  DyadicRational y;
  if (!dyadic_sqrt(y2, y)) return;
  if (y.denominator_exponent() > exp_cap) return;
  out.push_back(DyadicPoint({x, y}));
  if (!y.is_zero()) out.push_back(DyadicPoint({x, -y}));
}

}  // namespace

std::vector<DyadicPoint> unit_circle_points_serial(std::int64_t exp_cap) {
  if (exp_cap < 0 || exp_cap > 62) throw std::invalid_argument("unit_circle_points: exp_cap out of range");
  std::int64_t n = std::int64_t(1) << exp_cap;
  std::vector<DyadicPoint> out;
  for (std::int64_t j = -n; j <= n; ++j) circle_points_at(j, exp_cap, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DyadicPoint> unit_circle_points(std::int64_t exp_cap) {
  if (exp_cap < 0 || exp_cap > 62) throw std::invalid_argument("unit_circle_points: exp_cap out of range");
  std::int64_t n = std::int64_t(1) << exp_cap;
  std::vector<DyadicPoint> out;
#ifdef _OPENMP
#pragma omp parallel
  {
    std::vector<DyadicPoint> local;
#pragma omp for schedule(dynamic, 1024) nowait
    for (std::int64_t j = -n; j <= n; ++j) circle_points_at(j, exp_cap, local);
#pragma omp critical
    out.insert(out.end(), local.begin(), local.end());
  }
#else
  for (std::int64_t j = -n; j <= n; ++j) circle_points_at(j, exp_cap, out);
#endif
  // Merge order depends on thread scheduling; the final sort restores a
  // deterministic result.
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace dyconvex
