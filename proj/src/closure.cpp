#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "dyconvex/groupoid.hpp"

namespace dyconvex {

namespace {

std::size_t point_limit_from_env() {
  const char* s = std::getenv("DYCONVEX_POINT_LIMIT");
  if (!s || !*s) return 1000000;
  char* end = nullptr;
  unsigned long long v = std::strtoull(s, &end, 10);
  if (end == s || *end != '\0' || v == 0) {
    throw std::invalid_argument("DYCONVEX_POINT_LIMIT must be a positive integer");
  }
  return static_cast<std::size_t>(v);
}

inline bool is_odd_coord(std::int64_t s) { return (s & 1) != 0; }
inline bool is_odd_coord(const BigInt& s) { return s % 2 != 0; }

inline bool pow2_divides(std::int64_t h, std::int64_t k) {
  return (h & ((std::int64_t(1) << k) - 1)) == 0;
}
inline bool pow2_divides(const BigInt& h, std::int64_t k) {
  return (h % (BigInt(1) << static_cast<unsigned>(k))).is_zero();
}

// All points are scaled by 2^b_exp so every coordinate is an integer; a
// midpoint survives when each coordinate sum is even and the halved value
// keeps the denominator exponent within exp_cap + slack.
template <typename Coord>
ClosureReport run_closure(const GeneratorSet& x, int exp_cap, int slack, std::int64_t b_exp,
                          bool parallel) {
  using PV = std::vector<Coord>;
  const int n = x.dim();
  const std::int64_t keep_shift = b_exp - (exp_cap + slack);
  const std::size_t limit = point_limit_from_env();

  std::vector<PV> master;
  master.reserve(x.points().size());
  for (const auto& p : x.points()) {
    PV v(static_cast<size_t>(n));
    for (int c = 0; c < n; ++c) {
      const DyadicRational& d = p[c];
      BigInt scaled = d.is_zero() ? BigInt(0)
                                  : BigInt(d.mantissa() << static_cast<unsigned>(d.exponent() + b_exp));
      if constexpr (std::is_same_v<Coord, std::int64_t>) {
        v[static_cast<size_t>(c)] = scaled.convert_to<std::int64_t>();
      } else {
        v[static_cast<size_t>(c)] = std::move(scaled);
      }
    }
    master.push_back(std::move(v));
  }
  std::sort(master.begin(), master.end());
  master.erase(std::unique(master.begin(), master.end()), master.end());
  if (master.size() > limit) {
    throw closure_limit_error("closure point limit exceeded by the generators (limit " +
                              std::to_string(limit) + "); raise DYCONVEX_POINT_LIMIT");
  }

  auto emit_midpoint = [&](const PV& a, const PV& b, std::vector<PV>& out) {
    PV mid(static_cast<size_t>(n));
    for (int c = 0; c < n; ++c) {
      Coord s = a[static_cast<size_t>(c)] + b[static_cast<size_t>(c)];
      if (is_odd_coord(s)) return;
      Coord h = s / 2;
      if (keep_shift > 0 && !pow2_divides(h, keep_shift)) return;
      mid[static_cast<size_t>(c)] = std::move(h);
    }
    out.push_back(std::move(mid));
  };

  std::vector<PV> frontier = master;
  std::size_t peak = frontier.size();

  while (!frontier.empty()) {
    std::vector<PV> cand;
    if (parallel) {
      std::vector<std::vector<PV>> buffers;
#pragma omp parallel
      {
        std::vector<PV> local;
#pragma omp for schedule(dynamic, 16) nowait
        for (std::int64_t fi = 0; fi < static_cast<std::int64_t>(frontier.size()); ++fi) {
          for (const PV& m : master) emit_midpoint(frontier[static_cast<size_t>(fi)], m, local);
        }
        std::sort(local.begin(), local.end());
        local.erase(std::unique(local.begin(), local.end()), local.end());
#pragma omp critical
        buffers.push_back(std::move(local));
      }
      std::size_t total = 0;
      for (const auto& b : buffers) total += b.size();
      cand.reserve(total);
      for (auto& b : buffers) {
        cand.insert(cand.end(), std::make_move_iterator(b.begin()), std::make_move_iterator(b.end()));
      }
    } else {
      for (const PV& f : frontier) {
        for (const PV& m : master) emit_midpoint(f, m, cand);
      }
    }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

    std::vector<PV> fresh;
    std::set_difference(cand.begin(), cand.end(), master.begin(), master.end(),
                        std::back_inserter(fresh));
    if (master.size() + fresh.size() > limit) {
      throw closure_limit_error("closure point limit exceeded (" +
                                std::to_string(master.size() + fresh.size()) + " > " +
                                std::to_string(limit) + "); raise DYCONVEX_POINT_LIMIT");
    }
    if (fresh.empty()) break;

    std::vector<PV> merged;
    merged.reserve(master.size() + fresh.size());
    std::merge(master.begin(), master.end(), fresh.begin(), fresh.end(), std::back_inserter(merged));
    master.swap(merged);
    frontier.swap(fresh);
    peak = std::max(peak, frontier.size());
  }

  ClosureReport report;
  report.exp_cap = exp_cap;
  report.slack = slack;
  report.frontier_size = peak;
  // The loop only ends when a full round adds nothing new within the cap.
  report.saturated = true;
  for (const PV& v : master) {
    std::vector<DyadicRational> coords;
    coords.reserve(static_cast<size_t>(n));
    bool within_cap = true;
    for (int c = 0; c < n; ++c) {
      DyadicRational d(BigInt(v[static_cast<size_t>(c)]), -b_exp);
      if (d.denominator_exponent() > exp_cap) {
        within_cap = false;
        break;
      }
      coords.push_back(std::move(d));
    }
    if (within_cap) report.found.emplace_back(std::move(coords));
  }
  std::sort(report.found.begin(), report.found.end(), [](const DyadicPoint& a, const DyadicPoint& b) {
    auto ea = a.max_denominator_exponent(), eb = b.max_denominator_exponent();
    if (ea != eb) return ea < eb;
    return a < b;
  });
  return report;
}

// Midpoint BFS over single-integer point codes. When every scaled coordinate
// fits in int64 and the generator bounding box spans fewer than 2^62 grid
// cells, a point is one int64 (mixed-radix code over the box) and each round
// dedupes by sorting plain integers instead of coordinate vectors. Midpoints
// of box points stay in the box, so every code is valid. Returns nullopt when
// the code space does not fit; the caller falls back to the vector path.
std::optional<ClosureReport> run_closure_coded(const GeneratorSet& x, int exp_cap, int slack,
                                               std::int64_t b_exp) {
  const int n = x.dim();
  const std::int64_t keep_shift = b_exp - (exp_cap + slack);
  const std::size_t limit = point_limit_from_env();
  const std::size_t nsz = static_cast<std::size_t>(n);

  std::vector<std::int64_t> gen_coords;
  gen_coords.reserve(x.points().size() * nsz);
  for (const auto& p : x.points()) {
    for (int c = 0; c < n; ++c) {
      const DyadicRational& d = p[c];
      BigInt scaled = d.is_zero() ? BigInt(0)
                                  : BigInt(d.mantissa() << static_cast<unsigned>(d.exponent() + b_exp));
      gen_coords.push_back(scaled.convert_to<std::int64_t>());
    }
  }

  std::vector<std::int64_t> lo(nsz), stride(nsz);
  std::int64_t space = 1;
  for (int c = n - 1; c >= 0; --c) {
    std::int64_t axis_lo = gen_coords[static_cast<std::size_t>(c)];
    std::int64_t axis_hi = axis_lo;
    for (std::size_t i = 0; i < x.points().size(); ++i) {
      std::int64_t v = gen_coords[i * nsz + static_cast<std::size_t>(c)];
      axis_lo = std::min(axis_lo, v);
      axis_hi = std::max(axis_hi, v);
    }
    std::int64_t size = axis_hi - axis_lo + 1;
    if (space > (std::int64_t(1) << 62) / size) return std::nullopt;
    lo[static_cast<std::size_t>(c)] = axis_lo;
    stride[static_cast<std::size_t>(c)] = space;
    space *= size;
  }

  auto encode = [&](const std::int64_t* coords) {
    std::int64_t code = 0;
    for (int c = 0; c < n; ++c) {
      code += (coords[static_cast<std::size_t>(c)] - lo[static_cast<std::size_t>(c)]) *
              stride[static_cast<std::size_t>(c)];
    }
    return code;
  };
  auto decode = [&](std::int64_t code, std::int64_t* coords) {
    for (int c = 0; c < n; ++c) {
      std::int64_t q = code / stride[static_cast<std::size_t>(c)];
      code -= q * stride[static_cast<std::size_t>(c)];
      coords[static_cast<std::size_t>(c)] = q + lo[static_cast<std::size_t>(c)];
    }
  };

  std::vector<std::int64_t> master_codes;
  master_codes.reserve(x.points().size());
  for (std::size_t i = 0; i < x.points().size(); ++i) master_codes.push_back(encode(&gen_coords[i * nsz]));
  std::sort(master_codes.begin(), master_codes.end());
  master_codes.erase(std::unique(master_codes.begin(), master_codes.end()), master_codes.end());
  if (master_codes.size() > limit) {
    throw closure_limit_error("closure point limit exceeded by the generators (limit " +
                              std::to_string(limit) + "); raise DYCONVEX_POINT_LIMIT");
  }
  std::vector<std::int64_t> master_coords(master_codes.size() * nsz);
  for (std::size_t i = 0; i < master_codes.size(); ++i) decode(master_codes[i], &master_coords[i * nsz]);

  std::vector<std::int64_t> frontier_codes = master_codes;
  std::vector<std::int64_t> frontier_coords = master_coords;
  std::size_t peak = frontier_codes.size();

  while (!frontier_codes.empty()) {
    std::vector<std::int64_t> cand;
    {
      std::vector<std::vector<std::int64_t>> buffers;
#pragma omp parallel
      {
        std::vector<std::int64_t> local;
#pragma omp for schedule(dynamic, 16) nowait
        for (std::int64_t fi = 0; fi < static_cast<std::int64_t>(frontier_codes.size()); ++fi) {
          const std::int64_t* a = &frontier_coords[static_cast<std::size_t>(fi) * nsz];
          const std::size_t mcount = master_codes.size();
          for (std::size_t mi = 0; mi < mcount; ++mi) {
            const std::int64_t* b = &master_coords[mi * nsz];
            std::int64_t code = 0;
            int c = 0;
            for (; c < n; ++c) {
              std::int64_t s = a[static_cast<std::size_t>(c)] + b[static_cast<std::size_t>(c)];
              if (s & 1) break;
              std::int64_t h = s >> 1;
              if (keep_shift > 0 && !pow2_divides(h, keep_shift)) break;
              code += (h - lo[static_cast<std::size_t>(c)]) * stride[static_cast<std::size_t>(c)];
            }
            if (c == n) local.push_back(code);
          }
          // Bound the per-thread buffer: duplicates collapse to at most the
          // reachable point count, so compressing keeps memory flat.
          if (local.size() >= (std::size_t(1) << 22)) {
            std::sort(local.begin(), local.end());
            local.erase(std::unique(local.begin(), local.end()), local.end());
          }
        }
        std::sort(local.begin(), local.end());
        local.erase(std::unique(local.begin(), local.end()), local.end());
#pragma omp critical
        buffers.push_back(std::move(local));
      }
      std::size_t total = 0;
      for (const auto& b : buffers) total += b.size();
      cand.reserve(total);
      for (auto& b : buffers) {
        cand.insert(cand.end(), b.begin(), b.end());
      }
    }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

    std::vector<std::int64_t> fresh_codes;
    std::set_difference(cand.begin(), cand.end(), master_codes.begin(), master_codes.end(),
                        std::back_inserter(fresh_codes));
    if (master_codes.size() + fresh_codes.size() > limit) {
      throw closure_limit_error("closure point limit exceeded (" +
                                std::to_string(master_codes.size() + fresh_codes.size()) + " > " +
                                std::to_string(limit) + "); raise DYCONVEX_POINT_LIMIT");
    }
    if (fresh_codes.empty()) break;

    std::vector<std::int64_t> merged;
    merged.reserve(master_codes.size() + fresh_codes.size());
    std::merge(master_codes.begin(), master_codes.end(), fresh_codes.begin(), fresh_codes.end(),
               std::back_inserter(merged));
    master_codes.swap(merged);
    master_coords.resize(master_codes.size() * nsz);
    for (std::size_t i = 0; i < master_codes.size(); ++i) decode(master_codes[i], &master_coords[i * nsz]);
    frontier_coords.resize(fresh_codes.size() * nsz);
    for (std::size_t i = 0; i < fresh_codes.size(); ++i) decode(fresh_codes[i], &frontier_coords[i * nsz]);
    frontier_codes.swap(fresh_codes);
    peak = std::max(peak, frontier_codes.size());
  }

  ClosureReport report;
  report.exp_cap = exp_cap;
  report.slack = slack;
  report.frontier_size = peak;
  report.saturated = true;
  std::vector<std::int64_t> coords(nsz);
  for (std::int64_t code : master_codes) {
    decode(code, coords.data());
    std::vector<DyadicRational> pt;
    pt.reserve(nsz);
    bool within_cap = true;
    for (int c = 0; c < n; ++c) {
      DyadicRational d(BigInt(coords[static_cast<std::size_t>(c)]), -b_exp);
      if (d.denominator_exponent() > exp_cap) {
        within_cap = false;
        break;
      }
      pt.push_back(std::move(d));
    }
    if (within_cap) report.found.emplace_back(std::move(pt));
  }
  std::sort(report.found.begin(), report.found.end(), [](const DyadicPoint& a, const DyadicPoint& b) {
    auto ea = a.max_denominator_exponent(), eb = b.max_denominator_exponent();
    if (ea != eb) return ea < eb;
    return a < b;
  });
  return report;
}

ClosureReport closure_run(const GeneratorSet& x, int exp_cap, int slack, bool parallel) {
  if (exp_cap < 0 || slack < 0) throw std::invalid_argument("closure_bfs: caps must be nonnegative");

  std::int64_t max_denom = 0;
  for (const auto& p : x.points()) max_denom = std::max(max_denom, p.max_denominator_exponent());
  const std::int64_t b_exp = std::max<std::int64_t>(exp_cap + slack, max_denom);

  bool fits_small = b_exp <= 60;
  if (fits_small) {
    const BigInt bound = BigInt(1) << 61;
    for (const auto& p : x.points()) {
      for (int c = 0; c < p.dim() && fits_small; ++c) {
        if (p[c].is_zero()) continue;
        BigInt scaled = boost::multiprecision::abs(p[c].mantissa())
                        << static_cast<unsigned>(p[c].exponent() + b_exp);
        if (scaled >= bound) fits_small = false;
      }
      if (!fits_small) break;
    }
  }
  // The serial entry point stays on the straightforward vector path so it can
  // serve as a reference implementation for the coded kernel.
  if (fits_small && parallel) {
    auto coded = run_closure_coded(x, exp_cap, slack, b_exp);
    if (coded) return std::move(*coded);
  }
  if (fits_small) return run_closure<std::int64_t>(x, exp_cap, slack, b_exp, parallel);
  return run_closure<BigInt>(x, exp_cap, slack, b_exp, parallel);
}

}  // namespace

ClosureReport closure_bfs(const GeneratorSet& x, int exp_cap, int slack) {
  return closure_run(x, exp_cap, slack, true);
}

ClosureReport closure_bfs_serial(const GeneratorSet& x, int exp_cap, int slack) {
  return closure_run(x, exp_cap, slack, false);
}

}  // namespace dyconvex
