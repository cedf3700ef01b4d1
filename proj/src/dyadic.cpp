#include "dyconvex/dyadic.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace dyconvex {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  if ((b > 0 && a > std::numeric_limits<std::int64_t>::max() - b) ||
      (b < 0 && a < std::numeric_limits<std::int64_t>::min() - b)) {
    throw std::overflow_error("dyadic exponent overflow");
  }
  return a + b;
}

}  // namespace

std::pair<BigInt, std::int64_t> odd_part(const BigInt& n) {
  if (n.is_zero()) throw std::invalid_argument("odd_part: zero has no odd part");
  std::int64_t v = two_valuation(n);
  return {n >> static_cast<unsigned>(v), v};
}

std::int64_t two_valuation(const BigInt& n) {
  if (n.is_zero()) throw std::invalid_argument("two_valuation: undefined for zero");
  return static_cast<std::int64_t>(boost::multiprecision::lsb(boost::multiprecision::abs(n)));
}

BigInt rat_floor(const BigRat& q) {
  BigInt num = boost::multiprecision::numerator(q);
  BigInt den = boost::multiprecision::denominator(q);
  BigInt quo = num / den;  // truncates toward zero
  if (num < 0 && quo * den != num) --quo;
  return quo;
}

DyadicRational::DyadicRational(BigInt mantissa, std::int64_t exponent)
    : mantissa_(std::move(mantissa)), exponent_(exponent) {
  if (mantissa_.is_zero()) {
    exponent_ = 0;
    return;
  }
  std::int64_t v = two_valuation(mantissa_);
  if (v > 0) {
    mantissa_ >>= static_cast<unsigned>(v);
    exponent_ = checked_add(exponent_, v);
  }
}

DyadicRational DyadicRational::operator-() const {
  DyadicRational r;
  r.mantissa_ = -mantissa_;
  r.exponent_ = exponent_;
  return r;
}

DyadicRational DyadicRational::operator+(const DyadicRational& rhs) const {
  if (is_zero()) return rhs;
  if (rhs.is_zero()) return *this;
  std::int64_t e = std::min(exponent_, rhs.exponent_);
  BigInt m = (mantissa_ << static_cast<unsigned>(exponent_ - e)) +
             (rhs.mantissa_ << static_cast<unsigned>(rhs.exponent_ - e));
  return DyadicRational(std::move(m), e);
}

DyadicRational DyadicRational::operator-(const DyadicRational& rhs) const { return *this + (-rhs); }

DyadicRational DyadicRational::operator*(const DyadicRational& rhs) const {
  if (is_zero() || rhs.is_zero()) return DyadicRational();
  DyadicRational r;
  r.mantissa_ = mantissa_ * rhs.mantissa_;  // odd * odd stays odd
  r.exponent_ = checked_add(exponent_, rhs.exponent_);
  return r;
}

DyadicRational DyadicRational::mul_pow2(std::int64_t k) const {
  if (is_zero()) return *this;
  DyadicRational r = *this;
  r.exponent_ = checked_add(r.exponent_, k);
  return r;
}

std::strong_ordering DyadicRational::operator<=>(const DyadicRational& rhs) const {
  int ls = sign(), rs = rhs.sign();
  if (ls != rs) return ls <=> rs;
  int d = (*this - rhs).sign();
  return d <=> 0;
}

BigRat DyadicRational::to_rational() const {
  if (exponent_ >= 0) return BigRat(mantissa_ << static_cast<unsigned>(exponent_));
  return BigRat(mantissa_, BigInt(1) << static_cast<unsigned>(-exponent_));
}

std::optional<DyadicRational> DyadicRational::from_rational(const BigRat& q) {
  BigInt num = boost::multiprecision::numerator(q);
  BigInt den = boost::multiprecision::denominator(q);
  if (num.is_zero()) return DyadicRational();
  // boost keeps rationals in lowest terms with den > 0, so q is dyadic
  // exactly when den is a power of two.
  std::int64_t v = two_valuation(den);
  if ((den >> static_cast<unsigned>(v)) != 1) return std::nullopt;
  return DyadicRational(num, -v);
}

std::string DyadicRational::to_string() const {
  if (is_zero()) return "0";
  return mantissa_.str() + "*2^" + std::to_string(exponent_);
}

std::string DyadicRational::to_decimal_string() const {
  if (is_zero()) return "0";
  if (exponent_ >= 0) return BigInt(mantissa_ << static_cast<unsigned>(exponent_)).str();
  // m / 2^k = m * 5^k / 10^k: shift a decimal point into m * 5^k.
  unsigned k = static_cast<unsigned>(-exponent_);
  BigInt scaled = mantissa_ * boost::multiprecision::pow(BigInt(5), k);
  bool neg = scaled < 0;
  std::string digits = BigInt(boost::multiprecision::abs(scaled)).str();
  if (digits.size() <= k) digits.insert(0, k + 1 - digits.size(), '0');
  digits.insert(digits.size() - k, ".");
  return (neg ? "-" : "") + digits;
}

namespace {

bool parse_integer(std::string_view s, BigInt& out) {
  if (s.empty()) return false;
  size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (size_t j = i; j < s.size(); ++j) {
    if (s[j] < '0' || s[j] > '9') return false;
  }
  out = BigInt(std::string(s));
  return true;
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

DyadicRational DyadicRational::parse(std::string_view text) {
  std::string_view s = strip(text);
  if (s.empty()) throw std::invalid_argument("empty dyadic literal");

  if (auto star = s.find("*2^"); star != std::string_view::npos) {
    BigInt m;
    BigInt e;
    if (!parse_integer(strip(s.substr(0, star)), m) ||
        !parse_integer(strip(s.substr(star + 3)), e)) {
      throw std::invalid_argument("bad dyadic literal: " + std::string(text));
    }
    if (e > std::numeric_limits<std::int64_t>::max() || e < std::numeric_limits<std::int64_t>::min()) {
      throw std::overflow_error("dyadic exponent overflow");
    }
    return DyadicRational(m, static_cast<std::int64_t>(e));
  }

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    BigInt a, b;
    if (!parse_integer(strip(s.substr(0, slash)), a) || !parse_integer(strip(s.substr(slash + 1)), b) ||
        b <= 0) {
      throw std::invalid_argument("bad dyadic literal: " + std::string(text));
    }
    std::int64_t v = two_valuation(b);
    if ((b >> static_cast<unsigned>(v)) != 1) {
      throw std::invalid_argument("denominator is not a power of two: " + std::string(text));
    }
    return DyadicRational(a, -v);
  }

  BigInt m;
  if (!parse_integer(s, m)) throw std::invalid_argument("bad dyadic literal: " + std::string(text));
  return DyadicRational(m, 0);
}

DyadicPoint::DyadicPoint(std::vector<DyadicRational> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw std::invalid_argument("DyadicPoint: dimension must be at least 1");
}

std::strong_ordering DyadicPoint::operator<=>(const DyadicPoint& rhs) const {
  if (auto c = coords_.size() <=> rhs.coords_.size(); c != 0) return c;
  for (size_t i = 0; i < coords_.size(); ++i) {
    if (auto c = coords_[i] <=> rhs.coords_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::int64_t DyadicPoint::max_denominator_exponent() const {
  std::int64_t m = 0;
  for (const auto& c : coords_) m = std::max(m, c.denominator_exponent());
  return m;
}

std::string DyadicPoint::to_string() const {
  std::string out;
  for (size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ", ";
    out += coords_[i].to_string();
  }
  return out;
}

std::string DyadicPoint::to_decimal_string() const {
  std::string out;
  for (size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ", ";
    out += coords_[i].to_decimal_string();
  }
  return out;
}

DyadicPoint DyadicPoint::parse(std::string_view text) {
  std::vector<DyadicRational> coords;
  size_t start = 0;
  std::string s(text);
  while (start <= s.size()) {
    size_t comma = s.find(',', start);
    std::string_view item = std::string_view(s).substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    coords.push_back(DyadicRational::parse(item));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return DyadicPoint(std::move(coords));
}

namespace {

void require_same_dim(const DyadicPoint& a, const DyadicPoint& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
}

}  // namespace

DyadicPoint operator+(const DyadicPoint& a, const DyadicPoint& b) {
  require_same_dim(a, b);
  std::vector<DyadicRational> c;
  c.reserve(a.dim());
  for (int i = 0; i < a.dim(); ++i) c.push_back(a[i] + b[i]);
  return DyadicPoint(std::move(c));
}

DyadicPoint operator-(const DyadicPoint& a, const DyadicPoint& b) {
  require_same_dim(a, b);
  std::vector<DyadicRational> c;
  c.reserve(a.dim());
  for (int i = 0; i < a.dim(); ++i) c.push_back(a[i] - b[i]);
  return DyadicPoint(std::move(c));
}

DyadicPoint operator*(const DyadicRational& s, const DyadicPoint& p) {
  std::vector<DyadicRational> c;
  c.reserve(p.dim());
  for (int i = 0; i < p.dim(); ++i) c.push_back(s * p[i]);
  return DyadicPoint(std::move(c));
}

DyadicRational midpoint(const DyadicRational& a, const DyadicRational& b) {
  return (a + b).mul_pow2(-1);
}

DyadicPoint midpoint(const DyadicPoint& a, const DyadicPoint& b) {
  require_same_dim(a, b);
  std::vector<DyadicRational> c;
  c.reserve(a.dim());
  for (int i = 0; i < a.dim(); ++i) c.push_back(midpoint(a[i], b[i]));
  return DyadicPoint(std::move(c));
}

DyadicPoint affine_combination(const std::vector<DyadicPoint>& points,
                               const std::vector<DyadicRational>& weights) {
  if (points.empty() || points.size() != weights.size()) {
    throw std::invalid_argument("affine_combination: points and weights must match and be nonempty");
  }
  DyadicRational total;
  for (const auto& w : weights) total += w;
  if (!(total == DyadicRational(1, 0))) {
    throw std::invalid_argument("affine_combination: weights must sum to 1");
  }
  std::vector<DyadicRational> acc(static_cast<size_t>(points[0].dim()));
  for (size_t k = 0; k < points.size(); ++k) {
    if (points[k].dim() != points[0].dim()) throw std::invalid_argument("dimension mismatch");
    for (int i = 0; i < points[0].dim(); ++i) acc[static_cast<size_t>(i)] += weights[k] * points[k][i];
  }
  return DyadicPoint(std::move(acc));
}

}  // namespace dyconvex
