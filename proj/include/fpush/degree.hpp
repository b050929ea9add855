#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace fpush {

/// Exact rational degree. Pushforwards divide degrees by q, so denominators
/// are powers of the characteristic in practice; the type itself accepts any
/// positive denominator and keeps the fraction reduced.
class RationalDegree {
 public:
  constexpr RationalDegree() = default;
  constexpr RationalDegree(std::int64_t n) : num_(n), den_(1) {}  // NOLINT(implicit)
  RationalDegree(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
    if (d == 0) throw std::domain_error("zero denominator in degree");
    normalize();
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  /// Largest integer <= this.
  std::int64_t floor() const {
    return num_ >= 0 ? num_ / den_ : -((-num_ + den_ - 1) / den_);
  }
  /// Fractional part in [0,1).
  RationalDegree frac() const { return *this - RationalDegree(floor()); }

  friend RationalDegree operator+(RationalDegree a, RationalDegree b) {
    std::int64_t g = std::gcd(a.den_, b.den_);
    return {a.num_ * (b.den_ / g) + b.num_ * (a.den_ / g), a.den_ / g * b.den_};
  }
  friend RationalDegree operator-(RationalDegree a) { return {-a.num_, a.den_}; }
  friend RationalDegree operator-(RationalDegree a, RationalDegree b) { return a + (-b); }
  friend RationalDegree operator*(RationalDegree a, RationalDegree b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend RationalDegree operator/(RationalDegree a, std::int64_t q) { return {a.num_, a.den_ * q}; }
  RationalDegree& operator+=(RationalDegree b) { return *this = *this + b; }
  RationalDegree& operator-=(RationalDegree b) { return *this = *this - b; }

  friend bool operator==(const RationalDegree&, const RationalDegree&) = default;
  friend std::strong_ordering operator<=>(const RationalDegree& a, const RationalDegree& b) {
    return (__int128)a.num_ * b.den_ <=> (__int128)b.num_ * a.den_;
  }

  std::string str() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }
  /// Parses "a" or "a/b".
  static RationalDegree parse(const std::string& s);

 private:
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline std::ostream& operator<<(std::ostream& os, const RationalDegree& d) { return os << d.str(); }

inline RationalDegree RationalDegree::parse(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return RationalDegree(std::stoll(s));
    return RationalDegree(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  } catch (const std::logic_error&) {
    throw std::invalid_argument("malformed degree '" + s + "'");
  }
}

}  // namespace fpush
