#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fpush {

using Coeff = std::uint32_t;

/// The prime field F_p. Elements are canonical residues in [0, p).
class PrimeField {
 public:
  PrimeField() = default;
  explicit PrimeField(std::uint64_t p);

  std::uint32_t characteristic() const { return p_; }

  Coeff add(Coeff a, Coeff b) const {
    std::uint64_t s = std::uint64_t(a) + b;
    return s >= p_ ? Coeff(s - p_) : Coeff(s);
  }
  Coeff sub(Coeff a, Coeff b) const { return a >= b ? a - b : Coeff(std::uint64_t(a) + p_ - b); }
  Coeff neg(Coeff a) const { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const { return Coeff((std::uint64_t(a) * b) % p_); }
  Coeff pow(Coeff a, std::uint64_t e) const;
  Coeff inv(Coeff a) const;
  Coeff div(Coeff a, Coeff b) const { return mul(a, inv(b)); }
  /// Reduces an arbitrary signed integer.
  Coeff from_int(std::int64_t v) const {
    std::int64_t r = v % std::int64_t(p_);
    return Coeff(r < 0 ? r + p_ : r);
  }
  /// Symmetric representative in (-p/2, p/2], used for printing.
  std::int64_t to_signed(Coeff a) const { return a > p_ / 2 ? std::int64_t(a) - p_ : std::int64_t(a); }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  std::uint32_t p_ = 2;
};

bool is_prime(std::uint64_t n);

/// Returns n such that q = p^n, or -1 if q is not a positive power of p.
int log_p(std::uint64_t q, std::uint64_t p);

}  // namespace fpush
