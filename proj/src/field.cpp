#include "fpush/field.hpp"

namespace fpush {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

int log_p(std::uint64_t q, std::uint64_t p) {
  if (p < 2 || q < p) return -1;
  int n = 0;
  while (q % p == 0) {
    q /= p;
    ++n;
  }
  return q == 1 ? n : -1;
}

PrimeField::PrimeField(std::uint64_t p) {
  if (p > (std::uint64_t(1) << 31) || !is_prime(p))
    throw std::invalid_argument("characteristic must be a prime <= 2^31, got " + std::to_string(p));
  p_ = std::uint32_t(p);
}

Coeff PrimeField::pow(Coeff a, std::uint64_t e) const {
  std::uint64_t r = 1 % p_, b = a % p_;
  while (e) {
    if (e & 1) r = r * b % p_;
    b = b * b % p_;
    e >>= 1;
  }
  return Coeff(r);
}

Coeff PrimeField::inv(Coeff a) const {
  if (a % p_ == 0) throw std::domain_error("inverse of zero in F_p");
  std::int64_t t = 0, nt = 1, r = p_, nr = a;
  while (nr) {
    std::int64_t qt = r / nr;
    std::int64_t tmp = t - qt * nt;
    t = nt;
    nt = tmp;
    tmp = r - qt * nr;
    r = nr;
    nr = tmp;
  }
  return Coeff(t < 0 ? t + p_ : t);
}

}  // namespace fpush
