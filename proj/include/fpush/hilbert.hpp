#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fpush/degree.hpp"
#include "fpush/polynomial.hpp"

namespace fpush {

/// Hilbert series N(t) / prod_i (1 - t^{w_i}); the numerator may carry
/// rational exponents (pushforward gradings).
class HilbertSeries {
 public:
  HilbertSeries() = default;
  HilbertSeries(std::vector<int> weights, std::map<RationalDegree, std::int64_t> numerator);

  const std::vector<int>& weights() const { return weights_; }
  const std::map<RationalDegree, std::int64_t>& numerator() const { return numerator_; }
  bool is_zero() const { return numerator_.empty(); }

  HilbertSeries operator+(const HilbertSeries& o) const;
  HilbertSeries operator-(const HilbertSeries& o) const;
  HilbertSeries scaled(std::int64_t k) const;
  /// Multiplies by t^delta (generators move up by delta).
  HilbertSeries shifted(RationalDegree delta) const;
  bool operator==(const HilbertSeries& o) const {
    if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
    return weights_ == o.weights_ && numerator_ == o.numerator_;
  }

  /// Lowest exponent of the numerator (= lowest generator degree for minimal presentations).
  RationalDegree lowest_degree() const;
  /// Equality after moving both lowest terms to degree 0; returns the shift s with other = this * t^s.
  bool equal_up_to_shift(const HilbertSeries& other, RationalDegree* shift = nullptr) const;

  /// Krull dimension: number of variables minus the order of vanishing of the numerator at t = 1.
  /// Returns -1 for the zero module.
  int dimension() const;
  /// lim_{t->1} (1-t)^dim * H(t); the generic rank over a domain is a ratio of these.
  RationalDegree multiplicity() const;
  /// Total length, only for finite-length modules (dimension <= 0).
  std::int64_t length() const;
  /// Coefficients of H(t) for exponents <= max_degree, keyed by exponent.
  std::map<RationalDegree, std::int64_t> expand(RationalDegree max_degree) const;

  std::string str() const;

 private:
  /// Numerator as an integer polynomial in u = t^(1/L), shifted to start at u^0.
  std::vector<std::int64_t> numerator_in_u(std::int64_t& L, std::int64_t& offset) const;

  std::vector<int> weights_;
  std::map<RationalDegree, std::int64_t> numerator_;
};

/// Numerator of the Hilbert series of T/I for a monomial ideal I (integer degrees).
std::vector<std::int64_t> monomial_ideal_numerator(const PolyRing& ring, std::vector<Monomial> gens);

}  // namespace fpush
