#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "fpush/degree.hpp"
#include "fpush/field.hpp"

namespace fpush {

inline constexpr std::size_t kMaxVars = 8;

/// Exponent vector. Unused trailing slots stay zero, so lexicographic
/// comparison of the raw array is a valid total order for any variable count.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> e{};

  std::uint16_t operator[](std::size_t i) const { return e[i]; }
  std::uint16_t& operator[](std::size_t i) { return e[i]; }

  bool is_one() const {
    for (auto x : e)
      if (x) return false;
    return true;
  }
  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = std::uint16_t(a.e[i] - b.e[i]);
    return r;
  }
  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
    return r;
  }
  friend bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (a.e[i] && b.e[i]) return false;
    return true;
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

  static Monomial var(std::size_t i, std::uint16_t power = 1) {
    Monomial m;
    m.e[i] = power;
    return m;
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto x : m.e) h = (h ^ x) * 1099511628211ull;
    return std::size_t(h);
  }
};

struct Term {
  Monomial mono;
  Coeff coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial: terms with nonzero coefficients, sorted by
/// descending exponent vector. The order is representation-only; weighted
/// orders live in the Gröbner layer.
class Polynomial {
 public:
  Polynomial() = default;
  /// Sorts the terms and drops zero coefficients; monomials must be distinct.
  explicit Polynomial(std::vector<Term> terms);

  static Polynomial constant(Coeff c) { return c ? Polynomial(std::vector<Term>{{Monomial{}, c}}) : Polynomial(); }
  static Polynomial monomial(const Monomial& m, Coeff c = 1) {
    return c ? Polynomial(std::vector<Term>{{m, c}}) : Polynomial();
  }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  /// Coefficient of the monomial 1.
  Coeff constant_term() const {
    return !terms_.empty() && terms_.back().mono.is_one() ? terms_.back().coeff : 0;
  }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  Coeff coeff(const Monomial& m) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  friend class PolyRing;
  struct Sorted {};
  Polynomial(std::vector<Term> terms, Sorted) : terms_(std::move(terms)) {}
  std::vector<Term> terms_;
};

/// Ambient weighted polynomial ring F_p[x_0..x_{n-1}] with positive integer weights.
class PolyRing {
 public:
  PolyRing() = default;
  PolyRing(PrimeField field, std::vector<std::string> names, std::vector<int> weights);

  const PrimeField& field() const { return field_; }
  std::uint32_t characteristic() const { return field_.characteristic(); }
  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<int>& weights() const { return weights_; }
  int weight_sum() const;

  std::int64_t degree(const Monomial& m) const {
    std::int64_t d = 0;
    for (std::size_t i = 0; i < nvars(); ++i) d += std::int64_t(weights_[i]) * m.e[i];
    return d;
  }
  /// Weighted degree of a homogeneous polynomial; throws if inhomogeneous or zero.
  std::int64_t degree(const Polynomial& f) const;
  bool is_homogeneous(const Polynomial& f) const;

  Polynomial var(std::size_t i) const { return Polynomial::monomial(Monomial::var(i)); }
  Polynomial add(const Polynomial& f, const Polynomial& g) const;
  Polynomial sub(const Polynomial& f, const Polynomial& g) const;
  Polynomial neg(const Polynomial& f) const;
  Polynomial scale(const Polynomial& f, Coeff c) const;
  Polynomial mul_term(const Polynomial& f, const Monomial& m, Coeff c) const;
  Polynomial mul(const Polynomial& f, const Polynomial& g) const;
  Polynomial pow(const Polynomial& f, unsigned e) const;
  /// f^q via the characteristic-p rule: (sum c_i m_i)^q = sum c_i m_i^q over F_p.
  Polynomial frob_power(const Polynomial& f, std::uint64_t q) const;
  /// f(x_0^q, ..., x_{n-1}^q) without touching coefficients.
  Polynomial substitute_powers(const Polynomial& f, std::uint64_t q) const;

  /// Calls fn for every monomial of weighted degree exactly deg.
  void for_each_monomial(std::int64_t deg, const std::function<void(const Monomial&)>& fn) const;
  std::vector<Monomial> monomials_of_degree(std::int64_t deg) const;
  /// Number of monomials of each degree 0..max_deg.
  std::vector<std::int64_t> monomial_counts(std::int64_t max_deg) const;

  /// Parses the grammar c*x^a*y^b with + - ^ and parentheses.
  Polynomial parse(const std::string& text) const;
  /// Canonical printing: weighted degree descending, ties by exponent vector.
  std::string format(const Polynomial& f) const;
  std::string format(const Monomial& m) const;

  bool same_as(const PolyRing& o) const {
    return field_ == o.field_ && names_ == o.names_ && weights_ == o.weights_;
  }

  void check_arity(const Polynomial& f) const;

 private:
  PrimeField field_;
  std::vector<std::string> names_;
  std::vector<int> weights_;
};

/// Parse failure with position inside the offending string.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

}  // namespace fpush
