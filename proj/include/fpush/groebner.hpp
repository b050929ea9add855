#pragma once

#include <cstdint>
#include <vector>

#include "fpush/degree.hpp"
#include "fpush/polynomial.hpp"

namespace fpush {

/// One term c * mono * e_comp of a free-module element.
struct ModTerm {
  Monomial mono;
  std::uint32_t comp;
  Coeff coeff;
  friend bool operator==(const ModTerm&, const ModTerm&) = default;
};

/// Free-module element, terms sorted descending in the module order.
using ModVec = std::vector<ModTerm>;

/// Graded free module T^n over the ambient ring with the position-over-term
/// extension of weighted graded reverse lex (component 0 has top priority).
class FreeModule {
 public:
  FreeModule() = default;
  FreeModule(PolyRing ring, std::vector<RationalDegree> degrees)
      : ring_(std::move(ring)), degrees_(std::move(degrees)) {}

  const PolyRing& ring() const { return ring_; }
  const PrimeField& field() const { return ring_.field(); }
  std::size_t rank() const { return degrees_.size(); }
  const std::vector<RationalDegree>& degrees() const { return degrees_; }

  /// Monomial order: weighted degree, then reverse lexicographic.
  int compare_monomials(const Monomial& a, const Monomial& b) const {
    std::int64_t da = ring_.degree(a), db = ring_.degree(b);
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = ring_.nvars(); i-- > 0;)
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    return 0;
  }
  int compare(const ModTerm& a, const ModTerm& b) const {
    if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
    return compare_monomials(a.mono, b.mono);
  }
  bool greater(const ModTerm& a, const ModTerm& b) const { return compare(a, b) > 0; }

  RationalDegree degree(const ModTerm& t) const { return degrees_[t.comp] + ring_.degree(t.mono); }
  /// Degree of a homogeneous nonzero element; throws if inhomogeneous.
  RationalDegree degree(const ModVec& v) const;
  bool is_homogeneous(const ModVec& v) const;

  /// Sorts terms, merges duplicates and drops zeros.
  ModVec normalize(std::vector<ModTerm> terms) const;
  ModVec from_row(const std::vector<Polynomial>& row) const;
  std::vector<Polynomial> to_row(const ModVec& v) const;
  ModVec basis_vector(std::size_t i) const { return {ModTerm{Monomial{}, std::uint32_t(i), 1}}; }

  ModVec add(const ModVec& a, const ModVec& b) const;
  ModVec scale(const ModVec& a, Coeff c) const;
  /// a - c * m * b.
  ModVec sub_mul(const ModVec& a, Coeff c, const Monomial& m, const ModVec& b) const;
  ModVec mul_poly(const Polynomial& f, const ModVec& v) const;
  ModVec make_monic(ModVec v) const;

 private:
  PolyRing ring_;
  std::vector<RationalDegree> degrees_;
};

/// Reduced Gröbner basis of a homogeneous submodule of a free module.
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  /// Homogeneous Buchberger with Gebauer–Möller pair pruning, processed
  /// degree by degree. Throws std::invalid_argument on inhomogeneous input.
  GroebnerBasis(FreeModule free, const std::vector<ModVec>& generators);

  const FreeModule& free() const { return free_; }
  const std::vector<ModVec>& elements() const { return basis_; }
  std::size_t size() const { return basis_.size(); }
  /// Indices into the constructor's generator list that form a minimal
  /// generating set of the submodule.
  const std::vector<std::size_t>& minimal_generator_indices() const { return minimal_; }

  ModVec normal_form(ModVec v) const;
  bool contains(const ModVec& v) const { return normal_form(v).empty(); }
  /// Whether c * e_comp * mono is a standard (non-leading) monomial.
  bool is_standard(const Monomial& m, std::uint32_t comp) const;
  /// Leading monomials per component.
  std::vector<std::vector<Monomial>> leading_monomials() const;

 private:
  const ModVec* find_reducer(const ModTerm& t) const;
  void index_basis();

  FreeModule free_;
  std::vector<ModVec> basis_;
  std::vector<std::size_t> minimal_;
  std::vector<std::vector<std::size_t>> by_comp_;
};

/// Minimal homogeneous generators of the syzygy module of `rows` (elements of
/// `free`). Result lives in the free module whose i-th basis vector has the
/// degree of rows[i].
std::vector<ModVec> syzygies(const FreeModule& free, const std::vector<ModVec>& rows, FreeModule* syz_free = nullptr);
/// Same, with explicit row degrees (needed when some rows are zero).
std::vector<ModVec> syzygies(const FreeModule& free, const std::vector<ModVec>& rows,
                             const std::vector<RationalDegree>& row_degrees, FreeModule* syz_free = nullptr);

/// Minimal homogeneous generators (a subset of the input, zeros dropped).
std::vector<ModVec> minimal_generators(const FreeModule& free, const std::vector<ModVec>& gens);

}  // namespace fpush
