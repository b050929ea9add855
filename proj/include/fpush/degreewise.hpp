#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "fpush/linalg.hpp"
#include "fpush/module.hpp"

namespace fpush {

/// F_p-basis of one graded component M_d: standard monomials mono * e_comp of the
/// module's Gröbner basis with deg(e_comp) + deg(mono) = d.
class ComponentBasis {
 public:
  ComponentBasis() = default;
  ComponentBasis(const GradedModule& m, RationalDegree d);

  RationalDegree degree() const { return degree_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<ModTerm>& basis() const { return basis_; }
  /// Index of mono * e_comp, or -1 if it is not a basis element here.
  std::int64_t index(const Monomial& mono, std::uint32_t comp) const;
  /// Coordinates of a reduced element of degree d.
  std::vector<Coeff> coords(const ModVec& reduced) const;
  ModVec element(std::span<const Coeff> coords) const;

 private:
  RationalDegree degree_;
  std::vector<ModTerm> basis_;
  std::map<std::pair<std::uint32_t, Monomial>, std::size_t> index_;
};

/// Normal-form and component caches for repeated degreewise work on one module.
class ModuleContext {
 public:
  explicit ModuleContext(GradedModule m);

  const GradedModule& module() const { return m_; }
  const FreeModule& free() const { return free_; }
  /// Normal form of mono * e_comp (cached).
  const ModVec& reduce_term(const Monomial& mono, std::uint32_t comp);
  ModVec reduce(const ModVec& v);
  /// Normal form of f * v for a reduced v.
  ModVec multiply(const Polynomial& f, const ModVec& v);
  const ComponentBasis& component(RationalDegree d);

 private:
  GradedModule m_;
  FreeModule free_;
  std::map<std::pair<std::uint32_t, Monomial>, ModVec> nf_cache_;
  std::map<RationalDegree, ComponentBasis> components_;
};

/// Degree-preserving homomorphisms M -> N.shifted(shift), i.e. generator j of
/// M goes to an element of N of degree deg(g_j) - shift.
class HomSpace {
 public:
  HomSpace(const GradedModule& source, const GradedModule& target, RationalDegree shift);

  std::size_t dim() const { return basis_.size(); }
  RationalDegree shift() const { return shift_; }
  const GradedModule& source() const { return source_; }
  const GradedModule& target() const { return target_; }
  /// Basis maps; each has one row per source generator, entries in N's generators.
  const std::vector<PolyMatrix>& basis() const { return basis_; }
  /// Coordinate vectors of the basis maps (concatenated component coordinates).
  const Mat& basis_coords() const { return coords_; }
  PolyMatrix combination(std::span<const Coeff> c) const;
  /// Images of generators as reduced elements of N for the map with coordinates c.
  std::vector<ModVec> images(std::span<const Coeff> c) const;
  /// Constant part: matrix of the induced map M/mM -> N/mN (rows = source generators).
  Mat constant_part(std::span<const Coeff> c) const;
  /// Coordinates (in the ambient coordinate space) of an arbitrary map.
  std::vector<Coeff> map_coords(const PolyMatrix& map) const;

 private:
  GradedModule source_, target_;
  RationalDegree shift_;
  std::shared_ptr<ModuleContext> ctx_;
  std::vector<const ComponentBasis*> comps_;
  std::vector<std::size_t> offsets_;
  std::vector<PolyMatrix> basis_;
  Mat coords_;
};

/// Finite-length module: a graded F_p-basis and one action matrix per variable;
/// row b of action[i] holds the coordinates of x_i * b.
struct FiniteLengthModule {
  RingPtr ring;
  std::vector<RationalDegree> degrees;
  std::vector<Mat> action;

  std::size_t length() const { return degrees.size(); }
};

/// Throws std::domain_error if M does not have finite length.
FiniteLengthModule to_finite_length(const GradedModule& m);
GradedModule from_finite_length(const FiniteLengthModule& m);
/// Graded dual: negated degrees, transposed action.
FiniteLengthModule matlis_dual_fl(const FiniteLengthModule& m);
/// Commutation and nilpotency of the action, plus the ring relations.
bool is_valid_finite_length(const FiniteLengthModule& m);

}  // namespace fpush
