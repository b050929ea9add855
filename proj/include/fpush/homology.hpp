#pragma once

#include <limits>
#include <string>
#include <vector>

#include "fpush/module.hpp"

namespace fpush {

/// Minimal graded free resolution over the ambient polynomial ring.
/// twists[i] lists the generator degrees of F_i; maps[i] is the matrix of
/// F_{i+1} -> F_i in the row convention (rows = generators of F_{i+1}).
struct FreeResolution {
  std::vector<std::vector<RationalDegree>> twists;
  std::vector<PolyMatrix> maps;
  bool truncated = false;

  std::size_t length() const { return twists.empty() ? 0 : twists.size() - 1; }
  std::vector<std::size_t> ranks() const;
  /// Betti table rows "i: degree->count".
  std::string betti_table() const;
};

/// max_length < 0 means resolve completely (terminates by Hilbert's syzygy theorem).
FreeResolution free_resolution(const GradedModule& m, int max_length = -1);

inline constexpr int kInfiniteDepth = std::numeric_limits<int>::max();

int projective_dimension(const GradedModule& m);
/// depth = dim T - pd_T(M); kInfiniteDepth for the zero module.
int depth(const GradedModule& m);
/// Krull dimension; throws std::domain_error for the zero module.
int dimension(const GradedModule& m);

/// Ext^i_T(M, T(twist)) computed from the dualized minimal resolution; the
/// result is presented over M's ring (it is annihilated by its ideal).
/// T(twist) has its generator in degree -twist.
GradedModule ext_module(int i, const GradedModule& m, RationalDegree twist = 0);

/// The submodule of F generated by `sub` (elements of F), presented as a module.
GradedModule submodule_presentation(const RingPtr& ring, const FreeModule& free, const std::vector<ModVec>& sub,
                                    const std::vector<ModVec>& modulo);

/// {v in F : g v in N} for a submodule N given by generators.
std::vector<ModVec> colon_by_element(const FreeModule& free, const std::vector<ModVec>& n, const Polynomial& g);
/// Saturation N : J^infinity for the ideal J = (gs).
std::vector<ModVec> saturate(const FreeModule& free, const std::vector<ModVec>& n, const std::vector<Polynomial>& gs);
/// Intersection of two submodules of the same free module.
std::vector<ModVec> intersect(const FreeModule& free, const std::vector<ModVec>& a, const std::vector<ModVec>& b);
/// ann_T(M) as ideal generators (contains the ideal of M's ring).
std::vector<Polynomial> annihilator(const GradedModule& m);

/// H^0_J(M) = (0 :_M J^infinity) as a submodule, and M / H^0_J(M).
struct TorsionSplit {
  GradedModule torsion;
  GradedModule quotient;
};
TorsionSplit torsion_part(const GradedModule& m, const std::vector<Polynomial>& ideal);

/// Length of H^0_m(M), by iterated colon with the irrelevant ideal.
std::int64_t lambda0(const GradedModule& m);
/// The same length via local duality: length of Ext^n_T(M, T).
std::int64_t lambda0_by_duality(const GradedModule& m);

/// M/s(M) and s(M), where s(M) is the largest submodule of dimension < dim M.
struct UnmixedSplit {
  GradedModule quotient;
  GradedModule kernel;
};
UnmixedSplit unmixed_quotient(const GradedModule& m);

}  // namespace fpush
