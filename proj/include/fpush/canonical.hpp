#pragma once

#include <stdexcept>
#include <string>

#include "fpush/homology.hpp"

namespace fpush {

/// omega^i(M) = Ext^{n-d+i}_T(M, T(-w)), n = #variables, d = dim R, w = weight sum.
/// Zero outside 0 <= i <= d.
GradedModule para_canonical(const GradedModule& m, int i);

/// lambda0(omega^1(M)); zero iff omega^1(M) is zero or has positive depth.
std::int64_t h_invariant(const GradedModule& m);

class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a computed depth contradicts a proved depth bound. Carries the
/// data needed to replay the computation.
class TheoremViolation : public std::runtime_error {
 public:
  TheoremViolation(const std::string& what, std::string bundle)
      : std::runtime_error(what), bundle_(std::move(bundle)) {}
  const std::string& bundle() const { return bundle_; }

 private:
  std::string bundle_;
};

struct McmCertificate {
  GradedModule module;  ///< omega^0(M)
  int depth = 0;
  std::int64_t h = 0;
  std::string betti;  ///< minimal resolution of omega^0(M) over the ambient ring
};

/// omega^0(M) with a depth certificate. Needs dim M = dim R <= 3; for dim 3
/// the module must satisfy h(M) = 0.
McmCertificate mcm_from_module(const GradedModule& m);

/// Plain-text description of a ring and module for error bundles.
std::string describe(const GradedModule& m);

}  // namespace fpush
