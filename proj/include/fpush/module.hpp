#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "fpush/degree.hpp"
#include "fpush/groebner.hpp"
#include "fpush/hilbert.hpp"
#include "fpush/polynomial.hpp"

namespace fpush {

/// R = T / I for a weighted polynomial ring T and a homogeneous ideal I.
class GradedRing {
 public:
  GradedRing(PolyRing ambient, std::vector<Polynomial> relations);

  const PolyRing& ambient() const { return ambient_; }
  const PrimeField& field() const { return ambient_.field(); }
  std::uint32_t characteristic() const { return ambient_.characteristic(); }
  std::size_t nvars() const { return ambient_.nvars(); }
  const std::vector<Polynomial>& relations() const { return relations_; }
  bool is_polynomial_ring() const { return relations_.empty(); }

  /// Krull dimension of R (dim T - height I).
  int dimension() const;
  HilbertSeries hilbert_series() const;

 private:
  PolyRing ambient_;
  std::vector<Polynomial> relations_;
  struct Cache {
    std::once_flag once;
    HilbertSeries hs;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

using RingPtr = std::shared_ptr<const GradedRing>;

/// Polynomial matrix in the row-vector convention: row k is the image of
/// source generator k, written in the target's generators.
using PolyMatrix = std::vector<std::vector<Polynomial>>;

/// Finitely presented graded R-module: coker of the relation rows acting on
/// generator columns. Relations are stored over R; the ideal of R is added
/// generator-wise whenever the module is viewed over the ambient ring T.
class GradedModule {
 public:
  GradedModule() = default;
  GradedModule(RingPtr ring, std::vector<RationalDegree> generator_degrees, PolyMatrix relations);

  const RingPtr& ring_ptr() const { return ring_; }
  const GradedRing& ring() const { return *ring_; }
  std::size_t num_generators() const { return gen_degrees_.size(); }
  const std::vector<RationalDegree>& generator_degrees() const { return gen_degrees_; }
  const PolyMatrix& relations() const { return relations_; }
  const std::vector<RationalDegree>& relation_degrees() const { return rel_degrees_; }

  FreeModule free_module() const { return FreeModule(ring_->ambient(), gen_degrees_); }
  /// Relation rows plus f * e_j for every ideal generator f and generator j.
  std::vector<ModVec> ambient_relations() const;
  /// Reduced Gröbner basis of the ambient relation module (cached, thread-safe).
  const GroebnerBasis& groebner() const;
  HilbertSeries hilbert_series() const;

  /// Same module with every generator degree increased by delta.
  GradedModule shifted(RationalDegree delta) const;
  bool is_zero() const { return hilbert_series().is_zero(); }

 private:
  RingPtr ring_;
  std::vector<RationalDegree> gen_degrees_;
  PolyMatrix relations_;
  std::vector<RationalDegree> rel_degrees_;
  struct Cache {
    std::once_flag once;
    std::unique_ptr<GroebnerBasis> gb;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// A presentation change M_old ≅ M_new with mutually inverse generator maps.
struct PresentationChange {
  GradedModule module;
  PolyMatrix to_new;  ///< old generators written in new generators
  PolyMatrix to_old;  ///< new generators written in old generators
};

RingPtr make_ring(PolyRing ambient, std::vector<Polynomial> relations = {});

GradedModule free_module(const RingPtr& ring, const std::vector<RationalDegree>& degrees);
GradedModule zero_module(const RingPtr& ring);
/// R/J for an ideal J given by homogeneous generators.
GradedModule quotient_ring_module(const RingPtr& ring, const std::vector<Polynomial>& ideal);
/// The ideal J ⊆ R as a module (generators = the given elements).
GradedModule ideal_module(const RingPtr& ring, const std::vector<Polynomial>& ideal);
/// The residue field k = R/m.
GradedModule residue_field(const RingPtr& ring);

/// Eliminates unit entries and redundant relations. The result has all
/// entries in the irrelevant ideal and dim_k(M/mM) generators.
PresentationChange minimal_presentation_with_maps(const GradedModule& m);
GradedModule minimal_presentation(const GradedModule& m);

GradedModule direct_sum(const GradedModule& a, const GradedModule& b);
GradedModule direct_sum(const std::vector<GradedModule>& parts);

/// Submodules spanned by generators of one degree class mod the weight gcd;
/// such classes never interact, so the module is their direct sum.
struct DegreeClassPiece {
  GradedModule module;
  std::vector<std::size_t> generators;  ///< indices into the source module
};
std::vector<DegreeClassPiece> split_by_degree_class(const GradedModule& m);

/// Rows of a matrix product in the row convention (a: k×l, b: l×m).
PolyMatrix matrix_product(const PolyRing& ring, const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix identity_matrix(std::size_t n);

/// Checks that `map` (rows = images of source generators) is a well-defined
/// degree-preserving homomorphism source -> target.
bool is_homomorphism(const GradedModule& source, const GradedModule& target, const PolyMatrix& map);
/// Whether two maps source -> target agree (difference lands in the relations).
bool maps_equal(const GradedModule& target, const PolyMatrix& a, const PolyMatrix& b);

}  // namespace fpush
