#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fpush/algebra.hpp"
#include "fpush/canonical.hpp"
#include "fpush/degreewise.hpp"

namespace fpush {

/// Degree-preserving endomorphisms of a minimally presented module, with the
/// faithful representation on W = sum of the components M_D over the distinct
/// generator degrees D. Matrices act on row vectors, so the matrix of
/// "first a, then b" is rep(a) * rep(b).
class EndAlgebra {
 public:
  explicit EndAlgebra(const GradedModule& m);

  const GradedModule& module() const { return m_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<PolyMatrix>& basis() const { return basis_; }
  /// Representations of the basis maps on W.
  const std::vector<Mat>& rep_basis() const { return rep_; }
  std::size_t rep_dim() const { return wdim_; }

  Mat rep(const PolyMatrix& map) const;
  PolyMatrix map(const Mat& w) const;
  /// Induced endomorphism of M/mM (rows = generators).
  Mat constant_part(const Mat& w) const;
  /// Coordinates of w in the basis; throws if w is not an endomorphism.
  std::vector<Coeff> coords(const Mat& w) const;
  /// Coordinates of basis[i] followed by basis[j].
  std::vector<Coeff> product(std::size_t i, std::size_t j) const;

 private:
  GradedModule m_;
  std::shared_ptr<ModuleContext> ctx_;
  std::vector<RationalDegree> degrees_;
  std::vector<std::size_t> block_offset_;
  std::vector<std::size_t> gen_pos_;
  std::size_t wdim_ = 0;
  std::vector<PolyMatrix> basis_;
  std::vector<Mat> rep_;
  Mat rep_vectors_;
};

/// Locality of the corner algebra e End e, decided on its image in End(M/mM).
algebra::Verdict corner_is_local(const EndAlgebra& e, const Mat& idem, std::mt19937_64& rng);
algebra::Verdict is_local(const EndAlgebra& e, std::uint64_t seed = 1);

struct IdempotentSet {
  std::vector<Mat> idempotents;  ///< on W, orthogonal, summing to 1
  std::vector<bool> primitive;   ///< locality certified for the corner
  bool complete() const {
    for (bool b : primitive)
      if (!b) return false;
    return true;
  }
};
IdempotentSet primitive_idempotents(const EndAlgebra& e, std::uint64_t seed = 1, int tries = 64);

struct Summand {
  GradedModule module;   ///< minimally presented
  PolyMatrix inclusion;  ///< summand generators written in the input's generators
  PolyMatrix projection; ///< input generators written in the summand's generators
  bool indecomposable = false;  ///< local End certificate
};

struct SummandClass {
  GradedModule representative;
  std::vector<std::size_t> members;    ///< indices into Decomposition::summands
  std::vector<RationalDegree> shifts;  ///< member ≅ representative.shifted(shift)
  std::size_t multiplicity() const { return members.size(); }
  bool free_rank_one = false;
};

struct Decomposition {
  GradedModule module;
  std::vector<Summand> summands;
  std::vector<SummandClass> classes;
  bool complete = true;  ///< every summand carries an indecomposability certificate
  bool verified = false; ///< split maps recompose to the identity, Hilbert series add up
  std::size_t free_rank() const;
};

Decomposition decompose(const GradedModule& m, std::uint64_t seed = 1);

struct IsoResult {
  bool isomorphic = false;
  bool decided = true;
  RationalDegree shift;  ///< m ≅ n.shifted(shift)
  PolyMatrix map;        ///< m -> n.shifted(shift), empty if no certificate
};
IsoResult is_isomorphic(const GradedModule& m, const GradedModule& n, std::uint64_t seed = 1);

struct SummandTest {
  bool is_summand = false;
  bool decided = true;
  RationalDegree shift;  ///< Q.shifted(shift) is the split summand
  PolyMatrix phi;        ///< Q.shifted(shift) -> M
  PolyMatrix psi;        ///< M -> Q.shifted(shift), psi after phi = identity
};
SummandTest is_direct_summand(const GradedModule& q, const GradedModule& m, std::uint64_t seed = 1);
SummandTest is_fsplit(const GradedModule& q, std::uint64_t q_power, std::uint64_t seed = 1);

/// Fedder's criterion for T/(f): F-pure iff f^{p-1} has a monomial with all
/// exponents below p. Throws std::invalid_argument unless the ring has at most
/// one defining relation.
bool fedder_check(const GradedRing& ring);

struct FNet {
  GradedModule seed;
  std::uint64_t q = 0;
  std::vector<GradedModule> classes;  ///< indecomposables up to isomorphism and shift
  /// transitions[i] = (class, multiplicity) pairs of F_* classes[i]; empty until expanded.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> transitions;
  std::vector<bool> expanded;
  bool closed = false;    ///< every class expanded, no new classes
  bool complete = true;   ///< every decomposition certified
  int steps = 0;
};

/// Breadth-first closure of the seed's indecomposable summands under F_*.
/// `max_steps` bounds the number of pushforward decompositions.
FNet net_explore(const GradedModule& seed, int max_steps, std::uint64_t q, std::uint64_t rng_seed = 1,
                 int threads = 1);

struct McmSearchResult {
  bool found = false;
  std::string route;  ///< "regular", "low-dimension", "net"
  std::optional<McmCertificate> certificate;
  std::optional<GradedModule> source;  ///< module whose omega^0 was taken
  FNet net;
  std::vector<std::int64_t> h_values;  ///< per net class (-1 if not top-dimensional)
  std::int64_t min_h = -1;
};
McmSearchResult mcm_search(const RingPtr& ring, int max_steps, std::uint64_t rng_seed = 1, int threads = 1);

/// Entrywise sum of two maps with the same shape.
PolyMatrix matrix_sum(const PolyRing& ring, const PolyMatrix& a, const PolyMatrix& b);

}  // namespace fpush
