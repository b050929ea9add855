#pragma once

#include <cstdint>
#include <vector>

#include "fpush/degreewise.hpp"
#include "fpush/module.hpp"

namespace fpush {

/// a = sum_k digits[k] q^k with 0 <= digits[k] < q.
struct QadicIndex {
  std::uint64_t a = 0;
  std::vector<std::uint64_t> digits;
};

/// Throws std::out_of_range unless a < q^d.
QadicIndex qadic_digits(std::uint64_t a, std::uint64_t q, std::size_t d);
std::uint64_t checked_power(std::uint64_t q, std::size_t d);

/// Monomials m_a = prod_k x_k^{a(k)} for a = 0 .. q^d - 1 in this order.
std::vector<Monomial> standard_basis(std::uint64_t q, std::size_t d);

/// Matrix D(s) of *m -> *(s m) on F_*T in the standard basis (row a holds the
/// coordinates of *(s m_a)). T is the ambient ring of s; q must be a power of p.
PolyMatrix mult_matrix(const PolyRing& ring, const Polynomial& s, std::uint64_t q);
/// a_{ij} = a_{n-1-j, n-1-i}.
bool is_persymmetric(const PolyMatrix& a);

/// Block substitution a_ij -> D(a_ij); row index i q^d + a, column j q^d + b.
PolyMatrix nabla_matrix(const PolyRing& ring, const PolyMatrix& a, std::uint64_t q);

/// Full pushforward presentation before any pruning.
struct PushforwardMatrix {
  std::uint64_t q = 0;
  PolyMatrix source;  ///< ambient presentation of M (relations and ideal multiples)
  PolyMatrix matrix;  ///< source^nabla
  std::vector<RationalDegree> generator_degrees;
  std::vector<RationalDegree> relation_degrees;
};
PushforwardMatrix pushforward_matrix(const GradedModule& m, std::uint64_t q);

/// F_*M over the same ring, minimally presented. Generator *(g_j m_a) has
/// degree (deg g_j + deg m_a) / q.
GradedModule pushforward(const GradedModule& m, std::uint64_t q);
/// F_*M as its independent degree-class pieces, each minimally presented.
std::vector<GradedModule> pushforward_pieces(const GradedModule& m, std::uint64_t q);
/// n-fold pushforward with q = p at each step.
GradedModule iterate_pushforward(const GradedModule& m, unsigned n);

/// Checks P (A^T)^nabla P^{-1} = (A^nabla)^T for a square A, P = diag(J, ..., J).
bool conjugation_check(const PolyRing& ring, const PolyMatrix& a, std::uint64_t q);

/// F_* at finite length: same basis, degrees / q, action x_i -> A_i^q.
FiniteLengthModule pushforward_fl(const FiniteLengthModule& m, std::uint64_t q);
/// Matlis dual of F_* of the Matlis dual.
FiniteLengthModule tf_functor_fl(const FiniteLengthModule& m, std::uint64_t q);

}  // namespace fpush
