#pragma once

#include <optional>
#include <random>
#include <vector>

#include "fpush/linalg.hpp"

namespace fpush::algebra {

enum class Verdict { yes, no, undecided };

/// Row space of `seeds` closed under v -> v * g for every g in `gens`,
/// returned as reduced echelon rows.
Mat spin(const PrimeField& F, const Mat& seeds, const std::vector<Mat>& gens);

/// Minimal polynomial of a square matrix (monic).
UPoly minimal_polynomial(const PrimeField& F, const Mat& a);

/// Action of the spanning set on one composition factor, one matrix per element.
using Action = std::vector<Mat>;

/// Composition factors of F_p^n (row vectors) under the algebra spanned by
/// `span`, using Norton's irreducibility test on random algebra elements.
/// Returns nullopt when `tries` random elements per step were inconclusive.
std::optional<std::vector<Action>> composition_factors(const PrimeField& F, const std::vector<Mat>& span, std::size_t n,
                                                       std::mt19937_64& rng, int tries = 64);

/// Whether the algebra spanned by `span` (which must contain the identity of
/// F_p^n) is local, decided on its semisimple quotient: local iff that
/// quotient is commutative and generated by one element with irreducible
/// minimal polynomial of full degree.
Verdict is_local(const PrimeField& F, const std::vector<Mat>& span, std::size_t n, std::mt19937_64& rng,
                 int tries = 64);

/// Orthogonal idempotents summing to e, one per coprime factor of the
/// characteristic polynomial of a. Requires a = e a e and e idempotent; every
/// result lies in the algebra generated by a and e.
std::vector<Mat> fitting_split(const PrimeField& F, const Mat& a, const Mat& e, std::mt19937_64& rng);

/// Inverse of an invertible a as a polynomial in a.
Mat polynomial_inverse(const PrimeField& F, const Mat& a);

}  // namespace fpush::algebra
