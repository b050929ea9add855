#include <gtest/gtest.h>

#include <map>
#include <set>

#include "fpush/canonical.hpp"
#include "fpush/frobenius.hpp"
#include "fpush/homology.hpp"
#include "fpush/splitting.hpp"

using namespace fpush;

namespace {

Mat from_rows(std::vector<std::vector<Coeff>> rows) {
  Mat m(0, rows.front().size());
  for (auto& r : rows) m.append_row(r);
  return m;
}

GradedModule power_of_max(const RingPtr& R, int k) {
  const auto& T = R->ambient();
  std::vector<Polynomial> gens;
  for (int i = 0; i <= k; ++i)
    gens.push_back(T.parse("x^" + std::to_string(k - i) + "*y^" + std::to_string(i)));
  return ideal_module(R, gens);
}

// F_* of a monomial ideal splits along exponent residues mod q: the class
// (a, b) contributes the ideal of monomials x^u y^v with q(u+v) >= k - a - b,
// i.e. m^ceil((k-a-b)/q). Returns power -> count.
std::map<int, int> residue_class_oracle(int k, int q) {
  std::map<int, int> out;
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      int need = k - a - b;
      int power = need <= 0 ? 0 : (need + q - 1) / q;
      ++out[power];
    }
  return out;
}

// Multiplicities of classes of d, keyed by which power of m (up to shift) they are.
std::map<int, int> classify_by_power(const RingPtr& R, const Decomposition& d, int max_power) {
  std::map<int, int> out;
  for (const auto& c : d.classes) {
    int found = -1;
    for (int j = 0; j <= max_power && found < 0; ++j) {
      GradedModule cand = j == 0 ? free_module(R, {0}) : power_of_max(R, j);
      if (is_isomorphic(c.representative, cand).isomorphic) found = j;
    }
    out[found] += int(c.multiplicity());
  }
  return out;
}

}  // namespace

TEST(Algebra, LocalityVerdicts) {
  PrimeField F(3);
  std::mt19937_64 rng(1);
  Mat I = Mat::identity(2);
  Mat e12 = from_rows({{0, 1}, {0, 0}});
  Mat e11 = from_rows({{1, 0}, {0, 0}});
  // Dual numbers: local.
  EXPECT_EQ(algebra::is_local(F, {I, e12}, 2, rng), algebra::Verdict::yes);
  // Upper triangular matrices: two simple factors.
  EXPECT_EQ(algebra::is_local(F, {I, e11, e12}, 2, rng), algebra::Verdict::no);
  // F_9 as companion matrices of t^2 + 1.
  Mat j = from_rows({{0, 1}, {2, 0}});
  EXPECT_EQ(algebra::is_local(F, {I, j}, 2, rng), algebra::Verdict::yes);
  // Diagonal F_3 x F_3.
  EXPECT_EQ(algebra::is_local(F, {I, e11}, 2, rng), algebra::Verdict::no);
  // Full matrix algebra acts irreducibly but is not commutative.
  Mat e21 = from_rows({{0, 0}, {1, 0}});
  EXPECT_EQ(algebra::is_local(F, {I, e11, e12, e21}, 2, rng), algebra::Verdict::no);
}

TEST(Algebra, CompositionFactorsAndSpin) {
  PrimeField F(5);
  std::mt19937_64 rng(2);
  Mat n = from_rows({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
  auto fac = algebra::composition_factors(F, {Mat::identity(3), n, linalg::mul(F, n, n)}, 3, rng);
  ASSERT_TRUE(fac.has_value());
  EXPECT_EQ(fac->size(), 3u);
  Mat seed = from_rows({{0, 0, 1}});
  EXPECT_EQ(algebra::spin(F, seed, {n}).rows(), 1u);
  seed = from_rows({{1, 0, 0}});
  EXPECT_EQ(algebra::spin(F, seed, {n}).rows(), 3u);
  EXPECT_EQ(algebra::minimal_polynomial(F, n), (UPoly{0, 0, 0, 1}));
}

TEST(Algebra, FittingSplitOfDiagonal) {
  PrimeField F(3);
  std::mt19937_64 rng(3);
  Mat a = from_rows({{1, 0}, {0, 2}});
  auto parts = algebra::fitting_split(F, a, Mat::identity(2), rng);
  ASSERT_EQ(parts.size(), 2u);
  Mat sum = linalg::add(F, parts[0], parts[1]);
  EXPECT_EQ(sum, Mat::identity(2));
  for (const auto& e : parts) EXPECT_EQ(linalg::mul(F, e, e), e);
  EXPECT_TRUE(linalg::mul(F, parts[0], parts[1]).is_zero());
  Mat inv = algebra::polynomial_inverse(F, a);
  EXPECT_EQ(linalg::mul(F, a, inv), Mat::identity(2));
}

TEST(EndAlgebra, FreeModules) {
  PolyRing T(PrimeField(3), {"x", "y"}, {1, 1});
  auto R = make_ring(T);
  EXPECT_EQ(EndAlgebra(free_module(R, {0})).dim(), 1u);
  EndAlgebra e2(free_module(R, {0, 0}));
  ASSERT_EQ(e2.dim(), 4u);
  // Structure constants close up: every product lies in the span.
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(e2.product(i, j).size(), 4u);
  auto idems = primitive_idempotents(e2);
  ASSERT_EQ(idems.idempotents.size(), 2u);
  EXPECT_TRUE(idems.complete());
  const auto& F = T.field();
  for (const auto& e : idems.idempotents) EXPECT_EQ(linalg::rank(F, e2.constant_part(e)), 1u);
  // S(-1) -> S is only the zero map in degree 0, and S -> S(-1) has dimension 2.
  EndAlgebra mixed(free_module(R, {0, 1}));
  EXPECT_EQ(mixed.dim(), 1u + 1u + 2u);
  EXPECT_EQ(is_local(mixed), algebra::Verdict::no);
}

TEST(EndAlgebra, CuspMaximalIdealIsLocal) {
  // m is isomorphic to the conductor-free ideal of the normalization k[t]:
  // its degree-preserving endomorphisms are multiplications by constants.
  PolyRing T(PrimeField(3), {"x", "y"}, {3, 2});
  auto R = make_ring(T, {T.parse("x^2-y^3")});
  EndAlgebra e(ideal_module(R, {T.parse("x"), T.parse("y")}));
  EXPECT_EQ(e.dim(), 1u);
  EXPECT_EQ(is_local(e), algebra::Verdict::yes);
  auto idems = primitive_idempotents(e);
  EXPECT_EQ(idems.idempotents.size(), 1u);
}

TEST(EndAlgebra, ProductOfResidueFields) {
  // End of k + k(-1) is F_3 x F_3; a generic element has minimal polynomial t^2 - t
  // up to an affine change, and the split recovers both coordinate idempotents.
  PolyRing T(PrimeField(3), {"x", "y"}, {1, 1});
  auto R = make_ring(T);
  auto k = residue_field(R);
  EndAlgebra e(direct_sum(k, k.shifted(1)));
  EXPECT_EQ(e.dim(), 2u);
  auto idems = primitive_idempotents(e, 7);
  ASSERT_EQ(idems.idempotents.size(), 2u);
  const auto& F = T.field();
  for (const auto& x : idems.idempotents) EXPECT_EQ(algebra::minimal_polynomial(F, x), (UPoly{0, 2, 1}));
}

TEST(Decompose, FreeModule) {
  PolyRing T(PrimeField(3), {"x", "y"}, {1, 1});
  auto R = make_ring(T);
  auto d = decompose(free_module(R, {0, 0}));
  ASSERT_EQ(d.classes.size(), 1u);
  EXPECT_EQ(d.classes[0].multiplicity(), 2u);
  EXPECT_TRUE(d.complete);
  EXPECT_TRUE(d.verified);
  EXPECT_EQ(d.free_rank(), 2u);
}

TEST(Decompose, PushforwardOfMaximalIdealPowers) {
  PolyRing T(PrimeField(3), {"x", "y"}, {1, 1});
  auto R = make_ring(T);
  for (int k = 1; k <= 4; ++k) {
    auto d = decompose(pushforward(power_of_max(R, k), 3));
    EXPECT_TRUE(d.complete);
    EXPECT_TRUE(d.verified);
    EXPECT_EQ(classify_by_power(R, d, 2), residue_class_oracle(k, 3)) << "k = " << k;
  }
}

TEST(Decompose, CuspPushforwards) {
  PolyRing T(PrimeField(3), {"x", "y"}, {3, 2});
  auto R = make_ring(T, {T.parse("x^2-y^3")});
  auto m = ideal_module(R, {T.parse("x"), T.parse("y")});
  for (const auto& src : {free_module(R, {0}), m}) {
    auto d = decompose(pushforward(src, 3));
    ASSERT_EQ(d.classes.size(), 1u);
    EXPECT_EQ(d.classes[0].multiplicity(), 3u);
    EXPECT_TRUE(d.verified);
    EXPECT_TRUE(is_isomorphic(d.classes[0].representative, m).isomorphic);
  }
}

TEST(Decompose, KrullSchmidtDoubling) {
  PolyRing T(PrimeField(3), {"x", "y"}, {1, 1});
  auto R = make_ring(T);
  auto fm = pushforward(power_of_max(R, 2), 3);
  auto single = decompose(fm);
  auto twice = decompose(direct_sum(fm, fm));
  ASSERT_EQ(single.classes.size(), twice.classes.size());
  std::multiset<std::size_t> a, b;
  for (const auto& c : single.classes) a.insert(2 * c.multiplicity());
  for (const auto& c : twice.classes) b.insert(c.multiplicity());
  EXPECT_EQ(a, b);
  EXPECT_TRUE(twice.verified);
}

TEST(Decompose, SplitMapsRecompose) {
  PolyRing T(PrimeField(3), {"x", "y", "z"}, {1, 1, 1});
  auto R = make_ring(T, {T.parse("x^3-y^2*z")});
  auto fr = pushforward(free_module(R, {0}), 3);
  auto d = decompose(fr);
  ASSERT_TRUE(d.verified);
  EXPECT_EQ(d.summands.size(), 9u);
  PolyMatrix total;
  for (const auto& s : d.summands) {
    EXPECT_TRUE(is_homomorphism(s.module, fr, s.inclusion));
    EXPECT_TRUE(is_homomorphism(fr, s.module, s.projection));
    total = matrix_sum(T, total, matrix_product(T, s.projection, s.inclusion));
  }
  EXPECT_TRUE(maps_equal(fr, total, identity_matrix(fr.num_generators())));
}

TEST(Isomorphism, ShiftsAndNegatives) {
  PolyRing T(PrimeField(3), {"x", "y"}, {1, 1});
  auto R = make_ring(T);
  auto s = free_module(R, {0});
  auto r = is_isomorphic(free_module(R, {2}), s);
  EXPECT_TRUE(r.isomorphic);
  EXPECT_EQ(r.shift, RationalDegree(2));
  EXPECT_TRUE(is_isomorphic(s, s).isomorphic);
  EXPECT_FALSE(is_isomorphic(s, power_of_max(R, 1)).isomorphic);
  auto m = power_of_max(R, 1);
  auto n = m.shifted(RationalDegree(1, 3));
  auto iso = is_isomorphic(m, n);
  EXPECT_TRUE(iso.isomorphic);
  EXPECT_EQ(iso.shift, RationalDegree(-1, 3));
  EXPECT_TRUE(is_homomorphism(m, n.shifted(iso.shift), iso.map));
}

TEST(Isomorphism, OmegaOneCommutesWithPushforward) {
  // Splitting omega^1 here goes through the dual-submodule branch of the Meataxe.
  PolyRing T(PrimeField(3), {"x", "y", "z"}, {1, 1, 1});
  auto R = make_ring(T, {T.parse("x^3-y^2*z")});
  auto m = quotient_ring_module(R, {T.parse("x*y-y^2+y*z")});
  auto a = minimal_presentation(pushforward(para_canonical(m, 1), 3));
  auto b = minimal_presentation(para_canonical(pushforward(m, 3), 1));
  EXPECT_TRUE(decompose(b).verified);
  auto iso = is_isomorphic(a, b);
  ASSERT_TRUE(iso.isomorphic);
  EXPECT_TRUE(is_homomorphism(a, b.shifted(iso.shift), iso.map));
}

TEST(Isomorphism, EqualHilbertSeriesNotIsomorphic) {
  // S/(x) + S/(y) and S/(x) + S/(x) share a Hilbert series.
  PolyRing T(PrimeField(3), {"x", "y"}, {1, 1});
  auto R = make_ring(T);
  auto a = direct_sum(quotient_ring_module(R, {T.parse("x")}), quotient_ring_module(R, {T.parse("y")}));
  auto b = direct_sum(quotient_ring_module(R, {T.parse("x")}), quotient_ring_module(R, {T.parse("x")}));
  ASSERT_EQ(a.hilbert_series(), b.hilbert_series());
  auto r = is_isomorphic(a, b);
  EXPECT_TRUE(r.decided);
  EXPECT_FALSE(r.isomorphic);
}

TEST(DirectSummand, Examples) {
  PolyRing T(PrimeField(3), {"x", "y"}, {1, 1});
  auto R = make_ring(T);
  auto s = free_module(R, {0});
  auto fs = pushforward(s, 3);
  auto r = is_direct_summand(s, fs);
  ASSERT_TRUE(r.is_summand);
  GradedModule ss = s.shifted(r.shift);
  EXPECT_TRUE(is_homomorphism(ss, fs, r.phi));
  EXPECT_TRUE(is_homomorphism(fs, ss, r.psi));
  EXPECT_TRUE(maps_equal(ss, matrix_product(T, r.phi, r.psi), identity_matrix(1)));
  EXPECT_FALSE(is_direct_summand(residue_field(R), s).is_summand);
  EXPECT_FALSE(is_direct_summand(s, power_of_max(R, 1)).is_summand);
}

TEST(DirectSummand, SurfaceAtFive) {
  PolyRing T(PrimeField(5), {"x", "y", "z"}, {1, 1, 1});
  auto R = make_ring(T, {T.parse("x^3-y^2*z")});
  auto q = ideal_module(R, {T.parse("x^2"), T.parse("y")});
  auto fr = pushforward(free_module(R, {0}), 5);
  auto r = is_direct_summand(q, fr);
  ASSERT_TRUE(r.is_summand);
  GradedModule qs = q.shifted(r.shift);
  EXPECT_TRUE(is_homomorphism(qs, fr, r.phi));
  EXPECT_TRUE(is_homomorphism(fr, qs, r.psi));
  EXPECT_TRUE(maps_equal(qs, matrix_product(T, r.phi, r.psi), identity_matrix(2)));
  EXPECT_TRUE(is_fsplit(q, 5).is_summand);
}

TEST(DirectSummand, MultiplicityConsistency) {
  // Splitting off one copy of m from F_*m^2 leaves m^2 + S^6.
  PolyRing T(PrimeField(3), {"x", "y"}, {1, 1});
  auto R = make_ring(T);
  auto fm2 = pushforward(power_of_max(R, 2), 3);
  auto m = power_of_max(R, 1);
  auto r = is_direct_summand(m, fm2);
  ASSERT_TRUE(r.is_summand);
  // The complement is the cokernel of phi.
  PolyMatrix rels = minimal_presentation(fm2).relations();
  auto change = minimal_presentation_with_maps(fm2);
  PolyMatrix phi = matrix_product(T, r.phi, change.to_new);
  for (auto& row : phi) rels.push_back(row);
  GradedModule rest(R, change.module.generator_degrees(), rels);
  auto d = decompose(rest);
  EXPECT_EQ(d.free_rank(), 6u);
  EXPECT_EQ(d.summands.size(), 8u);
  auto m_in_rest = is_direct_summand(m, rest);
  EXPECT_TRUE(m_in_rest.is_summand);
}

TEST(FSplit, Examples) {
  {
    PolyRing T(PrimeField(3), {"x", "y"}, {1, 1});
    auto R = make_ring(T);
    EXPECT_TRUE(is_fsplit(free_module(R, {0}), 3).is_summand);
  }
  {
    PolyRing T(PrimeField(3), {"x", "y"}, {3, 2});
    auto R = make_ring(T, {T.parse("x^2-y^3")});
    EXPECT_FALSE(is_fsplit(free_module(R, {0}), 3).is_summand);
    EXPECT_TRUE(is_fsplit(ideal_module(R, {T.parse("x"), T.parse("y")}), 3).is_summand);
  }
  {
    PolyRing T(PrimeField(5), {"x", "y"}, {4, 3});
    auto R = make_ring(T, {T.parse("x^3-y^4")});
    auto m2 = ideal_module(R, {T.parse("x^2"), T.parse("x*y"), T.parse("y^2")});
    EXPECT_TRUE(is_fsplit(m2, 5).is_summand);
  }
}

TEST(Fedder, Examples) {
  {
    PolyRing T(PrimeField(3), {"x", "y"}, {3, 2});
    EXPECT_FALSE(fedder_check(GradedRing(T, {T.parse("x^2-y^3")})));
    EXPECT_TRUE(fedder_check(GradedRing(T, {})));
    EXPECT_THROW(fedder_check(GradedRing(T, {T.parse("x^2"), T.parse("y^3")})), std::invalid_argument);
  }
  PolyRing T(PrimeField(3), {"x", "y", "z"}, {1, 1, 1});
  EXPECT_FALSE(fedder_check(GradedRing(T, {T.parse("x^3-y^2*z")})));
  // The A1 singularity is F-pure, and then R is a summand of F_*R.
  auto a1 = make_ring(T, {T.parse("x^2-y*z")});
  EXPECT_TRUE(fedder_check(*a1));
  EXPECT_TRUE(is_fsplit(free_module(a1, {0}), 3).is_summand);
}

TEST(FNet, Examples) {
  {
    PolyRing T(PrimeField(3), {"x", "y"}, {1, 1});
    auto net = net_explore(free_module(make_ring(T), {0}), 10, 3);
    EXPECT_TRUE(net.closed);
    EXPECT_EQ(net.classes.size(), 1u);
    ASSERT_EQ(net.transitions[0].size(), 1u);
    EXPECT_EQ(net.transitions[0][0].second, 9u);
  }
  {
    PolyRing T(PrimeField(3), {"x", "y"}, {3, 2});
    auto R = make_ring(T, {T.parse("x^2-y^3")});
    auto net = net_explore(free_module(R, {0}), 10, 3, 1, 2);
    EXPECT_TRUE(net.closed);
    ASSERT_EQ(net.classes.size(), 2u);
    EXPECT_TRUE(is_isomorphic(net.classes[1], ideal_module(R, {T.parse("x"), T.parse("y")})).isomorphic);
  }
  {
    PolyRing T(PrimeField(5), {"x", "y"}, {4, 3});
    auto R = make_ring(T, {T.parse("x^3-y^4")});
    auto net = net_explore(free_module(R, {0}), 10, 5);
    EXPECT_TRUE(net.closed);
    EXPECT_EQ(net.classes.size(), 3u);
    auto budget = net_explore(free_module(R, {0}), 1, 5);
    EXPECT_FALSE(budget.closed);
    EXPECT_EQ(budget.steps, 1);
  }
}

TEST(McmSearch, Routes) {
  {
    PolyRing T(PrimeField(3), {"x", "y", "z"}, {1, 1, 1});
    auto r = mcm_search(make_ring(T), 5);
    EXPECT_TRUE(r.found);
    EXPECT_EQ(r.route, "regular");
    EXPECT_EQ(r.certificate->depth, 3);
  }
  {
    PolyRing T(PrimeField(3), {"x", "y", "z", "u"}, {1, 1, 1, 1});
    auto R = make_ring(T, {T.parse("x*z"), T.parse("x*u"), T.parse("y*z"), T.parse("y*u")});
    auto r = mcm_search(R, 5);
    ASSERT_TRUE(r.found);
    EXPECT_EQ(r.route, "low-dimension");
    EXPECT_EQ(depth(r.certificate->module), 2);
  }
  {
    PolyRing T(PrimeField(3), {"x", "y", "z", "u", "v"}, {1, 1, 1, 1, 1});
    auto R = make_ring(T, {T.parse("x*u"), T.parse("x*v"), T.parse("y*u"), T.parse("y*v")});
    auto r = mcm_search(R, 4);
    ASSERT_TRUE(r.found);
    EXPECT_EQ(r.route, "net");
    EXPECT_EQ(depth(r.certificate->module), 3);
  }
}

TEST(HInvariant, SplitComplementHasZeroH) {
  // Q = second syzygy of k over F_3[x,y,z] has h(Q) = 1 and F_*Q = Q + M.
  PolyRing T(PrimeField(3), {"x", "y", "z"}, {1, 1, 1});
  auto R = make_ring(T);
  GradedModule q(R, {2, 2, 2}, {{T.parse("z"), T.parse("-y"), T.parse("x")}});
  auto fq = pushforward(q, 3);
  EXPECT_EQ(h_invariant(fq), h_invariant(q));
  auto d = decompose(fq);
  std::int64_t rest = 0;
  bool seen = false;
  for (const auto& s : d.summands) {
    if (!seen && is_isomorphic(s.module, q).isomorphic) {
      seen = true;
      continue;
    }
    rest += h_invariant(s.module);
  }
  EXPECT_TRUE(seen);
  EXPECT_EQ(rest, 0);
}
