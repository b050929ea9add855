#include <gtest/gtest.h>

#include "fpush/canonical.hpp"
#include "fpush/degreewise.hpp"

using namespace fpush;

namespace {

RingPtr two_planes() {
  PolyRing T(PrimeField(3), {"x", "y", "z", "u"}, {1, 1, 1, 1});
  return make_ring(T, {T.parse("x*z"), T.parse("x*u"), T.parse("y*z"), T.parse("y*u")});
}

}  // namespace

TEST(ParaCanonical, RegularRing) {
  PolyRing T(PrimeField(3), {"x", "y", "z"}, {1, 2, 3});
  auto R = make_ring(T);
  auto S = free_module(R, {0});
  EXPECT_EQ(para_canonical(S, 0).hilbert_series(), S.shifted(6).hilbert_series());
  for (int i = 1; i <= 3; ++i) EXPECT_TRUE(para_canonical(S, i).hilbert_series().is_zero());
  EXPECT_TRUE(para_canonical(S, 4).hilbert_series().is_zero());
  EXPECT_TRUE(para_canonical(S, -1).hilbert_series().is_zero());
}

TEST(ParaCanonical, Hypersurface) {
  PolyRing T(PrimeField(3), {"x", "y"}, {1, 1});
  auto R = make_ring(T, {T.parse("x")});
  auto w = para_canonical(free_module(R, {0}), 0);
  EXPECT_EQ(w.hilbert_series(), free_module(R, {1}).hilbert_series());
}

TEST(ParaCanonical, TopModuleIsHomIntoCanonical) {
  // omega^0(M)_e has the dimension of Hom_0(M, omega^0(R) shifted) componentwise.
  PolyRing T(PrimeField(3), {"x", "y"}, {3, 2});
  auto R = make_ring(T, {T.parse("x^2-y^3")});
  auto m = ideal_module(R, {T.parse("x"), T.parse("y")});
  auto wr = para_canonical(free_module(R, {0}), 0);
  auto wm = para_canonical(m, 0);
  auto coeffs = wm.hilbert_series().expand(20);
  for (int e = -10; e <= 20; ++e) {
    std::int64_t expected = coeffs.count(e) ? coeffs[e] : 0;
    EXPECT_EQ(std::int64_t(HomSpace(m, wr, -e).dim()), expected) << e;
  }
}

TEST(ParaCanonical, NonCohenMacaulayWitness) {
  auto R = two_planes();
  auto S = free_module(R, {0});
  EXPECT_FALSE(para_canonical(S, 1).hilbert_series().is_zero());
  EXPECT_TRUE(para_canonical(S, 2).hilbert_series().is_zero());
  auto cert = mcm_from_module(S);
  EXPECT_EQ(cert.depth, 2);
}

TEST(HInvariant, Examples) {
  PolyRing T(PrimeField(3), {"x", "y", "z"}, {1, 1, 1});
  auto R = make_ring(T);
  EXPECT_EQ(h_invariant(free_module(R, {0})), 0);
  auto m = ideal_module(R, {T.parse("x"), T.parse("y"), T.parse("z")});
  EXPECT_EQ(h_invariant(m), 0);
  // omega^1 of the maximal ideal vanishes; omega^2 of it is k
  EXPECT_TRUE(para_canonical(m, 1).hilbert_series().is_zero());
  EXPECT_EQ(para_canonical(m, 2).hilbert_series().length(), 1);
  auto cert = mcm_from_module(m);
  EXPECT_EQ(cert.depth, 3);
}

TEST(HInvariant, SecondSyzygyOfResidueField) {
  // M = Omega^2(k) over F_3[x,y,z]: H^2_m(M) = k, so omega^1(M) = k and h(M) = 1.
  PolyRing T(PrimeField(3), {"x", "y", "z"}, {1, 1, 1});
  auto R = make_ring(T);
  GradedModule M(R, {2, 2, 2}, {{T.parse("z"), T.parse("-y"), T.parse("x")}});
  EXPECT_EQ(depth(M), 2);
  EXPECT_EQ(para_canonical(M, 1).hilbert_series().length(), 1);
  EXPECT_EQ(h_invariant(M), 1);
  EXPECT_THROW(mcm_from_module(M), PreconditionError);
  EXPECT_EQ(h_invariant(direct_sum(M, M)), 2);
}

TEST(HInvariant, CohenMacaulayQuotientIdeal) {
  PolyRing T(PrimeField(3), {"x", "y", "z"}, {1, 1, 1});
  auto R = make_ring(T);
  auto I = ideal_module(R, {T.parse("x^2"), T.parse("x*y"), T.parse("y^2")});
  EXPECT_EQ(depth(I), 2);
  EXPECT_EQ(h_invariant(I), 0);
  EXPECT_EQ(mcm_from_module(I).depth, 3);
}

TEST(McmFromModule, Preconditions) {
  PolyRing T(PrimeField(3), {"x", "y", "z"}, {1, 1, 1});
  auto R = make_ring(T);
  EXPECT_THROW(mcm_from_module(residue_field(R)), PreconditionError);
}
