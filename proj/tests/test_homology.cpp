#include <gtest/gtest.h>

#include "fpush/homology.hpp"

using namespace fpush;

namespace {

struct Fixture3 {
  PolyRing T{PrimeField(3), {"x", "y", "z"}, {1, 1, 1}};
  RingPtr R = make_ring(T);
  Polynomial p(const char* s) const { return T.parse(s); }
};

RingPtr two_planes() {
  PolyRing T(PrimeField(3), {"x", "y", "z", "u"}, {1, 1, 1, 1});
  return make_ring(T, {T.parse("x*z"), T.parse("x*u"), T.parse("y*z"), T.parse("y*u")});
}

// Alternating sum of twisted free Hilbert series.
HilbertSeries euler_series(const FreeResolution& res, const std::vector<int>& weights) {
  std::map<RationalDegree, std::int64_t> num;
  for (std::size_t i = 0; i < res.twists.size(); ++i)
    for (const auto& d : res.twists[i]) num[d] += (i % 2 ? -1 : 1);
  return HilbertSeries(weights, num);
}

void expect_complex(const FreeResolution& res, const PolyRing& T) {
  for (std::size_t i = 0; i + 1 < res.maps.size(); ++i) {
    auto prod = matrix_product(T, res.maps[i + 1], res.maps[i]);
    for (const auto& row : prod)
      for (const auto& e : row) EXPECT_TRUE(e.is_zero());
  }
  for (const auto& mat : res.maps)
    for (const auto& row : mat)
      for (const auto& e : row) EXPECT_TRUE(e.is_zero() || e.constant_term() == 0);
}

}  // namespace

TEST(Resolution, KoszulComplex) {
  Fixture3 f;
  auto k = residue_field(f.R);
  auto res = free_resolution(k);
  EXPECT_EQ(res.ranks(), (std::vector<std::size_t>{1, 3, 3, 1}));
  expect_complex(res, f.T);
  EXPECT_EQ(euler_series(res, f.T.weights()), k.hilbert_series());
}

TEST(Resolution, FreeAndMaximalIdeal) {
  Fixture3 f;
  auto res = free_resolution(free_module(f.R, {0, 2}));
  EXPECT_EQ(res.length(), 0u);
  auto m = ideal_module(f.R, {f.p("x"), f.p("y"), f.p("z")});
  auto rm = free_resolution(m);
  EXPECT_EQ(rm.ranks(), (std::vector<std::size_t>{3, 3, 1}));
  expect_complex(rm, f.T);
  EXPECT_EQ(euler_series(rm, f.T.weights()), m.hilbert_series());
}

TEST(Resolution, TruncationFlag) {
  Fixture3 f;
  auto res = free_resolution(residue_field(f.R), 1);
  EXPECT_TRUE(res.truncated);
  EXPECT_EQ(res.ranks(), (std::vector<std::size_t>{1, 3}));
}

TEST(Depth, AuslanderBuchsbaumExamples) {
  Fixture3 f;
  EXPECT_EQ(depth(free_module(f.R, {0})), 3);
  EXPECT_EQ(depth(ideal_module(f.R, {f.p("x"), f.p("y"), f.p("z")})), 1);
  EXPECT_EQ(depth(residue_field(f.R)), 0);
  EXPECT_EQ(depth(zero_module(f.R)), kInfiniteDepth);
  auto R = two_planes();
  auto ring_mod = free_module(R, {0});
  EXPECT_EQ(projective_dimension(ring_mod), 3);
  EXPECT_EQ(depth(ring_mod), 1);
}

TEST(Dimension, Examples) {
  Fixture3 f;
  EXPECT_EQ(dimension(free_module(f.R, {0})), 3);
  EXPECT_EQ(dimension(residue_field(f.R)), 0);
  EXPECT_EQ(two_planes()->dimension(), 2);
  EXPECT_THROW(dimension(zero_module(f.R)), std::domain_error);
}

TEST(Ext, DualizedResolutions) {
  PolyRing T(PrimeField(3), {"x", "y"}, {1, 1});
  auto R = make_ring(T);
  auto e0 = ext_module(0, free_module(R, {0}));
  EXPECT_EQ(e0.hilbert_series(), free_module(R, {0}).hilbert_series());
  // Ext^1(T/x, T): cokernel of T -> T(1) by x, i.e. (T/x)(1) with generator in degree -1.
  auto e1 = ext_module(1, quotient_ring_module(R, {T.parse("x")}));
  EXPECT_EQ(e1.hilbert_series(), quotient_ring_module(R, {T.parse("x")}).shifted(-1).hilbert_series());
  EXPECT_TRUE(ext_module(0, quotient_ring_module(R, {T.parse("x")})).hilbert_series().is_zero());

  Fixture3 f;
  auto k = residue_field(f.R);
  for (int i = 0; i < 3; ++i) EXPECT_TRUE(ext_module(i, k).hilbert_series().is_zero()) << i;
  auto e3 = ext_module(3, k);
  EXPECT_EQ(e3.hilbert_series(), k.shifted(-3).hilbert_series());
  // twist moves the generator down
  EXPECT_EQ(ext_module(3, k, RationalDegree(-3)).hilbert_series(), k.hilbert_series());
}

TEST(Ext, DimensionBound) {
  Fixture3 f;
  auto m = quotient_ring_module(f.R, {f.p("x^2"), f.p("x*y"), f.p("x*z")});
  for (int i = 0; i <= 3; ++i) {
    auto e = ext_module(i, m);
    if (!e.hilbert_series().is_zero()) EXPECT_LE(dimension(e), 3 - i) << i;
  }
}

TEST(Lambda0, ColonAndDualityAgree) {
  Fixture3 f;
  auto S = free_module(f.R, {0});
  auto k = residue_field(f.R);
  EXPECT_EQ(lambda0(S), 0);
  EXPECT_EQ(lambda0(direct_sum(S, k)), 1);
  auto m = quotient_ring_module(f.R, {f.p("x^2"), f.p("x*y"), f.p("x*z")});
  EXPECT_EQ(lambda0(m), 1);
  EXPECT_EQ(lambda0_by_duality(m), 1);
  auto fl = quotient_ring_module(f.R, {f.p("x^2"), f.p("y^2"), f.p("z^2")});
  EXPECT_EQ(lambda0(fl), 8);
  EXPECT_EQ(lambda0_by_duality(fl), 8);
  EXPECT_EQ(lambda0(direct_sum(m, fl)), lambda0(m) + lambda0(fl));
}

TEST(Unmixed, Examples) {
  Fixture3 f;
  auto S = free_module(f.R, {0});
  auto u = unmixed_quotient(S);
  EXPECT_TRUE(u.kernel.hilbert_series().is_zero());
  auto mixed = unmixed_quotient(direct_sum(S, residue_field(f.R)));
  EXPECT_EQ(mixed.kernel.hilbert_series(), residue_field(f.R).hilbert_series());
  EXPECT_EQ(mixed.quotient.hilbert_series(), S.hilbert_series());
  // embedded line inside a plane: (x) ∩ (x^2, y) has small part
  auto emb = quotient_ring_module(f.R, {f.p("x^2"), f.p("x*y")});
  auto es = unmixed_quotient(emb);
  EXPECT_EQ(es.quotient.hilbert_series(), quotient_ring_module(f.R, {f.p("x")}).hilbert_series());
  EXPECT_TRUE(unmixed_quotient(es.quotient).kernel.hilbert_series().is_zero());
  auto R = two_planes();
  EXPECT_TRUE(unmixed_quotient(free_module(R, {0})).kernel.hilbert_series().is_zero());
}
