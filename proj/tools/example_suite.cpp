#include <random>
#include <set>

#include "fpush/frobenius.hpp"
#include "fpush/homology.hpp"
#include "run.hpp"

namespace fpush::cli {

namespace {

struct Named {
  std::string name;
  GradedModule module;
};

json class_counts(const Decomposition& d, const std::vector<Named>& names, std::uint64_t seed) {
  json out = json::object();
  for (const auto& c : d.classes) {
    std::string label = "unnamed " + c.representative.hilbert_series().str();
    for (const auto& n : names)
      if (is_isomorphic(c.representative, n.module, seed).isomorphic) {
        label = n.name;
        break;
      }
    out[label] = out.contains(label) ? out[label].get<std::size_t>() + c.multiplicity() : c.multiplicity();
  }
  return out;
}

class Suite {
 public:
  explicit Suite(Report& r) : r_(r) {}

  void check(const std::string& item, const json& expected, const json& computed, bool pass) {
    r_.results["items"].push_back({{"item", item}, {"expected", expected}, {"computed", computed}, {"pass", pass}});
    r_.text.push_back(std::string(pass ? "PASS " : "FAIL ") + item + ": " + computed.dump());
    if (!pass) r_.discrepancy(item, expected, computed);
    ++total_;
    passed_ += pass;
  }
  void check_eq(const std::string& item, const json& expected, const json& computed) {
    check(item, expected, computed, nlohmann::json::parse(expected.dump()) == nlohmann::json::parse(computed.dump()));
  }
  void finish() {
    r_.results["passed"] = passed_;
    r_.results["total"] = total_;
  }

 private:
  Report& r_;
  int total_ = 0, passed_ = 0;
};

GradedModule ideal(const RingPtr& R, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> ps;
  for (const char* g : gens) ps.push_back(R->ambient().parse(g));
  return ideal_module(R, ps);
}

void regular(Suite& s, std::uint64_t seed) {
  PolyRing T(PrimeField(3), {"x", "y"}, {1, 1});
  auto R = make_ring(T);
  auto S = free_module(R, {0});
  auto m = ideal(R, {"x", "y"});
  auto m2 = ideal(R, {"x^2", "x*y", "y^2"});
  auto m3 = ideal(R, {"x^3", "x^2*y", "x*y^2", "y^3"});
  auto m4 = ideal(R, {"x^4", "x^3*y", "x^2*y^2", "x*y^3", "y^4"});
  std::vector<Named> names{{"S", S}, {"m", m}, {"m^2", m2}};
  s.check_eq("regular d=2 F_*S", {{"S", 9}}, class_counts(decompose(pushforward(S, 3), seed), names, seed));
  s.check_eq("regular d=2 F_*m", {{"m", 1}, {"S", 8}}, class_counts(decompose(pushforward(m, 3), seed), names, seed));
  s.check_eq("regular d=2 F_*m^2", {{"m", 3}, {"S", 6}}, class_counts(decompose(pushforward(m2, 3), seed), names, seed));
  s.check_eq("regular d=2 F_*m^3", {{"m", 6}, {"S", 3}}, class_counts(decompose(pushforward(m3, 3), seed), names, seed));
  auto d4 = decompose(pushforward(m4, 3), seed);
  json c4 = class_counts(d4, names, seed);
  c4["free_rank"] = d4.free_rank();
  s.check("regular d=2 F_*m^4 free rank", "free rank >= 4", c4, d4.free_rank() >= 4);

  PolyRing T3(PrimeField(3), {"x", "y", "z"}, {1, 1, 1});
  auto R3 = make_ring(T3);
  auto S3 = free_module(R3, {0});
  auto m3d = ideal(R3, {"x", "y", "z"});
  s.check_eq("regular d=3 F_*m", {{"m", 1}, {"S", 26}},
             class_counts(decompose(pushforward(m3d, 3), seed), {{"S", S3}, {"m", m3d}}, seed));
}

void curves(Suite& s, std::uint64_t seed) {
  {
    PolyRing T(PrimeField(3), {"x", "y"}, {3, 2});
    auto R = make_ring(T, {T.parse("x^2-y^3")});
    auto Rm = free_module(R, {0});
    auto m = ideal(R, {"x", "y"});
    std::vector<Named> names{{"R", Rm}, {"m", m}};
    s.check_eq("cusp F_*R", {{"m", 3}}, class_counts(decompose(pushforward(Rm, 3), seed), names, seed));
    s.check_eq("cusp F_*m", {{"m", 3}}, class_counts(decompose(pushforward(m, 3), seed), names, seed));
    auto net = net_explore(Rm, 10, 3, seed);
    json members = json::array();
    for (const auto& c : net.classes) members.push_back(class_counts(decompose(c, seed), names, seed).begin().key());
    s.check("cusp net", json::array({"R", "m"}), members, net.closed && members == json::array({"R", "m"}));
    s.check_eq("cusp fsplit(m)", true, is_fsplit(m, 3, seed).is_summand);
    s.check_eq("cusp fsplit(R)", false, is_fsplit(Rm, 3, seed).is_summand);
    s.check_eq("cusp fedder", false, fedder_check(*R));
  }
  {
    PolyRing T(PrimeField(5), {"x", "y"}, {4, 3});
    auto R = make_ring(T, {T.parse("x^3-y^4")});
    auto Rm = free_module(R, {0});
    auto I = ideal(R, {"x", "y^2"});
    auto m2 = ideal(R, {"x^2", "x*y", "y^2"});
    std::vector<Named> names{{"R", Rm}, {"(x,y^2)", I}, {"m^2", m2}};
    s.check_eq("x3=y4 F_*R", {{"(x,y^2)", 1}, {"m^2", 4}},
               class_counts(decompose(pushforward(Rm, 5), seed), names, seed));
    s.check_eq("x3=y4 F_*m^2", {{"m^2", 5}}, class_counts(decompose(pushforward(m2, 5), seed), names, seed));
    s.check_eq("x3=y4 F_*(x,y^2)", {{"m^2", 5}}, class_counts(decompose(pushforward(I, 5), seed), names, seed));
    auto net = net_explore(Rm, 10, 5, seed);
    s.check("x3=y4 net size", 3, net.classes.size(), net.closed && net.classes.size() == 3);
    s.check_eq("x3=y4 fsplit(m^2)", true, is_fsplit(m2, 5, seed).is_summand);
  }
}

void surfaces(Suite& s, std::uint64_t seed) {
  {
    PolyRing T(PrimeField(3), {"x", "y", "z"}, {1, 1, 1});
    auto R = make_ring(T, {T.parse("x^3-y^2*z")});
    s.check_eq("x3=y2z p=3 fedder", false, fedder_check(*R));
    std::vector<Named> names{{"(x,y)^2", ideal(R, {"x^2", "x*y", "y^2"})},
                             {"(x^2,y)", ideal(R, {"x^2", "y"})},
                             {"(x^2,yz)", ideal(R, {"x^2", "y*z"})}};
    s.check_eq("x3=y2z p=3 F_*R", {{"(x,y)^2", 3}, {"(x^2,y)", 3}, {"(x^2,yz)", 3}},
               class_counts(decompose(pushforward(free_module(R, {0}), 3), seed), names, seed));
  }
  {
    PolyRing T(PrimeField(5), {"x", "y", "z"}, {1, 1, 1});
    auto R = make_ring(T, {T.parse("x^3-y^2*z")});
    auto q = ideal(R, {"x^2", "y"});
    s.check_eq("x3=y2z p=5 (x^2,y) summand of F_*R", true,
               is_direct_summand(q, pushforward(free_module(R, {0}), 5), seed).is_summand);
    s.check_eq("x3=y2z p=5 fsplit(x^2,y)", true, is_fsplit(q, 5, seed).is_summand);
  }
  {
    PolyRing T(PrimeField(7), {"x", "y", "z"}, {9, 2, 2});
    auto R = make_ring(T, {T.parse("x^2-y^4*z^5")});
    auto rp = ideal(R, {"y*z^2", "x"});
    s.check_eq("x2=y4z5 p=7 depth R'", 2, depth(rp));
    s.check_eq("x2=y4z5 p=7 fsplit R'", true, is_fsplit(rp, 7, seed).is_summand);
  }
}

void persymmetry(Suite& s, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  int bad = 0, total = 0;
  for (std::uint64_t q : {3u, 5u, 9u}) {
    PolyRing T(PrimeField(q == 5 ? 5 : 3), {"x", "y"}, {1, 1});
    std::uniform_int_distribution<int> e(0, 10);
    std::uniform_int_distribution<Coeff> c(1, T.characteristic() - 1);
    for (int k = 0; k < 30; ++k) {
      std::vector<Term> terms;
      std::set<Monomial> seen;
      for (int t = 0; t < 3; ++t) {
        Monomial m;
        m[0] = std::uint16_t(e(rng));
        m[1] = std::uint16_t(e(rng));
        if (seen.insert(m).second) terms.push_back({m, c(rng)});
      }
      ++total;
      bad += !is_persymmetric(mult_matrix(T, Polynomial(terms), q));
    }
  }
  s.check_eq("persymmetry sweep", total, total - bad);
}

}  // namespace

Report example_suite(const Options& opts) {
  Report r;
  r.results["items"] = json::array();
  Suite s(r);
  regular(s, opts.seed);
  curves(s, opts.seed);
  surfaces(s, opts.seed);
  persymmetry(s, opts.seed);
  s.finish();
  return r;
}

}  // namespace fpush::cli
