#include "fpush/homology.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace fpush {

std::vector<std::size_t> FreeResolution::ranks() const {
  std::vector<std::size_t> r;
  for (const auto& t : twists) r.push_back(t.size());
  return r;
}

std::string FreeResolution::betti_table() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < twists.size(); ++i) {
    std::map<RationalDegree, int> count;
    for (const auto& d : twists[i]) ++count[d];
    os << i << ":";
    for (auto& [d, c] : count) os << " " << d.str() << "^" << c;
    os << "\n";
  }
  if (truncated) os << "(truncated)\n";
  return os.str();
}

FreeResolution free_resolution(const GradedModule& m, int max_length) {
  FreeResolution res;
  GradedModule mm = minimal_presentation(m);
  if (mm.num_generators() == 0) return res;
  const auto& T = mm.ring().ambient();
  FreeModule cur = mm.free_module();
  res.twists.push_back(cur.degrees());
  std::vector<ModVec> rows = minimal_generators(cur, mm.ambient_relations());
  int step = 0;
  while (!rows.empty()) {
    if (max_length >= 0 && step >= max_length) {
      res.truncated = true;
      break;
    }
    PolyMatrix mat;
    std::vector<RationalDegree> degs;
    for (const auto& r : rows) {
      mat.push_back(cur.to_row(r));
      degs.push_back(cur.degree(r));
    }
    res.maps.push_back(std::move(mat));
    res.twists.push_back(degs);
    FreeModule next;
    auto syz = syzygies(cur, rows, degs, &next);
    cur = next;
    rows = std::move(syz);
    ++step;
  }
  (void)T;
  return res;
}

int projective_dimension(const GradedModule& m) {
  auto res = free_resolution(m);
  if (res.twists.empty()) return -1;
  return int(res.length());
}

int depth(const GradedModule& m) {
  int pd = projective_dimension(m);
  if (pd < 0) return kInfiniteDepth;
  return int(m.ring().nvars()) - pd;
}

int dimension(const GradedModule& m) {
  auto hs = m.hilbert_series();
  if (hs.is_zero()) throw std::domain_error("dimension of the zero module");
  return hs.dimension();
}

GradedModule submodule_presentation(const RingPtr& ring, const FreeModule& free, const std::vector<ModVec>& sub,
                                    const std::vector<ModVec>& modulo) {
  std::vector<ModVec> gens;
  std::vector<RationalDegree> degs;
  for (const auto& v : sub)
    if (!v.empty()) {
      gens.push_back(v);
      degs.push_back(free.degree(v));
    }
  if (gens.empty()) return zero_module(ring);
  std::vector<ModVec> all = gens;
  std::vector<RationalDegree> all_degs = degs;
  for (const auto& v : modulo)
    if (!v.empty()) {
      all.push_back(v);
      all_degs.push_back(free.degree(v));
    }
  FreeModule sf;
  auto syz = syzygies(free, all, all_degs, &sf);
  PolyMatrix rel;
  for (const auto& s : syz) {
    auto row = sf.to_row(s);
    row.resize(gens.size());
    bool nz = false;
    for (const auto& e : row) nz = nz || !e.is_zero();
    if (nz) rel.push_back(std::move(row));
  }
  return minimal_presentation(GradedModule(ring, std::move(degs), std::move(rel)));
}

GradedModule ext_module(int i, const GradedModule& m, RationalDegree twist) {
  if (i < 0) throw std::invalid_argument("Ext index must be nonnegative");
  auto res = free_resolution(m);
  if (std::size_t(i) >= res.twists.size()) return zero_module(m.ring_ptr());
  const auto& T = m.ring().ambient();
  auto dual_degrees = [&](std::size_t k) {
    std::vector<RationalDegree> d;
    for (const auto& a : res.twists[k]) d.push_back(-a - twist);
    return d;
  };
  const std::size_t k = std::size_t(i);
  FreeModule fi(T, dual_degrees(k));
  // Columns of maps[k] give the dual differential F_k* -> F_{k+1}*.
  auto dual_rows = [&](const PolyMatrix& mat, const FreeModule& target, std::size_t ncols) {
    std::vector<ModVec> out;
    for (std::size_t j = 0; j < ncols; ++j) {
      std::vector<Polynomial> row(mat.size());
      for (std::size_t r = 0; r < mat.size(); ++r) row[r] = mat[r][j];
      out.push_back(target.from_row(row));
    }
    return out;
  };
  std::vector<ModVec> kernel;
  if (k + 1 >= res.twists.size()) {
    for (std::size_t j = 0; j < fi.rank(); ++j) kernel.push_back(fi.basis_vector(j));
  } else {
    FreeModule fnext(T, dual_degrees(k + 1));
    auto rows = dual_rows(res.maps[k], fnext, fi.rank());
    FreeModule sf;
    kernel = syzygies(fnext, rows, fi.degrees(), &sf);
    for (auto& v : kernel) v = fi.normalize(v);
  }
  std::vector<ModVec> image;
  if (k > 0) image = dual_rows(res.maps[k - 1], fi, res.twists[k - 1].size());
  return submodule_presentation(m.ring_ptr(), fi, kernel, image);
}

std::vector<ModVec> colon_by_element(const FreeModule& free, const std::vector<ModVec>& n, const Polynomial& g) {
  const auto& T = free.ring();
  const std::size_t r = free.rank();
  if (g.is_zero()) {
    std::vector<ModVec> all;
    for (std::size_t j = 0; j < r; ++j) all.push_back(free.basis_vector(j));
    return all;
  }
  RationalDegree dg = T.degree(g);
  std::vector<ModVec> rows;
  std::vector<RationalDegree> degs;
  for (std::size_t j = 0; j < r; ++j) {
    rows.push_back(free.mul_poly(g, free.basis_vector(j)));
    degs.push_back(free.degrees()[j] + dg);
  }
  for (const auto& v : n)
    if (!v.empty()) {
      rows.push_back(v);
      degs.push_back(free.degree(v));
    }
  FreeModule sf;
  auto syz = syzygies(free, rows, degs, &sf);
  std::vector<ModVec> out;
  for (const auto& s : syz) {
    std::vector<ModTerm> terms;
    for (const auto& t : s)
      if (t.comp < r) terms.push_back(t);
    ModVec v = free.normalize(std::move(terms));
    if (!v.empty()) out.push_back(std::move(v));
  }
  return minimal_generators(free, out);
}

namespace {

bool contained(const FreeModule& free, const std::vector<ModVec>& a, const std::vector<ModVec>& b) {
  GroebnerBasis gb(free, b);
  for (const auto& v : a)
    if (!gb.contains(v)) return false;
  return true;
}

}  // namespace

std::vector<ModVec> intersect(const FreeModule& free, const std::vector<ModVec>& a, const std::vector<ModVec>& b) {
  std::vector<ModVec> rows;
  std::vector<RationalDegree> degs;
  std::size_t na = 0;
  for (const auto& v : a)
    if (!v.empty()) {
      rows.push_back(v);
      degs.push_back(free.degree(v));
      ++na;
    }
  std::vector<ModVec> aa = rows;
  for (const auto& v : b)
    if (!v.empty()) {
      rows.push_back(v);
      degs.push_back(free.degree(v));
    }
  if (na == 0 || rows.size() == na) return {};
  FreeModule sf;
  auto syz = syzygies(free, rows, degs, &sf);
  std::vector<ModVec> out;
  for (const auto& s : syz) {
    ModVec acc;
    for (const auto& t : s)
      if (t.comp < na) acc = free.add(acc, free.sub_mul(ModVec{}, free.field().neg(t.coeff), t.mono, aa[t.comp]));
    if (!acc.empty()) out.push_back(std::move(acc));
  }
  return minimal_generators(free, out);
}

std::vector<ModVec> saturate(const FreeModule& free, const std::vector<ModVec>& n, const std::vector<Polynomial>& gs) {
  std::vector<ModVec> result;
  bool first = true;
  if (gs.empty()) {
    for (std::size_t j = 0; j < free.rank(); ++j) result.push_back(free.basis_vector(j));
    return result;
  }
  for (const auto& g : gs) {
    std::vector<ModVec> cur = n;
    for (;;) {
      auto next = colon_by_element(free, cur, g);
      if (contained(free, next, cur)) break;
      cur = std::move(next);
    }
    result = first ? minimal_generators(free, cur) : intersect(free, result, cur);
    first = false;
  }
  return result;
}

std::vector<Polynomial> annihilator(const GradedModule& m) {
  const auto& T = m.ring().ambient();
  FreeModule one(T, {RationalDegree(0)});
  GradedModule mm = minimal_presentation(m);
  if (mm.num_generators() == 0) return {Polynomial::constant(1)};
  FreeModule f = mm.free_module();
  auto rel = mm.ambient_relations();
  std::vector<ModVec> ideal;
  for (std::size_t j = 0; j < f.rank(); ++j) {
    // (N : e_j) = {c : c e_j in N}, from syzygies of (e_j, N).
    std::vector<ModVec> rows{f.basis_vector(j)};
    std::vector<RationalDegree> degs{f.degrees()[j]};
    for (const auto& v : rel)
      if (!v.empty()) {
        rows.push_back(v);
        degs.push_back(f.degree(v));
      }
    FreeModule sf;
    auto syz = syzygies(f, rows, degs, &sf);
    std::vector<ModVec> colon;
    for (const auto& s : syz) {
      std::vector<ModTerm> terms;
      for (const auto& t : s)
        if (t.comp == 0) terms.push_back({t.mono, 0, t.coeff});
      ModVec v = one.normalize(std::move(terms));
      if (!v.empty()) colon.push_back(std::move(v));
    }
    ideal = j == 0 ? minimal_generators(one, colon) : intersect(one, ideal, colon);
  }
  std::vector<Polynomial> out;
  for (const auto& v : ideal) out.push_back(one.to_row(v)[0]);
  return out;
}

TorsionSplit torsion_part(const GradedModule& m, const std::vector<Polynomial>& ideal) {
  GradedModule mm = minimal_presentation(m);
  if (mm.num_generators() == 0) return {mm, mm};
  FreeModule f = mm.free_module();
  auto rel = mm.ambient_relations();
  auto sat = saturate(f, rel, ideal);
  PolyMatrix rows;
  for (const auto& v : sat) rows.push_back(f.to_row(v));
  TorsionSplit out;
  out.quotient = minimal_presentation(GradedModule(mm.ring_ptr(), mm.generator_degrees(), std::move(rows)));
  out.torsion = submodule_presentation(mm.ring_ptr(), f, sat, rel);
  return out;
}

std::int64_t lambda0(const GradedModule& m) {
  GradedModule mm = minimal_presentation(m);
  if (mm.num_generators() == 0) return 0;
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < mm.ring().nvars(); ++i) vars.push_back(mm.ring().ambient().var(i));
  FreeModule f = mm.free_module();
  auto sat = saturate(f, mm.ambient_relations(), vars);
  PolyMatrix rows;
  for (const auto& v : sat) rows.push_back(f.to_row(v));
  GradedModule q(mm.ring_ptr(), mm.generator_degrees(), std::move(rows));
  return (mm.hilbert_series() - q.hilbert_series()).length();
}

std::int64_t lambda0_by_duality(const GradedModule& m) {
  return ext_module(int(m.ring().nvars()), m).hilbert_series().length();
}

UnmixedSplit unmixed_quotient(const GradedModule& m) {
  GradedModule mm = minimal_presentation(m);
  if (mm.num_generators() == 0) throw std::domain_error("unmixed part of the zero module");
  const int n = int(mm.ring().nvars());
  const int c = n - dimension(mm);
  const auto& T = mm.ring().ambient();
  FreeModule one(T, {RationalDegree(0)});
  // Lower-dimensional associated primes live in the supports of Ext^i, i > codim.
  std::vector<ModVec> j{one.basis_vector(0)};
  for (int i = c + 1; i <= n; ++i) {
    GradedModule e = ext_module(i, mm);
    if (e.num_generators() == 0) continue;
    std::vector<ModVec> prod;
    for (const auto& a : annihilator(e))
      for (const auto& b : j) prod.push_back(one.mul_poly(a, b));
    j = minimal_generators(one, prod);
  }
  std::vector<Polynomial> ideal;
  for (const auto& v : j) ideal.push_back(one.to_row(v)[0]);
  auto split = torsion_part(mm, ideal);
  return {split.quotient, split.torsion};
}

}  // namespace fpush
