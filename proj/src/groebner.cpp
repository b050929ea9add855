#include "fpush/groebner.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace fpush {

// ---------------------------------------------------------------- FreeModule

RationalDegree FreeModule::degree(const ModVec& v) const {
  if (v.empty()) throw std::domain_error("degree of zero vector");
  RationalDegree d = degree(v.front());
  for (const auto& t : v)
    if (degree(t) != d) throw std::invalid_argument("module element is not homogeneous");
  return d;
}

bool FreeModule::is_homogeneous(const ModVec& v) const {
  if (v.empty()) return true;
  RationalDegree d = degree(v.front());
  for (const auto& t : v)
    if (degree(t) != d) return false;
  return true;
}

ModVec FreeModule::normalize(std::vector<ModTerm> terms) const {
  std::sort(terms.begin(), terms.end(), [this](const ModTerm& a, const ModTerm& b) { return greater(a, b); });
  ModVec out;
  out.reserve(terms.size());
  const auto& F = field();
  for (const auto& t : terms) {
    if (!out.empty() && out.back().comp == t.comp && out.back().mono == t.mono) {
      out.back().coeff = F.add(out.back().coeff, t.coeff);
      if (!out.back().coeff) out.pop_back();
    } else if (t.coeff) {
      out.push_back(t);
    }
  }
  return out;
}

ModVec FreeModule::from_row(const std::vector<Polynomial>& row) const {
  if (row.size() != rank()) throw std::invalid_argument("row length does not match free module rank");
  std::vector<ModTerm> terms;
  for (std::size_t j = 0; j < row.size(); ++j)
    for (const auto& t : row[j].terms()) terms.push_back({t.mono, std::uint32_t(j), t.coeff});
  return normalize(std::move(terms));
}

std::vector<Polynomial> FreeModule::to_row(const ModVec& v) const {
  std::vector<std::vector<Term>> parts(rank());
  for (const auto& t : v) parts[t.comp].push_back({t.mono, t.coeff});
  std::vector<Polynomial> row;
  row.reserve(rank());
  for (auto& p : parts) row.emplace_back(std::move(p));
  return row;
}

ModVec FreeModule::add(const ModVec& a, const ModVec& b) const {
  ModVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  const auto& F = field();
  while (i < a.size() && j < b.size()) {
    int c = compare(a[i], b[j]);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
    } else {
      Coeff s = F.add(a[i].coeff, b[j].coeff);
      if (s) out.push_back({a[i].mono, a[i].comp, s});
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), a.begin() + std::ptrdiff_t(i), a.end());
  out.insert(out.end(), b.begin() + std::ptrdiff_t(j), b.end());
  return out;
}

ModVec FreeModule::scale(const ModVec& a, Coeff c) const {
  if (!c) return {};
  ModVec out = a;
  for (auto& t : out) t.coeff = field().mul(t.coeff, c);
  return out;
}

ModVec FreeModule::sub_mul(const ModVec& a, Coeff c, const Monomial& m, const ModVec& b) const {
  const auto& F = field();
  Coeff nc = F.neg(c);
  ModVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  ModTerm bt{};
  auto load = [&](std::size_t k) {
    bt = {b[k].mono * m, b[k].comp, F.mul(b[k].coeff, nc)};
  };
  if (j < b.size()) load(j);
  while (i < a.size() && j < b.size()) {
    int cmp = compare(a[i], bt);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back(bt);
      if (++j < b.size()) load(j);
    } else {
      Coeff s = F.add(a[i].coeff, bt.coeff);
      if (s) out.push_back({a[i].mono, a[i].comp, s});
      ++i;
      if (++j < b.size()) load(j);
    }
  }
  out.insert(out.end(), a.begin() + std::ptrdiff_t(i), a.end());
  while (j < b.size()) {
    out.push_back(bt);
    if (++j < b.size()) load(j);
  }
  return out;
}

ModVec FreeModule::mul_poly(const Polynomial& f, const ModVec& v) const {
  ModVec acc;
  for (const auto& t : f.terms()) acc = sub_mul(acc, field().neg(t.coeff), t.mono, v);
  return acc;
}

ModVec FreeModule::make_monic(ModVec v) const {
  if (v.empty() || v.front().coeff == 1) return v;
  return scale(v, field().inv(v.front().coeff));
}

// ---------------------------------------------------------------- Buchberger

namespace {

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  RationalDegree degree;
  bool alive = true;
};

}  // namespace

const ModVec* GroebnerBasis::find_reducer(const ModTerm& t) const {
  if (t.comp >= by_comp_.size()) return nullptr;
  for (std::size_t idx : by_comp_[t.comp]) {
    const auto& lead = basis_[idx].front();
    if (lead.mono.divides(t.mono)) return &basis_[idx];
  }
  return nullptr;
}

ModVec GroebnerBasis::normal_form(ModVec f) const {
  // Terms before `pos` are irreducible; reductions only touch the suffix.
  const auto& F = free_.field();
  std::size_t pos = 0;
  ModVec scratch;
  while (pos < f.size()) {
    const ModTerm lead = f[pos];
    const ModVec* g = find_reducer(lead);
    if (!g) {
      ++pos;
      continue;
    }
    Coeff c = F.div(lead.coeff, g->front().coeff);
    scratch.assign(f.begin() + std::ptrdiff_t(pos), f.end());
    scratch = free_.sub_mul(scratch, c, lead.mono / g->front().mono, *g);
    f.resize(pos);
    f.insert(f.end(), scratch.begin(), scratch.end());
  }
  return f;
}

bool GroebnerBasis::is_standard(const Monomial& m, std::uint32_t comp) const {
  return find_reducer(ModTerm{m, comp, 1}) == nullptr;
}

std::vector<std::vector<Monomial>> GroebnerBasis::leading_monomials() const {
  std::vector<std::vector<Monomial>> out(free_.rank());
  for (const auto& g : basis_) out[g.front().comp].push_back(g.front().mono);
  return out;
}

void GroebnerBasis::index_basis() {
  by_comp_.assign(free_.rank(), {});
  for (std::size_t k = 0; k < basis_.size(); ++k) by_comp_[basis_[k].front().comp].push_back(k);
}

GroebnerBasis::GroebnerBasis(FreeModule free, const std::vector<ModVec>& generators) : free_(std::move(free)) {
  by_comp_.assign(free_.rank(), {});
  const auto& F = free_.field();

  struct Input {
    std::size_t index;
    RationalDegree degree;
  };
  std::vector<Input> inputs;
  for (std::size_t k = 0; k < generators.size(); ++k) {
    if (generators[k].empty()) continue;
    for (const auto& t : generators[k])
      if (t.comp >= free_.rank()) throw std::invalid_argument("generator component out of range");
    inputs.push_back({k, free_.degree(generators[k])});
  }
  std::stable_sort(inputs.begin(), inputs.end(), [](const Input& a, const Input& b) { return a.degree < b.degree; });

  std::vector<Pair> pairs;
  auto lead = [&](std::size_t k) -> const ModTerm& { return basis_[k].front(); };

  auto insert = [&](ModVec h) {
    h = free_.make_monic(std::move(h));
    const std::size_t hn = basis_.size();
    basis_.push_back(std::move(h));
    const ModTerm& hl = basis_[hn].front();
    // Gebauer–Möller update; no coprimality shortcut because it fails for modules.
    std::vector<Pair> cand;
    for (std::size_t g : by_comp_[hl.comp]) {
      Monomial l = lcm(lead(g).mono, hl.mono);
      cand.push_back({g, hn, l, free_.degrees()[hl.comp] + free_.ring().degree(l)});
    }
    std::vector<Pair> keep;
    for (std::size_t a = 0; a < cand.size(); ++a) {
      bool redundant = false;
      for (std::size_t b = a + 1; b < cand.size() && !redundant; ++b)
        if (cand[b].lcm.divides(cand[a].lcm)) redundant = true;
      for (std::size_t b = 0; b < keep.size() && !redundant; ++b)
        if (keep[b].lcm.divides(cand[a].lcm)) redundant = true;
      if (!redundant) keep.push_back(cand[a]);
    }
    for (auto& pr : pairs) {
      if (!pr.alive || lead(pr.i).comp != hl.comp) continue;
      if (hl.mono.divides(pr.lcm) && lcm(lead(pr.i).mono, hl.mono) != pr.lcm &&
          lcm(lead(pr.j).mono, hl.mono) != pr.lcm)
        pr.alive = false;
    }
    pairs.erase(std::remove_if(pairs.begin(), pairs.end(), [](const Pair& p) { return !p.alive; }), pairs.end());
    for (auto& k : keep) pairs.push_back(k);
    by_comp_[hl.comp].push_back(hn);
  };

  std::size_t next_input = 0;
  while (next_input < inputs.size() || !pairs.empty()) {
    RationalDegree deg;
    bool have = false;
    if (next_input < inputs.size()) {
      deg = inputs[next_input].degree;
      have = true;
    }
    for (const auto& pr : pairs)
      if (!have || pr.degree < deg) {
        deg = pr.degree;
        have = true;
      }
    // S-pairs of this degree first, so that inputs are tested against the
    // truncated basis of everything generated in lower degrees.
    std::vector<Pair> batch;
    std::vector<Pair> rest;
    for (auto& pr : pairs) (pr.degree == deg ? batch : rest).push_back(pr);
    pairs = std::move(rest);
    std::sort(batch.begin(), batch.end(), [&](const Pair& a, const Pair& b) {
      return free_.compare_monomials(a.lcm, b.lcm) < 0;
    });
    for (const auto& pr : batch) {
      const ModVec& gi = basis_[pr.i];
      const ModVec& gj = basis_[pr.j];
      ModVec s = free_.sub_mul(ModVec{}, F.neg(1), pr.lcm / gi.front().mono, gi);
      s = free_.sub_mul(s, 1, pr.lcm / gj.front().mono, gj);
      s = normal_form(std::move(s));
      if (!s.empty()) insert(std::move(s));
    }
    while (next_input < inputs.size() && inputs[next_input].degree == deg) {
      const auto& in = inputs[next_input++];
      ModVec r = normal_form(generators[in.index]);
      if (!r.empty()) {
        minimal_.push_back(in.index);
        insert(std::move(r));
      }
    }
  }

  // Leads are already minimal (degree-ordered insertion); reduce tails.
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    ModVec& f = basis_[k];
    std::size_t pos = 1;
    ModVec scratch;
    while (pos < f.size()) {
      const ModTerm t = f[pos];
      const ModVec* g = nullptr;
      for (std::size_t idx : by_comp_[t.comp]) {
        if (idx != k && basis_[idx].front().mono.divides(t.mono)) {
          g = &basis_[idx];
          break;
        }
      }
      if (!g) {
        ++pos;
        continue;
      }
      scratch.assign(f.begin() + std::ptrdiff_t(pos), f.end());
      scratch = free_.sub_mul(scratch, F.div(t.coeff, g->front().coeff), t.mono / g->front().mono, *g);
      f.resize(pos);
      f.insert(f.end(), scratch.begin(), scratch.end());
    }
  }
  std::sort(minimal_.begin(), minimal_.end());
  index_basis();
}

// ---------------------------------------------------------------- syzygies

std::vector<ModVec> syzygies(const FreeModule& free, const std::vector<ModVec>& rows, FreeModule* syz_free) {
  std::vector<RationalDegree> row_degrees;
  for (const auto& r : rows) {
    if (r.empty()) throw std::invalid_argument("syzygies: zero rows need explicit degrees");
    row_degrees.push_back(free.degree(r));
  }
  return syzygies(free, rows, row_degrees, syz_free);
}

std::vector<ModVec> syzygies(const FreeModule& free, const std::vector<ModVec>& rows,
                             const std::vector<RationalDegree>& row_degrees, FreeModule* syz_free) {
  const std::size_t n = free.rank(), m = rows.size();
  std::vector<RationalDegree> aug_degrees = free.degrees();
  for (std::size_t l = 0; l < m; ++l) {
    if (!rows[l].empty() && free.degree(rows[l]) != row_degrees[l])
      throw std::invalid_argument("syzygies: row degree mismatch");
    aug_degrees.push_back(row_degrees[l]);
  }
  FreeModule target(free.ring(), row_degrees);
  if (syz_free) *syz_free = target;
  FreeModule aug(free.ring(), aug_degrees);
  std::vector<ModVec> gens;
  gens.reserve(m);
  for (std::size_t l = 0; l < m; ++l) {
    ModVec v = rows[l];
    v.push_back({Monomial{}, std::uint32_t(n + l), 1});
    gens.push_back(aug.normalize(std::move(v)));
  }
  GroebnerBasis gb(aug, gens);
  std::vector<ModVec> syz;
  for (const auto& g : gb.elements()) {
    if (g.front().comp < n) continue;
    ModVec s;
    s.reserve(g.size());
    for (const auto& t : g) s.push_back({t.mono, t.comp - std::uint32_t(n), t.coeff});
    syz.push_back(target.normalize(std::move(s)));
  }
  return minimal_generators(target, syz);
}

std::vector<ModVec> minimal_generators(const FreeModule& free, const std::vector<ModVec>& gens) {
  GroebnerBasis gb(free, gens);
  std::vector<ModVec> out;
  for (std::size_t k : gb.minimal_generator_indices()) out.push_back(gens[k]);
  return out;
}

}  // namespace fpush
