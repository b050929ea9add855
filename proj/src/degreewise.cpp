#include "fpush/degreewise.hpp"

#include <stdexcept>

namespace fpush {

// ---------------------------------------------------------------- ComponentBasis

ComponentBasis::ComponentBasis(const GradedModule& m, RationalDegree d) : degree_(d) {
  const auto& T = m.ring().ambient();
  const auto& gb = m.groebner();
  for (std::size_t j = 0; j < m.num_generators(); ++j) {
    RationalDegree e = d - m.generator_degrees()[j];
    if (!e.is_integer() || e.num() < 0) continue;
    const auto comp = std::uint32_t(j);
    T.for_each_monomial(e.num(), [&](const Monomial& mono) {
      if (!gb.is_standard(mono, comp)) return;
      index_.emplace(std::make_pair(comp, mono), basis_.size());
      basis_.push_back({mono, comp, 1});
    });
  }
}

std::int64_t ComponentBasis::index(const Monomial& mono, std::uint32_t comp) const {
  auto it = index_.find({comp, mono});
  return it == index_.end() ? -1 : std::int64_t(it->second);
}

std::vector<Coeff> ComponentBasis::coords(const ModVec& reduced) const {
  std::vector<Coeff> c(basis_.size(), 0);
  for (const auto& t : reduced) {
    auto k = index(t.mono, t.comp);
    if (k < 0) throw std::logic_error("element is not reduced or has the wrong degree");
    c[std::size_t(k)] = t.coeff;
  }
  return c;
}

ModVec ComponentBasis::element(std::span<const Coeff> coords) const {
  std::vector<ModTerm> terms;
  for (std::size_t k = 0; k < basis_.size(); ++k)
    if (coords[k]) terms.push_back({basis_[k].mono, basis_[k].comp, coords[k]});
  return terms;  // caller normalizes if order matters
}

// ---------------------------------------------------------------- ModuleContext

ModuleContext::ModuleContext(GradedModule m) : m_(std::move(m)), free_(m_.free_module()) {}

const ModVec& ModuleContext::reduce_term(const Monomial& mono, std::uint32_t comp) {
  auto key = std::make_pair(comp, mono);
  auto it = nf_cache_.find(key);
  if (it != nf_cache_.end()) return it->second;
  ModVec nf = m_.groebner().normal_form(ModVec{ModTerm{mono, comp, 1}});
  return nf_cache_.emplace(key, std::move(nf)).first->second;
}

ModVec ModuleContext::reduce(const ModVec& v) {
  const auto& F = free_.field();
  std::vector<ModTerm> terms;
  for (const auto& t : v)
    for (const auto& r : reduce_term(t.mono, t.comp)) terms.push_back({r.mono, r.comp, F.mul(r.coeff, t.coeff)});
  return free_.normalize(std::move(terms));
}

ModVec ModuleContext::multiply(const Polynomial& f, const ModVec& v) {
  const auto& F = free_.field();
  std::vector<ModTerm> terms;
  for (const auto& a : f.terms())
    for (const auto& t : v)
      for (const auto& r : reduce_term(a.mono * t.mono, t.comp))
        terms.push_back({r.mono, r.comp, F.mul(r.coeff, F.mul(a.coeff, t.coeff))});
  return free_.normalize(std::move(terms));
}

const ComponentBasis& ModuleContext::component(RationalDegree d) {
  auto it = components_.find(d);
  if (it != components_.end()) return it->second;
  return components_.emplace(d, ComponentBasis(m_, d)).first->second;
}

// ---------------------------------------------------------------- HomSpace

HomSpace::HomSpace(const GradedModule& source, const GradedModule& target, RationalDegree shift)
    : source_(source), target_(target), shift_(shift), ctx_(std::make_shared<ModuleContext>(target)) {
  const auto& F = target.ring().field();
  const std::size_t n = source.num_generators();
  std::size_t total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    comps_.push_back(&ctx_->component(source.generator_degrees()[j] - shift));
    offsets_.push_back(total);
    total += comps_.back()->dim();
  }
  offsets_.push_back(total);

  std::vector<const ComponentBasis*> rel_comps;
  std::vector<std::size_t> col_off;
  std::size_t cols = 0;
  for (const auto& d : source.relation_degrees()) {
    rel_comps.push_back(&ctx_->component(d - shift));
    col_off.push_back(cols);
    cols += rel_comps.back()->dim();
  }
  Mat a(total, cols);
  for (std::size_t r = 0; r < source.relations().size(); ++r) {
    const auto& row = source.relations()[r];
    for (std::size_t j = 0; j < n; ++j) {
      if (row[j].is_zero()) continue;
      const auto& basis = comps_[j]->basis();
      for (std::size_t b = 0; b < basis.size(); ++b) {
        ModVec prod = ctx_->multiply(row[j], ModVec{basis[b]});
        for (const auto& t : prod) {
          auto k = rel_comps[r]->index(t.mono, t.comp);
          if (k < 0) throw std::logic_error("HomSpace: product outside the expected component");
          Coeff& cell = a(offsets_[j] + b, col_off[r] + std::size_t(k));
          cell = F.add(cell, t.coeff);
        }
      }
    }
  }
  coords_ = linalg::left_kernel(F, a);
  for (std::size_t k = 0; k < coords_.rows(); ++k) basis_.push_back(combination(coords_.row(k)));
}

std::vector<ModVec> HomSpace::images(std::span<const Coeff> c) const {
  std::vector<ModVec> out;
  const FreeModule& tf = ctx_->free();
  for (std::size_t j = 0; j < comps_.size(); ++j)
    out.push_back(tf.normalize(comps_[j]->element(c.subspan(offsets_[j], comps_[j]->dim()))));
  return out;
}

PolyMatrix HomSpace::combination(std::span<const Coeff> c) const {
  PolyMatrix out;
  const FreeModule& tf = ctx_->free();
  for (const auto& v : images(c)) {
    auto row = tf.to_row(v);
    row.resize(target_.num_generators());
    out.push_back(std::move(row));
  }
  return out;
}

Mat HomSpace::constant_part(std::span<const Coeff> c) const {
  Mat out(source_.num_generators(), target_.num_generators());
  auto imgs = images(c);
  for (std::size_t j = 0; j < imgs.size(); ++j)
    for (const auto& t : imgs[j])
      if (t.mono.is_one()) out(j, t.comp) = t.coeff;
  return out;
}

std::vector<Coeff> HomSpace::map_coords(const PolyMatrix& map) const {
  std::vector<Coeff> out(offsets_.back(), 0);
  const FreeModule& tf = ctx_->free();
  for (std::size_t j = 0; j < comps_.size(); ++j) {
    auto c = comps_[j]->coords(ctx_->reduce(tf.from_row(map[j])));
    std::copy(c.begin(), c.end(), out.begin() + std::ptrdiff_t(offsets_[j]));
  }
  return out;
}

// ---------------------------------------------------------------- finite length

FiniteLengthModule to_finite_length(const GradedModule& m) {
  FiniteLengthModule out;
  out.ring = m.ring_ptr();
  const auto& T = m.ring().ambient();
  auto hs = m.hilbert_series();
  out.action.assign(T.nvars(), Mat());
  if (hs.is_zero()) {
    for (auto& a : out.action) a = Mat(0, 0);
    return out;
  }
  if (hs.dimension() > 0) throw std::domain_error("module does not have finite length");
  ModuleContext ctx(m);
  RationalDegree top = hs.numerator().rbegin()->first;
  std::vector<const ComponentBasis*> comps;
  std::map<RationalDegree, std::size_t> offset;
  for (auto& [d, c] : hs.expand(top)) {
    if (c == 0) continue;
    const auto& cb = ctx.component(d);
    if (std::int64_t(cb.dim()) != c) throw std::logic_error("component dimension mismatch");
    offset[d] = out.degrees.size();
    comps.push_back(&cb);
    for (std::size_t k = 0; k < cb.dim(); ++k) out.degrees.push_back(d);
  }
  const std::size_t n = out.degrees.size();
  for (std::size_t i = 0; i < T.nvars(); ++i) {
    Mat a(n, n);
    const Monomial xi = Monomial::var(i);
    std::size_t row = 0;
    for (const auto* cb : comps) {
      RationalDegree target = cb->degree() + RationalDegree(T.weights()[i]);
      for (const auto& b : cb->basis()) {
        const ModVec& img = ctx.reduce_term(b.mono * xi, b.comp);
        if (!img.empty()) {
          const auto& tc = ctx.component(target);
          std::size_t off = offset.at(target);
          for (const auto& t : img) a(row, off + std::size_t(tc.index(t.mono, t.comp))) = t.coeff;
        }
        ++row;
      }
    }
    out.action[i] = std::move(a);
  }
  return out;
}

GradedModule from_finite_length(const FiniteLengthModule& m) {
  const auto& T = m.ring->ambient();
  const auto& F = T.field();
  const std::size_t n = m.length();
  PolyMatrix rows;
  for (std::size_t i = 0; i < m.action.size(); ++i)
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<Polynomial> row(n);
      row[k] = T.var(i);
      for (std::size_t l = 0; l < n; ++l)
        if (Coeff c = m.action[i](k, l)) row[l] = T.add(row[l], Polynomial::constant(F.neg(c)));
      rows.push_back(std::move(row));
    }
  return minimal_presentation(GradedModule(m.ring, m.degrees, std::move(rows)));
}

FiniteLengthModule matlis_dual_fl(const FiniteLengthModule& m) {
  FiniteLengthModule out;
  out.ring = m.ring;
  for (const auto& d : m.degrees) out.degrees.push_back(-d);
  for (const auto& a : m.action) out.action.push_back(a.transpose());
  return out;
}

bool is_valid_finite_length(const FiniteLengthModule& m) {
  const auto& T = m.ring->ambient();
  const auto& F = T.field();
  const std::size_t n = m.length();
  for (std::size_t i = 0; i < m.action.size(); ++i) {
    if (m.action[i].rows() != n || m.action[i].cols() != n) return false;
    for (std::size_t j = i + 1; j < m.action.size(); ++j)
      if (linalg::mul(F, m.action[i], m.action[j]) != linalg::mul(F, m.action[j], m.action[i])) return false;
    Mat p = Mat::identity(n);
    for (std::size_t k = 0; k < n; ++k) p = linalg::mul(F, p, m.action[i]);
    if (!p.is_zero()) return false;
  }
  for (const auto& f : m.ring->relations()) {
    Mat acc(n, n);
    for (const auto& t : f.terms()) {
      Mat p = Mat::identity(n);
      for (std::size_t i = 0; i < T.nvars(); ++i)
        for (unsigned e = 0; e < t.mono.e[i]; ++e) p = linalg::mul(F, p, m.action[i]);
      acc = linalg::add(F, acc, linalg::scale(F, p, t.coeff));
    }
    if (!acc.is_zero()) return false;
  }
  return true;
}

}  // namespace fpush
