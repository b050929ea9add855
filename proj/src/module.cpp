#include "fpush/module.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace fpush {

namespace {

HilbertSeries series_from_leads(const PolyRing& ring, const std::vector<RationalDegree>& degrees,
                                const std::vector<std::vector<Monomial>>& leads) {
  std::map<RationalDegree, std::int64_t> num;
  for (std::size_t j = 0; j < degrees.size(); ++j) {
    auto part = monomial_ideal_numerator(ring, leads[j]);
    for (std::size_t e = 0; e < part.size(); ++e)
      if (part[e]) num[degrees[j] + RationalDegree(std::int64_t(e))] += part[e];
  }
  return HilbertSeries(ring.weights(), std::move(num));
}

}  // namespace

// ---------------------------------------------------------------- GradedRing

GradedRing::GradedRing(PolyRing ambient, std::vector<Polynomial> relations) : ambient_(std::move(ambient)) {
  for (auto& f : relations) {
    ambient_.check_arity(f);
    if (f.is_zero()) continue;
    if (!ambient_.is_homogeneous(f))
      throw std::invalid_argument("ring relation is not weighted-homogeneous: " + ambient_.format(f));
    relations_.push_back(std::move(f));
  }
}

HilbertSeries GradedRing::hilbert_series() const {
  std::call_once(cache_->once, [this] {
    FreeModule f(ambient_, {RationalDegree(0)});
    std::vector<ModVec> gens;
    for (const auto& r : relations_) gens.push_back(f.from_row({r}));
    GroebnerBasis gb(f, gens);
    cache_->hs = series_from_leads(ambient_, f.degrees(), gb.leading_monomials());
  });
  return cache_->hs;
}

int GradedRing::dimension() const { return hilbert_series().dimension(); }

RingPtr make_ring(PolyRing ambient, std::vector<Polynomial> relations) {
  return std::make_shared<const GradedRing>(std::move(ambient), std::move(relations));
}

// ---------------------------------------------------------------- GradedModule

GradedModule::GradedModule(RingPtr ring, std::vector<RationalDegree> generator_degrees, PolyMatrix relations)
    : ring_(std::move(ring)), gen_degrees_(std::move(generator_degrees)) {
  const auto& T = ring_->ambient();
  for (auto& row : relations) {
    if (row.size() != gen_degrees_.size())
      throw std::invalid_argument("relation row has " + std::to_string(row.size()) + " entries, expected " +
                                  std::to_string(gen_degrees_.size()));
    std::optional<RationalDegree> deg;
    for (std::size_t j = 0; j < row.size(); ++j) {
      T.check_arity(row[j]);
      if (row[j].is_zero()) continue;
      if (!T.is_homogeneous(row[j]))
        throw std::invalid_argument("presentation entry is not homogeneous: " + T.format(row[j]));
      RationalDegree d = gen_degrees_[j] + T.degree(row[j]);
      if (deg && *deg != d) throw std::invalid_argument("relation row is not homogeneous");
      deg = d;
    }
    if (!deg) continue;
    relations_.push_back(std::move(row));
    rel_degrees_.push_back(*deg);
  }
}

std::vector<ModVec> GradedModule::ambient_relations() const {
  FreeModule F = free_module();
  std::vector<ModVec> out;
  out.reserve(relations_.size() + gen_degrees_.size() * ring_->relations().size());
  for (const auto& row : relations_) out.push_back(F.from_row(row));
  for (const auto& f : ring_->relations())
    for (std::size_t j = 0; j < gen_degrees_.size(); ++j) out.push_back(F.mul_poly(f, F.basis_vector(j)));
  return out;
}

const GroebnerBasis& GradedModule::groebner() const {
  std::call_once(cache_->once, [this] {
    cache_->gb = std::make_unique<GroebnerBasis>(free_module(), ambient_relations());
  });
  return *cache_->gb;
}

HilbertSeries GradedModule::hilbert_series() const {
  if (gen_degrees_.empty()) return HilbertSeries(ring_->ambient().weights(), {});
  return series_from_leads(ring_->ambient(), gen_degrees_, groebner().leading_monomials());
}

GradedModule GradedModule::shifted(RationalDegree delta) const {
  auto degs = gen_degrees_;
  for (auto& d : degs) d += delta;
  return GradedModule(ring_, std::move(degs), relations_);
}

// ---------------------------------------------------------------- constructors

GradedModule free_module(const RingPtr& ring, const std::vector<RationalDegree>& degrees) {
  return GradedModule(ring, degrees, {});
}

GradedModule zero_module(const RingPtr& ring) { return GradedModule(ring, {}, {}); }

GradedModule quotient_ring_module(const RingPtr& ring, const std::vector<Polynomial>& ideal) {
  PolyMatrix rows;
  for (const auto& f : ideal) rows.push_back({f});
  return GradedModule(ring, {RationalDegree(0)}, std::move(rows));
}

GradedModule residue_field(const RingPtr& ring) {
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < ring->nvars(); ++i) vars.push_back(ring->ambient().var(i));
  return quotient_ring_module(ring, vars);
}

GradedModule ideal_module(const RingPtr& ring, const std::vector<Polynomial>& ideal) {
  const auto& T = ring->ambient();
  std::vector<Polynomial> gens;
  std::vector<RationalDegree> degs;
  for (const auto& f : ideal) {
    T.check_arity(f);
    if (f.is_zero()) continue;
    degs.push_back(T.degree(f));
    gens.push_back(f);
  }
  // Syzygies over R of (f_1..f_k) are the first k coordinates of syzygies over
  // T of (f_1..f_k, relations of R).
  FreeModule one(T, {RationalDegree(0)});
  std::vector<ModVec> rows;
  std::vector<RationalDegree> rdeg;
  for (const auto& f : gens) {
    rows.push_back(one.from_row({f}));
    rdeg.push_back(T.degree(f));
  }
  for (const auto& g : ring->relations()) {
    rows.push_back(one.from_row({g}));
    rdeg.push_back(T.degree(g));
  }
  FreeModule syz_free;
  auto syz = syzygies(one, rows, rdeg, &syz_free);
  PolyMatrix rel;
  for (const auto& s : syz) {
    auto full = syz_free.to_row(s);
    full.resize(gens.size());
    bool nonzero = false;
    for (const auto& e : full)
      if (!e.is_zero()) nonzero = true;
    if (nonzero) rel.push_back(std::move(full));
  }
  return minimal_presentation(GradedModule(ring, degs, std::move(rel)));
}

// ---------------------------------------------------------------- matrices

PolyMatrix matrix_product(const PolyRing& ring, const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix out;
  out.reserve(a.size());
  const std::size_t m = b.empty() ? 0 : b[0].size();
  for (const auto& row : a) {
    if (row.size() != b.size()) throw std::invalid_argument("matrix_product: shape mismatch");
    std::vector<Polynomial> r(m);
    for (std::size_t l = 0; l < row.size(); ++l) {
      if (row[l].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j)
        if (!b[l][j].is_zero()) r[j] = ring.add(r[j], ring.mul(row[l], b[l][j]));
    }
    out.push_back(std::move(r));
  }
  return out;
}

PolyMatrix identity_matrix(std::size_t n) {
  PolyMatrix id(n, std::vector<Polynomial>(n));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = Polynomial::constant(1);
  return id;
}

bool is_homomorphism(const GradedModule& source, const GradedModule& target, const PolyMatrix& map) {
  if (map.size() != source.num_generators()) return false;
  FreeModule tf = target.free_module();
  const auto& gb = target.groebner();
  std::vector<ModVec> images;
  for (std::size_t k = 0; k < map.size(); ++k) {
    if (map[k].size() != target.num_generators()) return false;
    ModVec v = tf.from_row(map[k]);
    if (!v.empty() && (!tf.is_homogeneous(v) || tf.degree(v) != source.generator_degrees()[k])) return false;
    images.push_back(std::move(v));
  }
  for (const auto& row : source.relations()) {
    ModVec acc;
    for (std::size_t k = 0; k < row.size(); ++k)
      if (!row[k].is_zero()) acc = tf.add(acc, tf.mul_poly(row[k], images[k]));
    if (!gb.normal_form(acc).empty()) return false;
  }
  return true;
}

bool maps_equal(const GradedModule& target, const PolyMatrix& a, const PolyMatrix& b) {
  if (a.size() != b.size()) return false;
  FreeModule tf = target.free_module();
  const auto& gb = target.groebner();
  for (std::size_t k = 0; k < a.size(); ++k) {
    ModVec d = tf.add(tf.from_row(a[k]), tf.scale(tf.from_row(b[k]), tf.field().neg(1)));
    if (!gb.normal_form(d).empty()) return false;
  }
  return true;
}

// ---------------------------------------------------------------- minimal presentation

namespace {

using SparseRow = std::map<std::uint32_t, Polynomial>;

// row -= f * pivot
void row_axpy(const PolyRing& T, SparseRow& row, const Polynomial& f, const SparseRow& pivot) {
  for (const auto& [c, v] : pivot) {
    Polynomial prod = T.mul(f, v);
    auto it = row.find(c);
    if (it == row.end()) {
      Polynomial n = T.neg(prod);
      if (!n.is_zero()) row.emplace(c, std::move(n));
    } else {
      it->second = T.sub(it->second, prod);
      if (it->second.is_zero()) row.erase(it);
    }
  }
}

}  // namespace

PresentationChange minimal_presentation_with_maps(const GradedModule& m) {
  const auto& T = m.ring().ambient();
  const auto& F = T.field();
  const std::size_t n = m.num_generators();
  std::vector<SparseRow> rows;
  for (const auto& r : m.relations()) {
    SparseRow s;
    for (std::size_t j = 0; j < r.size(); ++j)
      if (!r[j].is_zero()) s.emplace(std::uint32_t(j), r[j]);
    rows.push_back(std::move(s));
  }
  std::vector<SparseRow> expr(n);
  for (std::size_t j = 0; j < n; ++j) expr[j].emplace(std::uint32_t(j), Polynomial::constant(1));
  std::vector<bool> row_alive(rows.size(), true), col_alive(n, true);

  for (;;) {
    std::size_t best_row = rows.size();
    std::uint32_t best_col = 0;
    std::size_t best_size = SIZE_MAX;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (!row_alive[r] || rows[r].size() >= best_size) continue;
      for (const auto& [c, v] : rows[r])
        if (v.is_constant()) {
          best_row = r;
          best_col = c;
          best_size = rows[r].size();
          break;
        }
    }
    if (best_row == rows.size()) break;
    SparseRow pivot = rows[best_row];
    row_alive[best_row] = false;
    Coeff inv = F.inv(pivot.at(best_col).constant_term());
    for (auto& [c, v] : pivot) v = T.scale(v, inv);
    auto eliminate = [&](SparseRow& row) {
      auto it = row.find(best_col);
      if (it == row.end()) return;
      Polynomial f = it->second;
      row_axpy(T, row, f, pivot);
    };
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (row_alive[r]) eliminate(rows[r]);
    for (auto& e : expr) eliminate(e);
    col_alive[best_col] = false;
  }

  std::vector<std::size_t> keep;
  std::vector<std::int64_t> new_index(n, -1);
  for (std::size_t j = 0; j < n; ++j)
    if (col_alive[j]) {
      new_index[j] = std::int64_t(keep.size());
      keep.push_back(j);
    }
  std::vector<RationalDegree> degs;
  for (auto j : keep) degs.push_back(m.generator_degrees()[j]);

  auto densify = [&](const SparseRow& s) {
    std::vector<Polynomial> row(keep.size());
    for (const auto& [c, v] : s) {
      if (new_index[c] < 0) throw std::logic_error("minimal_presentation: eliminated column survived");
      row[std::size_t(new_index[c])] = v;
    }
    return row;
  };

  PolyMatrix pruned;
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (row_alive[r] && !rows[r].empty()) pruned.push_back(densify(rows[r]));

  // Minimal relations over T; ideal multiples listed first so they absorb
  // redundancy and can then be dropped (they stay implicit).
  FreeModule fm(T, degs);
  std::vector<ModVec> cand;
  for (const auto& f : m.ring().relations())
    for (std::size_t j = 0; j < keep.size(); ++j) cand.push_back(fm.mul_poly(f, fm.basis_vector(j)));
  const std::size_t implicit = cand.size();
  for (const auto& row : pruned) cand.push_back(fm.from_row(row));
  PolyMatrix minimal_rows;
  if (!keep.empty()) {
    GroebnerBasis gb(fm, cand);
    for (auto k : gb.minimal_generator_indices())
      if (k >= implicit) minimal_rows.push_back(pruned[k - implicit]);
  }

  PresentationChange out;
  out.module = GradedModule(m.ring_ptr(), degs, std::move(minimal_rows));
  for (std::size_t j = 0; j < n; ++j) out.to_new.push_back(densify(expr[j]));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    std::vector<Polynomial> row(n);
    row[keep[i]] = Polynomial::constant(1);
    out.to_old.push_back(std::move(row));
  }
  return out;
}

GradedModule minimal_presentation(const GradedModule& m) { return minimal_presentation_with_maps(m).module; }

// ---------------------------------------------------------------- sums and pieces

GradedModule direct_sum(const std::vector<GradedModule>& parts) {
  if (parts.empty()) throw std::invalid_argument("direct_sum of nothing");
  const RingPtr& ring = parts[0].ring_ptr();
  std::size_t total = 0;
  for (const auto& p : parts) {
    if (p.ring_ptr() != ring && !p.ring().ambient().same_as(ring->ambient()))
      throw std::invalid_argument("direct_sum over different rings");
    total += p.num_generators();
  }
  std::vector<RationalDegree> degs;
  PolyMatrix rows;
  std::size_t offset = 0;
  for (const auto& p : parts) {
    degs.insert(degs.end(), p.generator_degrees().begin(), p.generator_degrees().end());
    for (const auto& r : p.relations()) {
      std::vector<Polynomial> row(total);
      for (std::size_t j = 0; j < r.size(); ++j) row[offset + j] = r[j];
      rows.push_back(std::move(row));
    }
    offset += p.num_generators();
  }
  return GradedModule(ring, std::move(degs), std::move(rows));
}

GradedModule direct_sum(const GradedModule& a, const GradedModule& b) { return direct_sum({a, b}); }

std::vector<DegreeClassPiece> split_by_degree_class(const GradedModule& m) {
  int g = 0;
  for (int w : m.ring().ambient().weights()) g = std::gcd(g, w);
  if (g == 0) g = 1;
  auto cls = [&](RationalDegree d) { return (d / g).frac(); };
  std::map<RationalDegree, std::vector<std::size_t>> groups;
  for (std::size_t j = 0; j < m.num_generators(); ++j) groups[cls(m.generator_degrees()[j])].push_back(j);
  std::vector<DegreeClassPiece> out;
  if (groups.size() <= 1) {
    std::vector<std::size_t> all(m.num_generators());
    std::iota(all.begin(), all.end(), 0);
    out.push_back({m, all});
    return out;
  }
  for (auto& [key, idx] : groups) {
    std::vector<std::int64_t> local(m.num_generators(), -1);
    std::vector<RationalDegree> degs;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      local[idx[i]] = std::int64_t(i);
      degs.push_back(m.generator_degrees()[idx[i]]);
    }
    PolyMatrix rows;
    for (std::size_t r = 0; r < m.relations().size(); ++r) {
      if (cls(m.relation_degrees()[r]) != key) continue;
      std::vector<Polynomial> row(idx.size());
      for (std::size_t j = 0; j < m.num_generators(); ++j) {
        if (m.relations()[r][j].is_zero()) continue;
        if (local[j] < 0) throw std::logic_error("relation crosses degree classes");
        row[std::size_t(local[j])] = m.relations()[r][j];
      }
      rows.push_back(std::move(row));
    }
    out.push_back({GradedModule(m.ring_ptr(), std::move(degs), std::move(rows)), idx});
  }
  return out;
}

}  // namespace fpush
