#include "fpush/splitting.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <stdexcept>
#include <thread>

#include "fpush/frobenius.hpp"
#include "fpush/homology.hpp"

namespace fpush {

namespace {

std::vector<Coeff> random_coeffs(const PrimeField& F, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<Coeff> dist(0, F.characteristic() - 1);
  std::vector<Coeff> c(n);
  for (auto& x : c) x = dist(rng);
  return c;
}

Mat combine(const PrimeField& F, const std::vector<Mat>& mats, std::span<const Coeff> c, std::size_t n) {
  Mat a(n, n);
  for (std::size_t k = 0; k < mats.size(); ++k)
    if (c[k]) a = linalg::add(F, a, linalg::scale(F, mats[k], c[k]));
  return a;
}

bool is_free_rank_one(const GradedModule& m) { return m.num_generators() == 1 && m.relations().empty(); }

// Places the columns of `map` (written in piece generators) into the full module's generators.
PolyMatrix widen_columns(const PolyMatrix& map, const std::vector<std::size_t>& gens, std::size_t n) {
  PolyMatrix out;
  for (const auto& row : map) {
    std::vector<Polynomial> r(n);
    for (std::size_t j = 0; j < row.size(); ++j) r[gens[j]] = row[j];
    out.push_back(std::move(r));
  }
  return out;
}

// Rows for generators outside the piece are zero.
PolyMatrix widen_rows(const PolyMatrix& map, const std::vector<std::size_t>& gens, std::size_t n, std::size_t cols) {
  PolyMatrix out(n, std::vector<Polynomial>(cols));
  for (std::size_t i = 0; i < gens.size(); ++i) out[gens[i]] = map[i];
  return out;
}

// Composition pairing test for a source with local End: some basis pair
// (phi: a -> b, psi: b -> a) with invertible constant part of the composite.
bool pairing_split(const GradedModule& a, const GradedModule& b, PolyMatrix& phi, PolyMatrix& psi) {
  const auto& F = a.ring().field();
  HomSpace h1(a, b, 0);
  if (h1.dim() == 0) return false;
  HomSpace h2(b, a, 0);
  if (h2.dim() == 0) return false;
  std::vector<Mat> c1, c2;
  for (std::size_t i = 0; i < h1.dim(); ++i) c1.push_back(h1.constant_part(h1.basis_coords().row(i)));
  for (std::size_t j = 0; j < h2.dim(); ++j) c2.push_back(h2.constant_part(h2.basis_coords().row(j)));
  for (std::size_t i = 0; i < c1.size(); ++i) {
    if (c1[i].is_zero()) continue;
    for (std::size_t j = 0; j < c2.size(); ++j)
      if (linalg::is_invertible(F, linalg::mul(F, c1[i], c2[j]))) {
        phi = h1.basis()[i];
        psi = h2.basis()[j];
        return true;
      }
  }
  return false;
}

// Random search for a map a -> b with invertible constant part (an isomorphism
// when both are minimally presented with equal Hilbert series).
std::optional<PolyMatrix> random_iso(const GradedModule& a, const GradedModule& b, std::mt19937_64& rng, int tries) {
  const auto& F = a.ring().field();
  HomSpace h(a, b, 0);
  if (h.dim() == 0) return std::nullopt;
  for (int t = 0; t < tries; ++t) {
    auto c = random_coeffs(F, h.dim(), rng);
    Mat coords(1, h.basis_coords().cols());
    for (std::size_t k = 0; k < h.dim(); ++k)
      for (std::size_t j = 0; j < coords.cols(); ++j)
        coords(0, j) = F.add(coords(0, j), F.mul(c[k], h.basis_coords()(k, j)));
    if (linalg::is_invertible(F, h.constant_part(coords.row(0)))) return h.combination(coords.row(0));
  }
  return std::nullopt;
}

std::optional<RationalDegree> hs_shift(const GradedModule& m, const GradedModule& n) {
  if (m.num_generators() != n.num_generators()) return std::nullopt;
  RationalDegree s;
  if (!m.hilbert_series().equal_up_to_shift(n.hilbert_series(), &s)) return std::nullopt;
  return -s;
}

// Isomorphism test for minimally presented modules with local End(m).
std::optional<PolyMatrix> iso_local(const GradedModule& m, const GradedModule& n, std::mt19937_64& rng) {
  if (m.num_generators() != n.num_generators() || !(m.hilbert_series() == n.hilbert_series())) return std::nullopt;
  if (auto r = random_iso(m, n, rng, 8)) return r;
  PolyMatrix phi, psi;
  if (pairing_split(m, n, phi, psi)) return phi;
  return std::nullopt;
}

}  // namespace

PolyMatrix matrix_sum(const PolyRing& ring, const PolyMatrix& a, const PolyMatrix& b) {
  if (a.empty()) return b;
  PolyMatrix out = a;
  for (std::size_t i = 0; i < b.size(); ++i) {
    out[i].resize(std::max(out[i].size(), b[i].size()));
    for (std::size_t j = 0; j < b[i].size(); ++j) out[i][j] = ring.add(out[i][j], b[i][j]);
  }
  return out;
}

// ---------------------------------------------------------------- EndAlgebra

EndAlgebra::EndAlgebra(const GradedModule& m) : m_(m), ctx_(std::make_shared<ModuleContext>(m)) {
  for (const auto& d : m_.generator_degrees())
    if (std::find(degrees_.begin(), degrees_.end(), d) == degrees_.end()) degrees_.push_back(d);
  std::sort(degrees_.begin(), degrees_.end());
  for (const auto& d : degrees_) {
    block_offset_.push_back(wdim_);
    wdim_ += ctx_->component(d).dim();
  }
  for (std::size_t j = 0; j < m_.num_generators(); ++j) {
    auto b = std::size_t(std::lower_bound(degrees_.begin(), degrees_.end(), m_.generator_degrees()[j]) - degrees_.begin());
    auto k = ctx_->component(degrees_[b]).index(Monomial{}, std::uint32_t(j));
    if (k < 0) throw std::invalid_argument("EndAlgebra needs a minimal presentation");
    gen_pos_.push_back(block_offset_[b] + std::size_t(k));
  }
  HomSpace h(m_, m_, 0);
  basis_ = h.basis();
  rep_vectors_ = Mat(0, wdim_ * wdim_);
  for (const auto& b : basis_) {
    rep_.push_back(rep(b));
    rep_vectors_.append_row(rep_.back().data());
  }
}

Mat EndAlgebra::rep(const PolyMatrix& map) const {
  const FreeModule& free = ctx_->free();
  std::vector<ModVec> images;
  for (std::size_t j = 0; j < m_.num_generators(); ++j) {
    auto row = map[j];
    row.resize(m_.num_generators());
    images.push_back(ctx_->reduce(free.from_row(row)));
  }
  Mat w(wdim_, wdim_);
  for (std::size_t b = 0; b < degrees_.size(); ++b) {
    const auto& comp = ctx_->component(degrees_[b]);
    for (std::size_t i = 0; i < comp.dim(); ++i) {
      const auto& t = comp.basis()[i];
      auto c = comp.coords(ctx_->multiply(Polynomial::monomial(t.mono), images[t.comp]));
      for (std::size_t k = 0; k < c.size(); ++k) w(block_offset_[b] + i, block_offset_[b] + k) = c[k];
    }
  }
  return w;
}

PolyMatrix EndAlgebra::map(const Mat& w) const {
  const FreeModule& free = ctx_->free();
  PolyMatrix out;
  for (std::size_t j = 0; j < m_.num_generators(); ++j) {
    auto b = std::size_t(std::lower_bound(degrees_.begin(), degrees_.end(), m_.generator_degrees()[j]) - degrees_.begin());
    const auto& comp = ctx_->component(degrees_[b]);
    auto row = w.row(gen_pos_[j]).subspan(block_offset_[b], comp.dim());
    auto r = free.to_row(free.normalize(comp.element(row)));
    r.resize(m_.num_generators());
    out.push_back(std::move(r));
  }
  return out;
}

Mat EndAlgebra::constant_part(const Mat& w) const {
  const std::size_t n = m_.num_generators();
  Mat c(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t l = 0; l < n; ++l)
      if (m_.generator_degrees()[j] == m_.generator_degrees()[l]) c(j, l) = w(gen_pos_[j], gen_pos_[l]);
  return c;
}

std::vector<Coeff> EndAlgebra::coords(const Mat& w) const {
  std::vector<Coeff> x;
  if (!linalg::solve_left(m_.ring().field(), rep_vectors_, w.data(), x))
    throw std::invalid_argument("matrix is not an endomorphism");
  return x;
}

std::vector<Coeff> EndAlgebra::product(std::size_t i, std::size_t j) const {
  return coords(linalg::mul(m_.ring().field(), rep_[i], rep_[j]));
}

algebra::Verdict corner_is_local(const EndAlgebra& e, const Mat& idem, std::mt19937_64& rng) {
  const auto& F = e.module().ring().field();
  Mat ebar = e.constant_part(idem);
  Mat ve = linalg::row_basis(F, ebar);
  const std::size_t r = ve.rows();
  if (r == 0) return algebra::Verdict::no;
  std::vector<std::size_t> piv;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < ve.cols(); ++j)
      if (ve(i, j)) {
        piv.push_back(j);
        break;
      }
  Mat vecs(0, r * r);
  for (const auto& w : e.rep_basis()) {
    Mat c = linalg::mul(F, linalg::mul(F, ebar, e.constant_part(w)), ebar);
    Mat img = linalg::mul(F, ve, c);
    Mat x(r, r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) x(i, j) = img(i, piv[j]);
    vecs.append_row(x.data());
  }
  Mat basis = linalg::row_basis(F, vecs);
  std::vector<Mat> span;
  for (std::size_t k = 0; k < basis.rows(); ++k) {
    Mat x(r, r);
    for (std::size_t i = 0; i < r * r; ++i) x(i / r, i % r) = basis(k, i);
    span.push_back(std::move(x));
  }
  return algebra::is_local(F, span, r, rng);
}

algebra::Verdict is_local(const EndAlgebra& e, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return corner_is_local(e, Mat::identity(e.rep_dim()), rng);
}

IdempotentSet primitive_idempotents(const EndAlgebra& e, std::uint64_t seed, int tries) {
  const auto& F = e.module().ring().field();
  const std::size_t n = e.rep_dim();
  std::mt19937_64 rng(seed);
  IdempotentSet out;
  std::vector<Mat> stack{Mat::identity(n)};
  while (!stack.empty()) {
    Mat idem = std::move(stack.back());
    stack.pop_back();
    if (corner_is_local(e, idem, rng) == algebra::Verdict::yes) {
      out.idempotents.push_back(std::move(idem));
      out.primitive.push_back(true);
      continue;
    }
    bool split = false;
    for (int t = 0; t < tries && !split; ++t) {
      Mat x = combine(F, e.rep_basis(), random_coeffs(F, e.dim(), rng), n);
      Mat a = linalg::mul(F, linalg::mul(F, idem, x), idem);
      auto parts = algebra::fitting_split(F, a, idem, rng);
      if (parts.size() < 2) continue;
      for (auto it = parts.rbegin(); it != parts.rend(); ++it) stack.push_back(std::move(*it));
      split = true;
    }
    if (!split) {
      out.idempotents.push_back(std::move(idem));
      out.primitive.push_back(false);
    }
  }
  return out;
}

// ---------------------------------------------------------------- decomposition

std::size_t Decomposition::free_rank() const {
  std::size_t r = 0;
  for (const auto& c : classes)
    if (c.free_rank_one) r += c.multiplicity();
  return r;
}

namespace {

// Summands of a minimally presented module, maps relative to its generators.
std::vector<Summand> split_minimal(const GradedModule& m, std::uint64_t seed, bool& complete) {
  const auto& T = m.ring().ambient();
  EndAlgebra end(m);
  auto idems = primitive_idempotents(end, seed);
  std::vector<Summand> out;
  if (idems.idempotents.size() == 1) {
    complete = complete && idems.primitive[0];
    out.push_back({m, identity_matrix(m.num_generators()), identity_matrix(m.num_generators()), idems.primitive[0]});
    return out;
  }
  const std::size_t w = end.rep_dim();
  for (std::size_t k = 0; k < idems.idempotents.size(); ++k) {
    const Mat& e = idems.idempotents[k];
    PolyMatrix kill = end.map(linalg::sub(m.ring().field(), Mat::identity(w), e));
    PolyMatrix rels = m.relations();
    for (auto& row : kill)
      if (std::any_of(row.begin(), row.end(), [](const Polynomial& p) { return !p.is_zero(); })) rels.push_back(row);
    auto change = minimal_presentation_with_maps(GradedModule(m.ring_ptr(), m.generator_degrees(), rels));
    Summand s;
    s.module = change.module;
    s.projection = change.to_new;
    s.inclusion = matrix_product(T, change.to_old, end.map(e));
    s.indecomposable = idems.primitive[k];
    complete = complete && s.indecomposable;
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

Decomposition decompose(const GradedModule& m, std::uint64_t seed) {
  const auto& T = m.ring().ambient();
  Decomposition out;
  out.module = m;
  auto change = minimal_presentation_with_maps(m);
  const GradedModule& mm = change.module;
  const std::size_t n = mm.num_generators();
  if (n == 0) {
    out.verified = true;
    return out;
  }
  for (const auto& piece : split_by_degree_class(mm)) {
    for (auto& s : split_minimal(piece.module, seed, out.complete)) {
      PolyMatrix incl = widen_columns(s.inclusion, piece.generators, n);
      PolyMatrix proj = widen_rows(s.projection, piece.generators, n, s.module.num_generators());
      s.inclusion = matrix_product(T, incl, change.to_old);
      s.projection = matrix_product(T, change.to_new, proj);
      out.summands.push_back(std::move(s));
    }
  }

  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < out.summands.size(); ++i) {
    const auto& s = out.summands[i];
    bool placed = false;
    for (auto& c : out.classes) {
      auto shift = hs_shift(s.module, c.representative);
      if (!shift) continue;
      if (!iso_local(s.module, c.representative.shifted(*shift), rng)) continue;
      c.members.push_back(i);
      c.shifts.push_back(*shift);
      placed = true;
      break;
    }
    if (!placed) {
      SummandClass c;
      c.representative = s.module;
      c.members.push_back(i);
      c.shifts.push_back(0);
      c.free_rank_one = is_free_rank_one(s.module);
      out.classes.push_back(std::move(c));
    }
  }

  PolyMatrix total;
  HilbertSeries hs;
  bool ok = true;
  for (const auto& s : out.summands) {
    total = matrix_sum(T, total, matrix_product(T, s.projection, s.inclusion));
    hs = hs.is_zero() ? s.module.hilbert_series() : hs + s.module.hilbert_series();
    ok = ok && maps_equal(s.module, matrix_product(T, s.inclusion, s.projection), identity_matrix(s.module.num_generators()));
  }
  ok = ok && maps_equal(m, total, identity_matrix(m.num_generators()));
  ok = ok && hs == m.hilbert_series();
  out.verified = ok;
  return out;
}

// ---------------------------------------------------------------- isomorphism and summands

IsoResult is_isomorphic(const GradedModule& m, const GradedModule& n, std::uint64_t seed) {
  const auto& T = m.ring().ambient();
  IsoResult out;
  auto cm = minimal_presentation_with_maps(m);
  auto cn = minimal_presentation_with_maps(n);
  const GradedModule &mm = cm.module, &nn = cn.module;
  if (mm.num_generators() == 0 || nn.num_generators() == 0) {
    out.isomorphic = mm.num_generators() == nn.num_generators();
    return out;
  }
  auto shift = hs_shift(mm, nn);
  if (!shift) return out;
  out.shift = *shift;
  GradedModule ns = nn.shifted(*shift);
  std::mt19937_64 rng(seed);
  auto lift = [&](const PolyMatrix& f) {
    return matrix_product(T, matrix_product(T, cm.to_new, f), cn.to_old);
  };
  if (auto f = random_iso(mm, ns, rng, 16)) {
    out.isomorphic = true;
    out.map = lift(*f);
    return out;
  }
  auto dm = decompose(mm, seed);
  auto dn = decompose(ns, seed);
  if (!dm.complete || !dn.complete) {
    out.decided = false;
    return out;
  }
  if (dm.summands.size() != dn.summands.size()) return out;
  std::vector<bool> used(dn.summands.size(), false);
  PolyMatrix phi;
  for (const auto& a : dm.summands) {
    bool matched = false;
    for (std::size_t j = 0; j < dn.summands.size() && !matched; ++j) {
      if (used[j]) continue;
      const auto& b = dn.summands[j];
      if (auto f = iso_local(a.module, b.module, rng)) {
        used[j] = true;
        matched = true;
        phi = matrix_sum(T, phi, matrix_product(T, a.projection, matrix_product(T, *f, b.inclusion)));
      }
    }
    if (!matched) return out;
  }
  out.isomorphic = true;
  out.map = lift(phi);
  return out;
}

SummandTest is_direct_summand(const GradedModule& q, const GradedModule& m, std::uint64_t seed) {
  const auto& T = m.ring().ambient();
  SummandTest out;
  GradedModule qq = minimal_presentation(q);
  if (qq.num_generators() == 0) {
    out.is_summand = true;
    return out;
  }
  auto cm = minimal_presentation_with_maps(m);
  const GradedModule& mm = cm.module;
  auto dq = decompose(qq, seed);

  if (dq.summands.size() > 1 || !dq.complete) {
    // Compare Krull–Schmidt multiplicities under a common shift.
    auto dm = decompose(mm, seed);
    out.decided = dq.complete && dm.complete;
    std::mt19937_64 rng(seed);
    const auto& first = dq.summands.front().module;
    std::vector<RationalDegree> candidates;
    for (const auto& s : dm.summands) {
      auto sh = hs_shift(first, s.module);
      if (sh && std::find(candidates.begin(), candidates.end(), *sh) == candidates.end()) candidates.push_back(*sh);
    }
    for (const auto& a : candidates) {
      std::vector<bool> used(dm.summands.size(), false);
      bool all = true;
      for (const auto& s : dq.summands) {
        bool matched = false;
        GradedModule ss = s.module.shifted(a);
        for (std::size_t j = 0; j < dm.summands.size() && !matched; ++j)
          if (!used[j] && iso_local(ss, dm.summands[j].module, rng)) used[j] = matched = true;
        if (!matched) {
          all = false;
          break;
        }
      }
      if (all) {
        out.is_summand = true;
        out.decided = true;
        out.shift = a;
        return out;
      }
    }
    return out;
  }

  for (const auto& piece : split_by_degree_class(mm)) {
    std::vector<RationalDegree> shifts;
    for (const auto& d : piece.module.generator_degrees()) {
      RationalDegree a = d - qq.generator_degrees().front();
      if (std::find(shifts.begin(), shifts.end(), a) == shifts.end()) shifts.push_back(a);
    }
    std::sort(shifts.begin(), shifts.end());
    for (const auto& a : shifts) {
      GradedModule qs = qq.shifted(a);
      PolyMatrix phi, psi;
      if (!pairing_split(qs, piece.module, phi, psi)) continue;
      EndAlgebra eq(qs);
      Mat u = eq.rep(matrix_product(T, phi, psi));
      psi = matrix_product(T, psi, eq.map(algebra::polynomial_inverse(T.field(), u)));
      if (!maps_equal(qs, matrix_product(T, phi, psi), identity_matrix(qs.num_generators())))
        throw std::logic_error("split certificate failed to verify");
      const std::size_t n = mm.num_generators();
      PolyMatrix phi_mm = widen_columns(phi, piece.generators, n);
      PolyMatrix psi_mm = widen_rows(psi, piece.generators, n, qs.num_generators());
      out.is_summand = true;
      out.shift = a;
      out.phi = matrix_product(T, phi_mm, cm.to_old);
      out.psi = matrix_product(T, cm.to_new, psi_mm);
      return out;
    }
  }
  return out;
}

SummandTest is_fsplit(const GradedModule& q, std::uint64_t q_power, std::uint64_t seed) {
  return is_direct_summand(q, pushforward(q, q_power), seed);
}

bool fedder_check(const GradedRing& ring) {
  const auto& rels = ring.relations();
  if (rels.empty()) return true;
  if (rels.size() > 1) throw std::invalid_argument("Fedder's criterion needs a hypersurface");
  const auto& T = ring.ambient();
  const std::uint32_t p = T.characteristic();
  Polynomial g = T.pow(rels.front(), p - 1);
  for (const auto& t : g.terms()) {
    bool below = true;
    for (std::size_t i = 0; i < T.nvars(); ++i)
      if (t.mono[i] >= p) below = false;
    if (below) return true;
  }
  return false;
}

// ---------------------------------------------------------------- F-nets

namespace {

std::string fingerprint(const GradedModule& m) {
  RationalDegree low = m.hilbert_series().lowest_degree();
  GradedModule n = m.shifted(-low);
  return n.hilbert_series().str() + "|" + free_resolution(n).betti_table();
}

struct NetIndex {
  std::vector<std::string> keys;

  // Index of the class isomorphic (up to shift) to s, adding it if new.
  std::size_t place(FNet& net, const GradedModule& s, std::uint64_t seed) {
    std::string key = fingerprint(s);
    for (std::size_t i = 0; i < net.classes.size(); ++i) {
      if (keys[i] != key) continue;
      auto r = is_isomorphic(s, net.classes[i], seed);
      if (!r.decided) net.complete = false;
      if (r.isomorphic) return i;
    }
    keys.push_back(key);
    net.classes.push_back(s);
    net.transitions.emplace_back();
    net.expanded.push_back(false);
    return net.classes.size() - 1;
  }
};

}  // namespace

FNet net_explore(const GradedModule& seed, int max_steps, std::uint64_t q, std::uint64_t rng_seed, int threads) {
  FNet net;
  net.seed = seed;
  net.q = q;
  NetIndex index;
  auto d0 = decompose(seed, rng_seed);
  net.complete = d0.complete;
  for (const auto& c : d0.classes) index.place(net, c.representative, rng_seed);

  std::size_t next = 0;
  while (next < net.classes.size() && net.steps < max_steps) {
    std::size_t end = std::min(net.classes.size(), next + std::size_t(max_steps - net.steps));
    std::vector<Decomposition> results(end - next);
    std::atomic<std::size_t> cursor{next};
    auto work = [&] {
      for (std::size_t i; (i = cursor.fetch_add(1)) < end;)
        results[i - next] = decompose(pushforward(net.classes[i], q), rng_seed);
    };
    const int nt = std::max(1, std::min<int>(threads, int(end - next)));
    std::vector<std::thread> pool;
    for (int t = 1; t < nt; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    for (std::size_t i = next; i < end; ++i) {
      const auto& dec = results[i - next];
      net.complete = net.complete && dec.complete;
      std::map<std::size_t, std::size_t> counts;
      for (const auto& c : dec.classes) counts[index.place(net, c.representative, rng_seed)] += c.multiplicity();
      net.transitions[i].assign(counts.begin(), counts.end());
      net.expanded[i] = true;
      ++net.steps;
    }
    next = end;
  }
  net.closed = next == net.classes.size();
  return net;
}

McmSearchResult mcm_search(const RingPtr& ring, int max_steps, std::uint64_t rng_seed, int threads) {
  McmSearchResult out;
  const int d = ring->dimension();
  GradedModule r = free_module(ring, {0});
  if (d > 3) throw PreconditionError("only rings of dimension at most three are supported");
  if (depth(r) == d) {
    McmCertificate cert;
    cert.module = r;
    cert.depth = d;
    cert.betti = free_resolution(r).betti_table();
    out.found = true;
    out.route = "regular";
    out.certificate = cert;
    out.source = r;
    return out;
  }
  if (d < 3) {
    out.found = true;
    out.route = "low-dimension";
    out.certificate = mcm_from_module(r);
    out.source = r;
    return out;
  }
  out.route = "net";
  GradedModule seed = unmixed_quotient(r).quotient;
  out.net = net_explore(seed, max_steps, ring->characteristic(), rng_seed, threads);
  for (const auto& c : out.net.classes) {
    std::int64_t h = -1;
    if (dimension(c) == 3) h = h_invariant(c);
    out.h_values.push_back(h);
    if (h >= 0 && (out.min_h < 0 || h < out.min_h)) out.min_h = h;
    if (h == 0 && !out.found) {
      out.found = true;
      out.certificate = mcm_from_module(c);
      out.source = c;
    }
  }
  return out;
}

}  // namespace fpush
