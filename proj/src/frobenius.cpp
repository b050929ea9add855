#include "fpush/frobenius.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

#include "fpush/field.hpp"

namespace fpush {

namespace {

void check_q(const PolyRing& ring, std::uint64_t q) {
  if (log_p(q, ring.characteristic()) < 1)
    throw std::invalid_argument("q = " + std::to_string(q) + " is not a positive power of p = " +
                                std::to_string(ring.characteristic()));
}

// Target index and entry monomial for x^gamma * m_a.
std::pair<std::uint64_t, Monomial> shift_index(const Monomial& gamma, std::uint64_t a, std::uint64_t q, std::size_t d) {
  std::uint64_t target = 0, place = 1;
  Monomial quot;
  for (std::size_t k = 0; k < d; ++k) {
    std::uint64_t c = gamma.e[k] + a % q;
    a /= q;
    target += (c % q) * place;
    quot.e[k] = std::uint16_t(c / q);
    place *= q;
  }
  return {target, quot};
}

}  // namespace

std::uint64_t checked_power(std::uint64_t q, std::size_t d) {
  std::uint64_t n = 1;
  for (std::size_t k = 0; k < d; ++k) {
    if (n > (std::uint64_t(1) << 40) / q) throw std::overflow_error("q^d too large");
    n *= q;
  }
  return n;
}

QadicIndex qadic_digits(std::uint64_t a, std::uint64_t q, std::size_t d) {
  if (q < 2) throw std::invalid_argument("q must be at least 2");
  if (a >= checked_power(q, d)) throw std::out_of_range("index " + std::to_string(a) + " is not below q^d");
  QadicIndex out{a, {}};
  for (std::size_t k = 0; k < d; ++k) {
    out.digits.push_back(a % q);
    a /= q;
  }
  return out;
}

std::vector<Monomial> standard_basis(std::uint64_t q, std::size_t d) {
  const std::uint64_t n = checked_power(q, d);
  std::vector<Monomial> out;
  out.reserve(n);
  for (std::uint64_t a = 0; a < n; ++a) {
    Monomial m;
    std::uint64_t r = a;
    for (std::size_t k = 0; k < d; ++k) {
      m.e[k] = std::uint16_t(r % q);
      r /= q;
    }
    out.push_back(m);
  }
  return out;
}

PolyMatrix mult_matrix(const PolyRing& ring, const Polynomial& s, std::uint64_t q) {
  check_q(ring, q);
  ring.check_arity(s);
  const std::size_t d = ring.nvars();
  const std::uint64_t n = checked_power(q, d);
  std::vector<std::map<std::uint64_t, std::vector<Term>>> rows(n);
  for (const auto& t : s.terms())
    for (std::uint64_t a = 0; a < n; ++a) {
      auto [b, mono] = shift_index(t.mono, a, q, d);
      rows[a][b].push_back({mono, t.coeff});
    }
  PolyMatrix out(n, std::vector<Polynomial>(n));
  for (std::uint64_t a = 0; a < n; ++a)
    for (auto& [b, terms] : rows[a]) {
      // Distinct monomials of s give distinct entry monomials in a fixed cell.
      Polynomial acc;
      for (const auto& t : terms) acc = ring.add(acc, Polynomial::monomial(t.mono, t.coeff));
      out[a][b] = acc;
    }
  return out;
}

bool is_persymmetric(const PolyMatrix& a) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) return false;
    for (std::size_t j = 0; j < n; ++j)
      if (a[i][j] != a[n - 1 - j][n - 1 - i]) return false;
  }
  return true;
}

PolyMatrix nabla_matrix(const PolyRing& ring, const PolyMatrix& a, std::uint64_t q) {
  check_q(ring, q);
  const std::uint64_t n = checked_power(q, ring.nvars());
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  PolyMatrix out(rows * n, std::vector<Polynomial>(cols * n));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      if (a[i][j].is_zero()) continue;
      auto block = mult_matrix(ring, a[i][j], q);
      for (std::uint64_t r = 0; r < n; ++r)
        for (std::uint64_t c = 0; c < n; ++c) out[i * n + r][j * n + c] = std::move(block[r][c]);
    }
  return out;
}

namespace {

struct AmbientPresentation {
  PolyMatrix rows;
  std::vector<RationalDegree> degrees;
};

AmbientPresentation ambient_presentation(const GradedModule& m) {
  AmbientPresentation p;
  FreeModule f = m.free_module();
  for (const auto& v : m.ambient_relations()) {
    if (v.empty()) continue;
    p.rows.push_back(f.to_row(v));
    p.rows.back().resize(m.num_generators());
    p.degrees.push_back(f.degree(v));
  }
  return p;
}

}  // namespace

PushforwardMatrix pushforward_matrix(const GradedModule& m, std::uint64_t q) {
  const auto& T = m.ring().ambient();
  check_q(T, q);
  auto amb = ambient_presentation(m);
  PushforwardMatrix out;
  out.q = q;
  out.source = amb.rows;
  out.matrix = nabla_matrix(T, amb.rows, q);
  auto basis = standard_basis(q, T.nvars());
  for (const auto& d : m.generator_degrees())
    for (const auto& b : basis) out.generator_degrees.push_back((d + RationalDegree(T.degree(b))) / std::int64_t(q));
  for (const auto& d : amb.degrees)
    for (const auto& b : basis) out.relation_degrees.push_back((d + RationalDegree(T.degree(b))) / std::int64_t(q));
  return out;
}

std::vector<GradedModule> pushforward_pieces(const GradedModule& m, std::uint64_t q) {
  const auto& T = m.ring().ambient();
  check_q(T, q);
  GradedModule mm = minimal_presentation(m);
  auto amb = ambient_presentation(mm);
  const std::size_t d = T.nvars();
  const std::uint64_t n = checked_power(q, d);
  const auto basis = standard_basis(q, d);
  int g = 0;
  for (int w : T.weights()) g = std::gcd(g, w);
  auto cls = [&](RationalDegree x) { return (x / g).frac(); };

  // Generator (j, a) -> (class, local index).
  struct Slot {
    RationalDegree cls;
    std::size_t local;
  };
  std::map<RationalDegree, std::vector<RationalDegree>> class_degrees;
  std::vector<Slot> slot(mm.num_generators() * n);
  for (std::size_t j = 0; j < mm.num_generators(); ++j)
    for (std::uint64_t a = 0; a < n; ++a) {
      RationalDegree deg = (mm.generator_degrees()[j] + RationalDegree(T.degree(basis[a]))) / std::int64_t(q);
      auto& list = class_degrees[cls(deg)];
      slot[j * n + a] = {cls(deg), list.size()};
      list.push_back(deg);
    }
  std::map<RationalDegree, PolyMatrix> class_rows;
  for (std::size_t r = 0; r < amb.rows.size(); ++r) {
    const auto& row = amb.rows[r];
    for (std::uint64_t a = 0; a < n; ++a) {
      RationalDegree deg = (amb.degrees[r] + RationalDegree(T.degree(basis[a]))) / std::int64_t(q);
      RationalDegree c = cls(deg);
      std::vector<Polynomial> out(class_degrees[c].size());
      for (std::size_t j = 0; j < row.size(); ++j)
        for (const auto& t : row[j].terms()) {
          auto [b, mono] = shift_index(t.mono, a, q, d);
          const Slot& s = slot[j * n + b];
          if (s.cls != c) throw std::logic_error("pushforward relation crosses degree classes");
          out[s.local] = T.add(out[s.local], Polynomial::monomial(mono, t.coeff));
        }
      class_rows[c].push_back(std::move(out));
    }
  }
  std::vector<GradedModule> pieces;
  for (auto& [c, degs] : class_degrees) {
    GradedModule piece(mm.ring_ptr(), degs, std::move(class_rows[c]));
    GradedModule min = minimal_presentation(piece);
    if (min.num_generators() > 0) pieces.push_back(std::move(min));
  }
  return pieces;
}

GradedModule pushforward(const GradedModule& m, std::uint64_t q) {
  auto pieces = pushforward_pieces(m, q);
  if (pieces.empty()) return zero_module(m.ring_ptr());
  if (pieces.size() == 1) return pieces[0];
  return direct_sum(pieces);
}

GradedModule iterate_pushforward(const GradedModule& m, unsigned n) {
  GradedModule cur = minimal_presentation(m);
  for (unsigned k = 0; k < n; ++k) cur = pushforward(cur, m.ring().characteristic());
  return cur;
}

bool conjugation_check(const PolyRing& ring, const PolyMatrix& a, std::uint64_t q) {
  const std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw std::invalid_argument("conjugation_check needs a square matrix");
  PolyMatrix at(n, std::vector<Polynomial>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) at[i][j] = a[j][i];
  auto lhs = nabla_matrix(ring, at, q);
  auto rhs = nabla_matrix(ring, a, q);
  const std::uint64_t b = checked_power(q, ring.nvars());
  const std::size_t N = lhs.size();
  auto P = [&](std::size_t i) { return (i / b) * b + (b - 1 - i % b); };
  // (P L P^{-1})_{ij} = L_{P(i) P(j)} since P is a symmetric permutation.
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      if (lhs[P(i)][P(j)] != rhs[j][i]) return false;
  return true;
}

FiniteLengthModule pushforward_fl(const FiniteLengthModule& m, std::uint64_t q) {
  const auto& F = m.ring->field();
  if (log_p(q, F.characteristic()) < 1) throw std::invalid_argument("q is not a power of p");
  FiniteLengthModule out;
  out.ring = m.ring;
  for (const auto& d : m.degrees) out.degrees.push_back(d / std::int64_t(q));
  for (const auto& a : m.action) {
    Mat p = Mat::identity(a.rows());
    for (std::uint64_t k = 0; k < q; ++k) p = linalg::mul(F, p, a);
    out.action.push_back(std::move(p));
  }
  return out;
}

FiniteLengthModule tf_functor_fl(const FiniteLengthModule& m, std::uint64_t q) {
  return matlis_dual_fl(pushforward_fl(matlis_dual_fl(m), q));
}

}  // namespace fpush
