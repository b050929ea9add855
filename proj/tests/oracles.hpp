#pragma once

// Reference computations that share no code path with the library.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "fpush/polynomial.hpp"

namespace oracle {

using fpush::Coeff;
using fpush::Monomial;
using fpush::Polynomial;
using fpush::PolyRing;

/// Sparse polynomial matrix: row -> (column -> entry).
using SparseMatrix = std::vector<std::map<std::size_t, std::map<Monomial, Coeff>>>;

/// *(s m_a) = sum c *(x^u m_b) with e + a = q u + b, m_a = prod x_k^{a_k}, a = sum a_k q^k.
inline SparseMatrix frobenius_matrix(const PolyRing& T, const Polynomial& s, std::uint64_t q) {
  const std::size_t d = T.nvars();
  std::size_t n = 1;
  for (std::size_t k = 0; k < d; ++k) n *= q;
  SparseMatrix out(n);
  const auto& F = T.field();
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<std::uint64_t> digits(d);
    for (std::size_t k = 0, r = a; k < d; ++k, r /= q) digits[k] = r % q;
    for (const auto& t : s.terms()) {
      Monomial u;
      std::size_t b = 0, place = 1;
      for (std::size_t k = 0; k < d; ++k, place *= q) {
        std::uint64_t e = t.mono[k] + digits[k];
        u[k] = std::uint16_t(e / q);
        b += (e % q) * place;
      }
      auto& c = out[a][b][u];
      c = F.add(c, t.coeff);
    }
  }
  return out;
}

inline Polynomial to_poly(const std::map<Monomial, Coeff>& m) {
  std::vector<fpush::Term> t;
  for (const auto& [mono, c] : m)
    if (c) t.push_back({mono, c});
  return Polynomial(std::move(t));
}

inline SparseMatrix product(const PolyRing& T, const SparseMatrix& a, const SparseMatrix& b) {
  const auto& F = T.field();
  SparseMatrix out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (const auto& [k, p] : a[i])
      for (const auto& [j, r] : b[k])
        for (const auto& [m1, c1] : p)
          for (const auto& [m2, c2] : r) {
            auto& c = out[i][j][m1 * m2];
            c = F.add(c, F.mul(c1, c2));
          }
  return out;
}

/// Entry (i, j) of a sparse matrix as a polynomial.
inline Polynomial entry(const SparseMatrix& a, std::size_t i, std::size_t j) {
  auto it = a[i].find(j);
  return it == a[i].end() ? Polynomial() : to_poly(it->second);
}

inline bool persymmetric(const fpush::PolyMatrix& a) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!(a[i][j] == a[n - 1 - j][n - 1 - i])) return false;
  return true;
}

/// Whether f^{p-1} has a monomial with every exponent below p.
inline bool fedder(const PolyRing& T, const Polynomial& f) {
  const auto p = T.characteristic();
  for (const auto& t : T.pow(f, p - 1).terms()) {
    bool small = true;
    for (std::size_t k = 0; k < T.nvars(); ++k) small = small && t.mono[k] < p;
    if (small) return true;
  }
  return false;
}

using Point = std::vector<int>;

/// An affine semigroup H in Z^r whose generators span Z^r as a group, with a
/// grading positive on the generators. k[H] models a toric ring; monomial
/// ideals are H-modules inside Z^r.
class Semigroup {
 public:
  Semigroup(std::vector<Point> gens, Point grading) : gens_(std::move(gens)), grading_(std::move(grading)) {}

  std::size_t rank() const { return grading_.size(); }
  const std::vector<Point>& generators() const { return gens_; }

  int degree(const Point& v) const {
    int d = 0;
    for (std::size_t i = 0; i < v.size(); ++i) d += grading_[i] * v[i];
    return d;
  }

  bool contains(const Point& v) const {
    int d = degree(v);
    if (d < 0) return false;
    if (d == 0) return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
    auto it = memo_.find(v);
    if (it != memo_.end()) return it->second;
    bool in = false;
    for (const auto& g : gens_) {
      Point w = v;
      for (std::size_t i = 0; i < w.size(); ++i) w[i] -= g[i];
      if (contains(w)) {
        in = true;
        break;
      }
    }
    memo_[v] = in;
    return in;
  }

 private:
  std::vector<Point> gens_;
  Point grading_;
  mutable std::map<Point, bool> memo_;
};

/// An H-module given by generators: the union of g + H.
struct MonomialModule {
  std::vector<Point> gens;
};

inline bool member(const Semigroup& H, const MonomialModule& m, const Point& v) {
  for (const auto& g : m.gens) {
    Point w = v;
    for (std::size_t i = 0; i < w.size(); ++i) w[i] -= g[i];
    if (H.contains(w)) return true;
  }
  return false;
}

/// Minimal generators of {v : pred(v)} found in the box [-bound, bound]^r,
/// translated so the smallest one is the origin.
inline std::vector<Point> canonical_form(const Semigroup& H, const std::function<bool(const Point&)>& pred,
                                         int bound) {
  std::vector<Point> mins;
  const std::size_t r = H.rank();
  Point v(r, -bound);
  while (true) {
    if (pred(v)) {
      bool minimal = true;
      for (const auto& g : H.generators()) {
        Point w = v;
        for (std::size_t i = 0; i < r; ++i) w[i] -= g[i];
        if (pred(w)) {
          minimal = false;
          break;
        }
      }
      if (minimal) mins.push_back(v);
    }
    std::size_t i = 0;
    while (i < r && v[i] == bound) v[i++] = -bound;
    if (i == r) break;
    ++v[i];
  }
  std::sort(mins.begin(), mins.end());
  if (!mins.empty()) {
    Point base = mins.front();
    for (auto& p : mins)
      for (std::size_t i = 0; i < r; ++i) p[i] -= base[i];
  }
  return mins;
}

inline std::vector<Point> canonical_form(const Semigroup& H, const MonomialModule& m, int bound) {
  return canonical_form(H, [&](const Point& v) { return member(H, m, v); }, bound);
}

/// F_* of an H-module splits over residue classes c of Z^r / q Z^r into the
/// modules {v : c + q v in M}. Returns canonical form -> multiplicity.
inline std::map<std::vector<Point>, int> pushforward_classes(const Semigroup& H, const MonomialModule& m, int q,
                                                             int bound) {
  std::map<std::vector<Point>, int> out;
  const std::size_t r = H.rank();
  Point c(r, 0);
  while (true) {
    auto form = canonical_form(
        H,
        [&](const Point& v) {
          Point w(r);
          for (std::size_t i = 0; i < r; ++i) w[i] = c[i] + q * v[i];
          return member(H, m, w);
        },
        bound);
    ++out[form];
    std::size_t i = 0;
    while (i < r && c[i] == q - 1) c[i++] = 0;
    if (i == r) break;
    ++c[i];
  }
  return out;
}

/// Closure of {seed} under F_* on canonical forms.
inline std::set<std::vector<Point>> net(const Semigroup& H, const MonomialModule& seed, int q, int bound) {
  std::set<std::vector<Point>> seen{canonical_form(H, seed, bound)};
  std::vector<std::vector<Point>> queue(seen.begin(), seen.end());
  while (!queue.empty()) {
    auto form = queue.back();
    queue.pop_back();
    for (const auto& [next, mult] : pushforward_classes(H, MonomialModule{form}, q, bound))
      if (seen.insert(next).second) queue.push_back(next);
  }
  return seen;
}

}  // namespace oracle
