#include "fpush/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace fpush {

// ---------------------------------------------------------------- UPoly

namespace upoly {

void trim(UPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const UPoly& f) { return int(f.size()) - 1; }

UPoly add(const PrimeField& F, const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = F.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  trim(r);
  return r;
}

UPoly sub(const PrimeField& F, const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = F.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  trim(r);
  return r;
}

UPoly mul(const PrimeField& F, const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

std::pair<UPoly, UPoly> divmod(const PrimeField& F, const UPoly& a, const UPoly& b) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  UPoly r = a;
  trim(r);
  if (r.size() < b.size()) return {{}, r};
  UPoly q(r.size() - b.size() + 1, 0);
  Coeff inv_lead = F.inv(b.back());
  for (std::size_t k = r.size(); k-- >= b.size();) {
    Coeff c = F.mul(r[k], inv_lead);
    std::size_t shift = k - (b.size() - 1);
    q[shift] = c;
    if (c)
      for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] = F.sub(r[shift + j], F.mul(c, b[j]));
    if (k == 0) break;
  }
  trim(q);
  trim(r);
  return {q, r};
}

UPoly mod(const PrimeField& F, const UPoly& a, const UPoly& b) { return divmod(F, a, b).second; }

UPoly monic(const PrimeField& F, const UPoly& a) {
  if (a.empty()) return a;
  Coeff inv = F.inv(a.back());
  UPoly r = a;
  for (auto& c : r) c = F.mul(c, inv);
  return r;
}

UPoly gcd(const PrimeField& F, UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(F, a);
}

UPoly xgcd(const PrimeField& F, const UPoly& a, const UPoly& b, UPoly& s, UPoly& t) {
  UPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  trim(r0);
  trim(r1);
  while (!r1.empty()) {
    auto [q, r] = divmod(F, r0, r1);
    UPoly s2 = sub(F, s0, mul(F, q, s1));
    UPoly t2 = sub(F, t0, mul(F, q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) {
    s = {};
    t = {};
    return {};
  }
  Coeff inv = F.inv(r0.back());
  for (auto& c : s0) c = F.mul(c, inv);
  for (auto& c : t0) c = F.mul(c, inv);
  s = s0;
  t = t0;
  return monic(F, r0);
}

UPoly derivative(const PrimeField& F, const UPoly& a) {
  if (a.size() <= 1) return {};
  UPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = F.mul(a[i], F.from_int(std::int64_t(i)));
  trim(r);
  return r;
}

UPoly powmod(const PrimeField& F, UPoly base, std::uint64_t e, const UPoly& m) {
  UPoly r{1};
  r = mod(F, r, m);
  base = mod(F, base, m);
  while (e) {
    if (e & 1) r = mod(F, mul(F, r, base), m);
    e >>= 1;
    if (e) base = mod(F, mul(F, base, base), m);
  }
  return r;
}

namespace {

UPoly pth_root(const PrimeField& F, const UPoly& f) {
  const std::size_t p = F.characteristic();
  UPoly r((f.size() + p - 1) / p, 0);
  for (std::size_t i = 0; i < f.size(); i += p) r[i / p] = f[i];
  trim(r);
  return r;
}

void squarefree(const PrimeField& F, const UPoly& f, int mult, std::vector<std::pair<UPoly, int>>& out) {
  if (degree(f) < 1) return;
  const int p = int(F.characteristic());
  UPoly d = derivative(F, f);
  if (d.empty()) {
    squarefree(F, pth_root(F, f), mult * p, out);
    return;
  }
  UPoly c = gcd(F, f, d);
  UPoly w = divmod(F, f, c).first;
  int i = 1;
  while (degree(w) > 0) {
    UPoly y = gcd(F, w, c);
    UPoly z = divmod(F, w, y).first;
    if (degree(z) > 0) out.push_back({monic(F, z), i * mult});
    ++i;
    w = y;
    c = divmod(F, c, y).first;
  }
  if (degree(c) > 0) squarefree(F, pth_root(F, c), mult * p, out);
}

void equal_degree(const PrimeField& F, const UPoly& g, int d, std::mt19937_64& rng, std::vector<UPoly>& out) {
  if (degree(g) <= d) {
    out.push_back(monic(F, g));
    return;
  }
  const std::uint64_t p = F.characteristic();
  std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
  for (;;) {
    UPoly a(std::size_t(degree(g)), 0);
    for (auto& c : a) c = Coeff(dist(rng));
    trim(a);
    if (degree(a) < 1) continue;
    UPoly b;
    if (p == 2) {
      // Trace map a + a^2 + ... + a^(2^(d-1)).
      UPoly t = a, acc = a;
      for (int k = 1; k < d; ++k) {
        t = mod(F, mul(F, t, t), g);
        acc = add(F, acc, t);
      }
      b = acc;
    } else {
      // a^((p^d - 1)/2) = (a^(1 + p + ... + p^(d-1)))^((p-1)/2)
      UPoly norm{1}, ak = mod(F, a, g);
      for (int k = 0; k < d; ++k) {
        norm = mod(F, mul(F, norm, ak), g);
        if (k + 1 < d) ak = powmod(F, ak, p, g);
      }
      b = sub(F, powmod(F, norm, (p - 1) / 2, g), UPoly{1});
    }
    UPoly h = gcd(F, b, g);
    if (degree(h) > 0 && degree(h) < degree(g)) {
      equal_degree(F, h, d, rng, out);
      equal_degree(F, divmod(F, g, h).first, d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<std::pair<UPoly, int>> factor(const PrimeField& F, const UPoly& f_in, std::mt19937_64& rng) {
  UPoly f = f_in;
  trim(f);
  if (f.empty()) throw std::domain_error("factor of zero polynomial");
  std::vector<std::pair<UPoly, int>> sqf, out;
  squarefree(F, monic(F, f), 1, sqf);
  const std::uint64_t p = F.characteristic();
  for (auto& [g0, mult] : sqf) {
    UPoly g = g0;
    UPoly h{0, 1};  // x
    const UPoly x{0, 1};
    for (int i = 1; 2 * i <= degree(g); ++i) {
      h = powmod(F, h, p, g);
      UPoly common = gcd(F, sub(F, h, x), g);
      if (degree(common) > 0) {
        std::vector<UPoly> parts;
        equal_degree(F, common, i, rng, parts);
        for (auto& part : parts) out.push_back({part, mult});
        g = divmod(F, g, common).first;
        h = mod(F, h, g);
      }
    }
    if (degree(g) > 0) out.push_back({monic(F, g), mult});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace upoly

// ---------------------------------------------------------------- Mat

void Mat::append_row(std::span<const Coeff> r) {
  if (rows_ == 0 && cols_ == 0) cols_ = r.size();
  if (r.size() != cols_) throw std::invalid_argument("append_row: width mismatch");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

namespace linalg {

Mat mul(const PrimeField& F, const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
  const std::uint64_t p = F.characteristic();
  Mat r(a.rows(), b.cols());
  std::vector<std::uint64_t> acc(b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      std::uint64_t x = a(i, k);
      if (!x) continue;
      auto brow = b.row(k);
      for (std::size_t j = 0; j < brow.size(); ++j) {
        acc[j] += x * brow[j];
        if (acc[j] >= (std::uint64_t(1) << 62)) acc[j] %= p;
      }
    }
    for (std::size_t j = 0; j < acc.size(); ++j) r(i, j) = Coeff(acc[j] % p);
  }
  return r;
}

Mat add(const PrimeField& F, const Mat& a, const Mat& b) {
  Mat r = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = F.add(a(i, j), b(i, j));
  return r;
}

Mat sub(const PrimeField& F, const Mat& a, const Mat& b) {
  Mat r = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = F.sub(a(i, j), b(i, j));
  return r;
}

Mat scale(const PrimeField& F, const Mat& a, Coeff c) {
  Mat r = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = F.mul(a(i, j), c);
  return r;
}

std::vector<std::size_t> rref(const PrimeField& F, Mat& a) {
  const std::uint64_t p = F.characteristic();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, c) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r)
      for (std::size_t j = c; j < a.cols(); ++j) std::swap(a(piv, j), a(r, j));
    Coeff inv = F.inv(a(r, c));
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) = F.mul(a(r, j), inv);
    auto prow = a.row(r);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r) continue;
      std::uint64_t f = a(i, c);
      if (!f) continue;
      std::uint64_t nf = p - f;
      auto irow = a.row(i);
      for (std::size_t j = c; j < a.cols(); ++j)
        if (prow[j]) irow[j] = Coeff((irow[j] + nf * prow[j]) % p);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(const PrimeField& F, Mat a) { return rref(F, a).size(); }

Mat right_kernel(const PrimeField& F, const Mat& a) {
  Mat m = a;
  auto pivots = rref(F, m);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  Mat k(0, a.cols());
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Coeff> v(a.cols(), 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = F.neg(m(r, free));
    k.append_row(v);
  }
  return k;
}

Mat left_kernel(const PrimeField& F, const Mat& a) { return right_kernel(F, a.transpose()); }

Mat row_basis(const PrimeField& F, Mat a) {
  auto pivots = rref(F, a);
  Mat r(0, a.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) r.append_row(a.row(i));
  return r;
}

Mat inverse(const PrimeField& F, const Mat& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = a.rows();
  Mat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  auto piv = rref(F, aug);
  if (piv.size() < n || (n > 0 && piv[n - 1] != n - 1)) throw std::domain_error("singular matrix");
  Mat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

bool is_invertible(const PrimeField& F, const Mat& a) { return a.rows() == a.cols() && rank(F, a) == a.rows(); }

UPoly charpoly(const PrimeField& F, const Mat& a) {
  const std::size_t n = a.rows();
  Mat h = a;
  // Reduce to upper Hessenberg form by similarity.
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h(i, m - 1) == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(i, j), h(m, j));
      for (std::size_t j = 0; j < n; ++j) std::swap(h(j, i), h(j, m));
    }
    Coeff t = F.inv(h(m, m - 1));
    for (std::size_t r = m + 1; r < n; ++r) {
      Coeff u = F.mul(h(r, m - 1), t);
      if (!u) continue;
      for (std::size_t j = 0; j < n; ++j) h(r, j) = F.sub(h(r, j), F.mul(u, h(m, j)));
      for (std::size_t j = 0; j < n; ++j) h(j, m) = F.add(h(j, m), F.mul(u, h(j, r)));
    }
  }
  std::vector<UPoly> ps(n + 1);
  ps[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    ps[m] = upoly::mul(F, UPoly{F.neg(h(m - 1, m - 1)), 1}, ps[m - 1]);
    Coeff t = 1;
    for (std::size_t i = 1; i < m; ++i) {
      t = F.mul(t, h(m - i, m - i - 1));
      Coeff c = F.mul(t, h(m - i - 1, m - 1));
      if (c) ps[m] = upoly::sub(F, ps[m], upoly::mul(F, UPoly{c}, ps[m - i - 1]));
    }
  }
  return ps[n];
}

Mat evaluate(const PrimeField& F, const UPoly& f, const Mat& a) {
  const std::size_t n = a.rows();
  Mat r(n, n);
  for (std::size_t k = f.size(); k-- > 0;) {
    r = mul(F, r, a);
    for (std::size_t i = 0; i < n; ++i) r(i, i) = F.add(r(i, i), f[k]);
  }
  return r;
}

bool solve_left(const PrimeField& F, const Mat& a, std::span<const Coeff> b, std::vector<Coeff>& x) {
  // x a = b  <=>  a^T x^T = b^T; solve via rref of [a^T | b^T].
  const std::size_t n = a.rows(), m = a.cols();
  Mat aug(m, n + 1);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(j, i);
    aug(i, n) = b[i];
  }
  auto piv = rref(F, aug);
  x.assign(n, 0);
  for (std::size_t r = 0; r < piv.size(); ++r) {
    if (piv[r] == n) return false;
    x[piv[r]] = aug(r, n);
  }
  return true;
}

}  // namespace linalg
}  // namespace fpush
