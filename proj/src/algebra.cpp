#include "fpush/algebra.hpp"

#include <stdexcept>

namespace fpush::algebra {

namespace {

// Incrementally maintained reduced echelon basis.
class Echelon {
 public:
  Echelon(const PrimeField& F, std::size_t n) : F_(F), n_(n) {}

  // Reduces v in place; returns true and stores it if it was independent.
  bool insert(std::vector<Coeff>& v) {
    reduce(v);
    std::size_t p = 0;
    while (p < n_ && v[p] == 0) ++p;
    if (p == n_) return false;
    Coeff inv = F_.inv(v[p]);
    for (auto& c : v) c = F_.mul(c, inv);
    for (auto& r : rows_) {
      Coeff f = r[p];
      if (!f) continue;
      for (std::size_t j = 0; j < n_; ++j) r[j] = F_.sub(r[j], F_.mul(f, v[j]));
    }
    rows_.push_back(v);
    pivots_.push_back(p);
    return true;
  }
  void reduce(std::vector<Coeff>& v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      Coeff f = v[pivots_[i]];
      if (!f) continue;
      for (std::size_t j = 0; j < n_; ++j) v[j] = F_.sub(v[j], F_.mul(f, rows_[i][j]));
    }
  }
  std::size_t size() const { return rows_.size(); }
  Mat matrix() const {
    Mat m(0, n_);
    for (const auto& r : rows_) m.append_row(r);
    return linalg::row_basis(F_, m);
  }

 private:
  const PrimeField& F_;
  std::size_t n_;
  std::vector<std::vector<Coeff>> rows_;
  std::vector<std::size_t> pivots_;
};

std::vector<Coeff> row_times(const PrimeField& F, std::span<const Coeff> v, const Mat& g) {
  std::vector<Coeff> out(g.cols(), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i]) continue;
    for (std::size_t j = 0; j < g.cols(); ++j) out[j] = F.add(out[j], F.mul(v[i], g(i, j)));
  }
  return out;
}

Mat random_element(const PrimeField& F, const std::vector<Mat>& span, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<Coeff> dist(0, F.characteristic() - 1);
  Mat a(n, n);
  for (const auto& s : span) a = linalg::add(F, a, linalg::scale(F, s, dist(rng)));
  return a;
}

enum class SplitKind { irreducible, reducible, undecided };

// Proper invariant subspace (rows) or an irreducibility certificate.
SplitKind find_submodule(const PrimeField& F, const std::vector<Mat>& span, std::size_t n, std::mt19937_64& rng,
                         int tries, Mat& sub) {
  if (n <= 1) return SplitKind::irreducible;
  std::vector<Mat> transposed;
  for (const auto& s : span) transposed.push_back(s.transpose());
  for (int t = 0; t < tries; ++t) {
    Mat a = random_element(F, span, n, rng);
    for (const auto& [f, mult] : upoly::factor(F, linalg::charpoly(F, a), rng)) {
      (void)mult;
      Mat fa = linalg::evaluate(F, f, a);
      Mat ker = linalg::left_kernel(F, fa);
      Mat seed(0, n);
      seed.append_row(ker.row(0));
      Mat u = spin(F, seed, span);
      if (u.rows() < n) {
        sub = u;
        return SplitKind::reducible;
      }
      Mat rker = linalg::right_kernel(F, fa);
      Mat wseed(0, n);
      wseed.append_row(rker.row(0));
      Mat w = spin(F, wseed, transposed);
      if (w.rows() < n) {
        sub = linalg::row_basis(F, linalg::left_kernel(F, w.transpose()));
        return SplitKind::reducible;
      }
      if (ker.rows() == std::size_t(upoly::degree(f))) return SplitKind::irreducible;
    }
  }
  return SplitKind::undecided;
}

// Actions on the invariant subspace `sub` (reduced echelon rows) and on the quotient.
void restrict_and_quotient(const PrimeField& F, const std::vector<Mat>& span, std::size_t n, const Mat& sub,
                           std::vector<Mat>& on_sub, std::vector<Mat>& on_quot) {
  const std::size_t r = sub.rows();
  std::vector<bool> pivot(n, false);
  Mat basis(0, n);
  for (std::size_t i = 0; i < r; ++i) {
    basis.append_row(sub.row(i));
    for (std::size_t j = 0; j < n; ++j)
      if (sub(i, j)) {
        pivot[j] = true;
        break;
      }
  }
  for (std::size_t j = 0; j < n; ++j)
    if (!pivot[j]) {
      std::vector<Coeff> e(n, 0);
      e[j] = 1;
      basis.append_row(e);
    }
  Mat inv = linalg::inverse(F, basis);
  for (const auto& s : span) {
    Mat c = linalg::mul(F, linalg::mul(F, basis, s), inv);
    Mat a(r, r), b(n - r, n - r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) a(i, j) = c(i, j);
    for (std::size_t i = r; i < n; ++i)
      for (std::size_t j = r; j < n; ++j) b(i - r, j - r) = c(i, j);
    on_sub.push_back(std::move(a));
    on_quot.push_back(std::move(b));
  }
}

bool factors_rec(const PrimeField& F, const std::vector<Mat>& span, std::size_t n, std::mt19937_64& rng, int tries,
                 std::vector<Action>& out) {
  if (n == 0) return true;
  Mat sub;
  switch (find_submodule(F, span, n, rng, tries, sub)) {
    case SplitKind::irreducible:
      out.push_back(span);
      return true;
    case SplitKind::undecided:
      return false;
    case SplitKind::reducible:
      break;
  }
  std::vector<Mat> a, b;
  restrict_and_quotient(F, span, n, sub, a, b);
  return factors_rec(F, a, sub.rows(), rng, tries, out) && factors_rec(F, b, n - sub.rows(), rng, tries, out);
}

Mat block_diagonal(const std::vector<Mat>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.rows();
  Mat m(n, n);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) m(off + i, off + j) = b(i, j);
    off += b.rows();
  }
  return m;
}

}  // namespace

Mat spin(const PrimeField& F, const Mat& seeds, const std::vector<Mat>& gens) {
  const std::size_t n = seeds.cols();
  Echelon ech(F, n);
  std::vector<std::vector<Coeff>> queue;
  for (std::size_t i = 0; i < seeds.rows(); ++i) {
    std::vector<Coeff> v(seeds.row(i).begin(), seeds.row(i).end());
    if (ech.insert(v)) queue.push_back(v);
  }
  while (!queue.empty() && ech.size() < n) {
    auto v = std::move(queue.back());
    queue.pop_back();
    for (const auto& g : gens) {
      auto w = row_times(F, v, g);
      if (ech.insert(w)) queue.push_back(w);
    }
  }
  return ech.matrix();
}

UPoly minimal_polynomial(const PrimeField& F, const Mat& a) {
  const std::size_t n = a.rows();
  const std::size_t n2 = n * n;
  // Krylov sequence of powers, vectorized, with a tag block recording the
  // combination of powers each reduced row represents.
  std::vector<std::vector<Coeff>> rows;
  std::vector<std::size_t> pivots;
  Mat power = Mat::identity(n);
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<Coeff> v(n2 + n + 1, 0);
    std::copy(power.data().begin(), power.data().end(), v.begin());
    v[n2 + k] = 1;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      Coeff f = v[pivots[i]];
      if (!f) continue;
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = F.sub(v[j], F.mul(f, rows[i][j]));
    }
    std::size_t p = 0;
    while (p < n2 && v[p] == 0) ++p;
    if (p == n2) {
      UPoly m(v.begin() + std::ptrdiff_t(n2), v.begin() + std::ptrdiff_t(n2 + k + 1));
      return upoly::monic(F, m);
    }
    Coeff inv = F.inv(v[p]);
    for (auto& c : v) c = F.mul(c, inv);
    rows.push_back(std::move(v));
    pivots.push_back(p);
    power = linalg::mul(F, power, a);
  }
  throw std::logic_error("minimal polynomial exceeds the matrix size");
}

std::optional<std::vector<Action>> composition_factors(const PrimeField& F, const std::vector<Mat>& span, std::size_t n,
                                                       std::mt19937_64& rng, int tries) {
  std::vector<Action> out;
  if (!factors_rec(F, span, n, rng, tries, out)) return std::nullopt;
  return out;
}

Verdict is_local(const PrimeField& F, const std::vector<Mat>& span, std::size_t n, std::mt19937_64& rng, int tries) {
  if (n == 0) return Verdict::no;
  auto factors = composition_factors(F, span, n, rng, tries);
  if (!factors) return Verdict::undecided;
  // Semisimple image: block-diagonal action on all composition factors.
  std::vector<Mat> image;
  for (std::size_t k = 0; k < span.size(); ++k) {
    std::vector<Mat> blocks;
    for (const auto& f : *factors) blocks.push_back(f[k]);
    image.push_back(block_diagonal(blocks));
  }
  const std::size_t m = image.front().rows();
  Mat vecs(0, m * m);
  for (const auto& x : image) vecs.append_row(x.data());
  const std::size_t dim = linalg::rank(F, vecs);
  for (std::size_t i = 0; i < image.size(); ++i)
    for (std::size_t j = i + 1; j < image.size(); ++j)
      if (linalg::mul(F, image[i], image[j]) != linalg::mul(F, image[j], image[i])) return Verdict::no;
  for (int t = 0; t < tries; ++t) {
    Mat x = random_element(F, image, m, rng);
    UPoly mp = minimal_polynomial(F, x);
    auto fac = upoly::factor(F, mp, rng);
    if (fac.size() > 1) return Verdict::no;  // coprime factors give a nontrivial idempotent
    if (std::size_t(upoly::degree(mp)) == dim) return Verdict::yes;
  }
  return Verdict::undecided;
}

std::vector<Mat> fitting_split(const PrimeField& F, const Mat& a, const Mat& e, std::mt19937_64& rng) {
  UPoly chi = linalg::charpoly(F, a);
  auto fac = upoly::factor(F, chi, rng);
  if (fac.size() <= 1) return {e};
  std::vector<Mat> out;
  Mat rest = e;
  for (const auto& [f, mult] : fac) {
    if (f == UPoly{0, 1}) continue;
    UPoly g{1};
    for (int i = 0; i < mult; ++i) g = upoly::mul(F, g, f);
    UPoly h = upoly::divmod(F, chi, g).first;
    UPoly s, t;
    upoly::xgcd(F, h, g, s, t);
    UPoly eps = upoly::mod(F, upoly::mul(F, s, h), chi);
    Mat idem = linalg::evaluate(F, eps, a);
    rest = linalg::sub(F, rest, idem);
    out.push_back(std::move(idem));
  }
  if (!rest.is_zero()) out.push_back(std::move(rest));
  return out;
}

Mat polynomial_inverse(const PrimeField& F, const Mat& a) {
  UPoly chi = linalg::charpoly(F, a);
  if (chi.empty() || chi[0] == 0) throw std::domain_error("matrix is not invertible");
  // a * (chi(a) - chi(0)) / a = -chi(0)
  UPoly q(chi.begin() + 1, chi.end());
  Mat r = linalg::evaluate(F, q, a);
  return linalg::scale(F, r, F.neg(F.inv(chi[0])));
}

}  // namespace fpush::algebra
