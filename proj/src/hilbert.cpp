#include "fpush/hilbert.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fpush {

namespace {

using IPoly = std::vector<std::int64_t>;

void ip_add_shifted(IPoly& acc, const IPoly& b, std::size_t shift, std::int64_t sign = 1) {
  if (acc.size() < b.size() + shift) acc.resize(b.size() + shift, 0);
  for (std::size_t i = 0; i < b.size(); ++i) acc[i + shift] += sign * b[i];
}

void ip_trim(IPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

void minimalize(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
      if (j != i && gens[j].divides(gens[i])) redundant = true;
    if (!redundant) out.push_back(gens[i]);
  }
  gens = std::move(out);
}

IPoly numerator_rec(const PolyRing& ring, std::vector<Monomial> gens) {
  minimalize(gens);
  const std::size_t n = ring.nvars();
  if (gens.empty()) return {1};
  // Base case: pairwise coprime generators give prod (1 - t^deg g).
  bool coprime_all = true;
  for (std::size_t i = 0; i < gens.size() && coprime_all; ++i)
    for (std::size_t j = i + 1; j < gens.size() && coprime_all; ++j)
      if (!coprime(gens[i], gens[j])) coprime_all = false;
  if (coprime_all) {
    IPoly r{1};
    for (const auto& g : gens) {
      IPoly next = r;
      ip_add_shifted(next, r, std::size_t(ring.degree(g)), -1);
      r = std::move(next);
    }
    ip_trim(r);
    return r;
  }
  // Pivot on the variable shared by the most generators.
  std::size_t best = 0;
  int best_count = -1;
  for (std::size_t v = 0; v < n; ++v) {
    int c = 0;
    for (const auto& g : gens)
      if (g.e[v]) ++c;
    if (c > best_count) {
      best_count = c;
      best = v;
    }
  }
  std::uint16_t e = 0xffff;
  for (const auto& g : gens) {
    bool pure = true;
    for (std::size_t v = 0; v < n; ++v)
      if (v != best && g.e[v]) pure = false;
    if (!pure && g.e[best] && g.e[best] < e) e = g.e[best];
  }
  if (e == 0xffff) {
    for (const auto& g : gens)
      if (g.e[best] && g.e[best] < e) e = g.e[best];
  }
  Monomial piv = Monomial::var(best, e);
  std::vector<Monomial> plus = gens;
  plus.push_back(piv);
  std::vector<Monomial> colon;
  for (const auto& g : gens) {
    Monomial q;
    for (std::size_t v = 0; v < kMaxVars; ++v) q.e[v] = g.e[v] > piv.e[v] ? std::uint16_t(g.e[v] - piv.e[v]) : 0;
    colon.push_back(q);
  }
  IPoly a = numerator_rec(ring, std::move(plus));
  IPoly b = numerator_rec(ring, std::move(colon));
  ip_add_shifted(a, b, std::size_t(ring.degree(piv)), 1);
  ip_trim(a);
  return a;
}

std::int64_t lcm64(std::int64_t a, std::int64_t b) { return a / std::gcd(a, b) * b; }

}  // namespace

std::vector<std::int64_t> monomial_ideal_numerator(const PolyRing& ring, std::vector<Monomial> gens) {
  for (const auto& g : gens)
    if (g.is_one()) return {};
  return numerator_rec(ring, std::move(gens));
}

HilbertSeries::HilbertSeries(std::vector<int> weights, std::map<RationalDegree, std::int64_t> numerator)
    : weights_(std::move(weights)) {
  for (auto& [d, c] : numerator)
    if (c) numerator_[d] = c;
}

HilbertSeries HilbertSeries::operator+(const HilbertSeries& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (weights_ != o.weights_) throw std::invalid_argument("Hilbert series over different rings");
  auto num = numerator_;
  for (auto& [d, c] : o.numerator_) num[d] += c;
  return HilbertSeries(weights_, std::move(num));
}

HilbertSeries HilbertSeries::scaled(std::int64_t k) const {
  auto num = numerator_;
  for (auto& [d, c] : num) c *= k;
  return HilbertSeries(weights_, std::move(num));
}

HilbertSeries HilbertSeries::operator-(const HilbertSeries& o) const {
  HilbertSeries neg = o.scaled(-1);
  if (neg.weights_.empty()) neg.weights_ = weights_;
  return *this + neg;
}

HilbertSeries HilbertSeries::shifted(RationalDegree delta) const {
  std::map<RationalDegree, std::int64_t> num;
  for (auto& [d, c] : numerator_) num[d + delta] = c;
  return HilbertSeries(weights_, std::move(num));
}

RationalDegree HilbertSeries::lowest_degree() const {
  if (numerator_.empty()) throw std::domain_error("lowest degree of zero series");
  return numerator_.begin()->first;
}

bool HilbertSeries::equal_up_to_shift(const HilbertSeries& other, RationalDegree* shift) const {
  if (is_zero() || other.is_zero()) {
    if (shift) *shift = 0;
    return is_zero() && other.is_zero();
  }
  RationalDegree s = other.lowest_degree() - lowest_degree();
  if (shift) *shift = s;
  return shifted(s) == other;
}

std::vector<std::int64_t> HilbertSeries::numerator_in_u(std::int64_t& L, std::int64_t& offset) const {
  L = 1;
  for (auto& [d, c] : numerator_) L = lcm64(L, d.den());
  offset = numerator_.empty() ? 0 : (numerator_.begin()->first * RationalDegree(L)).num();
  IPoly u;
  for (auto& [d, c] : numerator_) {
    std::int64_t e = (d * RationalDegree(L)).num() - offset;
    if (u.size() <= std::size_t(e)) u.resize(std::size_t(e) + 1, 0);
    u[std::size_t(e)] += c;
  }
  return u;
}

namespace {

// Divides by (1 - u) as long as the value at u = 1 vanishes; returns the count.
int strip_unit_root(IPoly& a, int max_times) {
  int k = 0;
  while (k < max_times) {
    ip_trim(a);
    if (a.empty()) break;
    std::int64_t s = 0;
    for (auto c : a) s += c;
    if (s != 0) break;
    // a(u) = (1 - u) b(u): b_i = sum_{j<=i} a_j.
    IPoly b(a.size() - 1, 0);
    std::int64_t run = 0;
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
      run += a[i];
      b[i] = run;
    }
    a = std::move(b);
    ++k;
  }
  return k;
}

}  // namespace

int HilbertSeries::dimension() const {
  if (is_zero()) return -1;
  std::int64_t L, off;
  IPoly u = numerator_in_u(L, off);
  int n = int(weights_.size());
  int ord = strip_unit_root(u, n);
  return n - ord;
}

RationalDegree HilbertSeries::multiplicity() const {
  if (is_zero()) return 0;
  std::int64_t L, off;
  IPoly u = numerator_in_u(L, off);
  int n = int(weights_.size());
  int ord = strip_unit_root(u, n);
  int dim = n - ord;
  std::int64_t q1 = 0;
  for (auto c : u) q1 += c;
  // e_t = Q(1) * L^(dim - n) / prod w_i
  std::int64_t den = 1;
  for (int w : weights_) den *= w;
  RationalDegree e(q1, den);
  for (int i = 0; i < n - dim; ++i) e = e / L;
  return e;
}

std::int64_t HilbertSeries::length() const {
  if (is_zero()) return 0;
  if (dimension() > 0) throw std::domain_error("length of a module of positive dimension");
  std::int64_t L, off;
  IPoly u = numerator_in_u(L, off);
  int n = int(weights_.size());
  strip_unit_root(u, n);
  std::int64_t q1 = 0;
  for (auto c : u) q1 += c;
  std::int64_t den = 1;
  for (int w : weights_) den *= L * w;
  if (q1 % den != 0) throw std::logic_error("non-integral length");
  return q1 / den;
}

std::map<RationalDegree, std::int64_t> HilbertSeries::expand(RationalDegree max_degree) const {
  std::map<RationalDegree, std::int64_t> out;
  if (is_zero()) return out;
  std::int64_t L, off;
  IPoly u = numerator_in_u(L, off);
  std::int64_t top = (max_degree * RationalDegree(L)).floor() - off;
  if (top < 0) return out;
  IPoly series(std::size_t(top) + 1, 0);
  for (std::size_t i = 0; i < u.size() && i <= std::size_t(top); ++i) series[i] = u[i];
  // Multiply by 1/(1 - u^{L w}) = running sums with stride L w.
  for (int w : weights_) {
    std::size_t stride = std::size_t(L * w);
    for (std::size_t i = stride; i < series.size(); ++i) series[i] += series[i - stride];
  }
  for (std::size_t i = 0; i < series.size(); ++i)
    if (series[i]) out[RationalDegree(std::int64_t(i) + off, L)] = series[i];
  return out;
}

std::string HilbertSeries::str() const {
  std::string s;
  for (auto& [d, c] : numerator_) {
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    std::int64_t a = c < 0 ? -c : c;
    if (d == RationalDegree(0)) {
      s += std::to_string(a);
    } else {
      if (a != 1) s += std::to_string(a) + "*";
      s += "t^" + (d.is_integer() ? d.str() : "(" + d.str() + ")");
    }
  }
  if (s.empty()) s = "0";
  std::string den;
  for (int w : weights_) den += "(1-t^" + std::to_string(w) + ")";
  return den.empty() ? s : "(" + s + ")/" + den;
}

}  // namespace fpush
