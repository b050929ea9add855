#include "fpush/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace fpush {

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    std::uint32_t s = std::uint32_t(a.e[i]) + b.e[i];
    if (s > 0xffff) throw std::overflow_error("monomial exponent overflow");
    r.e[i] = std::uint16_t(s);
  }
  return r;
}

Polynomial::Polynomial(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.mono > b.mono; });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().mono == t.mono)
      throw std::logic_error("Polynomial: duplicate monomial in term list");
    if (t.coeff) terms_.push_back(t);
  }
}

Coeff Polynomial::coeff(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& x) { return t.mono > x; });
  return it != terms_.end() && it->mono == m ? it->coeff : 0;
}

PolyRing::PolyRing(PrimeField field, std::vector<std::string> names, std::vector<int> weights)
    : field_(field), names_(std::move(names)), weights_(std::move(weights)) {
  if (names_.size() != weights_.size()) throw std::invalid_argument("one weight per variable required");
  if (names_.size() > kMaxVars) throw std::invalid_argument("at most 8 variables supported");
  for (int w : weights_)
    if (w <= 0) throw std::invalid_argument("variable weights must be positive");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    const auto& n = names_[i];
    if (n.empty() || !std::isalpha(static_cast<unsigned char>(n[0])))
      throw std::invalid_argument("bad variable name '" + n + "'");
    for (std::size_t j = 0; j < i; ++j)
      if (names_[j] == n) throw std::invalid_argument("duplicate variable '" + n + "'");
  }
}

int PolyRing::weight_sum() const {
  int s = 0;
  for (int w : weights_) s += w;
  return s;
}

void PolyRing::check_arity(const Polynomial& f) const {
  for (const auto& t : f.terms())
    for (std::size_t i = nvars(); i < kMaxVars; ++i)
      if (t.mono.e[i]) throw std::invalid_argument("polynomial uses variables outside the ring");
}

std::int64_t PolyRing::degree(const Polynomial& f) const {
  if (f.is_zero()) throw std::domain_error("degree of zero polynomial");
  std::int64_t d = degree(f.terms()[0].mono);
  for (const auto& t : f.terms())
    if (degree(t.mono) != d) throw std::domain_error("polynomial is not weighted-homogeneous: " + format(f));
  return d;
}

bool PolyRing::is_homogeneous(const Polynomial& f) const {
  if (f.is_zero()) return true;
  std::int64_t d = degree(f.terms()[0].mono);
  for (const auto& t : f.terms())
    if (degree(t.mono) != d) return false;
  return true;
}

Polynomial PolyRing::add(const Polynomial& f, const Polynomial& g) const {
  std::vector<Term> out;
  out.reserve(f.size() + g.size());
  auto a = f.terms_.begin(), ae = f.terms_.end();
  auto b = g.terms_.begin(), be = g.terms_.end();
  while (a != ae && b != be) {
    if (a->mono > b->mono) {
      out.push_back(*a++);
    } else if (b->mono > a->mono) {
      out.push_back(*b++);
    } else {
      Coeff c = field_.add(a->coeff, b->coeff);
      if (c) out.push_back({a->mono, c});
      ++a;
      ++b;
    }
  }
  out.insert(out.end(), a, ae);
  out.insert(out.end(), b, be);
  return Polynomial(std::move(out), Polynomial::Sorted{});
}

Polynomial PolyRing::neg(const Polynomial& f) const {
  auto terms = f.terms_;
  for (auto& t : terms) t.coeff = field_.neg(t.coeff);
  return Polynomial(std::move(terms), Polynomial::Sorted{});
}

Polynomial PolyRing::sub(const Polynomial& f, const Polynomial& g) const { return add(f, neg(g)); }

Polynomial PolyRing::scale(const Polynomial& f, Coeff c) const {
  if (c == 0) return {};
  auto terms = f.terms_;
  for (auto& t : terms) t.coeff = field_.mul(t.coeff, c);
  return Polynomial(std::move(terms), Polynomial::Sorted{});
}

Polynomial PolyRing::mul_term(const Polynomial& f, const Monomial& m, Coeff c) const {
  if (c == 0) return {};
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms_) terms.push_back({t.mono * m, field_.mul(t.coeff, c)});
  // Multiplying by a monomial preserves the lexicographic order.
  return Polynomial(std::move(terms), Polynomial::Sorted{});
}

Polynomial PolyRing::mul(const Polynomial& f, const Polynomial& g) const {
  if (f.is_zero() || g.is_zero()) return {};
  if (f.size() == 1) return mul_term(g, f.terms_[0].mono, f.terms_[0].coeff);
  if (g.size() == 1) return mul_term(f, g.terms_[0].mono, g.terms_[0].coeff);
  std::unordered_map<Monomial, std::uint64_t, MonomialHash> acc;
  acc.reserve(f.size() * g.size());
  const std::uint64_t p = field_.characteristic();
  for (const auto& a : f.terms_)
    for (const auto& b : g.terms_) {
      auto& slot = acc[a.mono * b.mono];
      slot = (slot + std::uint64_t(a.coeff) * b.coeff) % p;
    }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (const auto& [m, c] : acc)
    if (c) terms.push_back({m, Coeff(c)});
  return Polynomial(std::move(terms));
}

Polynomial PolyRing::pow(const Polynomial& f, unsigned e) const {
  Polynomial r = Polynomial::constant(1 % field_.characteristic());
  Polynomial b = f;
  while (e) {
    if (e & 1) r = mul(r, b);
    e >>= 1;
    if (e) b = mul(b, b);
  }
  return r;
}

Polynomial PolyRing::substitute_powers(const Polynomial& f, std::uint64_t q) const {
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms_) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      std::uint64_t v = std::uint64_t(t.mono.e[i]) * q;
      if (v > 0xffff) throw std::overflow_error("monomial exponent overflow");
      m.e[i] = std::uint16_t(v);
    }
    terms.push_back({m, t.coeff});
  }
  return Polynomial(std::move(terms), Polynomial::Sorted{});
}

Polynomial PolyRing::frob_power(const Polynomial& f, std::uint64_t q) const {
  int n = log_p(q, characteristic());
  if (n < 0) throw std::invalid_argument("q = " + std::to_string(q) + " is not a power of p");
  // c^p = c in F_p, so each Frobenius step only raises the monomials.
  Polynomial r = f;
  for (int i = 0; i < n; ++i) r = substitute_powers(r, characteristic());
  return r;
}

void PolyRing::for_each_monomial(std::int64_t deg, const std::function<void(const Monomial&)>& fn) const {
  if (deg < 0) return;
  Monomial m;
  const std::size_t n = nvars();
  if (n == 0) {
    if (deg == 0) fn(m);
    return;
  }
  // Variables enumerated from the first, largest exponent first, so output is lex-descending.
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t rest) {
    if (i + 1 == n) {
      if (rest % weights_[i] == 0) {
        m.e[i] = std::uint16_t(rest / weights_[i]);
        fn(m);
        m.e[i] = 0;
      }
      return;
    }
    for (std::int64_t k = rest / weights_[i]; k >= 0; --k) {
      m.e[i] = std::uint16_t(k);
      rec(i + 1, rest - k * weights_[i]);
    }
    m.e[i] = 0;
  };
  rec(0, deg);
}

std::vector<Monomial> PolyRing::monomials_of_degree(std::int64_t deg) const {
  std::vector<Monomial> out;
  for_each_monomial(deg, [&](const Monomial& m) { out.push_back(m); });
  return out;
}

std::vector<std::int64_t> PolyRing::monomial_counts(std::int64_t max_deg) const {
  std::vector<std::int64_t> c(std::size_t(max_deg + 1), 0);
  if (max_deg < 0) return c;
  c[0] = 1;
  for (int w : weights_)
    for (std::int64_t d = w; d <= max_deg; ++d) c[std::size_t(d)] += c[std::size_t(d - w)];
  return c;
}

std::string PolyRing::format(const Monomial& m) const {
  std::string s;
  for (std::size_t i = 0; i < nvars(); ++i) {
    if (!m.e[i]) continue;
    if (!s.empty()) s += "*";
    s += names_[i];
    if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
  }
  return s.empty() ? "1" : s;
}

std::string PolyRing::format(const Polynomial& f) const {
  if (f.is_zero()) return "0";
  std::vector<Term> terms = f.terms();
  std::stable_sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return degree(a.mono) > degree(b.mono);
  });
  std::string s;
  for (const auto& t : terms) {
    std::int64_t c = field_.to_signed(t.coeff);
    bool neg = c < 0;
    std::int64_t a = neg ? -c : c;
    if (s.empty()) {
      if (neg) s += "-";
    } else {
      s += neg ? "-" : "+";
    }
    if (t.mono.is_one()) {
      s += std::to_string(a);
    } else {
      if (a != 1) s += std::to_string(a) + "*";
      s += format(t.mono);
    }
  }
  return s;
}

namespace {

class PolyParser {
 public:
  PolyParser(const PolyRing& ring, const std::string& text) : ring_(ring), text_(text) {}

  Polynomial run() {
    Polynomial f = sum();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("cannot parse polynomial '" + text_ + "': " + msg, line, col);
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial sum() {
    skip_ws();
    Polynomial acc;
    bool first = true;
    for (;;) {
      bool negate = false;
      if (accept('+')) {
      } else if (accept('-')) {
        negate = true;
      } else if (!first) {
        break;
      }
      Polynomial t = product();
      acc = negate ? ring_.sub(acc, t) : ring_.add(acc, t);
      first = false;
      skip_ws();
      if (pos_ >= text_.size() || (text_[pos_] != '+' && text_[pos_] != '-')) break;
    }
    return acc;
  }

  Polynomial product() {
    Polynomial acc = power();
    for (;;) {
      skip_ws();
      if (accept('*')) {
        acc = ring_.mul(acc, power());
      } else if (pos_ < text_.size() &&
                 (text_[pos_] == '(' || std::isalpha(static_cast<unsigned char>(text_[pos_])))) {
        acc = ring_.mul(acc, power());  // juxtaposition: 2x, x y
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial power() {
    Polynomial base = atom();
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent after '^'");
      unsigned long e = std::stoul(text_.substr(start, pos_ - start));
      if (e > 60000) fail("exponent too large");
      base = ring_.pow(base, unsigned(e));
    }
    return base;
  }

  Polynomial atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial f = sum();
      if (!accept(')')) fail("expected ')'");
      return f;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string digits = text_.substr(start, pos_ - start);
      // Reduce digit by digit so arbitrarily long literals are accepted.
      const auto& F = ring_.field();
      Coeff v = 0;
      for (char d : digits) v = F.add(F.mul(v, F.from_int(10)), F.from_int(d - '0'));
      return Polynomial::constant(v);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name = text_.substr(start, pos_ - start);
      const auto& names = ring_.names();
      for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return ring_.var(i);
      pos_ = start;
      fail("unknown variable '" + name + "'");
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  const PolyRing& ring_;
  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial PolyRing::parse(const std::string& text) const { return PolyParser(*this, text).run(); }

}  // namespace fpush
