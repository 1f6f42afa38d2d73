#include "prelie/poly.hpp"
#include "prelie/scalar.hpp"

#include <algorithm>
#include <sstream>

namespace prelie {

namespace {

void trim(Monomial &m) {
  while (!m.empty() && m.back() == 0)
    m.pop_back();
}

struct LexGreater {
  bool operator()(const Monomial &a, const Monomial &b) const {
    return compare_monomials(a, b) > 0;
  }
};

} // namespace

int compare_monomials(const Monomial &a, const Monomial &b) {
  std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t x = i < a.size() ? a[i] : 0;
    std::uint32_t y = i < b.size() ? b[i] : 0;
    if (x != y)
      return x < y ? -1 : 1;
  }
  return 0;
}

bool monomial_divides(const Monomial &d, const Monomial &m) {
  for (std::size_t i = 0; i < d.size(); ++i) {
    std::uint32_t y = i < m.size() ? m[i] : 0;
    if (d[i] > y)
      return false;
  }
  return true;
}

Poly::Poly(const Rational &c) {
  if (c != 0)
    terms_.push_back({{}, c});
}

Poly Poly::variable(std::size_t index) {
  Poly p;
  Monomial m(index + 1, 0);
  m[index] = 1;
  p.terms_.push_back({std::move(m), Rational(1)});
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::map<Monomial, Rational, LexGreater> acc;
  for (auto &t : terms) {
    trim(t.mono);
    acc[t.mono] += t.coef;
  }
  Poly p;
  for (auto &[m, c] : acc)
    if (c != 0)
      p.terms_.push_back({m, c});
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.empty());
}

Rational Poly::constant_value() const {
  if (terms_.empty())
    return Rational(0);
  return terms_[0].coef;
}

std::size_t Poly::num_vars() const {
  std::size_t n = 0;
  for (const auto &t : terms_)
    n = std::max(n, t.mono.size());
  return n;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto &t : p.terms_)
    t.coef = -t.coef;
  return p;
}

Poly Poly::combine(const Poly &o, bool subtract) const {
  Poly r;
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    int c;
    if (i == terms_.size())
      c = -1;
    else if (j == o.terms_.size())
      c = 1;
    else
      c = compare_monomials(terms_[i].mono, o.terms_[j].mono);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      Term t = o.terms_[j++];
      if (subtract)
        t.coef = -t.coef;
      r.terms_.push_back(std::move(t));
    } else {
      Rational s = subtract ? Rational(terms_[i].coef - o.terms_[j].coef)
                            : Rational(terms_[i].coef + o.terms_[j].coef);
      if (s != 0)
        r.terms_.push_back({terms_[i].mono, s});
      ++i;
      ++j;
    }
  }
  return r;
}

Poly Poly::operator+(const Poly &o) const {
  if (o.is_zero())
    return *this;
  if (is_zero())
    return o;
  return combine(o, false);
}

Poly Poly::operator-(const Poly &o) const {
  if (o.is_zero())
    return *this;
  return combine(o, true);
}

Poly Poly::times_monomial(const Monomial &m, const Rational &c) const {
  Poly r;
  if (c == 0)
    return r;
  r.terms_.reserve(terms_.size());
  for (const auto &t : terms_) {
    Monomial x(std::max(t.mono.size(), m.size()), 0);
    for (std::size_t k = 0; k < x.size(); ++k)
      x[k] = (k < t.mono.size() ? t.mono[k] : 0) + (k < m.size() ? m[k] : 0);
    r.terms_.push_back({std::move(x), t.coef * c});
  }
  return r;
}

Poly Poly::operator*(const Poly &o) const {
  if (is_zero() || o.is_zero())
    return Poly();
  if (o.is_constant())
    return scaled(o.constant_value());
  if (is_constant())
    return o.scaled(constant_value());
  if (o.terms_.size() == 1)
    return times_monomial(o.terms_[0].mono, o.terms_[0].coef);
  std::map<Monomial, Rational, LexGreater> acc;
  for (const auto &a : terms_) {
    for (const auto &b : o.terms_) {
      Monomial x(std::max(a.mono.size(), b.mono.size()), 0);
      for (std::size_t k = 0; k < x.size(); ++k)
        x[k] = (k < a.mono.size() ? a.mono[k] : 0) +
               (k < b.mono.size() ? b.mono[k] : 0);
      acc[x] += a.coef * b.coef;
    }
  }
  Poly r;
  for (auto &[m, c] : acc)
    if (c != 0)
      r.terms_.push_back({m, c});
  return r;
}

Poly Poly::scaled(const Rational &c) const {
  if (c == 0)
    return Poly();
  Poly r = *this;
  for (auto &t : r.terms_)
    t.coef *= c;
  return r;
}

bool Poly::operator==(const Poly &o) const {
  if (terms_.size() != o.terms_.size())
    return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].coef != o.terms_[i].coef ||
        compare_monomials(terms_[i].mono, o.terms_[i].mono) != 0)
      return false;
  return true;
}

std::optional<Poly> Poly::divide_exact(const Poly &d) const {
  if (d.is_zero())
    return std::nullopt;
  Poly rem = *this;
  std::vector<Term> quot;
  const Term &ld = d.leading();
  // Lex division; a nonzero remainder lead not divisible by lt(d) means d does
  // not divide exactly.
  std::size_t guard = 0;
  while (!rem.is_zero()) {
    const Term &lr = rem.leading();
    if (!monomial_divides(ld.mono, lr.mono))
      return std::nullopt;
    Monomial q(lr.mono.size(), 0);
    for (std::size_t k = 0; k < q.size(); ++k)
      q[k] = lr.mono[k] - (k < ld.mono.size() ? ld.mono[k] : 0);
    trim(q);
    Rational c = lr.coef / ld.coef;
    quot.push_back({q, c});
    rem = rem - d.times_monomial(q, c);
    if (++guard > 100000)
      return std::nullopt;
  }
  return from_terms(std::move(quot));
}

Monomial Poly::monomial_gcd() const {
  if (terms_.empty())
    return {};
  Monomial g = terms_[0].mono;
  for (const auto &t : terms_) {
    g.resize(std::min(g.size(), t.mono.size()));
    for (std::size_t k = 0; k < g.size(); ++k)
      g[k] = std::min(g[k], t.mono[k]);
  }
  trim(g);
  return g;
}

Poly Poly::divide_monomial(const Monomial &m) const {
  Poly r = *this;
  for (auto &t : r.terms_) {
    for (std::size_t k = 0; k < m.size(); ++k)
      t.mono[k] -= m[k];
    trim(t.mono);
  }
  return r;
}

Poly Poly::substitute(const std::map<std::size_t, Rational> &values) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto &t : terms_) {
    Term n{t.mono, t.coef};
    for (std::size_t k = 0; k < n.mono.size(); ++k) {
      auto it = values.find(k);
      if (it == values.end() || n.mono[k] == 0)
        continue;
      Rational p(1);
      for (std::uint32_t e = 0; e < n.mono[k]; ++e)
        p *= it->second;
      n.coef *= p;
      n.mono[k] = 0;
    }
    out.push_back(std::move(n));
  }
  return from_terms(std::move(out));
}

namespace {

std::string rational_text(const Rational &q) {
  return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
}

} // namespace

std::string Poly::render(const ParamRing &ring) const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &t : terms_) {
    Rational c = t.coef;
    bool neg = c < 0;
    if (neg)
      c = -c;
    if (first) {
      if (neg)
        os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (t.mono.empty() || c != 1) {
      os << rational_text(c);
      wrote = true;
    }
    for (std::size_t k = 0; k < t.mono.size(); ++k) {
      if (t.mono[k] == 0)
        continue;
      if (wrote)
        os << "*";
      os << ring.name(k);
      if (t.mono[k] > 1)
        os << "^" << t.mono[k];
      wrote = true;
    }
  }
  return os.str();
}

} // namespace prelie
