#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace prelie {

using Rational = mpq_class;

// Exponent vector, trailing zeros trimmed so constants have an empty vector.
using Monomial = std::vector<std::uint32_t>;

int compare_monomials(const Monomial &a, const Monomial &b);
bool monomial_divides(const Monomial &d, const Monomial &m);

struct Term {
  Monomial mono;
  Rational coef;
};

class ParamRing;

// Sparse multivariate polynomial over Q, terms sorted by descending lex order.
class Poly {
public:
  Poly() = default;
  explicit Poly(const Rational &c);
  static Poly variable(std::size_t index);
  static Poly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;
  const std::vector<Term> &terms() const { return terms_; }
  const Term &leading() const { return terms_.front(); }
  std::size_t num_vars() const;

  Poly operator-() const;
  Poly operator+(const Poly &o) const;
  Poly operator-(const Poly &o) const;
  Poly operator*(const Poly &o) const;
  Poly scaled(const Rational &c) const;
  Poly times_monomial(const Monomial &m, const Rational &c) const;

  bool operator==(const Poly &o) const;
  bool operator!=(const Poly &o) const { return !(*this == o); }

  std::optional<Poly> divide_exact(const Poly &d) const;
  Monomial monomial_gcd() const;
  Poly divide_monomial(const Monomial &m) const;

  Poly substitute(const std::map<std::size_t, Rational> &values) const;
  std::string render(const ParamRing &ring) const;

private:
  std::vector<Term> terms_;
  Poly combine(const Poly &o, bool subtract) const;
};

} // namespace prelie
