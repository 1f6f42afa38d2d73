#include "prelie/scalar.hpp"

#include <cctype>
#include <limits>

namespace prelie {

ParamRing::ParamRing(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!valid_name(names_[i]))
      throw Error(ErrorCode::InvalidInput, "invalid parameter name '" + names_[i] + "'");
    for (std::size_t j = 0; j < i; ++j)
      if (names_[j] == names_[i])
        throw Error(ErrorCode::InvalidInput, "duplicate parameter '" + names_[i] + "'");
  }
}

const std::string &ParamRing::name(std::size_t i) const {
  static const std::string unknown = "?";
  return i < names_.size() ? names_[i] : unknown;
}

std::optional<std::size_t> ParamRing::index_of(const std::string &name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name)
      return i;
  return std::nullopt;
}

bool ParamRing::valid_name(const std::string &name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0])))
    return false;
  for (char c : name)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
      return false;
  return true;
}

namespace {

using i128 = __int128;

i128 gcd128(i128 a, i128 b) {
  if (a < 0)
    a = -a;
  if (b < 0)
    b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits_long(i128 v) {
  return v >= std::numeric_limits<long>::min() && v <= std::numeric_limits<long>::max();
}

mpz_class to_mpz(i128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  mpz_class hi(static_cast<unsigned long>(u >> 64)), lo(static_cast<unsigned long>(u));
  mpz_class z = (hi << 64) + lo;
  return neg ? mpz_class(-z) : z;
}

} // namespace

Scalar::Scalar(const Rational &q) {
  if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
    sn_ = q.get_num().get_si();
    sd_ = q.get_den().get_si();
  } else {
    mode_ = Mode::Big;
    q_ = q;
  }
}

Scalar Scalar::small_or_big(i128 n, i128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n == 0)
    return Scalar();
  i128 g = gcd128(n, d);
  if (g != 1) {
    n /= g;
    d /= g;
  }
  Scalar r;
  if (fits_long(n) && fits_long(d)) {
    r.sn_ = static_cast<long>(n);
    r.sd_ = static_cast<long>(d);
  } else {
    r.mode_ = Mode::Big;
    r.q_ = Rational(to_mpz(n), to_mpz(d));
    r.q_->canonicalize();
  }
  return r;
}

Rational Scalar::rat() const {
  if (mode_ == Mode::Small)
    return Rational(sn_, sd_);
  return *q_;
}

Scalar::Scalar(Poly p) : mode_(Mode::Poly), num_(std::move(p)) { settle(); }

Scalar::Scalar(Poly num, Poly den) : mode_(Mode::Poly), num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero())
    throw Error(ErrorCode::DivisionByZero, "division by zero");
  normalize();
  settle();
}

const Poly &Scalar::one() {
  static const Poly p(Rational(1));
  return p;
}

void Scalar::settle() {
  if (mode_ == Mode::Poly && den_.is_zero() && num_.is_constant())
    *this = Scalar(num_.constant_value());
}

Poly Scalar::num() const { return mode_ == Mode::Poly ? num_ : Poly(rat()); }

Poly Scalar::den() const { return mode_ == Mode::Poly ? dpoly() : one(); }

void Scalar::normalize() {
  if (num_.is_zero()) {
    den_ = Poly();
    return;
  }
  if (den_.is_zero())
    return;
  if (den_.is_constant()) {
    Rational c = den_.constant_value();
    if (c != 1)
      num_ = num_.scaled(Rational(1) / c);
    den_ = Poly();
    return;
  }
  Monomial g = num_.monomial_gcd();
  Monomial h = den_.monomial_gcd();
  Monomial common(std::min(g.size(), h.size()), 0);
  bool any = false;
  for (std::size_t k = 0; k < common.size(); ++k) {
    common[k] = std::min(g[k], h[k]);
    any = any || common[k] != 0;
  }
  if (any) {
    num_ = num_.divide_monomial(common);
    den_ = den_.divide_monomial(common);
  }
  if (den_.is_constant()) {
    normalize();
    return;
  }
  if (auto q = num_.divide_exact(den_)) {
    num_ = std::move(*q);
    den_ = Poly();
    return;
  }
  Rational lc = den_.leading().coef;
  if (lc != 1) {
    Rational inv = Rational(1) / lc;
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

Rational Scalar::constant_value() const {
  if (mode_ != Mode::Poly)
    return rat();
  return num_.constant_value() / dpoly().constant_value();
}

Scalar Scalar::operator-() const {
  switch (mode_) {
  case Mode::Small:
    return small_or_big(-static_cast<i128>(sn_), sd_);
  case Mode::Big:
    return Scalar(Rational(-*q_));
  case Mode::Poly:
    break;
  }
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar Scalar::operator+(const Scalar &o) const {
  if (mode_ == Mode::Small && o.mode_ == Mode::Small) {
    if (sd_ == o.sd_)
      return small_or_big(static_cast<i128>(sn_) + o.sn_, sd_);
    return small_or_big(static_cast<i128>(sn_) * o.sd_ + static_cast<i128>(o.sn_) * sd_,
                        static_cast<i128>(sd_) * o.sd_);
  }
  if (is_constant() && o.is_constant())
    return Scalar(Rational(rat() + o.rat()));
  if (o.is_zero())
    return *this;
  if (is_zero())
    return o;
  if (den_.is_zero() && o.den_.is_zero())
    return Scalar(num() + o.num());
  if (mode_ == Mode::Poly && o.mode_ == Mode::Poly && den_ == o.den_)
    return Scalar(num_ + o.num_, den_);
  return Scalar(num() * o.den() + o.num() * den(), den() * o.den());
}

Scalar Scalar::operator-(const Scalar &o) const {
  if (mode_ == Mode::Small && o.mode_ == Mode::Small) {
    if (sd_ == o.sd_)
      return small_or_big(static_cast<i128>(sn_) - o.sn_, sd_);
    return small_or_big(static_cast<i128>(sn_) * o.sd_ - static_cast<i128>(o.sn_) * sd_,
                        static_cast<i128>(sd_) * o.sd_);
  }
  return *this + (-o);
}

Scalar Scalar::operator*(const Scalar &o) const {
  if (mode_ == Mode::Small && o.mode_ == Mode::Small)
    return small_or_big(static_cast<i128>(sn_) * o.sn_, static_cast<i128>(sd_) * o.sd_);
  if (is_zero() || o.is_zero())
    return Scalar();
  if (is_constant() && o.is_constant())
    return Scalar(Rational(rat() * o.rat()));
  if (is_constant() || o.is_constant()) {
    const Scalar &p = is_constant() ? o : *this;
    Scalar r = p;
    r.num_ = p.num_.scaled(is_constant() ? rat() : o.rat());
    return r;
  }
  if (den_.is_zero() && o.den_.is_zero())
    return Scalar(num_ * o.num_);
  return Scalar(num_ * o.num_, dpoly() * o.dpoly());
}

Scalar Scalar::operator/(const Scalar &o) const {
  if (o.is_zero())
    throw Error(ErrorCode::DivisionByZero, "division by an identically zero scalar");
  if (mode_ == Mode::Small && o.mode_ == Mode::Small)
    return small_or_big(static_cast<i128>(sn_) * o.sd_, static_cast<i128>(sd_) * o.sn_);
  if (o.is_constant()) {
    if (is_constant())
      return Scalar(Rational(rat() / o.rat()));
    Scalar r = *this;
    r.num_ = num_.scaled(Rational(1) / o.rat());
    return r;
  }
  return Scalar(num() * o.dpoly(), den() * o.num_);
}

bool Scalar::operator==(const Scalar &o) const {
  if (mode_ == Mode::Small && o.mode_ == Mode::Small)
    return sn_ == o.sn_ && sd_ == o.sd_;
  if (is_constant() && o.is_constant())
    return rat() == o.rat();
  if (mode_ == Mode::Poly && o.mode_ == Mode::Poly && den_ == o.den_)
    return num_ == o.num_;
  return (num() * o.den() - o.num() * den()).is_zero();
}

Scalar Scalar::substitute(const std::map<std::size_t, Rational> &values) const {
  if (mode_ != Mode::Poly)
    return *this;
  Poly n = num_.substitute(values);
  Poly d = dpoly().substitute(values);
  if (d.is_zero())
    throw Error(ErrorCode::EvalDenZero, "denominator vanishes at the binding");
  return Scalar(std::move(n), std::move(d));
}

Scalar Scalar::substitute(const ParamRing &ring,
                          const std::map<std::string, Rational> &values) const {
  std::map<std::size_t, Rational> idx;
  for (const auto &[name, v] : values) {
    auto i = ring.index_of(name);
    if (!i)
      throw Error(ErrorCode::UnknownParam, "unknown parameter '" + name + "'");
    idx[*i] = v;
  }
  return substitute(idx);
}

namespace {

bool needs_parens(const Poly &p) {
  if (p.terms().size() != 1)
    return true;
  const Term &t = p.terms()[0];
  if (t.coef != 1) // a coefficient makes "a/2*l" parse wrongly
    return !t.mono.empty();
  std::size_t vars = 0;
  for (auto e : t.mono)
    vars += e != 0;
  return vars > 1;
}

} // namespace

std::string Scalar::render(const ParamRing &ring) const {
  if (mode_ != Mode::Poly)
    return Poly(rat()).render(ring);
  if (den_.is_zero())
    return num_.render(ring);
  std::string n = num_.render(ring);
  if (num_.terms().size() > 1)
    n = "(" + n + ")";
  std::string d = den_.render(ring);
  if (needs_parens(den_))
    d = "(" + d + ")";
  return n + "/" + d;
}

bool Scalar::numerator_divisible_by(const Poly &p) const {
  return num().divide_exact(p).has_value();
}

} // namespace prelie
