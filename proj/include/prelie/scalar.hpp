#pragma once

#include "prelie/error.hpp"
#include "prelie/poly.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace prelie {

class ParamRing {
public:
  ParamRing() = default;
  explicit ParamRing(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string> &names() const { return names_; }
  const std::string &name(std::size_t i) const;
  std::optional<std::size_t> index_of(const std::string &name) const;

  bool operator==(const ParamRing &o) const { return names_ == o.names_; }

  static bool valid_name(const std::string &name);

private:
  std::vector<std::string> names_;
};

// Element of Q(params): num/den, compared by cross-multiplication.
// Constants are held as a reduced machine-word fraction, widening to GMP on
// overflow; the polynomial pair is used only once a parameter appears.
class Scalar {
public:
  Scalar() = default;
  Scalar(long v) : sn_(v) {}
  Scalar(const Rational &q);
  explicit Scalar(Poly p);
  Scalar(Poly num, Poly den);

  static Scalar param(std::size_t index) { return Scalar(Poly::variable(index)); }

  Poly num() const;
  Poly den() const;

  bool is_zero() const { return mode_ == Mode::Small && sn_ == 0; }
  bool is_constant() const { return mode_ != Mode::Poly; }
  Rational constant_value() const;
  bool is_one() const { return mode_ == Mode::Small && sn_ == 1 && sd_ == 1; }

  Scalar operator-() const;
  Scalar operator+(const Scalar &o) const;
  Scalar operator-(const Scalar &o) const;
  Scalar operator*(const Scalar &o) const;
  Scalar operator/(const Scalar &o) const;
  Scalar &operator+=(const Scalar &o) { return *this = *this + o; }
  Scalar &operator-=(const Scalar &o) { return *this = *this - o; }
  Scalar &operator*=(const Scalar &o) { return *this = *this * o; }

  bool operator==(const Scalar &o) const;
  bool operator!=(const Scalar &o) const { return !(*this == o); }

  // Bindings by parameter index; unbound parameters stay symbolic.
  Scalar substitute(const std::map<std::size_t, Rational> &values) const;
  Scalar substitute(const ParamRing &ring,
                    const std::map<std::string, Rational> &values) const;

  std::string render(const ParamRing &ring) const;

  // True when the numerator is divisible by p (used for factor reports).
  bool numerator_divisible_by(const Poly &p) const;

private:
  enum class Mode : unsigned char { Small, Big, Poly };
  Mode mode_ = Mode::Small;
  long sn_ = 0, sd_ = 1;
  // Engaged only in Big mode.
  std::optional<Rational> q_;
  Poly num_;
  // Empty means 1.
  Poly den_;
  const Poly &dpoly() const { return den_.is_zero() ? one() : den_; }
  static const Poly &one();
  void normalize();
  // Drops to the constant form when the fraction has no parameters left.
  void settle();
  Rational rat() const;
  static Scalar small_or_big(__int128 n, __int128 d);
};

} // namespace prelie
