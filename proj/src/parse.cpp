#include "prelie/parse.hpp"

#include <cctype>
#include <sstream>

namespace prelie {

namespace {

class Parser {
public:
  Parser(std::string_view text, const ParamRing &ring) : s_(text), ring_(ring) {}

  Scalar run() {
    Scalar v = expr();
    skip_ws();
    if (pos_ != s_.size())
      fail(after_operand());
    return v;
  }

private:
  std::string_view s_;
  const ParamRing &ring_;
  std::size_t pos_ = 0;
  int depth_ = 0;

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  std::vector<std::string> after_operand() const {
    std::vector<std::string> e;
    if (depth_ > 0)
      e.push_back(")");
    for (const char *t : {"+", "-", "*", "/", "^"})
      e.emplace_back(t);
    if (depth_ == 0)
      e.emplace_back("end of input");
    return e;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) {
    std::ostringstream os;
    os << "parse error at offset " << pos_ << ": ";
    if (pos_ < s_.size())
      os << "unexpected '" << s_[pos_] << "'";
    else
      os << "unexpected end of input";
    os << ", expected one of {";
    for (std::size_t i = 0; i < expected.size(); ++i)
      os << (i ? ", " : "") << expected[i];
    os << "}";
    throw Error(ErrorCode::ParseError, os.str(), pos_, std::move(expected));
  }

  Scalar expr() {
    Scalar v = term();
    for (;;) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        v = v + term();
      } else if (c == '-') {
        ++pos_;
        v = v - term();
      } else {
        return v;
      }
    }
  }

  Scalar term() {
    Scalar v = unary();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        v = v * unary();
      } else if (c == '/') {
        ++pos_;
        std::size_t at = pos_;
        Scalar d = unary();
        if (d.is_zero())
          throw Error(ErrorCode::DivisionByZero,
                      "division by zero at offset " + std::to_string(at), at, {});
        v = v / d;
      } else {
        return v;
      }
    }
  }

  Scalar unary() {
    if (peek() == '-') {
      ++pos_;
      return -unary();
    }
    return power();
  }

  Scalar power() {
    Scalar base = primary();
    while (peek() == '^') {
      ++pos_;
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        ++pos_;
      if (start == pos_)
        fail({"non-negative integer exponent"});
      unsigned long e = std::stoul(std::string(s_.substr(start, pos_ - start)));
      Scalar r(1L);
      for (unsigned long k = 0; k < e; ++k)
        r = r * base;
      base = r;
    }
    return base;
  }

  Scalar primary() {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        ++pos_;
      return Scalar(Rational(mpz_class(std::string(s_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                                  s_[pos_] == '_'))
        ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      auto idx = ring_.index_of(name);
      if (!idx)
        throw Error(ErrorCode::UnknownParam,
                    "unknown parameter '" + name + "' at offset " + std::to_string(start),
                    start, {});
      return Scalar::param(*idx);
    }
    if (c == '(') {
      ++pos_;
      ++depth_;
      Scalar v = expr();
      if (peek() != ')')
        fail(after_operand());
      ++pos_;
      --depth_;
      return v;
    }
    fail({"integer", "identifier", "(", "-"});
  }
};

} // namespace

Scalar parse_scalar(std::string_view text, const ParamRing &ring) {
  return Parser(text, ring).run();
}

Rational parse_rational(std::string_view text) {
  static const ParamRing empty;
  Scalar s = parse_scalar(text, empty);
  return s.constant_value();
}

} // namespace prelie
