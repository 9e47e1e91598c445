#include <cctype>

#include "jumpnum/errors.hpp"
#include "jumpnum/puiseux.hpp"

namespace jumpnum {
namespace {

constexpr long kMaxExponent = 1000;

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Poly2 run() {
    Poly2 p = expr();
    skip();
    if (pos_ < s_.size()) {
      if (s_[pos_] == ')') fail("unbalanced ')'");
      fail("expected an operator");
    }
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly2 expr() {
    Poly2 p = term();
    while (true) {
      if (eat('+')) {
        p += term();
      } else if (eat('-')) {
        p -= term();
      } else {
        return p;
      }
    }
  }

  Poly2 term() {
    Poly2 p = unary();
    while (eat('*')) p = p * unary();
    return p;
  }

  Poly2 unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  Poly2 power() {
    Poly2 base = atom();
    if (!eat('^')) return base;
    skip();
    const std::size_t start = pos_;
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected a nonnegative integer exponent");
    const Integer e = digits();
    if (cmp(e, Integer(kMaxExponent)) > 0) throw ParseError("exponent exceeds " + std::to_string(kMaxExponent), start);
    return base.pow(static_cast<int>(e.get_si()));
  }

  Integer digits() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  Poly2 atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const Integer num = digits();
      if (!eat('/')) return Poly2(Rational(num));
      skip();
      const std::size_t at = pos_;
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected a denominator");
      const Integer den = digits();
      if (den == 0) throw ParseError("zero denominator", at);
      return Poly2(Rational(num, den));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const std::string_view name = s_.substr(start, pos_ - start);
      if (name == "x") return Poly2::x();
      if (name == "y") return Poly2::y();
      throw ParseError("unknown identifier '" + std::string(name) + "'", start);
    }
    if (c == '(') {
      ++pos_;
      Poly2 p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly2 parse_polynomial(std::string_view text) { return Parser(text).run(); }

}  // namespace jumpnum
