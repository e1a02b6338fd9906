// Recursive-descent parser for the coordinate expression grammar.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('+' | '-') unary | primary
//   primary := number | 'sqrt' '(' expr ')' | '(' expr ')'
//   number  := digits ['.' digits] [('e' | 'E') ['+' | '-'] digits]

#include <cctype>
#include <stdexcept>
#include <string>

#include "udrig/tower.hpp"

namespace udrig {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  TowerElem parse_all() {
    TowerElem v = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("expression '" + std::string(text_) + "' at offset " + std::to_string(pos_) +
                                ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  TowerElem expr() {
    TowerElem v = term();
    for (;;) {
      if (accept('+')) {
        v = v + term();
      } else if (accept('-')) {
        v = v - term();
      } else {
        return v;
      }
    }
  }

  TowerElem term() {
    TowerElem v = unary();
    for (;;) {
      if (accept('*')) {
        v = v * unary();
      } else if (accept('/')) {
        TowerElem d = unary();
        if (d.is_zero()) fail("division by zero");
        v = v / d;
      } else {
        return v;
      }
    }
  }

  TowerElem unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return primary();
  }

  TowerElem primary() {
    skip_space();
    if (accept('(')) {
      TowerElem v = expr();
      expect(')');
      return v;
    }
    if (text_.substr(pos_, 4) == "sqrt") {
      pos_ += 4;
      expect('(');
      TowerElem v = expr();
      expect(')');
      if (v.sign() < 0) fail("square root of a negative value");
      return TowerElem::sqrt(v);
    }
    if (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) {
      return number();
    }
    fail("expected a number, 'sqrt(' or '('");
  }

  TowerElem number() {
    std::string digits;
    long exponent = 0;
    bool any = false;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      digits += text_[pos_++];
      any = true;
    }
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        digits += text_[pos_++];
        --exponent;
        any = true;
      }
    }
    if (!any) fail("malformed number");
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      ++pos_;
      bool negative = false;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) negative = text_[pos_++] == '-';
      std::string exp_digits;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) exp_digits += text_[pos_++];
      if (exp_digits.empty() || exp_digits.size() > 6) fail("malformed exponent");
      long e = std::stol(exp_digits);
      exponent += negative ? -e : e;
    }
    Rational value{Integer(digits, 10)};
    Integer ten_power;
    mpz_ui_pow_ui(ten_power.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    if (exponent < 0) {
      value /= Rational(ten_power);
    } else {
      value *= Rational(ten_power);
    }
    value.canonicalize();
    return TowerElem(value);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

TowerElem TowerElem::parse(std::string_view text) { return Parser(text).parse_all(); }

}  // namespace udrig
