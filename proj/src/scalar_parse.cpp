#include <cctype>

#include "leibniz/errors.hpp"
#include "leibniz/scalar.hpp"

namespace leibniz {
namespace {

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view text) : text_(text) {}

  RationalFunction parse() {
    RationalFunction value = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " in scalar '" + std::string(text_) + "'", 1, pos_ + 1);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RationalFunction expr() {
    RationalFunction acc = term();
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }

  RationalFunction term() {
    RationalFunction acc = unary();
    for (;;) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        RationalFunction d = unary();
        if (d.is_zero()) {
          pos_ = at;
          fail("division by zero");
        }
        acc /= d;
      } else {
        return acc;
      }
    }
  }

  RationalFunction unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  RationalFunction power() {
    RationalFunction base = atom();
    if (!accept('^')) return base;
    skip_space();
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    const mpz_class e = integer();
    if (e > 4096) fail("exponent too large");
    const long k = e.get_si();
    RationalFunction out(1);
    for (long i = 0; i < k; ++i) out *= base;
    if (negative) {
      if (out.is_zero()) fail("division by zero");
      out = out.inverse();
    }
    return out;
  }

  RationalFunction atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RationalFunction inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == 't') {
      ++pos_;
      return RationalFunction::t();
    }
    if (std::isdigit(static_cast<unsigned char>(c)))
      return RationalFunction(Rational(integer()));
    fail(std::string("unexpected '") + c + "'");
  }

  mpz_class integer() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (start == pos_) fail("expected digits");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_rational_function(std::string_view text) {
  return ScalarParser(text).parse();
}

Rational parse_rational(std::string_view text) {
  const RationalFunction f = parse_rational_function(text);
  if (!f.is_constant())
    throw ParseError("scalar '" + std::string(text) + "' depends on t but the field is Q",
                     1, 1);
  return f.constant_value();
}

}  // namespace leibniz
