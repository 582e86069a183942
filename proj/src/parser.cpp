#include "summandlab/parser.hpp"

#include <cctype>

#include "summandlab/errors.hpp"

namespace summandlab {

namespace {

class Parser {
 public:
  Parser(const std::string& text, const PolyRing& ring) : text_(text), ring_(ring) {}

  Polynomial run() {
    Polynomial p = parse_sum();
    skip_space();
    if (pos_ != text_.size()) {
      fail("unexpected trailing input");
    }
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(Errc::SyntaxError, message, pos_);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Polynomial parse_sum() {
    Polynomial acc = parse_product();
    while (true) {
      if (eat('+')) {
        acc = acc + parse_product();
      } else if (eat('-')) {
        acc = acc - parse_product();
      } else {
        return acc;
      }
    }
  }

  Polynomial parse_product() {
    Polynomial acc = parse_power();
    while (eat('*')) acc = acc * parse_power();
    return acc;
  }

  Polynomial parse_power() {
    bool negate = false;
    while (true) {
      if (eat('-')) {
        negate = !negate;
      } else if (eat('+')) {
        // no effect
      } else {
        break;
      }
    }
    Polynomial base = parse_atom();
    while (eat('^')) {
      skip_space();
      std::size_t start = pos_;
      long e = parse_natural();
      if (e > 4096) {
        pos_ = start;
        fail("exponent too large");
      }
      base = base.pow(static_cast<int>(e));
    }
    return negate ? -base : base;
  }

  Polynomial parse_atom() {
    char c = peek();
    if (c == '(') {
      eat('(');
      Polynomial inner = parse_sum();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return Polynomial::constant(ring_, parse_rational());
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      std::string name = parse_identifier();
      auto idx = ring_.index_of(name);
      if (!idx) {
        throw ParseError(Errc::UnknownVariable, "unknown variable '" + name + "'", start);
      }
      return Polynomial::variable(ring_, *idx);
    }
    fail(c == '\0' ? "unexpected end of input" : std::string("unexpected character '") + c + "'");
  }

  std::string parse_identifier() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
        ++pos_;
      } else {
        break;
      }
    }
    return text_.substr(start, pos_ - start);
  }

  long parse_natural() {
    skip_space();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected a nonnegative integer");
    }
    long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1000000) fail("integer literal too large for an exponent");
      ++pos_;
    }
    return value;
  }

  Scalar parse_rational() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string num = text_.substr(start, pos_ - start);
    // A '/' directly after an integer literal extends it to a rational literal.
    std::size_t save = pos_;
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      skip_space();
      std::size_t dstart = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (dstart == pos_) fail("expected denominator digits");
      std::string den = text_.substr(dstart, pos_ - dstart);
      if (Integer(den) == 0) fail("zero denominator");
      Scalar q(num + "/" + den);
      q.canonicalize();
      return q;
    }
    pos_ = save;
    return Scalar(num);
  }

  const std::string& text_;
  const PolyRing& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const PolyRing& ring) {
  return Parser(text, ring).run();
}

}  // namespace summandlab
