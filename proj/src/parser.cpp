#include "descent/parser.hpp"

#include <cctype>
#include <string>

#include "descent/errors.hpp"

namespace descent {

namespace {

class Parser {
 public:
  Parser(std::string_view src, const RingPtr& ring) : src_(src), ring_(ring) {}

  Polynomial parse() {
    skip_ws();
    if (pos_ == src_.size()) throw ParseError(pos_, "empty expression");
    Polynomial f = expr();
    skip_ws();
    if (pos_ != src_.size()) {
      if (src_[pos_] == ')') throw ParseError(pos_, "unbalanced ')'");
      throw ParseError(pos_, std::string("unexpected '") + src_[pos_] + "'");
    }
    return f;
  }

 private:
  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc(ring_);
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    Polynomial t = term();
    acc = negate ? -t : t;
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) {
      const std::size_t at = pos_;
      try {
        acc = acc * factor();
      } catch (const EngineLimitError&) {
        throw ParseError(at, "exponent too large");
      }
    }
    skip_ws();
    if (pos_ < src_.size() &&
        (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_' ||
         src_[pos_] == '(')) {
      throw ParseError(pos_, "missing '*' between factors");
    }
    return acc;
  }

  Polynomial factor() {
    skip_ws();
    if (pos_ == src_.size()) throw ParseError(pos_, "unexpected end of input");
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return Polynomial::constant(ring_, integer_mod_p());
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                                    src_[pos_] == '_')) {
        ++pos_;
      }
      std::string_view name = src_.substr(start, pos_ - start);
      int idx = ring_->index_of(name);
      if (idx < 0) throw ParseError(start, "unknown variable '" + std::string(name) + "'");
      Monomial m(ring_->nvars());
      m.set(static_cast<std::size_t>(idx), 1);
      if (accept('^')) m.set(static_cast<std::size_t>(idx), exponent());
      return Polynomial::monomial(ring_, m, 1);
    }
    if (c == '(') {
      const std::size_t open = pos_;
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) {
        skip_ws();
        if (pos_ == src_.size()) throw ParseError(open, "unbalanced '('");
        throw ParseError(pos_, "expected ')'");
      }
      if (accept('^')) {
        const std::size_t at = pos_;
        unsigned e = exponent();
        try {
          inner = pow(inner, e);
        } catch (const EngineLimitError&) {
          throw ParseError(at, "exponent too large");
        }
      }
      return inner;
    }
    if (c == ')') throw ParseError(pos_, "unbalanced ')'");
    throw ParseError(pos_, std::string("unexpected '") + c + "'");
  }

  // Reads a decimal literal, reducing mod p digit by digit.
  long long integer_mod_p() {
    const unsigned p = ring_->p();
    long long r = 0;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      r = (r * 10 + (src_[pos_] - '0')) % p;
      ++pos_;
    }
    return r;
  }

  unsigned exponent() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ == src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      throw ParseError(start, "malformed exponent");
    }
    unsigned long long e = 0;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      e = e * 10 + static_cast<unsigned>(src_[pos_] - '0');
      if (e > Monomial::kMaxExponent) throw ParseError(start, "exponent too large");
      ++pos_;
    }
    if (e == 0) throw ParseError(start, "malformed exponent: must be positive");
    return static_cast<unsigned>(e);
  }

  std::string_view src_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(std::string_view src, const RingPtr& ring) {
  return Parser(src, ring).parse();
}

}  // namespace descent
