#include "fibercone/parser.hpp"

#include <cctype>

#include "fibercone/errors.hpp"

namespace fibercone {

namespace {

class Parser {
 public:
  Parser(const std::string& text, const PolyRing& ring)
      : text_(text), ring_(ring) {}

  Polynomial parse_expr() {
    skip_ws();
    bool neg = eat('-');
    Polynomial acc = parse_term();
    if (neg) acc = acc.negated();
    for (;;) {
      skip_ws();
      if (eat('+')) {
        acc = acc.plus(parse_term());
      } else if (eat('-')) {
        acc = acc.minus(parse_term());
      } else {
        break;
      }
    }
    return acc;
  }

  void expect_end() {
    skip_ws();
    if (pos_ < text_.size())
      throw ParseError("unexpected character '" + std::string(1, text_[pos_]) +
                           "'",
                       pos_);
  }

  size_t pos() const { return pos_; }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  bool eat_comma() {
    skip_ws();
    return eat(',');
  }

 private:
  Polynomial parse_term() {
    skip_ws();
    Polynomial acc = Polynomial::constant(ring_, 1);
    bool saw_factor = false;
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      acc = Polynomial::constant(ring_, parse_nat());
      saw_factor = true;
    }
    for (;;) {
      skip_ws();
      bool star = eat('*');
      skip_ws();
      if (pos_ < text_.size() &&
          (std::isalpha(static_cast<unsigned char>(text_[pos_])) ||
           text_[pos_] == '_')) {
        acc = acc.times(parse_factor());
        saw_factor = true;
      } else if (star) {
        throw ParseError("expected factor after '*'", pos_);
      } else {
        break;
      }
    }
    if (!saw_factor) throw ParseError("expected term", pos_);
    return acc;
  }

  Polynomial parse_factor() {
    size_t start = pos_;
    std::string name;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_')) {
      name += text_[pos_++];
    }
    int idx = ring_.var_index(name);
    if (idx < 0) throw ParseError("unknown variable '" + name + "'", start);
    uint32_t e = 1;
    skip_ws();
    if (eat('^')) {
      skip_ws();
      if (pos_ >= text_.size() ||
          !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        throw ParseError("expected exponent after '^'", pos_);
      e = parse_nat();
    }
    return Polynomial::monomial(
        ring_, Monomial::var(ring_.nvars(), static_cast<size_t>(idx), e));
  }

  uint32_t parse_nat() {
    size_t start = pos_;
    uint64_t v = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<uint64_t>(text_[pos_] - '0');
      if (v > (1u << 30)) throw ParseError("number too large", start);
      ++pos_;
    }
    return static_cast<uint32_t>(v);
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  const std::string& text_;
  const PolyRing& ring_;
  size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(const std::string& text, const PolyRing& ring) {
  Parser p(text, ring);
  Polynomial f = p.parse_expr();
  p.expect_end();
  return f;
}

std::vector<Polynomial> parse_poly_list(const std::string& text,
                                        const PolyRing& ring) {
  Parser p(text, ring);
  std::vector<Polynomial> out;
  if (p.at_end()) return out;
  for (;;) {
    out.push_back(p.parse_expr());
    if (!p.eat_comma()) break;
  }
  p.expect_end();
  return out;
}

}  // namespace fibercone
