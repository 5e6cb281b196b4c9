#include "pbfa/expr_parser.hpp"

#include <cctype>
#include <map>

namespace pbfa {

namespace {

// Sparse working form used only while parsing; mask -> coefficient.
using Terms = std::map<std::uint32_t, Rational>;

void add_term(Terms& into, std::uint32_t mask, const Rational& coeff) {
  auto [it, inserted] = into.try_emplace(mask, coeff);
  if (!inserted) it->second += coeff;
}

Terms multiply(const Terms& a, const Terms& b) {
  Terms out;
  for (const auto& [s, ca] : a) {
    for (const auto& [t, cb] : b) {
      add_term(out, s | t, ca * cb);  // mask union collapses x*x to x
    }
  }
  return out;
}

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  MultilinearPolynomial run() {
    Terms terms = parse_expr();
    skip_ws();
    if (pos_ < text_.size()) throw ParseError("unexpected character", pos_);
    MultilinearPolynomial p(max_index_);
    for (const auto& [mask, coeff] : terms) p[mask] += coeff;
    return p;
  }

private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Terms parse_expr() {
    Terms sum = parse_term();
    while (true) {
      const char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      Terms rhs = parse_term();
      for (auto& [mask, coeff] : rhs) {
        add_term(sum, mask, c == '-' ? -coeff : coeff);
      }
    }
    return sum;
  }

  Terms parse_term() {
    bool negate = false;
    const char head = peek();
    if (head == '+' || head == '-') {
      negate = head == '-';
      ++pos_;
    }
    Terms product = parse_factor();
    while (peek() == '*') {
      ++pos_;
      product = multiply(product, parse_factor());
    }
    if (negate) {
      for (auto& [mask, coeff] : product) coeff = -coeff;
    }
    return product;
  }

  Terms parse_factor() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Terms inner = parse_expr();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    if (c == 'x') {
      ++pos_;
      return parse_variable();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return parse_literal();
    }
    throw ParseError(pos_ >= text_.size() ? "unexpected end of expression" : "expected a literal, variable or '('",
                     pos_);
  }

  Terms parse_variable() {
    const std::size_t start = pos_;
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      throw ParseError("expected a variable index after 'x'", pos_);
    }
    int index = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      index = index * 10 + (text_[pos_] - '0');
      if (index > kMaxArity) break;
      ++pos_;
    }
    if (index < 1 || index > kMaxArity) {
      throw ParseError("variable index must be between 1 and " + std::to_string(kMaxArity), start);
    }
    max_index_ = std::max(max_index_, index);
    Terms t;
    t.emplace(1u << (index - 1), Rational(1));
    return t;
  }

  Terms parse_literal() {
    const std::size_t start = pos_;
    auto scan_digits = [&] {
      const std::size_t from = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return pos_ > from;
    };
    scan_digits();
    if (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == '/')) {
      const char sep = text_[pos_];
      ++pos_;
      if (!scan_digits()) {
        throw ParseError(std::string("expected digits after '") + sep + "'", pos_);
      }
    }
    Terms t;
    try {
      t.emplace(0u, Rational::from_string(text_.substr(start, pos_ - start)));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), start);
    }
    return t;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int max_index_ = 0;
};

}  // namespace

MultilinearPolynomial parse_expression(std::string_view text) { return Parser(text).run(); }

}  // namespace pbfa
