#include "lamod/parser.hpp"

#include <cctype>

#include "lamod/error.hpp"

namespace lamod {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const ChartPtr& chart) : text_(text), chart_(chart) {}

  Scalar parse() {
    Scalar value = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }

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

  Scalar expr() {
    Scalar value = term();
    for (;;) {
      if (accept('+')) {
        value += term();
      } else if (accept('-')) {
        value -= term();
      } else {
        return value;
      }
    }
  }

  Scalar term() {
    Scalar value = unary();
    for (;;) {
      if (accept('*')) {
        value *= unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        const Scalar divisor = unary();
        if (!divisor.is_constant()) throw ParseError(at, "division by a non-constant");
        if (divisor.is_zero()) throw ParseError(at, "division by zero");
        value = value.divided_by(divisor.constant_term());
      } else {
        return value;
      }
    }
  }

  Scalar unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Scalar power() {
    Scalar base = primary();
    if (accept('^')) {
      skip_space();
      const std::size_t at = pos_;
      const long exponent = integer();
      if (exponent > 1000) throw ParseError(at, "exponent too large");
      return base.pow(static_cast<unsigned>(exponent));
    }
    return base;
  }

  long integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a non-negative integer");
    if (pos_ - start > 9) throw ParseError(start, "integer too large");
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

  std::string name() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  Scalar primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Scalar inner = expr();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      mpz_class value(std::string(text_.substr(start, pos_ - start)));
      return Scalar(Gaussian(mpq_class(value)), chart_);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      const std::string id = name();
      if (id == "I") return Scalar(Gaussian::i(), chart_);
      if (id == "cis") return cis(start);
      if (!chart_) throw UnknownCoordinate("unknown coordinate '" + id + "' at " + std::to_string(start));
      const auto slot = chart_->find(id);
      if (!slot) throw UnknownCoordinate("unknown coordinate '" + id + "' at " + std::to_string(start));
      if (chart_->is_torus(*slot)) {
        throw ParseError(start, "torus coordinate '" + id + "' may only appear inside cis(k, " + id + ")");
      }
      return Scalar::coordinate(chart_, *slot);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Scalar cis(std::size_t start) {
    expect('(');
    const bool negative = accept('-');
    const long k = integer();
    expect(',');
    skip_space();
    const std::size_t at = pos_;
    const std::string id = name();
    if (id.empty()) fail("expected a torus coordinate");
    const auto slot = chart_ ? chart_->find(id) : std::nullopt;
    if (!slot) throw UnknownCoordinate("unknown coordinate '" + id + "' at " + std::to_string(at));
    if (!chart_->is_torus(*slot)) throw ParseError(at, "cis applied to polynomial coordinate '" + id + "'");
    expect(')');
    if (k > 10000) throw ParseError(start, "frequency too large");
    Monomial m{};
    m[*slot] = static_cast<std::int16_t>(negative ? -k : k);
    return Scalar::monomial(chart_, m);
  }

  std::string_view text_;
  ChartPtr chart_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text, const ChartPtr& chart) {
  Scalar s = Parser(text, chart).parse();
  if (s.is_zero() && !s.chart()) return Scalar(Gaussian(), chart);
  return s;
}

}  // namespace lamod
