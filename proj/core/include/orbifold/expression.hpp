#pragma once

#include <gmpxx.h>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace orbifold {

class ParseError : public std::runtime_error {
 public:
  enum class Kind { Syntax, DivisionByZero, RootOrder, UnknownSymbol, Domain };

  ParseError(Kind kind, std::size_t position, const std::string& message)
      : std::runtime_error(message + " (at offset " + std::to_string(position) + ")"),
        kind_(kind),
        position_(position) {}

  Kind kind() const noexcept { return kind_; }
  std::size_t position() const noexcept { return position_; }

 private:
  Kind kind_;
  std::size_t position_;
};

/// Recursive-descent parser for the arithmetic expression grammar shared by
/// scalars, free-algebra elements and group words:
///
///   expr   := term (('+' | '-') term)*
///   term   := unary (('*' | '/') unary)*
///   unary  := ('-' | '+') unary | power
///   power  := atom ('^' exponent)?
///   atom   := INTEGER | 'E' '(' INTEGER ')' | IDENT | '(' expr ')'
///   exponent := '-'? INTEGER | '(' '-'? INTEGER ')'
///
/// The meaning of each production is supplied by `Semantics`, which defines
/// `Value` and the callbacks used below. Callbacks report domain errors by
/// throwing ParseError themselves.
template <class Semantics>
class ExpressionParser {
 public:
  using Value = typename Semantics::Value;

  ExpressionParser(std::string_view text, Semantics& semantics)
      : text_(text), sem_(semantics) {}

  Value parse() {
    skip_space();
    if (pos_ == text_.size()) fail("empty expression");
    Value v = parse_expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(ParseError::Kind::Syntax, pos_, what);
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

  bool peek_digit() {
    skip_space();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  mpz_class read_integer() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  Value parse_expr() {
    Value lhs = parse_term();
    for (;;) {
      if (accept('+')) {
        lhs = sem_.add(std::move(lhs), parse_term());
      } else if (accept('-')) {
        lhs = sem_.subtract(std::move(lhs), parse_term());
      } else {
        return lhs;
      }
    }
  }

  Value parse_term() {
    Value lhs = parse_unary();
    for (;;) {
      skip_space();
      std::size_t at = pos_;
      if (accept('*')) {
        lhs = sem_.multiply(std::move(lhs), parse_unary(), at);
      } else if (accept('/')) {
        lhs = sem_.divide(std::move(lhs), parse_unary(), at);
      } else {
        return lhs;
      }
    }
  }

  Value parse_unary() {
    if (accept('-')) return sem_.negate(parse_unary());
    if (accept('+')) return parse_unary();
    return parse_power();
  }

  Value parse_power() {
    Value base = parse_atom();
    skip_space();
    std::size_t at = pos_;
    if (!accept('^')) return base;
    bool paren = accept('(');
    bool negative = accept('-');
    mpz_class e = read_integer();
    if (paren) expect(')');
    if (!e.fits_slong_p()) fail("exponent out of range");
    long exponent = e.get_si();
    return sem_.power(std::move(base), negative ? -exponent : exponent, at);
  }

  Value parse_atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    std::size_t at = pos_;
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return sem_.integer(read_integer(), at);
    if (c == '(') {
      ++pos_;
      Value v = parse_expr();
      expect(')');
      return v;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string_view name = text_.substr(start, pos_ - start);
      std::size_t after_name = pos_;
      if (name == "E" && accept('(')) {
        mpz_class n = read_integer();
        expect(')');
        if (n <= 0 || !n.fits_sint_p()) {
          throw ParseError(ParseError::Kind::Domain, at, "E(n) needs a positive order");
        }
        return sem_.root_of_unity(static_cast<int>(n.get_si()), at);
      }
      pos_ = after_name;
      return sem_.identifier(name, at);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  Semantics& sem_;
  std::size_t pos_ = 0;
};

}  // namespace orbifold
