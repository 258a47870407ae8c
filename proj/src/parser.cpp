#include "arcmodel/parser.hpp"

#include <cctype>

namespace arcmodel {

namespace {

struct Parser {
  const std::string& text;
  const VarSetPtr& vars;
  const FieldSpec& field;
  std::size_t pos = 0;

  [[noreturn]] void syntax_error(const std::string& what, std::size_t at) {
    fail(ErrorCode::SyntaxError, what, "position " + std::to_string(at));
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
  }

  bool peek_is(char c) {
    skip_ws();
    return pos < text.size() && text[pos] == c;
  }

  bool accept(char c) {
    if (peek_is(c)) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c, const std::string& what) {
    if (!accept(c)) syntax_error("expected '" + std::string(1, c) + "' " + what, pos);
  }

  bool at_digit() {
    skip_ws();
    return pos < text.size() && std::isdigit((unsigned char)text[pos]);
  }

  bool at_ident() {
    skip_ws();
    return pos < text.size() &&
           (std::isalpha((unsigned char)text[pos]) || text[pos] == '_');
  }

  BigInt parse_uint() {
    skip_ws();
    if (!at_digit()) syntax_error("expected digits", pos);
    BigInt v = 0;
    while (pos < text.size() && std::isdigit((unsigned char)text[pos])) {
      v = v * 10 + (text[pos] - '0');
      ++pos;
    }
    return v;
  }

  std::uint64_t parse_small_uint() {
    std::size_t at = pos;
    BigInt v = parse_uint();
    if (v > 1000000) syntax_error("exponent too large", at);
    return (std::uint64_t)v;
  }

  Poly parse_rational() {
    skip_ws();
    std::size_t at = pos;
    bool neg = accept('-');
    if (!at_digit()) syntax_error("expected number", at);
    BigInt num = parse_uint();
    BigInt den = 1;
    if (accept('/')) {
      std::size_t dat = pos;
      skip_ws();
      if (!at_digit()) syntax_error("expected denominator digits", dat);
      den = parse_uint();
      if (den == 0) syntax_error("zero denominator", dat);
    }
    if (neg) num = -num;
    Scalar c = Scalar::from_rational(field, num, den);
    return Poly::constant(vars, c);
  }

  Poly parse_base() {
    skip_ws();
    if (pos >= text.size()) syntax_error("unexpected end of input", pos);
    if (accept('(')) {
      Poly inner = parse_expr();
      expect(')', "to close parenthesis");
      return inner;
    }
    if (at_ident()) {
      std::size_t at = pos;
      std::string name;
      while (pos < text.size() &&
             (std::isalnum((unsigned char)text[pos]) || text[pos] == '_')) {
        name += text[pos];
        ++pos;
      }
      auto idx = vars->index_of(name);
      if (!idx)
        fail(ErrorCode::UnknownVariable, "unknown variable '" + name + "'",
             "position " + std::to_string(at));
      return Poly::variable(vars, *idx, Scalar::one(field));
    }
    skip_ws();
    if (at_digit() || peek_is('-')) return parse_rational();
    syntax_error("expected number, variable or '('", pos);
  }

  Poly parse_factor() {
    Poly b = parse_base();
    if (accept('^')) {
      skip_ws();
      std::size_t at = pos;
      if (!at_digit()) syntax_error("expected exponent digits", at);
      std::uint64_t e = parse_small_uint();
      return b.pow(e);
    }
    return b;
  }

  Poly parse_term() {
    Poly f = parse_factor();
    while (accept('*')) f *= parse_factor();
    // implicit multiplication is a syntax error; detect an adjacent operand
    skip_ws();
    if (pos < text.size()) {
      char c = text[pos];
      if (std::isalnum((unsigned char)c) || c == '_' || c == '(')
        syntax_error("missing operator before this token", pos);
    }
    return f;
  }

  Poly parse_expr() {
    Poly acc = parse_term();
    for (;;) {
      if (accept('+'))
        acc += parse_term();
      else if (accept('-'))
        acc -= parse_term();
      else
        break;
    }
    return acc;
  }

  Poly run() {
    Poly p = parse_expr();
    skip_ws();
    if (pos != text.size()) syntax_error("unexpected trailing input", pos);
    return p;
  }
};

}  // namespace

Poly parse_poly(const std::string& text, const VarSetPtr& vars,
                const FieldSpec& field) {
  Parser p{text, vars, field};
  return p.run();
}

}  // namespace arcmodel
