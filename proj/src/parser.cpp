#include "hoopwork/parser.hpp"

#include <cctype>
#include <cstdint>

#include "hoopwork/errors.hpp"

namespace hoopwork {

namespace {

struct Lexer {
  enum class Tok { Nat, Var, Arrow, Join, Meet, Star, Tilde, Caret, LParen, RParen, Equals, End };

  std::string_view src;
  std::size_t pos = 0;
  Tok tok = Tok::End;
  std::size_t tok_pos = 0;
  std::uint64_t nat = 0;  // value for Nat / index for Var

  explicit Lexer(std::string_view s) : src(s) { advance(); }

  [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
    throw ParseError(msg, at);
  }

  std::uint64_t read_digits() {
    std::uint64_t value = 0;
    std::size_t start = pos;
    while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
      value = value * 10 + static_cast<std::uint64_t>(src[pos] - '0');
      if (value > 1000000) fail("number too large", start);
      ++pos;
    }
    return value;
  }

  void advance() {
    while (pos < src.size() && (src[pos] == ' ' || src[pos] == '\t' ||
                                src[pos] == '\n' || src[pos] == '\r'))
      ++pos;
    tok_pos = pos;
    if (pos >= src.size()) {
      tok = Tok::End;
      return;
    }
    char c = src[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      nat = read_digits();
      tok = Tok::Nat;
      return;
    }
    if (c == 'x' && pos + 1 < src.size() &&
        std::isdigit(static_cast<unsigned char>(src[pos + 1]))) {
      ++pos;
      nat = read_digits();
      if (nat == 0) fail("variable indices start at x1", tok_pos);
      tok = Tok::Var;
      return;
    }
    switch (c) {
      case '-':
        if (pos + 1 < src.size() && src[pos + 1] == '>') {
          pos += 2;
          tok = Tok::Arrow;
          return;
        }
        fail("expected '->'", pos);
      case '\\':
        if (pos + 1 < src.size() && src[pos + 1] == '/') {
          pos += 2;
          tok = Tok::Join;
          return;
        }
        fail("expected '\\/'", pos);
      case '/':
        if (pos + 1 < src.size() && src[pos + 1] == '\\') {
          pos += 2;
          tok = Tok::Meet;
          return;
        }
        fail("expected '/\\'", pos);
      case '*': ++pos; tok = Tok::Star; return;
      case '~': ++pos; tok = Tok::Tilde; return;
      case '^': ++pos; tok = Tok::Caret; return;
      case '(': ++pos; tok = Tok::LParen; return;
      case ')': ++pos; tok = Tok::RParen; return;
      case '=': ++pos; tok = Tok::Equals; return;
      default:
        fail(std::string("unexpected character '") + c + "'", pos);
    }
  }
};

class TermParser {
 public:
  TermParser(std::string_view src, const Signature& sig) : lex_(src), sig_(sig) {}

  Term parse_full() {
    Term t = parse_imp();
    if (lex_.tok != Lexer::Tok::End)
      lex_.fail("trailing input after term", lex_.tok_pos);
    return t;
  }

  Equation parse_equation_full() {
    Term lhs = parse_imp();
    if (lex_.tok != Lexer::Tok::Equals)
      lex_.fail("expected '=' between the two sides", lex_.tok_pos);
    lex_.advance();
    Term rhs = parse_imp();
    if (lex_.tok == Lexer::Tok::Equals)
      lex_.fail("more than one '=' at top level", lex_.tok_pos);
    if (lex_.tok != Lexer::Tok::End)
      lex_.fail("trailing input after equation", lex_.tok_pos);
    int vars = std::max(lhs.max_var(), rhs.max_var());
    return Equation{std::move(lhs), std::move(rhs), vars};
  }

 private:
  Term parse_imp() {
    Term lhs = parse_or();
    if (lex_.tok == Lexer::Tok::Arrow) {
      lex_.advance();
      Term rhs = parse_imp();  // right-associative
      return Term::app(Sym::Imp, {std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  Term parse_or() {
    Term t = parse_and();
    while (lex_.tok == Lexer::Tok::Join) {
      lex_.advance();
      Term rhs = parse_and();
      t = Term::app(Sym::Join, {std::move(t), std::move(rhs)});
    }
    return t;
  }

  Term parse_and() {
    Term t = parse_mul();
    while (lex_.tok == Lexer::Tok::Meet) {
      lex_.advance();
      Term rhs = parse_mul();
      t = Term::app(Sym::Meet, {std::move(t), std::move(rhs)});
    }
    return t;
  }

  Term parse_mul() {
    Term t = parse_unary();
    while (lex_.tok == Lexer::Tok::Star) {
      lex_.advance();
      Term rhs = parse_unary();
      t = Term::app(Sym::Mul, {std::move(t), std::move(rhs)});
    }
    return t;
  }

  Term parse_unary() {
    if (lex_.tok == Lexer::Tok::Tilde) {
      std::size_t at = lex_.tok_pos;
      if (!sig_.has_zero)
        lex_.fail("negation requires zero, absent from this signature", at);
      lex_.advance();
      Term t = parse_unary();
      return Term::app(Sym::Imp, {std::move(t), Term::constant(Sym::Zero)});
    }
    Term t = parse_atom();
    if (lex_.tok == Lexer::Tok::Caret) {
      std::size_t at = lex_.tok_pos;
      lex_.advance();
      if (lex_.tok != Lexer::Tok::Nat)
        lex_.fail("expected an exponent after '^'", lex_.tok_pos);
      std::uint64_t n = lex_.nat;
      if (n < 1) lex_.fail("exponent must be >= 1", at);
      lex_.advance();
      Term power = t;
      for (std::uint64_t i = 1; i < n; ++i)
        power = Term::app(Sym::Mul, {std::move(power), t});
      return power;
    }
    return t;
  }

  Term parse_atom() {
    switch (lex_.tok) {
      case Lexer::Tok::Nat: {
        std::uint64_t v = lex_.nat;
        std::size_t at = lex_.tok_pos;
        lex_.advance();
        if (v == 1) return Term::constant(Sym::One);
        if (v == 0) {
          if (!sig_.has_zero)
            lex_.fail("constant '0' is absent from this signature", at);
          return Term::constant(Sym::Zero);
        }
        lex_.fail("only the constants 0 and 1 exist", at);
      }
      case Lexer::Tok::Var: {
        int idx = static_cast<int>(lex_.nat);
        lex_.advance();
        return Term::var(idx);
      }
      case Lexer::Tok::LParen: {
        lex_.advance();
        Term t = parse_imp();
        if (lex_.tok != Lexer::Tok::RParen)
          lex_.fail("expected ')'", lex_.tok_pos);
        lex_.advance();
        return t;
      }
      default:
        lex_.fail("expected a term", lex_.tok_pos);
    }
  }

  Lexer lex_;
  Signature sig_;
};

}  // namespace

Term parse_term(std::string_view src, const Signature& sig) {
  return TermParser(src, sig).parse_full();
}

Equation parse_equation(std::string_view src, const Signature& sig) {
  return TermParser(src, sig).parse_equation_full();
}

}  // namespace hoopwork
