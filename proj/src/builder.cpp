#include "hoopwork/builder.hpp"

#include <cctype>

#include "hoopwork/errors.hpp"

namespace hoopwork {

std::string BuilderExpr::str() const {
  if (kind == Kind::Nat) return std::to_string(nat);
  std::string out = name + "(";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out += ",";
    out += args[i].str();
  }
  return out + ")";
}

namespace {

struct BuilderParser {
  std::string_view src;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos); }

  BuilderExpr parse_expr() {
    skip_ws();
    if (pos >= src.size()) fail("expected a builder expression");
    char c = src[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      BuilderExpr e;
      e.kind = BuilderExpr::Kind::Nat;
      while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
        e.nat = e.nat * 10 + static_cast<std::uint64_t>(src[pos] - '0');
        if (e.nat > 1000000) fail("number too large");
        ++pos;
      }
      return e;
    }
    if (!std::isalpha(static_cast<unsigned char>(c)) && c != '_')
      fail("expected a constructor name or a natural");
    BuilderExpr e;
    while (pos < src.size() &&
           (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
      e.name += src[pos++];
    skip_ws();
    if (pos >= src.size() || src[pos] != '(')
      fail("expected '(' after constructor name '" + e.name + "'");
    ++pos;
    skip_ws();
    if (pos < src.size() && src[pos] == ')') {
      ++pos;
      return e;
    }
    while (true) {
      e.args.push_back(parse_expr());
      skip_ws();
      if (pos < src.size() && src[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < src.size() && src[pos] == ')') {
        ++pos;
        return e;
      }
      fail("expected ',' or ')' in argument list");
    }
  }

  BuilderExpr parse_full() {
    BuilderExpr e = parse_expr();
    skip_ws();
    if (pos != src.size()) fail("trailing input after builder expression");
    return e;
  }
};

}  // namespace

BuilderExpr parse_builder(std::string_view src) {
  return BuilderParser{src}.parse_full();
}

}  // namespace hoopwork
