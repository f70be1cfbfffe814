#ifndef HOOPWORK_PARSER_HPP
#define HOOPWORK_PARSER_HPP

#include <string_view>

#include "hoopwork/term.hpp"

namespace hoopwork {

// Recursive-descent parser for the term language:
//
//   term  := imp
//   imp   := or ("->" imp)?                (right-associative)
//   or    := and ("\/" and)*
//   and   := mul ("/\" mul)*
//   mul   := unary ("*" unary)*
//   unary := "~" unary | atom ("^" NAT)?
//   atom  := "0" | "1" | VAR | "(" term ")"
//   VAR   := "x" NAT
//
// ~t elaborates to t -> 0 and x^n to a left-nested product (n >= 1).
// Both are rejected with a ParseError under a 0-free signature when they
// would require the absent symbol.
Term parse_term(std::string_view src, const Signature& sig);

// One "=" at top level, both sides parsed under `sig`.
Equation parse_equation(std::string_view src, const Signature& sig);

}  // namespace hoopwork

#endif
