#include "doctest.h"

#include "hoopwork/errors.hpp"
#include "hoopwork/parser.hpp"
#include "hoopwork/term.hpp"

using namespace hoopwork;

namespace {
Term v(int i) { return Term::var(i); }
Term one() { return Term::constant(Sym::One); }
Term zero() { return Term::constant(Sym::Zero); }
Term app2(Sym s, Term a, Term b) {
  std::vector<Term> args;
  args.push_back(std::move(a));
  args.push_back(std::move(b));
  return Term::app(s, std::move(args));
}
}  // namespace

TEST_CASE("atoms and constants") {
  Signature sig = Signature::full();
  CHECK(parse_term("x1", sig) == v(1));
  CHECK(parse_term("x12", sig) == v(12));
  CHECK(parse_term("1", sig) == one());
  CHECK(parse_term("0", sig) == zero());
  CHECK(parse_term(" ( x3 ) ", sig) == v(3));
}

TEST_CASE("precedence stacks imp below join below meet below mul") {
  Signature sig = Signature::full();
  CHECK(parse_term("x1 * x2 -> x3", sig) ==
        app2(Sym::Imp, app2(Sym::Mul, v(1), v(2)), v(3)));
  CHECK(parse_term("x1 \\/ x2 /\\ x3", sig) ==
        app2(Sym::Join, v(1), app2(Sym::Meet, v(2), v(3))));
  CHECK(parse_term("x1 /\\ x2 * x3", sig) ==
        app2(Sym::Meet, v(1), app2(Sym::Mul, v(2), v(3))));
  CHECK(parse_term("(x1 -> x2) * x3", sig) ==
        app2(Sym::Mul, app2(Sym::Imp, v(1), v(2)), v(3)));
}

TEST_CASE("implication associates right, the others left") {
  Signature sig = Signature::full();
  CHECK(parse_term("x1 -> x2 -> x3", sig) ==
        app2(Sym::Imp, v(1), app2(Sym::Imp, v(2), v(3))));
  CHECK(parse_term("x1 * x2 * x3", sig) ==
        app2(Sym::Mul, app2(Sym::Mul, v(1), v(2)), v(3)));
  CHECK(parse_term("x1 \\/ x2 \\/ x3", sig) ==
        app2(Sym::Join, app2(Sym::Join, v(1), v(2)), v(3)));
}

TEST_CASE("negation elaborates to imp-zero and binds tightest") {
  Signature sig = Signature::full();
  CHECK(parse_term("~x1", sig) == app2(Sym::Imp, v(1), zero()));
  CHECK(parse_term("~x1 * x2", sig) ==
        app2(Sym::Mul, app2(Sym::Imp, v(1), zero()), v(2)));
  CHECK(parse_term("~~x1", sig) ==
        app2(Sym::Imp, app2(Sym::Imp, v(1), zero()), zero()));
}

TEST_CASE("powers expand to left-nested products") {
  Signature sig = Signature::full();
  CHECK(parse_term("x1^1", sig) == v(1));
  CHECK(parse_term("x1^3", sig) ==
        app2(Sym::Mul, app2(Sym::Mul, v(1), v(1)), v(1)));
  CHECK(parse_term("x2^2 -> x2", sig) ==
        app2(Sym::Imp, app2(Sym::Mul, v(2), v(2)), v(2)));
}

TEST_CASE("zero-free signature rejects zero and negation") {
  Signature sig = Signature::zero_free();
  CHECK_THROWS_AS(parse_term("0", sig), ParseError);
  CHECK_THROWS_AS(parse_term("~x1", sig), ParseError);
  CHECK_THROWS_AS(parse_term("x1 -> 0", sig), ParseError);
  CHECK(parse_term("x1 * x2 -> 1", sig) ==
        app2(Sym::Imp, app2(Sym::Mul, v(1), v(2)), one()));
}

TEST_CASE("canonical printing reparses to the same term") {
  Signature sig = Signature::full();
  const char* samples[] = {
      "x1",
      "~x1",
      "x1 * (x2 -> x3)",
      "(x1 \\/ x2) /\\ x3",
      "~(x1 * x2) -> (x3 \\/ 1)",
      "((x1 -> x1 * x1) -> x1) * (x1 -> x1 * x1)",
      "x1 \\/ ~x1",
      "~~x2 -> x2",
  };
  for (const char* s : samples) {
    Term t = parse_term(s, sig);
    CAPTURE(s);
    CHECK(parse_term(t.str(), sig) == t);
  }
}

TEST_CASE("equations split at the top-level equals sign") {
  Signature sig = Signature::full();
  Equation eq = parse_equation("x1 * x2 = x2 * x1", sig);
  CHECK(eq.lhs == app2(Sym::Mul, v(1), v(2)));
  CHECK(eq.rhs == app2(Sym::Mul, v(2), v(1)));
  CHECK(eq.variables == 2);

  Equation top = parse_equation("x1 \\/ 1 = 1", sig);
  CHECK(top.variables == 1);
  CHECK(parse_equation(top.str(), sig) == top);

  Equation mixed = parse_equation("~~x3 = x3", sig);
  CHECK(mixed.variables == 3);
}

TEST_CASE("malformed input is rejected with a parse error") {
  Signature sig = Signature::full();
  CHECK_THROWS_AS(parse_term("", sig), ParseError);
  CHECK_THROWS_AS(parse_term("x", sig), ParseError);
  CHECK_THROWS_AS(parse_term("x1 *", sig), ParseError);
  CHECK_THROWS_AS(parse_term("(x1", sig), ParseError);
  CHECK_THROWS_AS(parse_term("x1)", sig), ParseError);
  CHECK_THROWS_AS(parse_term("x1 x2", sig), ParseError);
  CHECK_THROWS_AS(parse_term("x1^0", sig), ParseError);
  CHECK_THROWS_AS(parse_term("y1", sig), ParseError);
  CHECK_THROWS_AS(parse_equation("x1 * x2", sig), ParseError);
  CHECK_THROWS_AS(parse_equation("x1 = x2 = x3", sig), ParseError);
}

TEST_CASE("max_var scans every position") {
  Signature sig = Signature::full();
  CHECK(parse_term("1", sig).max_var() == 0);
  CHECK(parse_term("x4 -> x2", sig).max_var() == 4);
  CHECK(parse_term("x1 * (x2 \\/ x7)", sig).max_var() == 7);
}
