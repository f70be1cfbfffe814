#ifndef HOOPWORK_CATALOG_HPP
#define HOOPWORK_CATALOG_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "hoopwork/algebra.hpp"
#include "hoopwork/builder.hpp"

namespace hoopwork {

// Boolean algebra on the subsets of `atoms` generators; element i is
// the bitmask of its atoms, named 0, a, b, a|b, ..., 1.
AlgebraPtr bool_algebra(std::size_t atoms);

// n-element chain with idempotent product (min); names 0, a, b, ..., 1.
AlgebraPtr godel_chain(std::size_t n);

// (n+1)-element chain with the truncated arithmetic operations; element
// i is named i/n in lowest terms.
AlgebraPtr mv_chain(std::size_t n);

// Free k-generated cancellative structure on naturals: componentwise
// addition as product, truncated subtraction as implication, the order
// is divisibility-reversed (unit = all zero). Symbolic, graded-lex
// sampler.
AlgebraPtr nk(std::size_t k);

// Rationals in (0,1] under multiplication, y/x capped at 1 as
// implication. Symbolic; the sampler walks the mediant tree.
AlgebraPtr rat01();

// Two-element 0-free chain {a < 1}.
AlgebraPtr two0();

// One-element algebra {1} without zero.
AlgebraPtr trivial_hoop();

// Evaluate a builder expression: bool(k), godel_chain(n), mv_chain(n),
// nk(k), rat01(), two0(), trivial(), lift(e), reduct0(e),
// direct_product(e,e), mv_closure(e), product_closure(e). Nested
// constructions that verify axioms do so at `st`.
AlgebraPtr build(const BuilderExpr& e, const Strategy& st = Strategy::bounded(8));
AlgebraPtr build(const std::string& text, const Strategy& st = Strategy::bounded(8));

std::vector<std::string> builder_names();

}  // namespace hoopwork

#endif
