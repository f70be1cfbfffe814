#ifndef HOOPWORK_CONSTRUCTIONS_HPP
#define HOOPWORK_CONSTRUCTIONS_HPP

#include "hoopwork/algebra.hpp"
#include "hoopwork/filters.hpp"

namespace hoopwork {

// Adjoin a bottom to a 0-free algebra: x*0 = 0, x -> 0 = 0 (x != 0),
// 0 -> x = 1. The bottom renders as "0" and enumerates first.
AlgebraPtr lift(const AlgebraPtr& h);

// The decomposition terms (x -> x^2) -> x and x -> x^2.
Element b_of(const Algebra& alg, const Element& x);
Element c_of(const Algebra& alg, const Element& x);

// Doubles a Wajsberg-certified 0-free algebra onto A x {0,1} with the
// four-case mul/imp tables; (a,1) keeps the hoop copy, (a,0) its mirror,
// 0 = (1,0), 1 = (1,1). Lattice operations are the derived BL terms.
// Finite carriers enumerate the (a,1) slice first, then the (a,0) slice;
// symbolic samplers interleave the two slices.
AlgebraPtr mv_closure(const AlgebraPtr& a);

// x -> (x,1), the embedding of the doubled algebra into its closure.
Element mv_embed(const Algebra& mv_alg, const Element& x);

// The slice {(a,1)} as a filter of the closure.
Filter mv_slice_filter(const AlgebraPtr& mv_alg);

// Checks x = b(x)*c(x), x = b(x) /\ c(x), ~~x = b(x), x \/ ~x = c(x);
// these four hold exactly on product algebras.
CheckReport verify_decomposition(const AlgebraPtr& alg, const Strategy& st);

}  // namespace hoopwork

#endif
