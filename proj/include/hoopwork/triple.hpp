#ifndef HOOPWORK_TRIPLE_HPP
#define HOOPWORK_TRIPLE_HPP

#include <functional>
#include <string>
#include <utility>

#include "hoopwork/algebra.hpp"
#include "hoopwork/filters.hpp"

namespace hoopwork {

// An external join B x C -> C between a Boolean algebra and a
// cancellative hoop sharing only their unit. h_b = join_e(b, -) and
// k_c = join_e(-, c) are the two partial applications.
struct ExternalJoin {
  AlgebraPtr bool_alg;
  AlgebraPtr canc;
  std::function<Element(const Element&, const Element&)> join_e;
  std::string descr;

  Element apply(const Element& b, const Element& c) const;
};

struct ProductTriple {
  AlgebraPtr bool_alg;
  AlgebraPtr canc;
  ExternalJoin join;
};

// join_M(b, c) = 1 if b lies in M, else c; M must be a maximal filter
// of the finite Boolean algebra b.
ExternalJoin external_join_from_maximal_filter(const AlgebraPtr& b, const Filter& m,
                                               const AlgebraPtr& c);

// The external-join axioms, reported clause by clause and merged:
//  (V1) every h_b is a hoop endomorphism of C and every k_c a lattice
//       homomorphism from B,
//  (V2) h_0 is the identity and h_1 is constantly 1,
//  (V3) h_b(c) v h_b'(c') = h_{b v b'}(c v c') = h_b(h_b'(c v c')),
//  (V4) (b v c) * c' = (~b v c') /\ (b v c*c').
CheckReport verify_external_join(const ExternalJoin& ej, const Strategy& st);

// Representative (b, join_e(~b, c)) of the class of (b, c); two pairs
// name the same class exactly when their representatives agree.
std::pair<Element, Element> canonicalize(const ProductTriple& t, const Element& b,
                                         const Element& c);

// The algebra of classes [b, c]: mul and meet act componentwise (meet
// on the Boolean side for mul), imp is [b -> b', ~b v (c -> c')], and
// join distributes through the external join. Verifies the join axioms
// at the given strategy before building; zero is [0,1], one is [1,1].
std::shared_ptr<Algebra> triple_product(const ProductTriple& t, const Strategy& st);

// Canonical class of (b, c) as an element of a triple product.
Element triple_class(const Algebra& triple_alg, const Element& b, const Element& c);

// Images of the decomposition terms inside a product-hoop-certified,
// 0-free algebra s: gs collects (x -> x^2) -> x and materializes (the
// image must close within `cap` sampled elements); cs collects x -> x^2
// and stays a fixed-point-sampled subalgebra shell.
AlgebraPtr gs(const AlgebraPtr& s, std::size_t cap = 4096);
AlgebraPtr cs(const AlgebraPtr& s);

struct ProductClosure {
  AlgebraPtr algebra;  // the triple product over (bs, cs)
  AlgebraPtr gs;       // idempotent part
  AlgebraPtr cs;       // cancellative part
  AlgebraPtr bs;       // mv_closure(gs)
  ProductTriple triple;
  std::function<Element(const Element&)> embed;  // x -> [b(x), c(x)]
  Filter image;                                  // the embedded copy
};

// bs (x) cs with the slice join (1 on the hoop slice of bs, c
// elsewhere), together with the embedding and its image filter.
ProductClosure product_closure(const AlgebraPtr& s, const Strategy& st);

// The embedding is a homomorphism of the 0-free operations, injective,
// its image is a filter, and the image is maximal (every outsider is
// annihilated by some image element).
CheckReport verify_main_theorem(const AlgebraPtr& s, const Strategy& st);

// 2 x A carries {(1, x)} as a maximal filter isomorphic to the 0-free
// reduct of A.
CheckReport remark_filter_of_double(const AlgebraPtr& a, const Strategy& st);

}  // namespace hoopwork

#endif
