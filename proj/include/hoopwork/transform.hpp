#ifndef HOOPWORK_TRANSFORM_HPP
#define HOOPWORK_TRANSFORM_HPP

#include <vector>

#include "hoopwork/algebra.hpp"

namespace hoopwork {

// Componentwise product on Pair elements. Finite factors enumerate the
// cartesian product row-major (left factor major); otherwise the sampler
// interleaves the factor samplers by antidiagonals.
AlgebraPtr direct_product(const AlgebraPtr& a, const AlgebraPtr& b);

// Same carrier and operations with zero dropped from the signature.
// Elements are retagged; the result always carries the Hoop certificate
// plus the hoop counterparts of the parent's certificates.
AlgebraPtr zero_free_reduct(const AlgebraPtr& a);

// Least subuniverse containing gens and the present constants, closed
// under all operations; finite carriers only. Enumeration order follows
// the parent's.
AlgebraPtr subalgebra_generated(const AlgebraPtr& a, const std::vector<Element>& gens);

// Finite subalgebra on an explicitly given closed member set (closure is
// asserted, not completed). keep_zero=false drops zero from the child
// signature, turning a multiplicatively closed upward-closed subset into
// its hoop of inherited operations. The parent may be symbolic; member
// order then follows the given list instead of the parent enumeration.
std::shared_ptr<Algebra> subalgebra_on(const AlgebraPtr& a,
                                       const std::vector<Element>& members,
                                       bool keep_zero, const std::string& name);

// Blank child whose operations and namer delegate to the parent through
// retagging; the caller fills carrier, constants, certificates, and
// provenance.
std::shared_ptr<Algebra> delegating_shell(const AlgebraPtr& parent,
                                          const std::string& name, bool keep_zero);

// Hoop-side counterparts of bounded certificates (what a 0-free
// subreduct inherits).
CertSet zero_free_certs(const CertSet& bounded);

// Convenience for moving elements across the retagging boundary of
// reducts and subalgebras.
Element to_parent(const Algebra& child, const Element& e);
Element from_parent(const Algebra& child, const Element& e);

}  // namespace hoopwork

#endif
