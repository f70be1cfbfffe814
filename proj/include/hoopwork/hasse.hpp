#ifndef HOOPWORK_HASSE_HPP
#define HOOPWORK_HASSE_HPP

#include <string>

#include "hoopwork/algebra.hpp"

namespace hoopwork {

// DOT digraph of the covering relation, edges pointing upward. Finite
// algebras render the whole order; symbolic ones render the suborder on
// the sampler output at the strategy bound, with a truncation note in
// the header comment.
std::string hasse_dot(const Algebra& alg, const Strategy& st);

}  // namespace hoopwork

#endif
