#ifndef HOOPWORK_ISO_HPP
#define HOOPWORK_ISO_HPP

#include <functional>
#include <optional>

#include "hoopwork/algebra.hpp"

namespace hoopwork {

// image[i] is the position in b's enumeration of the image of a's i-th
// element.
struct Isomorphism {
  AlgebraPtr from, to;
  std::vector<std::size_t> image;

  Element apply(const Element& e) const;
  // (a-name, b-name) pairs in a's enumeration order.
  std::vector<std::pair<std::string, std::string>> rendered() const;
};

// Backtracking search over enumeration order with order/degree-profile
// pruning; first bijection commuting with all operations and constants
// wins, so the result is deterministic for fixed enumerations.
std::optional<Isomorphism> find_isomorphism(const AlgebraPtr& a, const AlgebraPtr& b);

// Sample-based surrogate for symbolic carriers: verifies that map is
// injective on a's first `bound` elements, fixes the constants, and
// commutes with every operation on all sampled pairs.
CheckReport bounded_iso_check(const AlgebraPtr& a, const AlgebraPtr& b,
                              const std::function<Element(const Element&)>& map,
                              std::size_t bound);

}  // namespace hoopwork

#endif
