#ifndef HOOPWORK_ELEMENT_HPP
#define HOOPWORK_ELEMENT_HPP

#include <cstdint>
#include <memory>
#include <variant>
#include <vector>

#include "hoopwork/rational.hpp"

namespace hoopwork {

class Element;
using ElementBox = std::shared_ptr<const Element>;

// Index into a finite carrier.
struct FinIdx {
  std::uint32_t idx = 0;
};

// Vector of naturals with the owning algebra's fixed dimension.
struct NatVec {
  std::vector<std::uint64_t> v;
};

// Exact rational q with 0 < q <= 1.
struct PosRat {
  Rational q;
};

// Element of a lifted algebra: the adjoined bottom (inner == nullptr)
// or a wrapped element of the inner carrier.
struct Lifted {
  ElementBox inner;
};

// Element of an MV-closure: an inner element with a doubling bit.
// Bit 1 is the copy of the input hoop, bit 0 its negation.
struct MvPair {
  ElementBox inner;
  int bit = 1;
};

// Componentwise pair: used by direct products and, in canonical form,
// by triple-product classes [b, c].
struct Pair {
  ElementBox first;
  ElementBox second;
};

// A value in some algebra's carrier. The carrier tag ties the element to
// the algebra that produced it; operations refuse foreign elements, which
// is the chief guard while constructions shuttle values between carriers.
class Element {
 public:
  using Value = std::variant<FinIdx, NatVec, PosRat, Lifted, MvPair, Pair>;

  Element() = default;
  Element(std::uint32_t algebra_id, Value v)
      : alg_(algebra_id), val_(std::move(v)) {}

  std::uint32_t algebra_id() const { return alg_; }
  const Value& value() const { return val_; }

  template <typename T>
  const T& as() const {
    return std::get<T>(val_);
  }
  template <typename T>
  bool is() const {
    return std::holds_alternative<T>(val_);
  }

  // Same value under a different carrier tag (subalgebras, reducts).
  Element retag(std::uint32_t new_id) const { return Element(new_id, val_); }

  friend bool operator==(const Element& a, const Element& b) {
    return cmp(a, b) == 0;
  }
  friend bool operator!=(const Element& a, const Element& b) {
    return cmp(a, b) != 0;
  }
  friend bool operator<(const Element& a, const Element& b) {
    return cmp(a, b) < 0;
  }

  // Total order: carrier tag first, then structural value order.
  static int cmp(const Element& a, const Element& b);

 private:
  std::uint32_t alg_ = 0;
  Value val_;
};

inline ElementBox box(Element e) {
  return std::make_shared<const Element>(std::move(e));
}

}  // namespace hoopwork

#endif
