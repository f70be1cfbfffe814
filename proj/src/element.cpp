#include "hoopwork/element.hpp"

namespace hoopwork {

namespace {

int cmp_box(const ElementBox& a, const ElementBox& b) {
  if (!a && !b) return 0;
  if (!a) return -1;
  if (!b) return 1;
  return Element::cmp(*a, *b);
}

struct ValueCmp {
  const Element::Value& rhs;

  int operator()(const FinIdx& a) const {
    const auto& b = std::get<FinIdx>(rhs);
    return a.idx < b.idx ? -1 : (a.idx > b.idx ? 1 : 0);
  }
  int operator()(const NatVec& a) const {
    const auto& b = std::get<NatVec>(rhs);
    if (a.v.size() != b.v.size()) return a.v.size() < b.v.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.v.size(); ++i)
      if (a.v[i] != b.v[i]) return a.v[i] < b.v[i] ? -1 : 1;
    return 0;
  }
  int operator()(const PosRat& a) const {
    const auto& b = std::get<PosRat>(rhs);
    if (a.q == b.q) return 0;
    return a.q < b.q ? -1 : 1;
  }
  int operator()(const Lifted& a) const {
    return cmp_box(a.inner, std::get<Lifted>(rhs).inner);
  }
  int operator()(const MvPair& a) const {
    const auto& b = std::get<MvPair>(rhs);
    if (a.bit != b.bit) return a.bit < b.bit ? -1 : 1;
    return cmp_box(a.inner, b.inner);
  }
  int operator()(const Pair& a) const {
    const auto& b = std::get<Pair>(rhs);
    if (int c = cmp_box(a.first, b.first)) return c;
    return cmp_box(a.second, b.second);
  }
};

}  // namespace

int Element::cmp(const Element& a, const Element& b) {
  if (a.alg_ != b.alg_) return a.alg_ < b.alg_ ? -1 : 1;
  if (a.val_.index() != b.val_.index())
    return a.val_.index() < b.val_.index() ? -1 : 1;
  return std::visit(ValueCmp{b.val_}, a.val_);
}

}  // namespace hoopwork
