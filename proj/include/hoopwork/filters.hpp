#ifndef HOOPWORK_FILTERS_HPP
#define HOOPWORK_FILTERS_HPP

#include <optional>
#include <string>
#include <vector>

#include "hoopwork/algebra.hpp"

namespace hoopwork {

// A congruence filter: nonempty, closed under mul and upwards. Finite
// filters list their members in carrier enumeration order; symbolic ones
// carry a membership predicate and verify invariants on samples.
struct Filter {
  AlgebraPtr of;
  std::optional<std::vector<Element>> members;
  std::function<bool(const Element&)> pred;
  std::string descr;

  static Filter finite(const AlgebraPtr& alg, std::vector<Element> members);
  static Filter symbolic(const AlgebraPtr& alg, std::function<bool(const Element&)> pred,
                         std::string descr);

  bool is_finite() const { return members.has_value(); }
  std::size_t size() const;
  bool contains(const Element& e) const;
  std::vector<Element> sample(std::size_t n) const;
  std::vector<std::string> names() const;
  std::string render() const;
  bool proper() const;  // finite: misses 0, or is a proper subset when 0-free
  bool same_members(const Filter& other) const;
};

// Partition of a finite carrier compatible with every operation. Blocks
// are ordered by their least member's enumeration index; members within
// a block follow enumeration order.
struct Congruence {
  AlgebraPtr of;
  std::vector<std::vector<Element>> blocks;

  std::size_t block_index(const Element& e) const;
  bool related(const Element& a, const Element& b) const;
  std::vector<std::vector<std::string>> names() const;
  bool same_blocks(const Congruence& other) const;
};

// Filter invariants (unit, mul-closure, upward closure) at the strategy;
// finite filters are always checked exhaustively.
CheckReport validate_filter(const Filter& f, const Strategy& st);

// Least filter containing xs: upward closure of the multiplicative
// closure of xs ∪ {1}. Finite carriers only.
Filter filter_generate(const AlgebraPtr& alg, const std::vector<Element>& xs);

// Every filter, sorted by size then by member positions.
std::vector<Filter> all_filters(const AlgebraPtr& alg);

// Maximal elements among proper filters.
std::vector<Filter> maximal_filters(const AlgebraPtr& alg);

// Intersection of the maximal filters. Finite carriers compute it
// directly; symbolic lifts and triple products answer by construction
// (the lifted copy, respectively the classes [1,c]).
Filter radical(const AlgebraPtr& alg);

// Subalgebra of complemented elements (x ∧ ~x = 0, x ∨ ~x = 1). Finite
// carriers compute it; symbolic lifts and triple products answer by
// construction ({bottom, 1}, respectively the classes [b,1]).
AlgebraPtr boolean_skeleton(const AlgebraPtr& alg);

// Compatibility of the partition with every operation.
CheckReport validate_congruence(const Congruence& c);

// a ~ b iff a -> b and b -> a both lie in f. Validates f first.
Congruence congruence_from_filter(const Filter& f);

// The 1-block. Validates compatibility first.
Filter filter_from_congruence(const Congruence& c);

// Every congruence, by restricted-growth enumeration of partitions
// filtered for compatibility; guarded to small carriers.
std::vector<Congruence> all_congruences(const AlgebraPtr& alg);

// Algebra on the blocks of congruence_from_filter(f); the induced
// operations are asserted well defined on whole blocks.
AlgebraPtr quotient(const AlgebraPtr& alg, const Filter& f);

// A filter with the inherited 0-free operations is itself a hoop.
AlgebraPtr filter_as_hoop(const Filter& f);

// For each strategy-visible outsider e ∉ f, find g ∈ f with e·g = 0,
// certifying that no proper filter extends f ∪ {e}.
CheckReport is_maximal_filter_witnessed(const AlgebraPtr& alg, const Filter& f,
                                        const Strategy& st);

// The (outsider, cofactor) pairs behind a passing maximality check.
std::vector<std::pair<Element, Element>> maximality_witnesses(const AlgebraPtr& alg,
                                                              const Filter& f,
                                                              const Strategy& st);

}  // namespace hoopwork

#endif
