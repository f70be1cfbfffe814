#ifndef HOOPWORK_CLASSIFY_HPP
#define HOOPWORK_CLASSIFY_HPP

#include <string>
#include <utility>
#include <vector>

#include "hoopwork/algebra.hpp"

namespace hoopwork {

// Outcome of running the axiom suite against one algebra. Labels are
// empirical: a label appears iff every axiom in its derivation chain
// survived the strategy (Valid or BoundedValid). With zero present the
// candidate labels are BCIRL, BL, MV, Godel, Product, Boolean; without
// it Hoop, WajsbergHoop, CancellativeHoop, GeneralizedBoolean.
struct ClassifyReport {
  CertSet labels;
  std::vector<std::pair<std::string, CheckReport>> axioms;
  Strategy strategy;

  const CheckReport* find(const std::string& axiom) const;
  bool passed(const std::string& axiom) const;
  bool has(Cert c) const { return labels.count(c) > 0; }
};

ClassifyReport classify(const Algebra& alg, const Strategy& st);

}  // namespace hoopwork

#endif
