#include <set>

#include "doctest.h"

#include "hoopwork/catalog.hpp"
#include "hoopwork/classify.hpp"
#include "hoopwork/constructions.hpp"
#include "hoopwork/transform.hpp"

using namespace hoopwork;

namespace {
CertSet labels_of(const AlgebraPtr& a, const Strategy& st) {
  return classify(*a, st).labels;
}
}  // namespace

TEST_CASE("boolean algebras satisfy every bounded label") {
  for (std::size_t k = 1; k <= 3; ++k) {
    auto rep = classify(*bool_algebra(k), Strategy::exhaustive());
    CAPTURE(k);
    CHECK(rep.has(Cert::BCIRL));
    CHECK(rep.has(Cert::BL));
    CHECK(rep.has(Cert::MV));
    CHECK(rep.has(Cert::Godel));
    CHECK(rep.has(Cert::Product));
    CHECK(rep.has(Cert::Boolean));
  }
}

TEST_CASE("godel chains are godel but neither mv nor product from size 3 on") {
  for (std::size_t n = 3; n <= 6; ++n) {
    auto rep = classify(*godel_chain(n), Strategy::exhaustive());
    CAPTURE(n);
    CHECK(rep.has(Cert::Godel));
    CHECK(rep.has(Cert::BL));
    CHECK_FALSE(rep.has(Cert::MV));
    CHECK_FALSE(rep.has(Cert::Product));
    CHECK_FALSE(rep.has(Cert::Boolean));
  }
  CHECK(classify(*godel_chain(2), Strategy::exhaustive()).has(Cert::Boolean));
}

TEST_CASE("lukasiewicz chains are mv but not godel from size 3 on") {
  for (std::size_t n = 1; n <= 6; ++n) {
    auto rep = classify(*mv_chain(n), Strategy::exhaustive());
    CAPTURE(n);
    CHECK(rep.has(Cert::MV));
    CHECK(rep.has(Cert::BL));
    if (n >= 2) {
      CHECK_FALSE(rep.has(Cert::Godel));
      CHECK_FALSE(rep.has(Cert::Boolean));
      CHECK_FALSE(rep.has(Cert::Product));
    }
  }
}

TEST_CASE("zero-free carriers report hoop labels") {
  auto rep1 = classify(*nk(1), Strategy::bounded(8));
  CHECK(rep1.has(Cert::Hoop));
  CHECK(rep1.has(Cert::WajsbergHoop));
  CHECK(rep1.has(Cert::CancellativeHoop));
  CHECK_FALSE(rep1.has(Cert::GeneralizedBoolean));

  auto rep2 = classify(*rat01(), Strategy::bounded(8));
  CHECK(rep2.has(Cert::CancellativeHoop));

  auto rep3 = classify(*two0(), Strategy::exhaustive());
  CHECK(rep3.has(Cert::Hoop));
  CHECK(rep3.has(Cert::WajsbergHoop));
  CHECK(rep3.has(Cert::GeneralizedBoolean));
  CHECK_FALSE(rep3.has(Cert::CancellativeHoop));

  auto rep4 = classify(*zero_free_reduct(godel_chain(3)), Strategy::exhaustive());
  CHECK(rep4.has(Cert::Hoop));
  CHECK_FALSE(rep4.has(Cert::WajsbergHoop));
}

TEST_CASE("the lifted two-element hoop refutes involutivity and the product identity") {
  auto alg = lift(two0());
  auto rep = classify(*alg, Strategy::exhaustive());
  CHECK(rep.has(Cert::Godel));
  CHECK_FALSE(rep.has(Cert::MV));
  CHECK_FALSE(rep.has(Cert::Product));

  const CheckReport* inv = rep.find("involutivity");
  REQUIRE(inv != nullptr);
  REQUIRE(inv->status == CheckStatus::Refuted);
  REQUIRE(inv->witness.size() == 1);
  CHECK(inv->witness[0].second == "a");
  CHECK_FALSE(rep.passed("involutivity"));

  const CheckReport* prod = rep.find("product-identity");
  REQUIRE(prod != nullptr);
  CHECK(prod->status == CheckStatus::Refuted);
  CHECK_FALSE(prod->witness.empty());

  CHECK(rep.passed("divisibility"));
  CHECK(rep.passed("prelinearity"));
  CHECK(rep.find("no-such-axiom") == nullptr);
}

TEST_CASE("axiom verdicts match direct brute force on a chain") {
  auto g = godel_chain(4);
  auto rep = classify(*g, Strategy::exhaustive());
  auto elems = *g->elements;

  bool divisible = true;
  for (const Element& x : elems)
    for (const Element& y : elems)
      if (g->meet(x, y) != g->mul(x, g->imp(x, y))) divisible = false;
  CHECK(rep.passed("divisibility") == divisible);

  bool idem = true;
  for (const Element& x : elems)
    if (g->mul(x, x) != x) idem = false;
  CHECK(rep.passed("idempotency") == idem);

  bool invol = true;
  for (const Element& x : elems) {
    Element nn = g->imp(g->imp(x, *g->zero), *g->zero);
    if (nn != x) invol = false;
  }
  CHECK(rep.passed("involutivity") == invol);
}

TEST_CASE("bounded classification marks its strategy") {
  auto rep = classify(*lift(nk(1)), Strategy::bounded(6));
  CHECK_FALSE(rep.strategy.is_exhaustive());
  CHECK(labels_of(lift(nk(1)), Strategy::bounded(6)) ==
        CertSet{Cert::BCIRL, Cert::BL, Cert::Product});
  for (const auto& [name, r] : rep.axioms)
    if (r.status == CheckStatus::BoundedValid) {
      CHECK(r.bound == 6);
      return;
    }
  FAIL("expected at least one bounded verdict");
}
