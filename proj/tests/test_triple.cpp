#include <optional>
#include <set>

#include "doctest.h"

#include "hoopwork/catalog.hpp"
#include "hoopwork/classify.hpp"
#include "hoopwork/constructions.hpp"
#include "hoopwork/errors.hpp"
#include "hoopwork/filters.hpp"
#include "hoopwork/iso.hpp"
#include "hoopwork/transform.hpp"
#include "hoopwork/triple.hpp"

using namespace hoopwork;

TEST_CASE("the maximal-filter join is 1 on the filter and the identity off it") {
  auto b = bool_algebra(2);
  auto c = nk(1);
  auto ms = maximal_filters(b);
  REQUIRE(ms.size() == 2);
  ExternalJoin ej = external_join_from_maximal_filter(b, ms[0], c);
  for (const Element& be : *b->elements)
    for (const Element& ce : c->sample(4)) {
      Element j = ej.apply(be, ce);
      if (ms[0].contains(be))
        CHECK(j == c->one);
      else
        CHECK(j == ce);
    }
}

TEST_CASE("external join axioms hold over every maximal filter") {
  auto b = bool_algebra(2);
  auto c = nk(1);
  for (const Filter& m : maximal_filters(b)) {
    ExternalJoin ej = external_join_from_maximal_filter(b, m, c);
    CheckReport r = verify_external_join(ej, Strategy::bounded(8));
    CHECK(r.status == CheckStatus::BoundedValid);
    CHECK(r.checked > 0);
  }
}

TEST_CASE("a non-filter join is refuted clause by clause") {
  auto b = bool_algebra(1);
  auto c = nk(1);
  ExternalJoin broken;
  broken.bool_alg = b;
  broken.canc = c;
  broken.descr = "constant join";
  broken.join_e = [c](const Element&, const Element&) { return c->one; };
  CheckReport r = verify_external_join(broken, Strategy::bounded(5));
  CHECK(r.status == CheckStatus::Refuted);

  ExternalJoin wrong_constant;
  wrong_constant.bool_alg = b;
  wrong_constant.canc = c;
  wrong_constant.descr = "swapped membership";
  wrong_constant.join_e = [b, c](const Element& be, const Element& ce) {
    return be == *b->zero ? c->one : ce;
  };
  CHECK(verify_external_join(wrong_constant, Strategy::bounded(5)).status ==
        CheckStatus::Refuted);
}

TEST_CASE("a trivial cancellative part reduces the triple to its boolean part") {
  auto b = bool_algebra(2);
  auto c = trivial_hoop();
  auto ms = maximal_filters(b);
  ExternalJoin ej = external_join_from_maximal_filter(b, ms[0], c);
  auto alg = triple_product(ProductTriple{b, c, ej}, Strategy::exhaustive());
  REQUIRE(alg->is_finite());
  CHECK(alg->size() == 4);
  CHECK(alg->certified(Cert::Product));
  CHECK(find_isomorphism(alg, b).has_value());
}

TEST_CASE("canonicalization collapses the class exactly off the filter") {
  auto b = bool_algebra(2);
  auto c = nk(1);
  auto ms = maximal_filters(b);
  ExternalJoin ej = external_join_from_maximal_filter(b, ms[0], c);
  ProductTriple t{b, c, ej};
  for (const Element& be : *b->elements)
    for (const Element& ce : c->sample(4)) {
      auto [rb, rc] = canonicalize(t, be, ce);
      CHECK(rb == be);
      if (ms[0].contains(be))
        CHECK(rc == ce);
      else
        CHECK(rc == c->one);
    }
}

TEST_CASE("triple operations follow the component formulas") {
  auto b = bool_algebra(2);
  auto c = nk(1);
  auto ms = maximal_filters(b);
  ExternalJoin ej = external_join_from_maximal_filter(b, ms[0], c);
  ProductTriple t{b, c, ej};
  auto alg = triple_product(t, Strategy::bounded(6));
  CHECK_FALSE(alg->is_finite());
  CHECK(alg->render(alg->one) == "[1,1]");
  CHECK(alg->render(*alg->zero) == "[0,1]");

  auto neg = [&](const Element& be) { return b->imp(be, *b->zero); };
  auto bs = *b->elements;
  auto cs_sample = c->sample(3);
  for (const Element& b1 : bs)
    for (const Element& c1 : cs_sample)
      for (const Element& b2 : bs)
        for (const Element& c2 : cs_sample) {
          Element x = triple_class(*alg, b1, c1);
          Element y = triple_class(*alg, b2, c2);

          CHECK(alg->mul(x, y) == triple_class(*alg, b->meet(b1, b2), c->mul(c1, c2)));
          CHECK(alg->meet(x, y) == triple_class(*alg, b->meet(b1, b2), c->meet(c1, c2)));
          CHECK(alg->imp(x, y) ==
                triple_class(*alg, b->imp(b1, b2), ej.apply(neg(b1), c->imp(c1, c2))));

          Element jb = b->join(b1, b2);
          Element jc = c->meet(
              ej.apply(b->join(neg(b1), neg(b2)), c->join(c1, c2)),
              c->meet(ej.apply(b->join(b1, neg(b2)), c2), ej.apply(b->join(neg(b1), b2), c1)));
          CHECK(alg->join(x, y) == triple_class(*alg, jb, jc));
        }
}

TEST_CASE("triple products satisfy the product algebra laws on samples") {
  auto b = bool_algebra(1);
  auto c = nk(1);
  auto ms = maximal_filters(b);
  ExternalJoin ej = external_join_from_maximal_filter(b, ms[0], c);
  auto alg = triple_product(ProductTriple{b, c, ej}, Strategy::bounded(6));
  auto rep = classify(*alg, Strategy::bounded(6));
  CHECK(rep.has(Cert::BCIRL));
  CHECK(rep.has(Cert::BL));
  CHECK(rep.has(Cert::Product));
}

TEST_CASE("radical and skeleton of a triple product come from the construction") {
  auto n1 = nk(1);
  auto pc = product_closure(n1, Strategy::bounded(8));
  auto alg = pc.algebra;

  Filter rad = radical(alg);
  CHECK(rad.contains(alg->one));
  CHECK_FALSE(rad.contains(*alg->zero));
  for (const Element& e : alg->sample(8)) {
    bool top_slice = e.as<Pair>().first->as<MvPair>().bit == 1;
    CHECK(rad.contains(e) == top_slice);
  }

  auto sk = boolean_skeleton(alg);
  REQUIRE(sk->is_finite());
  CHECK(sk->size() == 2);
}

TEST_CASE("gs and cs split a product hoop into its parts") {
  auto n1 = nk(1);
  auto g1 = gs(n1);
  REQUIRE(g1->is_finite());
  CHECK(g1->size() == 1);
  auto c1 = cs(n1);
  CHECK_FALSE(c1->is_finite());
  auto s = c1->sample(5);
  CHECK(c1->render(s[1]) == "c");
  CHECK(c1->certified(Cert::CancellativeHoop));

  auto t = two0();
  auto g2 = gs(t);
  CHECK(g2->size() == 2);
  auto c2 = cs(t);
  REQUIRE(c2->is_finite());
  CHECK(c2->size() == 1);

  auto s2 = zero_free_reduct(lift(nk(1)));
  auto g3 = gs(s2);
  REQUIRE(g3->is_finite());
  CHECK(g3->size() == 2);
  auto c3 = cs(s2);
  CHECK_FALSE(c3->is_finite());
  CHECK(classify(*c3, Strategy::bounded(6)).has(Cert::CancellativeHoop));

  CHECK_THROWS_AS(gs(zero_free_reduct(godel_chain(3))), DomainError);
}

TEST_CASE("the product closure of a cancellative hoop is its lift") {
  auto n1 = nk(1);
  auto pc = product_closure(n1, Strategy::bounded(8));
  CHECK(pc.cs->certified(Cert::CancellativeHoop));
  CHECK(pc.gs->size() == 1);
  CHECK(pc.bs->size() == 2);
  CHECK(validate_filter(pc.image, Strategy::bounded(8)).ok());

  for (const Element& x : n1->sample(5)) {
    Element fx = pc.embed(x);
    CHECK(pc.image.contains(fx));
    CHECK(pc.algebra->render(fx) == "[1," + n1->render(x) + "]");
  }

  auto ln = lift(n1);
  auto map = [&ln, &n1](const Element& e) {
    auto pr = e.as<Pair>();
    if (pr.first->as<MvPair>().bit == 1)
      return Element(ln->id, Lifted{box(pr.second->retag(n1->id))});
    return *ln->zero;
  };
  CHECK(bounded_iso_check(pc.algebra, ln, map, 10).status == CheckStatus::BoundedValid);
}

TEST_CASE("the main theorem verifies for cancellative and idempotent inputs") {
  CheckReport t0 = verify_main_theorem(two0(), Strategy::exhaustive());
  CHECK(t0.status == CheckStatus::Valid);

  CheckReport n1 = verify_main_theorem(nk(1), Strategy::bounded(8));
  CHECK(n1.status == CheckStatus::BoundedValid);
  CHECK(n1.checked > 0);

  CheckReport r1 = verify_main_theorem(rat01(), Strategy::bounded(8));
  CHECK(r1.status == CheckStatus::BoundedValid);
}

TEST_CASE("the canonical embedding fails for a hoop with both parts nontrivial") {
  // For the zero-free reduct of a lifted cancellative hoop the embedding
  // x -> [b(x), c(x)] lands bottom and its multiples in distinct classes,
  // so multiplication is not preserved; the expected shape of the failure
  // is pinned here.
  auto s2 = zero_free_reduct(lift(nk(1)));
  CheckReport r = verify_main_theorem(s2, Strategy::bounded(8));
  REQUIRE(r.status == CheckStatus::Refuted);
  CHECK(r.detail == "embedding is a homomorphism: mul not preserved: [0,1] != [0,c]");
  REQUIRE(r.witness.size() == 2);
  CHECK(r.witness[0].second == "0");
  CHECK(r.witness[1].second == "c");
}

TEST_CASE("the closure's other maximal filter realizes the lifted reduct") {
  // The canonical map above fails, but the hoop still embeds into its
  // product closure: send bottom to the coatom class [~0,1] and everything
  // else to the top slice.
  auto s2 = zero_free_reduct(lift(nk(1)));
  auto pc = product_closure(s2, Strategy::bounded(8));
  auto p = pc.algebra;

  std::optional<Element> coatom;
  for (const Element& e : *pc.bs->elements)
    if (pc.bs->render(e) == "~0") coatom = e;
  REQUIRE(coatom.has_value());

  auto m = [&](const Element& x) {
    if (s2->render(x) == "0")
      return Element(p->id, Pair{box(*coatom), box(pc.cs->one)});
    return Element(p->id, Pair{box(pc.bs->one), box(x.retag(pc.cs->id))});
  };

  auto dom = s2->sample(6);
  CHECK(m(s2->one) == p->one);
  for (const Element& x : dom)
    for (const Element& y : dom) {
      CHECK_FALSE((x != y && m(x) == m(y)));
      for (Sym s : Signature::binary_syms())
        CHECK(m(s2->apply(s, x, y)) == p->apply(s, m(x), m(y)));
    }
}

TEST_CASE("a doubled algebra keeps its original as a maximal filter") {
  CHECK(remark_filter_of_double(godel_chain(3), Strategy::exhaustive()).status ==
        CheckStatus::Valid);
  CHECK(remark_filter_of_double(mv_chain(2), Strategy::exhaustive()).status ==
        CheckStatus::Valid);
  CHECK(remark_filter_of_double(lift(nk(1)), Strategy::bounded(6)).status ==
        CheckStatus::BoundedValid);
}

TEST_CASE("triple construction rejects mismatched parts") {
  auto g = godel_chain(3);
  auto c = nk(1);
  CHECK_THROWS_AS(external_join_from_maximal_filter(g, maximal_filters(g)[0], c),
                  DomainError);

  auto b2 = bool_algebra(2);
  Filter not_max = Filter::finite(b2, {b2->one});
  CHECK_THROWS_AS(external_join_from_maximal_filter(b2, not_max, c), DomainError);

  auto b1 = bool_algebra(1);
  CHECK_THROWS_AS(
      external_join_from_maximal_filter(b1, maximal_filters(b1)[0], godel_chain(3)),
      DomainError);
}
