#include <algorithm>
#include <cstdint>
#include <set>

#include "doctest.h"

#include "hoopwork/catalog.hpp"
#include "hoopwork/classify.hpp"
#include "hoopwork/errors.hpp"
#include "hoopwork/rational.hpp"

using namespace hoopwork;

TEST_CASE("boolean algebras are powersets under mask arithmetic") {
  for (std::size_t k = 1; k <= 3; ++k) {
    auto b = bool_algebra(k);
    std::size_t n = std::size_t(1) << k;
    REQUIRE(b->is_finite());
    REQUIRE(b->size() == n);
    auto e = *b->elements;
    CHECK(b->index_of(*b->zero) == 0);
    CHECK(b->index_of(b->one) == n - 1);
    std::uint64_t full = n - 1;
    for (std::uint64_t x = 0; x < n; ++x)
      for (std::uint64_t y = 0; y < n; ++y) {
        CHECK(b->index_of(b->mul(e[x], e[y])) == (x & y));
        CHECK(b->index_of(b->meet(e[x], e[y])) == (x & y));
        CHECK(b->index_of(b->join(e[x], e[y])) == (x | y));
        CHECK(b->index_of(b->imp(e[x], e[y])) == ((~x & full) | y));
      }
  }
  auto b2 = bool_algebra(2);
  CHECK(b2->render((*b2->elements)[1]) == "a");
  CHECK(b2->render((*b2->elements)[2]) == "b");
}

TEST_CASE("godel chains compute min and the guarded residual") {
  for (std::size_t n = 2; n <= 5; ++n) {
    auto g = godel_chain(n);
    REQUIRE(g->size() == n);
    auto e = *g->elements;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        CHECK(g->index_of(g->mul(e[i], e[j])) == std::min(i, j));
        CHECK(g->index_of(g->meet(e[i], e[j])) == std::min(i, j));
        CHECK(g->index_of(g->join(e[i], e[j])) == std::max(i, j));
        CHECK(g->index_of(g->imp(e[i], e[j])) == (i <= j ? n - 1 : j));
      }
  }
  CHECK_THROWS_AS(godel_chain(0), DomainError);
  CHECK_THROWS_AS(godel_chain(29), DomainError);
}

TEST_CASE("mv chains compute truncated lukasiewicz arithmetic") {
  for (std::size_t n = 1; n <= 5; ++n) {
    auto m = mv_chain(n);
    REQUIRE(m->size() == n + 1);
    auto e = *m->elements;
    auto clamp0 = [](long v) { return v < 0 ? 0 : v; };
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t j = 0; j <= n; ++j) {
        long li = static_cast<long>(i), lj = static_cast<long>(j), ln = static_cast<long>(n);
        CHECK(m->index_of(m->mul(e[i], e[j])) ==
              static_cast<std::size_t>(clamp0(li + lj - ln)));
        CHECK(m->index_of(m->imp(e[i], e[j])) ==
              static_cast<std::size_t>(std::min(ln, ln - li + lj)));
        CHECK(m->index_of(m->meet(e[i], e[j])) == std::min(i, j));
        CHECK(m->index_of(m->join(e[i], e[j])) == std::max(i, j));
      }
  }
  auto m3 = mv_chain(3);
  CHECK(m3->render((*m3->elements)[0]) == "0");
  CHECK(m3->render((*m3->elements)[1]) == "1/3");
  CHECK(m3->render((*m3->elements)[2]) == "2/3");
  CHECK(m3->render((*m3->elements)[3]) == "1");
  auto m4 = mv_chain(4);
  CHECK(m4->render((*m4->elements)[2]) == "1/2");
}

TEST_CASE("nk adds componentwise and subtracts truncated") {
  auto n2 = nk(2);
  CHECK_FALSE(n2->is_finite());
  auto sample = n2->sample(12);
  REQUIRE(sample.size() == 12);
  CHECK(sample[0] == n2->one);
  // Graded order: total degree never decreases along the sample.
  auto degree = [](const Element& e) {
    std::uint64_t d = 0;
    for (auto c : e.as<NatVec>().v) d += c;
    return d;
  };
  for (std::size_t i = 0; i + 1 < sample.size(); ++i)
    CHECK(degree(sample[i]) <= degree(sample[i + 1]));

  for (const Element& x : sample)
    for (const Element& y : sample) {
      auto mv = n2->mul(x, y).as<NatVec>().v;
      auto iv = n2->imp(x, y).as<NatVec>().v;
      auto xv = x.as<NatVec>().v;
      auto yv = y.as<NatVec>().v;
      for (std::size_t c = 0; c < 2; ++c) {
        CHECK(mv[c] == xv[c] + yv[c]);
        CHECK(iv[c] == (yv[c] > xv[c] ? yv[c] - xv[c] : 0));
      }
    }

  // x -> x*y = y is the cancellation witness identity.
  for (const Element& x : sample)
    for (const Element& y : sample) CHECK(n2->imp(x, n2->mul(x, y)) == y);
}

TEST_CASE("nk(1) renders unit and powers of the generator") {
  auto n1 = nk(1);
  auto s = n1->sample(4);
  CHECK(n1->render(s[0]) == "1");
  CHECK(n1->render(s[1]) == "c");
  CHECK(n1->render(s[2]) == "c^2");
  CHECK(n1->render(s[3]) == "c^3");
}

TEST_CASE("rat01 multiplies exactly and caps the residual at 1") {
  auto r = rat01();
  CHECK_FALSE(r->is_finite());
  auto s = r->sample(10);
  REQUIRE(s.size() == 10);
  CHECK(s[0] == r->one);
  std::set<Rational> seen;
  for (const Element& e : s) {
    const Rational& q = e.as<PosRat>().q;
    CHECK(q.num() >= 1);
    CHECK(q.num() <= q.den());
    CHECK(seen.insert(q).second);
  }
  for (const Element& x : s)
    for (const Element& y : s) {
      Rational qx = x.as<PosRat>().q, qy = y.as<PosRat>().q;
      CHECK(r->mul(x, y).as<PosRat>().q == qx * qy);
      Rational quotient = qy / qx;
      Rational capped = quotient < Rational(1) ? quotient : Rational(1);
      CHECK(r->imp(x, y).as<PosRat>().q == capped);
      CHECK(r->meet(x, y).as<PosRat>().q == std::min(qx, qy));
      CHECK(r->join(x, y).as<PosRat>().q == std::max(qx, qy));
    }
}

TEST_CASE("the small catalog entries have the advertised shape") {
  auto t = two0();
  REQUIRE(t->size() == 2);
  CHECK_FALSE(t->sig.has_zero);
  auto te = *t->elements;
  CHECK(t->render(te[0]) == "a");
  CHECK(t->render(te[1]) == "1");
  CHECK(t->mul(te[0], te[0]) == te[0]);
  CHECK(t->imp(te[1], te[0]) == te[0]);
  CHECK(t->imp(te[0], te[1]) == te[1]);

  auto tr = trivial_hoop();
  CHECK(tr->size() == 1);
  CHECK(tr->mul(tr->one, tr->one) == tr->one);
}

TEST_CASE("builder expressions evaluate the full vocabulary") {
  CHECK(build("bool(2)")->size() == 4);
  CHECK(build("godel_chain(5)")->size() == 5);
  CHECK(build("mv_chain(3)")->size() == 4);
  CHECK_FALSE(build("nk(2)")->is_finite());
  CHECK_FALSE(build("rat01()")->is_finite());
  CHECK(build("two0()")->size() == 2);
  CHECK(build("trivial()")->size() == 1);
  CHECK(build("lift(two0())")->size() == 3);
  CHECK(build("reduct0(godel_chain(3))")->size() == 3);
  CHECK(build("direct_product(bool(1),godel_chain(3))")->size() == 6);
  CHECK(build("mv_closure(reduct0(mv_chain(2)))")->size() == 6);
  CHECK(build("product_closure(nk(1))")->certified(Cert::Product));
  CHECK(build(" direct_product( bool(1) , bool(1) ) ")->size() == 4);
}

TEST_CASE("builder errors name the offending call") {
  CHECK_THROWS_AS(build("frobnicate(2)"), DomainError);
  CHECK_THROWS_AS(build("bool()"), DomainError);
  CHECK_THROWS_AS(build("bool(1,2)"), DomainError);
  CHECK_THROWS_AS(build("lift(3)"), DomainError);
  CHECK_THROWS_AS(build("bool(2"), ParseError);
  CHECK_THROWS_AS(build(""), ParseError);
  CHECK_THROWS_AS(build("lift(godel_chain(3))"), DomainError);
}

TEST_CASE("builder vocabulary is published") {
  auto names = builder_names();
  for (const char* want : {"bool", "godel_chain", "mv_chain", "nk", "rat01", "two0",
                           "trivial", "lift", "reduct0", "direct_product", "mv_closure",
                           "product_closure"})
    CHECK(std::find(names.begin(), names.end(), want) != names.end());
}

TEST_CASE("catalog builders are fresh per call but behave identically") {
  auto a = nk(2);
  auto b = nk(2);
  CHECK(a->id != b->id);
  auto sa = a->sample(8);
  auto sb = b->sample(8);
  for (std::size_t i = 0; i < 8; ++i) CHECK(sa[i].retag(b->id) == sb[i]);
}
