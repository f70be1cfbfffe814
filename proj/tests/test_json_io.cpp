#include <cstdio>
#include <fstream>
#include <functional>
#include <string>

#include "doctest.h"

#include "hoopwork/catalog.hpp"
#include "hoopwork/classify.hpp"
#include "hoopwork/constructions.hpp"
#include "hoopwork/errors.hpp"
#include "hoopwork/filters.hpp"
#include "hoopwork/iso.hpp"
#include "hoopwork/json_io.hpp"
#include "hoopwork/parser.hpp"

using namespace hoopwork;

namespace {

AlgebraPtr roundtrip(const AlgebraPtr& a) {
  return algebra_from_json(algebra_to_json(*a), a->name);
}

std::string thrown_message(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const DomainError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("finite algebras roundtrip through json") {
  for (const char* expr : {"godel_chain(3)", "mv_chain(2)", "bool(2)",
                           "direct_product(bool(1),godel_chain(3))"}) {
    auto a = build(expr);
    CAPTURE(expr);
    auto b = roundtrip(a);
    REQUIRE(b->is_finite());
    REQUIRE(b->size() == a->size());
    for (std::size_t i = 0; i < a->size(); ++i)
      CHECK(b->render((*b->elements)[i]) == a->render((*a->elements)[i]));
    CHECK(find_isomorphism(a, b).has_value());
    CHECK(classify(*b, Strategy::exhaustive()).labels ==
          classify(*a, Strategy::exhaustive()).labels);
  }
}

TEST_CASE("a zero-free table roundtrips without the constant") {
  auto t = two0();
  auto b = roundtrip(t);
  CHECK_FALSE(b->sig.has_zero);
  CHECK(b->size() == 2);
  CHECK(classify(*b, Strategy::exhaustive()).has(Cert::GeneralizedBoolean));
}

TEST_CASE("loading classifies small carriers into certificates") {
  auto b = roundtrip(bool_algebra(2));
  CHECK(b->certified(Cert::Boolean));
  CHECK(b->certified(Cert::MV));
}

TEST_CASE("hand-written json loads as the two-element boolean algebra") {
  ordered_json j = ordered_json::parse(R"({
    "carrier": ["bot", "top"],
    "signature": "full",
    "one": "top",
    "zero": "bot",
    "mul":  [["bot", "bot"], ["bot", "top"]],
    "imp":  [["top", "top"], ["bot", "top"]],
    "meet": [["bot", "bot"], ["bot", "top"]],
    "join": [["bot", "top"], ["top", "top"]]
  })");
  auto a = algebra_from_json(j, "inline");
  REQUIRE(a->size() == 2);
  CHECK(a->render(a->one) == "top");
  CHECK(a->render(*a->zero) == "bot");
  CHECK(classify(*a, Strategy::exhaustive()).has(Cert::Boolean));
}

TEST_CASE("malformed algebra json is rejected with located errors") {
  ordered_json good = algebra_to_json(*godel_chain(3));

  ordered_json no_table = good;
  no_table.erase("mul");
  CHECK_THROWS_AS(algebra_from_json(no_table, "t"), DomainError);

  ordered_json ragged = good;
  ragged["mul"][1] = ordered_json::array({"0", "a"});
  CHECK_THROWS_AS(algebra_from_json(ragged, "t"), DomainError);

  ordered_json alien = good;
  alien["imp"][0][0] = "zz";
  std::string msg = thrown_message([&] { algebra_from_json(alien, "t"); });
  CHECK(msg.find("\"imp\"[0][0]") != std::string::npos);

  ordered_json dup = good;
  dup["carrier"] = ordered_json::array({"0", "a", "a"});
  CHECK_THROWS_AS(algebra_from_json(dup, "t"), DomainError);

  ordered_json bad_const = good;
  bad_const["one"] = "missing";
  CHECK_THROWS_AS(algebra_from_json(bad_const, "t"), DomainError);

  ordered_json zero_in_hoop = algebra_to_json(*two0());
  zero_in_hoop["zero"] = "a";
  CHECK_THROWS_AS(algebra_from_json(zero_in_hoop, "t"), DomainError);
}

TEST_CASE("tables that break residuation are rejected on load") {
  ordered_json j = algebra_to_json(*godel_chain(3));
  // Redirect a -> 0 to 1: then a*1 <= 0 fails while 1 <= a -> 0 holds.
  j["imp"][1][0] = "1";
  std::string msg = thrown_message([&] { algebra_from_json(j, "t"); });
  CHECK(msg.find("residuation") != std::string::npos);
}

TEST_CASE("symbolic algebras serialize as builder references") {
  auto n1 = nk(1);
  ordered_json j = algebra_to_json(*n1);
  CHECK(j.contains("builder"));
  CHECK(j["builder"] == "nk(1)");
  REQUIRE(j.contains("certificates"));
  bool canc = false;
  for (const auto& c : j["certificates"]) canc = canc || c == "CancellativeHoop";
  CHECK(canc);
  CHECK_FALSE(j.contains("carrier"));
}

TEST_CASE("load_algebra reads a file and names it after the stem") {
  auto g = godel_chain(4);
  const char* path = "io_roundtrip_chain.json";
  {
    std::ofstream f(path);
    f << algebra_to_json(*g).dump(2) << "\n";
  }
  auto loaded = load_algebra(path);
  std::remove(path);
  CHECK(loaded->name == "io_roundtrip_chain");
  CHECK(loaded->size() == 4);
  CHECK(find_isomorphism(loaded, g).has_value());
  CHECK_THROWS_AS(load_algebra("does_not_exist.json"), DomainError);
}

TEST_CASE("reports serialize their verdict witness and counts") {
  auto g = godel_chain(3);
  Equation em = parse_equation("x1 \\/ ~x1 = 1", g->sig);
  CheckReport r = check_equation(*g, em, Strategy::exhaustive());
  ordered_json j = report_to_json(r);
  CHECK(j["status"] == "refuted");
  CHECK(j["subject"] == em.str());
  CHECK(j["witness"]["x1"] == "a");
  CHECK(j["detail"] == "a != 1");
  CHECK(j["checked"].get<std::size_t>() == r.checked);

  CheckReport b = CheckReport::bounded("s", 8, 64);
  ordered_json jb = report_to_json(b);
  CHECK(jb["status"] == "bounded-valid");
  CHECK(jb["bound"] == 8);
  CHECK_FALSE(jb.contains("witness"));
}

TEST_CASE("filters and congruences serialize members and blocks") {
  auto g = godel_chain(3);
  auto e = *g->elements;
  ordered_json fj = filter_to_json(Filter::finite(g, {e[1], e[2]}));
  CHECK(fj["of"] == "godel_chain(3)");
  CHECK(fj["members"] == ordered_json::array({"a", "1"}));

  Filter rad = radical(lift(nk(1)));
  ordered_json sj = filter_to_json(rad);
  CHECK(sj.contains("description"));
  CHECK(sj.contains("sample"));
  CHECK_FALSE(sj.contains("members"));

  Congruence c = congruence_from_filter(Filter::finite(g, {e[2]}));
  ordered_json cj = congruence_to_json(c);
  CHECK(cj["blocks"].size() == 3);
}

TEST_CASE("classification serializes labels with per-axiom verdicts") {
  auto m = mv_chain(2);
  auto rep = classify(*m, Strategy::exhaustive());
  ordered_json j = classify_to_json(*m, rep);
  bool mv = false;
  for (const auto& l : j["labels"]) mv = mv || l == "MV";
  CHECK(mv);
  CHECK(j["strategy"] == "exhaustive");
  bool saw_involutivity = false;
  for (const auto& ax : j["axioms"])
    if (ax["axiom"] == "involutivity") {
      saw_involutivity = true;
      CHECK(ax["status"] == "valid");
    }
  CHECK(saw_involutivity);
}
