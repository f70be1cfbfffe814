#include "hoopwork/classify.hpp"

#include "hoopwork/parser.hpp"

namespace hoopwork {

const CheckReport* ClassifyReport::find(const std::string& axiom) const {
  for (const auto& [name, rep] : axioms)
    if (name == axiom) return &rep;
  return nullptr;
}

bool ClassifyReport::passed(const std::string& axiom) const {
  const CheckReport* r = find(axiom);
  return r != nullptr && r->ok();
}

namespace {

struct Suite {
  const Algebra& alg;
  Strategy st;
  ClassifyReport& out;

  void equation(const std::string& name, const std::string& text) {
    Equation eq = parse_equation(text, alg.sig);
    out.axioms.emplace_back(name, check_equation(alg, eq, st));
  }
};

}  // namespace

ClassifyReport classify(const Algebra& alg, const Strategy& st) {
  ClassifyReport out;
  out.strategy = st;
  Suite suite{alg, st, out};

  suite.equation("mul-assoc", "(x1*x2)*x3 = x1*(x2*x3)");
  suite.equation("mul-comm", "x1*x2 = x2*x1");
  suite.equation("mul-unit", "x1*1 = x1");
  suite.equation("meet-comm", "x1 /\\ x2 = x2 /\\ x1");
  suite.equation("meet-assoc", "(x1 /\\ x2) /\\ x3 = x1 /\\ (x2 /\\ x3)");
  suite.equation("join-comm", "x1 \\/ x2 = x2 \\/ x1");
  suite.equation("join-assoc", "(x1 \\/ x2) \\/ x3 = x1 \\/ (x2 \\/ x3)");
  suite.equation("absorb-meet", "x1 /\\ (x1 \\/ x2) = x1");
  suite.equation("absorb-join", "x1 \\/ (x1 /\\ x2) = x1");
  suite.equation("top", "x1 \\/ 1 = 1");
  const bool bounded_below = alg.sig.has_zero;
  if (bounded_below) suite.equation("bottom", "x1 /\\ 0 = 0");
  out.axioms.emplace_back("residuation", check_residuation(alg, st));
  suite.equation("divisibility", "x1 /\\ x2 = x1*(x1 -> x2)");
  suite.equation("prelinearity", "(x1 -> x2) \\/ (x2 -> x1) = 1");
  suite.equation("idempotency", "x1*x1 = x1");
  if (bounded_below) {
    suite.equation("involutivity", "~~x1 = x1");
    suite.equation("product-identity", "~x1 \\/ ((x1 -> x1*x2) -> x2) = 1");
    suite.equation("excluded-middle", "x1 \\/ ~x1 = 1");
  } else {
    suite.equation("wajsberg", "(x1 -> x2) -> x2 = (x2 -> x1) -> x1");
    out.axioms.emplace_back("cancellation", check_cancellation(alg, st));
  }

  auto ok = [&](const char* name) { return out.passed(name); };
  bool core = ok("mul-assoc") && ok("mul-comm") && ok("mul-unit") &&
              ok("meet-comm") && ok("meet-assoc") && ok("join-comm") &&
              ok("join-assoc") && ok("absorb-meet") && ok("absorb-join") &&
              ok("top") && ok("residuation");
  bool basic = core && ok("divisibility") && ok("prelinearity");
  if (bounded_below) {
    bool bcirl = core && ok("bottom");
    bool bl = bcirl && ok("divisibility") && ok("prelinearity");
    if (bcirl) out.labels.insert(Cert::BCIRL);
    if (bl) {
      out.labels.insert(Cert::BL);
      if (ok("involutivity")) out.labels.insert(Cert::MV);
      if (ok("idempotency")) out.labels.insert(Cert::Godel);
      if (ok("product-identity")) out.labels.insert(Cert::Product);
      if (ok("excluded-middle")) out.labels.insert(Cert::Boolean);
    }
  } else {
    if (core) out.labels.insert(Cert::Hoop);
    bool wajsberg = basic && ok("wajsberg");
    if (wajsberg) out.labels.insert(Cert::WajsbergHoop);
    if (wajsberg && ok("idempotency")) out.labels.insert(Cert::GeneralizedBoolean);
    if (basic && ok("cancellation")) out.labels.insert(Cert::CancellativeHoop);
  }
  return out;
}

}  // namespace hoopwork
