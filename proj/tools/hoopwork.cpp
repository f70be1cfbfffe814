#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hoopwork/builder.hpp"
#include "hoopwork/catalog.hpp"
#include "hoopwork/classify.hpp"
#include "hoopwork/constructions.hpp"
#include "hoopwork/filters.hpp"
#include "hoopwork/hasse.hpp"
#include "hoopwork/iso.hpp"
#include "hoopwork/json_io.hpp"
#include "hoopwork/parser.hpp"
#include "hoopwork/transform.hpp"
#include "hoopwork/triple.hpp"

namespace hw = hoopwork;
using hw::ordered_json;

namespace {

struct Common {
  std::string input;
  std::string strategy_name;
  std::size_t bound = 8;
  std::string out;
  std::vector<std::string> expects;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("input", c.input, "builder expression or .json algebra file")->required();
  sub->add_option("--strategy", c.strategy_name, "exhaustive or bounded (default: by carrier)")
      ->check(CLI::IsMember({"exhaustive", "bounded"}));
  sub->add_option("--bound", c.bound, "sample size per variable for bounded checks");
  sub->add_option("--out", c.out, "write the report (or DOT) to this file");
  sub->add_option("--expect", c.expects,
                  "label the input must carry; '!' prefix negates; repeatable");
}

hw::AlgebraPtr resolve_algebra(const std::string& text, std::size_t bound) {
  if (text.size() > 5 && text.compare(text.size() - 5, 5, ".json") == 0)
    return hw::load_algebra(text);
  std::string expr = text;
  if (expr.rfind("construct:", 0) == 0) {
    expr = expr.substr(std::string("construct:").size());
    std::replace(expr.begin(), expr.end(), '-', '_');
  }
  return hw::build(expr, hw::Strategy::bounded(bound));
}

hw::Strategy effective_strategy(const Common& c, const hw::Algebra& alg) {
  if (c.strategy_name == "exhaustive") return hw::Strategy::exhaustive();
  if (c.strategy_name == "bounded") return hw::Strategy::bounded(c.bound);
  return alg.is_finite() ? hw::Strategy::exhaustive() : hw::Strategy::bounded(c.bound);
}

void emit(const ordered_json& j, const std::string& out) {
  std::string text = j.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw hw::DomainError("cannot write " + out);
  f << text;
}

std::string normalize_label(const std::string& s) {
  std::string out;
  for (char ch : s)
    if (ch != '-' && ch != '_') out.push_back(static_cast<char>(std::tolower(ch)));
  return out;
}

hw::Cert expected_cert(const std::string& raw) {
  std::string want = normalize_label(raw);
  for (hw::Cert c : {hw::Cert::BCIRL, hw::Cert::BL, hw::Cert::MV, hw::Cert::Godel,
                     hw::Cert::Product, hw::Cert::Boolean, hw::Cert::Hoop,
                     hw::Cert::WajsbergHoop, hw::Cert::CancellativeHoop,
                     hw::Cert::GeneralizedBoolean, hw::Cert::ProductHoop,
                     hw::Cert::GodelHoop})
    if (normalize_label(hw::cert_name(c)) == want) return c;
  throw hw::DomainError("unknown label in --expect: " + raw);
}

// "BEXPR:maxfilterN:CEXPR" names a Boolean algebra, one of its maximal
// filters by index, and a cancellative hoop.
struct TripleSpec {
  hw::AlgebraPtr bool_alg;
  hw::Filter maximal;
  hw::AlgebraPtr canc;
};

TripleSpec parse_triple_spec(const std::string& text, std::size_t bound) {
  auto first = text.find(':');
  auto second = first == std::string::npos ? std::string::npos : text.find(':', first + 1);
  if (first == std::string::npos || second == std::string::npos)
    throw hw::DomainError("expected \"BOOL:maxfilterN:HOOP\", got \"" + text + "\"");
  std::string bpart = text.substr(0, first);
  std::string mpart = text.substr(first + 1, second - first - 1);
  std::string cpart = text.substr(second + 1);
  if (mpart.rfind("maxfilter", 0) != 0 || mpart.size() == std::string("maxfilter").size())
    throw hw::DomainError("middle component must be maxfilterN, got \"" + mpart + "\"");
  std::size_t idx = 0;
  for (char ch : mpart.substr(std::string("maxfilter").size())) {
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw hw::DomainError("middle component must be maxfilterN, got \"" + mpart + "\"");
    idx = idx * 10 + static_cast<std::size_t>(ch - '0');
  }
  auto b = resolve_algebra(bpart, bound);
  auto ms = hw::maximal_filters(b);
  if (idx >= ms.size())
    throw hw::DomainError(b->name + " has " + std::to_string(ms.size()) +
                          " maximal filters; index " + std::to_string(idx) + " is out of range");
  return TripleSpec{b, ms[idx], resolve_algebra(cpart, bound)};
}

ordered_json report_header(const std::string& command, const Common& c) {
  ordered_json j = ordered_json::object();
  j["command"] = command;
  j["input"] = c.input;
  return j;
}

int finish_check(ordered_json& j, const hw::CheckReport& r, const Common& c) {
  j["result"] = hw::report_to_json(r);
  emit(j, c.out);
  return r.ok() ? 0 : 1;
}

int cmd_classify(const Common& c) {
  auto alg = resolve_algebra(c.input, c.bound);
  auto st = effective_strategy(c, *alg);
  auto rep = hw::classify(*alg, st);
  ordered_json j = report_header("classify", c);
  ordered_json body = hw::classify_to_json(*alg, rep);
  for (auto& [key, value] : body.items()) j[key] = value;
  bool violated = false;
  if (!c.expects.empty()) {
    ordered_json checks = ordered_json::array();
    for (const std::string& raw : c.expects) {
      bool negated = !raw.empty() && raw[0] == '!';
      hw::Cert want = expected_cert(negated ? raw.substr(1) : raw);
      bool holds = rep.has(want) != negated;
      violated = violated || !holds;
      ordered_json e = ordered_json::object();
      e["label"] = hw::cert_name(want);
      e["negated"] = negated;
      e["satisfied"] = holds;
      checks.push_back(std::move(e));
    }
    j["expect"] = std::move(checks);
  }
  emit(j, c.out);
  return violated ? 1 : 0;
}

int cmd_filters(const Common& c, bool maximal_only, bool with_radical) {
  auto alg = resolve_algebra(c.input, c.bound);
  ordered_json j = report_header("filters", c);
  j["algebra"] = alg->name;
  if (!alg->is_finite() && !with_radical)
    throw hw::DomainError("filter enumeration requires a finite carrier; " + alg->name +
                          " is symbolic (radical/skeleton are available by construction "
                          "where certified)");
  if (alg->is_finite()) {
    auto fs = maximal_only ? hw::maximal_filters(alg) : hw::all_filters(alg);
    j["kind"] = maximal_only ? "maximal" : "all";
    j["count"] = fs.size();
    ordered_json arr = ordered_json::array();
    for (const auto& f : fs) arr.push_back(hw::filter_to_json(f));
    j["filters"] = std::move(arr);
  }
  if (with_radical) j["radical"] = hw::filter_to_json(hw::radical(alg));
  emit(j, c.out);
  return 0;
}

int cmd_construct(const std::string& kind, const Common& c) {
  hw::AlgebraPtr result;
  ordered_json j = report_header("construct", c);
  j["kind"] = kind;
  ordered_json verification = ordered_json::array();
  ordered_json notes = ordered_json::array();

  if (kind == "triple") {
    auto spec = parse_triple_spec(c.input, c.bound);
    auto st = effective_strategy(c, *spec.canc);
    j["strategy"] = st.str();
    auto ej = hw::external_join_from_maximal_filter(spec.bool_alg, spec.maximal, spec.canc);
    verification.push_back(hw::report_to_json(hw::verify_external_join(ej, st)));
    result = hw::triple_product(hw::ProductTriple{spec.bool_alg, spec.canc, ej}, st);
  } else {
    auto s = resolve_algebra(c.input, c.bound);
    auto st = effective_strategy(c, *s);
    j["strategy"] = st.str();
    if (kind == "lift") {
      result = hw::lift(s);
    } else if (kind == "mv-closure") {
      auto mv = hw::mv_closure(s);
      verification.push_back(
          hw::report_to_json(hw::validate_filter(hw::mv_slice_filter(mv), st)));
      result = mv;
    } else if (kind == "product-closure") {
      auto pc = hw::product_closure(s, st);
      verification.push_back(hw::report_to_json(hw::verify_external_join(pc.triple.join, st)));
      if (s->certified(hw::Cert::CancellativeHoop)) {
        auto lifted = hw::lift(s);
        auto palg = pc.algebra;
        auto map = [&lifted, &s](const hw::Element& e) {
          auto pr = e.as<hw::Pair>();
          if (pr.first->as<hw::MvPair>().bit == 1)
            return hw::Element(lifted->id, hw::Lifted{hw::box(pr.second->retag(s->id))});
          return *lifted->zero;
        };
        auto iso = hw::bounded_iso_check(palg, lifted, map, std::max<std::size_t>(c.bound, 8));
        ordered_json n = hw::report_to_json(iso);
        n["note"] = "isomorphic to " + lifted->name + " via [1,c] -> c, [0,1] -> bottom";
        notes.push_back(std::move(n));
      }
      result = pc.algebra;
    } else {
      throw hw::DomainError("unknown construction kind: " + kind);
    }
    auto labels = hw::classify(*result, effective_strategy(c, *result)).labels;
    ordered_json ls = ordered_json::array();
    for (hw::Cert cert : labels) ls.push_back(hw::cert_name(cert));
    j["labels"] = std::move(ls);
  }

  j["algebra"] = hw::algebra_to_json(*result);
  if (!verification.empty()) j["verification"] = std::move(verification);
  if (!notes.empty()) j["notes"] = std::move(notes);
  if (!c.out.empty()) {
    emit(j["algebra"], c.out);
    j["out"] = c.out;
  }
  bool certified_ok = true;
  if (j.contains("verification"))
    for (const auto& part : j["verification"])
      if (part.contains("status") && part["status"] == "refuted") certified_ok = false;
  emit(j, "");
  return certified_ok ? 0 : 2;
}

int cmd_verify(const std::string& kind, const Common& c) {
  ordered_json j = report_header("verify", c);
  j["kind"] = kind;
  if (kind == "external-join") {
    auto spec = parse_triple_spec(c.input, c.bound);
    auto st = effective_strategy(c, *spec.canc);
    j["strategy"] = st.str();
    auto ej = hw::external_join_from_maximal_filter(spec.bool_alg, spec.maximal, spec.canc);
    return finish_check(j, hw::verify_external_join(ej, st), c);
  }
  auto alg = resolve_algebra(c.input, c.bound);
  auto st = effective_strategy(c, *alg);
  j["strategy"] = st.str();
  if (kind == "decomposition") return finish_check(j, hw::verify_decomposition(alg, st), c);
  if (kind == "main") return finish_check(j, hw::verify_main_theorem(alg, st), c);
  if (kind == "remark") return finish_check(j, hw::remark_filter_of_double(alg, st), c);
  throw hw::DomainError("unknown verification kind: " + kind);
}

int cmd_hasse(const Common& c) {
  auto alg = resolve_algebra(c.input, c.bound);
  auto st = effective_strategy(c, *alg);
  std::string dot = hw::hasse_dot(*alg, st);
  std::string path = c.out.empty() ? "hasse.dot" : c.out;
  {
    std::ofstream f(path);
    if (!f) throw hw::DomainError("cannot write " + path);
    f << dot;
  }
  std::size_t nodes = 0;
  for (std::size_t pos = dot.find("[label="); pos != std::string::npos;
       pos = dot.find("[label=", pos + 1))
    ++nodes;
  ordered_json j = report_header("hasse", c);
  j["algebra"] = alg->name;
  j["strategy"] = st.str();
  j["nodes"] = nodes;
  j["truncated"] = !alg->is_finite();
  j["dot"] = path;
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_eval(const Common& c, const std::string& term_text, const std::string& env_text) {
  auto alg = resolve_algebra(c.input, c.bound);
  hw::Term t = hw::parse_term(term_text, alg->sig);
  std::vector<std::string> names;
  std::string cur;
  for (char ch : env_text) {
    if (ch == ',') {
      names.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty() || !env_text.empty()) names.push_back(cur);
  auto lookup = [&](const std::string& name) {
    auto pool = alg->is_finite() ? *alg->elements : alg->sample(std::max<std::size_t>(c.bound, 64));
    for (const hw::Element& e : pool)
      if (alg->render(e) == name) return e;
    throw hw::DomainError("no element named \"" + name + "\" in " + alg->name);
  };
  std::vector<hw::Element> env;
  env.reserve(names.size());
  for (const std::string& n : names) env.push_back(lookup(n));
  if (t.max_var() > static_cast<int>(env.size()))
    throw hw::DomainError("term uses x" + std::to_string(t.max_var()) + " but --env binds " +
                          std::to_string(env.size()) + " element(s)");
  hw::Element value = hw::eval(*alg, t, env);
  ordered_json j = report_header("eval", c);
  j["algebra"] = alg->name;
  j["term"] = t.str();
  ordered_json envj = ordered_json::object();
  for (std::size_t i = 0; i < env.size(); ++i)
    envj["x" + std::to_string(i + 1)] = alg->render(env[i]);
  j["env"] = std::move(envj);
  j["value"] = alg->render(value);
  emit(j, c.out);
  return 0;
}

int cmd_parse(const std::string& text, bool zero_free, const std::string& out) {
  hw::Signature sig = zero_free ? hw::Signature::zero_free() : hw::Signature::full();
  ordered_json j = ordered_json::object();
  j["command"] = "parse";
  j["input"] = text;
  j["signature"] = zero_free ? "zero-free" : "full";
  if (text.find('=') != std::string::npos) {
    hw::Equation eq = hw::parse_equation(text, sig);
    j["kind"] = "equation";
    j["canonical"] = eq.str();
    j["variables"] = eq.variables;
  } else {
    hw::Term t = hw::parse_term(text, sig);
    j["kind"] = "term";
    j["canonical"] = t.str();
    j["variables"] = t.max_var();
  }
  emit(j, out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hoopwork: build, inspect, and machine-check residuated lattices and hoops"};
  app.require_subcommand(1);

  Common c_classify, c_filters, c_construct, c_verify, c_hasse, c_eval;
  bool maximal_only = false, with_radical = false, zero_free = false;
  std::string construct_kind, verify_kind, eval_term, eval_env, parse_text, parse_out;

  auto* sc = app.add_subcommand("classify", "establish class labels by running the axiom suite");
  add_common(sc, c_classify);

  auto* sf = app.add_subcommand("filters", "enumerate filters of a finite algebra");
  add_common(sf, c_filters);
  sf->add_flag("--maximal", maximal_only, "only maximal proper filters");
  sf->add_flag("--radical", with_radical, "include the radical");

  auto* sco = app.add_subcommand("construct", "run a construction and emit the result");
  sco->add_option("kind", construct_kind, "lift | mv-closure | triple | product-closure")
      ->required()
      ->check(CLI::IsMember({"lift", "mv-closure", "triple", "product-closure"}));
  add_common(sco, c_construct);

  auto* sv = app.add_subcommand("verify", "machine-check one of the structure results");
  sv->add_option("kind", verify_kind, "decomposition | external-join | main | remark")
      ->required()
      ->check(CLI::IsMember({"decomposition", "external-join", "main", "remark"}));
  add_common(sv, c_verify);

  auto* sh = app.add_subcommand("hasse", "write the Hasse diagram as DOT");
  add_common(sh, c_hasse);

  auto* se = app.add_subcommand("eval", "evaluate a term against named elements");
  add_common(se, c_eval);
  se->add_option("term", eval_term, "term over x1, x2, ...")->required();
  se->add_option("--env", eval_env, "comma-separated element names bound to x1, x2, ...");

  auto* sp = app.add_subcommand("parse", "echo the canonical form of a term or equation");
  sp->add_option("text", parse_text, "term or equation")->required();
  sp->add_flag("--zero-free", zero_free, "parse against the signature without 0");
  sp->add_option("--out", parse_out, "write the report to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(sc)) return cmd_classify(c_classify);
    if (app.got_subcommand(sf)) return cmd_filters(c_filters, maximal_only, with_radical);
    if (app.got_subcommand(sco)) return cmd_construct(construct_kind, c_construct);
    if (app.got_subcommand(sv)) return cmd_verify(verify_kind, c_verify);
    if (app.got_subcommand(sh)) return cmd_hasse(c_hasse);
    if (app.got_subcommand(se)) return cmd_eval(c_eval, eval_term, eval_env);
    if (app.got_subcommand(sp)) return cmd_parse(parse_text, zero_free, parse_out);
  } catch (const std::exception& e) {
    ordered_json j = ordered_json::object();
    j["error"] = e.what();
    std::cout << j.dump(2) << "\n";
    return 2;
  }
  return 2;
}
