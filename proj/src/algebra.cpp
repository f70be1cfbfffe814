#include "hoopwork/algebra.hpp"

#include <atomic>
#include <map>

namespace hoopwork {

const char* cert_name(Cert c) {
  switch (c) {
    case Cert::BCIRL: return "BCIRL";
    case Cert::BL: return "BL";
    case Cert::MV: return "MV";
    case Cert::Godel: return "Godel";
    case Cert::Product: return "Product";
    case Cert::Boolean: return "Boolean";
    case Cert::Hoop: return "Hoop";
    case Cert::WajsbergHoop: return "WajsbergHoop";
    case Cert::CancellativeHoop: return "CancellativeHoop";
    case Cert::GeneralizedBoolean: return "GeneralizedBoolean";
    case Cert::ProductHoop: return "ProductHoop";
    case Cert::GodelHoop: return "GodelHoop";
  }
  return "?";
}

std::optional<Cert> cert_from_name(const std::string& name) {
  static const std::map<std::string, Cert> table = {
      {"BCIRL", Cert::BCIRL},
      {"BL", Cert::BL},
      {"MV", Cert::MV},
      {"Godel", Cert::Godel},
      {"Product", Cert::Product},
      {"Boolean", Cert::Boolean},
      {"Hoop", Cert::Hoop},
      {"WajsbergHoop", Cert::WajsbergHoop},
      {"CancellativeHoop", Cert::CancellativeHoop},
      {"GeneralizedBoolean", Cert::GeneralizedBoolean},
      {"ProductHoop", Cert::ProductHoop},
      {"GodelHoop", Cert::GodelHoop},
  };
  auto it = table.find(name);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

std::uint32_t next_algebra_id() {
  static std::atomic<std::uint32_t> counter{1};
  return counter.fetch_add(1);
}

std::size_t Algebra::size() const {
  if (!elements) throw DomainError("size() requires a finite carrier: " + name);
  return elements->size();
}

void Algebra::check_element(const Element& e) const {
  if (e.algebra_id() != id)
    throw DomainError("element does not belong to " + name);
}

Element Algebra::mul(const Element& a, const Element& b) const {
  check_element(a);
  check_element(b);
  return f_mul(a, b);
}

Element Algebra::imp(const Element& a, const Element& b) const {
  check_element(a);
  check_element(b);
  return f_imp(a, b);
}

Element Algebra::meet(const Element& a, const Element& b) const {
  check_element(a);
  check_element(b);
  return f_meet(a, b);
}

Element Algebra::join(const Element& a, const Element& b) const {
  check_element(a);
  check_element(b);
  return f_join(a, b);
}

Element Algebra::apply(Sym s, const Element& a, const Element& b) const {
  switch (s) {
    case Sym::Mul: return mul(a, b);
    case Sym::Imp: return imp(a, b);
    case Sym::Meet: return meet(a, b);
    case Sym::Join: return join(a, b);
    default: throw DomainError(std::string("not a binary symbol: ") + sym_name(s));
  }
}

Element Algebra::constant(Sym s) const {
  if (s == Sym::One) return one;
  if (s == Sym::Zero) {
    if (!zero) throw DomainError("no bottom constant in " + name);
    return *zero;
  }
  throw DomainError(std::string("not a constant symbol: ") + sym_name(s));
}

std::vector<Element> Algebra::sample(std::size_t n) const {
  if (elements) {
    std::vector<Element> out(elements->begin(),
                             elements->begin() + std::min(n, elements->size()));
    return out;
  }
  if (!sampler) throw DomainError("no sampler for " + name);
  std::vector<Element> out = sampler(n);
  if (out.size() > n) out.resize(n);
  return out;
}

std::size_t Algebra::index_of(const Element& e) const {
  check_element(e);
  if (!elements) throw DomainError("index_of requires a finite carrier: " + name);
  for (std::size_t i = 0; i < elements->size(); ++i)
    if ((*elements)[i] == e) return i;
  throw DomainError("element not in the enumeration of " + name);
}

std::string Strategy::str() const {
  if (kind == Kind::Exhaustive) return "exhaustive";
  return "bounded(" + std::to_string(bound) + ")";
}

std::vector<Element> strategy_domain(const Algebra& alg, const Strategy& st) {
  if (st.is_exhaustive()) {
    if (!alg.elements)
      throw DomainError("exhaustive check requires a finite carrier: " + alg.name);
    return *alg.elements;
  }
  return alg.sample(st.bound);
}

const char* check_status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Valid: return "valid";
    case CheckStatus::Refuted: return "refuted";
    case CheckStatus::BoundedValid: return "bounded-valid";
  }
  return "?";
}

CheckReport CheckReport::valid(std::string subject, std::size_t checked) {
  CheckReport r;
  r.status = CheckStatus::Valid;
  r.subject = std::move(subject);
  r.checked = checked;
  return r;
}

CheckReport CheckReport::bounded(std::string subject, std::size_t bound, std::size_t checked) {
  CheckReport r;
  r.status = CheckStatus::BoundedValid;
  r.subject = std::move(subject);
  r.bound = bound;
  r.checked = checked;
  return r;
}

CheckReport CheckReport::refuted(std::string subject,
                                 std::vector<std::pair<std::string, std::string>> witness,
                                 std::string detail) {
  CheckReport r;
  r.status = CheckStatus::Refuted;
  r.subject = std::move(subject);
  r.witness = std::move(witness);
  r.detail = std::move(detail);
  return r;
}

CheckReport merge_reports(const std::string& subject, const std::vector<CheckReport>& parts) {
  CheckReport out;
  out.subject = subject;
  out.status = CheckStatus::Valid;
  for (const auto& p : parts) {
    out.checked += p.checked;
    if (p.status == CheckStatus::Refuted) {
      out.status = CheckStatus::Refuted;
      out.witness = p.witness;
      out.detail = p.subject.empty() ? p.detail : p.subject + ": " + p.detail;
      out.env = p.env;
      out.eq = p.eq;
      out.bound = p.bound;
      return out;
    }
    if (p.status == CheckStatus::BoundedValid) {
      out.status = CheckStatus::BoundedValid;
      if (p.bound && (!out.bound || *p.bound > *out.bound)) out.bound = p.bound;
    }
  }
  return out;
}

Element eval(const Algebra& alg, const Term& t, const std::vector<Element>& env) {
  switch (t.kind()) {
    case Term::Kind::Var: {
      int i = t.var_index();
      if (i < 1 || static_cast<std::size_t>(i) > env.size())
        throw DomainError("unbound variable x" + std::to_string(i));
      const Element& e = env[static_cast<std::size_t>(i) - 1];
      alg.check_element(e);
      return e;
    }
    case Term::Kind::Const:
      if (!alg.sig.contains(t.sym()))
        throw DomainError(std::string("symbol absent from signature: ") + sym_name(t.sym()));
      return alg.constant(t.sym());
    case Term::Kind::App: {
      if (!alg.sig.contains(t.sym()))
        throw DomainError(std::string("symbol absent from signature: ") + sym_name(t.sym()));
      Element a = eval(alg, t.args()[0], env);
      Element b = eval(alg, t.args()[1], env);
      return alg.apply(t.sym(), a, b);
    }
  }
  throw DomainError("malformed term");
}

bool leq(const Algebra& alg, const Element& a, const Element& b) {
  return alg.imp(a, b) == alg.one;
}

namespace {

// Walk tuples (x1,...,xn) over dom in lexicographic order with x1 the
// most significant slot, calling fn until it returns true (stop).
bool for_each_tuple(const std::vector<Element>& dom, int n,
                    const std::function<bool(const std::vector<Element>&)>& fn) {
  if (n == 0) {
    std::vector<Element> empty;
    return fn(empty);
  }
  std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
  std::vector<Element> env;
  if (dom.empty()) return false;
  while (true) {
    env.clear();
    for (int i = 0; i < n; ++i) env.push_back(dom[idx[static_cast<std::size_t>(i)]]);
    if (fn(env)) return true;
    int pos = n - 1;
    while (pos >= 0) {
      auto p = static_cast<std::size_t>(pos);
      if (++idx[p] < dom.size()) break;
      idx[p] = 0;
      --pos;
    }
    if (pos < 0) return false;
  }
}

std::vector<std::pair<std::string, std::string>> render_env(const Algebra& alg,
                                                            const std::vector<Element>& env) {
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t i = 0; i < env.size(); ++i)
    out.emplace_back("x" + std::to_string(i + 1), alg.render(env[i]));
  return out;
}

}  // namespace

CheckReport check_equation(const Algebra& alg, const Equation& eq, const Strategy& st) {
  eq.lhs.require_signature(alg.sig);
  eq.rhs.require_signature(alg.sig);
  std::vector<Element> dom = strategy_domain(alg, st);
  std::size_t checked = 0;
  CheckReport out;
  bool found = for_each_tuple(dom, eq.variables, [&](const std::vector<Element>& env) {
    ++checked;
    Element l = eval(alg, eq.lhs, env);
    Element r = eval(alg, eq.rhs, env);
    if (l == r) return false;
    out = CheckReport::refuted(eq.str(), render_env(alg, env),
                               alg.render(l) + " != " + alg.render(r));
    out.env = env;
    out.eq = eq;
    return true;
  });
  if (found) {
    out.checked = checked;
    if (!st.is_exhaustive()) out.bound = st.bound;
    return out;
  }
  if (st.is_exhaustive()) return CheckReport::valid(eq.str(), checked);
  return CheckReport::bounded(eq.str(), st.bound, checked);
}

CheckReport check_residuation(const Algebra& alg, const Strategy& st) {
  const std::string subject = "x*y <= z iff y <= x -> z";
  std::vector<Element> dom = strategy_domain(alg, st);
  std::size_t checked = 0;
  CheckReport out;
  bool found = for_each_tuple(dom, 3, [&](const std::vector<Element>& env) {
    ++checked;
    bool lhs = leq(alg, alg.mul(env[0], env[1]), env[2]);
    bool rhs = leq(alg, env[1], alg.imp(env[0], env[2]));
    if (lhs == rhs) return false;
    out = CheckReport::refuted(subject, render_env(alg, env),
                               lhs ? "x*y <= z but not y <= x -> z"
                                   : "y <= x -> z but not x*y <= z");
    out.env = env;
    return true;
  });
  if (found) {
    out.checked = checked;
    if (!st.is_exhaustive()) out.bound = st.bound;
    return out;
  }
  if (st.is_exhaustive()) return CheckReport::valid(subject, checked);
  return CheckReport::bounded(subject, st.bound, checked);
}

CheckReport check_cancellation(const Algebra& alg, const Strategy& st) {
  const std::string subject = "x*z = y*z implies x = y";
  std::vector<Element> dom = strategy_domain(alg, st);
  std::size_t checked = 0;
  CheckReport out;
  bool found = for_each_tuple(dom, 3, [&](const std::vector<Element>& env) {
    ++checked;
    if (alg.mul(env[0], env[2]) != alg.mul(env[1], env[2])) return false;
    if (env[0] == env[1]) return false;
    out = CheckReport::refuted(subject, render_env(alg, env),
                               "x*z = y*z with x != y");
    out.env = env;
    return true;
  });
  if (found) {
    out.checked = checked;
    if (!st.is_exhaustive()) out.bound = st.bound;
    return out;
  }
  if (st.is_exhaustive()) return CheckReport::valid(subject, checked);
  return CheckReport::bounded(subject, st.bound, checked);
}

}  // namespace hoopwork
