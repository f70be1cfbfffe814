#include "hoopwork/json_io.hpp"

#include <array>
#include <cstdint>
#include <fstream>
#include <map>

namespace hoopwork {

namespace {

[[noreturn]] void bad(const std::string& origin, const std::string& what) {
  throw DomainError(origin + ": " + what);
}

std::vector<std::string> read_carrier(const ordered_json& j, const std::string& origin) {
  if (!j.contains("carrier") || !j["carrier"].is_array())
    bad(origin, "missing \"carrier\" array");
  std::vector<std::string> names;
  std::map<std::string, std::size_t> seen;
  for (const auto& item : j["carrier"]) {
    if (!item.is_string()) bad(origin, "carrier entries must be strings");
    std::string n = item.get<std::string>();
    if (n.empty()) bad(origin, "carrier names must be nonempty");
    if (!seen.emplace(n, names.size()).second)
      bad(origin, "duplicate carrier name \"" + n + "\"");
    names.push_back(std::move(n));
  }
  if (names.empty()) bad(origin, "carrier is empty");
  return names;
}

using Table = std::vector<std::vector<std::uint32_t>>;

Table read_table(const ordered_json& j, const std::string& key,
                 const std::map<std::string, std::size_t>& index,
                 std::size_t n, const std::string& origin) {
  if (!j.contains(key) || !j[key].is_array() || j[key].size() != n)
    bad(origin, "\"" + key + "\" must be a " + std::to_string(n) + "x" +
                    std::to_string(n) + " table");
  Table t(n, std::vector<std::uint32_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = j[key][i];
    if (!row.is_array() || row.size() != n)
      bad(origin, "\"" + key + "\" row " + std::to_string(i) + " must have " +
                      std::to_string(n) + " entries");
    for (std::size_t k = 0; k < n; ++k) {
      if (!row[k].is_string())
        bad(origin, "\"" + key + "\"[" + std::to_string(i) + "][" +
                        std::to_string(k) + "] must be a carrier name");
      std::string v = row[k].get<std::string>();
      auto it = index.find(v);
      if (it == index.end())
        bad(origin, "\"" + key + "\"[" + std::to_string(i) + "][" +
                        std::to_string(k) + "] = \"" + v +
                        "\" is not a carrier element");
      t[i][k] = static_cast<std::uint32_t>(it->second);
    }
  }
  return t;
}

std::size_t read_constant(const ordered_json& j, const std::string& key,
                          const std::map<std::string, std::size_t>& index,
                          const std::string& origin) {
  if (!j.contains(key) || !j[key].is_string())
    bad(origin, "missing \"" + key + "\" constant");
  std::string v = j[key].get<std::string>();
  auto it = index.find(v);
  if (it == index.end())
    bad(origin, "\"" + key + "\" = \"" + v + "\" is not a carrier element");
  return it->second;
}

ordered_json witness_to_json(const std::vector<std::pair<std::string, std::string>>& w) {
  ordered_json out = ordered_json::object();
  for (const auto& [var, val] : w) out[var] = val;
  return out;
}

}  // namespace

AlgebraPtr algebra_from_json(const ordered_json& j, const std::string& origin) {
  if (!j.is_object()) bad(origin, "top level must be a JSON object");

  auto names = read_carrier(j, origin);
  const std::size_t n = names.size();
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[names[i]] = i;

  if (!j.contains("signature") || !j["signature"].is_string())
    bad(origin, "missing \"signature\" (\"full\" or \"zero-free\")");
  std::string signame = j["signature"].get<std::string>();
  Signature sig;
  if (signame == "full")
    sig = Signature::full();
  else if (signame == "zero-free")
    sig = Signature::zero_free();
  else
    bad(origin, "unknown signature \"" + signame + "\"");

  auto mul = read_table(j, "mul", index, n, origin);
  auto imp = read_table(j, "imp", index, n, origin);
  auto meet = read_table(j, "meet", index, n, origin);
  auto join = read_table(j, "join", index, n, origin);
  std::size_t one = read_constant(j, "one", index, origin);
  std::optional<std::size_t> zero;
  if (sig.has_zero)
    zero = read_constant(j, "zero", index, origin);
  else if (j.contains("zero"))
    bad(origin, "\"zero\" is not part of a zero-free signature");

  // Residuation is the load-time sanity gate: x*y <= z iff y <= x -> z,
  // with u <= v read as meet(u,v) = u.
  auto leq = [&](std::size_t u, std::size_t v) { return meet[u][v] == u; };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (leq(mul[x][y], z) != leq(y, imp[x][z]))
          bad(origin, "residuation violation at x=" + names[x] + ", y=" +
                          names[y] + ", z=" + names[z] + ": " + names[x] + "*" +
                          names[y] + " <= " + names[z] +
                          (leq(mul[x][y], z) ? " holds" : " fails") + " but " +
                          names[y] + " <= " + names[x] + " -> " + names[z] +
                          (leq(y, imp[x][z]) ? " holds" : " fails"));

  auto alg = std::make_shared<Algebra>();
  alg->id = next_algebra_id();
  alg->name = origin;
  alg->sig = sig;
  const std::uint32_t id = alg->id;
  auto tables = std::make_shared<std::array<Table, 4>>(
      std::array<Table, 4>{std::move(mul), std::move(imp), std::move(meet), std::move(join)});
  alg->f_mul = [tables, id](const Element& a, const Element& b) {
    return Element(id, FinIdx{(*tables)[0][a.as<FinIdx>().idx][b.as<FinIdx>().idx]});
  };
  alg->f_imp = [tables, id](const Element& a, const Element& b) {
    return Element(id, FinIdx{(*tables)[1][a.as<FinIdx>().idx][b.as<FinIdx>().idx]});
  };
  alg->f_meet = [tables, id](const Element& a, const Element& b) {
    return Element(id, FinIdx{(*tables)[2][a.as<FinIdx>().idx][b.as<FinIdx>().idx]});
  };
  alg->f_join = [tables, id](const Element& a, const Element& b) {
    return Element(id, FinIdx{(*tables)[3][a.as<FinIdx>().idx][b.as<FinIdx>().idx]});
  };
  alg->one = Element(id, FinIdx{static_cast<std::uint32_t>(one)});
  if (zero) alg->zero = Element(id, FinIdx{static_cast<std::uint32_t>(*zero)});
  std::vector<Element> elems;
  elems.reserve(n);
  for (std::size_t i = 0; i < n; ++i) elems.emplace_back(id, FinIdx{static_cast<std::uint32_t>(i)});
  alg->elements = std::move(elems);
  auto labels = std::make_shared<std::vector<std::string>>(std::move(names));
  alg->namer = [labels](const Element& e) { return (*labels)[e.as<FinIdx>().idx]; };

  // Establish what the tables actually satisfy, so loaded algebras can
  // feed constructions that require certified inputs.
  if (n <= 64) alg->certs = classify(*alg, Strategy::exhaustive()).labels;
  return alg;
}

AlgebraPtr load_algebra(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  ordered_json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw DomainError(path + ": invalid JSON: " + e.what());
  }
  std::string stem = path;
  if (auto slash = stem.find_last_of("/\\"); slash != std::string::npos)
    stem = stem.substr(slash + 1);
  if (auto dot = stem.rfind('.'); dot != std::string::npos && dot > 0)
    stem = stem.substr(0, dot);
  return algebra_from_json(j, stem);
}

ordered_json algebra_to_json(const Algebra& alg) {
  ordered_json j = ordered_json::object();
  if (!alg.is_finite()) {
    j["builder"] = alg.name;
    ordered_json certs = ordered_json::array();
    for (Cert c : alg.certs) certs.push_back(cert_name(c));
    j["certificates"] = std::move(certs);
    return j;
  }
  const auto& elems = *alg.elements;
  ordered_json carrier = ordered_json::array();
  for (const Element& e : elems) carrier.push_back(alg.render(e));
  j["carrier"] = std::move(carrier);
  j["signature"] = alg.sig.has_zero ? "full" : "zero-free";
  auto table = [&](Sym s) {
    ordered_json t = ordered_json::array();
    for (const Element& a : elems) {
      ordered_json row = ordered_json::array();
      for (const Element& b : elems) row.push_back(alg.render(alg.apply(s, a, b)));
      t.push_back(std::move(row));
    }
    return t;
  };
  j["mul"] = table(Sym::Mul);
  j["imp"] = table(Sym::Imp);
  j["meet"] = table(Sym::Meet);
  j["join"] = table(Sym::Join);
  j["one"] = alg.render(alg.one);
  if (alg.zero) j["zero"] = alg.render(*alg.zero);
  return j;
}

ordered_json report_to_json(const CheckReport& r) {
  ordered_json j = ordered_json::object();
  j["subject"] = r.subject;
  j["status"] = check_status_name(r.status);
  if (r.bound) j["bound"] = *r.bound;
  j["checked"] = r.checked;
  if (!r.witness.empty()) j["witness"] = witness_to_json(r.witness);
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

ordered_json classify_to_json(const Algebra& alg, const ClassifyReport& r) {
  ordered_json j = ordered_json::object();
  j["algebra"] = alg.name;
  j["signature"] = alg.sig.has_zero ? "full" : "zero-free";
  j["strategy"] = r.strategy.str();
  ordered_json labels = ordered_json::array();
  for (Cert c : r.labels) labels.push_back(cert_name(c));
  j["labels"] = std::move(labels);
  ordered_json axioms = ordered_json::array();
  for (const auto& [name, rep] : r.axioms) {
    ordered_json a = report_to_json(rep);
    a["axiom"] = name;
    axioms.push_back(std::move(a));
  }
  j["axioms"] = std::move(axioms);
  return j;
}

ordered_json filter_to_json(const Filter& f) {
  ordered_json j = ordered_json::object();
  j["of"] = f.of->name;
  if (f.is_finite()) {
    ordered_json ms = ordered_json::array();
    for (const std::string& n : f.names()) ms.push_back(n);
    j["members"] = std::move(ms);
  } else {
    j["description"] = f.descr;
    ordered_json ms = ordered_json::array();
    for (const Element& e : f.sample(8)) ms.push_back(f.of->render(e));
    j["sample"] = std::move(ms);
  }
  return j;
}

ordered_json congruence_to_json(const Congruence& c) {
  ordered_json j = ordered_json::object();
  j["of"] = c.of->name;
  ordered_json blocks = ordered_json::array();
  for (const auto& block : c.names()) {
    ordered_json b = ordered_json::array();
    for (const std::string& n : block) b.push_back(n);
    blocks.push_back(std::move(b));
  }
  j["blocks"] = std::move(blocks);
  return j;
}

}  // namespace hoopwork
