#include "hoopwork/filters.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "hoopwork/transform.hpp"
#include "hoopwork/triple.hpp"

namespace hoopwork {

Filter Filter::finite(const AlgebraPtr& alg, std::vector<Element> members) {
  std::vector<std::pair<std::size_t, Element>> keyed;
  keyed.reserve(members.size());
  for (const Element& e : members) keyed.emplace_back(alg->index_of(e), e);
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  keyed.erase(std::unique(keyed.begin(), keyed.end(),
                          [](const auto& a, const auto& b) { return a.first == b.first; }),
              keyed.end());
  Filter f;
  f.of = alg;
  std::vector<Element> ordered;
  ordered.reserve(keyed.size());
  for (auto& [i, e] : keyed) ordered.push_back(e);
  auto lookup = std::make_shared<std::set<Element>>(ordered.begin(), ordered.end());
  f.pred = [lookup](const Element& e) { return lookup->count(e) > 0; };
  f.members = std::move(ordered);
  return f;
}

Filter Filter::symbolic(const AlgebraPtr& alg, std::function<bool(const Element&)> pred,
                        std::string descr) {
  Filter f;
  f.of = alg;
  f.pred = std::move(pred);
  f.descr = std::move(descr);
  return f;
}

std::size_t Filter::size() const {
  if (!members) throw DomainError("symbolic filter has no size: " + render());
  return members->size();
}

bool Filter::contains(const Element& e) const {
  of->check_element(e);
  return pred(e);
}

std::vector<Element> Filter::sample(std::size_t n) const {
  if (members) {
    return {members->begin(), members->begin() + std::min(n, members->size())};
  }
  std::vector<Element> out;
  for (const Element& e : of->sample(4 * n + 16)) {
    if (!pred(e)) continue;
    out.push_back(e);
    if (out.size() == n) break;
  }
  return out;
}

std::vector<std::string> Filter::names() const {
  if (!members) throw DomainError("symbolic filter has no member list: " + render());
  std::vector<std::string> out;
  out.reserve(members->size());
  for (const Element& e : *members) out.push_back(of->render(e));
  return out;
}

std::string Filter::render() const {
  if (!members) return descr.empty() ? "<symbolic filter>" : descr;
  std::string out = "{";
  bool first = true;
  for (const Element& e : *members) {
    if (!first) out += ",";
    first = false;
    out += of->render(e);
  }
  return out + "}";
}

bool Filter::proper() const {
  if (of->sig.has_zero) return !contains(*of->zero);
  if (!members) throw DomainError("properness of a symbolic zero-free filter is undecidable");
  return members->size() < of->size();
}

bool Filter::same_members(const Filter& other) const {
  if (!members || !other.members)
    throw DomainError("member comparison requires finite filters");
  return of == other.of && *members == *other.members;
}

std::size_t Congruence::block_index(const Element& e) const {
  of->check_element(e);
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (const Element& m : blocks[i])
      if (m == e) return i;
  throw DomainError("element outside every block of " + of->name);
}

bool Congruence::related(const Element& a, const Element& b) const {
  return block_index(a) == block_index(b);
}

std::vector<std::vector<std::string>> Congruence::names() const {
  std::vector<std::vector<std::string>> out;
  for (const auto& block : blocks) {
    std::vector<std::string> row;
    row.reserve(block.size());
    for (const Element& e : block) row.push_back(of->render(e));
    out.push_back(std::move(row));
  }
  return out;
}

bool Congruence::same_blocks(const Congruence& other) const {
  if (of != other.of || blocks.size() != other.blocks.size()) return false;
  for (std::size_t i = 0; i < blocks.size(); ++i)
    if (blocks[i] != other.blocks[i]) return false;
  return true;
}

CheckReport validate_filter(const Filter& f, const Strategy& st) {
  const Algebra& alg = *f.of;
  const std::string subject = "filter invariants for " + f.render();
  std::size_t checked = 0;

  std::vector<Element> inside, base;
  bool exhaustive;
  if (f.is_finite()) {
    inside = *f.members;
    base = *alg.elements;
    exhaustive = true;
  } else {
    inside = f.sample(st.bound);
    base = strategy_domain(alg, st);
    exhaustive = st.is_exhaustive();
  }

  ++checked;
  if (!f.pred(alg.one))
    return CheckReport::refuted(subject, {{"x", alg.render(alg.one)}}, "unit not in filter");

  for (const Element& x : inside)
    for (const Element& y : inside) {
      ++checked;
      Element p = alg.mul(x, y);
      if (!f.pred(p))
        return CheckReport::refuted(subject, {{"x", alg.render(x)}, {"y", alg.render(y)}},
                                    "not closed under mul: escapes at " + alg.render(p));
    }

  for (const Element& x : inside)
    for (const Element& y : base) {
      ++checked;
      if (leq(alg, x, y) && !f.pred(y))
        return CheckReport::refuted(subject, {{"x", alg.render(x)}, {"y", alg.render(y)}},
                                    "not upward closed: " + alg.render(y) + " is above " +
                                        alg.render(x));
    }

  if (exhaustive) return CheckReport::valid(subject, checked);
  return CheckReport::bounded(subject, st.bound, checked);
}

Filter filter_generate(const AlgebraPtr& alg, const std::vector<Element>& xs) {
  if (!alg->is_finite())
    throw DomainError("filter generation requires a finite carrier: " + alg->name);
  std::set<Element> mulcl;
  mulcl.insert(alg->one);
  for (const Element& g : xs) {
    alg->check_element(g);
    mulcl.insert(g);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Element> snapshot(mulcl.begin(), mulcl.end());
    for (const Element& x : snapshot)
      for (const Element& y : snapshot)
        if (mulcl.insert(alg->mul(x, y)).second) grew = true;
  }
  std::vector<Element> members;
  for (const Element& y : *alg->elements)
    for (const Element& m : mulcl)
      if (leq(*alg, m, y)) {
        members.push_back(y);
        break;
      }
  return Filter::finite(alg, std::move(members));
}

namespace {

std::vector<std::size_t> positions(const Filter& f) {
  std::vector<std::size_t> out;
  out.reserve(f.members->size());
  for (const Element& e : *f.members) out.push_back(f.of->index_of(e));
  return out;
}

}  // namespace

std::vector<Filter> all_filters(const AlgebraPtr& alg) {
  if (!alg->is_finite())
    throw DomainError("filter enumeration requires a finite carrier: " + alg->name);
  std::set<std::vector<std::size_t>> seen;
  std::deque<Filter> queue;
  std::vector<Filter> out;

  Filter least = filter_generate(alg, {});
  seen.insert(positions(least));
  queue.push_back(std::move(least));
  while (!queue.empty()) {
    Filter f = std::move(queue.front());
    queue.pop_front();
    for (const Element& e : *alg->elements) {
      if (f.contains(e)) continue;
      std::vector<Element> gens = *f.members;
      gens.push_back(e);
      Filter g = filter_generate(alg, gens);
      if (seen.insert(positions(g)).second) queue.push_back(g);
    }
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end(), [](const Filter& a, const Filter& b) {
    if (a.members->size() != b.members->size())
      return a.members->size() < b.members->size();
    return positions(a) < positions(b);
  });
  return out;
}

std::vector<Filter> maximal_filters(const AlgebraPtr& alg) {
  std::vector<Filter> proper;
  for (Filter& f : all_filters(alg))
    if (f.proper()) proper.push_back(std::move(f));
  std::vector<Filter> out;
  for (std::size_t i = 0; i < proper.size(); ++i) {
    bool maximal = true;
    std::set<Element> mine(proper[i].members->begin(), proper[i].members->end());
    for (std::size_t j = 0; j < proper.size() && maximal; ++j) {
      if (i == j || proper[j].members->size() <= mine.size()) continue;
      bool subset = true;
      for (const Element& e : mine)
        if (!proper[j].contains(e)) {
          subset = false;
          break;
        }
      if (subset) maximal = false;
    }
    if (maximal) out.push_back(proper[i]);
  }
  return out;
}

Filter radical(const AlgebraPtr& alg) {
  if (alg->is_finite()) {
    std::vector<Filter> maxes = maximal_filters(alg);
    if (maxes.empty()) return Filter::finite(alg, *alg->elements);
    std::vector<Element> common;
    for (const Element& e : *alg->elements) {
      bool everywhere = true;
      for (const Filter& m : maxes)
        if (!m.contains(e)) {
          everywhere = false;
          break;
        }
      if (everywhere) common.push_back(e);
    }
    return Filter::finite(alg, std::move(common));
  }
  switch (alg->prov.kind) {
    case ProvKind::Lift:
      return Filter::symbolic(
          alg, [](const Element& e) { return e.as<Lifted>().inner != nullptr; },
          "lifted copy of " + alg->prov.a->name);
    case ProvKind::Triple: {
      Element one_b = alg->prov.triple->bool_alg->one;
      return Filter::symbolic(
          alg, [one_b](const Element& e) { return *e.as<Pair>().first == one_b; },
          "classes [1,c]");
    }
    default:
      throw DomainError("radical of symbolic " + alg->name +
                        " needs lift or triple provenance");
  }
}

AlgebraPtr boolean_skeleton(const AlgebraPtr& alg) {
  if (!alg->sig.has_zero)
    throw DomainError("skeleton requires a bottom: " + alg->name);
  const std::string name = "skeleton(" + alg->name + ")";
  const CertSet boolean_certs = {Cert::BCIRL, Cert::BL,      Cert::MV,
                                 Cert::Godel, Cert::Product, Cert::Boolean};
  std::vector<Element> members;
  if (alg->is_finite()) {
    for (const Element& x : *alg->elements) {
      Element nx = alg->imp(x, *alg->zero);
      if (alg->meet(x, nx) == *alg->zero && alg->join(x, nx) == alg->one)
        members.push_back(x);
    }
  } else if (alg->prov.kind == ProvKind::Lift) {
    members = {*alg->zero, alg->one};
  } else if (alg->prov.kind == ProvKind::Triple) {
    const auto& t = *alg->prov.triple;
    for (const Element& b : *t.bool_alg->elements)
      members.emplace_back(alg->id, Pair{box(b), box(t.canc->one)});
  } else {
    throw DomainError("skeleton of symbolic " + alg->name +
                      " needs lift or triple provenance");
  }
  auto out = subalgebra_on(alg, members, true, name);
  out->certs = boolean_certs;
  return out;
}

CheckReport validate_congruence(const Congruence& c) {
  const Algebra& alg = *c.of;
  const std::string subject = "congruence compatibility";
  if (!alg.is_finite()) throw DomainError("congruences require finite carriers");
  std::vector<std::size_t> owner(alg.size(), static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < c.blocks.size(); ++i)
    for (const Element& e : c.blocks[i]) {
      std::size_t pos = alg.index_of(e);
      if (owner[pos] != static_cast<std::size_t>(-1))
        throw DomainError("blocks overlap at " + alg.render(e));
      owner[pos] = i;
    }
  for (std::size_t pos = 0; pos < owner.size(); ++pos)
    if (owner[pos] == static_cast<std::size_t>(-1))
      throw DomainError("blocks miss " + alg.render((*alg.elements)[pos]));

  auto block_of = [&](const Element& e) { return owner[alg.index_of(e)]; };
  std::size_t checked = 0;
  for (const auto& block : c.blocks)
    for (std::size_t i = 0; i < block.size(); ++i)
      for (std::size_t j = i + 1; j < block.size(); ++j)
        for (const Element& y : *alg.elements)
          for (Sym s : Signature::binary_syms()) {
            ++checked;
            const Element &a = block[i], &b = block[j];
            if (block_of(alg.apply(s, a, y)) != block_of(alg.apply(s, b, y)) ||
                block_of(alg.apply(s, y, a)) != block_of(alg.apply(s, y, b)))
              return CheckReport::refuted(
                  subject,
                  {{"a", alg.render(a)}, {"b", alg.render(b)}, {"y", alg.render(y)}},
                  std::string("incompatible with ") + sym_name(s));
          }
  return CheckReport::valid(subject, checked);
}

Congruence congruence_from_filter(const Filter& f) {
  const AlgebraPtr& alg = f.of;
  if (!alg->is_finite()) throw DomainError("congruences require finite carriers");
  CheckReport rep = validate_filter(f, Strategy::exhaustive());
  if (!rep.ok()) throw DomainError("not a filter: " + rep.detail);

  auto related = [&](const Element& a, const Element& b) {
    return f.pred(alg->imp(a, b)) && f.pred(alg->imp(b, a));
  };
  Congruence c;
  c.of = alg;
  for (const Element& e : *alg->elements) {
    bool placed = false;
    for (auto& block : c.blocks)
      if (related(block.front(), e)) {
        block.push_back(e);
        placed = true;
        break;
      }
    if (!placed) c.blocks.push_back({e});
  }
  return c;
}

Filter filter_from_congruence(const Congruence& c) {
  CheckReport rep = validate_congruence(c);
  if (!rep.ok()) throw DomainError("partition is not a congruence: " + rep.detail);
  for (const auto& block : c.blocks)
    for (const Element& e : block)
      if (e == c.of->one) return Filter::finite(c.of, block);
  throw DomainError("no block contains the unit");
}

std::vector<Congruence> all_congruences(const AlgebraPtr& alg) {
  if (!alg->is_finite())
    throw DomainError("congruence enumeration requires a finite carrier: " + alg->name);
  const std::size_t n = alg->size();
  if (n > 10)
    throw DomainError("congruence enumeration is limited to carriers of size <= 10");
  std::vector<Congruence> out;
  std::vector<std::size_t> assign(n, 0);

  std::function<void(std::size_t, std::size_t)> enumerate = [&](std::size_t pos,
                                                                std::size_t used) {
    if (pos == n) {
      Congruence c;
      c.of = alg;
      c.blocks.assign(used, {});
      for (std::size_t i = 0; i < n; ++i)
        c.blocks[assign[i]].push_back((*alg->elements)[i]);
      if (validate_congruence(c).ok()) out.push_back(std::move(c));
      return;
    }
    for (std::size_t v = 0; v <= used; ++v) {
      assign[pos] = v;
      enumerate(pos + 1, std::max(used, v + 1));
    }
  };
  enumerate(0, 0);
  return out;
}

AlgebraPtr quotient(const AlgebraPtr& alg, const Filter& f) {
  Congruence cong = congruence_from_filter(f);
  const std::size_t k = cong.blocks.size();
  auto blocks = std::make_shared<std::vector<std::vector<Element>>>(cong.blocks);
  auto owner = std::make_shared<std::map<Element, std::size_t>>();
  for (std::size_t i = 0; i < k; ++i)
    for (const Element& e : (*blocks)[i]) (*owner)[e] = i;

  for (Sym s : Signature::binary_syms()) {
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        std::size_t expected =
            owner->at(alg->apply(s, (*blocks)[i].front(), (*blocks)[j].front()));
        for (const Element& a : (*blocks)[i])
          for (const Element& b : (*blocks)[j])
            if (owner->at(alg->apply(s, a, b)) != expected)
              throw DomainError(std::string("induced ") + sym_name(s) +
                                " is ill-defined on blocks of " + alg->name);
      }
  }

  auto q = std::make_shared<Algebra>();
  q->id = next_algebra_id();
  q->name = "quotient(" + alg->name + ";" + f.render() + ")";
  q->sig = alg->sig;
  const std::uint32_t id = q->id;
  auto induced = [alg, blocks, owner, id](Sym s) {
    return [alg, blocks, owner, id, s](const Element& x, const Element& y) {
      const Element& a = (*blocks)[x.as<FinIdx>().idx].front();
      const Element& b = (*blocks)[y.as<FinIdx>().idx].front();
      return Element(id, FinIdx{static_cast<std::uint32_t>(owner->at(alg->apply(s, a, b)))});
    };
  };
  q->f_mul = induced(Sym::Mul);
  q->f_imp = induced(Sym::Imp);
  q->f_meet = induced(Sym::Meet);
  q->f_join = induced(Sym::Join);
  std::vector<Element> elems;
  for (std::size_t i = 0; i < k; ++i)
    elems.emplace_back(id, FinIdx{static_cast<std::uint32_t>(i)});
  q->elements = std::move(elems);
  q->one = Element(id, FinIdx{static_cast<std::uint32_t>(owner->at(alg->one))});
  if (alg->sig.has_zero)
    q->zero = Element(id, FinIdx{static_cast<std::uint32_t>(owner->at(*alg->zero))});
  q->namer = [alg, blocks](const Element& e) {
    return "[" + alg->render((*blocks)[e.as<FinIdx>().idx].front()) + "]";
  };
  q->certs = alg->certs;
  q->prov = {ProvKind::Quotient, alg, nullptr, nullptr};
  return q;
}

AlgebraPtr filter_as_hoop(const Filter& f) {
  if (!f.is_finite())
    throw DomainError("inherited-operation hoops require finite filters");
  CheckReport rep = validate_filter(f, Strategy::exhaustive());
  if (!rep.ok()) throw DomainError("not a filter: " + rep.detail);
  return subalgebra_on(f.of, *f.members, false,
                       "hoop(" + f.render() + " in " + f.of->name + ")");
}

namespace {

CheckReport maximality_core(const AlgebraPtr& alg, const Filter& f, const Strategy& st,
                            std::vector<std::pair<Element, Element>>* witnesses) {
  if (!alg->sig.has_zero)
    throw DomainError("maximality witnesses require a bottom: " + alg->name);
  if (f.contains(*alg->zero))
    throw DomainError("filter is not proper: it contains the bottom");
  CheckReport valid = validate_filter(f, st);
  if (!valid.ok()) throw DomainError("not a filter: " + valid.detail);

  const std::string subject = "maximality of " + f.render() + " in " + alg->name;
  std::vector<Element> domain = strategy_domain(*alg, st);
  std::vector<Element> pool =
      f.is_finite() ? *f.members : f.sample(std::max<std::size_t>(st.bound, 8));
  std::size_t checked = 0;
  std::size_t outsiders = 0;
  for (const Element& e : domain) {
    if (f.contains(e)) continue;
    ++outsiders;
    bool found = false;
    for (const Element& g : pool) {
      ++checked;
      if (alg->mul(e, g) == *alg->zero) {
        if (witnesses) witnesses->emplace_back(e, g);
        found = true;
        break;
      }
    }
    if (!found) {
      CheckReport r = CheckReport::refuted(
          subject, {{"e", alg->render(e)}},
          "no sampled filter element annihilates it");
      if (!st.is_exhaustive()) r.bound = st.bound;
      r.checked = checked;
      return r;
    }
  }
  CheckReport r = st.is_exhaustive() ? CheckReport::valid(subject, checked)
                                     : CheckReport::bounded(subject, st.bound, checked);
  r.detail = std::to_string(outsiders) + " outsiders annihilated";
  return r;
}

}  // namespace

CheckReport is_maximal_filter_witnessed(const AlgebraPtr& alg, const Filter& f,
                                        const Strategy& st) {
  return maximality_core(alg, f, st, nullptr);
}

std::vector<std::pair<Element, Element>> maximality_witnesses(const AlgebraPtr& alg,
                                                              const Filter& f,
                                                              const Strategy& st) {
  std::vector<std::pair<Element, Element>> out;
  CheckReport rep = maximality_core(alg, f, st, &out);
  if (!rep.ok())
    throw DomainError("maximality refuted at " + rep.witness.front().second);
  return out;
}

}  // namespace hoopwork
