#include "hoopwork/transform.hpp"

#include <algorithm>
#include <set>

namespace hoopwork {

namespace {

CertSet intersect_certs(const CertSet& a, const CertSet& b) {
  CertSet out;
  for (Cert c : a)
    if (b.count(c)) out.insert(c);
  return out;
}

}  // namespace

AlgebraPtr direct_product(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a->sig != b->sig)
    throw DomainError("direct product requires matching signatures: " + a->name +
                      " vs " + b->name);
  auto alg = std::make_shared<Algebra>();
  alg->id = next_algebra_id();
  alg->name = "direct_product(" + a->name + "," + b->name + ")";
  alg->sig = a->sig;
  const std::uint32_t id = alg->id;

  auto component = [a, b, id](Sym s) {
    return [a, b, id, s](const Element& x, const Element& y) {
      const auto& px = x.as<Pair>();
      const auto& py = y.as<Pair>();
      Element l = a->apply(s, *px.first, *py.first);
      Element r = b->apply(s, *px.second, *py.second);
      return Element(id, Pair{box(std::move(l)), box(std::move(r))});
    };
  };
  alg->f_mul = component(Sym::Mul);
  alg->f_imp = component(Sym::Imp);
  alg->f_meet = component(Sym::Meet);
  alg->f_join = component(Sym::Join);

  auto pair_up = [id](const Element& l, const Element& r) {
    return Element(id, Pair{box(l), box(r)});
  };
  alg->one = pair_up(a->one, b->one);
  if (a->sig.has_zero) alg->zero = pair_up(*a->zero, *b->zero);

  if (a->is_finite() && b->is_finite()) {
    std::vector<Element> elems;
    elems.reserve(a->elements->size() * b->elements->size());
    for (const Element& l : *a->elements)
      for (const Element& r : *b->elements) elems.push_back(pair_up(l, r));
    alg->elements = std::move(elems);
  } else {
    alg->sampler = [a, b, pair_up](std::size_t n) {
      std::vector<Element> ls = a->sample(n);
      std::vector<Element> rs = b->sample(n);
      std::vector<Element> out;
      if (ls.empty() || rs.empty()) return out;
      std::size_t shells = ls.size() + rs.size();
      for (std::size_t s = 0; s < shells && out.size() < n; ++s)
        for (std::size_t i = 0; i <= s && out.size() < n; ++i) {
          std::size_t j = s - i;
          if (i < ls.size() && j < rs.size()) out.push_back(pair_up(ls[i], rs[j]));
        }
      return out;
    };
  }

  alg->namer = [a, b](const Element& e) {
    const auto& p = e.as<Pair>();
    return "(" + a->render(*p.first) + "," + b->render(*p.second) + ")";
  };
  alg->certs = intersect_certs(a->certs, b->certs);
  alg->prov = {ProvKind::DirectProduct, a, b, nullptr};
  return alg;
}

Element to_parent(const Algebra& child, const Element& e) {
  child.check_element(e);
  return e.retag(child.prov.a->id);
}

Element from_parent(const Algebra& child, const Element& e) {
  child.prov.a->check_element(e);
  return e.retag(child.id);
}

std::shared_ptr<Algebra> delegating_shell(const AlgebraPtr& parent,
                                          const std::string& name, bool keep_zero) {
  if (keep_zero && !parent->sig.has_zero)
    throw DomainError("no zero to keep in " + parent->name);
  auto alg = std::make_shared<Algebra>();
  alg->id = next_algebra_id();
  alg->name = name;
  alg->sig = keep_zero ? parent->sig : Signature::zero_free();
  const std::uint32_t id = alg->id;
  auto delegate = [parent, id](Sym s) {
    return [parent, id, s](const Element& x, const Element& y) {
      Element r = parent->apply(s, x.retag(parent->id), y.retag(parent->id));
      return r.retag(id);
    };
  };
  alg->f_mul = delegate(Sym::Mul);
  alg->f_imp = delegate(Sym::Imp);
  alg->f_meet = delegate(Sym::Meet);
  alg->f_join = delegate(Sym::Join);
  alg->namer = [parent](const Element& e) { return parent->render(e.retag(parent->id)); };
  alg->one = parent->one.retag(id);
  if (keep_zero) alg->zero = parent->zero->retag(id);
  return alg;
}

CertSet zero_free_certs(const CertSet& bounded) {
  CertSet out;
  out.insert(Cert::Hoop);
  // Hoop-side certificates survive subreducts and subalgebras as is.
  for (Cert c : {Cert::WajsbergHoop, Cert::CancellativeHoop, Cert::GeneralizedBoolean,
                 Cert::ProductHoop, Cert::GodelHoop})
    if (bounded.count(c)) out.insert(c);
  if (bounded.count(Cert::Boolean)) {
    out.insert(Cert::GeneralizedBoolean);
    out.insert(Cert::WajsbergHoop);
    out.insert(Cert::ProductHoop);
    out.insert(Cert::GodelHoop);
  }
  if (bounded.count(Cert::MV)) out.insert(Cert::WajsbergHoop);
  if (bounded.count(Cert::Godel)) out.insert(Cert::GodelHoop);
  if (bounded.count(Cert::Product)) out.insert(Cert::ProductHoop);
  return out;
}

AlgebraPtr zero_free_reduct(const AlgebraPtr& a) {
  if (!a->sig.has_zero)
    throw DomainError("already zero-free: " + a->name);
  auto alg = delegating_shell(a, "reduct0(" + a->name + ")", false);
  const std::uint32_t id = alg->id;
  if (a->is_finite()) {
    std::vector<Element> elems;
    elems.reserve(a->elements->size());
    for (const Element& e : *a->elements) elems.push_back(e.retag(id));
    alg->elements = std::move(elems);
  } else {
    alg->sampler = [a, id](std::size_t n) {
      std::vector<Element> out = a->sample(n);
      for (Element& e : out) e = e.retag(id);
      return out;
    };
  }
  alg->certs = zero_free_certs(a->certs);
  alg->prov = {ProvKind::ZeroFreeReduct, a, nullptr, nullptr};
  return alg;
}

std::shared_ptr<Algebra> subalgebra_on(const AlgebraPtr& a,
                                       const std::vector<Element>& members,
                                       bool keep_zero, const std::string& name) {
  std::set<Element> universe(members.begin(), members.end());
  for (const Element& e : members) a->check_element(e);
  if (!universe.count(a->one))
    throw DomainError("subuniverse of " + a->name + " misses the unit");
  if (keep_zero && !universe.count(*a->zero))
    throw DomainError("subuniverse of " + a->name + " misses the bottom");
  for (const Element& x : universe)
    for (const Element& y : universe)
      for (Sym s : {Sym::Mul, Sym::Imp, Sym::Meet, Sym::Join}) {
        Element r = a->apply(s, x, y);
        if (!universe.count(r))
          throw DomainError("set is not closed under " + std::string(sym_name(s)) +
                            " in " + a->name + ": escapes at (" + a->render(x) + "," +
                            a->render(y) + ")");
      }

  auto alg = delegating_shell(a, name, keep_zero);
  const std::uint32_t id = alg->id;
  std::vector<Element> ordered;
  if (a->is_finite()) {
    for (const Element& e : *a->elements)
      if (universe.count(e)) ordered.push_back(e.retag(id));
  } else {
    std::set<Element> taken;
    for (const Element& e : members)
      if (taken.insert(e).second) ordered.push_back(e.retag(id));
  }
  alg->elements = std::move(ordered);
  alg->certs = keep_zero ? a->certs : zero_free_certs(a->certs);
  alg->prov = {ProvKind::Subalgebra, a, nullptr, nullptr};
  return alg;
}

AlgebraPtr subalgebra_generated(const AlgebraPtr& a, const std::vector<Element>& gens) {
  if (!a->is_finite())
    throw DomainError("subalgebra closure requires a finite carrier: " + a->name);
  std::set<Element> closure;
  closure.insert(a->one);
  if (a->sig.has_zero) closure.insert(*a->zero);
  for (const Element& g : gens) {
    a->check_element(g);
    closure.insert(g);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Element> snapshot(closure.begin(), closure.end());
    for (const Element& x : snapshot)
      for (const Element& y : snapshot)
        for (Sym s : {Sym::Mul, Sym::Imp, Sym::Meet, Sym::Join}) {
          Element r = a->apply(s, x, y);
          if (closure.insert(r).second) grew = true;
        }
  }

  std::string label;
  for (const Element& g : gens) {
    if (!label.empty()) label += "+";
    label += a->render(g);
  }
  return subalgebra_on(a, {closure.begin(), closure.end()}, a->sig.has_zero,
                       "sub(" + a->name + ";" + label + ")");
}

}  // namespace hoopwork
