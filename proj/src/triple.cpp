#include "hoopwork/triple.hpp"

#include <algorithm>
#include <set>

#include "hoopwork/constructions.hpp"
#include "hoopwork/transform.hpp"

namespace hoopwork {

namespace {

Element bnot(const Algebra& b, const Element& x) { return b.imp(x, *b.zero); }

AlgebraPtr two_element_boolean() {
    auto alg = std::make_shared<Algebra>();
    alg->id = next_algebra_id();
    alg->name = "bool(1)";
    alg->sig = Signature::full();
    const std::uint32_t id = alg->id;
    auto mk = [id](std::uint32_t v) { return Element(id, FinIdx{v}); };
    auto low = [mk](const Element& x, const Element& y) {
        return mk(std::min(x.as<FinIdx>().idx, y.as<FinIdx>().idx));
    };
    alg->f_mul = low;
    alg->f_meet = low;
    alg->f_imp = [mk](const Element& x, const Element& y) {
        return mk(x.as<FinIdx>().idx <= y.as<FinIdx>().idx ? 1u : y.as<FinIdx>().idx);
    };
    alg->f_join = [mk](const Element& x, const Element& y) {
        return mk(std::max(x.as<FinIdx>().idx, y.as<FinIdx>().idx));
    };
    alg->one = mk(1);
    alg->zero = mk(0);
    alg->elements = std::vector<Element>{mk(0), mk(1)};
    alg->namer = [](const Element& e) {
        return std::string(e.as<FinIdx>().idx == 0 ? "0" : "1");
    };
    alg->certs = {Cert::BCIRL, Cert::BL,      Cert::MV,
                  Cert::Godel, Cert::Product, Cert::Boolean};
    return alg;
}

}  // namespace

Element ExternalJoin::apply(const Element& b, const Element& c) const {
    bool_alg->check_element(b);
    canc->check_element(c);
    return join_e(b, c);
}

ExternalJoin external_join_from_maximal_filter(const AlgebraPtr& b, const Filter& m,
                                               const AlgebraPtr& c) {
    if (!b || !c) throw DomainError("external join: null algebra");
    if (!b->is_finite())
        throw DomainError("maximal-filter joins need a finite Boolean algebra: " + b->name);
    if (!b->certified(Cert::Boolean))
        throw DomainError("external joins need a Boolean-certified left part, " + b->name +
                          " carries no such certificate");
    if (c->sig.has_zero)
        throw DomainError("the right part of an external join must be 0-free: " + c->name);
    if (!c->certified(Cert::CancellativeHoop))
        throw DomainError("external joins need a cancellative-certified right part, " +
                          c->name + " carries no such certificate");
    if (!m.of || m.of->id != b->id)
        throw DomainError("the filter does not live on " + b->name);

    bool maximal = false;
    for (const Filter& mm : maximal_filters(b)) {
        bool same = true;
        for (const Element& e : *b->elements)
            if (mm.contains(e) != m.contains(e)) {
                same = false;
                break;
            }
        if (same) {
            maximal = true;
            break;
        }
    }
    if (!maximal)
        throw DomainError("filter " + m.render() + " is not maximal in " + b->name);

    ExternalJoin ej;
    ej.bool_alg = b;
    ej.canc = c;
    const Filter mc = m;
    const Element one_c = c->one;
    ej.join_e = [mc, one_c](const Element& bo, const Element& co) {
        return mc.contains(bo) ? one_c : co;
    };
    ej.descr = "maxfilter " + m.render() + " of " + b->name;
    return ej;
}

CheckReport verify_external_join(const ExternalJoin& ej, const Strategy& st) {
    const AlgebraPtr& B = ej.bool_alg;
    const AlgebraPtr& C = ej.canc;
    if (!B || !C || !ej.join_e) throw DomainError("external join is incomplete");
    if (!B->is_finite())
        throw DomainError("external-join checks need a finite Boolean part: " + B->name);
    if (!B->sig.has_zero)
        throw DomainError("the Boolean part of an external join needs a bottom: " + B->name);
    if (C->sig.has_zero)
        throw DomainError("the cancellative part of an external join must be 0-free: " +
                          C->name);

    const std::vector<Element>& bs = *B->elements;
    const std::vector<Element> cds = strategy_domain(*C, st);
    const bool exh = st.is_exhaustive();
    const auto& j = ej.join_e;
    auto pass = [&](const std::string& subject, std::size_t checked) {
        return exh ? CheckReport::valid(subject, checked)
                   : CheckReport::bounded(subject, st.bound, checked);
    };

    auto v1 = [&]() -> CheckReport {
        const std::string subject = "(V1) h_b endomorphisms, k_c lattice homomorphisms";
        std::size_t checked = 0;
        for (const Element& b : bs) {
            ++checked;
            Element u = j(b, C->one);
            if (u != C->one)
                return CheckReport::refuted(subject, {{"b", B->render(b)}},
                                            "h_b(1) = " + C->render(u));
            for (const Element& c : cds)
                for (const Element& c2 : cds)
                    for (Sym s : {Sym::Mul, Sym::Imp, Sym::Meet, Sym::Join}) {
                        ++checked;
                        Element lhs = j(b, C->apply(s, c, c2));
                        Element rhs = C->apply(s, j(b, c), j(b, c2));
                        if (lhs != rhs)
                            return CheckReport::refuted(
                                subject,
                                {{"b", B->render(b)}, {"c", C->render(c)}, {"c'", C->render(c2)}},
                                std::string("h_b does not preserve ") + sym_name(s) + ": " +
                                    C->render(lhs) + " != " + C->render(rhs));
                    }
        }
        for (const Element& c : cds)
            for (const Element& b : bs)
                for (const Element& b2 : bs)
                    for (Sym s : {Sym::Meet, Sym::Join}) {
                        ++checked;
                        Element lhs = j(B->apply(s, b, b2), c);
                        Element rhs = C->apply(s, j(b, c), j(b2, c));
                        if (lhs != rhs)
                            return CheckReport::refuted(
                                subject,
                                {{"b", B->render(b)}, {"b'", B->render(b2)}, {"c", C->render(c)}},
                                std::string("k_c does not preserve ") + sym_name(s) + ": " +
                                    C->render(lhs) + " != " + C->render(rhs));
                    }
        return pass(subject, checked);
    };

    auto v2 = [&]() -> CheckReport {
        const std::string subject = "(V2) h_0 = id, h_1 = 1";
        std::size_t checked = 0;
        for (const Element& c : cds) {
            ++checked;
            Element u = j(*B->zero, c);
            if (u != c)
                return CheckReport::refuted(subject, {{"c", C->render(c)}},
                                            "h_0(c) = " + C->render(u));
            Element v = j(B->one, c);
            if (v != C->one)
                return CheckReport::refuted(subject, {{"c", C->render(c)}},
                                            "h_1(c) = " + C->render(v));
        }
        return pass(subject, checked);
    };

    auto v3 = [&]() -> CheckReport {
        const std::string subject = "(V3) join interchange";
        std::size_t checked = 0;
        for (const Element& b : bs)
            for (const Element& b2 : bs)
                for (const Element& c : cds)
                    for (const Element& c2 : cds) {
                        ++checked;
                        Element cj = C->join(c, c2);
                        Element e1 = C->join(j(b, c), j(b2, c2));
                        Element e2 = j(B->join(b, b2), cj);
                        Element e3 = j(b, j(b2, cj));
                        if (e1 != e2 || e2 != e3)
                            return CheckReport::refuted(
                                subject,
                                {{"b", B->render(b)},
                                 {"b'", B->render(b2)},
                                 {"c", C->render(c)},
                                 {"c'", C->render(c2)}},
                                C->render(e1) + " / " + C->render(e2) + " / " +
                                    C->render(e3) + " disagree");
                    }
        return pass(subject, checked);
    };

    auto v4 = [&]() -> CheckReport {
        const std::string subject = "(V4) (b v c)*c' = (~b v c') /\\ (b v c*c')";
        std::size_t checked = 0;
        for (const Element& b : bs)
            for (const Element& c : cds)
                for (const Element& c2 : cds) {
                    ++checked;
                    Element lhs = C->mul(j(b, c), c2);
                    Element rhs = C->meet(j(bnot(*B, b), c2), j(b, C->mul(c, c2)));
                    if (lhs != rhs)
                        return CheckReport::refuted(
                            subject,
                            {{"b", B->render(b)}, {"c", C->render(c)}, {"c'", C->render(c2)}},
                            C->render(lhs) + " != " + C->render(rhs));
                }
        return pass(subject, checked);
    };

    std::vector<CheckReport> parts = {v1(), v2(), v3(), v4()};
    return merge_reports("external join " + ej.descr, parts);
}

std::pair<Element, Element> canonicalize(const ProductTriple& t, const Element& b,
                                         const Element& c) {
    t.bool_alg->check_element(b);
    t.canc->check_element(c);
    return {b, t.join.join_e(bnot(*t.bool_alg, b), c)};
}

std::shared_ptr<Algebra> triple_product(const ProductTriple& t, const Strategy& st) {
    const AlgebraPtr& B = t.bool_alg;
    const AlgebraPtr& C = t.canc;
    if (!B || !C) throw DomainError("triple product: null part");
    if (!B->is_finite())
        throw DomainError("triple products need a finite Boolean part: " + B->name);
    if (!B->certified(Cert::Boolean))
        throw DomainError("triple products need a Boolean-certified left part, " + B->name +
                          " carries no such certificate");
    if (!C->certified(Cert::CancellativeHoop))
        throw DomainError("triple products need a cancellative-certified right part, " +
                          C->name + " carries no such certificate");

    CheckReport joined = verify_external_join(t.join, st);
    if (!joined.ok())
        throw DomainError("external join axioms refuted: " + joined.detail);

    auto tp = std::make_shared<ProductTriple>(t);
    auto alg = std::make_shared<Algebra>();
    alg->id = next_algebra_id();
    const std::uint32_t id = alg->id;
    alg->name = "triple(" + B->name + "," + C->name + ")";
    alg->sig = Signature::full();

    // The two parts stay disjoint by construction: classes carry one
    // B-tagged and one C-tagged component.
    auto cls = [tp, id](const Element& b, const Element& c) {
        auto rep = canonicalize(*tp, b, c);
        return Element(id, Pair{box(rep.first), box(rep.second)});
    };

    alg->f_mul = [tp, cls](const Element& x, const Element& y) {
        const Pair& p = x.as<Pair>();
        const Pair& q = y.as<Pair>();
        return cls(tp->bool_alg->meet(*p.first, *q.first),
                   tp->canc->mul(*p.second, *q.second));
    };
    alg->f_meet = [tp, cls](const Element& x, const Element& y) {
        const Pair& p = x.as<Pair>();
        const Pair& q = y.as<Pair>();
        return cls(tp->bool_alg->meet(*p.first, *q.first),
                   tp->canc->meet(*p.second, *q.second));
    };
    alg->f_imp = [tp, cls](const Element& x, const Element& y) {
        const Pair& p = x.as<Pair>();
        const Pair& q = y.as<Pair>();
        Element nb = bnot(*tp->bool_alg, *p.first);
        return cls(tp->bool_alg->imp(*p.first, *q.first),
                   tp->join.join_e(nb, tp->canc->imp(*p.second, *q.second)));
    };
    alg->f_join = [tp, cls](const Element& x, const Element& y) {
        const AlgebraPtr& Ba = tp->bool_alg;
        const AlgebraPtr& Ca = tp->canc;
        const auto& j = tp->join.join_e;
        const Pair& p = x.as<Pair>();
        const Pair& q = y.as<Pair>();
        const Element &b = *p.first, &b2 = *q.first;
        const Element &c = *p.second, &c2 = *q.second;
        Element nb = bnot(*Ba, b);
        Element nb2 = bnot(*Ba, b2);
        Element t1 = j(Ba->join(nb, nb2), Ca->join(c, c2));
        Element t2 = j(Ba->join(b, nb2), c2);
        Element t3 = j(Ba->join(nb, b2), c);
        return cls(Ba->join(b, b2), Ca->meet(Ca->meet(t1, t2), t3));
    };

    alg->one = cls(B->one, C->one);
    alg->zero = cls(*B->zero, C->one);

    if (C->is_finite()) {
        std::vector<Element> elems;
        std::set<Element> seen;
        for (const Element& c : *C->elements)
            for (const Element& b : *B->elements) {
                Element e = cls(b, c);
                if (seen.insert(e).second) elems.push_back(e);
            }
        alg->elements = std::move(elems);
    } else {
        // One whole layer per sampled hoop element: every Boolean part of a
        // sampled c appears before the next c starts. The raw output may
        // exceed n; sample() truncates, diagrams keep whole layers.
        alg->sampler = [tp, cls](std::size_t n) {
            std::vector<Element> out;
            std::set<Element> seen;
            for (const Element& c : tp->canc->sample(n))
                for (const Element& b : *tp->bool_alg->elements) {
                    Element e = cls(b, c);
                    if (seen.insert(e).second) out.push_back(e);
                }
            return out;
        };
    }

    alg->namer = [tp](const Element& e) {
        const Pair& p = e.as<Pair>();
        return "[" + tp->bool_alg->render(*p.first) + "," + tp->canc->render(*p.second) +
               "]";
    };
    alg->certs = {Cert::BCIRL, Cert::BL, Cert::Product};
    alg->prov = {ProvKind::Triple, B, C, tp};
    return alg;
}

Element triple_class(const Algebra& triple_alg, const Element& b, const Element& c) {
    if (triple_alg.prov.kind != ProvKind::Triple || !triple_alg.prov.triple)
        throw DomainError(triple_alg.name + " is not a triple product");
    auto rep = canonicalize(*triple_alg.prov.triple, b, c);
    return Element(triple_alg.id, Pair{box(rep.first), box(rep.second)});
}

namespace {

void require_product_hoop(const AlgebraPtr& s, const char* what) {
    if (!s) throw DomainError(std::string(what) + ": null algebra");
    if (s->sig.has_zero)
        throw DomainError(std::string(what) + " needs a 0-free algebra, " + s->name +
                          " has a bottom");
    if (!s->certified(Cert::ProductHoop))
        throw DomainError(std::string(what) + " needs a product-hoop certificate on " +
                          s->name);
}

}  // namespace

AlgebraPtr gs(const AlgebraPtr& s, std::size_t cap) {
    require_product_hoop(s, "gs");
    std::vector<Element> pool = s->is_finite() ? *s->elements : s->sample(cap);
    std::vector<Element> values;
    std::set<Element> seen;
    for (const Element& x : pool) {
        Element b = b_of(*s, x);
        if (seen.insert(b).second) values.push_back(b);
    }
    auto out = subalgebra_on(s, values, false, "gs(" + s->name + ")");
    out->certs = {Cert::Hoop, Cert::GeneralizedBoolean, Cert::WajsbergHoop,
                  Cert::GodelHoop, Cert::ProductHoop};
    return out;
}

AlgebraPtr cs(const AlgebraPtr& s) {
    require_product_hoop(s, "cs");
    const CertSet certs = {Cert::Hoop, Cert::WajsbergHoop, Cert::CancellativeHoop,
                           Cert::ProductHoop};
    if (s->is_finite()) {
        std::vector<Element> values;
        std::set<Element> seen;
        for (const Element& x : *s->elements) {
            Element c = c_of(*s, x);
            if (seen.insert(c).second) values.push_back(c);
        }
        auto out = subalgebra_on(s, values, false, "cs(" + s->name + ")");
        out->certs = certs;
        return out;
    }

    auto out = delegating_shell(s, "cs(" + s->name + ")", false);
    const std::uint32_t id = out->id;
    out->sampler = [s, id](std::size_t n) {
        std::vector<Element> res;
        std::set<Element> seen;
        if (n == 0) return res;
        for (const Element& x : s->sample(4 * n + 16)) {
            Element c = c_of(*s, x);
            if (seen.insert(c).second) {
                res.push_back(c.retag(id));
                if (res.size() == n) break;
            }
        }
        return res;
    };
    out->certs = certs;
    out->prov = {ProvKind::Subalgebra, s, nullptr, nullptr};

    // c is a retraction onto its image, so the sampled image must be
    // closed; spot-check before handing the shell out.
    std::vector<Element> probe = out->sample(6);
    for (const Element& x : probe)
        for (const Element& y : probe)
            for (Sym sym : {Sym::Mul, Sym::Imp, Sym::Meet, Sym::Join}) {
                Element r = out->apply(sym, x, y).retag(s->id);
                if (c_of(*s, r) != r)
                    throw DomainError("cs image escapes under " +
                                      std::string(sym_name(sym)) + " at (" +
                                      out->render(x) + "," + out->render(y) + ")");
            }
    return out;
}

ProductClosure product_closure(const AlgebraPtr& s, const Strategy& st) {
    require_product_hoop(s, "product_closure");
    AlgebraPtr g = gs(s);
    AlgebraPtr c = cs(s);
    AlgebraPtr b = mv_closure(g);

    ExternalJoin ej;
    ej.bool_alg = b;
    ej.canc = c;
    const Element one_c = c->one;
    ej.join_e = [one_c](const Element& bo, const Element& co) {
        return bo.as<MvPair>().bit == 1 ? one_c : co;
    };
    ej.descr = "slice join of " + b->name;

    ProductTriple t{b, c, ej};
    auto p = triple_product(t, st);
    p->name = "product_closure(" + s->name + ")";
    AlgebraPtr palg = p;

    const std::uint32_t gid = g->id;
    const std::uint32_t cid = c->id;
    auto embed = [s, b, palg, gid, cid](const Element& x) {
        s->check_element(x);
        Element bx = b_of(*s, x).retag(gid);
        Element cx = c_of(*s, x).retag(cid);
        return triple_class(*palg, mv_embed(*b, bx), cx);
    };

    auto in_image = [](const Element& e) {
        return e.as<Pair>().first->as<MvPair>().bit == 1;
    };
    Filter image = Filter::symbolic(palg, in_image, "embedded copy of " + s->name);
    if (palg->is_finite()) {
        std::vector<Element> members;
        for (const Element& e : *palg->elements)
            if (in_image(e)) members.push_back(e);
        image = Filter::finite(palg, std::move(members));
    }

    return ProductClosure{palg, g, c, b, std::move(t), std::move(embed), std::move(image)};
}

CheckReport verify_main_theorem(const AlgebraPtr& s, const Strategy& st) {
    ProductClosure pc = product_closure(s, st);
    const AlgebraPtr& p = pc.algebra;
    const std::vector<Element> dom = strategy_domain(*s, st);
    const bool exh = st.is_exhaustive();
    std::vector<CheckReport> parts;

    std::vector<Element> img;
    img.reserve(dom.size());
    for (const Element& x : dom) img.push_back(pc.embed(x));

    auto hom = [&]() -> CheckReport {
        const std::string subject = "embedding is a homomorphism";
        std::size_t checked = 1;
        if (pc.embed(s->one) != p->one)
            return CheckReport::refuted(subject, {{"x", s->render(s->one)}},
                                        "unit does not map to [1,1]");
        for (std::size_t i = 0; i < dom.size(); ++i)
            for (std::size_t j2 = 0; j2 < dom.size(); ++j2)
                for (Sym sym : {Sym::Mul, Sym::Imp, Sym::Meet, Sym::Join}) {
                    ++checked;
                    Element lhs = pc.embed(s->apply(sym, dom[i], dom[j2]));
                    Element rhs = p->apply(sym, img[i], img[j2]);
                    if (lhs != rhs)
                        return CheckReport::refuted(
                            subject,
                            {{"x", s->render(dom[i])}, {"y", s->render(dom[j2])}},
                            std::string(sym_name(sym)) + " not preserved: " +
                                p->render(lhs) + " != " + p->render(rhs));
                }
        return exh ? CheckReport::valid(subject, checked)
                   : CheckReport::bounded(subject, st.bound, checked);
    };

    auto injective = [&]() -> CheckReport {
        const std::string subject = "embedding is injective";
        std::size_t checked = 0;
        for (std::size_t i = 0; i < dom.size(); ++i)
            for (std::size_t j2 = i + 1; j2 < dom.size(); ++j2) {
                ++checked;
                if (img[i] == img[j2])
                    return CheckReport::refuted(
                        subject, {{"x", s->render(dom[i])}, {"y", s->render(dom[j2])}},
                        "both map to " + p->render(img[i]));
            }
        return exh ? CheckReport::valid(subject, checked)
                   : CheckReport::bounded(subject, st.bound, checked);
    };

    parts.push_back(hom());
    parts.push_back(injective());
    parts.push_back(validate_filter(pc.image, st));
    parts.push_back(is_maximal_filter_witnessed(p, pc.image, st));
    return merge_reports("main theorem for " + s->name, parts);
}

CheckReport remark_filter_of_double(const AlgebraPtr& a, const Strategy& st) {
    if (!a) throw DomainError("remark: null algebra");
    if (!a->sig.has_zero)
        throw DomainError("the doubling remark needs a bounded algebra: " + a->name);

    AlgebraPtr two = two_element_boolean();
    AlgebraPtr d = direct_product(two, a);
    const Element one2 = two->one;
    auto upper = [one2](const Element& e) { return *e.as<Pair>().first == one2; };

    Filter f = Filter::symbolic(d, upper, "{(1,x)}");
    if (d->is_finite()) {
        std::vector<Element> members;
        for (const Element& e : *d->elements)
            if (upper(e)) members.push_back(e);
        f = Filter::finite(d, std::move(members));
    }

    AlgebraPtr r0 = zero_free_reduct(a);
    const std::uint32_t did = d->id;
    auto map = [a, two, did](const Element& x) {
        return Element(did, Pair{box(two->one), box(x.retag(a->id))});
    };

    std::vector<CheckReport> parts;
    parts.push_back(validate_filter(f, st));

    {
        const std::string subject = "0-free reduct maps onto {(1,x)}";
        const std::vector<Element> dom = strategy_domain(*r0, st);
        const bool exh = st.is_exhaustive();
        std::vector<Element> img;
        img.reserve(dom.size());
        for (const Element& x : dom) img.push_back(map(x));

        CheckReport part = exh ? CheckReport::valid(subject, 0)
                               : CheckReport::bounded(subject, st.bound, 0);
        bool settled = false;
        for (std::size_t i = 0; i < dom.size() && !settled; ++i)
            for (std::size_t j2 = i + 1; j2 < dom.size() && !settled; ++j2) {
                ++part.checked;
                if (img[i] == img[j2]) {
                    part = CheckReport::refuted(
                        subject, {{"x", r0->render(dom[i])}, {"y", r0->render(dom[j2])}},
                        "not injective");
                    settled = true;
                }
            }
        for (std::size_t i = 0; i < dom.size() && !settled; ++i)
            for (std::size_t j2 = 0; j2 < dom.size() && !settled; ++j2)
                for (Sym sym : {Sym::Mul, Sym::Imp, Sym::Meet, Sym::Join}) {
                    ++part.checked;
                    Element lhs = map(r0->apply(sym, dom[i], dom[j2]));
                    Element rhs = d->apply(sym, img[i], img[j2]);
                    if (lhs != rhs) {
                        part = CheckReport::refuted(
                            subject,
                            {{"x", r0->render(dom[i])}, {"y", r0->render(dom[j2])}},
                            std::string(sym_name(sym)) + " not preserved");
                        settled = true;
                        break;
                    }
                }
        if (!settled && exh && f.size() != dom.size())
            part = CheckReport::refuted(subject, {},
                                        "image covers " + std::to_string(dom.size()) +
                                            " of " + std::to_string(f.size()) +
                                            " filter members");
        parts.push_back(std::move(part));
    }

    parts.push_back(is_maximal_filter_witnessed(d, f, st));
    return merge_reports("maximal filter {(1,x)} of 2 x " + a->name, parts);
}

}  // namespace hoopwork
