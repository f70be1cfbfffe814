#include "hoopwork/constructions.hpp"

#include "hoopwork/parser.hpp"

#include <utility>

namespace hoopwork {

namespace {

bool is_bottom(const Element& e) { return e.as<Lifted>().inner == nullptr; }

}  // namespace

AlgebraPtr lift(const AlgebraPtr& h) {
    if (!h) throw DomainError("lift: null algebra");
    if (h->sig.has_zero)
        throw DomainError("lift requires a 0-free algebra, got " + h->name);

    auto alg = std::make_shared<Algebra>();
    const std::uint32_t id = next_algebra_id();
    alg->id = id;
    alg->name = "lift(" + h->name + ")";
    alg->sig = Signature::full();

    auto wrap = [id](const Element& e) { return Element(id, Lifted{box(e)}); };
    const Element bottom(id, Lifted{nullptr});
    const Element top = wrap(h->one);

    alg->f_mul = [h, id, wrap, bottom](const Element& x, const Element& y) {
        if (is_bottom(x) || is_bottom(y)) return bottom;
        return wrap(h->mul(*x.as<Lifted>().inner, *y.as<Lifted>().inner));
    };
    alg->f_imp = [h, id, wrap, bottom, top](const Element& x, const Element& y) {
        if (is_bottom(x)) return top;
        if (is_bottom(y)) return bottom;
        return wrap(h->imp(*x.as<Lifted>().inner, *y.as<Lifted>().inner));
    };
    alg->f_meet = [h, id, wrap, bottom](const Element& x, const Element& y) {
        if (is_bottom(x) || is_bottom(y)) return bottom;
        return wrap(h->meet(*x.as<Lifted>().inner, *y.as<Lifted>().inner));
    };
    alg->f_join = [h, id, wrap](const Element& x, const Element& y) {
        if (is_bottom(x)) return y;
        if (is_bottom(y)) return x;
        return wrap(h->join(*x.as<Lifted>().inner, *y.as<Lifted>().inner));
    };

    alg->one = top;
    alg->zero = bottom;

    if (h->is_finite()) {
        std::vector<Element> elems;
        elems.reserve(h->size() + 1);
        elems.push_back(bottom);
        for (const Element& e : *h->elements) elems.push_back(wrap(e));
        alg->elements = std::move(elems);
    } else {
        alg->sampler = [h, wrap, bottom](std::size_t n) {
            std::vector<Element> out;
            if (n == 0) return out;
            out.reserve(n);
            out.push_back(bottom);
            for (const Element& e : h->sample(n - 1)) out.push_back(wrap(e));
            return out;
        };
    }

    alg->namer = [h](const Element& e) {
        const Lifted& l = e.as<Lifted>();
        return l.inner ? h->render(*l.inner) : std::string("0");
    };

    if (h->certified(Cert::Hoop)) alg->certs.insert(Cert::BCIRL);
    if (h->certified(Cert::GodelHoop) || h->certified(Cert::GeneralizedBoolean)) {
        alg->certs.insert(Cert::BCIRL);
        alg->certs.insert(Cert::BL);
        alg->certs.insert(Cert::Godel);
    }
    if (h->certified(Cert::CancellativeHoop)) {
        alg->certs.insert(Cert::BCIRL);
        alg->certs.insert(Cert::BL);
        alg->certs.insert(Cert::Product);
    }

    alg->prov.kind = ProvKind::Lift;
    alg->prov.a = h;
    return alg;
}

Element c_of(const Algebra& alg, const Element& x) {
    return alg.imp(x, alg.mul(x, x));
}

Element b_of(const Algebra& alg, const Element& x) {
    return alg.imp(c_of(alg, x), x);
}

AlgebraPtr mv_closure(const AlgebraPtr& a) {
    if (!a) throw DomainError("mv_closure: null algebra");
    if (a->sig.has_zero)
        throw DomainError("mv_closure requires a 0-free algebra, got " + a->name);
    if (!a->certified(Cert::WajsbergHoop))
        throw DomainError("mv_closure requires a certified Wajsberg hoop, " +
                          a->name + " carries no such certificate");

    auto alg = std::make_shared<Algebra>();
    const std::uint32_t id = next_algebra_id();
    alg->id = id;
    alg->name = "mv_closure(" + a->name + ")";
    alg->sig = Signature::full();

    auto mk = [id](const Element& inner, int bit) {
        return Element(id, MvPair{box(inner), bit});
    };
    // a (+) b = (a -> ab) -> b, the truncated sum of the mirror slice.
    auto plus = [a](const Element& u, const Element& v) {
        return a->imp(a->imp(u, a->mul(u, v)), v);
    };

    alg->f_mul = [a, mk, plus](const Element& x, const Element& y) {
        const MvPair& p = x.as<MvPair>();
        const MvPair& q = y.as<MvPair>();
        const Element& u = *p.inner;
        const Element& v = *q.inner;
        if (p.bit == 1 && q.bit == 1) return mk(a->mul(u, v), 1);
        if (p.bit == 1 && q.bit == 0) return mk(a->imp(u, v), 0);
        if (p.bit == 0 && q.bit == 1) return mk(a->imp(v, u), 0);
        return mk(plus(u, v), 0);
    };
    alg->f_imp = [a, mk, plus](const Element& x, const Element& y) {
        const MvPair& p = x.as<MvPair>();
        const MvPair& q = y.as<MvPair>();
        const Element& u = *p.inner;
        const Element& v = *q.inner;
        if (p.bit == 1 && q.bit == 1) return mk(a->imp(u, v), 1);
        if (p.bit == 1 && q.bit == 0) return mk(a->mul(u, v), 0);
        if (p.bit == 0 && q.bit == 1) return mk(plus(u, v), 1);
        return mk(a->imp(v, u), 1);
    };
    // The lattice terms of the divisible prelinear setting. The lambdas
    // live inside the algebra they point back to, so a raw pointer is safe.
    alg->f_meet = [self = alg.get()](const Element& x, const Element& y) {
        return self->f_mul(x, self->f_imp(x, y));
    };
    alg->f_join = [self = alg.get()](const Element& x, const Element& y) {
        Element u = self->f_imp(self->f_imp(x, y), y);
        Element v = self->f_imp(self->f_imp(y, x), x);
        return self->f_meet(u, v);
    };

    alg->one = mk(a->one, 1);
    alg->zero = mk(a->one, 0);

    if (a->is_finite()) {
        std::vector<Element> elems;
        elems.reserve(2 * a->size());
        for (const Element& e : *a->elements) elems.push_back(mk(e, 1));
        for (const Element& e : *a->elements) elems.push_back(mk(e, 0));
        alg->elements = std::move(elems);
    } else {
        alg->sampler = [a, mk](std::size_t n) {
            std::vector<Element> out;
            out.reserve(n);
            for (const Element& e : a->sample((n + 1) / 2)) {
                if (out.size() < n) out.push_back(mk(e, 1));
                if (out.size() < n) out.push_back(mk(e, 0));
            }
            return out;
        };
    }

    alg->namer = [a](const Element& e) {
        const MvPair& p = e.as<MvPair>();
        std::string base = a->render(*p.inner);
        return p.bit == 1 ? base : "~" + base;
    };

    alg->certs = {Cert::BCIRL, Cert::BL, Cert::MV};
    if (a->certified(Cert::GeneralizedBoolean)) {
        alg->certs.insert(Cert::Boolean);
        alg->certs.insert(Cert::Godel);
        alg->certs.insert(Cert::Product);
    }

    alg->prov.kind = ProvKind::MvClosure;
    alg->prov.a = a;
    return alg;
}

Element mv_embed(const Algebra& mv_alg, const Element& x) {
    if (mv_alg.prov.kind != ProvKind::MvClosure)
        throw DomainError("mv_embed: " + mv_alg.name + " is not an mv_closure");
    mv_alg.prov.a->check_element(x);
    return Element(mv_alg.id, MvPair{box(x), 1});
}

Filter mv_slice_filter(const AlgebraPtr& mv_alg) {
    if (!mv_alg || mv_alg->prov.kind != ProvKind::MvClosure)
        throw DomainError("mv_slice_filter: input is not an mv_closure");
    const AlgebraPtr inner = mv_alg->prov.a;
    if (inner->is_finite()) {
        std::vector<Element> members;
        members.reserve(inner->size());
        for (const Element& e : *inner->elements)
            members.push_back(mv_embed(*mv_alg, e));
        return Filter::finite(mv_alg, members);
    }
    return Filter::symbolic(
        mv_alg,
        [](const Element& e) { return e.as<MvPair>().bit == 1; },
        "slice {(a,1)} of " + mv_alg->name);
}

CheckReport verify_decomposition(const AlgebraPtr& alg, const Strategy& st) {
    if (!alg) throw DomainError("verify_decomposition: null algebra");
    if (!alg->sig.has_zero)
        throw DomainError("verify_decomposition needs a bounded algebra, " +
                          alg->name + " is 0-free");

    struct Item {
        const char* subject;
        const char* text;
    };
    const Item items[] = {
        {"x = b(x)*c(x)", "((x1 -> x1*x1) -> x1) * (x1 -> x1*x1) = x1"},
        {"x = b(x) /\\ c(x)", "((x1 -> x1*x1) -> x1) /\\ (x1 -> x1*x1) = x1"},
        {"~~x = b(x)", "~~x1 = (x1 -> x1*x1) -> x1"},
        {"x \\/ ~x = c(x)", "x1 \\/ ~x1 = x1 -> x1*x1"},
    };

    std::vector<CheckReport> parts;
    for (const Item& item : items) {
        Equation eq = parse_equation(item.text, alg->sig);
        CheckReport r = check_equation(*alg, eq, st);
        r.subject = item.subject;
        parts.push_back(std::move(r));
    }
    return merge_reports("decomposition of " + alg->name, parts);
}

}  // namespace hoopwork
