#include "hoopwork/catalog.hpp"

#include <algorithm>
#include <deque>

#include "hoopwork/constructions.hpp"
#include "hoopwork/transform.hpp"
#include "hoopwork/triple.hpp"

namespace hoopwork {

namespace {

const CertSet kBooleanCerts = {Cert::BCIRL, Cert::BL,      Cert::MV,
                               Cert::Godel, Cert::Product, Cert::Boolean};

std::string mask_name(std::uint32_t m, std::size_t atoms) {
    if (atoms == 0) return "1";
    const std::uint32_t full = (1u << atoms) - 1;
    if (m == 0) return "0";
    if (m == full) return "1";
    std::string s;
    for (std::size_t i = 0; i < atoms; ++i)
        if (m & (1u << i)) {
            if (!s.empty()) s += "|";
            s += static_cast<char>('a' + i);
        }
    return s;
}

// Vectors of total s in ascending lexicographic order.
void compositions(std::size_t k, std::uint64_t s, std::vector<std::uint64_t>& cur,
                  std::vector<std::vector<std::uint64_t>>& out) {
    if (cur.size() + 1 == k) {
        cur.push_back(s);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (std::uint64_t v = 0; v <= s; ++v) {
        cur.push_back(v);
        compositions(k, s - v, cur, out);
        cur.pop_back();
    }
}

}  // namespace

AlgebraPtr bool_algebra(std::size_t atoms) {
    if (atoms > 10)
        throw DomainError("bool is limited to 10 generators");
    auto alg = std::make_shared<Algebra>();
    alg->id = next_algebra_id();
    alg->name = "bool(" + std::to_string(atoms) + ")";
    alg->sig = Signature::full();
    const std::uint32_t id = alg->id;
    const std::uint32_t full = atoms == 0 ? 0 : (1u << atoms) - 1;
    auto mk = [id](std::uint32_t m) { return Element(id, FinIdx{m}); };

    auto mask = [](const Element& e) { return e.as<FinIdx>().idx; };
    auto conj = [mk, mask](const Element& x, const Element& y) {
        return mk(mask(x) & mask(y));
    };
    alg->f_mul = conj;
    alg->f_meet = conj;
    alg->f_imp = [mk, mask, full](const Element& x, const Element& y) {
        return mk((~mask(x) | mask(y)) & full);
    };
    alg->f_join = [mk, mask](const Element& x, const Element& y) {
        return mk(mask(x) | mask(y));
    };
    alg->one = mk(full);
    alg->zero = mk(0);
    std::vector<Element> elems;
    for (std::uint32_t m = 0; m <= full; ++m) elems.push_back(mk(m));
    alg->elements = std::move(elems);
    alg->namer = [atoms](const Element& e) { return mask_name(e.as<FinIdx>().idx, atoms); };
    alg->certs = kBooleanCerts;
    return alg;
}

AlgebraPtr godel_chain(std::size_t n) {
    if (n < 1 || n > 28)
        throw DomainError("godel_chain needs between 1 and 28 elements");
    auto alg = std::make_shared<Algebra>();
    alg->id = next_algebra_id();
    alg->name = "godel_chain(" + std::to_string(n) + ")";
    alg->sig = Signature::full();
    const std::uint32_t id = alg->id;
    const std::uint32_t top = static_cast<std::uint32_t>(n) - 1;
    auto mk = [id](std::uint32_t i) { return Element(id, FinIdx{i}); };
    auto idx = [](const Element& e) { return e.as<FinIdx>().idx; };

    auto low = [mk, idx](const Element& x, const Element& y) {
        return mk(std::min(idx(x), idx(y)));
    };
    alg->f_mul = low;
    alg->f_meet = low;
    alg->f_imp = [mk, idx, top](const Element& x, const Element& y) {
        return mk(idx(x) <= idx(y) ? top : idx(y));
    };
    alg->f_join = [mk, idx](const Element& x, const Element& y) {
        return mk(std::max(idx(x), idx(y)));
    };
    alg->one = mk(top);
    alg->zero = mk(0);
    std::vector<Element> elems;
    for (std::uint32_t i = 0; i < n; ++i) elems.push_back(mk(i));
    alg->elements = std::move(elems);
    alg->namer = [n, top](const Element& e) -> std::string {
        std::uint32_t i = e.as<FinIdx>().idx;
        if (i == top) return "1";
        if (i == 0 && n >= 2) return "0";
        return std::string(1, static_cast<char>('a' + i - 1));
    };
    alg->certs = {Cert::BCIRL, Cert::BL, Cert::Godel};
    if (n <= 2) alg->certs = kBooleanCerts;
    return alg;
}

AlgebraPtr mv_chain(std::size_t n) {
    if (n < 1 || n > 4096)
        throw DomainError("mv_chain needs between 1 and 4096 steps");
    auto alg = std::make_shared<Algebra>();
    alg->id = next_algebra_id();
    alg->name = "mv_chain(" + std::to_string(n) + ")";
    alg->sig = Signature::full();
    const std::uint32_t id = alg->id;
    const std::int64_t top = static_cast<std::int64_t>(n);
    auto mk = [id](std::int64_t i) {
        return Element(id, FinIdx{static_cast<std::uint32_t>(i)});
    };
    auto idx = [](const Element& e) {
        return static_cast<std::int64_t>(e.as<FinIdx>().idx);
    };

    alg->f_mul = [mk, idx, top](const Element& x, const Element& y) {
        return mk(std::max<std::int64_t>(idx(x) + idx(y) - top, 0));
    };
    alg->f_imp = [mk, idx, top](const Element& x, const Element& y) {
        return mk(std::min<std::int64_t>(top, top - idx(x) + idx(y)));
    };
    alg->f_meet = [mk, idx](const Element& x, const Element& y) {
        return mk(std::min(idx(x), idx(y)));
    };
    alg->f_join = [mk, idx](const Element& x, const Element& y) {
        return mk(std::max(idx(x), idx(y)));
    };
    alg->one = mk(top);
    alg->zero = mk(0);
    std::vector<Element> elems;
    for (std::int64_t i = 0; i <= top; ++i) elems.push_back(mk(i));
    alg->elements = std::move(elems);
    alg->namer = [top](const Element& e) {
        return Rational(static_cast<std::int64_t>(e.as<FinIdx>().idx), top).str();
    };
    alg->certs = {Cert::BCIRL, Cert::BL, Cert::MV};
    if (n == 1) alg->certs = kBooleanCerts;
    return alg;
}

AlgebraPtr nk(std::size_t k) {
    if (k < 1 || k > 4)
        throw DomainError("nk supports between 1 and 4 components");
    auto alg = std::make_shared<Algebra>();
    alg->id = next_algebra_id();
    alg->name = "nk(" + std::to_string(k) + ")";
    alg->sig = Signature::zero_free();
    const std::uint32_t id = alg->id;
    auto mk = [id](std::vector<std::uint64_t> v) {
        return Element(id, NatVec{std::move(v)});
    };

    auto zip = [mk, k](const Element& x, const Element& y, auto f) {
        const auto& a = x.as<NatVec>().v;
        const auto& b = y.as<NatVec>().v;
        std::vector<std::uint64_t> out(k);
        for (std::size_t i = 0; i < k; ++i) out[i] = f(a[i], b[i]);
        return mk(std::move(out));
    };
    alg->f_mul = [zip](const Element& x, const Element& y) {
        return zip(x, y, [](std::uint64_t a, std::uint64_t b) { return a + b; });
    };
    // The unit (all zeros) is the top of the hoop order, so the order is
    // the reverse of the numeric one; meet and join swap accordingly.
    alg->f_imp = [zip](const Element& x, const Element& y) {
        return zip(x, y, [](std::uint64_t a, std::uint64_t b) { return b > a ? b - a : 0; });
    };
    alg->f_meet = [zip](const Element& x, const Element& y) {
        return zip(x, y, [](std::uint64_t a, std::uint64_t b) { return std::max(a, b); });
    };
    alg->f_join = [zip](const Element& x, const Element& y) {
        return zip(x, y, [](std::uint64_t a, std::uint64_t b) { return std::min(a, b); });
    };
    alg->one = mk(std::vector<std::uint64_t>(k, 0));
    alg->sampler = [mk, k](std::size_t n) {
        std::vector<Element> out;
        std::vector<std::uint64_t> cur;
        std::vector<std::vector<std::uint64_t>> level;
        for (std::uint64_t s = 0; out.size() < n; ++s) {
            level.clear();
            compositions(k, s, cur, level);
            for (auto& v : level) {
                if (out.size() == n) break;
                out.push_back(mk(std::move(v)));
            }
        }
        return out;
    };
    alg->namer = [k](const Element& e) {
        const auto& v = e.as<NatVec>().v;
        if (k == 1) {
            if (v[0] == 0) return std::string("1");
            if (v[0] == 1) return std::string("c");
            return "c^" + std::to_string(v[0]);
        }
        std::string s = "(";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(v[i]);
        }
        return s + ")";
    };
    alg->certs = {Cert::Hoop, Cert::WajsbergHoop, Cert::CancellativeHoop,
                  Cert::ProductHoop};
    return alg;
}

AlgebraPtr rat01() {
    auto alg = std::make_shared<Algebra>();
    alg->id = next_algebra_id();
    alg->name = "rat01()";
    alg->sig = Signature::zero_free();
    const std::uint32_t id = alg->id;
    auto mk = [id](Rational q) { return Element(id, PosRat{q}); };
    auto val = [](const Element& e) { return e.as<PosRat>().q; };

    alg->f_mul = [mk, val](const Element& x, const Element& y) {
        return mk(val(x) * val(y));
    };
    alg->f_imp = [mk, val](const Element& x, const Element& y) {
        Rational q = val(y) / val(x);
        return mk(Rational(1) < q ? Rational(1) : q);
    };
    alg->f_meet = [mk, val](const Element& x, const Element& y) {
        return mk(std::min(val(x), val(y)));
    };
    alg->f_join = [mk, val](const Element& x, const Element& y) {
        return mk(std::max(val(x), val(y)));
    };
    alg->one = mk(Rational(1));
    alg->sampler = [mk](std::size_t n) {
        std::vector<Element> out;
        if (n == 0) return out;
        out.push_back(mk(Rational(1)));
        std::deque<std::pair<Rational, Rational>> intervals;
        intervals.emplace_back(Rational(0), Rational(1));
        while (out.size() < n) {
            auto [lo, hi] = intervals.front();
            intervals.pop_front();
            Rational m(lo.num() + hi.num(), lo.den() + hi.den());
            out.push_back(mk(m));
            intervals.emplace_back(lo, m);
            intervals.emplace_back(m, hi);
        }
        return out;
    };
    alg->namer = [](const Element& e) { return e.as<PosRat>().q.str(); };
    alg->certs = {Cert::Hoop, Cert::WajsbergHoop, Cert::CancellativeHoop,
                  Cert::ProductHoop};
    return alg;
}

AlgebraPtr two0() {
    auto alg = std::make_shared<Algebra>();
    alg->id = next_algebra_id();
    alg->name = "two0()";
    alg->sig = Signature::zero_free();
    const std::uint32_t id = alg->id;
    auto mk = [id](std::uint32_t i) { return Element(id, FinIdx{i}); };
    auto idx = [](const Element& e) { return e.as<FinIdx>().idx; };
    auto low = [mk, idx](const Element& x, const Element& y) {
        return mk(std::min(idx(x), idx(y)));
    };
    alg->f_mul = low;
    alg->f_meet = low;
    alg->f_imp = [mk, idx](const Element& x, const Element& y) {
        return mk(idx(x) <= idx(y) ? 1u : idx(y));
    };
    alg->f_join = [mk, idx](const Element& x, const Element& y) {
        return mk(std::max(idx(x), idx(y)));
    };
    alg->one = mk(1);
    alg->elements = std::vector<Element>{mk(0), mk(1)};
    alg->namer = [](const Element& e) {
        return std::string(e.as<FinIdx>().idx == 0 ? "a" : "1");
    };
    alg->certs = {Cert::Hoop, Cert::WajsbergHoop, Cert::GeneralizedBoolean,
                  Cert::GodelHoop, Cert::ProductHoop};
    return alg;
}

AlgebraPtr trivial_hoop() {
    auto alg = std::make_shared<Algebra>();
    alg->id = next_algebra_id();
    alg->name = "trivial()";
    alg->sig = Signature::zero_free();
    const std::uint32_t id = alg->id;
    const Element e(id, FinIdx{0});
    auto constant = [e](const Element&, const Element&) { return e; };
    alg->f_mul = constant;
    alg->f_imp = constant;
    alg->f_meet = constant;
    alg->f_join = constant;
    alg->one = e;
    alg->elements = std::vector<Element>{e};
    alg->namer = [](const Element&) { return std::string("1"); };
    alg->certs = {Cert::Hoop,  Cert::WajsbergHoop,       Cert::CancellativeHoop,
                  Cert::GodelHoop, Cert::GeneralizedBoolean, Cert::ProductHoop};
    return alg;
}

namespace {

void expect_args(const BuilderExpr& e, std::size_t n) {
    if (e.args.size() != n)
        throw DomainError(e.name + " expects " + std::to_string(n) + " argument(s), got " +
                          std::to_string(e.args.size()));
}

std::uint64_t nat_arg(const BuilderExpr& e, std::size_t i) {
    const BuilderExpr& a = e.args[i];
    if (a.kind != BuilderExpr::Kind::Nat)
        throw DomainError(e.name + " expects a number at position " + std::to_string(i + 1));
    return a.nat;
}

}  // namespace

AlgebraPtr build(const BuilderExpr& e, const Strategy& st) {
    if (e.kind == BuilderExpr::Kind::Nat)
        throw DomainError("expected a constructor, got a bare number");
    const std::string& n = e.name;
    if (n == "bool") {
        expect_args(e, 1);
        return bool_algebra(nat_arg(e, 0));
    }
    if (n == "godel_chain") {
        expect_args(e, 1);
        return godel_chain(nat_arg(e, 0));
    }
    if (n == "mv_chain") {
        expect_args(e, 1);
        return mv_chain(nat_arg(e, 0));
    }
    if (n == "nk") {
        expect_args(e, 1);
        return nk(nat_arg(e, 0));
    }
    if (n == "rat01") {
        expect_args(e, 0);
        return rat01();
    }
    if (n == "two0") {
        expect_args(e, 0);
        return two0();
    }
    if (n == "trivial") {
        expect_args(e, 0);
        return trivial_hoop();
    }
    if (n == "lift") {
        expect_args(e, 1);
        return lift(build(e.args[0], st));
    }
    if (n == "reduct0") {
        expect_args(e, 1);
        return zero_free_reduct(build(e.args[0], st));
    }
    if (n == "direct_product") {
        expect_args(e, 2);
        return direct_product(build(e.args[0], st), build(e.args[1], st));
    }
    if (n == "mv_closure") {
        expect_args(e, 1);
        return mv_closure(build(e.args[0], st));
    }
    if (n == "product_closure") {
        expect_args(e, 1);
        return product_closure(build(e.args[0], st), st).algebra;
    }
    throw DomainError("unknown builder: " + n);
}

AlgebraPtr build(const std::string& text, const Strategy& st) {
    return build(parse_builder(text), st);
}

std::vector<std::string> builder_names() {
    return {"bool",    "godel_chain", "mv_chain",       "nk",
            "rat01",   "two0",        "trivial",        "lift",
            "reduct0", "direct_product", "mv_closure",  "product_closure"};
}

}  // namespace hoopwork
