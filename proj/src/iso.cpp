#include "hoopwork/iso.hpp"

#include <algorithm>
#include <array>

namespace hoopwork {

Element Isomorphism::apply(const Element& e) const {
  return (*to->elements)[image[from->index_of(e)]];
}

std::vector<std::pair<std::string, std::string>> Isomorphism::rendered() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t i = 0; i < image.size(); ++i)
    out.emplace_back(from->render((*from->elements)[i]),
                     to->render((*to->elements)[image[i]]));
  return out;
}

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

struct Tables {
  std::size_t n = 0;
  std::vector<Sym> ops;
  // per op, row-major n*n index table
  std::vector<std::vector<std::size_t>> table;
  std::size_t one = kNone, zero = kNone;

  explicit Tables(const Algebra& alg) {
    n = alg.size();
    for (Sym s : Signature::binary_syms()) ops.push_back(s);
    for (Sym s : ops) {
      std::vector<std::size_t> t(n * n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          t[i * n + j] = alg.index_of(alg.apply(s, (*alg.elements)[i], (*alg.elements)[j]));
      table.push_back(std::move(t));
    }
    one = alg.index_of(alg.one);
    if (alg.zero) zero = alg.index_of(*alg.zero);
  }

  std::size_t at(std::size_t op, std::size_t i, std::size_t j) const {
    return table[op][i * n + j];
  }
};

// Order profile plus constant flags; iso candidates must agree on it.
struct Profile {
  std::size_t below = 0, above = 0;
  bool idem = false, is_one = false, is_zero = false;
  auto key() const { return std::tie(below, above, idem, is_one, is_zero); }
  bool operator==(const Profile& o) const { return key() == o.key(); }
  bool operator<(const Profile& o) const { return key() < o.key(); }
};

std::vector<Profile> profiles(const Algebra& alg, const Tables& t) {
  std::size_t imp_pos = kNone;
  std::size_t mul_pos = kNone;
  for (std::size_t k = 0; k < t.ops.size(); ++k) {
    if (t.ops[k] == Sym::Imp) imp_pos = k;
    if (t.ops[k] == Sym::Mul) mul_pos = k;
  }
  std::vector<Profile> out(t.n);
  for (std::size_t i = 0; i < t.n; ++i) {
    Profile& p = out[i];
    for (std::size_t j = 0; j < t.n; ++j) {
      if (t.at(imp_pos, i, j) == t.one) ++p.above;
      if (t.at(imp_pos, j, i) == t.one) ++p.below;
    }
    p.idem = t.at(mul_pos, i, i) == i;
    p.is_one = i == t.one;
    p.is_zero = i == t.zero;
  }
  (void)alg;
  return out;
}

}  // namespace

std::optional<Isomorphism> find_isomorphism(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a->sig != b->sig)
    throw DomainError("isomorphism search requires matching signatures: " + a->name +
                      " vs " + b->name);
  if (!a->is_finite() || !b->is_finite())
    throw DomainError("isomorphism search requires finite carriers");
  if (a->size() != b->size()) return std::nullopt;

  Tables ta(*a), tb(*b);
  const std::size_t n = ta.n;
  std::vector<Profile> pa = profiles(*a, ta), pb = profiles(*b, tb);
  {
    std::vector<Profile> sa = pa, sb = pb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }

  std::vector<std::vector<std::size_t>> candidates(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (pa[i] == pb[j]) candidates[i].push_back(j);

  std::vector<std::size_t> map(n, kNone), inv(n, kNone);

  // All op constraints among positions 0..k must hold; results landing
  // past k only require their target image to still be free or its own.
  auto consistent = [&](std::size_t k) {
    for (std::size_t op = 0; op < ta.ops.size(); ++op)
      for (std::size_t i = 0; i <= k; ++i)
        for (std::size_t j = 0; j <= k; ++j) {
          std::size_t r = ta.at(op, i, j);
          std::size_t w = tb.at(op, map[i], map[j]);
          if (r <= k) {
            if (map[r] != w) return false;
          } else if (inv[w] != kNone && inv[w] != r) {
            return false;
          }
        }
    return true;
  };

  std::function<bool(std::size_t)> place = [&](std::size_t k) -> bool {
    if (k == n) return true;
    for (std::size_t v : candidates[k]) {
      if (inv[v] != kNone) continue;
      map[k] = v;
      inv[v] = k;
      if (consistent(k) && place(k + 1)) return true;
      inv[v] = kNone;
      map[k] = kNone;
    }
    return false;
  };

  if (!place(0)) return std::nullopt;
  return Isomorphism{a, b, std::move(map)};
}

CheckReport bounded_iso_check(const AlgebraPtr& a, const AlgebraPtr& b,
                              const std::function<Element(const Element&)>& map,
                              std::size_t bound) {
  if (a->sig != b->sig)
    throw DomainError("map check requires matching signatures: " + a->name + " vs " +
                      b->name);
  const std::string subject = "map " + a->name + " -> " + b->name;
  std::size_t checked = 0;

  auto image = [&](const Element& x) {
    Element y = map(x);
    b->check_element(y);
    return y;
  };

  ++checked;
  if (image(a->one) != b->one)
    return CheckReport::refuted(subject, {{"x", a->render(a->one)}},
                                "unit maps to " + b->render(image(a->one)));
  if (a->sig.has_zero) {
    ++checked;
    if (image(*a->zero) != *b->zero)
      return CheckReport::refuted(subject, {{"x", a->render(*a->zero)}},
                                  "bottom maps to " + b->render(image(*a->zero)));
  }

  std::vector<Element> dom = a->sample(bound);
  std::vector<Element> img;
  img.reserve(dom.size());
  for (const Element& x : dom) img.push_back(image(x));

  for (std::size_t i = 0; i < dom.size(); ++i)
    for (std::size_t j = i + 1; j < dom.size(); ++j) {
      ++checked;
      if (img[i] == img[j])
        return CheckReport::refuted(
            subject, {{"x", a->render(dom[i])}, {"y", a->render(dom[j])}},
            "not injective: both map to " + b->render(img[i]));
    }

  for (Sym s : Signature::binary_syms()) {
    for (std::size_t i = 0; i < dom.size(); ++i)
      for (std::size_t j = 0; j < dom.size(); ++j) {
        ++checked;
        Element lhs = image(a->apply(s, dom[i], dom[j]));
        Element rhs = b->apply(s, img[i], img[j]);
        if (lhs != rhs) {
          CheckReport r = CheckReport::refuted(
              subject, {{"x", a->render(dom[i])}, {"y", a->render(dom[j])}},
              std::string(sym_name(s)) + " not preserved: " + b->render(lhs) +
                  " != " + b->render(rhs));
          r.bound = bound;
          return r;
        }
      }
  }
  return CheckReport::bounded(subject, bound, checked);
}

}  // namespace hoopwork
