#ifndef HOOPWORK_SIGNATURE_HPP
#define HOOPWORK_SIGNATURE_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace hoopwork {

// The fixed symbol set of bounded commutative residuated lattices.
// A concrete signature either carries all six symbols or drops zero.
enum class Sym { Mul, Imp, Meet, Join, One, Zero };

inline const char* sym_name(Sym s) {
  switch (s) {
    case Sym::Mul: return "mul";
    case Sym::Imp: return "imp";
    case Sym::Meet: return "meet";
    case Sym::Join: return "join";
    case Sym::One: return "one";
    case Sym::Zero: return "zero";
  }
  return "?";
}

inline int sym_arity(Sym s) {
  return (s == Sym::One || s == Sym::Zero) ? 0 : 2;
}

struct Signature {
  bool has_zero = true;

  bool contains(Sym s) const { return s != Sym::Zero || has_zero; }

  // Present symbols with arities; "one" is always present.
  std::vector<std::pair<std::string, int>> symbols() const {
    std::vector<std::pair<std::string, int>> out;
    for (Sym s : {Sym::Mul, Sym::Imp, Sym::Meet, Sym::Join, Sym::One, Sym::Zero})
      if (contains(s)) out.emplace_back(sym_name(s), sym_arity(s));
    return out;
  }

  // The binary symbols; identical for both signatures.
  static const std::array<Sym, 4>& binary_syms() {
    static const std::array<Sym, 4> ops{Sym::Mul, Sym::Imp, Sym::Meet, Sym::Join};
    return ops;
  }

  static Signature full() { return Signature{true}; }
  static Signature zero_free() { return Signature{false}; }

  friend bool operator==(const Signature& a, const Signature& b) {
    return a.has_zero == b.has_zero;
  }
  friend bool operator!=(const Signature& a, const Signature& b) { return !(a == b); }
};

}  // namespace hoopwork

#endif
