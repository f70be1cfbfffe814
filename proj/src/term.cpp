#include "hoopwork/term.hpp"

#include <algorithm>

#include "hoopwork/errors.hpp"

namespace hoopwork {

Term Term::var(int index) {
  if (index < 1) throw DomainError("variable index must be >= 1");
  Term t;
  t.kind_ = Kind::Var;
  t.var_ = index;
  return t;
}

Term Term::constant(Sym s) {
  if (sym_arity(s) != 0) throw DomainError("constant term needs a 0-ary symbol");
  Term t;
  t.kind_ = Kind::Const;
  t.sym_ = s;
  return t;
}

Term Term::app(Sym s, std::vector<Term> args) {
  if (static_cast<int>(args.size()) != sym_arity(s))
    throw DomainError(std::string("arity mismatch for ") + sym_name(s));
  Term t;
  t.kind_ = Kind::App;
  t.sym_ = s;
  t.args_ = std::move(args);
  return t;
}

int Term::max_var() const {
  switch (kind_) {
    case Kind::Var: return var_;
    case Kind::Const: return 0;
    case Kind::App: {
      int m = 0;
      for (const Term& a : args_) m = std::max(m, a.max_var());
      return m;
    }
  }
  return 0;
}

void Term::require_signature(const Signature& sig) const {
  if (kind_ == Kind::Var) return;
  if (!sig.contains(sym_))
    throw DomainError(std::string("symbol '") + sym_name(sym_) +
                      "' is absent from the signature");
  for (const Term& a : args_) a.require_signature(sig);
}

bool Term::operator==(const Term& other) const {
  if (kind_ != other.kind_) return false;
  switch (kind_) {
    case Kind::Var: return var_ == other.var_;
    case Kind::Const: return sym_ == other.sym_;
    case Kind::App:
      return sym_ == other.sym_ && args_ == other.args_;
  }
  return false;
}

namespace {
// Binding strength, loosest first. Unary ~ binds tightest.
constexpr int kLevelImp = 0;
constexpr int kLevelJoin = 1;
constexpr int kLevelMeet = 2;
constexpr int kLevelMul = 3;
constexpr int kLevelUnary = 4;

int sym_level(Sym s) {
  switch (s) {
    case Sym::Imp: return kLevelImp;
    case Sym::Join: return kLevelJoin;
    case Sym::Meet: return kLevelMeet;
    case Sym::Mul: return kLevelMul;
    default: return kLevelUnary + 1;
  }
}
}  // namespace

void Term::print(std::string& out, int level) const {
  switch (kind_) {
    case Kind::Var:
      out += "x" + std::to_string(var_);
      return;
    case Kind::Const:
      out += (sym_ == Sym::Zero) ? "0" : "1";
      return;
    case Kind::App:
      break;
  }
  // imp(t, 0) renders as the negation shorthand.
  if (sym_ == Sym::Imp && args_[1].kind_ == Kind::Const &&
      args_[1].sym_ == Sym::Zero) {
    out += "~";
    args_[0].print(out, kLevelUnary);
    return;
  }
  int own = sym_level(sym_);
  bool paren = own < level;
  if (paren) out += "(";
  const char* infix = nullptr;
  switch (sym_) {
    case Sym::Mul: infix = " * "; break;
    case Sym::Imp: infix = " -> "; break;
    case Sym::Meet: infix = " /\\ "; break;
    case Sym::Join: infix = " \\/ "; break;
    default: break;
  }
  if (sym_ == Sym::Imp) {
    // Right-associative: the left argument needs a strictly tighter context.
    args_[0].print(out, own + 1);
    out += infix;
    args_[1].print(out, own);
  } else {
    // Left-associative chains print without inner parens.
    args_[0].print(out, own);
    out += infix;
    args_[1].print(out, own + 1);
  }
  if (paren) out += ")";
}

std::string Term::str() const {
  std::string out;
  print(out, kLevelImp);
  return out;
}

}  // namespace hoopwork
