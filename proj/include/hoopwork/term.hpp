#ifndef HOOPWORK_TERM_HPP
#define HOOPWORK_TERM_HPP

#include <string>
#include <vector>

#include "hoopwork/signature.hpp"

namespace hoopwork {

// Abstract syntax for terms over the residuated-lattice signature.
// Variables are positional (x1, x2, ...). Negation is not a node kind:
// ~t elaborates to imp(t, zero) at parse time.
class Term {
 public:
  enum class Kind { Var, Const, App };

  static Term var(int index);
  static Term constant(Sym s);  // One or Zero
  static Term app(Sym s, std::vector<Term> args);

  Kind kind() const { return kind_; }
  int var_index() const { return var_; }
  Sym sym() const { return sym_; }
  const std::vector<Term>& args() const { return args_; }

  // Largest variable index occurring in the term (0 if none).
  int max_var() const;

  // Throws DomainError if a symbol is absent from `sig`.
  void require_signature(const Signature& sig) const;

  // Concrete syntax, re-parseable. imp(t, zero) prints as ~t.
  std::string str() const;

  bool operator==(const Term& other) const;
  bool operator!=(const Term& other) const { return !(*this == other); }

 private:
  Term() = default;
  Kind kind_ = Kind::Const;
  int var_ = 0;
  Sym sym_ = Sym::One;
  std::vector<Term> args_;

  void print(std::string& out, int level) const;
};

struct Equation {
  Term lhs;
  Term rhs;
  int variables = 0;  // max variable index over both sides

  std::string str() const { return lhs.str() + " = " + rhs.str(); }

  bool operator==(const Equation& other) const {
    return lhs == other.lhs && rhs == other.rhs;
  }
};

}  // namespace hoopwork

#endif
