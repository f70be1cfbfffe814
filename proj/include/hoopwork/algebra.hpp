#ifndef HOOPWORK_ALGEBRA_HPP
#define HOOPWORK_ALGEBRA_HPP

#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hoopwork/element.hpp"
#include "hoopwork/errors.hpp"
#include "hoopwork/signature.hpp"
#include "hoopwork/term.hpp"

namespace hoopwork {

struct Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

struct ProductTriple;  // constructions; carried as provenance only

// Class and certification labels. Certificates record what an algebra is
// known to be by construction; classify() establishes labels empirically.
// ProductHoop and GodelHoop exist only as certificates: the corresponding
// classes have no equational axiomatization exposed here.
enum class Cert {
  BCIRL,
  BL,
  MV,
  Godel,
  Product,
  Boolean,
  Hoop,
  WajsbergHoop,
  CancellativeHoop,
  GeneralizedBoolean,
  ProductHoop,
  GodelHoop,
};

const char* cert_name(Cert c);
std::optional<Cert> cert_from_name(const std::string& name);

using CertSet = std::set<Cert>;

enum class ProvKind {
  None,
  Lift,
  ZeroFreeReduct,
  MvClosure,
  Triple,
  DirectProduct,
  Subalgebra,
  Quotient,
};

struct Provenance {
  ProvKind kind = ProvKind::None;
  AlgebraPtr a;  // inner / left / parent
  AlgebraPtr b;  // right factor for direct products
  std::shared_ptr<const ProductTriple> triple;
};

// A carrier plus operation implementations. Finite carriers enumerate
// exhaustively; symbolic ones expose a deterministic prefix sampler.
// Instances are immutable after construction and shared by pointer.
struct Algebra {
  std::uint32_t id = 0;
  std::string name;
  Signature sig;

  std::function<Element(const Element&, const Element&)> f_mul, f_imp, f_meet, f_join;
  Element one;
  std::optional<Element> zero;

  // Exhaustive enumeration when finite.
  std::optional<std::vector<Element>> elements;
  // Deterministic sampler; for finite algebras the enumeration prefix.
  std::function<std::vector<Element>(std::size_t)> sampler;

  std::function<std::string(const Element&)> namer;

  CertSet certs;
  Provenance prov;

  bool is_finite() const { return elements.has_value(); }
  std::size_t size() const;
  bool certified(Cert c) const { return certs.count(c) > 0; }

  void check_element(const Element& e) const;

  Element mul(const Element& a, const Element& b) const;
  Element imp(const Element& a, const Element& b) const;
  Element meet(const Element& a, const Element& b) const;
  Element join(const Element& a, const Element& b) const;
  Element apply(Sym s, const Element& a, const Element& b) const;
  Element constant(Sym s) const;

  std::vector<Element> sample(std::size_t n) const;
  std::string render(const Element& e) const { return namer(e); }

  // Position of e in the enumeration (finite only).
  std::size_t index_of(const Element& e) const;
};

// Fresh unique carrier tag.
std::uint32_t next_algebra_id();

// --- checking ---------------------------------------------------------

struct Strategy {
  enum class Kind { Exhaustive, Bounded };
  Kind kind = Kind::Exhaustive;
  std::size_t bound = 8;

  static Strategy exhaustive() { return {Kind::Exhaustive, 0}; }
  static Strategy bounded(std::size_t n) { return {Kind::Bounded, n}; }
  bool is_exhaustive() const { return kind == Kind::Exhaustive; }
  std::string str() const;
};

// The domain a strategy quantifies over: the full enumeration or the
// sampler prefix. Exhaustive on a symbolic carrier is a DomainError.
std::vector<Element> strategy_domain(const Algebra& alg, const Strategy& st);

enum class CheckStatus { Valid, Refuted, BoundedValid };

const char* check_status_name(CheckStatus s);

struct CheckReport {
  CheckStatus status = CheckStatus::Valid;
  std::string subject;  // equation text, axiom, or clause name
  // Rendered witness assignment, empty unless refuted.
  std::vector<std::pair<std::string, std::string>> witness;
  std::string detail;  // e.g. the two differing values
  std::optional<std::size_t> bound;
  std::size_t checked = 0;  // tuples examined

  // Raw refutation data for re-evaluation, when the witness lives in a
  // single carrier.
  std::vector<Element> env;
  std::optional<Equation> eq;

  bool ok() const { return status != CheckStatus::Refuted; }

  static CheckReport valid(std::string subject, std::size_t checked);
  static CheckReport bounded(std::string subject, std::size_t bound, std::size_t checked);
  static CheckReport refuted(std::string subject,
                             std::vector<std::pair<std::string, std::string>> witness,
                             std::string detail);
};

// First refutation wins; otherwise BoundedValid dominates Valid.
CheckReport merge_reports(const std::string& subject, const std::vector<CheckReport>& parts);

// --- operations -------------------------------------------------------

// Homomorphic evaluation of t with env[i-1] bound to variable xi.
Element eval(const Algebra& alg, const Term& t, const std::vector<Element>& env);

// Order via the residual: a <= b iff a -> b = 1.
bool leq(const Algebra& alg, const Element& a, const Element& b);

// Quantifies the equation over tuples from the strategy domain, in
// lexicographic enumeration order; the first counterexample is reported.
CheckReport check_equation(const Algebra& alg, const Equation& eq, const Strategy& st);

// The residuation law, x*y <= z iff y <= x -> z, over all strategy triples.
CheckReport check_residuation(const Algebra& alg, const Strategy& st);

// The cancellation quasi-identity x*z = y*z => x = y, by triple enumeration.
CheckReport check_cancellation(const Algebra& alg, const Strategy& st);

}  // namespace hoopwork

#endif
