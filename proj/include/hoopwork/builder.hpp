#ifndef HOOPWORK_BUILDER_HPP
#define HOOPWORK_BUILDER_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hoopwork {

// Abstract form of the algebra-builder language:
//   expr := NAME "(" (arg ("," arg)*)? ")" | NAT
// Arguments are expressions or naturals. Constructor names and arities
// are checked by catalog::build, not here.
struct BuilderExpr {
  enum class Kind { Call, Nat };

  Kind kind = Kind::Call;
  std::string name;                // Call
  std::vector<BuilderExpr> args;   // Call
  std::uint64_t nat = 0;           // Nat

  std::string str() const;
};

BuilderExpr parse_builder(std::string_view src);

}  // namespace hoopwork

#endif
