#include "hoopwork/hasse.hpp"

#include <sstream>
#include <vector>

namespace hoopwork {

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::string hasse_dot(const Algebra& alg, const Strategy& st) {
  std::vector<Element> nodes;
  bool truncated = false;
  if (alg.is_finite()) {
    nodes = *alg.elements;
  } else {
    if (!alg.sampler) throw DomainError("cannot render " + alg.name + ": no sampler");
    // The raw sampler output, not sample(): samplers may finish a layer
    // past the bound, and a whole layer draws better than a cut one.
    nodes = alg.sampler(st.bound);
    truncated = true;
  }
  const std::size_t n = nodes.size();

  auto leq = [&](std::size_t i, std::size_t j) {
    return alg.meet(nodes[i], nodes[j]) == nodes[i];
  };
  std::vector<std::vector<bool>> below(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && leq(i, j)) below[i][j] = true;

  std::ostringstream out;
  out << "// hoopwork hasse diagram: " << alg.name << "\n";
  if (truncated) out << "// truncated at bound " << st.bound << "\n";
  out << "digraph hasse {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=plaintext];\n";
  for (std::size_t i = 0; i < n; ++i)
    out << "  n" << i << " [label=\"" << dot_escape(alg.render(nodes[i])) << "\"];\n";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!below[i][j]) continue;
      bool covering = true;
      for (std::size_t k = 0; k < n && covering; ++k)
        if (below[i][k] && below[k][j]) covering = false;
      if (covering) out << "  n" << i << " -> n" << j << ";\n";
    }
  out << "}\n";
  return out.str();
}

}  // namespace hoopwork
