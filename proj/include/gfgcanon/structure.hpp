/* structure.hpp -- graph-level analysis: SCCs, safe components, normalization,
 * and the syntactic niceness predicates. */

#ifndef GFGCANON_STRUCTURE_HPP_
#define GFGCANON_STRUCTURE_HPP_

#include <vector>

#include "gfgcanon/automaton.hpp"

namespace gfgcanon {

struct Digraph {
  int num_vertices = 0;
  std::vector<std::vector<int>> succ;  // succ[v] ascending, duplicate-free

  explicit Digraph(int n = 0) : num_vertices(n), succ(n) {}
  void add_edge(int u, int v);
};

// Maximal strongly connected components, emitted in reverse topological
// order (every edge leaves a later component for an earlier one). Vertices
// inside a component are sorted ascending. Deterministic: Tarjan with
// ascending visit order.
std::vector<std::vector<int>> sccs(const Digraph& g);

// True iff component `index` of `components` has no edge into another
// component of g.
bool is_ergodic_scc(const Digraph& g,
                    const std::vector<std::vector<int>>& components,
                    int index);

// The partition of states into SCCs of the non-alpha graph. Components are
// numbered by ascending least member.
struct SafeDecomposition {
  std::vector<std::vector<int>> components;
  std::vector<int> component_of;
  std::vector<int> sizes;
};

// The non-alpha transition graph of a.
Digraph nonalpha_graph(const TncwAutomaton& a);

SafeDecomposition safe_components(const TncwAutomaton& a);

// Re-marks as alpha every non-alpha transition whose endpoints lie in
// different safe components. Leaves the transition set unchanged; the
// language is unchanged; the result is normal.
TncwAutomaton normalize(const TncwAutomaton& a);

// |delta^nonalpha(q, sigma)| <= 1 for all q, sigma.
bool is_safe_deterministic(const TncwAutomaton& a);

// Per (state, letter) the transitions are all alpha or all non-alpha.
bool is_alpha_homogeneous(const TncwAutomaton& a);

// No non-alpha transition connects distinct safe components.
bool is_normal(const TncwAutomaton& a);

}  // namespace gfgcanon

#endif  // GFGCANON_STRUCTURE_HPP_
