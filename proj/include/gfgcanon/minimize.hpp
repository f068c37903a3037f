/* minimize.hpp -- two-step minimization of nice GFG-tNCWs: frontier-based
 * safe centralization followed by the quotient under strong equivalence. */

#ifndef GFGCANON_MINIMIZE_HPP_
#define GFGCANON_MINIMIZE_HPP_

#include <stdexcept>
#include <vector>

#include "gfgcanon/automaton.hpp"
#include "gfgcanon/semantics.hpp"
#include "gfgcanon/structure.hpp"

namespace gfgcanon {

// Input outside the accepted class (deterministic, or safe-deterministic +
// semantically deterministic with verified GFGness). Names the failed
// property.
struct NiceifyError : std::runtime_error {
  std::string property;
  explicit NiceifyError(const std::string& property)
      : std::runtime_error("input cannot be made nice: fails " + property),
        property(property) {}
};

struct FrontierPlan {
  SafeDecomposition decomposition;
  // h[i * k + j]: some state of component i is subsafe-equivalent to some
  // state of component j. Transitive.
  std::vector<char> h;
  // One component per ergodic SCC of the H graph; ascending.
  std::vector<int> frontier;
  // Initial state of the frontier automaton (an index of the source
  // automaton): the original initial if retained, otherwise the least state
  // it is subsafe-equivalent to inside the frontier.
  int chosen_initial = -1;

  bool H(int i, int j) const {
    return h[i * static_cast<int>(decomposition.components.size()) + j] != 0;
  }
};

struct QuotientMap {
  std::vector<int> class_of;        // state -> class index
  std::vector<int> representative;  // class -> least member
};

// Reachable restriction plus normalization, with the niceness pre-condition
// checked: accepts deterministic automata as-is, and nondeterministic ones
// only when safe-deterministic, semantically deterministic, and verified
// GFG state by state. Language is preserved.
TncwAutomaton niceify(const TncwAutomaton& a);

// The subsafe order lifted to safe components. Throws if the computed table
// is not transitive (which means the input was not nice).
FrontierPlan compute_H(const TncwAutomaton& a, const EquivRelations& rel);

// Completes the plan: one component per ergodic H-SCC (the one holding the
// globally least state), plus the initial-state choice.
FrontierPlan choose_frontier(const TncwAutomaton& a, FrontierPlan plan,
                             const EquivRelations& rel);

// Step 1: the automaton over the frontier components. Non-alpha transitions
// are inherited; where a state has no sigma non-alpha successor, alpha
// transitions go to every retained state equivalent (in a) to one of its
// sigma alpha-successors. The result is total, alpha-homogeneous and
// safe-centralized.
TncwAutomaton build_frontier_automaton(const TncwAutomaton& a,
                                       const FrontierPlan& plan,
                                       const EquivRelations& rel);

// Step 2 classes: strong-equivalence classes of b, numbered by least member.
QuotientMap quotient_map(const TncwAutomaton& b, const EquivRelations& rel);

// Step 2: merge strongly-equivalent states. Requires alpha-homogeneous
// input; the inherited mark is then well defined.
TncwAutomaton quotient(const TncwAutomaton& b, const EquivRelations& rel);

// niceify, Step 1 with the canonical frontier, Step 2. The result is a
// minimal GFG-tNCW: nice, safe-centralized, safe-minimal, alpha-homogeneous.
TncwAutomaton minimize(const TncwAutomaton& a);

// Subsafe-equivalent states always share a safe component.
bool is_safe_centralized(const TncwAutomaton& a, const EquivRelations& rel);

// No two distinct strongly-equivalent states.
bool is_safe_minimal(const TncwAutomaton& a, const EquivRelations& rel);

}  // namespace gfgcanon

#endif  // GFGCANON_MINIMIZE_HPP_
