/* semantics.hpp -- exact language-level decision procedures: lasso
 * membership, breakpoint determinization, containment of deterministic
 * automata, and the state relations (language equivalence, safe-language
 * containment, and their derived views). */

#ifndef GFGCANON_SEMANTICS_HPP_
#define GFGCANON_SEMANTICS_HPP_

#include <vector>

#include "gfgcanon/automaton.hpp"
#include "gfgcanon/exec.hpp"

namespace gfgcanon {

// Precomputed relation tables over the states of one automaton (or of a
// disjoint union, for cross-automaton queries).
struct EquivRelations {
  int n = 0;
  std::vector<char> equiv_tab;  // n*n, L(a^q) = L(a^s)
  std::vector<char> safe_tab;   // n*n, L_safe(a^q) included in L_safe(a^s)

  bool equiv(int q, int s) const { return equiv_tab[q * n + s] != 0; }
  bool safe_contained(int q, int s) const { return safe_tab[q * n + s] != 0; }
  // q is subsafe-equivalent to s: equivalent with contained safe language.
  bool subsafe(int q, int s) const {
    return equiv(q, s) && safe_contained(q, s);
  }
  bool strongly_equiv(int q, int s) const {
    return equiv(q, s) && safe_contained(q, s) && safe_contained(s, q);
  }
};

// Deterministic total co-Buchi automaton obtained from the breakpoint subset
// construction, together with the state representing ({q},{q}) for each
// source state q, so the same construction answers every re-rooted query.
struct BreakpointAutomaton {
  TncwAutomaton dcw;
  std::vector<int> root_of;
};

// True iff prefix . period^omega is in L(a^q). Decided on the product of a
// with the lasso shape: accepted iff some reachable product node lies in a
// cycle that uses only non-alpha transitions.
bool lasso_member(const TncwAutomaton& a, int q, const LassoWord& w);

// Membership from the initial state.
bool lasso_member(const TncwAutomaton& a, const LassoWord& w);

// Breakpoint determinization, seeded from every singleton {q}. Supports up
// to 64 source states.
BreakpointAutomaton determinize_breakpoint(const TncwAutomaton& a);

// True iff L(d1^q) is a subset of L(d2^s), for deterministic total d1, d2
// over the same alphabet. A counterexample exists iff some reachable product
// cycle avoids d1-alpha transitions but contains a d2-alpha one; decided by
// SCC analysis of the product restricted to d1-non-alpha edges.
bool det_contains(const TncwAutomaton& d1, int q, const TncwAutomaton& d2,
                  int s);

// Full relation tables. The equivalence entries are decided through one
// breakpoint determinization re-rooted per state; safe containment through a
// subset-closure reachability check on the non-alpha graphs (which stays
// pairwise on safe-deterministic input). Deterministic under both policies.
EquivRelations compute_relations(const TncwAutomaton& a,
                                 ExecPolicy policy = kDefaultExecPolicy);

// L_safe(a^q) included in L_safe(a^s), decided directly.
bool safe_language_contained(const TncwAutomaton& a, int q, int s);

// Equivalence of initial-state languages, via the disjoint union.
bool language_equiv(const TncwAutomaton& a, const TncwAutomaton& b);

// All sigma-successors of every state are pairwise language-equivalent.
bool is_semantically_deterministic(const TncwAutomaton& a,
                                   const EquivRelations& rel);

}  // namespace gfgcanon

#endif  // GFGCANON_SEMANTICS_HPP_
