/* canon.hpp -- alpha-saturation canonical forms of minimal GFG-tNCWs. */

#ifndef GFGCANON_CANON_HPP_
#define GFGCANON_CANON_HPP_

#include "gfgcanon/automaton.hpp"
#include "gfgcanon/semantics.hpp"

namespace gfgcanon {

// (q, letter, s) is allowed iff some existing letter-successor of q is
// language-equivalent to s.
bool allowed(const TncwAutomaton& a, const EquivRelations& rel, int q,
             int letter, int s);

// All allowed triples of a.
std::vector<Transition> allowed_set(const TncwAutomaton& a,
                                    const EquivRelations& rel);

// Adds every allowed triple not already present as an alpha transition. The
// non-alpha transition set is untouched; languages and safe languages of all
// states are preserved. Rejects input failing the syntactic niceness checks
// (GFGness of the input is assumed, not re-verified here).
TncwAutomaton saturate_max(const TncwAutomaton& a, const EquivRelations& rel);

// For each (q, letter) with no non-alpha transition, adds all allowed
// triples as alpha transitions; preserves alpha-homogeneity. Rejects
// non-alpha-homogeneous input.
TncwAutomaton saturate_homogeneous(const TncwAutomaton& a,
                                   const EquivRelations& rel);

enum class CanonFlavor { Max, Homogeneous };

// minimize then saturate per flavor. Equivalent inputs yield isomorphic
// outputs.
TncwAutomaton canonical_form(const TncwAutomaton& a, CanonFlavor flavor);

// Every allowed triple is a transition.
bool is_alpha_maximal(const TncwAutomaton& a, const EquivRelations& rel);

// Alpha-homogeneous, and wherever a (q, letter) has no non-alpha transition,
// every allowed triple is present.
bool is_alpha_maximal_up_to_homogeneity(const TncwAutomaton& a,
                                        const EquivRelations& rel);

}  // namespace gfgcanon

#endif  // GFGCANON_CANON_HPP_
