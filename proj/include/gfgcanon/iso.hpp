/* iso.hpp -- isomorphism and safe isomorphism of tNCWs, with verified
 * witnesses. A bijection is non-alpha respecting if it induces a bijection
 * between the non-alpha transition sets, and alpha respecting for the alpha
 * analogue. Initial states are not constrained. */

#ifndef GFGCANON_ISO_HPP_
#define GFGCANON_ISO_HPP_

#include <optional>
#include <string>
#include <vector>

#include "gfgcanon/automaton.hpp"

namespace gfgcanon {

struct IsoWitness {
  std::vector<int> map;  // state of a -> state of b
  bool respects_nonalpha = false;
  bool respects_alpha = false;
};

struct IsoResult {
  std::optional<IsoWitness> witness;
  std::string refusal;  // set iff there is no witness

  bool ok() const { return witness.has_value(); }
};

bool verify_nonalpha_respecting(const TncwAutomaton& a, const TncwAutomaton& b,
                                const std::vector<int>& map);
bool verify_alpha_respecting(const TncwAutomaton& a, const TncwAutomaton& b,
                             const std::vector<int>& map);

// A non-alpha-respecting bijection, if one exists. Fast path on
// safe-deterministic safe-minimal inputs: the cross strong-equivalence
// matching pins the only candidate. Fallback: exhaustive backtracking over
// safe-component pairings pruned by size and per-letter degree profiles.
// Every returned witness is re-verified against both transition tables.
IsoResult safe_isomorphic(const TncwAutomaton& a, const TncwAutomaton& b);

// A bijection respecting both transition tables, if one exists.
IsoResult isomorphic(const TncwAutomaton& a, const TncwAutomaton& b);

}  // namespace gfgcanon

#endif  // GFGCANON_ISO_HPP_
