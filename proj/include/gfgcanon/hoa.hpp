/* hoa.hpp -- HOA subset reader/writer and DOT export.
 *
 * The supported HOA subset: header `HOA: v1`, `States:`, `Start:`, `AP:`
 * (one atomic proposition per alphabet letter, referenced positionally),
 * `Acceptance: 1 Fin(0)` / `acc-name: co-Buchi`, and a body of per-state
 * edge lines `[letter-index] dst {0}` for alpha transitions and
 * `[letter-index] dst` for non-alpha ones. State-based acceptance sets,
 * boolean label formulas, and other acceptance conditions are rejected.
 */

#ifndef GFGCANON_HOA_HPP_
#define GFGCANON_HOA_HPP_

#include <stdexcept>
#include <string>

#include "gfgcanon/automaton.hpp"

namespace gfgcanon {

struct HoaParseError : std::runtime_error {
  int line;
  int column;
  HoaParseError(int line, int column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + what),
        line(line),
        column(column) {}
};

// Violation of the subset's semantic rules (unsupported acceptance,
// state-based sets, missing totality, range errors).
struct HoaSemanticError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

TncwAutomaton parse_hoa(const std::string& text);

// Canonical, bit-deterministic output: states ascending, per state edges
// sorted by (letter, non-alpha before alpha, target).
std::string write_hoa(const TncwAutomaton& a);

// Graphviz export; alpha transitions are rendered dashed.
std::string to_dot(const TncwAutomaton& a);

}  // namespace gfgcanon

#endif  // GFGCANON_HOA_HPP_
