/* oracle.hpp -- independent brute-force and game-based verifiers: GFGness by
 * parity-game solving against a breakpoint monitor, determinization by
 * pruning, exhaustive lasso sweeps, and bounded minimal-tDCW search. */

#ifndef GFGCANON_ORACLE_HPP_
#define GFGCANON_ORACLE_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gfgcanon/automaton.hpp"
#include "gfgcanon/exec.hpp"
#include "gfgcanon/semantics.hpp"

namespace gfgcanon {

struct BoundExceededError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A winning letter-game strategy: memory is a (candidate state, monitor
// state) pair; each move is a transition of the candidate automaton.
struct GfgStrategy {
  std::vector<std::pair<int, int>> positions;
  std::vector<std::vector<Transition>> moves;  // [position][letter]
  int initial_position = -1;
};

struct GfgResult {
  std::optional<GfgStrategy> strategy;
  std::string refusal;

  bool ok() const { return strategy.has_value(); }
};

// Solves the letter game of a against its breakpoint monitor as a 3-priority
// max-parity game (monitor-alpha step: 2; candidate-alpha without
// monitor-alpha: 1; else 0). Returns a winning strategy iff a is GFG; the
// strategy is replayed on 200 random lassos as a sanity check.
GfgResult gfg_verify(const TncwAutomaton& a);

// Per-state GFGness (of a re-rooted at each state), from the same game.
std::vector<char> gfg_states(const TncwAutomaton& a);

// First (in canonical enumeration order) deterministic pruning of a that
// keeps the language, or nullopt. Throws BoundExceededError when the number
// of prunings exceeds max_enumeration.
std::optional<TncwAutomaton> dbp_check(
    const TncwAutomaton& a, std::int64_t max_enumeration = 1'000'000,
    ExecPolicy policy = kDefaultExecPolicy);

// Exhaustive sweep of all lassos with |prefix| <= max_u, 1 <= |period| <=
// max_v; returns the first lasso the two automata disagree on, or nullopt.
std::optional<LassoWord> lasso_equiv_bounded(
    const TncwAutomaton& a, const TncwAutomaton& b, int max_u, int max_v,
    ExecPolicy policy = kDefaultExecPolicy);

// Smallest equivalent tDCW with at most max_states states, searching total
// deterministic transition skeletons (up to isomorphism) times alpha
// subsets, screened by lasso fingerprints and confirmed by the product
// check. Throws BoundExceededError when a skeleton space exceeds
// max_enumeration.
std::optional<TncwAutomaton> min_tdcw_search_bounded(
    const TncwAutomaton& a, int max_states,
    std::int64_t max_enumeration = 1'000'000,
    ExecPolicy policy = kDefaultExecPolicy);

}  // namespace gfgcanon

#endif  // GFGCANON_ORACLE_HPP_
