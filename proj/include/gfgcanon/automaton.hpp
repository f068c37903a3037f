/* automaton.hpp -- transition-based co-Buchi automata (tNCW/tDCW) data model. */

#ifndef GFGCANON_AUTOMATON_HPP_
#define GFGCANON_AUTOMATON_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gfgcanon {

enum class Mark : std::uint8_t { NonAlpha = 0, Alpha = 1 };

// Finite ordered alphabet of short printable tokens. The order is canonical
// and is used for all tie-breaking.
struct Alphabet {
  std::vector<std::string> letters;

  int size() const { return static_cast<int>(letters.size()); }
  // Index of a letter token, or -1 if absent.
  int index_of(const std::string& letter) const;
  bool operator==(const Alphabet&) const = default;
};

struct Transition {
  int src = 0;
  int letter = 0;
  int dst = 0;
  Mark mark = Mark::NonAlpha;

  bool operator==(const Transition&) const = default;
  // Canonical order: (src, letter, mark, dst) with non-alpha before alpha.
  bool operator<(const Transition& o) const;
};

// An ultimately periodic word prefix . period^omega, letters as alphabet
// indices. The period must be non-empty.
struct LassoWord {
  std::vector<int> prefix;
  std::vector<int> period;
};

// A total transition-based co-Buchi automaton. States are dense indices
// 0..num_states-1. Immutable by convention: every operation in this library
// returns a fresh value.
struct TncwAutomaton {
  Alphabet alphabet;
  int num_states = 0;
  int initial = 0;
  // Kept sorted in canonical order, duplicate-free. Use canonicalize() after
  // building a transition list by hand.
  std::vector<Transition> transitions;
  // Display label; not part of the value (excluded from equality and HOA).
  std::string name;

  // Sorts and dedupes the transition list into canonical order.
  void canonicalize();

  // Contiguous range of transitions leaving (state, letter).
  std::span<const Transition> successors(int state, int letter) const;
  // Successor states through transitions with the given mark, ascending.
  std::vector<int> successors(int state, int letter, Mark mark) const;
  bool has_transition(int src, int letter, int dst) const;
  bool has_transition(int src, int letter, int dst, Mark mark) const;

  bool is_deterministic() const;

  bool operator==(const TncwAutomaton& o) const {
    return alphabet == o.alphabet && num_states == o.num_states &&
           initial == o.initial && transitions == o.transitions;
  }
};

// Empty iff all TncwAutomaton invariants hold; each violation names the
// state/letter at fault.
std::vector<std::string> validate(const TncwAutomaton& a);

// Throws std::invalid_argument listing the violations.
void require_valid(const TncwAutomaton& a);

// Side-by-side union: states of b shifted by |a|, no transitions between the
// parts, initial taken from a. Returns the union and the offset (= |a|).
// Throws std::invalid_argument on alphabet mismatch.
std::pair<TncwAutomaton, int> disjoint_union(const TncwAutomaton& a,
                                             const TncwAutomaton& b);

// Relabels states by `perm` (state q becomes perm[q]); perm must be a
// bijection on 0..num_states-1.
TncwAutomaton permute_states(const TncwAutomaton& a,
                             const std::vector<int>& perm);

// Restriction to the states reachable from the initial state, renumbered
// ascending by old index. Language is preserved.
TncwAutomaton restrict_to_reachable(const TncwAutomaton& a);

}  // namespace gfgcanon

#endif  // GFGCANON_AUTOMATON_HPP_
