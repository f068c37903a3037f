#include "gfgcanon/automaton.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace gfgcanon {

int Alphabet::index_of(const std::string& letter) const {
  for (int i = 0; i < size(); ++i)
    if (letters[i] == letter) return i;
  return -1;
}

bool Transition::operator<(const Transition& o) const {
  return std::tie(src, letter, mark, dst) <
         std::tie(o.src, o.letter, o.mark, o.dst);
}

void TncwAutomaton::canonicalize() {
  std::sort(transitions.begin(), transitions.end());
  transitions.erase(std::unique(transitions.begin(), transitions.end()),
                    transitions.end());
}

std::span<const Transition> TncwAutomaton::successors(int state,
                                                      int letter) const {
  auto lo = std::lower_bound(
      transitions.begin(), transitions.end(), std::pair{state, letter},
      [](const Transition& t, const std::pair<int, int>& key) {
        return std::tie(t.src, t.letter) < std::tie(key.first, key.second);
      });
  auto hi = lo;
  while (hi != transitions.end() && hi->src == state && hi->letter == letter)
    ++hi;
  return {lo, hi};
}

std::vector<int> TncwAutomaton::successors(int state, int letter,
                                           Mark mark) const {
  std::vector<int> out;
  for (const Transition& t : successors(state, letter))
    if (t.mark == mark) out.push_back(t.dst);
  std::sort(out.begin(), out.end());
  return out;
}

bool TncwAutomaton::has_transition(int src, int letter, int dst) const {
  for (const Transition& t : successors(src, letter))
    if (t.dst == dst) return true;
  return false;
}

bool TncwAutomaton::has_transition(int src, int letter, int dst,
                                   Mark mark) const {
  for (const Transition& t : successors(src, letter))
    if (t.dst == dst && t.mark == mark) return true;
  return false;
}

bool TncwAutomaton::is_deterministic() const {
  for (int q = 0; q < num_states; ++q)
    for (int s = 0; s < alphabet.size(); ++s)
      if (successors(q, s).size() != 1) return false;
  return true;
}

std::vector<std::string> validate(const TncwAutomaton& a) {
  std::vector<std::string> violations;
  auto letter_name = [&](int s) {
    return s >= 0 && s < a.alphabet.size() ? a.alphabet.letters[s]
                                           : std::to_string(s);
  };

  if (a.alphabet.size() == 0) violations.push_back("empty alphabet");
  for (int i = 0; i < a.alphabet.size(); ++i)
    for (int j = i + 1; j < a.alphabet.size(); ++j)
      if (a.alphabet.letters[i] == a.alphabet.letters[j])
        violations.push_back("duplicate alphabet symbol '" +
                             a.alphabet.letters[i] + "'");
  if (a.num_states <= 0) violations.push_back("automaton has no states");
  if (a.initial < 0 || a.initial >= a.num_states)
    violations.push_back("initial state " + std::to_string(a.initial) +
                         " out of range");

  for (const Transition& t : a.transitions) {
    if (t.src < 0 || t.src >= a.num_states)
      violations.push_back("transition source " + std::to_string(t.src) +
                           " out of range");
    if (t.dst < 0 || t.dst >= a.num_states)
      violations.push_back("transition target " + std::to_string(t.dst) +
                           " out of range");
    if (t.letter < 0 || t.letter >= a.alphabet.size())
      violations.push_back("transition letter index " +
                           std::to_string(t.letter) + " out of range");
  }
  if (!violations.empty()) return violations;  // ranges broken, stop here

  for (size_t i = 0; i + 1 < a.transitions.size(); ++i)
    if (a.transitions[i] == a.transitions[i + 1])
      violations.push_back("duplicate transition (state " +
                           std::to_string(a.transitions[i].src) + ", letter " +
                           letter_name(a.transitions[i].letter) + ")");
  if (!std::is_sorted(a.transitions.begin(), a.transitions.end()))
    violations.push_back("transition list not in canonical order");
  for (int q = 0; q < a.num_states; ++q)
    for (int s = 0; s < a.alphabet.size(); ++s) {
      std::span<const Transition> succ = a.successors(q, s);
      for (size_t i = 0; i < succ.size(); ++i)
        for (size_t j = i + 1; j < succ.size(); ++j)
          if (succ[i].dst == succ[j].dst && succ[i].mark != succ[j].mark)
            violations.push_back("conflicting marks on (state " +
                                 std::to_string(q) + ", letter " +
                                 letter_name(s) + ", state " +
                                 std::to_string(succ[i].dst) + ")");
    }

  for (int q = 0; q < a.num_states; ++q)
    for (int s = 0; s < a.alphabet.size(); ++s)
      if (a.successors(q, s).empty())
        violations.push_back("missing successor (state " + std::to_string(q) +
                             ", letter " + letter_name(s) + ")");
  return violations;
}

void require_valid(const TncwAutomaton& a) {
  std::vector<std::string> violations = validate(a);
  if (violations.empty()) return;
  std::string msg = "invalid automaton:";
  for (const std::string& v : violations) msg += " [" + v + "]";
  throw std::invalid_argument(msg);
}

std::pair<TncwAutomaton, int> disjoint_union(const TncwAutomaton& a,
                                             const TncwAutomaton& b) {
  if (!(a.alphabet == b.alphabet))
    throw std::invalid_argument("disjoint_union: alphabet mismatch");
  TncwAutomaton u;
  u.alphabet = a.alphabet;
  u.num_states = a.num_states + b.num_states;
  u.initial = a.initial;
  u.transitions = a.transitions;
  const int offset = a.num_states;
  for (Transition t : b.transitions) {
    t.src += offset;
    t.dst += offset;
    u.transitions.push_back(t);
  }
  u.canonicalize();
  return {std::move(u), offset};
}

TncwAutomaton permute_states(const TncwAutomaton& a,
                             const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != a.num_states)
    throw std::invalid_argument("permute_states: bad permutation size");
  TncwAutomaton out;
  out.alphabet = a.alphabet;
  out.num_states = a.num_states;
  out.initial = perm[a.initial];
  out.name = a.name;
  for (Transition t : a.transitions) {
    t.src = perm[t.src];
    t.dst = perm[t.dst];
    out.transitions.push_back(t);
  }
  out.canonicalize();
  return out;
}

TncwAutomaton restrict_to_reachable(const TncwAutomaton& a) {
  std::vector<char> seen(a.num_states, 0);
  std::vector<int> stack = {a.initial};
  seen[a.initial] = 1;
  while (!stack.empty()) {
    int q = stack.back();
    stack.pop_back();
    for (int s = 0; s < a.alphabet.size(); ++s)
      for (const Transition& t : a.successors(q, s))
        if (!seen[t.dst]) {
          seen[t.dst] = 1;
          stack.push_back(t.dst);
        }
  }
  std::vector<int> renum(a.num_states, -1);
  int next = 0;
  for (int q = 0; q < a.num_states; ++q)
    if (seen[q]) renum[q] = next++;

  TncwAutomaton out;
  out.alphabet = a.alphabet;
  out.num_states = next;
  out.initial = renum[a.initial];
  out.name = a.name;
  for (Transition t : a.transitions)
    if (seen[t.src] && seen[t.dst]) {
      t.src = renum[t.src];
      t.dst = renum[t.dst];
      out.transitions.push_back(t);
    }
  out.canonicalize();
  return out;
}

}  // namespace gfgcanon
