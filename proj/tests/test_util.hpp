/* test_util.hpp -- shared helpers for the unit and acceptance suites. */

#ifndef GFGCANON_TESTS_TEST_UTIL_HPP_
#define GFGCANON_TESTS_TEST_UTIL_HPP_

#include <cstdint>
#include <vector>

#include "gfgcanon/automaton.hpp"
#include "gfgcanon/random_gen.hpp"

namespace gfgcanon::testutil {

inline TncwAutomaton build(int states, std::vector<std::string> letters,
                           std::vector<Transition> transitions,
                           int initial = 0) {
  TncwAutomaton a;
  a.alphabet.letters = std::move(letters);
  a.num_states = states;
  a.initial = initial;
  a.transitions = std::move(transitions);
  a.canonicalize();
  return a;
}

// Single state, all letters looping non-alpha: the universal language.
inline TncwAutomaton universal(std::vector<std::string> letters) {
  std::vector<Transition> ts;
  for (int l = 0; l < static_cast<int>(letters.size()); ++l)
    ts.push_back({0, l, 0, Mark::NonAlpha});
  return build(1, std::move(letters), std::move(ts));
}

// Single state, all letters looping alpha: the empty language.
inline TncwAutomaton empty_lang(std::vector<std::string> letters) {
  std::vector<Transition> ts;
  for (int l = 0; l < static_cast<int>(letters.size()); ++l)
    ts.push_back({0, l, 0, Mark::Alpha});
  return build(1, std::move(letters), std::move(ts));
}

// The 200-instance corpus behind the property suites: deterministic total
// tDCWs with up to 5 states over 2 or 3 letters, derived from seeds 1..200.
struct CorpusParams {
  int states;
  int letters;
  double density;
};

inline CorpusParams corpus_params(std::uint64_t seed) {
  Rng rng(seed * 0x9e3779b97f4a7c15ull + 1);
  CorpusParams p;
  p.states = 1 + rng.below(5);
  p.letters = 2 + rng.below(2);
  p.density = (10 + rng.below(70)) / 100.0;
  return p;
}

inline TncwAutomaton corpus_instance(std::uint64_t seed) {
  CorpusParams p = corpus_params(seed);
  return random_tdcw(seed, p.states, p.letters, p.density);
}

// A deterministic permutation of 0..n-1 derived from the seed.
inline std::vector<int> corpus_permutation(std::uint64_t seed, int n) {
  Rng rng(seed ^ 0xabcdef1234567890ull);
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
  return perm;
}

}  // namespace gfgcanon::testutil

#endif  // GFGCANON_TESTS_TEST_UTIL_HPP_
