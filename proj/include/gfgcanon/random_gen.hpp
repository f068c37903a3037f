/* random_gen.hpp -- seeded generation of random total tDCWs and lassos.
 * All draws go through mt19937_64 with explicit modulo reduction, so a seed
 * produces the same instance on every platform. */

#ifndef GFGCANON_RANDOM_GEN_HPP_
#define GFGCANON_RANDOM_GEN_HPP_

#include <cstdint>
#include <random>

#include "gfgcanon/automaton.hpp"

namespace gfgcanon {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform-ish draw in [0, bound); bound must be positive.
  int below(int bound) { return static_cast<int>(next() % bound); }
  // True with probability about permille/1000.
  bool chance(int permille) { return next() % 1000 < static_cast<std::uint64_t>(permille); }

 private:
  std::mt19937_64 engine_;
};

// Alphabet of `letters` single-character symbols starting at 'a'.
Alphabet default_alphabet(int letters);

// Total deterministic tDCW: one transition per (state, letter), each marked
// alpha with the given density in [0, 1].
TncwAutomaton random_tdcw(std::uint64_t seed, int states, int letters,
                          double alpha_density);

LassoWord random_lasso(Rng& rng, int letters, int max_u, int max_v);

}  // namespace gfgcanon

#endif  // GFGCANON_RANDOM_GEN_HPP_
