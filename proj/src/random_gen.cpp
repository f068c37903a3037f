#include "gfgcanon/random_gen.hpp"

#include <stdexcept>

namespace gfgcanon {

Alphabet default_alphabet(int letters) {
  if (letters < 1 || letters > 26)
    throw std::invalid_argument("default_alphabet: need 1..26 letters");
  Alphabet al;
  for (int i = 0; i < letters; ++i)
    al.letters.push_back(std::string(1, static_cast<char>('a' + i)));
  return al;
}

TncwAutomaton random_tdcw(std::uint64_t seed, int states, int letters,
                          double alpha_density) {
  if (states < 1) throw std::invalid_argument("random_tdcw: need states >= 1");
  if (alpha_density < 0.0 || alpha_density > 1.0)
    throw std::invalid_argument("random_tdcw: density must be in [0, 1]");
  Rng rng(seed);
  int permille = static_cast<int>(alpha_density * 1000.0 + 0.5);

  TncwAutomaton a;
  a.alphabet = default_alphabet(letters);
  a.num_states = states;
  a.initial = 0;
  for (int q = 0; q < states; ++q)
    for (int l = 0; l < letters; ++l) {
      int dst = rng.below(states);
      Mark mark = rng.chance(permille) ? Mark::Alpha : Mark::NonAlpha;
      a.transitions.push_back({q, l, dst, mark});
    }
  a.canonicalize();
  return a;
}

LassoWord random_lasso(Rng& rng, int letters, int max_u, int max_v) {
  LassoWord w;
  int ulen = rng.below(max_u + 1);
  int vlen = 1 + rng.below(max_v);
  for (int i = 0; i < ulen; ++i) w.prefix.push_back(rng.below(letters));
  for (int i = 0; i < vlen; ++i) w.period.push_back(rng.below(letters));
  return w;
}

}  // namespace gfgcanon
