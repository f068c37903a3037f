/* parity.hpp -- max-parity games and a recursive (Zielonka) solver with
 * positional strategy extraction. */

#ifndef GFGCANON_PARITY_HPP_
#define GFGCANON_PARITY_HPP_

#include <vector>

namespace gfgcanon {

// Player 0 wins a play iff the maximal priority occurring infinitely often
// is even. Every position must have at least one successor.
struct ParityGame {
  struct Position {
    int owner = 0;  // 0 or 1
    int priority = 0;
    std::vector<int> succ;
  };
  std::vector<Position> positions;
};

struct ParitySolution {
  std::vector<char> winner;  // per position
  // Chosen successor for positions owned by their winner; -1 elsewhere.
  std::vector<int> strategy;
};

ParitySolution solve_parity(const ParityGame& g);

}  // namespace gfgcanon

#endif  // GFGCANON_PARITY_HPP_
