#include "gfgcanon/parity.hpp"

#include <algorithm>
#include <stdexcept>

namespace gfgcanon {

namespace {

struct Solver {
  const ParityGame& g;
  std::vector<std::vector<int>> pred;
  std::vector<char> winner;
  std::vector<int> strategy;

  explicit Solver(const ParityGame& g)
      : g(g),
        pred(g.positions.size()),
        winner(g.positions.size(), 0),
        strategy(g.positions.size(), -1) {
    for (size_t v = 0; v < g.positions.size(); ++v) {
      if (g.positions[v].succ.empty())
        throw std::invalid_argument("solve_parity: position without a move");
      for (int w : g.positions[v].succ) pred[w].push_back(static_cast<int>(v));
    }
  }

  // Player's attractor of `target` inside `alive`; records the pulling move
  // for the player's freshly attracted positions into `strategy`.
  std::vector<char> attractor(const std::vector<char>& alive,
                              const std::vector<char>& target, int player) {
    std::vector<char> in(g.positions.size(), 0);
    std::vector<int> degree(g.positions.size(), 0);
    std::vector<int> queue;
    for (size_t v = 0; v < g.positions.size(); ++v) {
      if (!alive[v]) continue;
      for (int w : g.positions[v].succ)
        if (alive[w]) ++degree[v];
      if (target[v]) {
        in[v] = 1;
        queue.push_back(static_cast<int>(v));
      }
    }
    for (size_t i = 0; i < queue.size(); ++i) {
      int w = queue[i];
      for (int v : pred[w]) {
        if (!alive[v] || in[v]) continue;
        if (g.positions[v].owner == player) {
          in[v] = 1;
          for (int u : g.positions[v].succ)
            if (alive[u] && in[u]) {
              strategy[v] = u;
              break;
            }
          queue.push_back(v);
        } else if (--degree[v] == 0) {
          in[v] = 1;
          queue.push_back(v);
        }
      }
    }
    return in;
  }

  void solve(const std::vector<char>& alive) {
    int top = -1;
    for (size_t v = 0; v < g.positions.size(); ++v)
      if (alive[v]) top = std::max(top, g.positions[v].priority);
    if (top < 0) return;
    const int player = top & 1;

    std::vector<char> peak(g.positions.size(), 0);
    for (size_t v = 0; v < g.positions.size(); ++v)
      peak[v] = alive[v] && g.positions[v].priority == top;
    std::vector<char> attr = attractor(alive, peak, player);

    std::vector<char> rest(g.positions.size(), 0);
    bool rest_empty = true;
    for (size_t v = 0; v < g.positions.size(); ++v) {
      rest[v] = alive[v] && !attr[v];
      rest_empty &= !rest[v];
    }
    if (!rest_empty) solve(rest);

    bool opponent_holds = false;
    for (size_t v = 0; v < g.positions.size(); ++v)
      opponent_holds |= rest[v] && winner[v] == 1 - player;

    if (!opponent_holds) {
      // The whole subgame goes to `player`: peak positions move anywhere
      // inside it, attracted positions follow the attractor strategy, the
      // rest keep their recursive strategy.
      for (size_t v = 0; v < g.positions.size(); ++v) {
        if (!alive[v]) continue;
        winner[v] = static_cast<char>(player);
        if (peak[v] && g.positions[v].owner == player) {
          strategy[v] = -1;
          for (int u : g.positions[v].succ)
            if (alive[u]) {
              strategy[v] = u;
              break;
            }
        }
      }
      return;
    }

    std::vector<char> lost(g.positions.size(), 0);
    for (size_t v = 0; v < g.positions.size(); ++v)
      lost[v] = rest[v] && winner[v] == 1 - player;
    std::vector<char> opp_attr = attractor(alive, lost, 1 - player);
    // Positions newly attracted got their pulling move recorded; the core
    // keeps the recursive strategy.
    for (size_t v = 0; v < g.positions.size(); ++v)
      if (opp_attr[v]) winner[v] = static_cast<char>(1 - player);

    std::vector<char> remaining(g.positions.size(), 0);
    bool any = false;
    for (size_t v = 0; v < g.positions.size(); ++v) {
      remaining[v] = alive[v] && !opp_attr[v];
      any |= remaining[v];
    }
    if (any) solve(remaining);
  }
};

}  // namespace

ParitySolution solve_parity(const ParityGame& g) {
  Solver solver(g);
  std::vector<char> all(g.positions.size(), 1);
  solver.solve(all);
  ParitySolution out;
  out.winner = std::move(solver.winner);
  out.strategy = std::move(solver.strategy);
  // Strategies are only meaningful where the owner wins.
  for (size_t v = 0; v < g.positions.size(); ++v)
    if (g.positions[v].owner != out.winner[v]) out.strategy[v] = -1;
  return out;
}

}  // namespace gfgcanon
