#include "gfgcanon/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "gfgcanon/parity.hpp"
#include "gfgcanon/random_gen.hpp"

namespace gfgcanon {

namespace {

// Letter-game arena: letter-picker positions (q, m), transition-picker
// positions (q, m, sigma), and one single-move position per candidate
// transition carrying the priority of the joint step.
struct LetterGame {
  ParityGame game;
  std::vector<std::pair<int, int>> letter_positions;  // (q, m) per position
  std::map<std::pair<int, int>, int> letter_index;
  // move_target[move position] = transition taken (for strategy decoding)
  std::map<int, Transition> chosen_transition;
  std::vector<int> move_position;  // letter position * letters + letter
  BreakpointAutomaton monitor;
};

LetterGame build_letter_game(const TncwAutomaton& a) {
  LetterGame lg;
  lg.monitor = determinize_breakpoint(a);
  const int letters = a.alphabet.size();

  auto intern = [&](int q, int m) {
    auto [it, fresh] =
        lg.letter_index.try_emplace({q, m}, static_cast<int>(lg.game.positions.size()));
    if (fresh) {
      lg.game.positions.push_back({1, 0, {}});
      lg.letter_positions.push_back({q, m});
    }
    return it->second;
  };

  for (int q = 0; q < a.num_states; ++q) intern(q, lg.monitor.root_of[q]);

  // The arena closes under moves; letter_positions grows as a worklist.
  for (size_t i = 0; i < lg.letter_positions.size(); ++i) {
    auto [q, m] = lg.letter_positions[i];
    int pos = lg.letter_index.at({q, m});
    for (int l = 0; l < letters; ++l) {
      int move = static_cast<int>(lg.game.positions.size());
      lg.game.positions.push_back({0, 0, {}});
      lg.game.positions[pos].succ.push_back(move);

      const Transition& mstep = lg.monitor.dcw.successors(m, l)[0];
      for (const Transition& t : a.successors(q, l)) {
        int pri = mstep.mark == Mark::Alpha
                      ? 2
                      : (t.mark == Mark::Alpha ? 1 : 0);
        int edge = static_cast<int>(lg.game.positions.size());
        lg.game.positions.push_back({0, pri, {}});
        int next = intern(t.dst, mstep.dst);
        lg.game.positions[edge].succ.push_back(next);
        lg.game.positions[move].succ.push_back(edge);
        lg.chosen_transition[edge] = t;
      }
    }
  }

  lg.move_position.assign(lg.letter_positions.size() * letters, -1);
  for (size_t i = 0; i < lg.letter_positions.size(); ++i) {
    int pos = lg.letter_index.at(lg.letter_positions[i]);
    for (int l = 0; l < letters; ++l)
      lg.move_position[i * letters + l] = lg.game.positions[pos].succ[l];
  }
  return lg;
}

GfgStrategy extract_strategy(const TncwAutomaton& a, const LetterGame& lg,
                             const ParitySolution& sol) {
  const int letters = a.alphabet.size();
  GfgStrategy st;
  for (size_t i = 0; i < lg.letter_positions.size(); ++i) {
    auto [q, m] = lg.letter_positions[i];
    int pos = lg.letter_index.at({q, m});
    if (sol.winner[pos] != 0) continue;
    st.positions.push_back({q, m});
    std::vector<Transition> row;
    for (int l = 0; l < letters; ++l) {
      int move = lg.move_position[i * letters + l];
      int edge = sol.strategy[move];
      if (edge < 0)
        throw std::logic_error("gfg_verify: missing strategy on a won move");
      row.push_back(lg.chosen_transition.at(edge));
    }
    st.moves.push_back(std::move(row));
  }
  return st;
}

int strategy_position(const GfgStrategy& st, int q, int m) {
  for (size_t i = 0; i < st.positions.size(); ++i)
    if (st.positions[i] == std::pair{q, m}) return static_cast<int>(i);
  return -1;
}

// Replays the strategy on one lasso; returns true iff the induced run is
// accepting (its period loop crosses no alpha transition).
bool replay(const TncwAutomaton& a, const BreakpointAutomaton& monitor,
            const GfgStrategy& st, const LassoWord& w) {
  int pos = st.initial_position;
  auto step = [&](int letter) {
    auto [q, m] = st.positions[pos];
    const Transition& t = st.moves[pos][letter];
    if (t.src != q || t.letter != letter)
      throw std::logic_error("gfg strategy is inconsistent with delta");
    int m2 = monitor.dcw.successors(m, letter)[0].dst;
    pos = strategy_position(st, t.dst, m2);
    if (pos < 0) throw std::logic_error("gfg strategy left its own region");
    return t.mark;
  };
  for (int letter : w.prefix) step(letter);
  // Iterate the period until the strategy position recurs at the loop head,
  // then check the loop for alpha steps.
  std::vector<int> seen_at;
  std::vector<char> alpha_after;
  for (;;) {
    for (size_t i = 0; i < seen_at.size(); ++i)
      if (seen_at[i] == pos) {
        for (size_t j = i; j < alpha_after.size(); ++j)
          if (alpha_after[j]) return false;
        return true;
      }
    seen_at.push_back(pos);
    bool alpha = false;
    for (int letter : w.period) alpha |= step(letter) == Mark::Alpha;
    alpha_after.push_back(alpha);
  }
}

}  // namespace

GfgResult gfg_verify(const TncwAutomaton& a) {
  require_valid(a);
  LetterGame lg = build_letter_game(a);
  ParitySolution sol = solve_parity(lg.game);

  int root = lg.letter_index.at({a.initial, lg.monitor.root_of[a.initial]});
  if (sol.winner[root] != 0)
    return {std::nullopt,
            "letter game lost: nondeterminism cannot be resolved on the past"};

  GfgStrategy st = extract_strategy(a, lg, sol);
  st.initial_position =
      strategy_position(st, a.initial, lg.monitor.root_of[a.initial]);

  Rng rng(0x67666773u);  // fixed seed; the check must be reproducible
  for (int i = 0; i < 200; ++i) {
    LassoWord w = random_lasso(rng, a.alphabet.size(), 6, 6);
    if (!lasso_member(a, w)) continue;
    if (!replay(a, lg.monitor, st, w))
      throw std::logic_error(
          "gfg_verify: extracted strategy rejected a word of the language");
  }
  return {std::move(st), ""};
}

std::vector<char> gfg_states(const TncwAutomaton& a) {
  require_valid(a);
  LetterGame lg = build_letter_game(a);
  ParitySolution sol = solve_parity(lg.game);
  std::vector<char> out(a.num_states, 0);
  for (int q = 0; q < a.num_states; ++q)
    out[q] = sol.winner[lg.letter_index.at({q, lg.monitor.root_of[q]})] == 0;
  return out;
}

std::optional<TncwAutomaton> dbp_check(const TncwAutomaton& a,
                                       std::int64_t max_enumeration,
                                       ExecPolicy policy) {
  require_valid(a);
  const int letters = a.alphabet.size();
  std::vector<std::vector<Transition>> choices;
  std::int64_t total = 1;
  for (int q = 0; q < a.num_states; ++q)
    for (int l = 0; l < letters; ++l) {
      std::span<const Transition> succ = a.successors(q, l);
      choices.emplace_back(succ.begin(), succ.end());
      if (total > max_enumeration / static_cast<std::int64_t>(succ.size()))
        throw BoundExceededError(
            "dbp_check: pruning space exceeds the enumeration bound");
      total *= static_cast<std::int64_t>(succ.size());
    }

  BreakpointAutomaton monitor = determinize_breakpoint(a);
  auto build = [&](std::int64_t index) {
    TncwAutomaton d;
    d.alphabet = a.alphabet;
    d.num_states = a.num_states;
    d.initial = a.initial;
    for (const std::vector<Transition>& c : choices) {
      d.transitions.push_back(c[index % c.size()]);
      index /= static_cast<std::int64_t>(c.size());
    }
    d.canonicalize();
    return d;
  };

  std::int64_t found = find_first_index(total, policy, [&](std::int64_t i) {
    TncwAutomaton d = build(i);
    return det_contains(d, d.initial, monitor.dcw, monitor.dcw.initial) &&
           det_contains(monitor.dcw, monitor.dcw.initial, d, d.initial);
  });
  if (found < 0) return std::nullopt;
  return build(found);
}

namespace {

// Lassos in canonical order: prefixes by (length, lex), periods likewise.
struct LassoSpace {
  int letters, max_u, max_v;
  std::vector<std::int64_t> u_offset, v_offset;  // cumulative counts
  std::int64_t u_total = 0, v_total = 0;

  LassoSpace(int letters, int max_u, int max_v)
      : letters(letters), max_u(max_u), max_v(max_v) {
    std::int64_t count = 1;
    for (int len = 0; len <= max_u; ++len) {
      u_offset.push_back(u_total);
      u_total += count;
      count *= letters;
    }
    count = letters;
    for (int len = 1; len <= max_v; ++len) {
      v_offset.push_back(v_total);
      v_total += count;
      count *= letters;
    }
  }

  std::int64_t total() const { return u_total * v_total; }

  std::vector<int> decode(std::int64_t index, const std::vector<std::int64_t>& offsets,
                          int first_len) const {
    int len = static_cast<int>(offsets.size()) - 1;
    while (offsets[len] > index) --len;
    std::int64_t rank = index - offsets[len];
    std::vector<int> word(len + first_len);
    for (int i = static_cast<int>(word.size()) - 1; i >= 0; --i) {
      word[i] = static_cast<int>(rank % letters);
      rank /= letters;
    }
    return word;
  }

  LassoWord lasso(std::int64_t index) const {
    LassoWord w;
    w.prefix = decode(index / v_total, u_offset, 0);
    w.period = decode(index % v_total, v_offset, 1);
    return w;
  }
};

}  // namespace

std::optional<LassoWord> lasso_equiv_bounded(const TncwAutomaton& a,
                                             const TncwAutomaton& b, int max_u,
                                             int max_v, ExecPolicy policy) {
  if (!(a.alphabet == b.alphabet))
    throw std::invalid_argument("lasso_equiv_bounded: alphabet mismatch");
  require_valid(a);
  require_valid(b);
  if (max_u < 0 || max_v < 1)
    throw std::invalid_argument("lasso_equiv_bounded: bad bounds");
  LassoSpace space(a.alphabet.size(), max_u, max_v);
  std::int64_t found =
      find_first_index(space.total(), policy, [&](std::int64_t i) {
        LassoWord w = space.lasso(i);
        return lasso_member(a, w) != lasso_member(b, w);
      });
  if (found < 0) return std::nullopt;
  return space.lasso(found);
}

namespace {

// Deterministic walk of a skeleton on a lasso: the set of (state, letter)
// slots its period loop traverses, as a bitmask.
std::uint32_t cycle_slots(const std::vector<int>& skeleton, int letters,
                          const LassoWord& w) {
  int state = 0;
  for (int l : w.prefix) state = skeleton[state * letters + l];
  std::vector<int> seen;
  std::vector<std::uint32_t> masks;
  for (;;) {
    for (size_t i = 0; i < seen.size(); ++i)
      if (seen[i] == state) {
        std::uint32_t m = 0;
        for (size_t j = i; j < masks.size(); ++j) m |= masks[j];
        return m;
      }
    seen.push_back(state);
    std::uint32_t m = 0;
    for (int l : w.period) {
      m |= std::uint32_t{1} << (state * letters + l);
      state = skeleton[state * letters + l];
    }
    masks.push_back(m);
  }
}

// All total deterministic transition skeletons over exactly k states that
// are initially connected, in BFS-canonical numbering (each isomorphism
// class appears once).
void enumerate_skeletons(int k, int letters,
                         const std::function<bool(const std::vector<int>&)>& visit) {
  std::vector<int> skeleton(k * letters, -1);
  // recursion over slots; max_used = highest state index allocated so far
  std::function<bool(int, int)> rec = [&](int slot, int max_used) -> bool {
    if (slot == k * letters) {
      if (max_used != k - 1) return false;  // some state never allocated
      return visit(skeleton);
    }
    int limit = std::min(max_used + 1, k - 1);
    for (int target = 0; target <= limit; ++target) {
      skeleton[slot] = target;
      if (rec(slot + 1, std::max(max_used, target))) return true;
    }
    skeleton[slot] = -1;
    return false;
  };
  rec(0, 0);
}

}  // namespace

std::optional<TncwAutomaton> min_tdcw_search_bounded(
    const TncwAutomaton& a, int max_states, std::int64_t max_enumeration,
    ExecPolicy policy) {
  require_valid(a);
  const int letters = a.alphabet.size();

  // Fingerprint lassos: the full short range plus a fixed random spread.
  std::vector<LassoWord> probes;
  {
    LassoSpace space(letters, 1, 3);
    for (std::int64_t i = 0; i < space.total(); ++i)
      probes.push_back(space.lasso(i));
    Rng rng(0x7dcf00d5u);
    for (int i = 0; i < 32; ++i)
      probes.push_back(random_lasso(rng, letters, 3, 4));
  }
  std::vector<char> expected(probes.size());
  parallel_for(static_cast<std::int64_t>(probes.size()), policy,
               [&](std::int64_t i) { expected[i] = lasso_member(a, probes[i]); });

  BreakpointAutomaton monitor = determinize_breakpoint(a);

  for (int k = 1; k <= max_states; ++k) {
    std::int64_t skeleton_space = 1;
    for (int i = 0; i < k * letters; ++i) {
      if (skeleton_space > max_enumeration / k)
        throw BoundExceededError(
            "min_tdcw_search_bounded: skeleton space exceeds the enumeration "
            "bound");
      skeleton_space *= k;
    }
    if (k * letters > 30)
      throw BoundExceededError(
          "min_tdcw_search_bounded: more than 30 transition slots");

    std::optional<TncwAutomaton> found;
    enumerate_skeletons(k, letters, [&](const std::vector<int>& skeleton) {
      // Constraints on the alpha set from the probe fingerprints: accepted
      // probes forbid alpha on their loop slots, rejected ones require a hit.
      std::uint32_t allowed = (std::uint32_t{1} << (k * letters)) - 1;
      std::vector<std::uint32_t> must_hit;
      for (size_t i = 0; i < probes.size(); ++i) {
        std::uint32_t loop = cycle_slots(skeleton, letters, probes[i]);
        if (expected[i])
          allowed &= ~loop;
        else
          must_hit.push_back(loop);
      }
      // Ascending subset enumeration of `allowed`.
      for (std::uint32_t alpha = 0;; alpha = (alpha - allowed) & allowed) {
        bool hits = true;
        for (std::uint32_t m : must_hit) hits &= (alpha & m) != 0;
        if (hits) {
          TncwAutomaton d;
          d.alphabet = a.alphabet;
          d.num_states = k;
          d.initial = 0;
          for (int q = 0; q < k; ++q)
            for (int l = 0; l < letters; ++l)
              d.transitions.push_back(
                  {q, l, skeleton[q * letters + l],
                   (alpha >> (q * letters + l)) & 1 ? Mark::Alpha
                                                    : Mark::NonAlpha});
          d.canonicalize();
          if (det_contains(d, d.initial, monitor.dcw, monitor.dcw.initial) &&
              det_contains(monitor.dcw, monitor.dcw.initial, d, d.initial)) {
            found = std::move(d);
            return true;
          }
        }
        if (alpha == allowed) break;
      }
      return false;
    });
    if (found) return found;
  }
  return std::nullopt;
}

}  // namespace gfgcanon
