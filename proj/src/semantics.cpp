#include "gfgcanon/semantics.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "gfgcanon/structure.hpp"

namespace gfgcanon {

namespace {

void check_lasso(const TncwAutomaton& a, const LassoWord& w) {
  if (w.period.empty())
    throw std::invalid_argument("lasso period must be non-empty");
  for (int s : w.prefix)
    if (s < 0 || s >= a.alphabet.size())
      throw std::invalid_argument("lasso prefix letter out of alphabet");
  for (int s : w.period)
    if (s < 0 || s >= a.alphabet.size())
      throw std::invalid_argument("lasso period letter out of alphabet");
}

// Vertices of the lasso product are state * len + position; positions
// 0..len-1 walk the prefix then cycle through the period.
struct LassoProduct {
  int len;
  int wrap;  // position following len-1

  int node(int state, int pos) const { return state * len + pos; }
  int next_pos(int pos) const { return pos + 1 < len ? pos + 1 : wrap; }
};

uint64_t bit(int i) { return uint64_t{1} << i; }

// delta restricted to non-alpha transitions, as per-(state,letter) masks.
struct NonAlphaMasks {
  int letters;
  std::vector<uint64_t> mask;  // state * letters + letter

  NonAlphaMasks(const TncwAutomaton& a)
      : letters(a.alphabet.size()), mask(a.num_states * letters, 0) {
    for (const Transition& t : a.transitions)
      if (t.mark == Mark::NonAlpha) mask[t.src * letters + t.letter] |= bit(t.dst);
  }
  uint64_t step(uint64_t set, int letter) const {
    uint64_t out = 0;
    while (set) {
      int q = std::countr_zero(set);
      set &= set - 1;
      out |= mask[q * letters + letter];
    }
    return out;
  }
};

// States admitting an infinite non-alpha run, i.e. the ones that reach a
// non-alpha cycle.
std::vector<char> live_states(const TncwAutomaton& a) {
  Digraph g = nonalpha_graph(a);
  std::vector<std::vector<int>> comps = sccs(g);
  std::vector<char> live(a.num_states, 0);
  // sccs() is in reverse topological order, so one pass propagates liveness
  // from successors (already final) into each component.
  for (const std::vector<int>& comp : comps) {
    bool cyclic = comp.size() > 1;
    for (int v : comp)
      for (int w : g.succ[v])
        if (w == v || live[w]) cyclic = true;
    if (cyclic)
      for (int v : comp) live[v] = 1;
  }
  return live;
}

struct PairHash {
  size_t operator()(const std::pair<uint64_t, uint64_t>& p) const {
    uint64_t h = p.first * 0x9e3779b97f4a7c15ull;
    h ^= p.second + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return static_cast<size_t>(h);
  }
};

// The unique successor of a deterministic total automaton.
const Transition& det_step(const TncwAutomaton& d, int state, int letter) {
  std::span<const Transition> succ = d.successors(state, letter);
  if (succ.size() != 1)
    throw std::invalid_argument("det_contains: automaton is not deterministic");
  return succ[0];
}

}  // namespace

bool lasso_member(const TncwAutomaton& a, int q, const LassoWord& w) {
  require_valid(a);
  check_lasso(a, w);
  if (q < 0 || q >= a.num_states)
    throw std::invalid_argument("lasso_member: state out of range");

  const int plen = static_cast<int>(w.prefix.size());
  LassoProduct lp{plen + static_cast<int>(w.period.size()), plen};
  auto letter_at = [&](int pos) {
    return pos < plen ? w.prefix[pos] : w.period[pos - plen];
  };

  const int nodes = a.num_states * lp.len;
  std::vector<char> reach(nodes, 0);
  std::vector<int> stack = {lp.node(q, 0)};
  reach[lp.node(q, 0)] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    int state = v / lp.len, pos = v % lp.len;
    for (const Transition& t : a.successors(state, letter_at(pos))) {
      int u = lp.node(t.dst, lp.next_pos(pos));
      if (!reach[u]) {
        reach[u] = 1;
        stack.push_back(u);
      }
    }
  }

  // Non-alpha-restricted product; accepted iff a reachable node lies in a
  // cycle of it.
  Digraph g(nodes);
  for (int v = 0; v < nodes; ++v) {
    if (!reach[v]) continue;
    int state = v / lp.len, pos = v % lp.len;
    for (const Transition& t : a.successors(state, letter_at(pos)))
      if (t.mark == Mark::NonAlpha)
        g.add_edge(v, lp.node(t.dst, lp.next_pos(pos)));
  }
  for (const std::vector<int>& comp : sccs(g)) {
    bool cyclic = comp.size() > 1;
    if (!cyclic)
      for (int w2 : g.succ[comp[0]]) cyclic |= w2 == comp[0];
    if (!cyclic) continue;
    for (int v : comp)
      if (reach[v]) return true;
  }
  return false;
}

bool lasso_member(const TncwAutomaton& a, const LassoWord& w) {
  return lasso_member(a, a.initial, w);
}

BreakpointAutomaton determinize_breakpoint(const TncwAutomaton& a) {
  require_valid(a);
  if (a.num_states > 64)
    throw std::invalid_argument(
        "determinize_breakpoint: more than 64 states is out of the supported "
        "range");

  const int letters = a.alphabet.size();
  std::vector<uint64_t> delta_all(a.num_states * letters, 0);
  for (const Transition& t : a.transitions)
    delta_all[t.src * letters + t.letter] |= bit(t.dst);
  NonAlphaMasks nonalpha(a);

  using Key = std::pair<uint64_t, uint64_t>;  // (S, O)
  std::unordered_map<Key, int, PairHash> id;
  std::vector<Key> states;
  auto intern = [&](Key k) {
    auto [it, fresh] = id.try_emplace(k, static_cast<int>(states.size()));
    if (fresh) states.push_back(k);
    return it->second;
  };

  BreakpointAutomaton out;
  out.root_of.resize(a.num_states);
  for (int q = 0; q < a.num_states; ++q)
    out.root_of[q] = intern({bit(q), bit(q)});

  for (size_t i = 0; i < states.size(); ++i) {
    auto [S, O] = states[i];
    for (int s = 0; s < letters; ++s) {
      uint64_t S2 = 0, tmp = S;
      while (tmp) {
        int q = std::countr_zero(tmp);
        tmp &= tmp - 1;
        S2 |= delta_all[q * letters + s];
      }
      uint64_t O2 = nonalpha.step(O, s);
      Mark mark = Mark::NonAlpha;
      if (O2 == 0) {  // breakpoint: every tracked run crossed alpha
        mark = Mark::Alpha;
        O2 = S2;
      }
      int dst = intern({S2, O2});
      out.dcw.transitions.push_back({static_cast<int>(i), s, dst, mark});
    }
  }

  out.dcw.alphabet = a.alphabet;
  out.dcw.num_states = static_cast<int>(states.size());
  out.dcw.initial = out.root_of[a.initial];
  out.dcw.canonicalize();
  return out;
}

bool det_contains(const TncwAutomaton& d1, int q, const TncwAutomaton& d2,
                  int s) {
  if (!(d1.alphabet == d2.alphabet))
    throw std::invalid_argument("det_contains: alphabet mismatch");
  const int letters = d1.alphabet.size();
  const int n2 = d2.num_states;
  auto node = [&](int x, int y) { return x * n2 + y; };

  std::vector<char> reach(d1.num_states * n2, 0);
  std::vector<int> stack = {node(q, s)};
  reach[node(q, s)] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    int x = v / n2, y = v % n2;
    for (int l = 0; l < letters; ++l) {
      int u = node(det_step(d1, x, l).dst, det_step(d2, y, l).dst);
      if (!reach[u]) {
        reach[u] = 1;
        stack.push_back(u);
      }
    }
  }

  // Restrict to d1-non-alpha product edges; a counterexample is an SCC of
  // this restriction containing a d2-alpha edge.
  Digraph g(d1.num_states * n2);
  for (int v = 0; v < d1.num_states * n2; ++v) {
    if (!reach[v]) continue;
    int x = v / n2, y = v % n2;
    for (int l = 0; l < letters; ++l) {
      const Transition& t1 = det_step(d1, x, l);
      if (t1.mark != Mark::NonAlpha) continue;
      g.add_edge(v, node(t1.dst, det_step(d2, y, l).dst));
    }
  }
  std::vector<int> comp_of(g.num_vertices, -1);
  std::vector<std::vector<int>> comps = sccs(g);
  for (size_t c = 0; c < comps.size(); ++c)
    for (int v : comps[c]) comp_of[v] = static_cast<int>(c);
  for (int v = 0; v < g.num_vertices; ++v) {
    if (!reach[v]) continue;
    int x = v / n2, y = v % n2;
    for (int l = 0; l < letters; ++l) {
      const Transition& t1 = det_step(d1, x, l);
      if (t1.mark != Mark::NonAlpha) continue;
      const Transition& t2 = det_step(d2, y, l);
      if (t2.mark != Mark::Alpha) continue;
      if (comp_of[v] == comp_of[node(t1.dst, t2.dst)]) return false;
    }
  }
  return true;
}

namespace {

// Nodes (p, T): a non-alpha run of a^q alongside the subset reached by
// non-alpha runs of a^s. Violation: T dies while p can still go on forever.
// On safe-deterministic input T stays a singleton and the walk is pairwise.
bool safe_contained_impl(const NonAlphaMasks& nonalpha,
                         const std::vector<char>& live, int q, int s) {
  if (!live[q]) return true;  // empty safe language
  const int letters = nonalpha.letters;
  std::unordered_set<std::pair<uint64_t, uint64_t>, PairHash> seen;
  std::deque<std::pair<int, uint64_t>> queue;
  seen.insert({static_cast<uint64_t>(q), bit(s)});
  queue.push_back({q, bit(s)});
  while (!queue.empty()) {
    auto [p, T] = queue.front();
    queue.pop_front();
    for (int l = 0; l < letters; ++l) {
      uint64_t succ = nonalpha.mask[p * letters + l];
      if (!succ) continue;
      uint64_t T2 = nonalpha.step(T, l);
      while (succ) {
        int p2 = std::countr_zero(succ);
        succ &= succ - 1;
        if (!live[p2]) continue;
        if (T2 == 0) return false;
        if (seen.insert({static_cast<uint64_t>(p2), T2}).second)
          queue.push_back({p2, T2});
      }
    }
  }
  return true;
}

}  // namespace

bool safe_language_contained(const TncwAutomaton& a, int q, int s) {
  if (a.num_states > 64)
    throw std::invalid_argument(
        "safe_language_contained: more than 64 states is out of the supported "
        "range");
  NonAlphaMasks nonalpha(a);
  return safe_contained_impl(nonalpha, live_states(a), q, s);
}

EquivRelations compute_relations(const TncwAutomaton& a, ExecPolicy policy) {
  require_valid(a);
  const int n = a.num_states;
  EquivRelations rel;
  rel.n = n;
  rel.equiv_tab.assign(n * n, 0);
  rel.safe_tab.assign(n * n, 0);

  BreakpointAutomaton bp = determinize_breakpoint(a);

  // Unordered state pairs for the symmetric table.
  std::vector<std::pair<int, int>> pairs;
  for (int q = 0; q < n; ++q)
    for (int s = q + 1; s < n; ++s) pairs.push_back({q, s});

  parallel_for(static_cast<std::int64_t>(pairs.size()), policy,
               [&](std::int64_t i) {
                 auto [q, s] = pairs[i];
                 bool eq =
                     det_contains(bp.dcw, bp.root_of[q], bp.dcw,
                                  bp.root_of[s]) &&
                     det_contains(bp.dcw, bp.root_of[s], bp.dcw,
                                  bp.root_of[q]);
                 rel.equiv_tab[q * n + s] = rel.equiv_tab[s * n + q] = eq;
               });
  for (int q = 0; q < n; ++q) rel.equiv_tab[q * n + q] = 1;

  if (n > 64)
    throw std::invalid_argument(
        "compute_relations: more than 64 states is out of the supported "
        "range");
  NonAlphaMasks nonalpha(a);
  std::vector<char> live = live_states(a);
  std::vector<std::pair<int, int>> ordered;
  for (int q = 0; q < n; ++q)
    for (int s = 0; s < n; ++s)
      if (q != s) ordered.push_back({q, s});
  parallel_for(static_cast<std::int64_t>(ordered.size()), policy,
               [&](std::int64_t i) {
                 auto [q, s] = ordered[i];
                 rel.safe_tab[q * n + s] =
                     safe_contained_impl(nonalpha, live, q, s);
               });
  for (int q = 0; q < n; ++q) rel.safe_tab[q * n + q] = 1;
  return rel;
}

bool language_equiv(const TncwAutomaton& a, const TncwAutomaton& b) {
  auto [u, offset] = disjoint_union(a, b);
  BreakpointAutomaton bp = determinize_breakpoint(u);
  int ra = bp.root_of[a.initial];
  int rb = bp.root_of[offset + b.initial];
  return det_contains(bp.dcw, ra, bp.dcw, rb) &&
         det_contains(bp.dcw, rb, bp.dcw, ra);
}

bool is_semantically_deterministic(const TncwAutomaton& a,
                                   const EquivRelations& rel) {
  for (int q = 0; q < a.num_states; ++q)
    for (int l = 0; l < a.alphabet.size(); ++l) {
      std::span<const Transition> succ = a.successors(q, l);
      for (size_t i = 0; i < succ.size(); ++i)
        for (size_t j = i + 1; j < succ.size(); ++j)
          if (!rel.equiv(succ[i].dst, succ[j].dst)) return false;
    }
  return true;
}

}  // namespace gfgcanon
