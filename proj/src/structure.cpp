#include "gfgcanon/structure.hpp"

#include <algorithm>

namespace gfgcanon {

void Digraph::add_edge(int u, int v) {
  auto& s = succ[u];
  auto it = std::lower_bound(s.begin(), s.end(), v);
  if (it == s.end() || *it != v) s.insert(it, v);
}

namespace {

// Iterative Tarjan; vertices are visited in ascending index order so the
// component numbering is canonical.
struct TarjanState {
  const Digraph& g;
  std::vector<int> index, lowlink, on_stack;
  std::vector<int> stack;
  std::vector<std::vector<int>> components;
  int counter = 0;

  explicit TarjanState(const Digraph& g)
      : g(g),
        index(g.num_vertices, -1),
        lowlink(g.num_vertices, 0),
        on_stack(g.num_vertices, 0) {}

  void run(int root) {
    // frame: (vertex, next successor position)
    std::vector<std::pair<int, size_t>> frames;
    frames.push_back({root, 0});
    index[root] = lowlink[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!frames.empty()) {
      auto& [v, next] = frames.back();
      if (next < g.succ[v].size()) {
        int w = g.succ[v][next++];
        if (index[w] == -1) {
          index[w] = lowlink[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          lowlink[v] = std::min(lowlink[v], index[w]);
        }
      } else {
        if (lowlink[v] == index[v]) {
          std::vector<int> comp;
          for (;;) {
            int w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            comp.push_back(w);
            if (w == v) break;
          }
          std::sort(comp.begin(), comp.end());
          components.push_back(std::move(comp));
        }
        int finished = v;
        frames.pop_back();
        if (!frames.empty()) {
          int parent = frames.back().first;
          lowlink[parent] = std::min(lowlink[parent], lowlink[finished]);
        }
      }
    }
  }
};

}  // namespace

std::vector<std::vector<int>> sccs(const Digraph& g) {
  TarjanState t(g);
  for (int v = 0; v < g.num_vertices; ++v)
    if (t.index[v] == -1) t.run(v);
  return t.components;
}

bool is_ergodic_scc(const Digraph& g,
                    const std::vector<std::vector<int>>& components,
                    int index) {
  std::vector<int> comp_of(g.num_vertices, -1);
  for (size_t c = 0; c < components.size(); ++c)
    for (int v : components[c]) comp_of[v] = static_cast<int>(c);
  for (int v : components[index])
    for (int w : g.succ[v])
      if (comp_of[w] != index) return false;
  return true;
}

Digraph nonalpha_graph(const TncwAutomaton& a) {
  Digraph g(a.num_states);
  for (const Transition& t : a.transitions)
    if (t.mark == Mark::NonAlpha) g.add_edge(t.src, t.dst);
  return g;
}

SafeDecomposition safe_components(const TncwAutomaton& a) {
  SafeDecomposition d;
  d.components = sccs(nonalpha_graph(a));
  // Number components by ascending least member (each is sorted already).
  std::sort(d.components.begin(), d.components.end(),
            [](const std::vector<int>& x, const std::vector<int>& y) {
              return x.front() < y.front();
            });
  d.component_of.assign(a.num_states, -1);
  for (size_t c = 0; c < d.components.size(); ++c) {
    d.sizes.push_back(static_cast<int>(d.components[c].size()));
    for (int q : d.components[c]) d.component_of[q] = static_cast<int>(c);
  }
  return d;
}

TncwAutomaton normalize(const TncwAutomaton& a) {
  SafeDecomposition d = safe_components(a);
  TncwAutomaton out = a;
  for (Transition& t : out.transitions)
    if (t.mark == Mark::NonAlpha &&
        d.component_of[t.src] != d.component_of[t.dst])
      t.mark = Mark::Alpha;
  out.canonicalize();
  return out;
}

bool is_safe_deterministic(const TncwAutomaton& a) {
  for (int q = 0; q < a.num_states; ++q)
    for (int s = 0; s < a.alphabet.size(); ++s) {
      int nonalpha = 0;
      for (const Transition& t : a.successors(q, s))
        if (t.mark == Mark::NonAlpha) ++nonalpha;
      if (nonalpha > 1) return false;
    }
  return true;
}

bool is_alpha_homogeneous(const TncwAutomaton& a) {
  for (int q = 0; q < a.num_states; ++q)
    for (int s = 0; s < a.alphabet.size(); ++s) {
      bool has_alpha = false, has_nonalpha = false;
      for (const Transition& t : a.successors(q, s))
        (t.mark == Mark::Alpha ? has_alpha : has_nonalpha) = true;
      if (has_alpha && has_nonalpha) return false;
    }
  return true;
}

bool is_normal(const TncwAutomaton& a) {
  SafeDecomposition d = safe_components(a);
  for (const Transition& t : a.transitions)
    if (t.mark == Mark::NonAlpha &&
        d.component_of[t.src] != d.component_of[t.dst])
      return false;
  return true;
}

}  // namespace gfgcanon
