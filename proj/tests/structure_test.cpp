#include <doctest.h>

#include <algorithm>

#include "gfgcanon/fixtures.hpp"
#include "gfgcanon/semantics.hpp"
#include "gfgcanon/structure.hpp"
#include "test_util.hpp"

using namespace gfgcanon;
using testutil::build;

namespace {

// Independent SCC oracle: pairwise reachability by transitive closure.
std::vector<std::vector<int>> scc_oracle(const Digraph& g) {
  int n = g.num_vertices;
  std::vector<char> reach(n * n, 0);
  for (int v = 0; v < n; ++v) {
    reach[v * n + v] = 1;
    for (int w : g.succ[v]) reach[v * n + w] = 1;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (reach[i * n + k] && reach[k * n + j]) reach[i * n + j] = 1;
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(n, 0);
  for (int v = 0; v < n; ++v) {
    if (seen[v]) continue;
    std::vector<int> comp;
    for (int w = 0; w < n; ++w)
      if (reach[v * n + w] && reach[w * n + v]) {
        comp.push_back(w);
        seen[w] = 1;
      }
    comps.push_back(comp);
  }
  return comps;
}

Digraph random_digraph(std::uint64_t seed, int n) {
  Rng rng(seed);
  Digraph g(n);
  int edges = rng.below(2 * n + 1);
  for (int i = 0; i < edges; ++i) g.add_edge(rng.below(n), rng.below(n));
  return g;
}

std::vector<std::vector<int>> sorted_partition(
    std::vector<std::vector<int>> p) {
  for (std::vector<int>& c : p) std::sort(c.begin(), c.end());
  std::sort(p.begin(), p.end());
  return p;
}

}  // namespace

TEST_CASE("sccs on trivial graphs") {
  Digraph single(1);
  CHECK(sccs(single).size() == 1);

  Digraph cycle(3);
  cycle.add_edge(0, 1);
  cycle.add_edge(1, 2);
  cycle.add_edge(2, 0);
  std::vector<std::vector<int>> comps = sccs(cycle);
  REQUIRE(comps.size() == 1);
  CHECK(comps[0] == std::vector<int>{0, 1, 2});
}

TEST_CASE("sccs match the transitive-closure oracle on random digraphs") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    Digraph g = random_digraph(seed, 1 + static_cast<int>(seed % 8));
    CHECK(sorted_partition(sccs(g)) == sorted_partition(scc_oracle(g)));
  }
}

TEST_CASE("sccs come out in reverse topological order") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    Digraph g = random_digraph(seed, 1 + static_cast<int>(seed % 8));
    std::vector<std::vector<int>> comps = sccs(g);
    std::vector<int> pos(g.num_vertices);
    for (size_t c = 0; c < comps.size(); ++c)
      for (int v : comps[c]) pos[v] = static_cast<int>(c);
    for (int v = 0; v < g.num_vertices; ++v)
      for (int w : g.succ[v])
        CHECK(pos[w] <= pos[v]);  // successors are emitted first
  }
}

TEST_CASE("safe components of fig2 are {0,1} and {2}") {
  SafeDecomposition d = safe_components(fixture("fig2"));
  REQUIRE(d.components.size() == 2);
  CHECK(d.components[0] == std::vector<int>{0, 1});
  CHECK(d.components[1] == std::vector<int>{2});
  CHECK(d.sizes == std::vector<int>{2, 1});
  CHECK(d.component_of == std::vector<int>{0, 0, 1});
}

TEST_CASE("all-alpha automaton splits into singletons") {
  TncwAutomaton a = testutil::empty_lang({"a", "b"});
  auto [u, offset] = disjoint_union(a, a);
  // make it connected but all-alpha
  u.transitions.push_back({0, 0, 1, Mark::Alpha});
  u.canonicalize();
  SafeDecomposition d = safe_components(u);
  CHECK(d.components.size() == 2);
  for (int s : d.sizes) CHECK(s == 1);
}

TEST_CASE("strongly connected non-alpha automaton is one component") {
  TncwAutomaton a = build(2, {"a"},
                          {{0, 0, 1, Mark::NonAlpha}, {1, 0, 0, Mark::NonAlpha}});
  CHECK(safe_components(a).components.size() == 1);
}

TEST_CASE("normalize re-marks the connecting edge") {
  // Two singleton safe components joined by a non-alpha edge.
  TncwAutomaton a = build(2, {"a", "b"},
                          {{0, 0, 0, Mark::Alpha},
                           {0, 1, 1, Mark::NonAlpha},
                           {1, 0, 1, Mark::Alpha},
                           {1, 1, 1, Mark::Alpha}});
  TncwAutomaton n = normalize(a);
  CHECK(n.has_transition(0, 1, 1, Mark::Alpha));
  CHECK(is_normal(n));
  CHECK(!is_normal(a));
}

TEST_CASE("normalize is idempotent and keeps the graph") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    TncwAutomaton a = testutil::corpus_instance(seed);
    TncwAutomaton n = normalize(a);
    CHECK(normalize(n) == n);
    // same transition set modulo marks
    CHECK(n.transitions.size() == a.transitions.size());
    for (const Transition& t : a.transitions)
      CHECK(n.has_transition(t.src, t.letter, t.dst));
    // the partition is unchanged
    CHECK(safe_components(n).component_of == safe_components(a).component_of);
  }
}

TEST_CASE("normalize keeps an already-normal automaton") {
  TncwAutomaton a = fixture("fig2");
  CHECK(normalize(a) == a);
}

TEST_CASE("normalize preserves the language (determinization oracle)") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    TncwAutomaton a = testutil::corpus_instance(seed);
    if (a.num_states > 6) continue;
    CHECK(language_equiv(a, normalize(a)));
  }
}

TEST_CASE("syntactic predicates on the fixtures") {
  TncwAutomaton fig2 = fixture("fig2");
  CHECK(is_safe_deterministic(fig2));
  CHECK(is_alpha_homogeneous(fig2));  // deterministic, hence homogeneous
  CHECK(is_normal(fig2));

  TncwAutomaton fig4 = fixture("fig4");
  CHECK(is_alpha_homogeneous(fig4));
  CHECK(is_safe_deterministic(fig4));

  EquivRelations rel = compute_relations(fig4);
  CHECK(is_semantically_deterministic(fig4, rel));
}

TEST_CASE("deterministic automata pass all four predicates") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    TncwAutomaton a = normalize(testutil::corpus_instance(seed));
    CHECK(is_safe_deterministic(a));
    CHECK(is_alpha_homogeneous(a));
    CHECK(is_normal(a));
    CHECK(is_semantically_deterministic(a, compute_relations(a)));
  }
}

TEST_CASE("two non-alpha sigma-successors break safe determinism") {
  TncwAutomaton a = build(2, {"a"},
                          {{0, 0, 0, Mark::NonAlpha},
                           {0, 0, 1, Mark::NonAlpha},
                           {1, 0, 1, Mark::NonAlpha}});
  CHECK(validate(a).empty());
  CHECK(!is_safe_deterministic(a));

  TncwAutomaton b = build(2, {"a"},
                          {{0, 0, 0, Mark::NonAlpha},
                           {0, 0, 1, Mark::Alpha},
                           {1, 0, 1, Mark::NonAlpha}});
  CHECK(validate(b).empty());
  CHECK(!is_alpha_homogeneous(b));
}
