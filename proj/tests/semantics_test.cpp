#include <doctest.h>

#include "gfgcanon/fixtures.hpp"
#include "gfgcanon/semantics.hpp"
#include "gfgcanon/structure.hpp"
#include "test_util.hpp"

using namespace gfgcanon;
using testutil::build;
using testutil::universal;

namespace {

LassoWord lasso(std::vector<int> prefix, std::vector<int> period) {
  return {std::move(prefix), std::move(period)};
}

}  // namespace

TEST_CASE("the universal automaton accepts every lasso") {
  TncwAutomaton u = universal({"a", "b"});
  CHECK(lasso_member(u, lasso({}, {0})));
  CHECK(lasso_member(u, lasso({0, 1}, {1, 0})));
}

TEST_CASE("fig6d1 accepts (bc)^omega from state 0 and rejects b^omega") {
  TncwAutomaton d = fixture("fig6d1");
  CHECK(lasso_member(d, 0, lasso({}, {0, 1})));   // letters b, c
  CHECK(!lasso_member(d, 0, lasso({}, {0})));     // b^omega
}

TEST_CASE("fig1a accepts ab a^omega and rejects (ab)^omega") {
  TncwAutomaton a = fixture("fig1a");
  CHECK(lasso_member(a, lasso({0, 1}, {0})));
  CHECK(!lasso_member(a, lasso({}, {0, 1})));
}

TEST_CASE("lasso_member rejects malformed input") {
  TncwAutomaton u = universal({"a"});
  CHECK_THROWS_AS(lasso_member(u, lasso({}, {})), std::invalid_argument);
  CHECK_THROWS_AS(lasso_member(u, lasso({3}, {0})), std::invalid_argument);
}

TEST_CASE("breakpoint determinization agrees with lasso membership") {
  Rng rng(41);
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    // Nondeterministic instances: overlay two seeded deterministic ones.
    TncwAutomaton x = random_tdcw(2 * seed, 4, 2, 0.3);
    TncwAutomaton y = random_tdcw(2 * seed + 1, 4, 2, 0.5);
    TncwAutomaton a = x;
    a.transitions.insert(a.transitions.end(), y.transitions.begin(),
                         y.transitions.end());
    a.canonicalize();
    REQUIRE(validate(a).empty());

    BreakpointAutomaton bp = determinize_breakpoint(a);
    CHECK(bp.dcw.is_deterministic());
    CHECK(validate(bp.dcw).empty());
    for (int i = 0; i < 200; ++i) {
      LassoWord w = random_lasso(rng, 2, 6, 6);
      CHECK(lasso_member(a, w) == lasso_member(bp.dcw, w));
    }
  }
}

TEST_CASE("breakpoint of fig4 is equivalent to fig2") {
  BreakpointAutomaton bp = determinize_breakpoint(fixture("fig4"));
  CHECK(language_equiv(bp.dcw, fixture("fig2")));
}

TEST_CASE("det_contains is reflexive and orders universal/empty") {
  TncwAutomaton d = fixture("fig6d1");
  CHECK(det_contains(d, 0, d, 0));
  CHECK(det_contains(d, 1, d, 1));

  TncwAutomaton u = universal({"a"});
  TncwAutomaton e = testutil::empty_lang({"a"});
  CHECK(det_contains(e, 0, u, 0));
  CHECK(!det_contains(u, 0, e, 0));
}

TEST_CASE("det_contains agrees with lasso sampling on random pairs") {
  Rng rng(99);
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    TncwAutomaton a = random_tdcw(3 * seed, 1 + seed % 5, 2, 0.4);
    TncwAutomaton b = random_tdcw(7 * seed + 5, 1 + (seed + 2) % 5, 2, 0.4);
    bool contained = det_contains(a, a.initial, b, b.initial);
    bool refuted = false;
    for (int i = 0; i < 500 && !refuted; ++i) {
      LassoWord w = random_lasso(rng, 2, 5, 5);
      refuted = lasso_member(a, w) && !lasso_member(b, w);
    }
    // Sampling can only refute containment, never confirm it.
    if (refuted) CHECK(!contained);
    if (contained) CHECK(!refuted);
  }
}

TEST_CASE("det_contains is antisymmetric modulo language equality") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    TncwAutomaton a = testutil::corpus_instance(seed);
    TncwAutomaton b = testutil::corpus_instance(seed + 100);
    if (!(a.alphabet == b.alphabet)) continue;
    if (det_contains(a, a.initial, b, b.initial) &&
        det_contains(b, b.initial, a, a.initial))
      CHECK(language_equiv(a, b));
  }
}

TEST_CASE("fig2 relations: all states equivalent, safe languages ordered") {
  TncwAutomaton a = fixture("fig2");
  EquivRelations rel = compute_relations(a);
  for (int q = 0; q < 3; ++q)
    for (int s = 0; s < 3; ++s) CHECK(rel.equiv(q, s));
  CHECK(rel.safe_contained(2, 0));
  CHECK(!rel.strongly_equiv(2, 0));
  CHECK(rel.subsafe(2, 0));
  // all states differ in their safe language
  for (int q = 0; q < 3; ++q)
    for (int s = 0; s < 3; ++s)
      if (q != s) CHECK(!rel.strongly_equiv(q, s));
}

TEST_CASE("relations are reflexive, symmetric, transitive where required") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    TncwAutomaton a = testutil::corpus_instance(seed);
    EquivRelations rel = compute_relations(a);
    int n = a.num_states;
    for (int q = 0; q < n; ++q) {
      CHECK(rel.equiv(q, q));
      CHECK(rel.safe_contained(q, q));
    }
    for (int q = 0; q < n; ++q)
      for (int s = 0; s < n; ++s) {
        CHECK(rel.equiv(q, s) == rel.equiv(s, q));
        for (int t = 0; t < n; ++t) {
          if (rel.equiv(q, s) && rel.equiv(s, t)) CHECK(rel.equiv(q, t));
          if (rel.safe_contained(q, s) && rel.safe_contained(s, t))
            CHECK(rel.safe_contained(q, t));
        }
        CHECK(rel.strongly_equiv(q, s) ==
              (rel.subsafe(q, s) && rel.subsafe(s, q)));
      }
  }
}

TEST_CASE("safe containment matches a direct safe-lasso sweep") {
  // Safe membership of a lasso: membership in the non-alpha restriction,
  // with missing transitions made total through a rejecting sink.
  auto safe_automaton = [](const TncwAutomaton& a) {
    TncwAutomaton s = a;
    s.transitions.clear();
    s.num_states = a.num_states + 1;
    int sink = a.num_states;
    for (const Transition& t : a.transitions)
      if (t.mark == Mark::NonAlpha) s.transitions.push_back(t);
    for (int q = 0; q <= a.num_states; ++q)
      for (int l = 0; l < a.alphabet.size(); ++l) {
        bool has = false;
        for (const Transition& t : a.successors(std::min(q, a.num_states - 1), l))
          has |= q < a.num_states && t.mark == Mark::NonAlpha;
        if (!has || q == sink) s.transitions.push_back({q, l, sink, Mark::Alpha});
      }
    s.canonicalize();
    return s;
  };
  Rng rng(7);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    TncwAutomaton a = testutil::corpus_instance(seed);
    EquivRelations rel = compute_relations(a);
    TncwAutomaton s = safe_automaton(a);
    REQUIRE(validate(s).empty());
    for (int q = 0; q < a.num_states; ++q)
      for (int p = 0; p < a.num_states; ++p) {
        if (rel.safe_contained(q, p)) continue;
        // a violation must be observable by some sampled safe lasso
        bool witnessed = false;
        for (int i = 0; i < 400 && !witnessed; ++i) {
          LassoWord w = random_lasso(rng, a.alphabet.size(), 4, 4);
          witnessed = lasso_member(s, q, w) && !lasso_member(s, p, w);
        }
        // Sampling may miss long witnesses; only check the converse
        // direction strictly below.
        (void)witnessed;
      }
    // Strict direction: sampled safe behavior never contradicts the table.
    for (int i = 0; i < 300; ++i) {
      LassoWord w = random_lasso(rng, a.alphabet.size(), 4, 4);
      for (int q = 0; q < a.num_states; ++q)
        for (int p = 0; p < a.num_states; ++p)
          if (rel.safe_contained(q, p) && lasso_member(s, q, w))
            CHECK(lasso_member(s, p, w));
    }
  }
}

TEST_CASE("language_equiv basics") {
  TncwAutomaton a = fixture("fig2");
  CHECK(language_equiv(a, a));
  CHECK(language_equiv(fixture("fig5c1"), fixture("fig5c2")));
  CHECK(!language_equiv(fixture("fig1a"), universal({"a", "b"})));
}

TEST_CASE("semantically deterministic successors stay equivalent") {
  // On every semantically deterministic instance: equivalent sources step
  // to equivalent targets, for any shared letter.
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    TncwAutomaton a = testutil::corpus_instance(seed);
    EquivRelations rel = compute_relations(a);
    if (!is_semantically_deterministic(a, rel)) continue;
    for (const Transition& t : a.transitions)
      for (const Transition& u : a.transitions)
        if (t.letter == u.letter && rel.equiv(t.src, u.src))
          CHECK(rel.equiv(t.dst, u.dst));
  }
}
