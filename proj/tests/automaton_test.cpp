#include <doctest.h>

#include "gfgcanon/automaton.hpp"
#include "gfgcanon/fixtures.hpp"
#include "test_util.hpp"

using namespace gfgcanon;
using testutil::build;
using testutil::universal;

TEST_CASE("validate accepts a total one-state loop") {
  CHECK(validate(universal({"a", "b"})).empty());
}

TEST_CASE("validate reports the missing successor") {
  TncwAutomaton a = universal({"a", "b"});
  std::erase(a.transitions, Transition{0, 1, 0, Mark::NonAlpha});
  std::vector<std::string> v = validate(a);
  REQUIRE(v.size() == 1);
  CHECK(v[0] == "missing successor (state 0, letter b)");
}

TEST_CASE("validate accepts every bundled fixture") {
  for (const std::string& name : fixture_names())
    CHECK(validate(fixture(name)).empty());
}

TEST_CASE("validate rejects duplicate and conflicting entries") {
  TncwAutomaton a = universal({"a"});
  a.transitions.push_back({0, 0, 0, Mark::NonAlpha});  // duplicate, unsorted
  CHECK(!validate(a).empty());

  TncwAutomaton b = universal({"a"});
  b.transitions.push_back({0, 0, 0, Mark::Alpha});  // both marks on a triple
  b.canonicalize();
  std::vector<std::string> v = validate(b);
  REQUIRE(v.size() == 1);
  CHECK(v[0].find("conflicting marks") != std::string::npos);
}

TEST_CASE("validate rejects out-of-range fields") {
  TncwAutomaton a = universal({"a"});
  a.initial = 3;
  CHECK(!validate(a).empty());

  TncwAutomaton b = universal({"a"});
  b.transitions.push_back({0, 0, 7, Mark::NonAlpha});
  CHECK(!validate(b).empty());
}

TEST_CASE("disjoint union doubles a with itself") {
  TncwAutomaton a = fixture("fig2");
  auto [u, offset] = disjoint_union(a, a);
  CHECK(offset == 3);
  CHECK(u.num_states == 6);
  CHECK(u.initial == a.initial);
  CHECK(validate(u).empty());
  for (const Transition& t : a.transitions) {
    CHECK(u.has_transition(t.src, t.letter, t.dst, t.mark));
    CHECK(u.has_transition(t.src + offset, t.letter, t.dst + offset, t.mark));
  }
}

TEST_CASE("disjoint union of fig2 and fig4 has 5 states") {
  auto [u, offset] = disjoint_union(fixture("fig2"), fixture("fig4"));
  CHECK(u.num_states == 5);
  CHECK(offset == 3);
}

TEST_CASE("disjoint union rejects alphabet mismatch") {
  CHECK_THROWS_AS(disjoint_union(fixture("fig2"), fixture("fig6d1")),
                  std::invalid_argument);
}

TEST_CASE("permute_states relabels and stays valid") {
  TncwAutomaton a = fixture("fig2");
  TncwAutomaton p = permute_states(a, {2, 0, 1});
  CHECK(validate(p).empty());
  CHECK(p.initial == 2);
  CHECK(p.has_transition(2, 0, 2, Mark::NonAlpha));  // old (0,a,0)
  CHECK(permute_states(p, {1, 2, 0}) == a);          // inverse permutation
}

TEST_CASE("restrict_to_reachable drops unreachable states") {
  // State 2 is unreachable from 0.
  TncwAutomaton a = build(3, {"a"},
                          {{0, 0, 1, Mark::NonAlpha},
                           {1, 0, 0, Mark::Alpha},
                           {2, 0, 0, Mark::NonAlpha}});
  TncwAutomaton r = restrict_to_reachable(a);
  CHECK(r.num_states == 2);
  CHECK(validate(r).empty());
  CHECK(r.has_transition(0, 0, 1, Mark::NonAlpha));
  CHECK(r.has_transition(1, 0, 0, Mark::Alpha));
}
