#include "gfgcanon/fixtures.hpp"

#include <stdexcept>

namespace gfgcanon {

namespace {

constexpr Mark kA = Mark::Alpha;
constexpr Mark kN = Mark::NonAlpha;

TncwAutomaton make(const std::string& name, std::vector<std::string> letters,
                   int states, std::vector<Transition> transitions) {
  TncwAutomaton a;
  a.name = name;
  a.alphabet.letters = std::move(letters);
  a.num_states = states;
  a.initial = 0;
  a.transitions = std::move(transitions);
  a.canonicalize();
  require_valid(a);
  return a;
}

// Two equivalent 3-state tDCWs for "finitely many a's or finitely many b's":
// every letter change is penalized, either through a reset state (fig1a) or
// on the direct switch (fig1b). Same language, different graphs.
TncwAutomaton fig1a() {
  return make("fig1a", {"a", "b"}, 3,
              {{0, 0, 1, kN},
               {0, 1, 2, kN},
               {1, 0, 1, kN},
               {1, 1, 0, kA},
               {2, 0, 0, kA},
               {2, 1, 2, kN}});
}

TncwAutomaton fig1b() {
  return make("fig1b", {"a", "b"}, 3,
              {{0, 0, 1, kN},
               {0, 1, 2, kN},
               {1, 0, 1, kN},
               {1, 1, 2, kA},
               {2, 0, 1, kA},
               {2, 1, 2, kN}});
}

// A 3-state tDCW with safe components {0,1} and {2}: all states recognize
// the same language but their safe languages differ, and state 2's safe
// language (a-only) is contained in state 0's.
TncwAutomaton fig2() {
  return make("fig2", {"a", "b", "c"}, 3,
              {{0, 0, 0, kN},
               {0, 1, 1, kN},
               {0, 2, 0, kA},
               {1, 0, 2, kA},
               {1, 1, 1, kA},
               {1, 2, 0, kN},
               {2, 0, 2, kN},
               {2, 1, 1, kA},
               {2, 2, 0, kA}});
}

// The frontier automaton of fig2: states {0,1} with inherited non-alpha
// transitions and alpha transitions to both states wherever a letter had no
// safe successor.
TncwAutomaton fig4() {
  return make("fig4", {"a", "b", "c"}, 2,
              {{0, 0, 0, kN},
               {0, 1, 1, kN},
               {0, 2, 0, kA},
               {0, 2, 1, kA},
               {1, 0, 0, kA},
               {1, 0, 1, kA},
               {1, 1, 0, kA},
               {1, 1, 1, kA},
               {1, 2, 0, kN}});
}

// fig4 with one c-labeled alpha transition removed from state 0; the two
// choices give two minimal equivalent automata that are safe isomorphic but
// not isomorphic.
TncwAutomaton fig5c1() {
  TncwAutomaton a = fig4();
  a.name = "fig5c1";
  std::erase(a.transitions, Transition{0, 2, 0, kA});
  return a;
}

TncwAutomaton fig5c2() {
  TncwAutomaton a = fig4();
  a.name = "fig5c2";
  std::erase(a.transitions, Transition{0, 2, 1, kA});
  return a;
}

// Two non-isomorphic 2-state tDCWs for (b+c)* (bc)^omega; the forced
// non-alpha matching cannot respect the alpha transitions.
TncwAutomaton fig6d1() {
  return make("fig6d1", {"b", "c"}, 2,
              {{0, 0, 1, kN}, {0, 1, 0, kA}, {1, 0, 1, kA}, {1, 1, 0, kN}});
}

TncwAutomaton fig6d2() {
  return make("fig6d2", {"b", "c"}, 2,
              {{0, 0, 1, kN}, {0, 1, 0, kA}, {1, 0, 0, kA}, {1, 1, 0, kN}});
}

// The alpha-maximal form of fig4: all twelve triples are transitions, the
// three non-alpha ones unchanged.
TncwAutomaton fig7() {
  return make("fig7", {"a", "b", "c"}, 2,
              {{0, 0, 0, kN},
               {0, 0, 1, kA},
               {0, 1, 0, kA},
               {0, 1, 1, kN},
               {0, 2, 0, kA},
               {0, 2, 1, kA},
               {1, 0, 0, kA},
               {1, 0, 1, kA},
               {1, 1, 0, kA},
               {1, 1, 1, kA},
               {1, 2, 0, kN},
               {1, 2, 1, kA}});
}

}  // namespace

TncwAutomaton fixture(const std::string& name) {
  if (name == "fig1a") return fig1a();
  if (name == "fig1b") return fig1b();
  if (name == "fig2") return fig2();
  if (name == "fig4") return fig4();
  if (name == "fig5c1") return fig5c1();
  if (name == "fig5c2") return fig5c2();
  if (name == "fig6d1") return fig6d1();
  if (name == "fig6d2") return fig6d2();
  if (name == "fig7") return fig7();
  throw std::invalid_argument("unknown fixture '" + name + "'");
}

std::vector<std::string> fixture_names() {
  return {"fig1a", "fig1b", "fig2",   "fig4", "fig5c1",
          "fig5c2", "fig6d1", "fig6d2", "fig7"};
}

}  // namespace gfgcanon
