#include <doctest.h>

#include "gfgcanon/fixtures.hpp"
#include "gfgcanon/hoa.hpp"
#include "gfgcanon/random_gen.hpp"
#include "test_util.hpp"

using namespace gfgcanon;
using testutil::universal;

TEST_CASE("one-state all-nonalpha automaton serializes without marks") {
  std::string text = write_hoa(universal({"a"}));
  CHECK(text.find("Acceptance: 1 Fin(0)") != std::string::npos);
  CHECK(text.find("{0}") == std::string::npos);
}

TEST_CASE("write then parse is the identity on the value") {
  for (const std::string& name : fixture_names()) {
    TncwAutomaton a = fixture(name);
    TncwAutomaton b = parse_hoa(write_hoa(a));
    CHECK(b == a);
    // and writing the reparse reproduces the bytes
    CHECK(write_hoa(b) == write_hoa(a));
  }
}

TEST_CASE("round trip on random instances") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    TncwAutomaton a = testutil::corpus_instance(seed);
    CHECK(parse_hoa(write_hoa(a)) == a);
  }
}

TEST_CASE("serialization is deterministic across invocations") {
  TncwAutomaton a = fixture("fig4");
  CHECK(write_hoa(a) == write_hoa(a));
}

TEST_CASE("parse_hoa reads the fig2 fixture text") {
  TncwAutomaton a = parse_hoa(
      "HOA: v1\n"
      "States: 3\n"
      "Start: 0\n"
      "AP: 3 \"a\" \"b\" \"c\"\n"
      "acc-name: co-Buchi\n"
      "Acceptance: 1 Fin(0)\n"
      "--BODY--\n"
      "State: 0\n[0] 0\n[1] 1\n[2] 0 {0}\n"
      "State: 1\n[0] 2 {0}\n[1] 1 {0}\n[2] 0\n"
      "State: 2\n[0] 2\n[1] 1 {0}\n[2] 0 {0}\n"
      "--END--\n");
  CHECK(a == fixture("fig2"));
  CHECK(validate(a).empty());
}

TEST_CASE("parser rejects a Buchi acceptance name") {
  CHECK_THROWS_AS(parse_hoa("HOA: v1\nStates: 1\nStart: 0\nAP: 1 \"a\"\n"
                            "acc-name: Buchi\nAcceptance: 1 Inf(0)\n"
                            "--BODY--\nState: 0\n[0] 0\n--END--\n"),
                  HoaSemanticError);
}

TEST_CASE("parser rejects state-based acceptance") {
  CHECK_THROWS_AS(parse_hoa("HOA: v1\nStates: 1\nStart: 0\nAP: 1 \"a\"\n"
                            "Acceptance: 1 Fin(0)\n"
                            "--BODY--\nState: 0 {0}\n[0] 0\n--END--\n"),
                  HoaSemanticError);
}

TEST_CASE("parser rejects a non-total body") {
  try {
    parse_hoa("HOA: v1\nStates: 1\nStart: 0\nAP: 2 \"a\" \"b\"\n"
              "Acceptance: 1 Fin(0)\n--BODY--\nState: 0\n[0] 0\n--END--\n");
    FAIL("expected HoaSemanticError");
  } catch (const HoaSemanticError& e) {
    CHECK(std::string(e.what()).find("missing successor") !=
          std::string::npos);
  }
}

TEST_CASE("syntax errors carry line and column") {
  try {
    parse_hoa("HOA: v1\nStates: 1\nStart: 0\nAP: 1 \"a\"\n"
              "Acceptance: 1 Fin(0)\n--BODY--\nState: 0\n[0 0\n--END--\n");
    FAIL("expected HoaParseError");
  } catch (const HoaParseError& e) {
    CHECK(e.line == 8);
    CHECK(e.column > 0);
  }
}

TEST_CASE("dot export dashes exactly the alpha edges") {
  TncwAutomaton a = fixture("fig2");
  std::string dot = to_dot(a);
  int dashed = 0;
  for (size_t pos = 0; (pos = dot.find("style=dashed", pos)) != std::string::npos;
       ++pos)
    ++dashed;
  int alphas = 0;
  for (const Transition& t : a.transitions) alphas += t.mark == Mark::Alpha;
  CHECK(dashed == alphas);
  CHECK(dot.find("digraph") != std::string::npos);
}
