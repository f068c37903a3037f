/* gfgcanon_main.cpp -- command-line front end. Subcommands read HOA from a
 * file or stdin and write to a file or stdout, so stages compose through
 * pipes. Exit codes: 0 success, 1 negative decision, 2 usage, parse, or
 * bound errors. */

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gfgcanon/canon.hpp"
#include "gfgcanon/fixtures.hpp"
#include "gfgcanon/hoa.hpp"
#include "gfgcanon/iso.hpp"
#include "gfgcanon/minimize.hpp"
#include "gfgcanon/oracle.hpp"
#include "gfgcanon/random_gen.hpp"
#include "gfgcanon/semantics.hpp"
#include "gfgcanon/structure.hpp"

namespace {

using json = nlohmann::json;
using namespace gfgcanon;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

bool use_color() {
  const char* v = std::getenv("GFGCANON_COLOR");
  return v != nullptr && std::string(v) != "0" && std::string(v) != "";
}

void diagnostic(const std::string& msg) {
  if (use_color())
    std::cerr << "\033[31mgfgcanon: " << msg << "\033[0m\n";
  else
    std::cerr << "gfgcanon: " << msg << "\n";
}

std::string slurp(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "'");
  out << text;
}

TncwAutomaton load(const std::string& path) { return parse_hoa(slurp(path)); }

json witness_json(const IsoWitness& w) {
  return json{{"map", w.map},
              {"respects_nonalpha", w.respects_nonalpha},
              {"respects_alpha", w.respects_alpha}};
}

std::string lasso_text(const TncwAutomaton& a, const LassoWord& w) {
  std::string u, v;
  for (int l : w.prefix) u += a.alphabet.letters[l];
  for (int l : w.period) v += a.alphabet.letters[l];
  return "(" + u + ", " + v + ")";
}

struct GlobalOpts {
  bool serial = false;
  bool json_out = false;
  ExecPolicy policy() const {
    return serial ? ExecPolicy::Serial : kDefaultExecPolicy;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "minimization and canonization of transition-based co-Buchi automata "
      "(tDCW / GFG-tNCW)"};
  app.require_subcommand(1);
  GlobalOpts opts;
  app.add_flag("--serial", opts.serial,
               "run the data-parallel kernels on the serial reference path");
  app.add_flag("--json", opts.json_out, "structured JSON reports");

  std::string in_path, in2_path, out_path, mode = "max", fixture_name;
  int max_u = 4, max_v = 4, max_states = 3;
  std::int64_t max_enum = 1'000'000;
  bool safe_only = false, trace = false;
  int rnd_states = 3, rnd_letters = 2;
  double rnd_density = 0.3;
  std::uint64_t seed = 0;

  auto* validate_cmd = app.add_subcommand("validate", "check the invariants");
  validate_cmd->add_option("input", in_path, "HOA file (default stdin)");

  auto* sc = app.add_subcommand("safe-components",
                                "print the safe-component partition");
  sc->add_option("input", in_path);

  auto* relations_cmd =
      app.add_subcommand("relations", "dump the state relation tables");
  relations_cmd->add_option("input", in_path);

  auto* equiv_cmd =
      app.add_subcommand("equiv", "language equivalence of two automata");
  equiv_cmd->add_option("a", in_path)->required();
  equiv_cmd->add_option("b", in2_path)->required();

  auto* minimize_cmd = app.add_subcommand("minimize", "minimal GFG-tNCW");
  minimize_cmd->add_option("input", in_path);
  minimize_cmd->add_option("-o,--output", out_path);
  minimize_cmd->add_flag("--trace", trace,
                         "dump H, frontier, and class map as JSON to stderr");

  auto* canonize_cmd =
      app.add_subcommand("canonize", "canonical minimal form");
  canonize_cmd->add_option("input", in_path);
  canonize_cmd->add_option("-o,--output", out_path);
  canonize_cmd->add_option("--mode", mode, "max | homogeneous")
      ->check(CLI::IsMember({"max", "homogeneous"}));

  auto* iso_cmd = app.add_subcommand("iso", "isomorphism of two automata");
  iso_cmd->add_option("a", in_path)->required();
  iso_cmd->add_option("b", in2_path)->required();
  iso_cmd->add_flag("--safe-only", safe_only,
                    "only require the non-alpha transitions to match");

  auto* gfg_cmd = app.add_subcommand("verify-gfg",
                                     "solve the letter game for GFGness");
  gfg_cmd->add_option("input", in_path);

  auto* dbp_cmd =
      app.add_subcommand("dbp", "search for a deterministic pruning");
  dbp_cmd->add_option("input", in_path);
  dbp_cmd->add_option("-o,--output", out_path);
  dbp_cmd->add_option("--max-enum", max_enum, "enumeration bound");

  auto* lasso_cmd = app.add_subcommand(
      "lasso-equiv", "exhaustive bounded lasso equivalence check");
  lasso_cmd->add_option("a", in_path)->required();
  lasso_cmd->add_option("b", in2_path)->required();
  lasso_cmd->add_option("--max-u", max_u, "max prefix length");
  lasso_cmd->add_option("--max-v", max_v, "max period length");

  auto* mintdcw_cmd = app.add_subcommand(
      "search-min-tdcw", "bounded exhaustive search for a minimal tDCW");
  mintdcw_cmd->add_option("input", in_path);
  mintdcw_cmd->add_option("-o,--output", out_path);
  mintdcw_cmd->add_option("--max-states", max_states);
  mintdcw_cmd->add_option("--max-enum", max_enum, "enumeration bound");

  auto* dot_cmd = app.add_subcommand("dot", "Graphviz export");
  dot_cmd->add_option("input", in_path);
  dot_cmd->add_option("-o,--output", out_path);

  auto* random_cmd =
      app.add_subcommand("random", "emit a seeded random total tDCW");
  random_cmd->add_option("--states", rnd_states)->check(CLI::PositiveNumber);
  random_cmd->add_option("--letters", rnd_letters)->check(CLI::PositiveNumber);
  random_cmd->add_option("--alpha-density", rnd_density);
  random_cmd->add_option("--seed", seed)->required();
  random_cmd->add_option("-o,--output", out_path);

  auto* fixtures_cmd =
      app.add_subcommand("fixtures", "emit a bundled sample automaton");
  fixtures_cmd->add_option("name", fixture_name,
                           "one of: " + [] {
                             std::string s;
                             for (const std::string& n : fixture_names())
                               s += (s.empty() ? "" : ", ") + n;
                             return s;
                           }());
  fixtures_cmd->add_option("-o,--output", out_path);
  bool list_fixtures = false;
  fixtures_cmd->add_flag("--list", list_fixtures);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (validate_cmd->parsed()) {
      TncwAutomaton a;
      try {
        a = load(in_path);
      } catch (const HoaSemanticError& e) {
        // Report subset violations as a negative decision, not a crash.
        if (opts.json_out)
          std::cout << json{{"valid", false}, {"violations", {e.what()}}}
                    << "\n";
        else
          std::cout << e.what() << "\n";
        return kNegative;
      }
      std::vector<std::string> violations = validate(a);
      if (opts.json_out)
        std::cout << json{{"valid", violations.empty()},
                          {"violations", violations}}
                  << "\n";
      else
        for (const std::string& v : violations) std::cout << v << "\n";
      return violations.empty() ? kOk : kNegative;
    }

    if (sc->parsed()) {
      TncwAutomaton a = load(in_path);
      SafeDecomposition d = safe_components(a);
      for (const std::vector<int>& comp : d.components)
        std::cout << json(comp) << "\n";
      return kOk;
    }

    if (relations_cmd->parsed()) {
      TncwAutomaton a = load(in_path);
      EquivRelations rel = compute_relations(a, opts.policy());
      auto table = [&](auto&& f) {
        json rows = json::array();
        for (int q = 0; q < rel.n; ++q) {
          std::string row;
          for (int s = 0; s < rel.n; ++s) row += f(q, s) ? '1' : '0';
          rows.push_back(row);
        }
        return rows;
      };
      json out{{"equiv", table([&](int q, int s) { return rel.equiv(q, s); })},
               {"strongly_equiv", table([&](int q, int s) {
                  return rel.strongly_equiv(q, s);
                })},
               {"subsafe",
                table([&](int q, int s) { return rel.subsafe(q, s); })}};
      if (opts.json_out) {
        std::cout << out.dump(2) << "\n";
      } else {
        for (auto& [name, rows] : out.items()) {
          std::cout << name << ":\n";
          for (const auto& row : rows)
            std::cout << "  " << row.get<std::string>() << "\n";
        }
      }
      return kOk;
    }

    if (equiv_cmd->parsed()) {
      bool eq = language_equiv(load(in_path), load(in2_path));
      if (opts.json_out) std::cout << json{{"equivalent", eq}} << "\n";
      return eq ? kOk : kNegative;
    }

    if (minimize_cmd->parsed()) {
      TncwAutomaton a = load(in_path);
      if (trace) {
        TncwAutomaton nice = niceify(a);
        EquivRelations rel = compute_relations(nice, opts.policy());
        FrontierPlan plan = choose_frontier(nice, compute_H(nice, rel), rel);
        TncwAutomaton b = build_frontier_automaton(nice, plan, rel);
        EquivRelations rel_b = compute_relations(b, opts.policy());
        QuotientMap qm = quotient_map(b, rel_b);
        json h = json::array();
        int k = static_cast<int>(plan.decomposition.components.size());
        for (int i = 0; i < k; ++i) {
          std::string row;
          for (int j = 0; j < k; ++j) row += plan.H(i, j) ? '1' : '0';
          h.push_back(row);
        }
        std::cerr << json{{"components", plan.decomposition.components},
                          {"H", h},
                          {"frontier", plan.frontier},
                          {"chosen_initial", plan.chosen_initial},
                          {"class_of", qm.class_of}}
                         .dump(2)
                  << "\n";
        emit(out_path, write_hoa(quotient(b, rel_b)));
      } else {
        emit(out_path, write_hoa(minimize(a)));
      }
      return kOk;
    }

    if (canonize_cmd->parsed()) {
      TncwAutomaton a = load(in_path);
      CanonFlavor flavor =
          mode == "max" ? CanonFlavor::Max : CanonFlavor::Homogeneous;
      emit(out_path, write_hoa(canonical_form(a, flavor)));
      return kOk;
    }

    if (iso_cmd->parsed()) {
      TncwAutomaton a = load(in_path), b = load(in2_path);
      IsoResult r = safe_only ? safe_isomorphic(a, b) : isomorphic(a, b);
      if (r.ok()) {
        std::cout << witness_json(*r.witness).dump(2) << "\n";
        return kOk;
      }
      std::cout << json{{"refusal", r.refusal}}.dump(2) << "\n";
      return kNegative;
    }

    if (gfg_cmd->parsed()) {
      TncwAutomaton a = load(in_path);
      GfgResult r = gfg_verify(a);
      if (!r.ok()) {
        std::cout << json{{"gfg", false}, {"refusal", r.refusal}}.dump(2)
                  << "\n";
        return kNegative;
      }
      if (opts.json_out) {
        json moves = json::array();
        for (size_t i = 0; i < r.strategy->positions.size(); ++i) {
          json row = json::array();
          for (const Transition& t : r.strategy->moves[i])
            row.push_back(json{{"letter", a.alphabet.letters[t.letter]},
                               {"dst", t.dst},
                               {"alpha", t.mark == Mark::Alpha}});
          moves.push_back(json{{"state", r.strategy->positions[i].first},
                               {"monitor", r.strategy->positions[i].second},
                               {"moves", row}});
        }
        std::cout << json{{"gfg", true},
                          {"memory_states", r.strategy->positions.size()},
                          {"strategy", moves}}
                         .dump(2)
                  << "\n";
      } else {
        std::cout << "GFG: strategy with " << r.strategy->positions.size()
                  << " memory states\n";
      }
      return kOk;
    }

    if (dbp_cmd->parsed()) {
      TncwAutomaton a = load(in_path);
      std::optional<TncwAutomaton> pruning =
          dbp_check(a, max_enum, opts.policy());
      if (!pruning) {
        std::cout << json{{"dbp", false}}.dump(2) << "\n";
        return kNegative;
      }
      emit(out_path, write_hoa(*pruning));
      return kOk;
    }

    if (lasso_cmd->parsed()) {
      TncwAutomaton a = load(in_path), b = load(in2_path);
      std::optional<LassoWord> cex =
          lasso_equiv_bounded(a, b, max_u, max_v, opts.policy());
      if (!cex) {
        if (opts.json_out) std::cout << json{{"pass", true}} << "\n";
        return kOk;
      }
      if (opts.json_out)
        std::cout << json{{"pass", false},
                          {"prefix", cex->prefix},
                          {"period", cex->period}}
                  << "\n";
      else
        std::cout << "counterexample " << lasso_text(a, *cex) << "\n";
      return kNegative;
    }

    if (mintdcw_cmd->parsed()) {
      TncwAutomaton a = load(in_path);
      std::optional<TncwAutomaton> best =
          min_tdcw_search_bounded(a, max_states, max_enum, opts.policy());
      if (!best) {
        std::cout << json{{"found", false}, {"max_states", max_states}}.dump(2)
                  << "\n";
        return kNegative;
      }
      emit(out_path, write_hoa(*best));
      return kOk;
    }

    if (dot_cmd->parsed()) {
      emit(out_path, to_dot(load(in_path)));
      return kOk;
    }

    if (random_cmd->parsed()) {
      emit(out_path,
           write_hoa(random_tdcw(seed, rnd_states, rnd_letters, rnd_density)));
      return kOk;
    }

    if (fixtures_cmd->parsed()) {
      if (list_fixtures) {
        for (const std::string& n : fixture_names()) std::cout << n << "\n";
        return kOk;
      }
      if (fixture_name.empty()) {
        diagnostic("fixtures: name required (or --list)");
        return kUsage;
      }
      emit(out_path, write_hoa(fixture(fixture_name)));
      return kOk;
    }
  } catch (const HoaParseError& e) {
    diagnostic(std::string("parse error: ") + e.what());
    return kUsage;
  } catch (const HoaSemanticError& e) {
    diagnostic(std::string("unsupported input: ") + e.what());
    return kUsage;
  } catch (const BoundExceededError& e) {
    diagnostic(e.what());
    return kUsage;
  } catch (const NiceifyError& e) {
    diagnostic(e.what());
    return kUsage;
  } catch (const std::exception& e) {
    diagnostic(e.what());
    return kUsage;
  }
  return kUsage;
}
