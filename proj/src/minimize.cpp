#include "gfgcanon/minimize.hpp"

#include <algorithm>

#include "gfgcanon/oracle.hpp"

namespace gfgcanon {

TncwAutomaton niceify(const TncwAutomaton& a) {
  require_valid(a);
  TncwAutomaton r = normalize(restrict_to_reachable(a));
  r.name = a.name;
  if (r.is_deterministic()) return r;
  if (!is_safe_deterministic(r)) throw NiceifyError("safe determinism");
  EquivRelations rel = compute_relations(r);
  if (!is_semantically_deterministic(r, rel))
    throw NiceifyError("semantic determinism");
  std::vector<char> gfg = gfg_states(r);
  for (int q = 0; q < r.num_states; ++q)
    if (!gfg[q]) throw NiceifyError("state " + std::to_string(q) +
                                    " good-for-games");
  return r;
}

FrontierPlan compute_H(const TncwAutomaton& a, const EquivRelations& rel) {
  FrontierPlan plan;
  plan.decomposition = safe_components(a);
  const int k = static_cast<int>(plan.decomposition.components.size());
  plan.h.assign(k * k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      bool related = false;
      for (int q : plan.decomposition.components[i]) {
        for (int s : plan.decomposition.components[j])
          if (rel.subsafe(q, s)) {
            related = true;
            break;
          }
        if (related) break;
      }
      plan.h[i * k + j] = related;
    }
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      for (int l = 0; l < k; ++l)
        if (plan.h[i * k + j] && plan.h[j * k + l] && !plan.h[i * k + l])
          throw std::invalid_argument(
              "compute_H: relation not transitive; input is not nice");
  return plan;
}

FrontierPlan choose_frontier(const TncwAutomaton& a, FrontierPlan plan,
                             const EquivRelations& rel) {
  const int k = static_cast<int>(plan.decomposition.components.size());
  Digraph hg(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j && plan.H(i, j)) hg.add_edge(i, j);

  std::vector<std::vector<int>> hsccs = sccs(hg);
  plan.frontier.clear();
  for (size_t c = 0; c < hsccs.size(); ++c) {
    if (!is_ergodic_scc(hg, hsccs, static_cast<int>(c))) continue;
    // Components are numbered by least member, so the one holding the
    // globally least state is the least component index.
    plan.frontier.push_back(*std::min_element(hsccs[c].begin(), hsccs[c].end()));
  }
  std::sort(plan.frontier.begin(), plan.frontier.end());

  std::vector<char> in_frontier(k, 0);
  for (int c : plan.frontier) in_frontier[c] = 1;
  if (in_frontier[plan.decomposition.component_of[a.initial]]) {
    plan.chosen_initial = a.initial;
  } else {
    plan.chosen_initial = -1;
    for (int q = 0; q < a.num_states && plan.chosen_initial < 0; ++q)
      if (in_frontier[plan.decomposition.component_of[q]] &&
          rel.subsafe(a.initial, q))
        plan.chosen_initial = q;
    if (plan.chosen_initial < 0)
      throw std::logic_error(
          "choose_frontier: no frontier state covers the initial state");
  }
  return plan;
}

TncwAutomaton build_frontier_automaton(const TncwAutomaton& a,
                                       const FrontierPlan& plan,
                                       const EquivRelations& rel) {
  const int k = static_cast<int>(plan.decomposition.components.size());
  std::vector<char> in_frontier(k, 0);
  for (int c : plan.frontier) in_frontier[c] = 1;

  std::vector<int> retained;
  for (int q = 0; q < a.num_states; ++q)
    if (in_frontier[plan.decomposition.component_of[q]]) retained.push_back(q);
  std::vector<int> renum(a.num_states, -1);
  for (size_t i = 0; i < retained.size(); ++i) renum[retained[i]] = static_cast<int>(i);

  TncwAutomaton out;
  out.alphabet = a.alphabet;
  out.num_states = static_cast<int>(retained.size());
  out.initial = renum[plan.chosen_initial];

  for (int q : retained)
    for (int l = 0; l < a.alphabet.size(); ++l) {
      std::vector<int> safe_succ = a.successors(q, l, Mark::NonAlpha);
      if (!safe_succ.empty()) {
        // Inherited unchanged; normality keeps the targets retained.
        for (int dst : safe_succ)
          out.transitions.push_back({renum[q], l, renum[dst], Mark::NonAlpha});
        continue;
      }
      for (int dst : retained)
        for (int via : a.successors(q, l, Mark::Alpha))
          if (rel.equiv(dst, via)) {
            out.transitions.push_back({renum[q], l, renum[dst], Mark::Alpha});
            break;
          }
    }
  out.canonicalize();
  require_valid(out);
  return out;
}

QuotientMap quotient_map(const TncwAutomaton& b, const EquivRelations& rel) {
  QuotientMap qm;
  qm.class_of.assign(b.num_states, -1);
  for (int q = 0; q < b.num_states; ++q) {
    if (qm.class_of[q] >= 0) continue;
    int cls = static_cast<int>(qm.representative.size());
    qm.representative.push_back(q);
    for (int s = q; s < b.num_states; ++s)
      if (qm.class_of[s] < 0 && rel.strongly_equiv(q, s)) qm.class_of[s] = cls;
  }
  return qm;
}

TncwAutomaton quotient(const TncwAutomaton& b, const EquivRelations& rel) {
  if (!is_alpha_homogeneous(b))
    throw std::invalid_argument("quotient: input is not alpha-homogeneous");
  QuotientMap qm = quotient_map(b, rel);

  TncwAutomaton out;
  out.alphabet = b.alphabet;
  out.num_states = static_cast<int>(qm.representative.size());
  out.initial = qm.class_of[b.initial];
  for (const Transition& t : b.transitions)
    out.transitions.push_back(
        {qm.class_of[t.src], t.letter, qm.class_of[t.dst], t.mark});
  out.canonicalize();

  if (!is_alpha_homogeneous(out))
    throw std::logic_error("quotient: inherited mark is not well defined");
  require_valid(out);
  return out;
}

TncwAutomaton minimize(const TncwAutomaton& a) {
  TncwAutomaton nice = niceify(a);
  EquivRelations rel = compute_relations(nice);
  FrontierPlan plan = choose_frontier(nice, compute_H(nice, rel), rel);
  TncwAutomaton b = build_frontier_automaton(nice, plan, rel);
  EquivRelations rel_b = compute_relations(b);
  TncwAutomaton c = quotient(b, rel_b);
  c.name = a.name;
  return c;
}

bool is_safe_centralized(const TncwAutomaton& a, const EquivRelations& rel) {
  SafeDecomposition d = safe_components(a);
  for (int q = 0; q < a.num_states; ++q)
    for (int s = 0; s < a.num_states; ++s)
      if (rel.subsafe(q, s) && d.component_of[q] != d.component_of[s])
        return false;
  return true;
}

bool is_safe_minimal(const TncwAutomaton& a, const EquivRelations& rel) {
  for (int q = 0; q < a.num_states; ++q)
    for (int s = q + 1; s < a.num_states; ++s)
      if (rel.strongly_equiv(q, s)) return false;
  return true;
}

}  // namespace gfgcanon
