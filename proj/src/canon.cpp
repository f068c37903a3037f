#include "gfgcanon/canon.hpp"

#include <stdexcept>

#include "gfgcanon/minimize.hpp"
#include "gfgcanon/structure.hpp"

namespace gfgcanon {

namespace {

void require_nice_syntactic(const TncwAutomaton& a, const EquivRelations& rel,
                            const char* who) {
  require_valid(a);
  if (restrict_to_reachable(a).num_states != a.num_states)
    throw std::invalid_argument(std::string(who) +
                                ": input has unreachable states");
  if (!is_normal(a))
    throw std::invalid_argument(std::string(who) + ": input is not normal");
  if (!is_safe_deterministic(a))
    throw std::invalid_argument(std::string(who) +
                                ": input is not safe-deterministic");
  if (!is_semantically_deterministic(a, rel))
    throw std::invalid_argument(std::string(who) +
                                ": input is not semantically deterministic");
}

}  // namespace

bool allowed(const TncwAutomaton& a, const EquivRelations& rel, int q,
             int letter, int s) {
  for (const Transition& t : a.successors(q, letter))
    if (rel.equiv(t.dst, s)) return true;
  return false;
}

std::vector<Transition> allowed_set(const TncwAutomaton& a,
                                    const EquivRelations& rel) {
  std::vector<Transition> out;
  for (int q = 0; q < a.num_states; ++q)
    for (int l = 0; l < a.alphabet.size(); ++l)
      for (int s = 0; s < a.num_states; ++s)
        if (allowed(a, rel, q, l, s))
          out.push_back({q, l, s, Mark::Alpha});
  return out;
}

TncwAutomaton saturate_max(const TncwAutomaton& a, const EquivRelations& rel) {
  require_nice_syntactic(a, rel, "saturate_max");
  TncwAutomaton out = a;
  for (const Transition& t : allowed_set(a, rel))
    if (!a.has_transition(t.src, t.letter, t.dst)) out.transitions.push_back(t);
  out.canonicalize();
  return out;
}

TncwAutomaton saturate_homogeneous(const TncwAutomaton& a,
                                   const EquivRelations& rel) {
  require_nice_syntactic(a, rel, "saturate_homogeneous");
  if (!is_alpha_homogeneous(a))
    throw std::invalid_argument(
        "saturate_homogeneous: input is not alpha-homogeneous");
  TncwAutomaton out = a;
  for (int q = 0; q < a.num_states; ++q)
    for (int l = 0; l < a.alphabet.size(); ++l) {
      if (!a.successors(q, l, Mark::NonAlpha).empty()) continue;
      for (int s = 0; s < a.num_states; ++s)
        if (!a.has_transition(q, l, s) && allowed(a, rel, q, l, s))
          out.transitions.push_back({q, l, s, Mark::Alpha});
    }
  out.canonicalize();
  return out;
}

TncwAutomaton canonical_form(const TncwAutomaton& a, CanonFlavor flavor) {
  TncwAutomaton c = minimize(a);
  EquivRelations rel = compute_relations(c);
  TncwAutomaton out = flavor == CanonFlavor::Max
                          ? saturate_max(c, rel)
                          : saturate_homogeneous(c, rel);
  out.name = a.name;
  return out;
}

bool is_alpha_maximal(const TncwAutomaton& a, const EquivRelations& rel) {
  for (const Transition& t : allowed_set(a, rel))
    if (!a.has_transition(t.src, t.letter, t.dst)) return false;
  return true;
}

bool is_alpha_maximal_up_to_homogeneity(const TncwAutomaton& a,
                                        const EquivRelations& rel) {
  if (!is_alpha_homogeneous(a)) return false;
  for (int q = 0; q < a.num_states; ++q)
    for (int l = 0; l < a.alphabet.size(); ++l) {
      if (!a.successors(q, l, Mark::NonAlpha).empty()) continue;
      for (int s = 0; s < a.num_states; ++s)
        if (allowed(a, rel, q, l, s) && !a.has_transition(q, l, s))
          return false;
    }
  return true;
}

}  // namespace gfgcanon
