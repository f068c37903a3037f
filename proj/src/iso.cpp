#include "gfgcanon/iso.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "gfgcanon/semantics.hpp"
#include "gfgcanon/structure.hpp"

namespace gfgcanon {

namespace {

bool respects(const TncwAutomaton& a, const TncwAutomaton& b,
              const std::vector<int>& map, Mark mark) {
  if (static_cast<int>(map.size()) != a.num_states ||
      a.num_states != b.num_states)
    return false;
  std::vector<char> hit(b.num_states, 0);
  for (int v : map) {
    if (v < 0 || v >= b.num_states || hit[v]) return false;
    hit[v] = 1;
  }
  for (int q = 0; q < a.num_states; ++q)
    for (int l = 0; l < a.alphabet.size(); ++l)
      for (int s = 0; s < a.num_states; ++s)
        if (a.has_transition(q, l, s, mark) !=
            b.has_transition(map[q], l, map[s], mark))
          return false;
  return true;
}

// Per-state structural invariants of the non-alpha graph; equal profiles are
// necessary for any non-alpha-respecting bijection.
struct StateProfile {
  std::vector<int> data;
  bool operator==(const StateProfile&) const = default;
  bool operator<(const StateProfile& o) const { return data < o.data; }
};

StateProfile profile_of(const TncwAutomaton& a, int q) {
  StateProfile p;
  std::vector<int> in_deg(a.alphabet.size(), 0);
  for (const Transition& t : a.transitions)
    if (t.mark == Mark::NonAlpha && t.dst == q) ++in_deg[t.letter];
  for (int l = 0; l < a.alphabet.size(); ++l) {
    p.data.push_back(
        static_cast<int>(a.successors(q, l, Mark::NonAlpha).size()));
    p.data.push_back(in_deg[l]);
  }
  return p;
}

struct ComponentSignature {
  int size;
  std::vector<StateProfile> profiles;  // sorted
  bool operator==(const ComponentSignature&) const = default;
  bool operator<(const ComponentSignature& o) const {
    return std::tie(size, profiles) < std::tie(o.size, o.profiles);
  }
};

// Backtracking over all non-alpha-respecting bijections; calls sink on each
// complete candidate until sink returns true. Returns whether sink accepted.
class SafeIsoSearch {
 public:
  SafeIsoSearch(const TncwAutomaton& a, const TncwAutomaton& b)
      : a_(a), b_(b), da_(safe_components(a)), db_(safe_components(b)) {}

  // Empty on success; otherwise a structural refusal certificate.
  std::string structural_mismatch() {
    if (a_.num_states != b_.num_states) return "state-count mismatch";
    std::vector<ComponentSignature> sa, sb;
    for (const std::vector<int>& c : da_.components)
      sa.push_back(signature(a_, c));
    for (const std::vector<int>& c : db_.components)
      sb.push_back(signature(b_, c));
    auto sorted = [](std::vector<ComponentSignature> v) {
      std::sort(v.begin(), v.end());
      return v;
    };
    if (sorted(sa) != sorted(sb))
      return "safe-component size/degree profile mismatch";
    return "";
  }

  template <typename Sink>
  bool enumerate(Sink&& sink) {
    const int k = static_cast<int>(da_.components.size());
    if (k != static_cast<int>(db_.components.size())) return false;
    comp_image_.assign(k, -1);
    comp_used_.assign(k, 0);
    map_.assign(a_.num_states, -1);
    used_.assign(b_.num_states, 0);
    return pair_components(0, sink);
  }

 private:
  static ComponentSignature signature(const TncwAutomaton& aut,
                                      const std::vector<int>& comp) {
    ComponentSignature s;
    s.size = static_cast<int>(comp.size());
    for (int q : comp) s.profiles.push_back(profile_of(aut, q));
    std::sort(s.profiles.begin(), s.profiles.end());
    return s;
  }

  template <typename Sink>
  bool pair_components(int ci, Sink&& sink) {
    const int k = static_cast<int>(da_.components.size());
    if (ci == k) return assign_states(0, sink);
    ComponentSignature want = signature(a_, da_.components[ci]);
    for (int cj = 0; cj < k; ++cj) {
      if (comp_used_[cj]) continue;
      if (!(signature(b_, db_.components[cj]) == want)) continue;
      comp_image_[ci] = cj;
      comp_used_[cj] = 1;
      if (pair_components(ci + 1, sink)) return true;
      comp_used_[cj] = 0;
      comp_image_[ci] = -1;
    }
    return false;
  }

  // States ordered by (component, index); candidates come from the paired
  // component.
  template <typename Sink>
  bool assign_states(int idx, Sink&& sink) {
    if (idx == a_.num_states) return sink(map_);
    int q = state_order(idx);
    const std::vector<int>& pool =
        db_.components[comp_image_[da_.component_of[q]]];
    StateProfile pq = profile_of(a_, q);
    for (int s : pool) {
      if (used_[s]) continue;
      if (!(profile_of(b_, s) == pq)) continue;
      if (!consistent(q, s)) continue;
      map_[q] = s;
      used_[s] = 1;
      if (assign_states(idx + 1, sink)) return true;
      used_[s] = 0;
      map_[q] = -1;
    }
    return false;
  }

  int state_order(int idx) const {
    // Flattened component-major order of a's states.
    int seen = 0;
    for (const std::vector<int>& c : da_.components) {
      if (idx - seen < static_cast<int>(c.size())) return c[idx - seen];
      seen += static_cast<int>(c.size());
    }
    throw std::logic_error("state_order: index out of range");
  }

  // Partial consistency of mapping q -> s against already-assigned states.
  bool consistent(int q, int s) const {
    for (int l = 0; l < a_.alphabet.size(); ++l) {
      for (int p = 0; p < a_.num_states; ++p) {
        if (map_[p] < 0 && p != q) continue;
        int pm = p == q ? s : map_[p];
        if (a_.has_transition(q, l, p, Mark::NonAlpha) !=
            b_.has_transition(s, l, pm, Mark::NonAlpha))
          return false;
        if (a_.has_transition(p, l, q, Mark::NonAlpha) !=
            b_.has_transition(pm, l, s, Mark::NonAlpha))
          return false;
      }
    }
    return true;
  }

  const TncwAutomaton& a_;
  const TncwAutomaton& b_;
  SafeDecomposition da_, db_;
  std::vector<int> comp_image_, map_;
  std::vector<char> comp_used_, used_;
};

// The strong-equivalence matching on safe-minimal inputs: the only possible
// safe-isomorphism candidate. Empty if inapplicable or no full matching.
std::vector<int> equiv_matching(const TncwAutomaton& a,
                                const TncwAutomaton& b) {
  if (!is_safe_deterministic(a) || !is_safe_deterministic(b)) return {};
  if (a.num_states != b.num_states) return {};
  EquivRelations rel;
  int offset;
  try {
    auto [u, off] = disjoint_union(a, b);
    offset = off;
    rel = compute_relations(u);
  } catch (const std::invalid_argument&) {
    return {};  // out of the fast path's supported range
  }
  for (int q = 0; q < a.num_states; ++q)
    for (int s = q + 1; s < a.num_states; ++s)
      if (rel.strongly_equiv(q, s)) return {};  // a not safe-minimal
  for (int q = 0; q < b.num_states; ++q)
    for (int s = q + 1; s < b.num_states; ++s)
      if (rel.strongly_equiv(offset + q, offset + s)) return {};

  std::vector<int> map(a.num_states, -1);
  std::vector<char> used(b.num_states, 0);
  for (int q = 0; q < a.num_states; ++q) {
    for (int s = 0; s < b.num_states; ++s)
      if (!used[s] && rel.strongly_equiv(q, offset + s)) {
        map[q] = s;
        used[s] = 1;
        break;  // partners are unique under safe-minimality
      }
    if (map[q] < 0) return {};
  }
  return map;
}

IsoResult search(const TncwAutomaton& a, const TncwAutomaton& b,
                 bool need_alpha) {
  if (!(a.alphabet == b.alphabet))
    throw std::invalid_argument("isomorphism check: alphabet mismatch");
  require_valid(a);
  require_valid(b);

  auto make_witness = [&](const std::vector<int>& map) -> IsoWitness {
    IsoWitness w;
    w.map = map;
    w.respects_nonalpha = verify_nonalpha_respecting(a, b, map);
    w.respects_alpha = verify_alpha_respecting(a, b, map);
    return w;
  };

  std::vector<int> fast = equiv_matching(a, b);
  if (!fast.empty()) {
    IsoWitness w = make_witness(fast);
    if (w.respects_nonalpha && (!need_alpha || w.respects_alpha))
      return {w, ""};
  }

  SafeIsoSearch searcher(a, b);
  std::string mismatch = searcher.structural_mismatch();
  if (!mismatch.empty()) return {std::nullopt, mismatch};

  IsoResult out;
  searcher.enumerate([&](const std::vector<int>& map) {
    IsoWitness w = make_witness(map);
    if (!w.respects_nonalpha) return false;  // should not happen; keep honest
    if (need_alpha && !w.respects_alpha) return false;
    out.witness = w;
    return true;
  });
  if (!out.witness)
    out.refusal = need_alpha
                      ? "search exhausted: no bijection respects both "
                        "transition tables"
                      : "search exhausted: no bijection respects the "
                        "non-alpha transitions";
  return out;
}

}  // namespace

bool verify_nonalpha_respecting(const TncwAutomaton& a, const TncwAutomaton& b,
                                const std::vector<int>& map) {
  return respects(a, b, map, Mark::NonAlpha);
}

bool verify_alpha_respecting(const TncwAutomaton& a, const TncwAutomaton& b,
                             const std::vector<int>& map) {
  return respects(a, b, map, Mark::Alpha);
}

IsoResult safe_isomorphic(const TncwAutomaton& a, const TncwAutomaton& b) {
  return search(a, b, false);
}

IsoResult isomorphic(const TncwAutomaton& a, const TncwAutomaton& b) {
  return search(a, b, true);
}

}  // namespace gfgcanon
