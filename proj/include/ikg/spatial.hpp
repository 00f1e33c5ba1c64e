#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ikg/canon.hpp"
#include "ikg/cycles.hpp"
#include "ikg/diagram.hpp"
#include "ikg/fixtures.hpp"
#include "ikg/invariants.hpp"

namespace ikg {

enum class CensusMode { A2OverCycles, LkOverPairs };

struct CensusResult {
  int parity = 0;
  std::vector<long long> values;
  std::vector<std::size_t> odd;  // indices into scope
};

inline long long tuple_invariant(const SpatialDiagram& d, const CycleTuple& t, CensusMode mode) {
  auto l = extract_gauss(d, t);
  return mode == CensusMode::A2OverCycles ? a2(l) : linking_number(l);
}

inline CensusResult parity_census(const SpatialDiagram& d, CensusMode mode, const std::vector<CycleTuple>& scope) {
  CensusResult r;
  long long sum = 0;
  for (std::size_t i = 0; i < scope.size(); ++i) {
    long long v = tuple_invariant(d, scope[i], mode);
    r.values.push_back(v);
    sum += v;
    if (mod2(v)) r.odd.push_back(i);
  }
  r.parity = mod2(sum);
  return r;
}

inline std::vector<CycleTuple> singletons(const std::vector<CycleSubgraph>& cs) {
  std::vector<CycleTuple> out;
  for (const auto& c : cs) out.push_back(CycleTuple{{c}});
  return out;
}

// The two elements of Γ^(2)(D4) in fixture labels: the 1-2 and 3-4 digons,
// and the 2-3 and 4-1 digons.
inline std::array<CycleTuple, 2> d4_pairs() {
  return {make_tuple({CycleSubgraph{{0, 1}}, CycleSubgraph{{4, 5}}}),
          make_tuple({CycleSubgraph{{2, 3}}, CycleSubgraph{{6, 7}}})};
}

struct D4Evaluation {
  long long lk_lambda = 0;
  long long lk_lambda_prime = 0;
  int alpha = 0;
  bool both_odd() const { return mod2(lk_lambda) && mod2(lk_lambda_prime); }
};

// Images in g of the sixteen 4-cycles and the two elements of Γ^(2)(D4)
// under a D4 model; they depend only on the graph, not on the crossings.
struct D4Lift {
  std::vector<CycleSubgraph> four_cycles;
  CycleTuple lambda, lambda_prime;
};

inline D4Lift lift_d4(const MultiGraph& g, const MinorModel& model) {
  const MultiGraph h = d4_graph();
  CycleLifter lift(g, h, model);
  auto pairs = d4_pairs();
  D4Lift out;
  for (const auto& c : cycles_of_length(h, 4)) out.four_cycles.push_back(lift.lift(c));
  out.lambda = lift.lift(pairs[0]);
  out.lambda_prime = lift.lift(pairs[1]);
  return out;
}

// Model of D4 in a graph isomorphic to it, with singleton branch sets.
inline MinorModel d4_identity_model(const MultiGraph& g) {
  const MultiGraph h = d4_graph();
  auto iso = is_isomorphic(h, g);
  if (!iso) throw graph_error("alpha: graph is not D4 and no model was given");
  MinorModel m;
  for (auto [x, y] : *iso) m.branch_sets[x] = {y};
  std::set<std::pair<VertexId, VertexId>> done;
  for (const auto& e : h.edges()) {
    if (!done.insert(std::minmax(e.u, e.v)).second) continue;
    auto hs = h.edges_between(e.u, e.v);
    auto gs = g.edges_between((*iso)[e.u], (*iso)[e.v]);
    for (std::size_t i = 0; i < hs.size(); ++i) m.edge_map[hs[i]] = gs.at(i);
  }
  return m;
}

inline D4Evaluation evaluate_d4(const SpatialDiagram& d, const D4Lift& lift) {
  D4Evaluation r;
  long long sum = 0;
  for (const auto& c : lift.four_cycles) sum += a2(extract_gauss(d, c));
  r.alpha = mod2(sum);
  r.lk_lambda = linking_number(extract_gauss(d, lift.lambda));
  r.lk_lambda_prime = linking_number(extract_gauss(d, lift.lambda_prime));
  return r;
}

// α over the sixteen 4-cycles of D4, read directly in a D4 diagram or through
// the lift of a D4 model.
inline D4Evaluation evaluate_d4(const SpatialDiagram& d, const std::optional<MinorModel>& model = std::nullopt) {
  return evaluate_d4(d, lift_d4(d.graph, model ? *model : d4_identity_model(d.graph)));
}

inline int alpha(const SpatialDiagram& d, const std::optional<MinorModel>& model = std::nullopt) {
  return evaluate_d4(d, model).alpha;
}

// D4 models in g built from two elements μ = A1 ∪ A2, μ' = B1 ∪ B2 of
// Γ^(2)(g) covering the same vertices: branch sets are the four
// intersections, and only models whose lift of Γ^(2)(D4) is {μ, μ'} are kept.
inline std::vector<MinorModel> d4_models(const MultiGraph& g) {
  const MultiGraph h = d4_graph();
  auto gamma2 = disjoint_cycle_tuples(g, 2);
  auto verts = [&](const CycleSubgraph& c) {
    auto v = cycle_vertices(g, c);
    return std::set<VertexId>(v.begin(), v.end());
  };
  auto meet = [](const std::set<VertexId>& a, const std::set<VertexId>& b) {
    std::vector<VertexId> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
  };
  auto between = [&](const CycleSubgraph& c, const std::vector<VertexId>& x, const std::vector<VertexId>& y) {
    std::vector<EdgeId> out;
    for (EdgeId id : c.edges) {
      const Edge& e = g.edge(id);
      bool xu = std::binary_search(x.begin(), x.end(), e.u), xv = std::binary_search(x.begin(), x.end(), e.v);
      bool yu = std::binary_search(y.begin(), y.end(), e.u), yv = std::binary_search(y.begin(), y.end(), e.v);
      if ((xu && yv) || (xv && yu)) out.push_back(id);
    }
    return out;
  };
  auto pairs = d4_pairs();
  std::vector<MinorModel> out;
  for (std::size_t i = 0; i < gamma2.size(); ++i) {
    const auto& mu = gamma2[i];
    auto a1 = verts(mu.cycles[0]), a2v = verts(mu.cycles[1]);
    std::set<VertexId> cover_a = a1;
    cover_a.insert(a2v.begin(), a2v.end());
    for (std::size_t j = 0; j < gamma2.size(); ++j) {
      if (i == j) continue;
      const auto& nu = gamma2[j];
      for (int flip = 0; flip < 2; ++flip) {
        const auto& b1c = nu.cycles[flip];
        const auto& b2c = nu.cycles[1 - flip];
        auto b1 = verts(b1c), b2 = verts(b2c);
        std::set<VertexId> cover_b = b1;
        cover_b.insert(b2.begin(), b2.end());
        if (cover_a != cover_b) continue;
        std::array<std::vector<VertexId>, 4> x{meet(a1, b2), meet(a1, b1), meet(a2v, b1), meet(a2v, b2)};
        if (std::any_of(x.begin(), x.end(), [](const auto& s) { return s.empty(); })) continue;
        std::array<std::vector<EdgeId>, 4> links{between(mu.cycles[0], x[0], x[1]), between(b1c, x[1], x[2]),
                                                 between(mu.cycles[1], x[2], x[3]), between(b2c, x[3], x[0])};
        if (std::any_of(links.begin(), links.end(), [](const auto& l) { return l.size() != 2; })) continue;
        MinorModel m;
        for (int k = 0; k < 4; ++k) m.branch_sets[k + 1] = x[k];
        for (int k = 0; k < 4; ++k) {
          m.edge_map[2 * k] = links[k][0];
          m.edge_map[2 * k + 1] = links[k][1];
        }
        if (!model_violation(g, h, m).empty()) continue;
        CycleLifter lift(g, h, m);
        if (lift.lift(pairs[0]) == mu && lift.lift(pairs[1]) == nu) out.push_back(std::move(m));
      }
    }
  }
  return out;
}

// Either a cycle with odd a2 or a 3-tuple whose three 2-component sublinks
// all have odd linking number.
struct DichotomyWitness {
  std::optional<CycleSubgraph> knot;
  long long a2_value = 0;
  std::optional<CycleTuple> triple;
  std::array<long long, 3> lk{};
  bool found() const { return knot || triple; }
};

inline DichotomyWitness n9fn_check(const SpatialDiagram& d, const std::vector<CycleSubgraph>& cycles,
                                   const std::vector<CycleTuple>& triples) {
  DichotomyWitness w;
  for (const auto& c : cycles) {
    long long v = a2(extract_gauss(d, c));
    if (mod2(v)) {
      w.knot = c;
      w.a2_value = v;
      return w;
    }
  }
  for (const auto& t : triples) {
    std::array<long long, 3> lk{};
    bool all = true;
    for (int k = 0; k < 3 && all; ++k) {
      auto pair = make_tuple({t.cycles[k], t.cycles[(k + 1) % 3]});
      lk[k] = linking_number(extract_gauss(d, pair));
      all = mod2(lk[k]) == 1;
    }
    if (all) {
      w.triple = t;
      w.lk = lk;
      return w;
    }
  }
  return w;
}

inline DichotomyWitness n9fn_check(const SpatialDiagram& d) {
  return n9fn_check(d, all_cycles(d.graph), disjoint_cycle_tuples(d.graph, 3));
}

inline std::size_t inter_crossings(const SpatialDiagram& d, const CycleTuple& t) {
  auto l = extract_gauss(d, t);
  std::set<int> second;
  for (const auto& p : l.components[1]) second.insert(p.crossing);
  std::size_t n = 0;
  for (const auto& p : l.components[0]) n += second.count(p.crossing);
  return n;
}

// Fixed D4 drawing for exhaustive checks: vertices in order 1,3,2,4, extra
// parallels bent through wide bend points. The first jitter seed with at most
// `max_crossings` crossings on which both Γ^(2) links can have odd linking
// number is used.
inline SpatialDiagram d4_lemma_diagram(std::size_t max_crossings = 20) {
  const MultiGraph h = d4_graph();
  auto pairs = d4_pairs();
  for (std::uint64_t seed = 0; seed < 10000; ++seed) {
    SpatialDiagram d;
    try {
      d = build_convex_diagram(h, {1, 3, 2, 4}, seed, ConvexOptions{true, 8});
    } catch (const diagram_error&) {
      continue;
    }
    if (d.crossing_count() > max_crossings) continue;
    if (inter_crossings(d, pairs[0]) >= 2 && inter_crossings(d, pairs[1]) >= 2) return d;
  }
  throw diagram_error("d4_lemma_diagram: no suitable drawing found");
}

}  // namespace ikg
