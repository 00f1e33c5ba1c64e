#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ikg/exchange.hpp"
#include "ikg/graph.hpp"

namespace ikg {

// A cycle as its sorted edge-id set.
struct CycleSubgraph {
  std::vector<EdgeId> edges;

  friend bool operator==(const CycleSubgraph&, const CycleSubgraph&) = default;
  friend auto operator<=>(const CycleSubgraph&, const CycleSubgraph&) = default;
};

// Pairwise vertex-disjoint cycles, kept sorted.
struct CycleTuple {
  std::vector<CycleSubgraph> cycles;

  std::vector<EdgeId> edge_union() const {
    std::vector<EdgeId> out;
    for (const auto& c : cycles) out.insert(out.end(), c.edges.begin(), c.edges.end());
    std::sort(out.begin(), out.end());
    return out;
  }

  friend bool operator==(const CycleTuple&, const CycleTuple&) = default;
  friend auto operator<=>(const CycleTuple&, const CycleTuple&) = default;
};

inline CycleTuple make_tuple(std::vector<CycleSubgraph> cs) {
  std::sort(cs.begin(), cs.end());
  return CycleTuple{std::move(cs)};
}

inline std::vector<VertexId> cycle_vertices(const MultiGraph& g, const CycleSubgraph& c) {
  std::vector<VertexId> out;
  for (EdgeId id : c.edges) {
    const Edge& e = g.edge(id);
    out.push_back(e.u);
    out.push_back(e.v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// True when the edge set is connected and 2-regular (loops count 2).
inline bool is_cycle(const MultiGraph& g, const CycleSubgraph& c) {
  if (c.edges.empty()) return false;
  std::map<VertexId, int> deg;
  for (EdgeId id : c.edges) {
    const Edge* e = g.find_edge(id);
    if (!e) return false;
    ++deg[e->u];
    ++deg[e->v];
  }
  for (auto [v, d] : deg)
    if (d != 2) return false;
  MultiGraph sub = edge_subgraph(g, c.edges);
  std::set<VertexId> seen{sub.vertices().front()};
  std::vector<VertexId> stack{sub.vertices().front()};
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : sub.neighbors(v))
      if (seen.insert(w).second) stack.push_back(w);
  }
  return seen.size() == sub.vertex_count();
}

// Cyclic traversal of a cycle: starts at its smallest vertex and leaves toward
// the smaller neighbour (lower edge id among parallels). edges[i] joins
// vertices[i] and vertices[i+1 mod k].
struct CycleWalk {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
};

inline CycleWalk walk_cycle(const MultiGraph& g, const CycleSubgraph& c) {
  CycleWalk w;
  if (c.edges.size() == 1) {
    const Edge& e = g.edge(c.edges.front());
    w.vertices = {e.u};
    w.edges = {e.id};
    return w;
  }
  std::vector<Edge> es;
  for (EdgeId id : c.edges) es.push_back(g.edge(id));
  VertexId start = es.front().u;
  for (const auto& e : es) start = std::min({start, e.u, e.v});
  std::optional<Edge> first;
  for (const auto& e : es) {
    if (!e.touches(start)) continue;
    if (!first || e.other(start) < first->other(start) ||
        (e.other(start) == first->other(start) && e.id < first->id))
      first = e;
  }
  std::set<EdgeId> used;
  VertexId cur = start;
  Edge next = *first;
  while (true) {
    w.vertices.push_back(cur);
    w.edges.push_back(next.id);
    used.insert(next.id);
    cur = next.other(cur);
    if (used.size() == es.size()) break;
    bool found = false;
    for (const auto& e : es)
      if (!used.count(e.id) && e.touches(cur)) {
        next = e;
        found = true;
        break;
      }
    if (!found) throw graph_error("walk_cycle: edge set is not a cycle");
  }
  return w;
}

// Bracket notation "[i1 i2 ... ik]".
inline std::string format_cycle(const MultiGraph& g, const CycleSubgraph& c) {
  auto w = walk_cycle(g, c);
  std::string s = "[";
  for (std::size_t i = 0; i < w.vertices.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(w.vertices[i]);
  }
  return s + "]";
}

inline std::string format_tuple(const MultiGraph& g, const CycleTuple& t) {
  std::string s;
  for (std::size_t i = 0; i < t.cycles.size(); ++i) {
    if (i) s += " u ";
    s += format_cycle(g, t.cycles[i]);
  }
  return s;
}

// Parses "[1 2 4 5]" against g; consecutive vertices use their lowest-id edge.
inline CycleSubgraph parse_cycle(const MultiGraph& g, const std::string& text) {
  std::string body = text;
  std::replace(body.begin(), body.end(), '[', ' ');
  std::replace(body.begin(), body.end(), ']', ' ');
  std::istringstream in(body);
  std::vector<VertexId> vs;
  for (VertexId v; in >> v;) vs.push_back(v);
  if (vs.empty()) throw graph_error("parse_cycle: empty cycle '" + text + "'");
  CycleSubgraph c;
  if (vs.size() == 1) {
    auto ids = g.edges_between(vs[0], vs[0]);
    if (ids.empty()) throw graph_error("parse_cycle: no loop at " + std::to_string(vs[0]));
    c.edges = {ids.front()};
    return c;
  }
  if (vs.size() == 2) {
    auto ids = g.edges_between(vs[0], vs[1]);
    if (ids.size() < 2) throw graph_error("parse_cycle: no parallel pair for '" + text + "'");
    c.edges = {ids[0], ids[1]};
    return c;
  }
  for (std::size_t i = 0; i < vs.size(); ++i) {
    VertexId a = vs[i], b = vs[(i + 1) % vs.size()];
    auto ids = g.edges_between(a, b);
    if (ids.empty())
      throw graph_error("parse_cycle: no edge " + std::to_string(a) + "-" + std::to_string(b) + " in '" + text + "'");
    c.edges.push_back(ids.front());
  }
  std::sort(c.edges.begin(), c.edges.end());
  if (!is_cycle(g, c)) throw graph_error("parse_cycle: '" + text + "' is not a cycle");
  return c;
}

inline CycleTuple parse_tuple(const MultiGraph& g, const std::string& text) {
  std::vector<CycleSubgraph> cs;
  std::size_t pos = 0;
  while ((pos = text.find('[', pos)) != std::string::npos) {
    auto end = text.find(']', pos);
    if (end == std::string::npos) throw graph_error("parse_tuple: unbalanced bracket in '" + text + "'");
    cs.push_back(parse_cycle(g, text.substr(pos, end - pos + 1)));
    pos = end + 1;
  }
  return make_tuple(std::move(cs));
}

namespace detail {

// Cycles with vertex/edge bitmasks over dense positions.
struct CycleMasks {
  std::vector<VertexId> vertex_ids;
  std::vector<EdgeId> edge_ids;
  std::vector<std::uint64_t> vmask;
  std::vector<std::uint64_t> emask;

  CycleSubgraph subgraph(std::size_t i) const {
    CycleSubgraph c;
    for (std::uint64_t m = emask[i]; m; m &= m - 1) c.edges.push_back(edge_ids[std::countr_zero(m)]);
    return c;  // edge_ids ascending, so already sorted
  }
};

inline int cyclomatic_number(const MultiGraph& g) {
  std::map<VertexId, VertexId> parent;
  for (VertexId v : g.vertices()) parent[v] = v;
  auto find = [&](VertexId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int comps = static_cast<int>(g.vertex_count());
  for (const auto& e : g.edges()) {
    auto a = find(e.u), b = find(e.v);
    if (a != b) {
      parent[a] = b;
      --comps;
    }
  }
  return static_cast<int>(g.edge_count()) - static_cast<int>(g.vertex_count()) + comps;
}

inline constexpr int kMaxCyclomatic = 26;

inline void check_cycle_guard(const MultiGraph& g) {
  if (g.vertex_count() > 64 || g.edge_count() > 64) {
    throw graph_error("cycle enumeration limited to 64 vertices and 64 edges");
  }
  int c = cyclomatic_number(g);
  if (c > kMaxCyclomatic) {
    std::ostringstream os;
    os << "cycle enumeration refused: cyclomatic number " << c << " allows up to ~" << std::ldexp(1.0, c)
       << " cycles (limit 2^" << kMaxCyclomatic << ")";
    throw graph_error(os.str());
  }
}

inline CycleMasks enumerate_cycles(const MultiGraph& g) {
  check_cycle_guard(g);
  CycleMasks out;
  out.vertex_ids = g.vertices();
  for (const auto& e : g.edges()) out.edge_ids.push_back(e.id);
  const int n = static_cast<int>(out.vertex_ids.size());
  std::map<VertexId, int> vpos;
  for (int i = 0; i < n; ++i) vpos[out.vertex_ids[i]] = i;
  struct Arc {
    int to;
    int edge;
  };
  std::vector<std::vector<Arc>> adj(n);
  const auto& es = g.edges();
  for (int k = 0; k < static_cast<int>(es.size()); ++k) {
    int a = vpos[es[k].u], b = vpos[es[k].v];
    if (a == b) {
      out.vmask.push_back(std::uint64_t{1} << a);
      out.emask.push_back(std::uint64_t{1} << k);
      continue;
    }
    adj[a].push_back({b, k});
    adj[b].push_back({a, k});
  }
  // 2-cycles from parallel pairs
  for (int k = 0; k < static_cast<int>(es.size()); ++k)
    for (int l = k + 1; l < static_cast<int>(es.size()); ++l) {
      if (es[k].is_loop() || !es[l].joins(es[k].u, es[k].v)) continue;
      out.vmask.push_back((std::uint64_t{1} << vpos[es[k].u]) | (std::uint64_t{1} << vpos[es[k].v]));
      out.emask.push_back((std::uint64_t{1} << k) | (std::uint64_t{1} << l));
    }
  // length >= 3: paths from the smallest vertex r through larger vertices; each
  // cycle is kept in the direction where the second vertex < the last vertex.
  for (int r = 0; r < n; ++r) {
    std::vector<int> path{r};
    std::uint64_t vm = std::uint64_t{1} << r, em = 0;
    auto dfs = [&](auto&& self, int cur) -> void {
      for (const Arc& a : adj[cur]) {
        if (a.to == r) {
          if (path.size() >= 3 && path[1] < cur) {
            out.vmask.push_back(vm);
            out.emask.push_back(em | (std::uint64_t{1} << a.edge));
          }
          continue;
        }
        if (a.to < r || (vm >> a.to) & 1) continue;
        path.push_back(a.to);
        vm |= std::uint64_t{1} << a.to;
        em |= std::uint64_t{1} << a.edge;
        self(self, a.to);
        em &= ~(std::uint64_t{1} << a.edge);
        vm &= ~(std::uint64_t{1} << a.to);
        path.pop_back();
      }
    };
    dfs(dfs, r);
  }
  return out;
}

}  // namespace detail

inline std::vector<CycleSubgraph> all_cycles(const MultiGraph& g) {
  auto m = detail::enumerate_cycles(g);
  std::vector<CycleSubgraph> out;
  out.reserve(m.emask.size());
  for (std::size_t i = 0; i < m.emask.size(); ++i) out.push_back(m.subgraph(i));
  std::sort(out.begin(), out.end());
  return out;
}

// Cycles with exactly k edges.
inline std::vector<CycleSubgraph> cycles_of_length(const MultiGraph& g, std::size_t k) {
  auto all = all_cycles(g);
  std::erase_if(all, [&](const CycleSubgraph& c) { return c.edges.size() != k; });
  return all;
}

// Γ^(n): unordered n-tuples of pairwise vertex-disjoint cycles (n = 1 gives
// singleton tuples).
inline std::vector<CycleTuple> disjoint_cycle_tuples(const MultiGraph& g, std::size_t n) {
  if (n == 0) throw graph_error("disjoint_cycle_tuples: n must be positive");
  auto m = detail::enumerate_cycles(g);
  std::vector<CycleTuple> out;
  std::vector<std::size_t> pick;
  auto rec = [&](auto&& self, std::size_t from, std::uint64_t used) -> void {
    if (pick.size() == n) {
      std::vector<CycleSubgraph> cs;
      for (auto i : pick) cs.push_back(m.subgraph(i));
      out.push_back(make_tuple(std::move(cs)));
      return;
    }
    for (std::size_t i = from; i < m.vmask.size(); ++i) {
      if (m.vmask[i] & used) continue;
      pick.push_back(i);
      self(self, i + 1, used | m.vmask[i]);
      pick.pop_back();
    }
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

// Whether Γ^(3)(g) is empty; stops at the first disjoint triple.
inline bool gamma3_empty(const MultiGraph& g) {
  auto m = detail::enumerate_cycles(g);
  const std::size_t c = m.vmask.size();
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t j = i + 1; j < c; ++j) {
      if (m.vmask[i] & m.vmask[j]) continue;
      const auto used = m.vmask[i] | m.vmask[j];
      for (std::size_t k = j + 1; k < c; ++k)
        if (!(m.vmask[k] & used)) return false;
    }
  return true;
}

// Sum of parts over Z2 equals the target edge set.
inline bool z2_decompose(const CycleSubgraph& target, const std::vector<CycleSubgraph>& parts) {
  std::set<EdgeId> acc;
  for (const auto& p : parts)
    for (EdgeId e : p.edges)
      if (!acc.insert(e).second) acc.erase(e);
  return std::vector<EdgeId>(acc.begin(), acc.end()) == target.edges;
}

inline void annotate_closure(Closure& c, const MultiGraph& seed) {
  for (auto& r : c.records) r.gamma3_empty = gamma3_empty(r.representative);
  auto dy = closure(seed, {Move::DeltaY});
  for (auto& r : c.records) r.dy_only_reachable = dy.find(r.certificate).has_value();
}

// ---------------------------------------------------------------------------
// Minor models and the cycle lift Ψ

struct MinorModel {
  std::map<VertexId, std::vector<VertexId>> branch_sets;  // H-vertex -> G-vertices
  std::map<EdgeId, EdgeId> edge_map;                      // H-edge -> G-edge
};

// Empty string when the model is valid; otherwise the first violation found.
inline std::string model_violation(const MultiGraph& g, const MultiGraph& h, const MinorModel& m) {
  std::map<VertexId, VertexId> owner;
  for (VertexId x : h.vertices()) {
    auto it = m.branch_sets.find(x);
    if (it == m.branch_sets.end() || it->second.empty()) return "empty branch set for " + std::to_string(x);
    for (VertexId v : it->second) {
      if (!g.has_vertex(v)) return "branch set of " + std::to_string(x) + " leaves G";
      if (!owner.emplace(v, x).second) return "branch sets overlap at " + std::to_string(v);
    }
    MultiGraph sub = induced_subgraph(g, it->second);
    std::set<VertexId> seen{it->second.front()};
    std::vector<VertexId> stack{it->second.front()};
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (VertexId w : sub.neighbors(v))
        if (seen.insert(w).second) stack.push_back(w);
    }
    if (seen.size() != it->second.size()) return "branch set of " + std::to_string(x) + " is disconnected";
  }
  if (m.branch_sets.size() != h.vertex_count()) return "branch sets for unknown H-vertices";
  std::set<EdgeId> used;
  for (const auto& he : h.edges()) {
    auto it = m.edge_map.find(he.id);
    if (it == m.edge_map.end()) return "H-edge " + std::to_string(he.id) + " unmapped";
    const Edge* ge = g.find_edge(it->second);
    if (!ge) return "edge map leaves G";
    if (!used.insert(ge->id).second) return "edge map is not injective";
    auto ou = owner.find(ge->u), ov = owner.find(ge->v);
    if (ou == owner.end() || ov == owner.end()) return "mapped edge leaves the branch sets";
    bool ok = (ou->second == he.u && ov->second == he.v) || (ou->second == he.v && ov->second == he.u);
    if (!ok) return "mapped edge " + std::to_string(ge->id) + " joins the wrong branch sets";
  }
  if (m.edge_map.size() != h.edge_count()) return "edge map has extra entries";
  return {};
}

// Lifts cycles of H to G through a fixed BFS spanning tree of every branch set
// (root = smallest id, smallest ids first), so all lifts come from one
// subdivision of H inside G.
class CycleLifter {
 public:
  CycleLifter(const MultiGraph& g, const MultiGraph& h, MinorModel model)
      : g_(g), h_(h), model_(std::move(model)) {
    if (auto why = model_violation(g, h, model_); !why.empty()) throw graph_error("invalid minor model: " + why);
    for (const auto& [x, set] : model_.branch_sets) {
      std::set<VertexId> in(set.begin(), set.end());
      for (VertexId v : set) owner_[v] = x;
      VertexId root = *in.begin();
      parent_[root] = {root, -1};
      depth_[root] = 0;
      std::deque<VertexId> q{root};
      while (!q.empty()) {
        VertexId v = q.front();
        q.pop_front();
        std::vector<std::pair<VertexId, EdgeId>> nb;
        for (const auto& e : g_.edges())
          if (!e.is_loop() && e.touches(v) && in.count(e.other(v))) nb.emplace_back(e.other(v), e.id);
        std::sort(nb.begin(), nb.end());
        for (auto [w, id] : nb) {
          if (parent_.count(w)) continue;
          parent_[w] = {v, id};
          depth_[w] = depth_[v] + 1;
          q.push_back(w);
        }
      }
    }
  }

  const MinorModel& model() const { return model_; }

  // Tree edges between two vertices of the same branch set.
  std::vector<EdgeId> tree_path(VertexId a, VertexId b) const {
    std::vector<EdgeId> out;
    while (a != b) {
      if (depth_.at(a) >= depth_.at(b)) {
        auto [p, e] = parent_.at(a);
        out.push_back(e);
        a = p;
      } else {
        auto [p, e] = parent_.at(b);
        out.push_back(e);
        b = p;
      }
    }
    return out;
  }

  CycleSubgraph lift(const CycleSubgraph& hc) const {
    auto w = walk_cycle(h_, hc);
    const std::size_t k = w.edges.size();
    std::vector<EdgeId> out;
    std::vector<const Edge*> ge(k);
    for (std::size_t i = 0; i < k; ++i) {
      ge[i] = &g_.edge(model_.edge_map.at(w.edges[i]));
      out.push_back(ge[i]->id);
    }
    if (k == 1) {
      auto p = tree_path(ge[0]->u, ge[0]->v);
      out.insert(out.end(), p.begin(), p.end());
    } else {
      for (std::size_t i = 0; i < k; ++i) {
        VertexId x = w.vertices[i];
        const Edge* in = ge[(i + k - 1) % k];
        const Edge* outg = ge[i];
        auto p = tree_path(end_in(*in, x), end_in(*outg, x));
        out.insert(out.end(), p.begin(), p.end());
      }
    }
    std::sort(out.begin(), out.end());
    return CycleSubgraph{out};
  }

  CycleTuple lift(const CycleTuple& t) const {
    std::vector<CycleSubgraph> cs;
    for (const auto& c : t.cycles) cs.push_back(lift(c));
    return make_tuple(std::move(cs));
  }

 private:
  VertexId end_in(const Edge& e, VertexId x) const { return owner_.at(e.u) == x ? e.u : e.v; }

  const MultiGraph& g_;
  const MultiGraph& h_;
  MinorModel model_;
  std::map<VertexId, VertexId> owner_;
  std::map<VertexId, std::pair<VertexId, EdgeId>> parent_;
  std::map<VertexId, int> depth_;
};

// Ψ^(n) applied to a set of H-tuples.
inline std::vector<CycleTuple> lift_cycles(const MultiGraph& g, const MultiGraph& h, const MinorModel& model,
                                           const std::vector<CycleTuple>& h_tuples) {
  CycleLifter lifter(g, h, model);
  std::vector<CycleTuple> out;
  for (const auto& t : h_tuples) out.push_back(lifter.lift(t));
  return out;
}

// ---------------------------------------------------------------------------
// Φ^(n): Γ^(n)(G_Δ) minus tuples containing the triangle -> Γ^(n)(G_Y)

struct PhiMap {
  MultiGraph g_y;
  std::vector<CycleTuple> domain;
  std::vector<CycleTuple> codomain;
  std::vector<std::size_t> image;        // domain index -> codomain index
  std::vector<std::size_t> fiber_sizes;  // per codomain element
  bool well_defined = true;
  bool surjective = true;
  std::size_t max_fiber = 0;
};

inline PhiMap phi_map(const MultiGraph& g_delta, const Triangle& t, std::size_t n) {
  PhiMap out;
  out.g_y = delta_y(g_delta, t);
  std::set<EdgeId> tri;
  for (auto [a, b] : {std::pair{t[0], t[1]}, std::pair{t[1], t[2]}, std::pair{t[2], t[0]}})
    tri.insert(g_delta.edges_between(a, b).front());
  const VertexId x = g_delta.next_vertex_id();
  std::set<EdgeId> wye;
  for (EdgeId id : out.g_y.incident(x)) wye.insert(id);

  auto strip = [](const CycleTuple& c, const std::set<EdgeId>& drop) {
    std::vector<EdgeId> es;
    for (EdgeId e : c.edge_union())
      if (!drop.count(e)) es.push_back(e);
    return es;
  };
  out.codomain = disjoint_cycle_tuples(out.g_y, n);
  std::map<std::vector<EdgeId>, std::size_t> by_rest;
  for (std::size_t i = 0; i < out.codomain.size(); ++i) by_rest[strip(out.codomain[i], wye)] = i;

  for (const auto& lam : disjoint_cycle_tuples(g_delta, n)) {
    auto u = lam.edge_union();
    bool contains_triangle = std::all_of(tri.begin(), tri.end(), [&](EdgeId e) {
      return std::binary_search(u.begin(), u.end(), e);
    });
    if (!contains_triangle) out.domain.push_back(lam);
  }
  out.fiber_sizes.assign(out.codomain.size(), 0);
  for (const auto& lam : out.domain) {
    auto it = by_rest.find(strip(lam, tri));
    if (it == by_rest.end()) {
      out.well_defined = false;
      out.image.push_back(static_cast<std::size_t>(-1));
      continue;
    }
    out.image.push_back(it->second);
    ++out.fiber_sizes[it->second];
  }
  for (auto f : out.fiber_sizes) {
    if (f == 0) out.surjective = false;
    out.max_fiber = std::max(out.max_fiber, f);
  }
  return out;
}

}  // namespace ikg
