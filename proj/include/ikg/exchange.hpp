#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ikg/canon.hpp"
#include "ikg/graph.hpp"
#include "ikg/parallel.hpp"

namespace ikg {

using Triangle = std::array<VertexId, 3>;

// Triples of distinct pairwise-adjacent vertices, ascending; parallel edges do
// not multiply a triangle.
inline std::vector<Triangle> triangles(const MultiGraph& g) {
  std::vector<Triangle> out;
  const auto& vs = g.vertices();
  std::map<VertexId, std::vector<VertexId>> nb;
  for (VertexId v : vs) nb[v] = g.neighbors(v);
  auto adj = [&](VertexId a, VertexId b) { return std::binary_search(nb[a].begin(), nb[a].end(), b); };
  for (VertexId a : vs)
    for (VertexId b : nb[a]) {
      if (b <= a) continue;
      for (VertexId c : nb[b]) {
        if (c <= b) continue;
        if (adj(a, c)) out.push_back({a, b, c});
      }
    }
  return out;
}

inline MultiGraph delta_y(const MultiGraph& g, const Triangle& t) {
  auto [u, v, w] = t;
  if (u == v || v == w || u == w) throw graph_error("delta_y: triangle vertices must be distinct");
  std::array<std::pair<VertexId, VertexId>, 3> sides{{{u, v}, {v, w}, {w, u}}};
  std::set<EdgeId> drop;
  for (auto [a, b] : sides) {
    if (!g.has_vertex(a) || !g.has_vertex(b)) throw graph_error("delta_y: unknown vertex");
    auto ids = g.edges_between(a, b);
    if (ids.empty()) {
      throw graph_error("delta_y: {" + std::to_string(u) + "," + std::to_string(v) + "," + std::to_string(w) +
                        "} is not a triangle");
    }
    drop.insert(ids.front());
  }
  MultiGraph out = remove_edges_unchecked(g, drop);
  const VertexId x = g.next_vertex_id();
  out.add_vertex(x);
  EdgeId next = g.next_edge_id();
  for (VertexId a : {u, v, w}) out.add_edge_with_id(next++, x, a);
  return out;
}

// Reverse exchange at a degree-3 vertex; the result is simplified.
inline MultiGraph y_delta(const MultiGraph& g, VertexId x) {
  if (!g.has_vertex(x)) throw graph_error("y_delta: unknown vertex " + std::to_string(x));
  if (g.degree(x) != 3) throw graph_error("y_delta: vertex " + std::to_string(x) + " does not have degree 3");
  auto nb = g.neighbors(x);
  if (nb.size() != 3) throw graph_error("y_delta: vertex " + std::to_string(x) + " lacks three distinct neighbours");
  MultiGraph out = delete_vertex(g, x);
  EdgeId next = g.next_edge_id();
  out.add_edge_with_id(next++, nb[0], nb[1]);
  out.add_edge_with_id(next++, nb[1], nb[2]);
  out.add_edge_with_id(next++, nb[0], nb[2]);
  return simplify(out);
}

inline bool y_delta_applicable(const MultiGraph& g, VertexId x) {
  return g.degree(x) == 3 && g.neighbors(x).size() == 3;
}

enum class Move { DeltaY, YDelta };

inline std::string to_string(Move m) { return m == Move::DeltaY ? "dy" : "yd"; }

struct MoveSet {
  bool delta_y = true;
  bool y_delta = true;

  static MoveSet parse(const std::string& text) {
    MoveSet m{false, false};
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item == "dy") m.delta_y = true;
      else if (item == "yd") m.y_delta = true;
      else throw graph_error("unknown move '" + item + "' (expected dy or yd)");
    }
    return m;
  }
};

struct ProvenanceStep {
  Move move;
  std::vector<VertexId> site;  // triangle for dy, the degree-3 vertex for yd
};

inline MultiGraph replay(const MultiGraph& seed, const std::vector<ProvenanceStep>& path) {
  MultiGraph g = seed;
  for (const auto& s : path) {
    if (s.move == Move::DeltaY) g = delta_y(g, {s.site.at(0), s.site.at(1), s.site.at(2)});
    else g = y_delta(g, s.site.at(0));
  }
  return g;
}

struct FamilyRecord {
  Certificate certificate;
  MultiGraph representative;
  std::vector<ProvenanceStep> provenance;
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  bool dy_only_reachable = false;
  bool gamma3_empty = false;
  std::vector<int> degree_sequence;
  std::optional<std::string> name;
  bool heuristic_name = false;
};

// One discovered exchange: records[from] --move@site--> records[to].
struct Transition {
  std::size_t from;
  std::size_t to;
  ProvenanceStep step;
};

struct Closure {
  std::vector<FamilyRecord> records;
  std::vector<Transition> transitions;

  std::optional<std::size_t> find(const Certificate& c) const {
    for (std::size_t i = 0; i < records.size(); ++i)
      if (records[i].certificate == c) return i;
    return std::nullopt;
  }
};

struct ClosureOptions {
  bool reverse_site_order = false;
  unsigned jobs = 1;
};

namespace detail {

struct Child {
  ProvenanceStep step;
  MultiGraph graph;
  Certificate certificate;
};

inline std::vector<Child> expand(const MultiGraph& g, MoveSet moves, bool reverse) {
  std::vector<Child> out;
  if (moves.delta_y) {
    for (const auto& t : triangles(g)) {
      auto h = delta_y(g, t);
      auto c = canonical_form(h);
      out.push_back({{Move::DeltaY, {t[0], t[1], t[2]}}, std::move(h), std::move(c)});
    }
  }
  if (moves.y_delta) {
    for (VertexId v : g.vertices()) {
      if (!y_delta_applicable(g, v)) continue;
      auto h = y_delta(g, v);
      auto c = canonical_form(h);
      out.push_back({{Move::YDelta, {v}}, std::move(h), std::move(c)});
    }
  }
  if (reverse) std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace detail

// Breadth-first exchange closure deduplicated by certificate. Provenance is
// the first discovery path. Flags dy_only_reachable/gamma3_empty are left for
// annotate_closure (gamma3 lives in cycles.hpp).
inline Closure closure(const MultiGraph& seed, MoveSet moves, ClosureOptions opt = {}) {
  Closure out;
  std::map<Certificate, std::size_t> index;
  auto add = [&](MultiGraph g, Certificate c, std::vector<ProvenanceStep> prov) {
    FamilyRecord r;
    r.certificate = std::move(c);
    r.vertex_count = g.vertex_count();
    r.edge_count = g.edge_count();
    r.degree_sequence = degree_sequence(g);
    r.representative = std::move(g);
    r.provenance = std::move(prov);
    index[r.certificate] = out.records.size();
    out.records.push_back(std::move(r));
    return out.records.size() - 1;
  };
  add(seed, canonical_form(seed), {});
  std::vector<std::size_t> frontier{0};
  while (!frontier.empty()) {
    std::vector<std::vector<detail::Child>> kids(frontier.size());
    parallel_for(frontier.size(), opt.jobs, [&](std::size_t i) {
      kids[i] = detail::expand(out.records[frontier[i]].representative, moves, opt.reverse_site_order);
    });
    std::vector<std::size_t> next;
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      for (auto& k : kids[i]) {
        std::size_t to;
        if (auto it = index.find(k.certificate); it != index.end()) {
          to = it->second;
        } else {
          auto prov = out.records[frontier[i]].provenance;
          prov.push_back(k.step);
          to = add(std::move(k.graph), k.certificate, std::move(prov));
          next.push_back(to);
        }
        out.transitions.push_back({frontier[i], to, k.step});
      }
    }
    frontier = std::move(next);
  }
  if (moves.delta_y && !moves.y_delta)
    for (auto& r : out.records) r.dy_only_reachable = true;
  return out;
}

inline Closure closure(const MultiGraph& seed, std::initializer_list<Move> moves, ClosureOptions opt = {}) {
  MoveSet m{false, false};
  for (Move mv : moves) (mv == Move::DeltaY ? m.delta_y : m.y_delta) = true;
  return closure(seed, m, opt);
}

}  // namespace ikg
