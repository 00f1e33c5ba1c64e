#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace ikg {

using VertexId = int;
using EdgeId = int;

struct Edge {
  EdgeId id;
  VertexId u;
  VertexId v;

  bool is_loop() const { return u == v; }
  bool touches(VertexId w) const { return u == w || v == w; }
  VertexId other(VertexId w) const { return u == w ? v : u; }
  bool joins(VertexId a, VertexId b) const {
    return (u == a && v == b) || (u == b && v == a);
  }

  friend bool operator==(const Edge&, const Edge&) = default;
};

class graph_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Labeled multigraph. Vertex ids are kept sorted; edges are kept sorted by id.
// Parallel edges and loops are first-class.
class MultiGraph {
 public:
  MultiGraph() = default;

  static MultiGraph from_edges(const std::vector<std::pair<VertexId, VertexId>>& pairs) {
    MultiGraph g;
    for (auto [u, v] : pairs) {
      g.add_vertex(u);
      g.add_vertex(v);
      g.add_edge(u, v);
    }
    return g;
  }

  void add_vertex(VertexId v) {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v) vertices_.insert(it, v);
  }

  EdgeId add_edge(VertexId u, VertexId v) { return add_edge_with_id(next_edge_id(), u, v); }

  EdgeId add_edge_with_id(EdgeId id, VertexId u, VertexId v) {
    if (!has_vertex(u) || !has_vertex(v)) {
      throw graph_error("edge " + std::to_string(u) + "-" + std::to_string(v) +
                        " has an endpoint outside the vertex set");
    }
    auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                               [](const Edge& e, EdgeId x) { return e.id < x; });
    if (it != edges_.end() && it->id == id) {
      throw graph_error("duplicate edge id " + std::to_string(id));
    }
    edges_.insert(it, Edge{id, u, v});
    return id;
  }

  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  bool has_vertex(VertexId v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
  }

  const Edge* find_edge(EdgeId id) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                               [](const Edge& e, EdgeId x) { return e.id < x; });
    return (it != edges_.end() && it->id == id) ? &*it : nullptr;
  }

  const Edge& edge(EdgeId id) const {
    if (auto* e = find_edge(id)) return *e;
    throw graph_error("unknown edge id " + std::to_string(id));
  }

  // Edge ids joining a and b, ascending.
  std::vector<EdgeId> edges_between(VertexId a, VertexId b) const {
    std::vector<EdgeId> out;
    for (const auto& e : edges_)
      if (e.joins(a, b)) out.push_back(e.id);
    return out;
  }

  bool adjacent(VertexId a, VertexId b) const {
    return std::any_of(edges_.begin(), edges_.end(), [&](const Edge& e) { return e.joins(a, b); });
  }

  // Loops count twice.
  int degree(VertexId v) const {
    int d = 0;
    for (const auto& e : edges_) {
      if (e.u == v) ++d;
      if (e.v == v) ++d;
    }
    return d;
  }

  // Distinct neighbours other than v itself, ascending.
  std::vector<VertexId> neighbors(VertexId v) const {
    std::vector<VertexId> out;
    for (const auto& e : edges_) {
      if (e.is_loop() || !e.touches(v)) continue;
      out.push_back(e.other(v));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::vector<EdgeId> incident(VertexId v) const {
    std::vector<EdgeId> out;
    for (const auto& e : edges_)
      if (e.touches(v)) out.push_back(e.id);
    return out;
  }

  EdgeId next_edge_id() const { return edges_.empty() ? 0 : edges_.back().id + 1; }
  VertexId next_vertex_id() const { return vertices_.empty() ? 0 : vertices_.back() + 1; }

  bool is_simple() const {
    std::set<std::pair<VertexId, VertexId>> seen;
    for (const auto& e : edges_) {
      if (e.is_loop()) return false;
      if (!seen.insert(std::minmax(e.u, e.v)).second) return false;
    }
    return true;
  }

  friend bool operator==(const MultiGraph&, const MultiGraph&) = default;

 private:
  friend MultiGraph remove_edges_unchecked(MultiGraph g, const std::set<EdgeId>& ids);

  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;
};

inline MultiGraph remove_edges_unchecked(MultiGraph g, const std::set<EdgeId>& ids) {
  std::erase_if(g.edges_, [&](const Edge& e) { return ids.count(e.id) != 0; });
  return g;
}

inline MultiGraph delete_edge(const MultiGraph& g, EdgeId e) {
  if (!g.find_edge(e)) throw graph_error("delete_edge: unknown edge id " + std::to_string(e));
  return remove_edges_unchecked(g, {e});
}

inline MultiGraph delete_vertex(const MultiGraph& g, VertexId v) {
  if (!g.has_vertex(v)) throw graph_error("delete_vertex: unknown vertex " + std::to_string(v));
  MultiGraph out;
  for (VertexId w : g.vertices())
    if (w != v) out.add_vertex(w);
  for (const auto& e : g.edges())
    if (!e.touches(v)) out.add_edge_with_id(e.id, e.u, e.v);
  return out;
}

// Identifies the endpoints of e onto `keep` (which must be one of them). Edges
// parallel to e become loops; nothing is simplified.
inline MultiGraph contract_edge(const MultiGraph& g, EdgeId e, VertexId keep) {
  const Edge* ed = g.find_edge(e);
  if (!ed) throw graph_error("contract_edge: unknown edge id " + std::to_string(e));
  if (ed->is_loop()) throw graph_error("contract_edge: edge " + std::to_string(e) + " is a loop");
  if (!ed->touches(keep)) throw graph_error("contract_edge: kept vertex is not an endpoint");
  const VertexId gone = ed->other(keep);
  MultiGraph out;
  for (VertexId w : g.vertices())
    if (w != gone) out.add_vertex(w);
  for (const auto& f : g.edges()) {
    if (f.id == e) continue;
    out.add_edge_with_id(f.id, f.u == gone ? keep : f.u, f.v == gone ? keep : f.v);
  }
  return out;
}

inline MultiGraph contract_edge(const MultiGraph& g, EdgeId e) {
  return contract_edge(g, e, g.edge(e).u);
}

// Drops loops and keeps the lowest edge id of every parallel class.
inline MultiGraph simplify(const MultiGraph& g) {
  std::set<std::pair<VertexId, VertexId>> seen;
  std::set<EdgeId> drop;
  for (const auto& e : g.edges()) {
    if (e.is_loop() || !seen.insert(std::minmax(e.u, e.v)).second) drop.insert(e.id);
  }
  return remove_edges_unchecked(g, drop);
}

inline MultiGraph remove_isolated_vertices(const MultiGraph& g) {
  MultiGraph out;
  for (VertexId v : g.vertices())
    if (g.degree(v) > 0) out.add_vertex(v);
  for (const auto& e : g.edges()) out.add_edge_with_id(e.id, e.u, e.v);
  return out;
}

// Vertex-induced subgraph; edge ids preserved.
inline MultiGraph induced_subgraph(const MultiGraph& g, const std::vector<VertexId>& keep) {
  std::set<VertexId> k(keep.begin(), keep.end());
  MultiGraph out;
  for (VertexId v : g.vertices())
    if (k.count(v)) out.add_vertex(v);
  for (const auto& e : g.edges())
    if (k.count(e.u) && k.count(e.v)) out.add_edge_with_id(e.id, e.u, e.v);
  return out;
}

// Subgraph on the given edge ids and their endpoints.
inline MultiGraph edge_subgraph(const MultiGraph& g, const std::vector<EdgeId>& ids) {
  MultiGraph out;
  for (EdgeId id : ids) {
    const Edge& e = g.edge(id);
    out.add_vertex(e.u);
    out.add_vertex(e.v);
  }
  for (EdgeId id : ids) {
    const Edge& e = g.edge(id);
    if (!out.find_edge(id)) out.add_edge_with_id(id, e.u, e.v);
  }
  return out;
}

// Applies a vertex map (must be injective on g's vertices). Edge ids preserved.
inline MultiGraph relabel(const MultiGraph& g, const std::map<VertexId, VertexId>& to) {
  MultiGraph out;
  for (VertexId v : g.vertices()) out.add_vertex(to.at(v));
  if (out.vertex_count() != g.vertex_count()) throw graph_error("relabel: map is not injective");
  for (const auto& e : g.edges()) out.add_edge_with_id(e.id, to.at(e.u), to.at(e.v));
  return out;
}

// Renumbers edge ids 0..m-1 in the current edge order.
inline MultiGraph renumber_edges(const MultiGraph& g) {
  MultiGraph out;
  for (VertexId v : g.vertices()) out.add_vertex(v);
  EdgeId next = 0;
  for (const auto& e : g.edges()) out.add_edge_with_id(next++, e.u, e.v);
  return out;
}

// ---------------------------------------------------------------------------
// Reduction scripts

struct DeleteEdge {
  VertexId u, v;
};
struct ContractEdge {
  VertexId keep, merged;
};
struct DeleteVertex {
  VertexId v;
};
using ReductionStep = std::variant<DeleteEdge, ContractEdge, DeleteVertex>;

struct ReductionScript {
  std::vector<ReductionStep> steps;
};

inline std::string to_string(const ReductionStep& s) {
  std::ostringstream os;
  std::visit(
      [&](const auto& st) {
        using T = std::decay_t<decltype(st)>;
        if constexpr (std::is_same_v<T, DeleteEdge>) os << "-" << st.u << " " << st.v;
        else if constexpr (std::is_same_v<T, ContractEdge>) os << "/" << st.keep << " " << st.merged;
        else os << "x" << st.v;
      },
      s);
  return os.str();
}

inline std::string to_string(const ReductionScript& s) {
  std::string out;
  for (std::size_t i = 0; i < s.steps.size(); ++i) {
    if (i) out += ", ";
    out += to_string(s.steps[i]);
  }
  return out;
}

// Parses "-7 8, -8 9, /4 7, x6": '-' deletes an edge, '/' contracts an edge
// keeping the first-listed label, 'x' deletes a vertex.
inline ReductionScript parse_script(const std::string& text) {
  ReductionScript s;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto first = item.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    char op = item[first];
    std::istringstream rest(item.substr(first + 1));
    if (op == '-' || op == '/') {
      VertexId a, b;
      if (!(rest >> a >> b)) throw graph_error("bad script step: '" + item + "'");
      if (op == '-') s.steps.push_back(DeleteEdge{a, b});
      else s.steps.push_back(ContractEdge{a, b});
    } else if (op == 'x') {
      VertexId a;
      if (!(rest >> a)) throw graph_error("bad script step: '" + item + "'");
      s.steps.push_back(DeleteVertex{a});
    } else {
      throw graph_error("bad script step: '" + item + "'");
    }
  }
  return s;
}

struct ScriptResult {
  MultiGraph graph;
  // Original vertex -> the label it was merged into (identity for untouched vertices).
  std::map<VertexId, VertexId> merged_into;
};

// Steps are phrased against original labels; a vertex merged by contraction is
// resolved to its surviving label. Parallel edges pick the lowest id.
inline ScriptResult apply_script(const MultiGraph& g, const ReductionScript& s) {
  ScriptResult r{g, {}};
  for (VertexId v : g.vertices()) r.merged_into[v] = v;
  auto resolve = [&](VertexId v) -> std::optional<VertexId> {
    auto it = r.merged_into.find(v);
    if (it == r.merged_into.end()) return std::nullopt;
    return it->second;
  };
  for (std::size_t i = 0; i < s.steps.size(); ++i) {
    auto fail = [&](const std::string& why) {
      throw graph_error("script step " + std::to_string(i) + " (" + to_string(s.steps[i]) +
                        "): " + why);
    };
    const auto& step = s.steps[i];
    if (auto* d = std::get_if<DeleteEdge>(&step)) {
      auto a = resolve(d->u), b = resolve(d->v);
      if (!a || !b || !r.graph.has_vertex(*a) || !r.graph.has_vertex(*b)) fail("unknown vertex");
      auto ids = r.graph.edges_between(*a, *b);
      if (ids.empty()) fail("no such edge");
      r.graph = delete_edge(r.graph, ids.front());
    } else if (auto* c = std::get_if<ContractEdge>(&step)) {
      auto a = resolve(c->keep), b = resolve(c->merged);
      if (!a || !b || !r.graph.has_vertex(*a) || !r.graph.has_vertex(*b)) fail("unknown vertex");
      if (*a == *b) fail("contraction target is a loop");
      auto ids = r.graph.edges_between(*a, *b);
      if (ids.empty()) fail("no such edge");
      r.graph = contract_edge(r.graph, ids.front(), *a);
      for (auto& [orig, now] : r.merged_into)
        if (now == *b) now = *a;
    } else {
      auto v = resolve(std::get<DeleteVertex>(step).v);
      if (!v || !r.graph.has_vertex(*v)) fail("unknown vertex");
      r.graph = delete_vertex(r.graph, *v);
      std::erase_if(r.merged_into, [&](const auto& kv) { return kv.second == *v; });
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Edge-list text format:
//   vertices <n>
//   vertex <u>        (declares a possibly isolated vertex)
//   <u> <v>           (one edge; repeats are parallels, "u u" is a loop)
//   # comment

inline MultiGraph parse_edge_list(std::istream& in) {
  MultiGraph g;
  std::optional<std::size_t> declared;
  std::vector<std::pair<VertexId, VertexId>> pairs;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    auto bad = [&] { throw graph_error("edge list line " + std::to_string(lineno) + ": '" + line + "'"); };
    if (tok == "vertices") {
      std::size_t n;
      if (!(ls >> n) || declared) bad();
      declared = n;
    } else if (tok == "vertex") {
      VertexId v;
      if (!(ls >> v)) bad();
      g.add_vertex(v);
    } else {
      VertexId u, v;
      try {
        u = std::stoi(tok);
      } catch (const std::exception&) {
        bad();
      }
      if (!(ls >> v)) bad();
      std::string extra;
      if (ls >> extra) bad();
      pairs.emplace_back(u, v);
    }
  }
  if (!declared) throw graph_error("edge list: missing 'vertices <n>' header");
  for (auto [u, v] : pairs) {
    g.add_vertex(u);
    g.add_vertex(v);
  }
  for (auto [u, v] : pairs) g.add_edge(u, v);
  if (g.vertex_count() != *declared) {
    throw graph_error("edge list: header declares " + std::to_string(*declared) + " vertices, found " +
                      std::to_string(g.vertex_count()));
  }
  return g;
}

inline MultiGraph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

inline std::string format_edge_list(const MultiGraph& g, const std::string& comment = {}) {
  std::ostringstream os;
  if (!comment.empty()) os << "# " << comment << "\n";
  os << "vertices " << g.vertex_count() << "\n";
  for (VertexId v : g.vertices())
    if (g.degree(v) == 0) os << "vertex " << v << "\n";
  for (const auto& e : g.edges()) os << e.u << " " << e.v << "\n";
  return os.str();
}

}  // namespace ikg
