#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ikg/canon.hpp"
#include "ikg/cycles.hpp"
#include "ikg/graph.hpp"

namespace ikg {

struct MinorSearchOptions {
  std::size_t max_vertices = 20;
};

struct MinorSearchStats {
  std::size_t states = 0;
  std::size_t memo_hits = 0;
};

namespace detail {

class MinorSearch {
 public:
  MinorSearch(const MultiGraph& h) : h_(h) {
    nh_ = h.vertex_count();
    mh_ = h.edge_count();
    h_deg_ = degree_sequence(h);
    min_deg_ = h_deg_.empty() ? 0 : h_deg_.back();
    for (const auto& e : h.edges()) {
      if (e.is_loop()) h_loops_ = true;
      else cap_ = std::max<int>(cap_, static_cast<int>(h.edges_between(e.u, e.v).size()));
    }
    cap_ = std::max(cap_, 1);
  }

  struct State {
    MultiGraph g;
    std::map<VertexId, std::vector<VertexId>> branch;
  };

  std::optional<MinorModel> run(const MultiGraph& g) {
    State s{g, {}};
    for (VertexId v : g.vertices()) s.branch[v] = {v};
    normalize(s);
    return search(s, canonical_form(s.g));
  }

  MinorSearchStats stats;

 private:
  // Reductions that preserve containment of h: surplus loops and parallels,
  // isolated and pendant vertices, and suppression of degree-2 vertices, each
  // only when h's minimum degree rules out the removed structure.
  void normalize(State& s) const {
    for (bool changed = true; changed;) {
      changed = false;
      std::set<EdgeId> drop;
      std::map<std::pair<VertexId, VertexId>, int> seen;
      for (const auto& e : s.g.edges()) {
        if (e.is_loop()) {
          if (!h_loops_) drop.insert(e.id);
          continue;
        }
        if (++seen[std::minmax(e.u, e.v)] > cap_) drop.insert(e.id);
      }
      if (!drop.empty()) {
        s.g = remove_edges_unchecked(s.g, drop);
        changed = true;
      }
      for (VertexId v : s.g.vertices()) {
        int d = s.g.degree(v);
        if ((d == 0 && min_deg_ >= 1) || (d == 1 && min_deg_ >= 2)) {
          s.g = delete_vertex(s.g, v);
          s.branch.erase(v);
          changed = true;
          break;
        }
        if (d == 2 && min_deg_ >= 3) {
          auto inc = s.g.incident(v);
          const Edge& e = s.g.edge(inc.front());
          if (e.is_loop()) continue;
          merge(s, e.id, e.other(v));
          changed = true;
          break;
        }
      }
    }
  }

  static void merge(State& s, EdgeId e, VertexId keep) {
    VertexId gone = s.g.edge(e).other(keep);
    s.g = contract_edge(s.g, e, keep);
    auto& b = s.branch[keep];
    const auto& other = s.branch[gone];
    b.insert(b.end(), other.begin(), other.end());
    std::sort(b.begin(), b.end());
    s.branch.erase(gone);
  }

  std::optional<MinorModel> finish(const State& s) const {
    auto iso = is_isomorphic(s.g, h_);
    if (!iso) return std::nullopt;
    std::map<VertexId, VertexId> back;
    for (auto [x, y] : *iso) back[y] = x;
    MinorModel m;
    for (auto [x, y] : *iso) m.branch_sets[y] = s.branch.at(x);
    std::set<std::pair<VertexId, VertexId>> done;
    for (const auto& he : h_.edges()) {
      auto key = std::minmax(he.u, he.v);
      if (!done.insert(key).second) continue;
      auto hs = h_.edges_between(he.u, he.v);
      auto gs = s.g.edges_between(back[he.u], back[he.v]);
      for (std::size_t i = 0; i < hs.size(); ++i) m.edge_map[hs[i]] = gs.at(i);
    }
    return m;
  }

  std::optional<MinorModel> search(const State& s, const Certificate& cert) {
    ++stats.states;
    const std::size_t n = s.g.vertex_count(), m = s.g.edge_count();
    if (n < nh_ || m < mh_) return std::nullopt;
    if (failed_.count(cert)) {
      ++stats.memo_hits;
      return std::nullopt;
    }
    if (n == nh_) {
      auto d = degree_sequence(s.g);
      for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] < h_deg_[i]) {
          failed_.insert(cert);
          return std::nullopt;
        }
      if (m == mh_) {
        if (auto model = finish(s)) return model;
        failed_.insert(cert);
        return std::nullopt;
      }
    }
    std::set<Certificate> tried;
    auto attempt = [&](State child) -> std::optional<MinorModel> {
      normalize(child);
      auto c = canonical_form(child.g);
      if (!tried.insert(c).second) return std::nullopt;
      return search(child, c);
    };
    if (n > nh_) {
      for (const auto& e : s.g.edges()) {
        if (e.is_loop()) continue;
        State child = s;
        merge(child, e.id, std::min(e.u, e.v));
        if (auto r = attempt(std::move(child))) return r;
      }
      for (VertexId v : s.g.vertices()) {
        State child{delete_vertex(s.g, v), s.branch};
        child.branch.erase(v);
        if (auto r = attempt(std::move(child))) return r;
      }
    }
    for (const auto& e : s.g.edges()) {
      State child{delete_edge(s.g, e.id), s.branch};
      if (auto r = attempt(std::move(child))) return r;
    }
    failed_.insert(cert);
    return std::nullopt;
  }

  const MultiGraph& h_;
  std::size_t nh_ = 0, mh_ = 0;
  std::vector<int> h_deg_;
  int min_deg_ = 0;
  int cap_ = 1;
  bool h_loops_ = false;
  std::set<Certificate> failed_;
};

}  // namespace detail

// Exhaustive search over deletions and contractions with failure memoization
// on canonical forms. Returns a model of h in g when one exists.
inline std::optional<MinorModel> has_minor(const MultiGraph& g, const MultiGraph& h,
                                           MinorSearchOptions opt = {}, MinorSearchStats* stats = nullptr) {
  if (g.vertex_count() > opt.max_vertices) {
    throw graph_error("has_minor: " + std::to_string(g.vertex_count()) + " vertices exceeds the limit of " +
                      std::to_string(opt.max_vertices));
  }
  detail::MinorSearch search(h);
  auto r = search.run(g);
  if (stats) *stats = search.stats;
  return r;
}

struct Reduction {
  enum class Kind { DeleteEdge, ContractEdge, DeleteVertex } kind;
  ReductionStep step;
  MultiGraph graph;
  Certificate certificate;
};

// G−e, simplify(G/e) for non-loops, and G−v; deduplicated by certificate
// within each kind.
inline std::vector<Reduction> one_step_reductions(const MultiGraph& g) {
  std::vector<Reduction> out;
  std::set<Certificate> seen_del, seen_con, seen_vx;
  for (const auto& e : g.edges()) {
    auto h = delete_edge(g, e.id);
    auto c = canonical_form(h);
    if (seen_del.insert(c).second)
      out.push_back({Reduction::Kind::DeleteEdge, DeleteEdge{e.u, e.v}, std::move(h), std::move(c)});
  }
  for (const auto& e : g.edges()) {
    if (e.is_loop()) continue;
    auto h = simplify(contract_edge(g, e.id, e.u));
    auto c = canonical_form(h);
    if (seen_con.insert(c).second)
      out.push_back({Reduction::Kind::ContractEdge, ContractEdge{e.u, e.v}, std::move(h), std::move(c)});
  }
  for (VertexId v : g.vertices()) {
    auto h = delete_vertex(g, v);
    auto c = canonical_form(h);
    if (seen_vx.insert(c).second)
      out.push_back({Reduction::Kind::DeleteVertex, DeleteVertex{v}, std::move(h), std::move(c)});
  }
  return out;
}

// Result of a script after simplification, with vertices left isolated by the
// script's deletions dropped.
inline MultiGraph script_minor(const MultiGraph& g, const ReductionScript& s) {
  return remove_isolated_vertices(simplify(apply_script(g, s).graph));
}

inline bool verify_minor_script(const MultiGraph& g, const ReductionScript& s, const MultiGraph& target) {
  return is_isomorphic(script_minor(g, s), target).has_value();
}

// Model of the script's result inside g: branch sets are the merge classes.
inline MinorModel script_model(const MultiGraph& g, const ReductionScript& s) {
  auto r = apply_script(g, s);
  MultiGraph h = script_minor(g, s);
  MinorModel m;
  for (auto [orig, now] : r.merged_into)
    if (h.has_vertex(now)) m.branch_sets[now].push_back(orig);
  for (auto& [x, b] : m.branch_sets) std::sort(b.begin(), b.end());
  for (const auto& e : h.edges()) m.edge_map[e.id] = e.id;
  return m;
}

}  // namespace ikg
