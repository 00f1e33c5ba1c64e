#pragma once

#include <map>
#include <optional>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "ikg/graph.hpp"
#include "ikg/minors.hpp"

namespace ikg {

// Parallels and loops never affect planarity, so the test runs on simplify(g).
inline bool is_planar(const MultiGraph& g) {
  MultiGraph s = simplify(g);
  const std::size_t n = s.vertex_count(), m = s.edge_count();
  if (n < 5 || m < 9) return true;
  if (m > 3 * n - 6) return false;
  using BG = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BG bg(n);
  std::map<VertexId, std::size_t> pos;
  for (std::size_t i = 0; i < n; ++i) pos[s.vertices()[i]] = i;
  for (const auto& e : s.edges()) boost::add_edge(pos[e.u], pos[e.v], bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

namespace detail {

template <class F>
bool for_each_subset(const std::vector<VertexId>& vs, std::size_t k, std::size_t from, std::vector<VertexId>& cur,
                     F&& f) {
  if (f(cur)) return true;
  if (cur.size() == k) return false;
  for (std::size_t i = from; i < vs.size(); ++i) {
    cur.push_back(vs[i]);
    if (for_each_subset(vs, k, i + 1, cur, f)) return true;
    cur.pop_back();
  }
  return false;
}

}  // namespace detail

// Smallest-first search for at most k vertices whose deletion leaves a planar
// graph. Subsets are visited in lexicographic order by size.
inline std::optional<std::vector<VertexId>> is_k_apex(const MultiGraph& g, std::size_t k) {
  MultiGraph s = simplify(g);
  for (std::size_t size = 0; size <= k; ++size) {
    std::optional<std::vector<VertexId>> found;
    std::vector<VertexId> cur;
    detail::for_each_subset(s.vertices(), size, 0, cur, [&](const std::vector<VertexId>& sub) {
      if (sub.size() != size) return false;
      MultiGraph h = s;
      for (VertexId v : sub) h = delete_vertex(h, v);
      if (!is_planar(h)) return false;
      found = sub;
      return true;
    });
    if (found) return found;
  }
  return std::nullopt;
}

// Being 2-apex is closed under minors, so it is enough to check the one-step
// reductions.
inline bool all_proper_minors_2apex(const MultiGraph& g) {
  for (const auto& r : one_step_reductions(g))
    if (!is_k_apex(r.graph, 2)) return false;
  return true;
}

}  // namespace ikg
