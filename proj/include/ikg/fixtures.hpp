#pragma once

#include <string>
#include <vector>

#include "ikg/graph.hpp"
#include "ikg/invariants.hpp"

namespace ikg {

inline MultiGraph complete_graph(int n) {
  MultiGraph g;
  for (int i = 1; i <= n; ++i) g.add_vertex(i);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) g.add_edge(i, j);
  return g;
}

// Vertices numbered from 1 part by part.
inline MultiGraph complete_multipartite(const std::vector<int>& parts) {
  MultiGraph g;
  std::vector<int> part;
  for (std::size_t p = 0; p < parts.size(); ++p)
    for (int k = 0; k < parts[p]; ++k) {
      part.push_back(static_cast<int>(p));
      g.add_vertex(static_cast<VertexId>(part.size()));
    }
  for (std::size_t i = 0; i < part.size(); ++i)
    for (std::size_t j = i + 1; j < part.size(); ++j)
      if (part[i] != part[j]) g.add_edge(static_cast<VertexId>(i + 1), static_cast<VertexId>(j + 1));
  return g;
}

inline MultiGraph cycle_graph(int n) {
  MultiGraph g;
  for (int i = 1; i <= n; ++i) g.add_vertex(i);
  for (int i = 1; i <= n; ++i) g.add_edge(i, i % n + 1);
  return g;
}

// 4-cycle 1-2-3-4 with every edge doubled; edges 0,1 join 1-2, 2,3 join 2-3,
// 4,5 join 3-4, 6,7 join 4-1.
inline MultiGraph d4_graph() {
  return MultiGraph::from_edges({{1, 2}, {1, 2}, {2, 3}, {2, 3}, {3, 4}, {3, 4}, {4, 1}, {4, 1}});
}

inline MultiGraph n9_graph() {
  return MultiGraph::from_edges({{1, 2}, {1, 3}, {1, 5}, {1, 6}, {1, 7}, {2, 3}, {2, 4}, {2, 6}, {2, 8}, {3, 4}, {3, 5},
                                 {3, 9}, {4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 8}, {6, 9}, {7, 8}, {7, 9}, {8, 9}});
}

inline MultiGraph n10p_graph() {
  return MultiGraph::from_edges({{1, 5}, {1, 6}, {1, 7}, {1, 10}, {2, 4}, {2, 6}, {2, 8}, {2, 10}, {3, 4}, {3, 5}, {3, 9},
                                 {3, 10}, {4, 5}, {4, 7}, {5, 6}, {5, 8}, {6, 9}, {7, 8}, {7, 9}, {8, 9}, {8, 10}});
}

// 14-cycle 0..13 with chords 2k ~ 2k+5.
inline MultiGraph heawood_graph() {
  MultiGraph g;
  for (int i = 0; i < 14; ++i) g.add_vertex(i);
  for (int i = 0; i < 14; ++i) g.add_edge(i, (i + 1) % 14);
  for (int k = 0; k < 7; ++k) g.add_edge(2 * k, (2 * k + 5) % 14);
  return g;
}

inline MultiGraph petersen_graph() {
  MultiGraph g;
  for (int i = 0; i < 10; ++i) g.add_vertex(i);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

inline MultiGraph k44_minus_edge() {
  auto g = complete_multipartite({4, 4});
  return delete_edge(g, g.edges_between(1, 5).front());
}

inline GaussLink hopf_link() { return parse_gauss("[c1o+ c2u+] [c1u+ c2o+]"); }
inline GaussLink trefoil_knot() { return parse_gauss("[c0u- c1o- c2u- c0o- c1u- c2o-]"); }
inline GaussLink figure_eight_knot() { return parse_gauss("[c0o- c1u+ c2o+ c0u- c3o- c2u+ c1o+ c3u-]"); }

inline const std::vector<std::string>& graph_fixture_names() {
  static const std::vector<std::string> names{"K6", "K7", "K3311", "D4", "N9", "N'10", "HeawoodRef", "Petersen"};
  return names;
}

inline bool is_graph_fixture(const std::string& name) {
  for (const auto& n : graph_fixture_names())
    if (n == name) return true;
  return name == "N10p";
}

inline MultiGraph graph_fixture(const std::string& name) {
  if (name == "K6") return complete_graph(6);
  if (name == "K7") return complete_graph(7);
  if (name == "K3311") return complete_multipartite({3, 3, 1, 1});
  if (name == "D4") return d4_graph();
  if (name == "N9") return n9_graph();
  if (name == "N'10" || name == "N10p") return n10p_graph();
  if (name == "HeawoodRef") return heawood_graph();
  if (name == "Petersen") return petersen_graph();
  throw graph_error("unknown fixture '" + name + "'");
}

inline GaussLink link_fixture(const std::string& name) {
  if (name == "Hopf") return hopf_link();
  if (name == "Trefoil") return trefoil_knot();
  if (name == "Fig8") return figure_eight_knot();
  throw graph_error("unknown link fixture '" + name + "'");
}

// The reduction scripts for N9 and N'10 with their targets. The 7-vertex
// results have a vertex of degree 6, so they are K3,3,1.
struct ScriptClaim {
  std::string graph;
  std::string script;
  std::string target;
};

inline const std::vector<ScriptClaim>& minor_script_claims() {
  static const std::vector<ScriptClaim> claims{
      {"N9", "-7 8, -8 9, -9 7, /4 7, /5 8, /6 9", "K6"},
      {"N9", "-6 1, -6 2, -6 4, -6 5, -6 9, /3 9", "K3,3,1"},
      {"N9", "-1 2, -2 3, -3 1, -4 5, -5 6, -6 4", "P9"},
      {"N'10", "-7 8, -8 9, -9 7, /4 7, /5 8, /6 9", "K3,3,1"},
      {"N'10", "-5 1, -5 3, -5 4, -5 6, -5 8, -7 9", "P9"},
      {"N'10", "-8 2, -8 5, -8 7, -8 9, -8 10, -3 4", "P9"},
      {"N'10", "-3 4, -4 5, -5 3, /3 9, /4 7, /5 8", "K3,3,1"},
      {"N'10", "-2 4, -2 6, -2 8, -2 10, -5 1, -5 3", "P9"},
      {"N'10", "-2 8, -8 10, -10 2, /2 6, /3 10, /5 8", "K3,3,1"},
      {"N'10", "-6 1, -6 2, -6 5, -6 9, -8 7, -8 10", "P9"},
  };
  return claims;
}

}  // namespace ikg
