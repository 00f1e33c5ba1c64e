#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "ikg/ikg.hpp"

using namespace ikg;

namespace {

MultiGraph random_multigraph(std::mt19937_64& rng, int n, int m) {
  MultiGraph g;
  for (int i = 0; i < n; ++i) g.add_vertex(i);
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int k = 0; k < m; ++k) g.add_edge(pick(rng), pick(rng));
  return g;
}

MultiGraph shuffled(const MultiGraph& g, std::mt19937_64& rng) {
  std::vector<VertexId> to(g.vertices().begin(), g.vertices().end());
  std::shuffle(to.begin(), to.end(), rng);
  std::map<VertexId, VertexId> m;
  for (std::size_t i = 0; i < to.size(); ++i) m[g.vertices()[i]] = to[i] + 100;
  return relabel(g, m);
}

// Brute-force isomorphism over all vertex bijections.
bool brute_isomorphic(const MultiGraph& g, const MultiGraph& h) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
  auto gv = g.vertices(), hv = h.vertices();
  std::vector<std::size_t> p(hv.size());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < gv.size() && ok; ++i)
      for (std::size_t j = i; j < gv.size() && ok; ++j)
        ok = g.edges_between(gv[i], gv[j]).size() == h.edges_between(hv[p[i]], hv[p[j]]).size();
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

MultiGraph prism() {
  return MultiGraph::from_edges({{1, 2}, {2, 3}, {3, 1}, {4, 5}, {5, 6}, {6, 4}, {1, 4}, {2, 5}, {3, 6}});
}

}  // namespace

TEST(Canon, InvariantUnderRelabeling) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    auto g = random_multigraph(rng, 3 + t % 8, 4 + t % 13);
    auto h = shuffled(g, rng);
    ASSERT_EQ(canonical_form(g), canonical_form(h)) << format_edge_list(g);
    auto iso = is_isomorphic(g, h);
    ASSERT_TRUE(iso);
    for (const auto& e : g.edges())
      EXPECT_EQ(g.edges_between(e.u, e.v).size(), h.edges_between(iso->at(e.u), iso->at(e.v)).size());
  }
}

TEST(Canon, AgreesWithBruteForce) {
  std::mt19937_64 rng(11);
  int agree_iso = 0;
  for (int t = 0; t < 300; ++t) {
    int n = 3 + t % 4;
    auto g = random_multigraph(rng, n, n + 1);
    auto h = random_multigraph(rng, n, n + 1);
    bool brute = brute_isomorphic(g, h);
    ASSERT_EQ(canonical_form(g) == canonical_form(h), brute);
    agree_iso += brute;
  }
  EXPECT_GT(agree_iso, 0);
}

TEST(Canon, DifferentInvariantsGiveDifferentCertificates) {
  std::mt19937_64 rng(5);
  auto invariants = [](const MultiGraph& g) {
    auto s = simplify(g);
    std::vector<std::size_t> by_len(s.vertex_count() + 1);
    for (const auto& c : all_cycles(s)) ++by_len[c.edges.size()];
    return std::tuple(degree_sequence(g), triangles(g).size(), by_len, g.edge_count());
  };
  int distinct = 0;
  for (int t = 0; t < 200; ++t) {
    auto g = random_multigraph(rng, 6, 9), h = random_multigraph(rng, 6, 9);
    if (invariants(g) == invariants(h)) continue;
    ++distinct;
    EXPECT_NE(canonical_form(g), canonical_form(h));
  }
  EXPECT_GT(distinct, 100);
}

TEST(Canon, DistinguishesK33FromPrism) {
  auto k33 = complete_multipartite({3, 3});
  EXPECT_EQ(degree_sequence(k33), degree_sequence(prism()));
  EXPECT_NE(canonical_form(k33), canonical_form(prism()));
  EXPECT_FALSE(is_isomorphic(k33, prism()));
}

TEST(Canon, MultiplicityMatters) {
  auto d4 = d4_graph();
  EXPECT_NE(canonical_form(d4), canonical_form(simplify(d4)));
  EXPECT_EQ(canonical_form(simplify(d4)), canonical_form(cycle_graph(4)));
  MultiGraph loop = cycle_graph(3);
  loop.add_edge(1, 1);
  EXPECT_NE(canonical_form(loop), canonical_form(cycle_graph(3)));
}

TEST(Canon, DegreeSequences) {
  EXPECT_EQ(degree_sequence(n9_graph()), (std::vector<int>{5, 5, 5, 5, 5, 5, 4, 4, 4}));
  EXPECT_EQ(degree_sequence(n10p_graph()), (std::vector<int>{5, 5, 4, 4, 4, 4, 4, 4, 4, 4}));
  EXPECT_EQ(degree_sequence(complete_graph(7)), std::vector<int>(7, 6));
}

TEST(Canon, EmptyAndHighlySymmetric) {
  EXPECT_EQ(canonical_form(MultiGraph{}), canonical_form(MultiGraph{}));
  std::mt19937_64 rng(3);
  EXPECT_TRUE(is_isomorphic(heawood_graph(), shuffled(heawood_graph(), rng)));
  EXPECT_TRUE(is_isomorphic(petersen_graph(), petersen_graph()));
  EXPECT_FALSE(is_isomorphic(petersen_graph(), complete_multipartite({5, 5})));
}
