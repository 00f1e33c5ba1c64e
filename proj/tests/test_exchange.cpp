#include <gtest/gtest.h>

#include <deque>

#include "ikg/ikg.hpp"

using namespace ikg;

namespace {

// Backtracking isomorphism test on multiplicity matrices; no refinement, no canonical forms.
bool slow_isomorphic(const MultiGraph& g, const MultiGraph& h) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
  auto gs = degree_sequence(g), hs = degree_sequence(h);
  if (gs != hs) return false;
  const auto& gv = g.vertices();
  const auto& hv = h.vertices();
  std::size_t n = gv.size();
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> go = [&](std::size_t i) {
    if (i == n) return true;
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j] || g.degree(gv[i]) != h.degree(hv[j])) continue;
      bool ok = true;
      for (std::size_t k = 0; k <= i && ok; ++k) {
        std::size_t mk = k == i ? j : static_cast<std::size_t>(map[k]);
        ok = g.edges_between(gv[i], gv[k]).size() == h.edges_between(hv[j], hv[mk]).size();
      }
      if (!ok) continue;
      map[i] = static_cast<int>(j);
      used[j] = true;
      if (go(i + 1)) return true;
      used[j] = false;
    }
    map[i] = -1;
    return false;
  };
  return go(0);
}

std::vector<MultiGraph> oracle_closure(const MultiGraph& seed, bool with_yd) {
  std::vector<MultiGraph> seen{seed};
  std::deque<MultiGraph> queue{seed};
  auto add = [&](const MultiGraph& g) {
    for (const auto& s : seen)
      if (slow_isomorphic(s, g)) return;
    seen.push_back(g);
    queue.push_back(g);
  };
  while (!queue.empty()) {
    auto g = queue.front();
    queue.pop_front();
    for (const auto& t : triangles(g)) add(delta_y(g, t));
    if (with_yd)
      for (VertexId v : g.vertices())
        if (y_delta_applicable(g, v)) add(y_delta(g, v));
  }
  return seen;
}

}  // namespace

TEST(Exchange, DeltaYOnK4GivesK23) {
  auto k4 = complete_graph(4);
  auto g = delta_y(k4, {1, 2, 3});
  EXPECT_EQ(g.vertex_count(), 5u);
  EXPECT_EQ(g.edge_count(), 6u);
  EXPECT_TRUE(is_isomorphic(g, complete_multipartite({2, 3})));
  EXPECT_TRUE(triangles(g).empty());
}

TEST(Exchange, YDeltaOnK23GivesK4) {
  auto k23 = complete_multipartite({2, 3});
  ASSERT_TRUE(y_delta_applicable(k23, 1));
  EXPECT_FALSE(y_delta_applicable(k23, 3));
  EXPECT_TRUE(is_isomorphic(y_delta(k23, 1), complete_graph(4)));
  EXPECT_THROW(y_delta(k23, 3), graph_error);
}

TEST(Exchange, DeltaYRejectsNonTriangle) {
  EXPECT_THROW(delta_y(cycle_graph(4), {1, 2, 3}), graph_error);
  EXPECT_THROW(delta_y(complete_graph(4), {1, 1, 2}), graph_error);
}

TEST(Exchange, TriangleCounts) {
  EXPECT_EQ(triangles(complete_graph(7)).size(), 35u);
  EXPECT_EQ(triangles(d4_graph()).size(), 0u);
  EXPECT_EQ(triangles(heawood_graph()).size(), 0u);
  EXPECT_EQ(triangles(petersen_graph()).size(), 0u);
}

TEST(Exchange, ExchangesPreserveEdgeCount) {
  auto k7 = complete_graph(7);
  for (const auto& t : triangles(k7)) EXPECT_EQ(delta_y(k7, t).edge_count(), 21u);
  auto g = delta_y(k7, {1, 2, 3});
  EXPECT_TRUE(is_isomorphic(y_delta(g, g.vertices().back()), k7));
}

TEST(Exchange, FamilySizes) {
  EXPECT_EQ(closure(complete_graph(6), MoveSet{}).records.size(), 7u);
  EXPECT_EQ(closure(complete_graph(7), MoveSet{}).records.size(), 20u);
  EXPECT_EQ(closure(complete_graph(7), {Move::DeltaY}).records.size(), 14u);
  EXPECT_EQ(closure(complete_multipartite({3, 3, 1, 1}), {Move::DeltaY}).records.size(), 26u);
  EXPECT_EQ(closure(complete_multipartite({3, 3, 1, 1}), MoveSet{}).records.size(), 58u);
}

TEST(Exchange, ClosureAgreesWithSlowOracle) {
  for (bool yd : {false, true}) {
    for (int n : {5, 6}) {
      auto seed = complete_graph(n);
      auto c = yd ? closure(seed, MoveSet{}) : closure(seed, {Move::DeltaY});
      auto o = oracle_closure(seed, yd);
      ASSERT_EQ(c.records.size(), o.size()) << "K" << n << " yd=" << yd;
      for (const auto& g : o) {
        bool found = false;
        for (const auto& r : c.records) found = found || slow_isomorphic(r.representative, g);
        EXPECT_TRUE(found);
      }
    }
  }
}

TEST(Exchange, ClosureIndependentOfOrderAndJobs) {
  auto seed = complete_graph(7);
  auto a = closure(seed, MoveSet{});
  auto b = closure(seed, MoveSet{}, ClosureOptions{true, 1});
  auto c = closure(seed, MoveSet{}, ClosureOptions{false, 3});
  auto certs = [](const Closure& x) {
    std::set<std::string> s;
    for (const auto& r : x.records) s.insert(r.certificate.hex());
    return s;
  };
  EXPECT_EQ(certs(a), certs(b));
  EXPECT_EQ(certs(a), certs(c));
  ASSERT_EQ(a.records.size(), c.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i)
    EXPECT_EQ(a.records[i].certificate, c.records[i].certificate);
}

TEST(Exchange, ProvenanceReplays) {
  auto seed = complete_multipartite({3, 3, 1, 1});
  auto c = closure(seed, MoveSet{});
  for (const auto& r : c.records) {
    auto g = replay(seed, r.provenance);
    EXPECT_EQ(canonical_form(g), r.certificate);
    EXPECT_EQ(r.edge_count, 22u);
  }
  for (const auto& t : c.transitions) {
    auto g = replay(c.records[t.from].representative, {t.step});
    EXPECT_EQ(canonical_form(g), c.records[t.to].certificate);
  }
}

TEST(Exchange, MoveSetParse) {
  auto m = MoveSet::parse("dy");
  EXPECT_TRUE(m.delta_y);
  EXPECT_FALSE(m.y_delta);
  EXPECT_THROW(MoveSet::parse("dy,xx"), graph_error);
}
