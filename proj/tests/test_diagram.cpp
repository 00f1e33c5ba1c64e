#include <gtest/gtest.h>

#include <random>

#include "ikg/ikg.hpp"

using namespace ikg;

namespace {

// Two chords of a convex polygon cross iff their endpoints interleave.
std::size_t interleaving_pairs(const MultiGraph& g, const std::vector<VertexId>& order) {
  std::map<VertexId, std::size_t> pos;
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
  std::size_t n = 0;
  const auto& es = g.edges();
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      auto [a, b] = std::minmax(pos[es[i].u], pos[es[i].v]);
      auto c = pos[es[j].u], d = pos[es[j].v];
      if (c == a || c == b || d == a || d == b) continue;
      bool cin = a < c && c < b, din = a < d && d < b;
      n += cin != din;
    }
  return n;
}

}  // namespace

TEST(Diagram, ConvexCrossingCounts) {
  EXPECT_EQ(build_convex_diagram(complete_graph(6)).crossing_count(), 15u);
  EXPECT_EQ(build_convex_diagram(complete_graph(7)).crossing_count(), 35u);
  MultiGraph tree = MultiGraph::from_edges({{0, 1}, {0, 2}, {0, 3}, {3, 4}});
  EXPECT_EQ(build_convex_diagram(tree).crossing_count(), 0u);
  EXPECT_EQ(build_convex_diagram(cycle_graph(6)).crossing_count(), 0u);
}

TEST(Diagram, CrossingsMatchChordInterleaving) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 40; ++t) {
    MultiGraph g;
    int n = 5 + t % 5;
    for (int i = 0; i < n; ++i) g.add_vertex(i);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int k = 0; k < 2 * n; ++k) {
      int a = pick(rng), b = pick(rng);
      if (a != b && !g.adjacent(a, b)) g.add_edge(a, b);
    }
    auto order = g.vertices();
    std::shuffle(order.begin(), order.end(), rng);
    auto d = build_convex_diagram(g, order);
    EXPECT_EQ(d.crossing_count(), interleaving_pairs(g, order));
  }
}

TEST(Diagram, AlongListsAreConsistent) {
  for (const auto& g : {n9_graph(), d4_graph(), complete_graph(7)}) {
    auto d = build_convex_diagram(g);
    std::map<int, int> seen;
    for (const auto& [e, ids] : d.along) {
      for (int id : ids) {
        ++seen[id];
        const auto& c = d.crossings.at(static_cast<std::size_t>(id));
        EXPECT_TRUE(c.edge_a == e || c.edge_b == e);
      }
      for (std::size_t i = 1; i < ids.size(); ++i) {
        const auto& p = d.crossings[ids[i - 1]];
        const auto& q = d.crossings[ids[i]];
        auto pp = p.edge_a == e ? p.param_a : p.param_b;
        auto qp = q.edge_a == e ? q.param_a : q.param_b;
        EXPECT_LT(pp, qp);
      }
    }
    for (const auto& c : d.crossings) {
      EXPECT_EQ(seen[c.id], 2);
      EXPECT_NE(c.edge_a, c.edge_b);
      EXPECT_TRUE(c.orient == 1 || c.orient == -1);
    }
  }
}

TEST(Diagram, MultigraphsAndLoops) {
  auto d = build_convex_diagram(d4_graph());
  EXPECT_EQ(d.polylines.size(), 8u);
  MultiGraph g = complete_graph(4);
  g.add_edge(1, 1);
  g.add_edge(2, 3);
  auto dl = build_convex_diagram(g);
  EXPECT_EQ(dl.polylines.size(), g.edge_count());
  for (const auto& e : g.edges()) {
    const auto& pl = dl.polylines.at(e.id);
    EXPECT_EQ(pl.front(), dl.positions.at(e.u));
    EXPECT_EQ(pl.back(), dl.positions.at(e.v));
  }
  EXPECT_THROW(build_convex_diagram(complete_graph(4), {1, 2, 3}), diagram_error);
}

TEST(Diagram, OverUnderAssignment) {
  auto d = build_convex_diagram(complete_graph(6));
  auto zero = assign_over_under(d, std::vector<bool>(15, false));
  for (const auto& c : zero.crossings) EXPECT_FALSE(c.a_over);
  EXPECT_THROW(assign_over_under(d, std::vector<bool>(14)), diagram_error);

  auto a = assign_over_under(d, std::uint64_t{1}), b = assign_over_under(d, std::uint64_t{1});
  auto c = assign_over_under(d, std::uint64_t{2});
  bool same = true, differ = false;
  for (std::size_t i = 0; i < d.crossings.size(); ++i) {
    same = same && a.crossings[i].a_over == b.crossings[i].a_over;
    differ = differ || a.crossings[i].a_over != c.crossings[i].a_over;
  }
  EXPECT_TRUE(same);
  EXPECT_TRUE(differ);

  auto r1 = trial_rng(42, 3), r2 = trial_rng(42, 3), r3 = trial_rng(42, 4);
  EXPECT_EQ(r1(), r2());
  EXPECT_NE(trial_rng(42, 3)(), r3());
  EXPECT_EQ(bits_of(0b101, 4), (std::vector<bool>{true, false, true, false}));
}

TEST(Diagram, JsonRoundTrip) {
  for (const auto& g : {complete_graph(6), d4_graph(), n10p_graph()}) {
    auto d = assign_over_under(build_convex_diagram(g), std::uint64_t{7});
    auto j = to_json(d);
    auto back = diagram_from_json(nlohmann::json::parse(j.dump()));
    ASSERT_EQ(back.crossing_count(), d.crossing_count());
    EXPECT_EQ(to_json(back), j);
    for (const auto& [v, p] : j["vertices"].items()) EXPECT_NE(p[0].get<std::string>().find('/'), std::string::npos);
  }
  auto j = to_json(build_convex_diagram(complete_graph(5)));
  j["crossings"].erase(0);
  EXPECT_THROW(diagram_from_json(j), diagram_error);
}

TEST(Diagram, D4LemmaDrawing) {
  auto d = d4_lemma_diagram();
  EXPECT_LE(d.crossing_count(), 20u);
  for (const auto& t : d4_pairs()) EXPECT_GE(inter_crossings(d, t), 2u);
}

TEST(Diagram, Rationals) {
  EXPECT_EQ(to_string(Rational(3, 6)), "1/2");
  EXPECT_EQ(parse_rational("-4/8"), Rational(-1, 2));
  EXPECT_EQ(parse_rational("5"), Rational(5));
}
