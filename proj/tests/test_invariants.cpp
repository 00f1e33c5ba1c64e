#include <gtest/gtest.h>

#include "ikg/ikg.hpp"

using namespace ikg;

namespace {

GaussLink rotate(GaussLink l, std::size_t k) {
  auto& c = l.components[0];
  if (!c.empty()) std::rotate(c.begin(), c.begin() + static_cast<long>(k % c.size()), c.end());
  return l;
}

GaussLink reverse(GaussLink l) {
  for (auto& c : l.components) std::reverse(c.begin(), c.end());
  return l;
}

GaussLink mirror(GaussLink l) {
  for (auto& c : l.components)
    for (auto& p : c) {
      p.over = !p.over;
      p.sign = -p.sign;
    }
  return l;
}

// Signed count of crossings where the first component passes over the second.
long long over_count(const GaussLink& l) {
  std::set<int> second;
  for (const auto& p : l.components[1]) second.insert(p.crossing);
  long long s = 0;
  for (const auto& p : l.components[0])
    if (p.over && second.count(p.crossing)) s += p.sign;
  return s;
}

}  // namespace

TEST(Invariants, Fixtures) {
  EXPECT_EQ(linking_number(hopf_link()), 1);
  EXPECT_EQ(to_string(conway_skein(hopf_link())), "z");
  EXPECT_EQ(to_string(conway_skein(trefoil_knot())), "z^2 + 1");
  EXPECT_EQ(a2(trefoil_knot()), 1);
  EXPECT_EQ(a2(figure_eight_knot()), -1);
  EXPECT_EQ(z2_coefficient(conway_skein(figure_eight_knot())), -1);
  GaussLink unknot{{{}}};
  EXPECT_EQ(to_string(conway_skein(unknot)), "1");
  EXPECT_EQ(a2(unknot), 0);
  GaussLink split{{{}, {}}};
  EXPECT_EQ(linking_number(split), 0);
  EXPECT_EQ(to_string(conway_skein(split)), "0");
}

TEST(Invariants, MirrorImages) {
  EXPECT_EQ(linking_number(mirror(hopf_link())), -1);
  EXPECT_EQ(a2(mirror(trefoil_knot())), 1);
  EXPECT_EQ(a2(mirror(figure_eight_knot())), -1);
}

TEST(Invariants, Errors) {
  EXPECT_THROW(linking_number(trefoil_knot()), graph_error);
  EXPECT_THROW(a2(hopf_link()), graph_error);
  EXPECT_THROW(parse_gauss("[c0o+ c1u+]"), graph_error);
  EXPECT_THROW(parse_gauss("[c0o+ c0u-]"), graph_error);
  EXPECT_THROW(parse_gauss("[c0x+ c0u+]"), graph_error);
  GaussLink kinks{{{}}};
  for (int i = 0; i < 25; ++i) {
    kinks.components[0].push_back({i, true, 1});
    kinks.components[0].push_back({i, false, 1});
  }
  EXPECT_THROW(conway_skein(kinks), graph_error);
}

TEST(Invariants, GaussRoundTrip) {
  for (const auto& l : {hopf_link(), trefoil_knot(), figure_eight_knot()})
    EXPECT_EQ(format_gauss(parse_gauss(format_gauss(l))), format_gauss(l));
  EXPECT_EQ(to_string(Passage{3, true, 1}), "c3o+");
}

TEST(Invariants, A2MatchesSkeinOnSampledKnots) {
  auto knots = claims::sample_knots(120, 20, 17);
  std::size_t nontrivial = 0;
  for (const auto& k : knots) {
    ASSERT_EQ(validate_gauss(k), "");
    auto p = conway_skein(k);
    ASSERT_EQ(a2(k), z2_coefficient(p)) << format_gauss(k);
    EXPECT_EQ(p.at(0), 1);
    nontrivial += a2(k) != 0;
  }
  EXPECT_GT(nontrivial, 0u);
}

TEST(Invariants, A2IndependentOfBasepointAndDirection) {
  auto knots = claims::sample_knots(50, 24, 5);
  for (const auto& k : knots) {
    long long v = a2(k);
    for (std::size_t r = 0; r < k.components[0].size(); ++r) ASSERT_EQ(a2(rotate(k, r)), v);
    EXPECT_EQ(a2(reverse(k)), v);
  }
}

TEST(Invariants, DiagramSignConvention) {
  auto k6 = complete_graph(6);
  auto d = build_convex_diagram(k6, {1, 4, 2, 5, 3, 6});
  auto pair = parse_tuple(k6, "[1 2 3] [4 5 6]");
  for (int t = 0; t < 20; ++t) {
    auto a = assign_over_under(d, static_cast<std::uint64_t>(t));
    auto l = extract_gauss(a, pair);
    ASSERT_EQ(validate_gauss(l), "");
    EXPECT_EQ(linking_number(l), over_count(l));
    std::swap(l.components[0], l.components[1]);
    EXPECT_EQ(linking_number(l), over_count(l));
  }
  auto apart = extract_gauss(build_convex_diagram(k6), pair);
  EXPECT_TRUE(apart.components[0].empty());
  EXPECT_TRUE(apart.components[1].empty());
}

TEST(Invariants, LinkingNumberIgnoresSelfCrossings) {
  auto k7 = complete_graph(7);
  auto d = build_convex_diagram(k7);
  auto pair = parse_tuple(k7, "[1 3 5] [2 4 6 7]");
  std::set<EdgeId> first(pair.cycles[0].edges.begin(), pair.cycles[0].edges.end());
  std::set<EdgeId> second(pair.cycles[1].edges.begin(), pair.cycles[1].edges.end());
  for (int t = 0; t < 50; ++t) {
    auto a = assign_over_under(d, static_cast<std::uint64_t>(t));
    long long lk = linking_number(extract_gauss(a, pair));
    for (auto& c : a.crossings) {
      bool self = (first.count(c.edge_a) && first.count(c.edge_b)) || (second.count(c.edge_a) && second.count(c.edge_b));
      if (self) c.a_over = !c.a_over;
    }
    EXPECT_EQ(mod2(linking_number(extract_gauss(a, pair))), mod2(lk));
  }
}

TEST(Invariants, LinkingNumberZ2Additive) {
  auto n9 = n9_graph();
  auto d = build_convex_diagram(n9);
  auto mu = parse_cycle(n9, "[7 8 9]");
  auto g = parse_cycle(n9, "[1 2 4 5]"), g1 = parse_cycle(n9, "[1 2 6 5]"), g2 = parse_cycle(n9, "[4 2 6 5]");
  ASSERT_TRUE(z2_decompose(g, {g1, g2}));
  for (std::uint64_t t = 0; t < 100; ++t) {
    auto rng = trial_rng(99, t);
    auto a = assign_over_under(d, random_bits(d.crossing_count(), rng));
    auto lk = [&](const CycleSubgraph& c) { return linking_number(extract_gauss(a, make_tuple({c, mu}))); };
    EXPECT_EQ(mod2(lk(g)), mod2(lk(g1) + lk(g2)));
  }
}

TEST(Invariants, K7HamiltonianKnotsBoundedByDiagram) {
  auto k7 = complete_graph(7);
  auto d = assign_over_under(build_convex_diagram(k7), std::uint64_t{3});
  auto hs = cycles_of_length(k7, 7);
  EXPECT_EQ(hs.size(), 360u);
  for (const auto& h : hs) {
    auto k = extract_gauss(d, h);
    EXPECT_LE(k.crossing_count(), 35u);
    EXPECT_EQ(validate_gauss(k), "");
  }
}
