// One PASS/FAIL line per acceptance criterion; nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "ikg/ikg.hpp"

using namespace ikg;

namespace {

constexpr std::uint64_t kSeed = 42;

struct Outcome {
  bool pass;
  std::string detail;
};

SpatialDiagram sample(const SpatialDiagram& d, std::uint64_t t) {
  auto rng = trial_rng(kSeed, t);
  return assign_over_under(d, random_bits(d.crossing_count(), rng));
}

std::string sizes(const Closure& c) { return std::to_string(c.records.size()); }

Outcome c1() {
  auto c = closure(complete_graph(6), MoveSet{});
  return {c.records.size() == 7, sizes(c) + " classes"};
}

Outcome c2() {
  auto full = closure(complete_graph(7), MoveSet{});
  auto dy = closure(complete_graph(7), {Move::DeltaY});
  bool edges = true;
  for (const auto& r : full.records) edges = edges && r.edge_count == 21;
  return {full.records.size() == 20 && dy.records.size() == 14 && edges,
          sizes(full) + " classes, " + sizes(dy) + " by dY alone, all with 21 edges: " + (edges ? "yes" : "no")};
}

Outcome c3() {
  auto seed = complete_multipartite({3, 3, 1, 1});
  auto dy = closure(seed, {Move::DeltaY});
  auto full = closure(seed, MoveSet{});
  auto a = dy.records.size(), b = full.records.size();
  return {a == 26 && b == 58, std::to_string(a) + " by dY, " + std::to_string(b) + " total, " + std::to_string(b - a) +
                                  " need Yd"};
}

Outcome c4() {
  auto c = heawood_family();
  bool ok = true;
  std::multiset<std::size_t> fail_sizes;
  std::string names;
  for (const auto& r : c.records) {
    bool empty = gamma3_empty(r.representative);
    ok = ok && empty == r.dy_only_reachable;
    if (!empty) {
      fail_sizes.insert(r.vertex_count);
      ok = ok && r.name && r.name->front() == 'N';
      names += (names.empty() ? "" : " ") + r.name.value_or("?");
    }
  }
  ok = ok && fail_sizes == std::multiset<std::size_t>{9, 10, 10, 11, 11, 12};
  return {ok, "gamma3 non-empty exactly for " + names};
}

Outcome c5() {
  auto c = closure(complete_graph(7), MoveSet{});
  std::vector<bool> empty;
  for (const auto& r : c.records) empty.push_back(gamma3_empty(r.representative));
  std::size_t edges = 0;
  bool ok = true;
  for (const auto& t : c.transitions) {
    if (t.step.move != Move::DeltaY) continue;
    ++edges;
    if (empty[t.from] && !empty[t.to]) ok = false;
  }
  std::size_t maps = 0, max_fiber = 0;
  for (const auto& g : {complete_graph(7), n9_graph()})
    for (const auto& tri : triangles(g))
      for (std::size_t n : {1, 2}) {
        auto phi = phi_map(g, tri, n);
        ok = ok && phi.well_defined && phi.surjective && phi.max_fiber <= 2;
        max_fiber = std::max(max_fiber, phi.max_fiber);
        ++maps;
      }
  return {ok, std::to_string(edges) + " dY transitions, " + std::to_string(maps) + " Phi maps surjective, largest fiber " +
                  std::to_string(max_fiber)};
}

Outcome c6() {
  auto pf = petersen_family();
  std::map<std::string, int> counts;
  bool ok = true;
  for (const auto& s : minor_script_claims()) {
    auto target = s.target == "K6" ? complete_graph(6) : member(pf, s.target).representative;
    bool v = verify_minor_script(graph_fixture(s.graph), parse_script(s.script), target);
    ok = ok && v;
    if (v) ++counts[s.target];
  }
  std::string detail = std::to_string(minor_script_claims().size()) + " scripts verified:";
  for (auto& [k, n] : counts) detail += " " + k + " x" + std::to_string(n);
  detail += " (the 7-vertex results have a degree-6 vertex)";
  return {ok, detail};
}

Outcome c7() {
  auto c = heawood_family();
  std::size_t reductions = 0;
  bool ok = true;
  for (const auto& r : c.records) {
    ok = ok && !is_k_apex(r.representative, 2);
    for (const auto& red : one_step_reductions(r.representative)) {
      ++reductions;
      ok = ok && is_k_apex(red.graph, 2).has_value();
    }
  }
  return {ok, "20 members not 2-apex, " + std::to_string(reductions) + " one-step reductions all 2-apex"};
}

Outcome c8() {
  auto c = heawood_family();
  std::vector<const FamilyRecord*> big;
  for (const auto& r : c.records)
    if (r.vertex_count == 14) big.push_back(&r);
  if (big.size() != 1) return {false, std::to_string(big.size()) + " members with 14 vertices"};
  const auto& r = *big.front();
  bool dy = r.provenance.size() == 7;
  for (const auto& s : r.provenance) dy = dy && s.move == Move::DeltaY;
  bool iso = is_isomorphic(r.representative, heawood_graph()).has_value();
  return {dy && iso, "unique, " + std::to_string(r.provenance.size()) + " dY moves, Heawood: " + (iso ? "yes" : "no")};
}

Outcome c9() {
  bool ok = a2(trefoil_knot()) == 1 && z2_coefficient(conway_skein(trefoil_knot())) == 1;
  ok = ok && a2(figure_eight_knot()) == -1 && z2_coefficient(conway_skein(figure_eight_knot())) == -1;
  ok = ok && linking_number(hopf_link()) == 1;
  auto knots = claims::sample_knots(50, 16, kSeed);
  std::size_t agree = 0, odd = 0;
  for (const auto& k : knots) {
    long long v = a2(k);
    agree += v == z2_coefficient(conway_skein(k));
    odd += mod2(v);
  }
  ok = ok && agree == knots.size() && knots.size() >= 50;
  return {ok, "fixtures agree, " + std::to_string(agree) + "/" + std::to_string(knots.size()) + " sampled knots agree (" +
                  std::to_string(odd) + " with odd a2), lk(Hopf) = " + std::to_string(linking_number(hopf_link()))};
}

Outcome c10() {
  auto k6 = complete_graph(6), k7 = complete_graph(7);
  auto d6 = build_convex_diagram(k6), d7 = build_convex_diagram(k7);
  auto pairs = disjoint_cycle_tuples(k6, 2);
  auto hams = singletons(cycles_of_length(k7, 7));
  std::size_t a = 0, b = 0;
  for (std::uint64_t t = 0; t < 100; ++t) {
    a += parity_census(sample(d6, t), CensusMode::LkOverPairs, pairs).parity;
    b += parity_census(sample(d7, t), CensusMode::A2OverCycles, hams).parity;
  }
  return {a == 100 && b == 100 && pairs.size() == 10 && hams.size() == 360,
          "K6 " + std::to_string(a) + "/100 odd over 10 pairs, K7 " + std::to_string(b) + "/100 odd over 360 7-cycles"};
}

Outcome c11() {
  bool ok = true;
  std::string detail;
  for (const auto& r : petersen_family().records) {
    auto d = build_convex_diagram(r.representative);
    auto pairs = disjoint_cycle_tuples(r.representative, 2);
    std::size_t hits = 0;
    for (std::uint64_t t = 0; t < 50; ++t) hits += !parity_census(sample(d, t), CensusMode::LkOverPairs, pairs).odd.empty();
    ok = ok && hits == 50;
    detail += (detail.empty() ? "" : ", ") + *r.name + " " + std::to_string(hits) + "/50";
  }
  return {ok, detail};
}

Outcome c12() {
  auto d = d4_lemma_diagram();
  const std::size_t c = d.crossing_count();
  auto lift = lift_d4(d.graph, d4_identity_model(d.graph));
  std::size_t both = 0, alpha_one = 0;
  for (std::uint64_t mask = 0; mask < (1ull << c); ++mask) {
    auto e = evaluate_d4(assign_over_under(d, bits_of(mask, c)), lift);
    if (!e.both_odd()) continue;
    ++both;
    alpha_one += e.alpha == 1;
  }
  auto n9 = n9_graph();
  auto models = d4_models(n9);
  std::vector<D4Lift> lifts;
  for (const auto& m : models) lifts.push_back(lift_d4(n9, m));
  auto dn = build_convex_diagram(n9);
  std::size_t hits = 0, hits_one = 0;
  for (std::uint64_t t = 0; t < 20; ++t) {
    auto a = sample(dn, t);
    for (const auto& l : lifts) {
      auto e = evaluate_d4(a, l);
      if (!e.both_odd()) continue;
      ++hits;
      hits_one += e.alpha == 1;
    }
  }
  bool ok = both > 0 && both == alpha_one && hits > 0 && hits == hits_one;
  return {ok, "D4: " + std::to_string(1ull << c) + " assignments, " + std::to_string(alpha_one) + "/" +
                  std::to_string(both) + " with both lk odd have alpha 1; N9: " + std::to_string(models.size()) +
                  " D4 models x 20 diagrams, " + std::to_string(hits_one) + "/" + std::to_string(hits)};
}

Outcome c13() {
  bool ok = true;
  std::string detail;
  for (const auto& [name, g] : {std::pair{std::string("N9"), n9_graph()}, std::pair{std::string("N'10"), n10p_graph()}}) {
    auto d = build_convex_diagram(g);
    auto cycles = all_cycles(g);
    auto triples = disjoint_cycle_tuples(g, 3);
    std::size_t found = 0, knots = 0;
    for (std::uint64_t t = 0; t < 200; ++t) {
      auto w = n9fn_check(sample(d, t), cycles, triples);
      found += w.found();
      knots += w.knot.has_value();
    }
    ok = ok && found == 200;
    detail += (detail.empty() ? "" : ", ") + name + " " + std::to_string(found) + "/200 (" + std::to_string(knots) +
              " by odd a2)";
  }
  return {ok, detail};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"Petersen family has 7 classes", c1},
      {"Heawood family 20 / 14, 21 edges", c2},
      {"K3,3,1,1 counts 26 and 58", c3},
      {"gamma3 empty iff dY-only reachable", c4},
      {"gamma3 emptiness along dY, Phi surjective", c5},
      {"minor scripts", c6},
      {"2-apex and proper minors", c7},
      {"C14 is the Heawood graph", c8},
      {"a2 / skein oracle", c9},
      {"Conway-Gordon parities", c10},
      {"odd pair in Petersen family", c11},
      {"D4 alpha lemma", c12},
      {"N9 / N'10 dichotomy", c13},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char t[32];
    std::snprintf(t, sizeof t, "%.2fs", secs);
    std::cout << (o.pass ? "PASS " : "FAIL ") << i + 1 << " " << criteria[i].first << ": " << o.detail << " [" << t << "]"
              << std::endl;
    failed += !o.pass;
  }
  std::cout << (failed ? "FAILED " : "ALL PASSED ") << criteria.size() - failed << "/" << criteria.size() << std::endl;
  return failed ? 1 : 0;
}
