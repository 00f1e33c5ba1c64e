#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ikg/catalog.hpp"
#include "ikg/cycles.hpp"
#include "ikg/minors.hpp"
#include "ikg/parallel.hpp"
#include "ikg/planarity.hpp"
#include "ikg/spatial.hpp"

namespace ikg {

struct RunOptions {
  std::size_t trials = 0;  // 0 = the check's default
  std::uint64_t seed = 42;
  unsigned jobs = 1;
  bool enumerate = false;
};

struct Report {
  std::string id;
  bool pass = false;
  std::string summary;
  nlohmann::json evidence = nlohmann::json::object();
};

// ---------------------------------------------------------------------------
// Sampled spatial checks

inline const std::vector<std::string>& spatial_checks() {
  static const std::vector<std::string> ids{"cg-k6", "cg-k7", "d4-lemma", "n9fn", "petersen-lk"};
  return ids;
}

namespace detail {

struct TrialOutcome {
  bool ok = false;
  std::size_t hits = 0;
  std::string witness;
};

inline Report run_trials(const std::string& id, const SpatialDiagram& base, std::size_t trials, const RunOptions& opt,
                         const std::function<TrialOutcome(const SpatialDiagram&)>& check, bool enumerate = false) {
  std::vector<TrialOutcome> out(trials);
  parallel_for(trials, opt.jobs, [&](std::size_t t) {
    std::vector<bool> bits;
    if (enumerate) {
      bits = bits_of(t, base.crossing_count());
    } else {
      auto rng = trial_rng(opt.seed, t);
      bits = random_bits(base.crossing_count(), rng);
    }
    out[t] = check(assign_over_under(base, bits));
  });
  Report r;
  r.id = id;
  std::size_t passed = 0, hits = 0;
  nlohmann::json rows = nlohmann::json::array();
  nlohmann::json failures = nlohmann::json::array();
  for (std::size_t t = 0; t < trials; ++t) {
    passed += out[t].ok;
    hits += out[t].hits;
    if (!out[t].ok) failures.push_back(t);
    if (!enumerate) rows.push_back({{"trial", t}, {"ok", out[t].ok}, {"witness", out[t].witness}});
  }
  r.pass = passed == trials;
  r.evidence["crossings"] = base.crossing_count();
  r.evidence[enumerate ? "assignments" : "trials"] = trials;
  r.evidence["passed"] = passed;
  r.evidence["failures"] = failures;
  r.evidence["hits"] = hits;
  if (!enumerate) {
    r.evidence["seed"] = opt.seed;
    r.evidence["per_trial"] = rows;
  }
  r.summary = std::to_string(passed) + "/" + std::to_string(trials) + (enumerate ? " assignments" : " trials") + " pass";
  return r;
}

inline std::string odd_list(const MultiGraph& g, const std::vector<CycleTuple>& scope, const CensusResult& c,
                            std::size_t limit = 3) {
  std::string s;
  for (std::size_t k = 0; k < c.odd.size() && k < limit; ++k) {
    if (k) s += "; ";
    s += format_tuple(g, scope[c.odd[k]]) + " = " + std::to_string(c.values[c.odd[k]]);
  }
  if (c.odd.size() > limit) s += "; ...";
  return s;
}

}  // namespace detail

inline std::size_t default_trials(const std::string& check) {
  if (check == "n9fn") return 200;
  if (check == "petersen-lk") return 50;
  if (check == "d4-lemma") return 20;
  return 100;
}

// Σ lk over Γ^(2) is odd in every trial.
inline Report check_lk_parity(const MultiGraph& g, const RunOptions& opt) {
  auto d = build_convex_diagram(g);
  auto scope = disjoint_cycle_tuples(g, 2);
  auto r = detail::run_trials("cg-k6", d, opt.trials ? opt.trials : 100, opt, [&](const SpatialDiagram& a) {
    auto c = parity_census(a, CensusMode::LkOverPairs, scope);
    return detail::TrialOutcome{c.parity == 1, 0, "odd: " + detail::odd_list(g, scope, c)};
  });
  r.evidence["scope"] = scope.size();
  return r;
}

// Σ a2 over the Hamiltonian cycles is odd in every trial.
inline Report check_a2_parity(const MultiGraph& g, const RunOptions& opt) {
  auto d = build_convex_diagram(g);
  auto scope = singletons(cycles_of_length(g, g.vertex_count()));
  auto r = detail::run_trials("cg-k7", d, opt.trials ? opt.trials : 100, opt, [&](const SpatialDiagram& a) {
    auto c = parity_census(a, CensusMode::A2OverCycles, scope);
    return detail::TrialOutcome{c.parity == 1, 0,
                                std::to_string(c.odd.size()) + " odd; " + detail::odd_list(g, scope, c, 2)};
  });
  r.evidence["scope"] = scope.size();
  return r;
}

// Some element of Γ^(2) has odd lk in every trial.
inline Report check_odd_pair(const MultiGraph& g, const RunOptions& opt) {
  auto d = build_convex_diagram(g);
  auto scope = disjoint_cycle_tuples(g, 2);
  return detail::run_trials("petersen-lk", d, opt.trials ? opt.trials : 50, opt, [&](const SpatialDiagram& a) {
    for (const auto& t : scope)
      if (long long lk = linking_number(extract_gauss(a, t)); mod2(lk))
        return detail::TrialOutcome{true, 0, format_tuple(g, t) + " lk " + std::to_string(lk)};
    return detail::TrialOutcome{false, 0, "no odd pair"};
  });
}

inline Report check_dichotomy(const MultiGraph& g, const RunOptions& opt) {
  auto d = build_convex_diagram(g);
  auto cycles = all_cycles(g);
  auto triples = disjoint_cycle_tuples(g, 3);
  return detail::run_trials("n9fn", d, opt.trials ? opt.trials : 200, opt, [&](const SpatialDiagram& a) {
    auto w = n9fn_check(a, cycles, triples);
    std::string s;
    if (w.knot) s = "a2" + format_cycle(g, *w.knot) + " = " + std::to_string(w.a2_value);
    if (w.triple)
      s = "lk odd on " + format_tuple(g, *w.triple) + " (" + std::to_string(w.lk[0]) + "," + std::to_string(w.lk[1]) +
          "," + std::to_string(w.lk[2]) + ")";
    return detail::TrialOutcome{w.found(), 0, w.found() ? s : "no witness"};
  });
}

// Every assignment with both Γ^(2)(D4) links odd has α = 1. On D4 itself the
// fixed drawing is used; on other graphs through every D4 model found. At
// least one such assignment must occur for the check to pass.
inline Report check_d4_lemma(const MultiGraph& g, const RunOptions& opt) {
  Report r;
  if (is_isomorphic(g, d4_graph())) {
    auto d = d4_lemma_diagram();
    const bool all = opt.enumerate || opt.trials == 0;
    std::size_t n = all ? (std::size_t{1} << d.crossing_count()) : opt.trials;
    auto lift = lift_d4(d.graph, d4_identity_model(d.graph));
    r = detail::run_trials("d4-lemma", d, n, opt, [&](const SpatialDiagram& a) {
      auto e = evaluate_d4(a, lift);
      if (!e.both_odd()) return detail::TrialOutcome{true, 0, {}};
      return detail::TrialOutcome{e.alpha == 1, 1, "lk " + std::to_string(e.lk_lambda) + "," +
                                                       std::to_string(e.lk_lambda_prime) + " alpha " +
                                                       std::to_string(e.alpha)};
    }, all);
  } else {
    auto models = d4_models(g);
    std::vector<D4Lift> lifts;
    for (const auto& m : models) lifts.push_back(lift_d4(g, m));
    auto d = build_convex_diagram(g);
    r = detail::run_trials("d4-lemma", d, opt.trials ? opt.trials : 20, opt, [&](const SpatialDiagram& a) {
      detail::TrialOutcome o{true, 0, {}};
      for (const auto& l : lifts) {
        auto e = evaluate_d4(a, l);
        if (!e.both_odd()) continue;
        ++o.hits;
        if (e.alpha != 1) o.ok = false;
      }
      o.witness = std::to_string(o.hits) + " models with both links odd";
      return o;
    });
    r.evidence["models"] = models.size();
  }
  std::size_t hits = r.evidence["hits"];
  if (hits == 0) {
    r.pass = false;
    r.summary += ", but no assignment had both links odd";
  } else {
    r.summary += ", " + std::to_string(hits) + " with both links odd";
  }
  return r;
}

inline Report run_spatial(const std::string& check, const MultiGraph& g, const RunOptions& opt) {
  Report r;
  if (check == "cg-k6") r = check_lk_parity(g, opt);
  else if (check == "cg-k7") r = check_a2_parity(g, opt);
  else if (check == "petersen-lk") r = check_odd_pair(g, opt);
  else if (check == "n9fn") r = check_dichotomy(g, opt);
  else if (check == "d4-lemma") r = check_d4_lemma(g, opt);
  else throw graph_error("unknown spatial check '" + check + "'");
  r.id = check;
  return r;
}

// ---------------------------------------------------------------------------
// Claims

inline const std::vector<std::string>& claim_ids() {
  static const std::vector<std::string> ids{
      "petersen-family", "heawood-family",   "k3311-counts",  "theorem1-equivalence", "phi-surjective",
      "minor-scripts",   "apex-proper-minors", "c14-heawood", "invariant-oracle",     "conway-gordon-k6",
      "conway-gordon-k7", "petersen-lk",     "d4-lemma",      "n9fn"};
  return ids;
}

namespace claims {

inline Report petersen_family(const RunOptions& opt) {
  auto c = ikg::petersen_family(opt.jobs);
  Report r{"petersen-family", c.records.size() == 7, std::to_string(c.records.size()) + " classes"};
  for (const auto& m : c.records) r.evidence["members"].push_back(*m.name);
  return r;
}

inline Report heawood_family(const RunOptions& opt) {
  auto full = closure(complete_graph(7), MoveSet{true, true}, ClosureOptions{false, opt.jobs});
  auto dy = closure(complete_graph(7), MoveSet{true, false}, ClosureOptions{false, opt.jobs});
  bool edges21 = std::all_of(full.records.begin(), full.records.end(), [](const auto& m) { return m.edge_count == 21; });
  Report r{"heawood-family", full.records.size() == 20 && dy.records.size() == 14 && edges21};
  r.summary = std::to_string(full.records.size()) + " classes, " + std::to_string(dy.records.size()) +
              " by ΔY alone, " + (edges21 ? "all" : "not all") + " with 21 edges";
  r.evidence = {{"classes", full.records.size()}, {"dy_classes", dy.records.size()}, {"all_21_edges", edges21}};
  return r;
}

inline Report k3311_counts(const RunOptions& opt) {
  auto seed = complete_multipartite({3, 3, 1, 1});
  auto dy = closure(seed, MoveSet{true, false}, ClosureOptions{false, opt.jobs});
  auto full = closure(seed, MoveSet{true, true}, ClosureOptions{false, opt.jobs});
  Report r{"k3311-counts", dy.records.size() == 26 && full.records.size() == 58};
  r.summary = std::to_string(dy.records.size()) + " by ΔY alone, " + std::to_string(full.records.size()) + " in total";
  r.evidence = {{"dy_classes", dy.records.size()}, {"classes", full.records.size()}};
  return r;
}

inline Report theorem1_equivalence(const RunOptions& opt) {
  auto c = ikg::heawood_family(opt.jobs);
  Report r{"theorem1-equivalence", true};
  std::multiset<std::size_t> fail_sizes;
  bool named = true;
  for (const auto& m : c.records) {
    bool agree = m.gamma3_empty == m.dy_only_reachable;
    r.pass = r.pass && agree;
    if (!m.gamma3_empty) {
      fail_sizes.insert(m.vertex_count);
      named = named && m.name && m.name->front() == 'N';
    }
    r.evidence["table"].push_back(nlohmann::json{{"name", *m.name},
                                   {"vertices", m.vertex_count},
                                   {"gamma3_empty", m.gamma3_empty},
                                   {"dy_only_reachable", m.dy_only_reachable}});
  }
  const std::multiset<std::size_t> expect{9, 10, 10, 11, 11, 12};
  r.pass = r.pass && named && fail_sizes == expect;
  r.summary = std::to_string(c.records.size()) + " rows, " + std::to_string(fail_sizes.size()) +
              " with Γ3 non-empty, equivalence " + (r.pass ? "holds" : "fails");
  return r;
}

inline Report phi_surjective(const RunOptions& opt) {
  auto c = closure(complete_graph(7), MoveSet{true, true}, ClosureOptions{false, opt.jobs});
  std::vector<bool> empty(c.records.size());
  for (std::size_t i = 0; i < c.records.size(); ++i) empty[i] = gamma3_empty(c.records[i].representative);
  std::size_t edges = 0, bad = 0;
  for (const auto& t : c.transitions) {
    if (t.step.move != Move::DeltaY) continue;
    ++edges;
    if (empty[t.from] && !empty[t.to]) ++bad;
  }
  Report r{"phi-surjective", bad == 0};
  r.evidence["dy_transitions"] = edges;
  r.evidence["violations"] = bad;
  std::size_t maps = 0;
  for (const auto& [name, g] : {std::pair{std::string("K7"), complete_graph(7)}, std::pair{std::string("N9"), n9_graph()}}) {
    for (const auto& tri : triangles(g))
      for (std::size_t n : {1, 2}) {
        auto phi = phi_map(g, tri, n);
        ++maps;
        bool ok = phi.well_defined && phi.surjective && phi.max_fiber <= 2;
        if (!ok) {
          r.pass = false;
          r.evidence["phi_failures"].push_back({{"graph", name}, {"triangle", tri}, {"n", n}});
        }
      }
  }
  r.evidence["phi_maps"] = maps;
  r.summary = std::to_string(edges) + " ΔY transitions checked, " + std::to_string(maps) + " Φ maps checked";
  return r;
}

inline Report minor_scripts(const RunOptions& opt) {
  auto pf = ikg::petersen_family(opt.jobs);
  Report r{"minor-scripts", true};
  std::size_t ok = 0;
  for (const auto& s : minor_script_claims()) {
    MultiGraph target = s.target == "K6" ? complete_graph(6) : member(pf, s.target).representative;
    bool v = verify_minor_script(graph_fixture(s.graph), parse_script(s.script), target);
    ok += v;
    r.pass = r.pass && v;
    r.evidence["scripts"].push_back({{"graph", s.graph}, {"script", s.script}, {"target", s.target}, {"ok", v}});
  }
  r.summary = std::to_string(ok) + "/" + std::to_string(minor_script_claims().size()) + " scripts reproduce their targets";
  return r;
}

inline Report apex_proper_minors(const RunOptions& opt) {
  auto c = ikg::heawood_family(opt.jobs);
  std::vector<int> apex(c.records.size()), minors_ok(c.records.size());
  parallel_for(c.records.size(), opt.jobs, [&](std::size_t i) {
    apex[i] = is_k_apex(c.records[i].representative, 2).has_value();
    minors_ok[i] = all_proper_minors_2apex(c.records[i].representative);
  });
  Report r{"apex-proper-minors", true};
  for (std::size_t i = 0; i < c.records.size(); ++i) {
    r.pass = r.pass && !apex[i] && minors_ok[i];
    r.evidence["members"].push_back(nlohmann::json
        {{"name", *c.records[i].name}, {"two_apex", bool(apex[i])}, {"proper_minors_two_apex", bool(minors_ok[i])}});
  }
  r.summary = std::string(r.pass ? "no member is 2-apex and every one-step reduction is"
                                 : "2-apex pattern differs from the expected one") +
              " (over " + std::to_string(c.records.size()) + " members)";
  return r;
}

inline Report c14_heawood(const RunOptions& opt) {
  auto c = ikg::heawood_family(opt.jobs);
  std::vector<const FamilyRecord*> big;
  for (const auto& m : c.records)
    if (m.vertex_count == 14) big.push_back(&m);
  Report r{"c14-heawood", false};
  if (big.size() == 1) {
    const auto& m = *big.front();
    bool seven = m.provenance.size() == 7 &&
                 std::all_of(m.provenance.begin(), m.provenance.end(), [](const auto& s) { return s.move == Move::DeltaY; });
    bool iso = is_isomorphic(m.representative, heawood_graph()).has_value();
    r.pass = seven && iso;
    r.evidence = {{"steps", m.provenance.size()}, {"all_dy", seven}, {"isomorphic_to_heawood", iso}};
  }
  r.evidence["members_with_14_vertices"] = big.size();
  r.summary = r.pass ? "unique 14-vertex member, 7 ΔY steps from K7, isomorphic to the Heawood graph"
                     : "14-vertex identification failed";
  return r;
}

// Knots for the oracle: Hamiltonian cycles of a sampled K7 drawing.
inline std::vector<GaussLink> sample_knots(std::size_t count, std::size_t max_crossings, std::uint64_t seed) {
  auto g = complete_graph(7);
  auto d = build_convex_diagram(g);
  auto cycles = cycles_of_length(g, 7);
  std::vector<GaussLink> out;
  for (std::size_t t = 0; out.size() < count; ++t) {
    auto rng = trial_rng(seed, t);
    auto a = assign_over_under(d, random_bits(d.crossing_count(), rng));
    auto k = extract_gauss(a, cycles[rng() % cycles.size()]);
    if (k.crossing_count() <= max_crossings && k.crossing_count() > 0) out.push_back(std::move(k));
  }
  return out;
}

inline Report invariant_oracle(const RunOptions& opt) {
  Report r{"invariant-oracle", true};
  auto tre = trefoil_knot(), f8 = figure_eight_knot();
  long long lk = linking_number(hopf_link());
  bool anchors = a2(tre) == 1 && z2_coefficient(conway_skein(tre)) == 1 && a2(f8) == -1 &&
                 z2_coefficient(conway_skein(f8)) == -1 && lk == 1;
  const std::size_t n = opt.trials ? opt.trials : 50;
  auto knots = sample_knots(n, 16, opt.seed);
  std::vector<int> agree(knots.size());
  parallel_for(knots.size(), opt.jobs, [&](std::size_t i) {
    agree[i] = a2(knots[i]) == z2_coefficient(conway_skein(knots[i]));
  });
  std::size_t ok = std::count(agree.begin(), agree.end(), 1);
  r.pass = anchors && ok == knots.size();
  r.evidence = {{"anchors", anchors}, {"hopf_lk", lk}, {"random_knots", knots.size()}, {"agree", ok}, {"seed", opt.seed}};
  r.summary = std::string("anchors ") + (anchors ? "match" : "differ") + ", " + std::to_string(ok) + "/" +
              std::to_string(knots.size()) + " random knots agree";
  return r;
}

inline Report petersen_lk(const RunOptions& opt) {
  auto pf = ikg::petersen_family(opt.jobs);
  Report r{"petersen-lk", true};
  std::size_t total = 0, passed = 0;
  for (const auto& m : pf.records) {
    auto sub = check_odd_pair(m.representative, opt);
    total += sub.evidence["trials"].get<std::size_t>();
    passed += sub.evidence["passed"].get<std::size_t>();
    r.pass = r.pass && sub.pass;
    r.evidence["members"].push_back({{"name", *m.name}, {"summary", sub.summary}});
  }
  r.summary = std::to_string(passed) + "/" + std::to_string(total) + " trials over 7 members have an odd pair";
  return r;
}

inline Report d4_lemma(const RunOptions& opt) {
  RunOptions e = opt;
  e.enumerate = true;
  auto a = check_d4_lemma(d4_graph(), e);
  RunOptions s = opt;
  s.enumerate = false;
  s.trials = opt.trials ? opt.trials : 20;
  auto b = check_d4_lemma(n9_graph(), s);
  Report r{"d4-lemma", a.pass && b.pass};
  r.summary = "D4: " + a.summary + "; N9: " + b.summary;
  a.evidence.erase("per_trial");
  b.evidence.erase("per_trial");
  r.evidence = {{"d4", a.evidence}, {"n9", b.evidence}};
  return r;
}

inline Report n9fn(const RunOptions& opt) {
  auto a = check_dichotomy(n9_graph(), opt);
  auto b = check_dichotomy(n10p_graph(), opt);
  Report r{"n9fn", a.pass && b.pass};
  r.summary = "N9: " + a.summary + "; N'10: " + b.summary;
  r.evidence = {{"N9", a.evidence}, {"N'10", b.evidence}};
  return r;
}

}  // namespace claims

inline Report run_claim(const std::string& id, const RunOptions& opt) {
  Report r;
  if (id == "petersen-family") r = claims::petersen_family(opt);
  else if (id == "heawood-family") r = claims::heawood_family(opt);
  else if (id == "k3311-counts") r = claims::k3311_counts(opt);
  else if (id == "theorem1-equivalence") r = claims::theorem1_equivalence(opt);
  else if (id == "phi-surjective") r = claims::phi_surjective(opt);
  else if (id == "minor-scripts") r = claims::minor_scripts(opt);
  else if (id == "apex-proper-minors") r = claims::apex_proper_minors(opt);
  else if (id == "c14-heawood") r = claims::c14_heawood(opt);
  else if (id == "invariant-oracle") r = claims::invariant_oracle(opt);
  else if (id == "conway-gordon-k6") r = check_lk_parity(complete_graph(6), opt);
  else if (id == "conway-gordon-k7") r = check_a2_parity(complete_graph(7), opt);
  else if (id == "petersen-lk") r = claims::petersen_lk(opt);
  else if (id == "d4-lemma") r = claims::d4_lemma(opt);
  else if (id == "n9fn") r = claims::n9fn(opt);
  else throw graph_error("unknown claim '" + id + "'");
  r.id = id;
  return r;
}

}  // namespace ikg
