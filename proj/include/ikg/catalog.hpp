#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ikg/canon.hpp"
#include "ikg/cycles.hpp"
#include "ikg/exchange.hpp"
#include "ikg/fixtures.hpp"

namespace ikg {

inline std::vector<std::size_t> dy_children(const Closure& c, std::size_t i) {
  std::vector<std::size_t> out;
  for (const auto& t : c.transitions)
    if (t.from == i && t.step.move == Move::DeltaY && std::find(out.begin(), out.end(), t.to) == out.end())
      out.push_back(t.to);
  return out;
}

// Records reachable from `start` by ΔY transitions alone (start included).
inline std::vector<bool> dy_reachable_from(const Closure& c, std::size_t start) {
  std::vector<bool> seen(c.records.size(), false);
  std::vector<std::size_t> stack{start};
  seen[start] = true;
  while (!stack.empty()) {
    auto i = stack.back();
    stack.pop_back();
    for (auto j : dy_children(c, i))
      if (!seen[j]) {
        seen[j] = true;
        stack.push_back(j);
      }
  }
  return seen;
}

namespace detail {

inline std::size_t find_iso(const Closure& c, const MultiGraph& g) {
  auto cert = canonical_form(g);
  auto i = c.find(cert);
  if (!i) throw graph_error("catalog: reference graph not found in the family");
  return *i;
}

// Members ordered by degree sequence (lexicographically larger first), then
// certificate.
inline void heuristic_order(const Closure& c, std::vector<std::size_t>& idx) {
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    const auto& ra = c.records[a];
    const auto& rb = c.records[b];
    if (ra.degree_sequence != rb.degree_sequence) return ra.degree_sequence > rb.degree_sequence;
    return ra.certificate < rb.certificate;
  });
}

}  // namespace detail

inline void assign_petersen_names(Closure& c) {
  if (c.records.size() != 7) throw graph_error("assign_petersen_names: expected 7 classes, got " + std::to_string(c.records.size()));
  for (auto& r : c.records) r.name.reset();
  c.records[detail::find_iso(c, complete_graph(6))].name = "K6";
  c.records[detail::find_iso(c, complete_multipartite({3, 3, 1}))].name = "K3,3,1";
  c.records[detail::find_iso(c, k44_minus_edge())].name = "K4,4-e";
  c.records[detail::find_iso(c, petersen_graph())].name = "P10";
  for (auto& r : c.records)
    if (!r.name) r.name = "P" + std::to_string(r.vertex_count);
}

// Heawood-family names. N-names go to members with Γ^(3) non-empty: N9 and
// N'10 by isomorphism with the fixtures, N' names to the rest of what N'10
// reaches by ΔY, N names to the others. K7 and C14 are unique by vertex count
// (C14 is checked against the Heawood graph). At 12 vertices H12 is the member
// with no triangle. Remaining ties are broken by degree sequence then
// certificate and flagged heuristic.
inline void assign_heawood_names(Closure& c) {
  if (c.records.size() != 20) throw graph_error("assign_heawood_names: expected 20 classes, got " + std::to_string(c.records.size()));
  for (auto& r : c.records) {
    r.name.reset();
    r.heuristic_name = false;
    r.gamma3_empty = gamma3_empty(r.representative);
  }
  const std::size_t n9 = detail::find_iso(c, n9_graph());
  const std::size_t n10p = detail::find_iso(c, n10p_graph());
  auto from_n10p = dy_reachable_from(c, n10p);
  for (std::size_t i = 0; i < c.records.size(); ++i) {
    auto& r = c.records[i];
    if (r.gamma3_empty) continue;
    const std::string v = std::to_string(r.vertex_count);
    r.name = (from_n10p[i] ? "N'" : "N") + v;
  }
  if (c.records[n9].name != "N9" || c.records[n10p].name != "N'10")
    throw graph_error("assign_heawood_names: fixtures do not match the N members");

  std::map<std::size_t, std::vector<std::size_t>> by_size;
  for (std::size_t i = 0; i < c.records.size(); ++i)
    if (c.records[i].gamma3_empty) by_size[c.records[i].vertex_count].push_back(i);
  const std::map<std::size_t, std::vector<std::string>> letters{
      {7, {"K"}}, {8, {"H"}}, {9, {"H", "F"}}, {10, {"H", "F", "E"}}, {11, {"H", "E", "C"}}, {12, {"H", "C"}}, {13, {"C"}}, {14, {"C"}}};
  for (auto& [n, idx] : by_size) {
    auto it = letters.find(n);
    if (it == letters.end() || it->second.size() != idx.size())
      throw graph_error("assign_heawood_names: unexpected member count at " + std::to_string(n) + " vertices");
    if (n == 12) {
      std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return triangles(c.records[a].representative).empty() > triangles(c.records[b].representative).empty();
      });
    } else if (idx.size() > 1) {
      detail::heuristic_order(c, idx);
      for (auto i : idx) c.records[i].heuristic_name = true;
    }
    for (std::size_t k = 0; k < idx.size(); ++k) c.records[idx[k]].name = it->second[k] + std::to_string(n);
  }
  const std::size_t c14 = detail::find_iso(c, heawood_graph());
  if (c.records[c14].name != "C14") throw graph_error("assign_heawood_names: Heawood graph is not the 14-vertex member");
}

inline Closure heawood_family(unsigned jobs = 1) {
  auto c = closure(complete_graph(7), MoveSet{true, true}, ClosureOptions{false, jobs});
  annotate_closure(c, complete_graph(7));
  assign_heawood_names(c);
  return c;
}

inline Closure petersen_family(unsigned jobs = 1) {
  auto c = closure(complete_graph(6), MoveSet{true, true}, ClosureOptions{false, jobs});
  annotate_closure(c, complete_graph(6));
  assign_petersen_names(c);
  return c;
}

inline const FamilyRecord& member(const Closure& c, const std::string& name) {
  for (const auto& r : c.records)
    if (r.name == name) return r;
  throw graph_error("no family member named '" + name + "'");
}

// Generic names for members of other closures: m00, m01, ... in BFS order.
inline void assign_index_names(Closure& c) {
  for (std::size_t i = 0; i < c.records.size(); ++i) {
    std::string s = std::to_string(i);
    if (s.size() < 2) s = "0" + s;
    c.records[i].name = "m" + s;
  }
}

inline nlohmann::json to_json(const ProvenanceStep& s) { return {{"move", to_string(s.move)}, {"site", s.site}}; }

inline nlohmann::json manifest_json(const Closure& c) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : c.records) {
    nlohmann::json prov = nlohmann::json::array();
    for (const auto& s : r.provenance) prov.push_back(to_json(s));
    nlohmann::json j{{"name", r.name ? *r.name : ""},
                     {"certificate", r.certificate.hex()},
                     {"vertices", r.vertex_count},
                     {"edges", r.edge_count},
                     {"degree_sequence", r.degree_sequence},
                     {"dy_only_reachable", r.dy_only_reachable},
                     {"gamma3_empty", r.gamma3_empty},
                     {"provenance", prov}};
    if (r.heuristic_name) j["heuristic_name"] = true;
    arr.push_back(std::move(j));
  }
  return arr;
}

// Writes manifest.json and one <name>.edges file per record.
inline void write_family(const Closure& c, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  {
    std::ofstream out(dir / "manifest.json");
    if (!out) throw std::runtime_error("cannot write " + (dir / "manifest.json").string());
    out << manifest_json(c).dump(2) << "\n";
  }
  for (const auto& r : c.records) {
    std::string name = r.name ? *r.name : r.certificate.hex().substr(0, 12);
    std::ofstream out(dir / (name + ".edges"));
    if (!out) throw std::runtime_error("cannot write " + (dir / (name + ".edges")).string());
    out << format_edge_list(r.representative, name);
  }
}

// Graphviz digraph of discovered transitions.
inline std::string provenance_dot(const Closure& c) {
  std::string s = "digraph family {\n";
  for (std::size_t i = 0; i < c.records.size(); ++i)
    s += "  n" + std::to_string(i) + " [label=\"" + c.records[i].name.value_or(std::to_string(i)) + "\"];\n";
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& t : c.transitions) {
    if (t.step.move != Move::DeltaY || !seen.insert({t.from, t.to}).second) continue;
    s += "  n" + std::to_string(t.from) + " -> n" + std::to_string(t.to) + ";\n";
  }
  return s + "}\n";
}

}  // namespace ikg
