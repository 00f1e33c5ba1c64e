#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "ikg/cycles.hpp"
#include "ikg/diagram.hpp"

namespace ikg {

struct Passage {
  int crossing = 0;
  bool over = false;
  int sign = 1;

  friend bool operator==(const Passage&, const Passage&) = default;
};

struct GaussLink {
  std::vector<std::vector<Passage>> components;

  std::size_t crossing_count() const {
    std::size_t n = 0;
    for (const auto& c : components) n += c.size();
    return n / 2;
  }
};

inline std::string to_string(const Passage& p) {
  return "c" + std::to_string(p.crossing) + (p.over ? "o" : "u") + (p.sign > 0 ? "+" : "-");
}

// One line per component, passages separated by spaces.
inline std::string format_gauss(const GaussLink& l) {
  std::string s;
  for (std::size_t i = 0; i < l.components.size(); ++i) {
    if (i) s += "\n";
    s += "[";
    for (std::size_t j = 0; j < l.components[i].size(); ++j) {
      if (j) s += " ";
      s += to_string(l.components[i][j]);
    }
    s += "]";
  }
  return s;
}

inline std::string validate_gauss(const GaussLink& l) {
  std::map<int, std::pair<int, int>> seen;  // crossing -> (overs, unders)
  std::map<int, int> sign;
  for (const auto& comp : l.components)
    for (const auto& p : comp) {
      (p.over ? seen[p.crossing].first : seen[p.crossing].second)++;
      if (auto [it, fresh] = sign.emplace(p.crossing, p.sign); !fresh && it->second != p.sign)
        return "crossing " + std::to_string(p.crossing) + " has inconsistent signs";
    }
  for (auto [c, n] : seen)
    if (n.first != 1 || n.second != 1)
      return "crossing " + std::to_string(c) + " must appear once over and once under";
  return {};
}

// Components written as "[c0u- c1o- ...]", one bracket group per component.
inline GaussLink parse_gauss(const std::string& text) {
  GaussLink l;
  std::size_t pos = 0;
  while ((pos = text.find('[', pos)) != std::string::npos) {
    auto end = text.find(']', pos);
    if (end == std::string::npos) throw graph_error("parse_gauss: unterminated component");
    std::istringstream in(text.substr(pos + 1, end - pos - 1));
    std::vector<Passage> comp;
    for (std::string tok; in >> tok;) {
      if (tok.size() < 4 || tok[0] != 'c') throw graph_error("parse_gauss: bad passage '" + tok + "'");
      char ou = tok[tok.size() - 2], sg = tok.back();
      if ((ou != 'o' && ou != 'u') || (sg != '+' && sg != '-')) throw graph_error("parse_gauss: bad passage '" + tok + "'");
      comp.push_back({std::stoi(tok.substr(1, tok.size() - 3)), ou == 'o', sg == '+' ? 1 : -1});
    }
    l.components.push_back(std::move(comp));
    pos = end + 1;
  }
  if (auto why = validate_gauss(l); !why.empty()) throw graph_error("parse_gauss: " + why);
  return l;
}

// Restricts the diagram to the cycles of t. Each component starts at its
// smallest vertex heading to the smaller neighbour; a crossing is kept when
// both strands are on retained edges. Sign is +1 when the under strand is a
// counterclockwise quarter turn of the over strand.
inline GaussLink extract_gauss(const SpatialDiagram& d, const CycleTuple& t) {
  std::map<EdgeId, int> orient;
  std::vector<CycleWalk> walks;
  for (const auto& c : t.cycles) {
    auto w = walk_cycle(d.graph, c);
    for (std::size_t i = 0; i < w.edges.size(); ++i) {
      const Edge& e = d.graph.edge(w.edges[i]);
      orient[e.id] = (e.is_loop() || w.vertices[i] == e.u) ? 1 : -1;
    }
    walks.push_back(std::move(w));
  }
  GaussLink l;
  for (const auto& w : walks) {
    std::vector<Passage> comp;
    for (EdgeId id : w.edges) {
      const auto& ids = d.along.at(id);
      auto visit = [&](int cid) {
        const Crossing& c = d.crossings[cid];
        EdgeId other = c.edge_a == id ? c.edge_b : c.edge_a;
        auto it = orient.find(other);
        if (it == orient.end()) return;
        int s = c.orient * orient.at(c.edge_a) * orient.at(c.edge_b) * (c.a_over ? 1 : -1);
        comp.push_back({cid, c.over_edge() == id, s});
      };
      if (orient[id] > 0)
        for (int cid : ids) visit(cid);
      else
        for (auto it = ids.rbegin(); it != ids.rend(); ++it) visit(*it);
    }
    l.components.push_back(std::move(comp));
  }
  return l;
}

inline GaussLink extract_gauss(const SpatialDiagram& d, const CycleSubgraph& c) {
  return extract_gauss(d, CycleTuple{{c}});
}

// Half the signed count of crossings between the two components.
inline long long linking_number(const GaussLink& l) {
  if (l.components.size() != 2) throw graph_error("linking_number: need exactly 2 components");
  std::set<int> second;
  for (const auto& p : l.components[1]) second.insert(p.crossing);
  long long sum = 0;
  for (const auto& p : l.components[0])
    if (second.count(p.crossing)) sum += p.sign;
  return sum / 2;
}

// Coefficients of an integer polynomial in z, lowest degree first.
using Poly = std::vector<long long>;

inline void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline std::string to_string(const Poly& p) {
  if (p.empty()) return "0";
  std::string s;
  for (std::size_t k = p.size(); k-- > 0;) {
    long long c = p[k];
    if (c == 0) continue;
    if (!s.empty()) s += c > 0 ? " + " : " - ";
    else if (c < 0) s += "-";
    long long a = c < 0 ? -c : c;
    if (a != 1 || k == 0) s += std::to_string(a);
    if (k >= 1) s += "z";
    if (k >= 2) s += "^" + std::to_string(k);
  }
  return s;
}

namespace detail {

class Skein {
 public:
  Poly eval(const GaussLink& l) {
    auto key = encode(l);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Poly r = compute(l);
    memo_.emplace(std::move(key), r);
    return r;
  }

 private:
  static std::string encode(const GaussLink& l) {
    std::string s;
    for (const auto& c : l.components) {
      s += '|';
      for (const auto& p : c) s += to_string(p);
    }
    return s;
  }

  Poly compute(const GaussLink& l) {
    // first crossing met on its under strand, components taken in order
    std::set<int> seen;
    int bad = -1, sign = 0;
    for (const auto& c : l.components) {
      for (const auto& p : c) {
        if (seen.insert(p.crossing).second && !p.over) {
          bad = p.crossing;
          sign = p.sign;
          break;
        }
      }
      if (bad >= 0) break;
    }
    if (bad < 0) return l.components.size() == 1 ? Poly{1} : Poly{};
    GaussLink sw = l;
    for (auto& c : sw.components)
      for (auto& p : c)
        if (p.crossing == bad) {
          p.over = !p.over;
          p.sign = -p.sign;
        }
    Poly a = eval(sw);
    Poly b = eval(smooth(l, bad));
    // ∇(L) = ∇(L switched) + sign · z · ∇(L smoothed)
    Poly r = a;
    if (r.size() < b.size() + 1) r.resize(b.size() + 1, 0);
    for (std::size_t k = 0; k < b.size(); ++k) r[k + 1] += sign * b[k];
    trim(r);
    return r;
  }

  static GaussLink smooth(const GaussLink& l, int x) {
    std::vector<std::pair<std::size_t, std::size_t>> at;
    for (std::size_t c = 0; c < l.components.size(); ++c)
      for (std::size_t i = 0; i < l.components[c].size(); ++i)
        if (l.components[c][i].crossing == x) at.emplace_back(c, i);
    GaussLink out;
    auto [c1, i] = at[0];
    auto [c2, j] = at[1];
    if (c1 == c2) {
      const auto& comp = l.components[c1];
      std::vector<Passage> inner(comp.begin() + i + 1, comp.begin() + j);
      std::vector<Passage> outer(comp.begin() + j + 1, comp.end());
      outer.insert(outer.end(), comp.begin(), comp.begin() + i);
      for (std::size_t c = 0; c < l.components.size(); ++c) {
        if (c == c1) {
          out.components.push_back(std::move(inner));
          out.components.push_back(std::move(outer));
        } else {
          out.components.push_back(l.components[c]);
        }
      }
    } else {
      const auto& a = l.components[c1];
      const auto& b = l.components[c2];
      std::vector<Passage> merged(a.begin() + i + 1, a.end());
      merged.insert(merged.end(), a.begin(), a.begin() + i);
      merged.insert(merged.end(), b.begin() + j + 1, b.end());
      merged.insert(merged.end(), b.begin(), b.begin() + j);
      for (std::size_t c = 0; c < l.components.size(); ++c) {
        if (c == c1) out.components.push_back(std::move(merged));
        else if (c != c2) out.components.push_back(l.components[c]);
      }
    }
    return out;
  }

  std::unordered_map<std::string, Poly> memo_;
};

}  // namespace detail

inline constexpr std::size_t kMaxSkeinCrossings = 24;

// Conway polynomial by the skein relation, reducing toward descending
// diagrams.
inline Poly conway_skein(const GaussLink& l) {
  if (l.crossing_count() > kMaxSkeinCrossings) {
    throw graph_error("conway_skein: " + std::to_string(l.crossing_count()) + " crossings exceeds the limit of " +
                      std::to_string(kMaxSkeinCrossings));
  }
  detail::Skein s;
  return s.eval(l);
}

inline long long z2_coefficient(const Poly& p) { return p.size() > 2 ? p[2] : 0; }

// Second Conway coefficient from the Gauss diagram: pairs of crossings p, q
// met in the order p q p q, with p first met under and q first met over,
// weighted by sign(p) sign(q).
inline long long a2(const GaussLink& l) {
  if (l.components.size() != 1) throw graph_error("a2: need exactly 1 component");
  const auto& k = l.components[0];
  std::map<int, int> index;
  std::vector<int> first, second, sign;
  std::vector<bool> first_under;
  for (std::size_t pos = 0; pos < k.size(); ++pos) {
    auto [it, fresh] = index.emplace(k[pos].crossing, static_cast<int>(first.size()));
    if (fresh) {
      first.push_back(static_cast<int>(pos));
      second.push_back(-1);
      sign.push_back(k[pos].sign);
      first_under.push_back(!k[pos].over);
    } else {
      second[it->second] = static_cast<int>(pos);
    }
  }
  long long sum = 0;
  const std::size_t n = first.size();
  for (std::size_t p = 0; p < n; ++p) {
    if (!first_under[p]) continue;
    for (std::size_t q = 0; q < n; ++q) {
      if (first_under[q]) continue;
      if (first[p] < first[q] && first[q] < second[p] && second[p] < second[q]) sum += sign[p] * sign[q];
    }
  }
  return sum;
}

inline int mod2(long long x) { return static_cast<int>(((x % 2) + 2) % 2); }

}  // namespace ikg
