#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

#include "ikg/graph.hpp"

namespace ikg {

using Rational = boost::multiprecision::cpp_rational;

struct Point {
  Rational x, y;
  friend bool operator==(const Point&, const Point&) = default;
};

inline Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator*(const Rational& k, const Point& a) { return {k * a.x, k * a.y}; }
inline Rational cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
inline Rational dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }

inline std::string to_string(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

inline Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(boost::multiprecision::cpp_int(s));
  return Rational(boost::multiprecision::cpp_int(s.substr(0, slash)), boost::multiprecision::cpp_int(s.substr(slash + 1)));
}

// Transverse intersection of the polylines of edges a and b. Parameters run
// along the whole polyline: segment index plus the position inside it.
struct Crossing {
  int id = 0;
  EdgeId edge_a = 0;
  Rational param_a;
  EdgeId edge_b = 0;
  Rational param_b;
  int orient = 0;  // sign of cross(dir a, dir b) in polyline direction
  bool a_over = true;

  EdgeId over_edge() const { return a_over ? edge_a : edge_b; }
  EdgeId under_edge() const { return a_over ? edge_b : edge_a; }
};

struct SpatialDiagram {
  MultiGraph graph;
  std::map<VertexId, Point> positions;
  std::map<EdgeId, std::vector<Point>> polylines;  // from edge.u to edge.v
  std::vector<Crossing> crossings;
  // crossing ids on each edge, ordered along its polyline
  std::map<EdgeId, std::vector<int>> along;

  std::size_t crossing_count() const { return crossings.size(); }
};

class diagram_error : public graph_error {
 public:
  using graph_error::graph_error;
};

namespace detail {

struct Segment {
  EdgeId edge;
  int index;
  Point p, q;
  bool p_vertex, q_vertex;  // endpoint is a graph vertex (not a bend point)
};

inline int sgn(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

// Certifies generic position and collects crossings; empty optional on any
// degeneracy.
inline std::optional<std::vector<Crossing>> find_crossings(const SpatialDiagram& d) {
  std::vector<Segment> segs;
  for (const auto& [id, pl] : d.polylines)
    for (std::size_t i = 0; i + 1 < pl.size(); ++i)
      segs.push_back({id, static_cast<int>(i), pl[i], pl[i + 1], i == 0, i + 2 == pl.size()});
  std::vector<Crossing> out;
  std::vector<Point> points;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      const auto& a = segs[i];
      const auto& b = segs[j];
      const bool same = a.edge == b.edge;
      const Point r = a.q - a.p, s = b.q - b.p;
      const Rational den = cross(r, s);
      // Shared endpoints that are allowed: a common graph vertex, or the
      // joint between consecutive segments of one edge.
      auto shared_ok = [&](const Point& x) {
        bool at_a = (x == a.p && a.p_vertex) || (x == a.q && a.q_vertex);
        bool at_b = (x == b.p && b.p_vertex) || (x == b.q && b.q_vertex);
        if (at_a && at_b) return true;
        if (same && std::abs(a.index - b.index) == 1) return x == (a.index < b.index ? a.q : a.p);
        return false;
      };
      if (den == 0) {
        if (cross(b.p - a.p, r) != 0) continue;
        // collinear: any overlap beyond a permitted shared endpoint is degenerate
        Rational rr = dot(r, r);
        Rational t0 = dot(b.p - a.p, r) / rr, t1 = dot(b.q - a.p, r) / rr;
        if (t0 > t1) std::swap(t0, t1);
        Rational lo = std::max(t0, Rational(0)), hi = std::min(t1, Rational(1));
        if (lo > hi) continue;
        if (lo == hi && shared_ok(a.p + lo * r)) continue;
        return std::nullopt;
      }
      const Rational t = cross(b.p - a.p, s) / den;
      const Rational u = cross(b.p - a.p, r) / den;
      if (t < 0 || t > 1 || u < 0 || u > 1) continue;
      const Point x = a.p + t * r;
      const bool interior = t > 0 && t < 1 && u > 0 && u < 1;
      if (!interior) {
        if (shared_ok(x)) continue;
        return std::nullopt;
      }
      if (same) return std::nullopt;
      for (const auto& p : points)
        if (p == x) return std::nullopt;
      points.push_back(x);
      Crossing c;
      c.id = static_cast<int>(out.size());
      c.edge_a = a.edge;
      c.param_a = a.index + t;
      c.edge_b = b.edge;
      c.param_b = b.index + u;
      c.orient = sgn(den);
      out.push_back(std::move(c));
    }
  }
  return out;
}

inline void index_crossings(SpatialDiagram& d) {
  d.along.clear();
  for (const auto& e : d.graph.edges()) d.along[e.id];
  std::map<EdgeId, std::vector<std::pair<Rational, int>>> tmp;
  for (const auto& c : d.crossings) {
    tmp[c.edge_a].emplace_back(c.param_a, c.id);
    tmp[c.edge_b].emplace_back(c.param_b, c.id);
  }
  for (auto& [e, v] : tmp) {
    std::sort(v.begin(), v.end());
    for (auto& [p, id] : v) d.along[e].push_back(id);
  }
}

inline Rational random_rational(std::mt19937_64& rng, double lo, double hi, std::int64_t den = 4096) {
  std::uniform_real_distribution<double> dist(lo, hi);
  return Rational(static_cast<std::int64_t>(std::llround(dist(rng) * den)), den);
}

// Rational point on the unit circle from t = tan(theta / 2).
inline Point circle_point(const Rational& t) {
  Rational d = 1 + t * t;
  return {(1 - t * t) / d, 2 * t / d};
}

}  // namespace detail

struct ConvexOptions {
  // Bend points for extra parallels: near the chord, or anywhere in a box
  // around the circle.
  bool wide_bends = false;
  int max_attempts = 64;
};

// Vertices on the unit circle in the given order, simple edges as chords,
// extra parallels through one bend point, loops as small outward triangles.
// Jitter is retried until generic position is certified.
inline SpatialDiagram build_convex_diagram(const MultiGraph& g, std::vector<VertexId> order = {},
                                           std::uint64_t jitter_seed = 0, ConvexOptions opt = {}) {
  if (order.empty()) order = g.vertices();
  {
    auto sorted = order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != g.vertices()) throw diagram_error("build_convex_diagram: order is not a permutation of the vertices");
  }
  const std::size_t n = order.size();
  for (int attempt = 0; attempt < opt.max_attempts; ++attempt) {
    std::seed_seq ss{static_cast<std::uint32_t>(jitter_seed), static_cast<std::uint32_t>(jitter_seed >> 32),
                     static_cast<std::uint32_t>(attempt)};
    std::mt19937_64 rng(ss);
    SpatialDiagram d;
    d.graph = g;
    const double step = 2 * std::numbers::pi / std::max<std::size_t>(n, 1);
    std::uniform_real_distribution<double> jit(-0.15, 0.15);
    for (std::size_t i = 0; i < n; ++i) {
      double theta = -std::numbers::pi + step * (i + 0.5 + jit(rng));
      Rational t(static_cast<std::int64_t>(std::llround(std::tan(theta / 2) * 4096)), 4096);
      d.positions[order[i]] = detail::circle_point(t);
    }
    std::map<std::pair<VertexId, VertexId>, int> seen;
    for (const auto& e : g.edges()) {
      const Point& p = d.positions.at(e.u);
      const Point& q = d.positions.at(e.v);
      std::vector<Point> pl{p};
      if (e.is_loop()) {
        Point perp{-p.y, p.x};
        Rational r = detail::random_rational(rng, 0.1, 0.3), s = detail::random_rational(rng, 0.05, 0.15);
        Point out = (1 + r) * p;
        pl.push_back(out + s * perp);
        pl.push_back(out - s * perp);
      } else if (seen[std::minmax(e.u, e.v)]++ > 0) {
        if (opt.wide_bends) {
          pl.push_back({detail::random_rational(rng, -1.6, 1.6), detail::random_rational(rng, -1.6, 1.6)});
        } else {
          Point mid = Rational(1, 2) * (p + q);
          Point dir = q - p;
          Point perp{-dir.y, dir.x};
          Rational off = detail::random_rational(rng, 0.08, 0.3);
          if (rng() & 1) off = -off;
          pl.push_back(mid + off * perp);
        }
      }
      pl.push_back(q);
      d.polylines[e.id] = std::move(pl);
    }
    if (auto cs = detail::find_crossings(d)) {
      d.crossings = std::move(*cs);
      detail::index_crossings(d);
      return d;
    }
  }
  throw diagram_error("build_convex_diagram: no generic drawing after " + std::to_string(opt.max_attempts) +
                      " jitter attempts");
}

// bits[i] = true puts edge_a over at crossing i.
inline SpatialDiagram assign_over_under(SpatialDiagram d, const std::vector<bool>& bits) {
  if (bits.size() != d.crossings.size()) {
    throw diagram_error("assign_over_under: " + std::to_string(bits.size()) + " bits for " +
                        std::to_string(d.crossings.size()) + " crossings");
  }
  for (std::size_t i = 0; i < bits.size(); ++i) d.crossings[i].a_over = bits[i];
  return d;
}

inline std::vector<bool> random_bits(std::size_t n, std::mt19937_64& rng) {
  std::vector<bool> bits(n);
  std::uint64_t word = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i % 64 == 0) word = rng();
    bits[i] = (word >> (i % 64)) & 1;
  }
  return bits;
}

// Generator for trial `trial` of a run seeded with `seed`.
inline std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq ss{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                   static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  return std::mt19937_64(ss);
}

inline SpatialDiagram assign_over_under(SpatialDiagram d, std::uint64_t seed) {
  std::seed_seq ss{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
  std::mt19937_64 rng(ss);
  return assign_over_under(std::move(d), random_bits(d.crossings.size(), rng));
}

// Bits from the low end of an integer, for exhaustive enumeration.
inline std::vector<bool> bits_of(std::uint64_t mask, std::size_t n) {
  std::vector<bool> bits(n);
  for (std::size_t i = 0; i < n; ++i) bits[i] = (mask >> i) & 1;
  return bits;
}

inline nlohmann::json point_json(const Point& p) { return nlohmann::json::array({to_string(p.x), to_string(p.y)}); }

inline nlohmann::json to_json(const SpatialDiagram& d) {
  nlohmann::json j;
  j["vertices"] = nlohmann::json::object();
  for (const auto& [v, p] : d.positions) j["vertices"][std::to_string(v)] = point_json(p);
  j["edges"] = nlohmann::json::object();
  for (const auto& e : d.graph.edges()) {
    nlohmann::json pl = nlohmann::json::array();
    for (const auto& p : d.polylines.at(e.id)) pl.push_back(point_json(p));
    j["edges"][std::to_string(e.id)] = {{"u", e.u}, {"v", e.v}, {"polyline", pl}};
  }
  j["crossings"] = nlohmann::json::array();
  for (const auto& c : d.crossings) {
    const bool a = c.a_over;
    j["crossings"].push_back({{"id", c.id},
                              {"over_edge", a ? c.edge_a : c.edge_b},
                              {"over_param", to_string(a ? c.param_a : c.param_b)},
                              {"under_edge", a ? c.edge_b : c.edge_a},
                              {"under_param", to_string(a ? c.param_b : c.param_a)}});
  }
  return j;
}

// Rebuilds a diagram from its JSON form; crossings are recomputed from the
// geometry and must match the listed ones.
inline SpatialDiagram diagram_from_json(const nlohmann::json& j) {
  SpatialDiagram d;
  for (const auto& [k, v] : j.at("vertices").items()) {
    VertexId id = std::stoi(k);
    d.graph.add_vertex(id);
    d.positions[id] = {parse_rational(v.at(0).get<std::string>()), parse_rational(v.at(1).get<std::string>())};
  }
  for (const auto& [k, v] : j.at("edges").items()) {
    EdgeId id = std::stoi(k);
    d.graph.add_edge_with_id(id, v.at("u").get<int>(), v.at("v").get<int>());
    std::vector<Point> pl;
    for (const auto& p : v.at("polyline"))
      pl.push_back({parse_rational(p.at(0).get<std::string>()), parse_rational(p.at(1).get<std::string>())});
    d.polylines[id] = std::move(pl);
  }
  auto cs = detail::find_crossings(d);
  if (!cs) throw diagram_error("diagram is not in generic position");
  d.crossings = std::move(*cs);
  const auto& listed = j.at("crossings");
  if (listed.size() != d.crossings.size()) throw diagram_error("crossing list does not match the geometry");
  for (auto& c : d.crossings) {
    bool found = false;
    for (const auto& l : listed) {
      EdgeId o = l.at("over_edge").get<int>(), u = l.at("under_edge").get<int>();
      Rational op = parse_rational(l.at("over_param").get<std::string>());
      if (o == c.edge_a && u == c.edge_b && op == c.param_a) {
        c.a_over = true;
        found = true;
      } else if (o == c.edge_b && u == c.edge_a && op == c.param_b) {
        c.a_over = false;
        found = true;
      }
    }
    if (!found) throw diagram_error("crossing list does not match the geometry");
  }
  detail::index_crossings(d);
  return d;
}

}  // namespace ikg
