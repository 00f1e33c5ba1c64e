#pragma once

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "ikg/graph.hpp"

namespace ikg {

// Canonical byte string: vertex count, then (i, j, multiplicity) for i < j in
// canonical positions, a 0xff separator, then (i, loop count).
struct Certificate {
  std::vector<std::uint8_t> bytes;

  std::string hex() const {
    static const char* digits = "0123456789abcdef";
    std::string s;
    s.reserve(bytes.size() * 2);
    for (auto b : bytes) {
      s.push_back(digits[b >> 4]);
      s.push_back(digits[b & 15]);
    }
    return s;
  }

  friend bool operator==(const Certificate&, const Certificate&) = default;
  friend auto operator<=>(const Certificate&, const Certificate&) = default;
};

struct CanonicalLabeling {
  Certificate certificate;
  // labeling[i] = original vertex placed at canonical position i.
  std::vector<VertexId> labeling;
};

namespace detail {

// Dense multiplicity matrix over vertex positions 0..n-1 (diagonal holds loop counts).
struct DenseGraph {
  int n = 0;
  std::vector<VertexId> ids;
  std::vector<int> mult;

  explicit DenseGraph(const MultiGraph& g) : n(static_cast<int>(g.vertex_count())), ids(g.vertices()) {
    mult.assign(static_cast<std::size_t>(n) * n, 0);
    std::map<VertexId, int> pos;
    for (int i = 0; i < n; ++i) pos[ids[i]] = i;
    for (const auto& e : g.edges()) {
      int a = pos[e.u], b = pos[e.v];
      if (a == b) {
        ++at(a, a);
      } else {
        ++at(a, b);
        ++at(b, a);
      }
    }
  }
  int& at(int i, int j) { return mult[static_cast<std::size_t>(i) * n + j]; }
  int at(int i, int j) const { return mult[static_cast<std::size_t>(i) * n + j]; }
};

class Canonizer {
 public:
  explicit Canonizer(const DenseGraph& g) : g_(g) {}

  std::vector<int> run() {
    if (g_.n == 0) return {};
    std::vector<int> colors(g_.n);
    for (int v = 0; v < g_.n; ++v) {
      int deg = 0;
      for (int w = 0; w < g_.n; ++w) deg += (w == v) ? 2 * g_.at(v, v) : g_.at(v, w);
      colors[v] = deg * 256 + g_.at(v, v);
    }
    rerank_plain(colors);
    refine(colors);
    std::vector<int> path;
    search(colors, path);
    return best_lab_;
  }

  std::vector<std::uint8_t> encode(const std::vector<int>& lab) const {
    std::vector<std::uint8_t> out;
    const int n = g_.n;
    out.push_back(static_cast<std::uint8_t>(n));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (int k = g_.at(lab[i], lab[j]); k > 0) {
          out.push_back(static_cast<std::uint8_t>(i));
          out.push_back(static_cast<std::uint8_t>(j));
          out.push_back(static_cast<std::uint8_t>(k));
        }
    out.push_back(0xff);
    for (int i = 0; i < n; ++i)
      if (int k = g_.at(lab[i], lab[i]); k > 0) {
        out.push_back(static_cast<std::uint8_t>(i));
        out.push_back(static_cast<std::uint8_t>(k));
      }
    return out;
  }

 private:
  static void rerank_plain(std::vector<int>& colors) {
    std::vector<int> vals = colors;
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    for (auto& c : colors) c = static_cast<int>(std::lower_bound(vals.begin(), vals.end(), c) - vals.begin());
  }

  // Equitable refinement: split cells by (own colour, multiset of neighbour
  // colours with multiplicity). New colour order extends the old one.
  void refine(std::vector<int>& colors) const {
    const int n = g_.n;
    for (;;) {
      std::vector<std::vector<int>> sig(n);
      for (int v = 0; v < n; ++v) {
        auto& s = sig[v];
        s.push_back(colors[v]);
        std::vector<std::pair<int, int>> nb;
        for (int w = 0; w < n; ++w)
          if (w != v && g_.at(v, w) > 0) nb.emplace_back(colors[w], g_.at(v, w));
        std::sort(nb.begin(), nb.end());
        for (auto [c, k] : nb) {
          s.push_back(c);
          s.push_back(k);
        }
      }
      std::vector<std::vector<int>> uniq = sig;
      std::sort(uniq.begin(), uniq.end());
      uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
      int before = 1 + *std::max_element(colors.begin(), colors.end());
      for (int v = 0; v < n; ++v)
        colors[v] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), sig[v]) - uniq.begin());
      if (static_cast<int>(uniq.size()) == before) return;
    }
  }

  void search(const std::vector<int>& colors, std::vector<int>& path) {
    const int n = g_.n;
    // first non-singleton cell in colour order
    std::vector<int> count(n + 1, 0);
    for (int c : colors) ++count[c];
    int target = -1;
    for (int c = 0; c < n; ++c)
      if (count[c] > 1) {
        target = c;
        break;
      }
    if (target < 0) {
      std::vector<int> lab(n);
      for (int v = 0; v < n; ++v) lab[colors[v]] = v;
      auto enc = encode(lab);
      if (best_lab_.empty() || enc < best_enc_) {
        best_enc_ = std::move(enc);
        best_lab_ = lab;
      } else if (enc == best_enc_) {
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[best_lab_[i]] = lab[i];
        automorphisms_.push_back(std::move(perm));
      }
      return;
    }
    std::vector<int> cell;
    for (int v = 0; v < n; ++v)
      if (colors[v] == target) cell.push_back(v);
    std::vector<int> tried;
    for (int v : cell) {
      if (in_explored_orbit(v, tried, path)) continue;
      std::vector<int> next(n);
      for (int w = 0; w < n; ++w) next[w] = 2 * colors[w] + ((colors[w] == target && w != v) ? 1 : 0);
      rerank_plain(next);
      refine(next);
      path.push_back(v);
      search(next, path);
      path.pop_back();
      tried.push_back(v);
    }
  }

  // True if v shares an orbit with an already explored vertex under the group
  // generated by stored automorphisms that fix the current path pointwise.
  bool in_explored_orbit(int v, const std::vector<int>& tried, const std::vector<int>& path) const {
    if (tried.empty() || automorphisms_.empty()) return false;
    const int n = g_.n;
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    bool any = false;
    for (const auto& a : automorphisms_) {
      bool fixes = std::all_of(path.begin(), path.end(), [&](int p) { return a[p] == p; });
      if (!fixes) continue;
      any = true;
      for (int x = 0; x < n; ++x) parent[find(x)] = find(a[x]);
    }
    if (!any) return false;
    return std::any_of(tried.begin(), tried.end(), [&](int t) { return find(t) == find(v); });
  }

  const DenseGraph& g_;
  std::vector<int> best_lab_;
  std::vector<std::uint8_t> best_enc_;
  std::vector<std::vector<int>> automorphisms_;
};

}  // namespace detail

inline CanonicalLabeling canonical_labeling(const MultiGraph& g) {
  if (g.vertex_count() > 255) throw graph_error("canonical_form: more than 255 vertices");
  if (g.vertex_count() > 16)
    std::clog << "ikg: canonical_form on " << g.vertex_count() << " vertices may be slow\n";
  detail::DenseGraph dg(g);
  detail::Canonizer c(dg);
  auto lab = c.run();
  CanonicalLabeling out;
  out.certificate.bytes = c.encode(lab);
  for (int p : lab) out.labeling.push_back(dg.ids[p]);
  return out;
}

inline Certificate canonical_form(const MultiGraph& g) { return canonical_labeling(g).certificate; }

// Witness maps vertices of g to vertices of h.
inline std::optional<std::map<VertexId, VertexId>> is_isomorphic(const MultiGraph& g, const MultiGraph& h) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return std::nullopt;
  auto cg = canonical_labeling(g);
  auto ch = canonical_labeling(h);
  if (cg.certificate != ch.certificate) return std::nullopt;
  std::map<VertexId, VertexId> w;
  for (std::size_t i = 0; i < cg.labeling.size(); ++i) w[cg.labeling[i]] = ch.labeling[i];
  return w;
}

// Sorted descending; loops contribute 2.
inline std::vector<int> degree_sequence(const MultiGraph& g) {
  std::vector<int> d;
  for (VertexId v : g.vertices()) d.push_back(g.degree(v));
  std::sort(d.rbegin(), d.rend());
  return d;
}

}  // namespace ikg
