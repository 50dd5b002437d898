#pragma once

// Brute-force reference implementations used only by the tests.  None of
// them share code with the library beyond SurfaceGraph itself.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "multitwist/multi_twist.hpp"
#include "multitwist/surface_graph.hpp"

namespace oracle {

using multitwist::Mode;
using multitwist::MultiTwist;
using multitwist::SurfaceGraph;

struct Fraction {
  std::int64_t num = 0, den = 1;

  Fraction(std::int64_t n = 0, std::int64_t d = 1) : num(n), den(d) { reduce(); }
  void reduce() {
    if (den < 0) num = -num, den = -den;
    const auto g = std::gcd(num, den);
    if (g > 1) num /= g, den /= g;
  }
  bool zero() const { return num == 0; }
  friend Fraction operator-(Fraction a, Fraction b) {
    return {a.num * b.den - b.num * a.den, a.den * b.den};
  }
  friend Fraction operator*(Fraction a, Fraction b) { return {a.num * b.num, a.den * b.den}; }
  friend Fraction operator/(Fraction a, Fraction b) { return {a.num * b.den, a.den * b.num}; }
};

/// Solves f(head) - f(tail) = v(e) for all edges, f(v0) = 0, by Gaussian
/// elimination over the rationals.  Returns the potentials if the system is
/// consistent.
inline std::optional<std::vector<Fraction>> solve_potential(const SurfaceGraph& g,
                                                            const std::vector<std::int64_t>& v) {
  const std::size_t n = g.num_vertices();
  std::vector<std::vector<Fraction>> rows;
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    std::vector<Fraction> row(n + 1);
    const auto& edge = g.edge(e);
    row[edge.head] = row[edge.head] - Fraction(-1);
    row[edge.tail] = row[edge.tail] - Fraction(1);
    row[n] = Fraction(v[e]);
    rows.push_back(row);
  }
  std::vector<Fraction> pin(n + 1);
  pin[0] = Fraction(1);
  rows.push_back(pin);

  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const Fraction lead = rows[r][c];
    for (auto& x : rows[r]) x = x / lead;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].zero()) continue;
      const Fraction factor = rows[i][c];
      for (std::size_t j = 0; j <= n; ++j) rows[i][j] = rows[i][j] - factor * rows[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows.size(); ++i) {
    if (!rows[i][n].zero()) return std::nullopt;
  }
  std::vector<Fraction> f(n);
  for (std::size_t i = 0; i < r; ++i) f[pivot_col[i]] = rows[i][n];
  return f;
}

/// Integer coboundary test.
inline bool in_cut_lattice(const SurfaceGraph& g, const std::vector<std::int64_t>& v) {
  const auto f = solve_potential(g, v);
  if (!f) return false;
  return std::all_of(f->begin(), f->end(), [](const Fraction& x) { return x.den == 1; });
}

inline std::vector<std::int64_t> unit(const SurfaceGraph& g, std::size_t e, std::int64_t s = 1) {
  std::vector<std::int64_t> v(g.num_edges(), 0);
  v[e] += s;
  return v;
}

inline bool equivalent(const SurfaceGraph& g, std::size_t a, std::size_t b) {
  auto plus = unit(g, a), minus = unit(g, a);
  plus[b] += 1;
  minus[b] -= 1;
  return in_cut_lattice(g, plus) || in_cut_lattice(g, minus);
}

/// Flow basis from a depth-first spanning tree rooted at the last vertex.
inline std::vector<std::vector<std::int64_t>> flows(const SurfaceGraph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<long> parent_edge(n, -1);
  std::vector<bool> seen(n, false), tree(g.num_edges(), false);
  std::function<void(std::size_t)> dfs = [&](std::size_t v) {
    seen[v] = true;
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
      const auto& edge = g.edge(e);
      if (edge.is_loop() || (edge.tail != v && edge.head != v)) continue;
      const std::size_t w = edge.other(v);
      if (seen[w]) continue;
      tree[e] = true;
      parent_edge[w] = static_cast<long>(e);
      dfs(w);
    }
  };
  dfs(n - 1);
  // Signed tree path from the root to v.
  auto root_path = [&](std::size_t v) {
    std::vector<std::int64_t> z(g.num_edges(), 0);
    while (parent_edge[v] >= 0) {
      const auto e = static_cast<std::size_t>(parent_edge[v]);
      const auto& edge = g.edge(e);
      z[e] += edge.head == v ? 1 : -1;
      v = edge.other(v);
    }
    return z;
  };
  std::vector<std::vector<std::int64_t>> out;
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (tree[e]) continue;
    const auto& edge = g.edge(e);
    auto z = root_path(edge.tail);
    const auto back = root_path(edge.head);
    for (std::size_t i = 0; i < z.size(); ++i) z[i] -= back[i];
    z[e] += 1;
    out.push_back(std::move(z));
  }
  return out;
}

/// Delta_t = 0 on every transversal class.
inline bool difference_trivial(const SurfaceGraph& g, const MultiTwist& t) {
  for (const auto& z : flows(g)) {
    std::vector<std::int64_t> image(z.size());
    for (std::size_t e = 0; e < z.size(); ++e) image[e] = t[e] * z[e];
    if (!in_cut_lattice(g, image)) return false;
  }
  return true;
}

/// All simple a-b paths as edge sets (loops never used).
inline std::vector<std::set<std::size_t>> simple_paths(const SurfaceGraph& g, std::size_t a,
                                                      std::size_t b) {
  std::vector<std::set<std::size_t>> out;
  std::vector<bool> on_path(g.num_vertices(), false);
  std::set<std::size_t> edges;
  std::function<void(std::size_t)> go = [&](std::size_t v) {
    if (v == b) {
      out.push_back(edges);
      return;
    }
    on_path[v] = true;
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
      const auto& edge = g.edge(e);
      if (edge.is_loop() || (edge.tail != v && edge.head != v)) continue;
      const std::size_t w = edge.other(v);
      if (on_path[w]) continue;
      edges.insert(e);
      go(w);
      edges.erase(e);
    }
    on_path[v] = false;
  };
  go(a);
  return out;
}

/// Are there k pairwise edge-disjoint a-b paths?  Exhaustive search.
inline bool has_disjoint_paths(const SurfaceGraph& g, std::size_t a, std::size_t b,
                               std::size_t k) {
  const auto paths = simple_paths(g, a, b);
  std::function<bool(std::size_t, std::size_t, std::set<std::size_t>&)> pick =
      [&](std::size_t from, std::size_t left, std::set<std::size_t>& used) {
        if (left == 0) return true;
        for (std::size_t i = from; i < paths.size(); ++i) {
          bool clash = false;
          for (std::size_t e : paths[i]) clash = clash || used.count(e);
          if (clash) continue;
          for (std::size_t e : paths[i]) used.insert(e);
          const bool ok = pick(i + 1, left - 1, used);
          for (std::size_t e : paths[i]) used.erase(e);
          if (ok) return true;
        }
        return false;
      };
  std::set<std::size_t> used;
  return pick(0, k, used);
}

/// (sum of 2 genus - 3 + degree, count of pieces other than (0,3) and (1,1)).
inline std::pair<int, int> defect_sums(const SurfaceGraph& g) {
  int total = 0, irregular = 0;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    int degree = 0;
    for (const auto& e : g.edges()) degree += (e.tail == v) + (e.head == v);
    const int genus = g.vertex(v).genus;
    total += 2 * genus - 3 + degree;
    if (!((genus == 0 && degree == 3) || (genus == 1 && degree == 1))) ++irregular;
  }
  return {total, irregular};
}

/// Isomorphism invariant by trying every vertex permutation.
using Code = std::pair<std::vector<int>, std::vector<std::pair<std::size_t, std::size_t>>>;

inline Code brute_canonical(const SurfaceGraph& g) {
  std::vector<std::size_t> perm(g.num_vertices());
  std::iota(perm.begin(), perm.end(), 0);
  std::optional<Code> best;
  do {
    Code c;
    c.first.resize(perm.size());
    for (std::size_t v = 0; v < perm.size(); ++v) c.first[perm[v]] = g.vertex(v).genus;
    for (const auto& e : g.edges()) {
      auto x = perm[e.tail], y = perm[e.head];
      c.second.emplace_back(std::min(x, y), std::max(x, y));
    }
    std::sort(c.second.begin(), c.second.end());
    if (!best || c < *best) best = c;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return *best;
}

/// Every valid connected graph of the given genus with 1..max_edges edges,
/// generated without pruning and deduplicated by brute_canonical.
inline std::set<Code> naive_enumeration(int genus, int max_edges, Mode mode) {
  std::set<Code> out;
  for (int edges = 1; edges <= max_edges; ++edges) {
    for (int vertices = 1; vertices <= edges + 1; ++vertices) {
      const int rank = edges - vertices + 1;
      if (rank > genus) continue;
      std::vector<std::pair<int, int>> pairs;
      for (int i = 0; i < vertices; ++i) {
        for (int j = i; j < vertices; ++j) pairs.emplace_back(i, j);
      }
      std::vector<int> genera(vertices);
      std::function<void(int, int)> genus_at = [&](int v, int left) {
        if (v == vertices - 1) {
          genera[v] = left;
          std::vector<std::size_t> pick(edges, 0);
          std::function<void(int, std::size_t)> choose = [&](int i, std::size_t from) {
            if (i == edges) {
              SurfaceGraph::Builder b;
              b.mode(mode);
              for (int x = 0; x < vertices; ++x) b.vertex("v" + std::to_string(x), genera[x]);
              for (int k = 0; k < edges; ++k) {
                const auto [s, t] = pairs[pick[k]];
                b.edge("e" + std::to_string(k), "v" + std::to_string(s), "v" + std::to_string(t));
              }
              const auto g = b.build();
              if (g.is_connected() && multitwist::validate(g).empty()) out.insert(brute_canonical(g));
              return;
            }
            for (std::size_t p = from; p < pairs.size(); ++p) {
              pick[i] = p;
              choose(i + 1, p);
            }
          };
          choose(0, 0);
          return;
        }
        for (int x = 0; x <= left; ++x) {
          genera[v] = x;
          genus_at(v + 1, left - x);
        }
      };
      genus_at(0, genus - rank);
    }
  }
  return out;
}

}  // namespace oracle
