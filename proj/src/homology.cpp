#include "multitwist/homology.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <string>

namespace multitwist {

namespace {

constexpr auto kNone = static_cast<std::size_t>(-1);

struct SpanningTree {
  std::vector<std::size_t> parent;       // kNone at the root
  std::vector<std::size_t> parent_edge;  // kNone at the root
  std::vector<std::size_t> depth;
  std::vector<std::size_t> order;        // BFS order
  std::vector<bool> tree_edge;
};

SpanningTree bfs_tree(const SurfaceGraph& g) {
  const std::size_t n = g.num_vertices();
  SpanningTree t{std::vector<std::size_t>(n, kNone), std::vector<std::size_t>(n, kNone),
                 std::vector<std::size_t>(n, 0), {}, std::vector<bool>(g.num_edges(), false)};
  if (n == 0) throw PreconditionError("surface graph has no vertices");
  std::vector<bool> seen(n, false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    t.order.push_back(v);
    for (const auto& h : g.incident(v)) {
      if (seen[h.neighbor]) continue;
      seen[h.neighbor] = true;
      t.parent[h.neighbor] = v;
      t.parent_edge[h.neighbor] = h.edge;
      t.depth[h.neighbor] = t.depth[v] + 1;
      t.tree_edge[h.edge] = true;
      queue.push_back(h.neighbor);
    }
  }
  if (t.order.size() != n) throw PreconditionError("surface not connected");
  return t;
}

void check_size(const SurfaceGraph& g, std::size_t size, const char* what) {
  if (size != g.num_edges()) {
    throw PreconditionError(std::string(what) + " has " + std::to_string(size) +
                            " entries but the graph has " +
                            std::to_string(g.num_edges()) + " edges");
  }
}

void check_edge(const SurfaceGraph& g, std::size_t e) {
  if (e >= g.num_edges()) throw UnknownIdError("edge", "#" + std::to_string(e));
}

void check_vertex(const SurfaceGraph& g, std::size_t v) {
  if (v >= g.num_vertices()) throw UnknownIdError("vertex", "#" + std::to_string(v));
}

}  // namespace

LatticeVector LatticeVector::zero(const SurfaceGraph& g, LatticeContext context) {
  return {std::vector<std::int64_t>(g.num_edges(), 0), context};
}

LatticeVector LatticeVector::unit(const SurfaceGraph& g, std::size_t e) {
  check_edge(g, e);
  auto v = zero(g);
  v.coefficients[e] = 1;
  return v;
}

std::size_t step_start(const SurfaceGraph& g, const WalkStep& s) {
  const auto& e = g.edge(s.edge);
  return s.direction == Direction::Forward ? e.tail : e.head;
}

std::size_t step_end(const SurfaceGraph& g, const WalkStep& s) {
  const auto& e = g.edge(s.edge);
  return s.direction == Direction::Forward ? e.head : e.tail;
}

bool cut_lattice_member(const SurfaceGraph& g, std::span<const std::int64_t> v) {
  check_size(g, v.size(), "lattice vector");
  const auto tree = bfs_tree(g);
  std::vector<std::int64_t> potential(g.num_vertices(), 0);
  for (std::size_t x : tree.order) {
    if (tree.parent[x] == kNone) continue;
    const auto& e = g.edge(tree.parent_edge[x]);
    const auto delta = v[tree.parent_edge[x]];
    potential[x] = potential[tree.parent[x]] + (e.head == x ? delta : -delta);
  }
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    const auto& e = g.edge(i);
    if (v[i] != potential[e.head] - potential[e.tail]) return false;
  }
  return true;
}

bool cut_lattice_member(const SurfaceGraph& g, const LatticeVector& v) {
  return cut_lattice_member(g, std::span<const std::int64_t>(v.coefficients));
}

bool satisfies_conservation(const SurfaceGraph& g, std::span<const std::int64_t> v) {
  check_size(g, v.size(), "lattice vector");
  std::vector<std::int64_t> net(g.num_vertices(), 0);
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    net[g.edge(i).tail] -= v[i];
    net[g.edge(i).head] += v[i];
  }
  return std::all_of(net.begin(), net.end(), [](std::int64_t x) { return x == 0; });
}

std::vector<LatticeVector> cycle_basis(const SurfaceGraph& g) {
  const auto tree = bfs_tree(g);
  // Adds sign * (walk from x up to ancestor) to z.
  auto climb = [&](std::vector<std::int64_t>& z, std::size_t x, std::size_t ancestor,
                   std::int64_t sign) {
    while (x != ancestor) {
      const std::size_t pe = tree.parent_edge[x];
      z[pe] += sign * (g.edge(pe).tail == x ? 1 : -1);
      x = tree.parent[x];
    }
  };
  std::vector<LatticeVector> basis;
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    if (tree.tree_edge[i]) continue;
    const auto& e = g.edge(i);
    auto z = LatticeVector::zero(g, LatticeContext::Cycle);
    z.coefficients[i] = 1;
    std::size_t x = e.head, y = e.tail;
    while (tree.depth[x] > tree.depth[y]) x = tree.parent[x];
    while (tree.depth[y] > tree.depth[x]) y = tree.parent[y];
    while (x != y) {
      x = tree.parent[x];
      y = tree.parent[y];
    }
    climb(z.coefficients, e.head, x, 1);
    climb(z.coefficients, e.tail, x, -1);
    basis.push_back(std::move(z));
  }
  return basis;
}

bool homology_equivalent_by_lattice(const SurfaceGraph& g, std::size_t e1,
                                    std::size_t e2) {
  check_edge(g, e1);
  check_edge(g, e2);
  for (std::int64_t sign : {-1, 1}) {
    auto v = LatticeVector::unit(g, e1);
    v.coefficients[e2] += sign;
    if (cut_lattice_member(g, v)) return true;
  }
  return false;
}

bool homology_equivalent(const SurfaceGraph& g, std::size_t e1, std::size_t e2) {
  check_edge(g, e1);
  check_edge(g, e2);
  for (std::size_t e : {e1, e2}) {
    if (is_separating(g, e)) {
      throw PreconditionError("separating circle '" + g.edge(e).name + "'");
    }
  }
  bool result = e1 == e2;
  if (!result) {
    std::vector<bool> removed(g.num_edges(), false);
    removed[e1] = removed[e2] = true;
    result = !g.is_connected(removed);
  }
  assert(result == homology_equivalent_by_lattice(g, e1, e2));
  return result;
}

void check_walk(const SurfaceGraph& g, const ClosedWalk& w) {
  if (w.steps.empty()) throw PreconditionError("malformed walk: no steps");
  for (const auto& s : w.steps) {
    if (s.edge >= g.num_edges()) {
      throw PreconditionError("malformed walk: unknown edge #" + std::to_string(s.edge));
    }
  }
  for (std::size_t i = 0; i < w.steps.size(); ++i) {
    const auto& cur = w.steps[i];
    const auto& next = w.steps[(i + 1) % w.steps.size()];
    if (step_end(g, cur) != step_start(g, next)) {
      throw PreconditionError("malformed walk: step " + std::to_string(i) + " (" +
                              g.edge(cur.edge).name + ") does not meet step " +
                              std::to_string((i + 1) % w.steps.size()) + " (" +
                              g.edge(next.edge).name + ")");
    }
  }
}

LatticeVector crossing_vector(const SurfaceGraph& g, const ClosedWalk& w) {
  check_walk(g, w);
  auto z = LatticeVector::zero(g, LatticeContext::Cycle);
  for (const auto& s : w.steps) {
    z.coefficients[s.edge] += s.direction == Direction::Forward ? 1 : -1;
  }
  return z;
}

bool difference_map_trivial(const SurfaceGraph& g, const MultiTwist& t) {
  check_size(g, t.size(), "multi-twist");
  std::vector<std::int64_t> image(g.num_edges());
  for (const auto& z : cycle_basis(g)) {
    for (std::size_t e = 0; e < g.num_edges(); ++e) image[e] = t[e] * z[e];
    if (!cut_lattice_member(g, image)) return false;
  }
  return true;
}

DifferenceImage difference_image(const SurfaceGraph& g, const MultiTwist& t,
                                 const ClosedWalk& w) {
  check_size(g, t.size(), "multi-twist");
  DifferenceImage out;
  out.crossing = crossing_vector(g, w);
  out.coefficients = LatticeVector::zero(g);
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    out.coefficients.coefficients[e] = t[e] * out.crossing[e];
  }
  out.reduces_to_zero = cut_lattice_member(g, out.coefficients);
  return out;
}

std::int64_t intersection_with(const SurfaceGraph& g, const ClosedWalk& w,
                               const DifferenceImage& image) {
  const auto z = crossing_vector(g, w);
  check_size(g, image.coefficients.coefficients.size(), "difference image");
  std::int64_t sum = 0;
  for (std::size_t e = 0; e < g.num_edges(); ++e) sum += image.coefficients[e] * z[e];
  return sum;
}

std::optional<std::vector<Path>> edge_disjoint_paths(const SurfaceGraph& g,
                                                     std::size_t a, std::size_t b,
                                                     std::size_t k,
                                                     const std::vector<bool>& excluded) {
  check_vertex(g, a);
  check_vertex(g, b);
  if (a == b) throw PreconditionError("edge_disjoint_paths needs two distinct vertices");
  if (k == 0) throw PreconditionError("edge_disjoint_paths needs k >= 1");
  if (!excluded.empty()) check_size(g, excluded.size(), "exclusion mask");
  auto usable = [&](std::size_t e) {
    return !g.edge(e).is_loop() && (excluded.empty() || !excluded[e]);
  };

  // flow[e] in {-1, 0, 1}: units sent from tail to head.
  std::vector<int> flow(g.num_edges(), 0);
  auto step_flow = [&](const HalfEdge& h) { return h.outgoing ? 1 : -1; };

  for (std::size_t unit = 0; unit < k; ++unit) {
    std::vector<std::size_t> via(g.num_vertices(), kNone);
    std::vector<bool> seen(g.num_vertices(), false);
    std::vector<HalfEdge> came(g.num_vertices());
    std::deque<std::size_t> queue{a};
    seen[a] = true;
    while (!queue.empty() && !seen[b]) {
      std::size_t v = queue.front();
      queue.pop_front();
      for (const auto& h : g.incident(v)) {
        if (!usable(h.edge) || seen[h.neighbor]) continue;
        const int after = flow[h.edge] + step_flow(h);
        if (after < -1 || after > 1) continue;
        seen[h.neighbor] = true;
        came[h.neighbor] = h;
        via[h.neighbor] = v;
        queue.push_back(h.neighbor);
      }
    }
    if (!seen[b]) return std::nullopt;
    for (std::size_t x = b; x != a; x = via[x]) {
      flow[came[x].edge] += step_flow(came[x]);
    }
  }

  // Decompose the flow into simple a-b paths, discarding circulations.
  std::vector<bool> used(g.num_edges(), false);
  std::vector<Path> paths;
  for (std::size_t unit = 0; unit < k; ++unit) {
    std::vector<WalkStep> steps;
    std::vector<std::size_t> position(g.num_vertices(), kNone);
    std::size_t v = a;
    position[a] = 0;
    while (v != b) {
      const HalfEdge* next = nullptr;
      for (const auto& h : g.incident(v)) {
        if (usable(h.edge) && !used[h.edge] && flow[h.edge] == step_flow(h)) {
          next = &h;
          break;
        }
      }
      assert(next != nullptr);
      used[next->edge] = true;
      steps.push_back({next->edge, next->outgoing ? Direction::Forward : Direction::Backward});
      v = next->neighbor;
      if (position[v] != kNone) {
        for (std::size_t i = position[v]; i < steps.size(); ++i) {
          position[step_end(g, steps[i])] = kNone;
        }
        steps.resize(position[v]);
        position[v] = steps.size();
      } else {
        position[v] = steps.size();
      }
    }
    paths.push_back({std::move(steps)});
  }
  return paths;
}

std::pair<ClosedWalk, ClosedWalk> two_transversal_circles(const SurfaceGraph& g,
                                                          std::size_t d) {
  check_edge(g, d);
  const auto bridge = bridges(g);
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (bridge[e]) {
      throw PreconditionError("separating circle '" + g.edge(e).name + "'");
    }
  }
  for (std::size_t e1 = 0; e1 < g.num_edges(); ++e1) {
    for (std::size_t e2 = e1 + 1; e2 < g.num_edges(); ++e2) {
      if (homology_equivalent(g, e1, e2)) {
        throw PreconditionError("homology equivalent pair (" + g.edge(e1).name + "," +
                                g.edge(e2).name + ")");
      }
    }
  }
  const auto& edge = g.edge(d);
  const WalkStep through{d, Direction::Forward};
  if (edge.is_loop()) {
    ClosedWalk w{{through}};
    return {w, w};
  }
  std::vector<bool> excluded(g.num_edges(), false);
  excluded[d] = true;
  auto paths = edge_disjoint_paths(g, edge.head, edge.tail, 2, excluded);
  if (!paths) {
    // Unreachable under the preconditions: a single edge separating the
    // endpoints of D would form a bounding pair with D.
    throw Error("no two edge-disjoint return paths for '" + edge.name + "'");
  }
  ClosedWalk a{{through}}, b{{through}};
  a.steps.insert(a.steps.end(), (*paths)[0].steps.begin(), (*paths)[0].steps.end());
  b.steps.insert(b.steps.end(), (*paths)[1].steps.begin(), (*paths)[1].steps.end());
  return {a, b};
}

}  // namespace multitwist
