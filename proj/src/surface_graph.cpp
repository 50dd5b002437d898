#include "multitwist/surface_graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>

namespace multitwist {

std::string_view to_string(Mode mode) {
  return mode == Mode::System ? "system" : "general";
}

std::string_view to_string(PieceType type) {
  switch (type) {
    case PieceType::Disc: return "disc";
    case PieceType::Annulus: return "annulus";
    case PieceType::Pants: return "pants";
    case PieceType::FourHoledSphere: return "four-holed-sphere";
    case PieceType::OneHoledTorus: return "one-holed-torus";
    case PieceType::TwoHoledTorus: return "two-holed-torus";
    case PieceType::Other: return "other";
  }
  return "other";
}

std::string_view to_string(Rule rule) {
  switch (rule) {
    case Rule::Disconnected: return "disconnected";
    case Rule::Empty: return "empty";
    case Rule::TrivialCircle: return "trivial-circle";
    case Rule::IsotopicCircles: return "isotopic-circles";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// SurfaceGraph

std::optional<std::size_t> SurfaceGraph::find_vertex(std::string_view name) const {
  auto it = std::lower_bound(
      vertices_.begin(), vertices_.end(), name,
      [](const Vertex& v, std::string_view n) { return v.name < n; });
  if (it == vertices_.end() || it->name != name) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::optional<std::size_t> SurfaceGraph::find_edge(std::string_view name) const {
  auto it = std::lower_bound(
      edges_.begin(), edges_.end(), name,
      [](const Edge& e, std::string_view n) { return e.name < n; });
  if (it == edges_.end() || it->name != name) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

std::size_t SurfaceGraph::vertex_index(std::string_view name) const {
  if (auto v = find_vertex(name)) return *v;
  throw UnknownIdError("vertex", std::string(name));
}

std::size_t SurfaceGraph::edge_index(std::string_view name) const {
  if (auto e = find_edge(name)) return *e;
  throw UnknownIdError("edge", std::string(name));
}

std::size_t SurfaceGraph::loop_count(std::size_t v) const {
  std::size_t n = 0;
  for (const auto& h : incident(v)) {
    if (edges_[h.edge].is_loop() && h.outgoing) ++n;
  }
  return n;
}

long SurfaceGraph::cycle_rank() const {
  return static_cast<long>(edges_.size()) - static_cast<long>(vertices_.size()) + 1;
}

bool SurfaceGraph::is_connected() const {
  return is_connected(std::vector<bool>(edges_.size(), false));
}

bool SurfaceGraph::is_connected(const std::vector<bool>& removed_edges) const {
  if (vertices_.empty()) return false;
  std::vector<bool> seen(vertices_.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (const auto& h : incidence_[v]) {
      if (removed_edges[h.edge] || seen[h.neighbor]) continue;
      seen[h.neighbor] = true;
      ++count;
      stack.push_back(h.neighbor);
    }
  }
  return count == vertices_.size();
}

SurfaceGraph SurfaceGraph::with_mode(Mode mode) const {
  SurfaceGraph copy = *this;
  copy.mode_ = mode;
  return copy;
}

bool operator==(const SurfaceGraph& a, const SurfaceGraph& b) {
  if (a.mode_ != b.mode_ || a.vertices_.size() != b.vertices_.size() ||
      a.edges_.size() != b.edges_.size()) {
    return false;
  }
  for (std::size_t v = 0; v < a.vertices_.size(); ++v) {
    if (a.vertices_[v].name != b.vertices_[v].name ||
        a.vertices_[v].genus != b.vertices_[v].genus) {
      return false;
    }
  }
  for (std::size_t e = 0; e < a.edges_.size(); ++e) {
    const auto& x = a.edges_[e];
    const auto& y = b.edges_[e];
    if (x.name != y.name || x.tail != y.tail || x.head != y.head) return false;
  }
  return true;
}

void SurfaceGraph::index() {
  incidence_.assign(vertices_.size(), {});
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto& edge = edges_[e];
    incidence_[edge.tail].push_back({e, edge.head, true});
    incidence_[edge.head].push_back({e, edge.tail, false});
  }
}

SurfaceGraph::Builder& SurfaceGraph::Builder::mode(Mode mode) {
  mode_ = mode;
  return *this;
}

SurfaceGraph::Builder& SurfaceGraph::Builder::vertex(std::string name, int genus) {
  vertices_.push_back({std::move(name), genus});
  return *this;
}

SurfaceGraph::Builder& SurfaceGraph::Builder::edge(std::string name,
                                                   std::string tail,
                                                   std::string head) {
  edges_.push_back({std::move(name), std::move(tail), std::move(head)});
  return *this;
}

SurfaceGraph SurfaceGraph::Builder::build() const {
  SurfaceGraph g;
  g.mode_ = mode_;
  g.vertices_ = vertices_;
  std::sort(g.vertices_.begin(), g.vertices_.end(),
            [](const Vertex& a, const Vertex& b) { return a.name < b.name; });
  for (std::size_t v = 0; v < g.vertices_.size(); ++v) {
    if (g.vertices_[v].name.empty()) {
      throw PreconditionError("empty vertex name");
    }
    if (g.vertices_[v].genus < 0) {
      throw PreconditionError("vertex '" + g.vertices_[v].name +
                              "' has negative genus");
    }
    if (v > 0 && g.vertices_[v].name == g.vertices_[v - 1].name) {
      throw PreconditionError("duplicate vertex '" + g.vertices_[v].name + "'");
    }
  }

  std::vector<PendingEdge> pending = edges_;
  std::sort(pending.begin(), pending.end(),
            [](const PendingEdge& a, const PendingEdge& b) { return a.name < b.name; });
  g.edges_.reserve(pending.size());
  for (std::size_t e = 0; e < pending.size(); ++e) {
    if (pending[e].name.empty()) throw PreconditionError("empty edge name");
    if (e > 0 && pending[e].name == pending[e - 1].name) {
      throw PreconditionError("duplicate edge '" + pending[e].name + "'");
    }
    g.edges_.push_back({pending[e].name, g.vertex_index(pending[e].tail),
                        g.vertex_index(pending[e].head)});
  }
  g.index();
  return g;
}

// ---------------------------------------------------------------------------
// Operations

namespace {

SurfaceGraph::Builder builder_from(const SurfaceGraph& g) {
  SurfaceGraph::Builder b;
  b.mode(g.mode());
  for (const auto& v : g.vertices()) b.vertex(v.name, v.genus);
  return b;
}

/// Component id per vertex of g minus the removed edges; components are
/// numbered in order of their least vertex.
std::vector<std::size_t> components(const SurfaceGraph& g,
                                    const std::vector<bool>& removed,
                                    std::size_t* count) {
  constexpr auto kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> comp(g.num_vertices(), kNone);
  std::size_t next = 0;
  for (std::size_t start = 0; start < g.num_vertices(); ++start) {
    if (comp[start] != kNone) continue;
    std::vector<std::size_t> stack{start};
    comp[start] = next;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (const auto& h : g.incident(v)) {
        if (removed[h.edge] || comp[h.neighbor] != kNone) continue;
        comp[h.neighbor] = next;
        stack.push_back(h.neighbor);
      }
    }
    ++next;
  }
  if (count) *count = next;
  return comp;
}

std::vector<bool> edge_mask(const SurfaceGraph& g, const std::set<std::size_t>& edges) {
  std::vector<bool> mask(g.num_edges(), false);
  for (std::size_t e : edges) {
    if (e >= g.num_edges()) {
      throw UnknownIdError("edge", "#" + std::to_string(e));
    }
    mask[e] = true;
  }
  return mask;
}

void check_edge(const SurfaceGraph& g, std::size_t e) {
  if (e >= g.num_edges()) throw UnknownIdError("edge", "#" + std::to_string(e));
}

}  // namespace

std::vector<Violation> validate(const SurfaceGraph& g) {
  std::vector<Violation> out;
  if (g.num_vertices() == 0) {
    out.push_back({Rule::Empty, "", "surface graph has no vertices"});
    return out;
  }
  if (!g.is_connected()) {
    out.push_back({Rule::Disconnected, "", "surface not connected"});
  }
  if (g.mode() == Mode::General) return out;

  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    const auto& vertex = g.vertex(v);
    if (vertex.genus != 0) continue;
    if (g.degree(v) == 1) {
      const auto& e = g.edge(g.incident(v)[0].edge);
      out.push_back({Rule::TrivialCircle, vertex.name,
                     "piece '" + vertex.name + "' is a disc, so circle '" +
                         e.name + "' is trivial"});
    } else if (g.degree(v) == 2 && g.loop_count(v) == 0) {
      const auto& e1 = g.edge(g.incident(v)[0].edge);
      const auto& e2 = g.edge(g.incident(v)[1].edge);
      out.push_back({Rule::IsotopicCircles, vertex.name,
                     "piece '" + vertex.name + "' is an annulus, so circles '" +
                         e1.name + "' and '" + e2.name + "' are isotopic"});
    }
  }
  return out;
}

int genus(const SurfaceGraph& g) {
  if (!g.is_connected()) throw PreconditionError("surface not connected");
  long total = g.cycle_rank();
  for (const auto& v : g.vertices()) total += v.genus;
  return static_cast<int>(total);
}

PieceType piece_type(int genus, std::size_t boundary_circles) {
  if (genus == 0) {
    switch (boundary_circles) {
      case 1: return PieceType::Disc;
      case 2: return PieceType::Annulus;
      case 3: return PieceType::Pants;
      case 4: return PieceType::FourHoledSphere;
      default: return PieceType::Other;
    }
  }
  if (genus == 1) {
    if (boundary_circles == 1) return PieceType::OneHoledTorus;
    if (boundary_circles == 2) return PieceType::TwoHoledTorus;
  }
  return PieceType::Other;
}

PieceType piece_type(const SurfaceGraph& g, std::size_t v) {
  if (v >= g.num_vertices()) throw UnknownIdError("vertex", "#" + std::to_string(v));
  return piece_type(g.vertex(v).genus, g.degree(v));
}

std::vector<bool> bridges(const SurfaceGraph& g) {
  // Tarjan's low-link; parallel edges are distinguished by edge id.
  const std::size_t n = g.num_vertices();
  std::vector<bool> out(g.num_edges(), false);
  std::vector<int> order(n, -1), low(n, 0);
  int counter = 0;
  std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t v,
                                                          std::size_t via) {
    order[v] = low[v] = counter++;
    for (const auto& h : g.incident(v)) {
      if (h.edge == via) continue;
      if (order[h.neighbor] < 0) {
        dfs(h.neighbor, h.edge);
        low[v] = std::min(low[v], low[h.neighbor]);
        if (low[h.neighbor] > order[v]) out[h.edge] = true;
      } else {
        low[v] = std::min(low[v], order[h.neighbor]);
      }
    }
  };
  for (std::size_t v = 0; v < n; ++v) {
    if (order[v] < 0) dfs(v, static_cast<std::size_t>(-1));
  }
  return out;
}

bool is_separating(const SurfaceGraph& g, std::size_t e) {
  check_edge(g, e);
  if (g.edge(e).is_loop()) return false;
  std::vector<bool> removed(g.num_edges(), false);
  removed[e] = true;
  return !g.is_connected(removed);
}

CutResult cut(const SurfaceGraph& g, const std::set<std::size_t>& edges) {
  const auto removed = edge_mask(g, edges);
  std::size_t count = 0;
  const auto comp = components(g, removed, &count);

  std::vector<SurfaceGraph::Builder> builders(count);
  for (auto& b : builders) b.mode(Mode::General);
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    builders[comp[v]].vertex(g.vertex(v).name, g.vertex(v).genus);
  }
  CutResult result;
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const auto& edge = g.edge(e);
    const auto& tail = g.vertex(edge.tail).name;
    const auto& head = g.vertex(edge.head).name;
    if (removed[e]) {
      result.boundary_map.push_back(
          {edge.name, {comp[edge.tail], tail}, {comp[edge.head], head}});
    } else {
      builders[comp[edge.tail]].edge(edge.name, tail, head);
    }
  }
  for (const auto& b : builders) result.components.push_back(b.build());
  return result;
}

CapDeleteResult cap_and_delete(const SurfaceGraph& g, std::size_t e) {
  check_edge(g, e);
  CutResult pieces = cut(g, {e});
  CapDeleteResult result;
  for (auto& part : pieces.components) {
    Mode mode = g.mode();
    if (mode == Mode::System && !validate(part.with_mode(Mode::System)).empty()) {
      mode = Mode::General;
    }
    result.parts.push_back(part.with_mode(mode));
  }
  for (const auto& part : result.parts) {
    for (std::size_t v = 0; v < part.num_vertices(); ++v) {
      if (part.vertex(v).genus != 0) continue;
      const auto& inc = part.incident(v);
      if (inc.size() == 1) {
        result.trivial.push_back(part.edge(inc[0].edge).name);
      } else if (inc.size() == 2 && inc[0].edge != inc[1].edge) {
        auto a = part.edge(inc[0].edge).name;
        auto b = part.edge(inc[1].edge).name;
        if (b < a) std::swap(a, b);
        result.isotopic.emplace_back(a, b);
      }
    }
  }
  std::sort(result.trivial.begin(), result.trivial.end());
  result.trivial.erase(std::unique(result.trivial.begin(), result.trivial.end()),
                       result.trivial.end());
  std::sort(result.isotopic.begin(), result.isotopic.end());
  return result;
}

SurfaceGraph cut_along_only(const SurfaceGraph& g,
                            const std::set<std::size_t>& edges) {
  const auto removed = edge_mask(g, edges);
  std::size_t count = 0;
  const auto comp = components(g, removed, &count);

  std::vector<std::string> names(count);
  std::vector<long> genus_of(count, 1);  // cycle rank = E - V + 1
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    if (names[comp[v]].empty()) names[comp[v]] = g.vertex(v).name;
    genus_of[comp[v]] += g.vertex(v).genus - 1;
  }
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (!removed[e]) genus_of[comp[g.edge(e).tail]] += 1;
  }
  SurfaceGraph::Builder b;
  b.mode(g.mode());
  for (std::size_t c = 0; c < count; ++c) {
    b.vertex(names[c], static_cast<int>(genus_of[c]));
  }
  for (std::size_t e : edges) {
    const auto& edge = g.edge(e);
    b.edge(edge.name, names[comp[edge.tail]], names[comp[edge.head]]);
  }
  return b.build();
}

SurfaceGraph flip_edge(const SurfaceGraph& g, std::size_t e) {
  check_edge(g, e);
  auto b = builder_from(g);
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    const auto& edge = g.edge(i);
    const auto& tail = g.vertex(edge.tail).name;
    const auto& head = g.vertex(edge.head).name;
    if (i == e) {
      b.edge(edge.name, head, tail);
    } else {
      b.edge(edge.name, tail, head);
    }
  }
  return b.build();
}

Normalized normalize(const SurfaceGraph& g, const MultiTwist& t) {
  if (t.size() != g.num_edges()) {
    throw PreconditionError("multi-twist does not match the surface graph");
  }
  struct WorkEdge {
    std::string name;
    std::size_t tail, head;
    std::int64_t exponent;
    bool alive = true;
  };
  std::vector<bool> vertex_alive(g.num_vertices(), true);
  std::vector<WorkEdge> work;
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const auto& edge = g.edge(e);
    work.push_back({edge.name, edge.tail, edge.head, t[e]});
  }
  auto ends_at = [&](std::size_t v) {
    std::vector<std::size_t> out;  // one entry per half-edge
    for (std::size_t e = 0; e < work.size(); ++e) {
      if (!work[e].alive) continue;
      if (work[e].tail == v) out.push_back(e);
      if (work[e].head == v) out.push_back(e);
    }
    return out;
  };

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t v = 0; v < g.num_vertices() && !changed; ++v) {
      if (!vertex_alive[v] || g.vertex(v).genus != 0) continue;
      const auto ends = ends_at(v);
      if (ends.size() == 1) {
        work[ends[0]].alive = false;
        vertex_alive[v] = false;
        changed = true;
      } else if (ends.size() == 2 && ends[0] != ends[1]) {
        auto& keep = work[ends[0]].name < work[ends[1]].name ? work[ends[0]] : work[ends[1]];
        auto& drop = &keep == &work[ends[0]] ? work[ends[1]] : work[ends[0]];
        const std::size_t x = keep.tail == v ? keep.head : keep.tail;
        const std::size_t y = drop.tail == v ? drop.head : drop.tail;
        keep.tail = x;
        keep.head = y;
        keep.exponent += drop.exponent;
        drop.alive = false;
        vertex_alive[v] = false;
        changed = true;
      }
    }
  }

  SurfaceGraph::Builder b;
  b.mode(Mode::System);
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    if (vertex_alive[v]) b.vertex(g.vertex(v).name, g.vertex(v).genus);
  }
  std::map<std::string, std::int64_t> exponents;
  for (const auto& e : work) {
    if (!e.alive) continue;
    b.edge(e.name, g.vertex(e.tail).name, g.vertex(e.head).name);
    exponents[e.name] = e.exponent;
  }
  Normalized out{b.build(), {}};
  out.twist = MultiTwist::from_names(out.graph, exponents);
  return out;
}

// ---------------------------------------------------------------------------
// MultiTwist

MultiTwist MultiTwist::identity(const SurfaceGraph& g) {
  return MultiTwist{std::vector<std::int64_t>(g.num_edges(), 0)};
}

MultiTwist MultiTwist::from_names(const SurfaceGraph& g,
                                  const std::map<std::string, std::int64_t>& by_name) {
  MultiTwist t = identity(g);
  for (const auto& [name, exponent] : by_name) {
    t.exponents[g.edge_index(name)] = exponent;
  }
  return t;
}

MultiTwist MultiTwist::unit(const SurfaceGraph& g, std::size_t e) {
  check_edge(g, e);
  MultiTwist t = identity(g);
  t.exponents[e] = 1;
  return t;
}

bool MultiTwist::is_identity() const {
  return std::all_of(exponents.begin(), exponents.end(),
                     [](std::int64_t x) { return x == 0; });
}

}  // namespace multitwist
