#include "multitwist/torelli.hpp"

#include <algorithm>

namespace multitwist {

namespace {

void require_valid_system(const SurfaceGraph& g) {
  if (auto violations = validate(g.with_mode(Mode::System)); !violations.empty()) {
    throw PreconditionError("not a valid system of circles: " + violations.front().message);
  }
}

/// Is g minus vertex v (and its edges) connected?
bool complement_connected(const SurfaceGraph& g, std::size_t v) {
  const std::size_t n = g.num_vertices();
  if (n < 2) return false;
  std::vector<bool> seen(n, false);
  seen[v] = true;
  const std::size_t start = v == 0 ? 1 : 0;
  std::vector<std::size_t> stack{start};
  seen[start] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    std::size_t x = stack.back();
    stack.pop_back();
    for (const auto& h : g.incident(x)) {
      if (seen[h.neighbor]) continue;
      seen[h.neighbor] = true;
      ++count;
      stack.push_back(h.neighbor);
    }
  }
  return count == n - 1;
}

}  // namespace

TorelliReport torelli_membership(const SurfaceGraph& g, const MultiTwist& t) {
  if (t.size() != g.num_edges()) {
    throw PreconditionError("multi-twist does not match the surface graph");
  }
  TorelliReport report;
  MultiTwist twist = t;
  if (g.mode() == Mode::General) {
    if (!g.is_connected()) throw PreconditionError("surface not connected");
    auto normalized = normalize(g, t);
    report.graph = std::move(normalized.graph);
    twist = std::move(normalized.twist);
  } else {
    require_valid_system(g);
    report.graph = g;
  }
  const auto partition = necklace_partition(report.graph);
  for (const auto& necklace : partition.necklaces) {
    std::int64_t sum = 0;
    for (std::size_t e : necklace) sum += twist[e];
    if (sum != 0) report.violations.push_back({necklace, sum});
  }
  report.member = report.violations.empty();
  return report;
}

RankReport multitwist_subgroup_rank(const SurfaceGraph& g) {
  const auto partition = necklace_partition(g);
  RankReport report;
  report.rank = static_cast<int>(g.num_edges() - partition.count());
  for (std::size_t e : partition.separating) {
    report.basis.push_back(MultiTwist::unit(g, e));
  }
  for (const auto& necklace : partition.necklaces) {
    for (std::size_t i = 1; i < necklace.size(); ++i) {
      auto t = MultiTwist::unit(g, necklace[i]);
      t.exponents[necklace.front()] = -1;
      report.basis.push_back(std::move(t));
    }
  }
  return report;
}

int d_invariant(const SurfaceGraph& g, std::size_t v) {
  const auto type = piece_type(g, v);
  const auto& name = g.vertex(v).name;
  if (type == PieceType::Disc || type == PieceType::Annulus) {
    throw PreconditionError("d is undefined on " + std::string(to_string(type)) +
                            " piece '" + name + "'");
  }
  if (g.degree(v) == 0) {
    throw PreconditionError("d is undefined on closed piece '" + name + "'");
  }
  return 2 * g.vertex(v).genus - 3 + static_cast<int>(g.degree(v));
}

SystemInvariants system_invariants(const SurfaceGraph& g) {
  require_valid_system(g);
  SystemInvariants out;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    out.total_defect += d_invariant(g, v);
    const auto type = piece_type(g, v);
    if (type != PieceType::Pants && type != PieceType::OneHoledTorus) {
      ++out.irregular_pieces;
    }
  }
  return out;
}

std::optional<std::size_t> embedded_planar_piece(const SurfaceGraph& g) {
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    if (g.vertex(v).genus == 0 && g.loop_count(v) == 0 && complement_connected(g, v)) {
      return v;
    }
  }
  return std::nullopt;
}

std::optional<std::size_t> exceptional_piece(const SurfaceGraph& g) {
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    switch (piece_type(g, v)) {
      case PieceType::Pants:
      case PieceType::FourHoledSphere:
      case PieceType::OneHoledTorus:
      case PieceType::TwoHoledTorus:
        break;
      default:
        return v;
    }
  }
  return std::nullopt;
}

BoundReport rank_upper_bounds(const SurfaceGraph& g) {
  require_valid_system(g);
  BoundReport r;
  r.genus = genus(g);
  if (r.genus < 2) {
    throw PreconditionError("rank bounds need genus >= 2, got " + std::to_string(r.genus));
  }
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    r.d_values[g.vertex(v).name] = d_invariant(g, v);
  }
  const auto inv = system_invariants(g);
  r.total_defect = inv.total_defect;
  r.irregular_pieces = inv.irregular_pieces;
  r.generic = 2 * r.genus - 3;
  r.refined = r.generic - (r.total_defect - r.irregular_pieces);
  r.multitwist = r.generic - r.total_defect;
  if (auto v = embedded_planar_piece(g)) r.embedded_piece = g.vertex(*v).name;
  if (auto v = exceptional_piece(g)) r.exceptional_piece = g.vertex(*v).name;
  if (r.embedded_piece || r.exceptional_piece) r.conditional_2g4 = 2 * r.genus - 4;
  return r;
}

std::vector<DecorationViolation> validate_decoration(const SurfaceGraph& g,
                                                     const Decoration& d) {
  std::vector<DecorationViolation> out;
  for (const auto& name : d.marked) {
    const auto v = g.find_vertex(name);
    if (!v) {
      out.push_back({name, "unknown vertex"});
      continue;
    }
    switch (piece_type(g, *v)) {
      case PieceType::Pants:
        out.push_back({name, "no pseudo-Anosov class on a sphere with 3 holes"});
        break;
      case PieceType::Disc:
      case PieceType::Annulus:
        out.push_back({name, "no pseudo-Anosov class on a disc or annulus"});
        break;
      case PieceType::OneHoledTorus:
        if (d.torelli) {
          out.push_back({name,
                         "a pseudo-Anosov class on a one-holed torus is not the "
                         "restriction of a Torelli element"});
        }
        break;
      default:
        break;
    }
  }
  return out;
}

int abelian_rank_bound(const SurfaceGraph& g, const Decoration& d) {
  if (auto violations = validate_decoration(g, d); !violations.empty()) {
    const auto& v = violations.front();
    throw PreconditionError("invalid decoration at '" + v.vertex + "': " + v.rule);
  }
  const auto rank = multitwist_subgroup_rank(g).rank;
  int bound = static_cast<int>(d.marked.size()) + rank;
  if (genus(g) >= 2) {
    const auto bounds = rank_upper_bounds(g);
    bound = std::min({bound, bounds.generic, bounds.refined});
    if (bounds.conditional_2g4) bound = std::min(bound, *bounds.conditional_2g4);
  }
  return bound;
}

NecklaceBoundCheck necklace_lower_bound_check(const SurfaceGraph& g) {
  NecklaceBoundCheck out;
  out.genus = genus(g);
  out.necklaces = static_cast<int>(necklace_partition(g).count());
  out.planar_applies = std::all_of(g.vertices().begin(), g.vertices().end(),
                                   [](const Vertex& v) { return v.genus == 0; });
  if (!out.planar_applies) return out;
  out.planar_margin = out.necklaces - out.genus;
  out.planar_holds = out.planar_margin >= 0;
  if (auto v = embedded_planar_piece(g)) {
    out.embedded_applies = true;
    out.embedded_piece = g.vertex(*v).name;
    out.embedded_margin = out.necklaces - (out.genus + 1);
    out.embedded_holds = out.embedded_margin >= 0;
  }
  return out;
}

}  // namespace multitwist
