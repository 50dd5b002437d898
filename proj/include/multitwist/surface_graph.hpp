#pragma once

// Dual graph of a closed oriented surface cut along disjoint circles.
//
// Vertices are the pieces of the cut surface, labeled by their genus; edges
// are the circles.  A circle with the same piece on both sides is a loop.
// The stored (tail, head) order of an edge is an arbitrary reference
// orientation of the circle.

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "multitwist/errors.hpp"
#include "multitwist/multi_twist.hpp"

namespace multitwist {

enum class Mode {
  System,   // disjoint, non-trivial, pairwise non-isotopic circles
  General,  // any closed one-dimensional submanifold
};

std::string_view to_string(Mode mode);

struct Vertex {
  std::string name;
  int genus = 0;
};

struct Edge {
  std::string name;
  std::size_t tail = 0;
  std::size_t head = 0;

  bool is_loop() const { return tail == head; }
  /// Endpoint opposite to `v`; for a loop this is `v` itself.
  std::size_t other(std::size_t v) const { return v == tail ? head : tail; }
};

/// One end of an edge seen from a vertex.  A loop contributes two half-edges
/// to its vertex, one per boundary circle of the piece.
struct HalfEdge {
  std::size_t edge;
  std::size_t neighbor;
  bool outgoing;  // true if the vertex is the tail of this end
};

/// Immutable genus-labeled multigraph.  Vertices and edges are stored in
/// lexicographic order of their names; all indices refer to that order.
class SurfaceGraph {
 public:
  class Builder;

  SurfaceGraph() = default;

  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  Mode mode() const { return mode_; }

  const Vertex& vertex(std::size_t v) const { return vertices_.at(v); }
  const Edge& edge(std::size_t e) const { return edges_.at(e); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  std::optional<std::size_t> find_vertex(std::string_view name) const;
  std::optional<std::size_t> find_edge(std::string_view name) const;
  /// Like find_*, but throw UnknownIdError.
  std::size_t vertex_index(std::string_view name) const;
  std::size_t edge_index(std::string_view name) const;

  /// Number of boundary circles of the piece; loops count twice.
  std::size_t degree(std::size_t v) const { return incidence_.at(v).size(); }
  const std::vector<HalfEdge>& incident(std::size_t v) const {
    return incidence_.at(v);
  }
  std::size_t loop_count(std::size_t v) const;

  /// E - V + 1 (meaningful for connected graphs).
  long cycle_rank() const;
  bool is_connected() const;
  bool is_connected(const std::vector<bool>& removed_edges) const;

  SurfaceGraph with_mode(Mode mode) const;

  friend bool operator==(const SurfaceGraph& a, const SurfaceGraph& b);

 private:
  void index();

  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<HalfEdge>> incidence_;
  Mode mode_ = Mode::System;
};

/// Collects declarations by name and produces a canonically ordered graph.
/// build() throws PreconditionError on duplicate names or negative genus and
/// UnknownIdError on dangling endpoints; it does not check the surface
/// invariants (see validate()).
class SurfaceGraph::Builder {
 public:
  Builder& mode(Mode mode);
  Builder& vertex(std::string name, int genus);
  Builder& edge(std::string name, std::string tail, std::string head);
  SurfaceGraph build() const;

 private:
  struct PendingEdge {
    std::string name, tail, head;
  };
  Mode mode_ = Mode::System;
  std::vector<Vertex> vertices_;
  std::vector<PendingEdge> edges_;
};

enum class PieceType {
  Disc,
  Annulus,
  Pants,
  FourHoledSphere,
  OneHoledTorus,
  TwoHoledTorus,
  Other,
};

std::string_view to_string(PieceType type);

enum class Rule {
  Disconnected,
  Empty,
  TrivialCircle,   // disc piece
  IsotopicCircles, // annulus piece between two distinct circles
};

std::string_view to_string(Rule rule);

struct Violation {
  Rule rule;
  std::string subject;  // offending vertex name, or empty for global rules
  std::string message;
};

/// Every invariant of g.mode() that fails.  Empty means valid.
std::vector<Violation> validate(const SurfaceGraph& g);

/// Sum of vertex genera plus the cycle rank.  Throws PreconditionError
/// "surface not connected".
int genus(const SurfaceGraph& g);

PieceType piece_type(const SurfaceGraph& g, std::size_t v);
PieceType piece_type(int genus, std::size_t boundary_circles);

/// True iff the edge is a bridge.  Loops are never separating.
bool is_separating(const SurfaceGraph& g, std::size_t e);
/// Bridge flags for all edges at once.
std::vector<bool> bridges(const SurfaceGraph& g);

struct BoundarySlot {
  std::size_t component;
  std::string vertex;
};

struct CutResult {
  std::vector<SurfaceGraph> components;
  /// Indexed like the removed edges (in canonical order): the piece each
  /// side of the circle ended up in.
  struct Removed {
    std::string edge;
    BoundarySlot tail, head;
  };
  std::vector<Removed> boundary_map;
};

/// Cut the surface along the given circles.  Components keep their genus
/// labels and are returned in the order of their least vertex.
CutResult cut(const SurfaceGraph& g, const std::set<std::size_t>& edges);

struct CapDeleteResult {
  /// One graph if the circle was non-separating, two otherwise.
  std::vector<SurfaceGraph> parts;
  /// Surviving circles that bound a disc after capping.
  std::vector<std::string> trivial;
  /// Pairs of surviving circles that cobound an annulus after capping.
  std::vector<std::pair<std::string, std::string>> isotopic;
};

/// Cut along one circle and cap both new boundary circles with discs.
CapDeleteResult cap_and_delete(const SurfaceGraph& g, std::size_t e);

/// Contract every component of g minus `edges` to a single vertex carrying
/// the genus of that component.  The result is the dual graph of the
/// surface cut along `edges` alone.  New vertices are named after the least
/// vertex of their component.
SurfaceGraph cut_along_only(const SurfaceGraph& g,
                            const std::set<std::size_t>& edges);

/// Copy of g with the orientation of edge e reversed.
SurfaceGraph flip_edge(const SurfaceGraph& g, std::size_t e);

struct Normalized {
  SurfaceGraph graph;
  MultiTwist twist;
};

/// Reduce a general submanifold to a system of circles: drop circles that
/// bound a disc (with their exponent) and merge circles that cobound an
/// annulus (summing exponents; the merged circle keeps the smaller name).
/// Repeats until neither applies.  The result is in Mode::System.
Normalized normalize(const SurfaceGraph& g, const MultiTwist& t);

}  // namespace multitwist
