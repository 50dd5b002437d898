#pragma once

// Integer-lattice model of the circle classes in H_1 of a closed surface.
//
// A combination sum_e a_e [C_e] of circle classes vanishes iff (a_e) is the
// coboundary of an integer vertex potential (the cut lattice).  A closed
// curve transverse to the circles is recorded by its signed crossing counts,
// which form an integer flow (the cycle lattice); every such flow is
// realized by some closed curve.  With these two facts the action of a
// multi-twist on homology reduces to lattice membership tests.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "multitwist/multi_twist.hpp"
#include "multitwist/surface_graph.hpp"

namespace multitwist {

enum class LatticeContext { Free, Cycle, Cut };

/// Integer vector indexed by edges (canonical order).
struct LatticeVector {
  std::vector<std::int64_t> coefficients;
  LatticeContext context = LatticeContext::Free;

  static LatticeVector zero(const SurfaceGraph& g,
                            LatticeContext context = LatticeContext::Free);
  static LatticeVector unit(const SurfaceGraph& g, std::size_t e);

  std::int64_t operator[](std::size_t e) const { return coefficients.at(e); }
  friend bool operator==(const LatticeVector& a, const LatticeVector& b) {
    return a.coefficients == b.coefficients;
  }
};

enum class Direction { Forward, Backward };

struct WalkStep {
  std::size_t edge;
  Direction direction;

  friend bool operator==(const WalkStep&, const WalkStep&) = default;
};

/// Cyclic sequence of edge traversals.
struct ClosedWalk {
  std::vector<WalkStep> steps;
};

/// Walk from one vertex to another (not necessarily closed).
struct Path {
  std::vector<WalkStep> steps;
};

std::size_t step_start(const SurfaceGraph& g, const WalkStep& s);
std::size_t step_end(const SurfaceGraph& g, const WalkStep& s);

/// True iff v = df for an integer potential f on vertices, i.e.
/// v(e) = f(head(e)) - f(tail(e)) for every edge.  Throws on a
/// disconnected graph or a size mismatch.
bool cut_lattice_member(const SurfaceGraph& g, std::span<const std::int64_t> v);
bool cut_lattice_member(const SurfaceGraph& g, const LatticeVector& v);

/// True iff v has zero net flow at every vertex (loops are unconstrained).
bool satisfies_conservation(const SurfaceGraph& g, std::span<const std::int64_t> v);

/// Fundamental cycles of the BFS spanning tree rooted at the least vertex,
/// one per non-tree edge in canonical order (loops included).  The size is
/// E - V + 1.
std::vector<LatticeVector> cycle_basis(const SurfaceGraph& g);

/// Two non-separating circles are homology equivalent iff they are equal or
/// together separate the surface.  Throws PreconditionError("separating
/// circle ...") if either edge is a bridge.
bool homology_equivalent(const SurfaceGraph& g, std::size_t e1, std::size_t e2);

/// Same relation decided through the cut lattice: unit(e1) - unit(e2) or
/// unit(e1) + unit(e2) is a coboundary.  No bridge check.
bool homology_equivalent_by_lattice(const SurfaceGraph& g, std::size_t e1,
                                    std::size_t e2);

/// Throws PreconditionError("malformed walk ...") if consecutive steps do not
/// share a vertex or the walk does not close up.
void check_walk(const SurfaceGraph& g, const ClosedWalk& w);

/// Signed traversal count per edge.
LatticeVector crossing_vector(const SurfaceGraph& g, const ClosedWalk& w);

/// Delta_t = 0 on H_1, decided on the cycle basis: for every basis flow z the
/// vector (t(e) z(e))_e must be a coboundary.  Independent of the necklace
/// criterion.
bool difference_map_trivial(const SurfaceGraph& g, const MultiTwist& t);

/// The image of the class crossing the circles as `w` does under
/// Delta_t, written in circle classes: coefficient t(e) * z(e) on circle e.
struct DifferenceImage {
  LatticeVector crossing;
  LatticeVector coefficients;
  bool reduces_to_zero = false;
};

DifferenceImage difference_image(const SurfaceGraph& g, const MultiTwist& t,
                                 const ClosedWalk& w);

/// Intersection number <b, image> of the class carried by `w` with the
/// image, i.e. sum_e coefficient(e) * z_w(e).  Well defined modulo the cut
/// lattice because z_w is a flow.
std::int64_t intersection_with(const SurfaceGraph& g, const ClosedWalk& w,
                               const DifferenceImage& image);

/// k pairwise edge-disjoint simple paths from a to b, or nullopt if some set
/// of fewer than k edges separates them.  Unit-capacity max-flow; loops are
/// never used.  Edges flagged in `excluded` are treated as absent.
std::optional<std::vector<Path>> edge_disjoint_paths(
    const SurfaceGraph& g, std::size_t a, std::size_t b, std::size_t k,
    const std::vector<bool>& excluded = {});

/// Two closed walks crossing circle D once each (in the same direction) and
/// crossing every other circle at most once, with no circle other than D
/// crossed by both.  Requires every circle to be non-separating and no two
/// to be homology equivalent; violations throw PreconditionError naming the
/// witness.
std::pair<ClosedWalk, ClosedWalk> two_transversal_circles(const SurfaceGraph& g,
                                                          std::size_t d);

}  // namespace multitwist
