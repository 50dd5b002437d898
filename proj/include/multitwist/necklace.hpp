#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "multitwist/surface_graph.hpp"

namespace multitwist {

/// Homology-equivalence classes of the non-separating circles (necklaces),
/// plus the separating circles, which are all null-homologous and are kept
/// apart rather than counted as a necklace.
struct NecklacePartition {
  /// Each necklace sorted; necklaces ordered by least edge.
  std::vector<std::vector<std::size_t>> necklaces;
  std::vector<std::size_t> separating;

  std::size_t count() const { return necklaces.size(); }
  /// Necklace index of an edge, or -1 for separating edges.
  long necklace_of(std::size_t e) const;
};

/// Requires a valid system of circles (PreconditionError otherwise).
NecklacePartition necklace_partition(const SurfaceGraph& g);

/// Same relation for any connected graph, without the validity check.
NecklacePartition necklace_partition_unchecked(const SurfaceGraph& g);

/// A cycle with at least two vertices: every piece has exactly two boundary
/// circles and there are at least two pieces.
bool is_bp_necklace(const SurfaceGraph& g);

/// Cut the surface along the circles of one necklace alone and test the
/// result with is_bp_necklace.  `necklace` must be a necklace of g with at
/// least two circles.
bool necklace_is_bp(const SurfaceGraph& g, const std::set<std::size_t>& necklace);

}  // namespace multitwist
