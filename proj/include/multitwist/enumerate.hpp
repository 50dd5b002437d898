#pragma once

// Exhaustive generation of curve systems of a given genus, up to
// isomorphism of genus-labeled multigraphs.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "multitwist/surface_graph.hpp"

namespace multitwist {

struct EnumSpec {
  int genus = 2;
  /// Defaults to 3g - 3, the size of a pants decomposition.  In system mode
  /// larger values are rejected.
  std::optional<int> max_edges;
  Mode mode = Mode::System;
  bool dedup = true;

  int effective_max_edges() const { return max_edges.value_or(3 * genus - 3); }
};

/// Throws PreconditionError if the spec is out of range.
void check_spec(const EnumSpec& spec);

/// Calls `visit` for every connected genus-labeled multigraph with
/// 1 <= E <= max_edges, total genus spec.genus, and no validate()
/// violations in spec.mode.  With dedup, exactly one graph per isomorphism
/// class is produced, in canonical form (vertices v0.., edges e0..).
/// Without dedup the raw generator output is produced (isomorphic copies
/// may repeat).  The order is deterministic.  Return false from `visit` to
/// stop early.
void for_each_system(const EnumSpec& spec,
                     const std::function<bool(const SurfaceGraph&)>& visit);

std::vector<SurfaceGraph> enumerate_systems(const EnumSpec& spec);

/// Isomorphism-invariant code: equal iff the genus-labeled multigraphs are
/// isomorphic.  Names, edge orientations and mode are ignored.
using CanonicalForm = std::vector<std::int64_t>;

CanonicalForm canonical_form(const SurfaceGraph& g);

/// Canonical representative with vertices v0.. and edges e0.. (zero-padded
/// when there are ten or more), mode preserved.
SurfaceGraph canonical_graph(const SurfaceGraph& g);

bool isomorphic(const SurfaceGraph& a, const SurfaceGraph& b);

}  // namespace multitwist
