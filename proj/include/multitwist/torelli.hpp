#pragma once

// Torelli membership of multi-twists and rank bounds for abelian subgroups
// of the Torelli group supported on a system of circles.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "multitwist/multi_twist.hpp"
#include "multitwist/necklace.hpp"
#include "multitwist/surface_graph.hpp"

namespace multitwist {

struct NecklaceViolation {
  std::vector<std::size_t> necklace;
  std::int64_t exponent_sum = 0;
};

struct TorelliReport {
  bool member = true;
  std::vector<NecklaceViolation> violations;
  /// The graph the necklaces refer to (the normalized graph for
  /// general-mode input).
  SurfaceGraph graph;
};

/// A multi-twist acts trivially on homology iff its exponents sum to zero
/// on every necklace.  Twists about separating circles are unconstrained.
/// General-mode input is normalized first; an invalid system throws.
TorelliReport torelli_membership(const SurfaceGraph& g, const MultiTwist& t);

struct RankReport {
  int rank = 0;
  std::vector<MultiTwist> basis;
};

/// Rank of the multi-twist subgroup of the Torelli group: edges minus
/// necklaces.  Basis: one unit twist per separating circle, and
/// t_C * t_R^{-1} for every non-representative C of a necklace with least
/// circle R.
RankReport multitwist_subgroup_rank(const SurfaceGraph& g);

/// 2 genus(Q) - 3 + b(Q).  Discs, annuli and closed pieces throw.
int d_invariant(const SurfaceGraph& g, std::size_t v);

struct SystemInvariants {
  int total_defect = 0;      // sum of d(Q) over pieces
  int irregular_pieces = 0;  // pieces that are neither pants nor one-holed tori
};

SystemInvariants system_invariants(const SurfaceGraph& g);

/// Genus-0 piece without loops whose complement is connected (so the piece
/// embeds and its complementary surface is connected), if any: least name.
std::optional<std::size_t> embedded_planar_piece(const SurfaceGraph& g);

/// Piece that is none of pants, four-holed sphere, one- or two-holed torus.
std::optional<std::size_t> exceptional_piece(const SurfaceGraph& g);

struct BoundReport {
  std::map<std::string, int> d_values;
  int genus = 0;
  int total_defect = 0;
  int irregular_pieces = 0;
  int generic = 0;      // 2g - 3
  int refined = 0;      // 2g - 3 - (total_defect - irregular_pieces)
  int multitwist = 0;   // 2g - 3 - total_defect
  std::optional<int> conditional_2g4;
  std::optional<std::string> embedded_piece;
  std::optional<std::string> exceptional_piece;
};

/// Requires a valid system of genus >= 2.
BoundReport rank_upper_bounds(const SurfaceGraph& g);

/// Pieces assumed to carry pseudo-Anosov restrictions of an abelian
/// subgroup.  In Torelli mode a one-holed torus cannot carry one.
struct Decoration {
  std::set<std::string> marked;
  bool torelli = true;
};

struct DecorationViolation {
  std::string vertex;
  std::string rule;
};

std::vector<DecorationViolation> validate_decoration(const SurfaceGraph& g,
                                                     const Decoration& d);

/// |marked| + multi-twist rank, capped by every applicable bound of
/// rank_upper_bounds (caps apply for genus >= 2).  Invalid decorations throw
/// PreconditionError naming the vertex and rule.
int abelian_rank_bound(const SurfaceGraph& g, const Decoration& d);

struct NecklaceBoundCheck {
  int genus = 0;
  int necklaces = 0;
  /// Every piece has genus 0: at least `genus` necklaces.
  bool planar_applies = false;
  bool planar_holds = true;
  int planar_margin = 0;
  /// Additionally an embedded planar piece with connected complement:
  /// at least genus + 1 necklaces.
  bool embedded_applies = false;
  bool embedded_holds = true;
  int embedded_margin = 0;
  std::optional<std::string> embedded_piece;

  bool holds() const { return planar_holds && embedded_holds; }
};

NecklaceBoundCheck necklace_lower_bound_check(const SurfaceGraph& g);

}  // namespace multitwist
