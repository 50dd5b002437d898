#pragma once

// Named curve systems used throughout the tests, the acceptance suite and
// the documentation.

#include "multitwist/surface_graph.hpp"

namespace multitwist::families {

/// Two pieces of genus g1 and g2 glued along three circles C, D, E, all
/// oriented from Q1 to Q2.  Genus g1 + g2 + 2.
SurfaceGraph theta(int g1, int g2);

/// Two pieces glued along a bounding pair C, D.  Genus g1 + g2 + 1.
SurfaceGraph bounding_pair(int g1, int g2);

/// Torus cut along one non-separating circle: an annulus glued to itself.
SurfaceGraph torus_loop();

/// 2g - 3 separating circles: a caterpillar tree of g - 2 pants with g
/// one-holed tori as leaves.  g >= 2.
SurfaceGraph separating_tree(int g);

/// Cycle of g - 1 pants, each carrying a one-holed torus: g - 1 separating
/// and g - 1 pairwise homology-equivalent circles.  g >= 2.
SurfaceGraph pants_cycle_with_handles(int g);

/// Cycle of g - 1 two-holed tori (a BP-necklace of g - 1 circles).  g >= 2.
SurfaceGraph torus_cycle(int g);

/// Four pants glued along the six edges of a tetrahedron.  Genus 3.
SurfaceGraph tetrahedral_pants();

/// One sphere with four holes glued to itself along two circles.  Genus 2.
SurfaceGraph double_loop_sphere();

}  // namespace multitwist::families
