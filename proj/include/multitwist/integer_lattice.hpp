#pragma once

#include <cstdint>
#include <vector>

namespace multitwist {

using IntegerMatrix = std::vector<std::vector<std::int64_t>>;

struct LatticeShape {
  int rank = 0;
  /// Index of the row lattice in its saturation (product of the nonzero
  /// invariant factors).  1 iff the rows span every integer vector of
  /// their rational span.
  std::int64_t saturation_index = 1;
};

/// Diagonalizes a copy of `rows` by unimodular row and column operations.
LatticeShape lattice_shape(IntegerMatrix rows);

}  // namespace multitwist
