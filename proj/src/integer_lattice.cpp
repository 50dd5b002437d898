#include "multitwist/integer_lattice.hpp"

#include <cstdlib>
#include <utility>

namespace multitwist {

LatticeShape lattice_shape(IntegerMatrix m) {
  LatticeShape out;
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Pivot: smallest nonzero magnitude in the unreduced block.
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        if (m[i][j] != 0 && (pr == rows || std::llabs(m[i][j]) < std::llabs(m[pr][pc]))) {
          pr = i;
          pc = j;
        }
      }
    }
    if (pr == rows) break;
    std::swap(m[t], m[pr]);
    for (auto& row : m) std::swap(row[t], row[pc]);

    bool clean = true;
    for (std::size_t i = t + 1; i < rows; ++i) {
      const std::int64_t q = m[i][t] / m[t][t];
      if (q != 0) {
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
      }
      if (m[i][t] != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < cols; ++j) {
      const std::int64_t q = m[t][j] / m[t][t];
      if (q != 0) {
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
      }
      if (m[t][j] != 0) clean = false;
    }
    if (!clean) continue;  // remainders are smaller; pick a new pivot
    ++out.rank;
    out.saturation_index *= std::llabs(m[t][t]);
    ++t;
  }
  return out;
}

}  // namespace multitwist
