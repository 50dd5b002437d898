#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace multitwist {

class SurfaceGraph;

/// Product of powers of Dehn twists about the circles of a surface graph,
/// stored as one exponent per edge (canonical edge order).  Positive
/// exponents are left twists.  Twists do not depend on circle orientation.
struct MultiTwist {
  std::vector<std::int64_t> exponents;

  static MultiTwist identity(const SurfaceGraph& g);
  /// Exponents by edge name; unnamed edges get 0.  Throws UnknownIdError.
  static MultiTwist from_names(const SurfaceGraph& g,
                               const std::map<std::string, std::int64_t>& by_name);
  /// Unit twist about one edge.
  static MultiTwist unit(const SurfaceGraph& g, std::size_t e);

  std::size_t size() const { return exponents.size(); }
  std::int64_t operator[](std::size_t e) const { return exponents.at(e); }
  bool is_identity() const;

  friend bool operator==(const MultiTwist&, const MultiTwist&) = default;
};

}  // namespace multitwist
