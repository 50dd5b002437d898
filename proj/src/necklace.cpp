#include "multitwist/necklace.hpp"

#include <algorithm>
#include <numeric>

#include "multitwist/homology.hpp"

namespace multitwist {

long NecklacePartition::necklace_of(std::size_t e) const {
  for (std::size_t i = 0; i < necklaces.size(); ++i) {
    if (std::binary_search(necklaces[i].begin(), necklaces[i].end(), e)) {
      return static_cast<long>(i);
    }
  }
  return -1;
}

NecklacePartition necklace_partition_unchecked(const SurfaceGraph& g) {
  if (!g.is_connected()) throw PreconditionError("surface not connected");
  const auto bridge = bridges(g);
  NecklacePartition out;
  std::vector<bool> placed(g.num_edges(), false);
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (bridge[e]) {
      out.separating.push_back(e);
      continue;
    }
    if (placed[e]) continue;
    std::vector<std::size_t> cls{e};
    placed[e] = true;
    for (std::size_t f = e + 1; f < g.num_edges(); ++f) {
      if (!bridge[f] && !placed[f] && homology_equivalent(g, e, f)) {
        cls.push_back(f);
        placed[f] = true;
      }
    }
    out.necklaces.push_back(std::move(cls));
  }
  return out;
}

NecklacePartition necklace_partition(const SurfaceGraph& g) {
  if (auto violations = validate(g.with_mode(Mode::System)); !violations.empty()) {
    throw PreconditionError("not a valid system of circles: " + violations.front().message);
  }
  return necklace_partition_unchecked(g);
}

bool is_bp_necklace(const SurfaceGraph& g) {
  if (g.num_vertices() < 2 || !g.is_connected()) return false;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) != 2) return false;
  }
  return true;
}

bool necklace_is_bp(const SurfaceGraph& g, const std::set<std::size_t>& necklace) {
  const auto partition = necklace_partition_unchecked(g);
  const std::vector<std::size_t> wanted(necklace.begin(), necklace.end());
  const bool found = std::find(partition.necklaces.begin(), partition.necklaces.end(),
                               wanted) != partition.necklaces.end();
  if (!found) throw PreconditionError("edge set is not a necklace of the system");
  if (wanted.size() < 2) {
    throw PreconditionError("necklace '" + g.edge(wanted.front()).name +
                            "' has a single circle");
  }
  return is_bp_necklace(cut_along_only(g, necklace));
}

}  // namespace multitwist
