#include "multitwist/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "multitwist/homology.hpp"
#include "multitwist/integer_lattice.hpp"
#include "multitwist/necklace.hpp"
#include "multitwist/text_format.hpp"
#include "multitwist/torelli.hpp"

namespace multitwist {

namespace {

struct CheckInfo {
  const char* name;
  const char* statement;
};

constexpr CheckInfo kChecks[] = {
    {"genus", "enumerated graph has the requested genus"},
    {"oracle-equivalence", "necklace sums vanish iff the difference map vanishes"},
    {"necklace-shift", "a zero-sum change on one necklace preserves the difference map"},
    {"necklace-reduction",
     "the multi-twist acts like the twist about necklace representatives with summed exponents"},
    {"rank-formula", "rank = E - n; basis lies in the Torelli group and spans the solution lattice"},
    {"generic-rank-bound", "rank <= 2g - 3"},
    {"defect-rank-bound", "rank <= 2g - 3 - D(s)"},
    {"conditional-rank-bound", "embedded planar piece or exceptional piece => rank <= 2g - 4"},
    {"defect-order", "D(s) >= d(s) >= 0"},
    {"planar-necklace-bound", "all pieces planar => at least g necklaces"},
    {"embedded-necklace-bound",
     "all pieces planar, one embedded with connected complement => at least g + 1 necklaces"},
    {"bp-subsets", "pairwise equivalent non-separating circles cut the surface into a cycle"},
    {"bp-necklaces", "every necklace of two or more circles is a BP-necklace"},
    {"menger", "two edge-disjoint paths exist iff no single edge separates the endpoints"},
    {"transversal-circles", "transversal pair meets the crossing contract and <b, D(a)> = n_D"},
    {"equivalence-transitivity", "homology equivalence is transitive"},
    {"equivalence-agreement", "2-cut test agrees with the cut-lattice test"},
    {"separating-criteria", "bridge <=> unit vector in cut lattice <=> cut has two components"},
    {"cycle-basis", "cycle basis has E - V + 1 conserving vectors"},
    {"orientation-invariance", "boolean outputs do not depend on edge orientations"},
    {"isomorphism-invariance", "invariants agree on relabeled isomorphic copies"},
    {"normalize-membership", "normalization preserves membership and is idempotent"},
    {"cap-delete-genus", "capping a circle drops the genus by one or splits it additively"},
    {"cut-genus", "genus = sum of component genera + removed - components + 1"},
};

class Recorder {
 public:
  Recorder(VerificationReport& report, const SurfaceGraph& g, const VerifyOptions& options)
      : report_(report), g_(g), options_(options) {}

  void operator()(const char* name, bool ok, const std::string& detail = {}) {
    auto& check = find(name);
    if (ok) {
      ++check.passed;
      return;
    }
    ++check.failed;
    if (check.counterexamples.size() < options_.max_counterexamples) {
      std::string text = serialize(g_);
      if (!detail.empty()) text += "# " + detail + "\n";
      check.counterexamples.push_back(std::move(text));
    }
  }

 private:
  CheckResult& find(const char* name) {
    for (auto& c : report_.checks) {
      if (c.name == name) return c;
    }
    std::string statement;
    for (const auto& info : kChecks) {
      if (std::string(info.name) == name) statement = info.statement;
    }
    report_.checks.push_back({name, statement, 0, 0, {}});
    return report_.checks.back();
  }

  VerificationReport& report_;
  const SurfaceGraph& g_;
  const VerifyOptions& options_;
};

std::string twist_text(const SurfaceGraph& g, const MultiTwist& t) {
  std::ostringstream out;
  out << "twist";
  for (std::size_t e = 0; e < g.num_edges(); ++e) out << ' ' << g.edge(e).name << '=' << t[e];
  return out.str();
}

std::vector<MultiTwist> sample_twists(const SurfaceGraph& g, const VerifyOptions& options,
                                      std::mt19937_64& rng,
                                      const NecklacePartition* partition) {
  const std::size_t n = g.num_edges();
  const int b = options.exponent_bound;
  std::vector<MultiTwist> out;
  if (n <= options.exhaustive_max_edges) {
    MultiTwist t{std::vector<std::int64_t>(n, -b)};
    for (;;) {
      out.push_back(t);
      std::size_t i = 0;
      while (i < n && t.exponents[i] == b) t.exponents[i++] = -b;
      if (i == n) break;
      ++t.exponents[i];
    }
    return out;
  }
  std::uniform_int_distribution<int> exponent(-b, b);
  for (std::size_t s = 0; s < options.random_samples; ++s) {
    MultiTwist t{std::vector<std::int64_t>(n)};
    for (auto& x : t.exponents) x = exponent(rng);
    out.push_back(t);
  }
  if (partition) {
    for (std::size_t s = 0; s < options.random_samples; ++s) {
      MultiTwist t{std::vector<std::int64_t>(n)};
      for (auto& x : t.exponents) x = exponent(rng);
      for (const auto& necklace : partition->necklaces) {
        std::int64_t rest = 0;
        for (std::size_t i = 1; i < necklace.size(); ++i) rest += t[necklace[i]];
        t.exponents[necklace.front()] = -rest;
      }
      out.push_back(t);
    }
  }
  return out;
}

/// Copy of g with vertices and edges renamed through random permutations
/// and every edge orientation flipped with probability 1/2.
struct Relabeled {
  SurfaceGraph graph;
  std::vector<std::size_t> edge_map;  // old edge index -> new edge index
};

Relabeled relabel(const SurfaceGraph& g, std::mt19937_64& rng) {
  std::vector<std::size_t> vperm(g.num_vertices()), eperm(g.num_edges());
  std::iota(vperm.begin(), vperm.end(), 0);
  std::iota(eperm.begin(), eperm.end(), 0);
  std::shuffle(vperm.begin(), vperm.end(), rng);
  std::shuffle(eperm.begin(), eperm.end(), rng);
  auto vname = [&](std::size_t v) { return "w" + std::to_string(100 + vperm[v]); };
  auto ename = [&](std::size_t e) { return "f" + std::to_string(100 + eperm[e]); };
  SurfaceGraph::Builder b;
  b.mode(g.mode());
  for (std::size_t v = 0; v < g.num_vertices(); ++v) b.vertex(vname(v), g.vertex(v).genus);
  std::bernoulli_distribution flip(0.5);
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const auto& edge = g.edge(e);
    if (flip(rng)) {
      b.edge(ename(e), vname(edge.head), vname(edge.tail));
    } else {
      b.edge(ename(e), vname(edge.tail), vname(edge.head));
    }
  }
  Relabeled out{b.build(), std::vector<std::size_t>(g.num_edges())};
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    out.edge_map[e] = out.graph.edge_index(ename(e));
  }
  return out;
}

MultiTwist map_twist(const MultiTwist& t, const std::vector<std::size_t>& edge_map) {
  MultiTwist out{std::vector<std::int64_t>(t.size())};
  for (std::size_t e = 0; e < t.size(); ++e) out.exponents[edge_map[e]] = t[e];
  return out;
}

std::vector<std::set<std::string>> named_classes(const SurfaceGraph& g,
                                                 const NecklacePartition& p) {
  std::vector<std::set<std::string>> out;
  for (const auto& necklace : p.necklaces) {
    std::set<std::string> names;
    for (std::size_t e : necklace) names.insert(g.edge(e).name);
    out.push_back(std::move(names));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_simple_path(const SurfaceGraph& g, const Path& p, std::size_t a, std::size_t b) {
  if (p.steps.empty()) return false;
  std::set<std::size_t> visited{a};
  std::size_t at = a;
  for (const auto& s : p.steps) {
    if (step_start(g, s) != at) return false;
    at = step_end(g, s);
    if (!visited.insert(at).second) return false;
  }
  return at == b;
}

// ---------------------------------------------------------------------------
// Individual check groups

void check_separation(const SurfaceGraph& g, Recorder& record) {
  const auto bridge = bridges(g);
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const bool by_search = is_separating(g, e);
    const bool by_lattice = cut_lattice_member(g, LatticeVector::unit(g, e));
    const bool by_cut = cut(g, {e}).components.size() == 2;
    record("separating-criteria",
           by_search == bridge[e] && by_search == by_lattice && by_search == by_cut,
           "edge " + g.edge(e).name);
  }
  const auto basis = cycle_basis(g);
  bool ok = static_cast<long>(basis.size()) == g.cycle_rank();
  for (const auto& z : basis) ok = ok && satisfies_conservation(g, z.coefficients);
  record("cycle-basis", ok);
}

void check_equivalence(const SurfaceGraph& g, Recorder& record) {
  const auto bridge = bridges(g);
  std::vector<std::size_t> nonsep;
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (!bridge[e]) nonsep.push_back(e);
  }
  const std::size_t n = nonsep.size();
  std::vector<std::vector<bool>> eq(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      eq[i][j] = homology_equivalent(g, nonsep[i], nonsep[j]);
      record("equivalence-agreement",
             eq[i][j] == homology_equivalent_by_lattice(g, nonsep[i], nonsep[j]),
             "edges " + g.edge(nonsep[i]).name + ", " + g.edge(nonsep[j]).name);
    }
  }
  bool transitive = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (eq[i][j] && eq[j][k] && !eq[i][k]) transitive = false;
      }
    }
  }
  record("equivalence-transitivity", transitive);
}

void check_menger(const SurfaceGraph& g, Recorder& record) {
  for (std::size_t a = 0; a < g.num_vertices(); ++a) {
    for (std::size_t b = a + 1; b < g.num_vertices(); ++b) {
      bool single_cut = false;
      for (std::size_t e = 0; e < g.num_edges() && !single_cut; ++e) {
        if (g.edge(e).is_loop()) continue;
        std::vector<bool> removed(g.num_edges(), false);
        removed[e] = true;
        auto rest = cut(g, {e});
        std::size_t ca = 0, cb = 0;
        for (std::size_t c = 0; c < rest.components.size(); ++c) {
          if (rest.components[c].find_vertex(g.vertex(a).name)) ca = c;
          if (rest.components[c].find_vertex(g.vertex(b).name)) cb = c;
        }
        single_cut = ca != cb;
      }
      const auto paths = edge_disjoint_paths(g, a, b, 2);
      bool ok = paths.has_value() == !single_cut;
      if (paths) {
        const auto& p = *paths;
        ok = ok && p.size() == 2 && is_simple_path(g, p[0], a, b) &&
             is_simple_path(g, p[1], a, b);
        std::set<std::size_t> first;
        for (const auto& s : p[0].steps) first.insert(s.edge);
        for (const auto& s : p[1].steps) ok = ok && !first.count(s.edge);
      }
      record("menger", ok, "vertices " + g.vertex(a).name + ", " + g.vertex(b).name);
    }
  }
}

void check_transversal_pair(const SurfaceGraph& h, std::size_t d, const MultiTwist& n,
                            Recorder& record) {
  const auto [a, b] = two_transversal_circles(h, d);
  const auto za = crossing_vector(h, a);
  const auto zb = crossing_vector(h, b);
  bool ok = za[d] == 1 && zb[d] == 1;
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    ok = ok && std::llabs(za[e]) <= 1 && std::llabs(zb[e]) <= 1;
    if (e != d) ok = ok && za[e] * zb[e] == 0;
  }
  const auto image = difference_image(h, n, a);
  ok = ok && intersection_with(h, b, image) == n[d];
  record("transversal-circles", ok, "circle " + h.edge(d).name + ", " + twist_text(h, n));
}

void check_bp(const SurfaceGraph& g, const NecklacePartition& partition, Recorder& record) {
  for (const auto& necklace : partition.necklaces) {
    if (necklace.size() < 2) continue;
    const std::set<std::size_t> all(necklace.begin(), necklace.end());
    record("bp-necklaces", necklace_is_bp(g, all), "necklace of " + g.edge(necklace[0]).name);
    const std::size_t k = necklace.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
      if (__builtin_popcountll(mask) < 2) continue;
      std::set<std::size_t> subset;
      for (std::size_t i = 0; i < k; ++i) {
        if (mask >> i & 1) subset.insert(necklace[i]);
      }
      record("bp-subsets", is_bp_necklace(cut_along_only(g, subset)),
             "subset of necklace of " + g.edge(necklace[0]).name);
    }
  }
}

void check_transversal(const SurfaceGraph& g, const NecklacePartition& partition,
                       const std::vector<MultiTwist>& twists, std::mt19937_64& rng,
                       Recorder& record) {
  // Hypotheses of the two-circle construction hold on g itself.
  const bool direct = partition.separating.empty() &&
                      std::all_of(partition.necklaces.begin(), partition.necklaces.end(),
                                  [](const auto& n) { return n.size() == 1; });
  std::uniform_int_distribution<int> exponent(-3, 3);
  if (direct) {
    for (std::size_t d = 0; d < g.num_edges(); ++d) {
      MultiTwist n{std::vector<std::int64_t>(g.num_edges())};
      for (auto& x : n.exponents) x = exponent(rng);
      check_transversal_pair(g, d, n, record);
    }
  }

  // Representatives of the necklaces, cut along alone, with exponents summed
  // over each necklace.
  if (partition.necklaces.empty()) return;
  std::set<std::size_t> reps;
  for (const auto& necklace : partition.necklaces) reps.insert(necklace.front());
  const SurfaceGraph h = cut_along_only(g, reps);
  const std::size_t limit = std::min<std::size_t>(twists.size(), 10);
  for (std::size_t s = 0; s < limit; ++s) {
    const auto& t = twists[s * twists.size() / limit];
    MultiTwist n = MultiTwist::identity(h);
    for (const auto& necklace : partition.necklaces) {
      std::int64_t sum = 0;
      for (std::size_t e : necklace) sum += t[e];
      n.exponents[h.edge_index(g.edge(necklace.front()).name)] = sum;
    }
    record("necklace-reduction", difference_map_trivial(g, t) == difference_map_trivial(h, n),
           twist_text(g, t));
    for (std::size_t d = 0; d < h.num_edges(); ++d) check_transversal_pair(h, d, n, record);
  }
}

void check_rank(const SurfaceGraph& g, const NecklacePartition& partition, Recorder& record) {
  const auto report = multitwist_subgroup_rank(g);
  const int edges = static_cast<int>(g.num_edges());
  const int n = static_cast<int>(partition.count());
  int by_classes = static_cast<int>(partition.separating.size());
  for (const auto& necklace : partition.necklaces) by_classes += static_cast<int>(necklace.size()) - 1;

  bool ok = report.rank == edges - n && report.rank == by_classes &&
            static_cast<int>(report.basis.size()) == report.rank;

  IntegerMatrix constraints;
  for (const auto& necklace : partition.necklaces) {
    std::vector<std::int64_t> row(g.num_edges(), 0);
    for (std::size_t e : necklace) row[e] = 1;
    constraints.push_back(std::move(row));
  }
  IntegerMatrix basis;
  for (const auto& t : report.basis) {
    ok = ok && torelli_membership(g, t).member && difference_map_trivial(g, t);
    for (const auto& row : constraints) {
      std::int64_t dot = 0;
      for (std::size_t e = 0; e < g.num_edges(); ++e) dot += row[e] * t[e];
      ok = ok && dot == 0;
    }
    basis.push_back(t.exponents);
  }
  const auto constraint_shape = lattice_shape(constraints);
  const auto basis_shape = lattice_shape(basis);
  ok = ok && constraint_shape.rank == n && basis_shape.rank == report.rank &&
       basis_shape.rank + constraint_shape.rank == edges && basis_shape.saturation_index == 1;
  record("rank-formula", ok);

  const int g_genus = genus(g);
  if (g_genus < 2) return;
  const auto bounds = rank_upper_bounds(g);
  record("generic-rank-bound", report.rank <= bounds.generic);
  record("defect-rank-bound", report.rank <= bounds.multitwist);
  record("defect-order", bounds.total_defect >= bounds.irregular_pieces && bounds.irregular_pieces >= 0);
  if (bounds.conditional_2g4) {
    record("conditional-rank-bound", report.rank <= *bounds.conditional_2g4);
  }
  const auto lower = necklace_lower_bound_check(g);
  if (lower.planar_applies) record("planar-necklace-bound", lower.planar_holds);
  if (lower.embedded_applies) record("embedded-necklace-bound", lower.embedded_holds);
}

void check_orientation(const SurfaceGraph& g, const std::vector<MultiTwist>& twists,
                       std::mt19937_64& rng, Recorder& record) {
  if (g.num_edges() == 0) return;
  SurfaceGraph all = g;
  for (std::size_t e = 0; e < g.num_edges(); ++e) all = flip_edge(all, e);
  std::uniform_int_distribution<std::size_t> pick(0, g.num_edges() - 1);
  const std::size_t one = pick(rng);
  const bool system = g.mode() == Mode::System;
  for (const SurfaceGraph* flipped : {&all}) {
    const SurfaceGraph single = flip_edge(g, one);
    for (const SurfaceGraph* h : {flipped, &single}) {
      bool ok = bridges(*h) == bridges(g);
      if (system) {
        ok = ok && named_classes(*h, necklace_partition(*h)) ==
                       named_classes(g, necklace_partition(g));
      }
      const std::size_t limit = std::min<std::size_t>(twists.size(), 10);
      for (std::size_t s = 0; s < limit; ++s) {
        const auto& t = twists[s * twists.size() / limit];
        ok = ok && difference_map_trivial(*h, t) == difference_map_trivial(g, t) &&
             torelli_membership(*h, t).member == torelli_membership(g, t).member;
      }
      record("orientation-invariance", ok);
    }
  }
}

void check_isomorphism(const SurfaceGraph& g, const std::vector<MultiTwist>& twists,
                       std::mt19937_64& rng, Recorder& record) {
  const auto copy = relabel(g, rng);
  const auto& h = copy.graph;
  bool ok = canonical_form(h) == canonical_form(g) && genus(h) == genus(g);
  if (g.mode() == Mode::System) {
    ok = ok && necklace_partition(h).count() == necklace_partition(g).count() &&
         multitwist_subgroup_rank(h).rank == multitwist_subgroup_rank(g).rank;
    if (genus(g) >= 2) {
      const auto bg = rank_upper_bounds(g);
      const auto bh = rank_upper_bounds(h);
      ok = ok && bg.total_defect == bh.total_defect &&
           bg.irregular_pieces == bh.irregular_pieces &&
           bg.conditional_2g4.has_value() == bh.conditional_2g4.has_value();
    }
  }
  const std::size_t limit = std::min<std::size_t>(twists.size(), 10);
  for (std::size_t s = 0; s < limit; ++s) {
    const auto& t = twists[s * twists.size() / limit];
    const auto mapped = map_twist(t, copy.edge_map);
    ok = ok && torelli_membership(h, mapped).member == torelli_membership(g, t).member &&
         difference_map_trivial(h, mapped) == difference_map_trivial(g, t);
  }
  record("isomorphism-invariance", ok);
}

void check_genus_arithmetic(const SurfaceGraph& g, std::mt19937_64& rng, Recorder& record) {
  const int total = genus(g);
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const auto r = cap_and_delete(g, e);
    bool ok;
    if (is_separating(g, e)) {
      ok = r.parts.size() == 2 && genus(r.parts[0]) + genus(r.parts[1]) == total;
    } else {
      ok = r.parts.size() == 1 && genus(r.parts[0]) == total - 1;
    }
    record("cap-delete-genus", ok, "edge " + g.edge(e).name);
  }
  std::vector<std::set<std::size_t>> subsets;
  std::set<std::size_t> every;
  for (std::size_t e = 0; e < g.num_edges(); ++e) every.insert(e);
  subsets.push_back(every);
  std::bernoulli_distribution coin(0.5);
  for (int k = 0; k < 3; ++k) {
    std::set<std::size_t> s;
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
      if (coin(rng)) s.insert(e);
    }
    subsets.push_back(std::move(s));
  }
  for (const auto& s : subsets) {
    const auto r = cut(g, s);
    long sum = static_cast<long>(s.size()) - static_cast<long>(r.components.size()) + 1;
    for (const auto& c : r.components) sum += genus(c);
    record("cut-genus", sum == total);
  }
}

}  // namespace

bool VerificationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.ok(); });
}

const CheckResult* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

void verify_graph(const SurfaceGraph& g, const VerifyOptions& options, std::uint64_t stream,
                  VerificationReport& report) {
  Recorder record(report, g, options);
  std::mt19937_64 rng(options.seed ^ (0x9E3779B97F4A7C15ULL * (stream + 1)));
  ++report.graphs;
  record("genus", genus(g) == report.spec.genus, "genus " + std::to_string(genus(g)));

  const bool system = g.mode() == Mode::System;
  std::optional<NecklacePartition> partition;
  if (system) partition = necklace_partition(g);
  const auto twists = sample_twists(g, options, rng, partition ? &*partition : nullptr);

  for (const auto& t : twists) {
    ++report.twist_pairs;
    const bool oracle = difference_map_trivial(g, t);
    const auto membership = torelli_membership(g, t);
    if (system) {
      record("oracle-equivalence", membership.member == oracle, twist_text(g, t));
      const auto n = normalize(g, t);
      record("normalize-membership", n.graph == g && n.twist == t, twist_text(g, t));
    } else {
      const auto n = normalize(g, t);
      const auto again = normalize(n.graph, n.twist);
      record("normalize-membership",
             membership.member == oracle && validate(n.graph).empty() &&
                 again.graph == n.graph && again.twist == n.twist,
             twist_text(g, t));
    }
  }

  if (system && !partition->necklaces.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, partition->necklaces.size() - 1);
    std::uniform_int_distribution<int> amount(1, 3);
    const std::size_t limit = std::min<std::size_t>(twists.size(), 10);
    for (std::size_t s = 0; s < limit; ++s) {
      const auto& t = twists[s * twists.size() / limit];
      const auto& necklace = partition->necklaces[pick(rng)];
      if (necklace.size() < 2) continue;
      MultiTwist shifted = t;
      const int k = amount(rng);
      shifted.exponents[necklace.front()] += k;
      shifted.exponents[necklace.back()] -= k;
      record("necklace-shift", difference_map_trivial(g, shifted) == difference_map_trivial(g, t),
             twist_text(g, t));
    }
  }

  check_separation(g, record);
  check_equivalence(g, record);
  check_menger(g, record);
  check_orientation(g, twists, rng, record);
  check_isomorphism(g, twists, rng, record);
  check_genus_arithmetic(g, rng, record);
  if (system) {
    check_rank(g, *partition, record);
    check_bp(g, *partition, record);
    check_transversal(g, *partition, twists, rng, record);
  } else {
    check_bp(g, necklace_partition_unchecked(g), record);
  }
}

VerificationReport verify_theorems(const EnumSpec& spec, const VerifyOptions& options) {
  check_spec(spec);
  VerificationReport report;
  report.spec = spec;
  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  };
  std::uint64_t stream = 0;
  for_each_system(spec, [&](const SurfaceGraph& g) {
    if (options.budget_seconds && elapsed() > *options.budget_seconds) {
      report.complete = false;
      return false;
    }
    verify_graph(g, options, stream++, report);
    return true;
  });
  report.seconds = elapsed();
  return report;
}

}  // namespace multitwist
