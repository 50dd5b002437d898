#include "multitwist/enumerate.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <utility>

namespace multitwist {

namespace {

using Matrix = std::vector<std::vector<int>>;

/// Symmetric multiplicity matrix; the diagonal holds loop counts.
Matrix adjacency(const SurfaceGraph& g) {
  Matrix a(g.num_vertices(), std::vector<int>(g.num_vertices(), 0));
  for (const auto& e : g.edges()) {
    ++a[e.tail][e.head];
    if (!e.is_loop()) ++a[e.head][e.tail];
  }
  return a;
}

/// Stable color refinement.  Colors are ranks of sorted signatures, so they
/// do not depend on vertex names.
std::vector<int> refine_colors(const std::vector<int>& genus, const Matrix& a) {
  const std::size_t n = genus.size();
  using Signature = std::vector<std::int64_t>;
  auto rank = [](const std::vector<Signature>& sigs) {
    std::vector<Signature> sorted = sigs;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> out(sigs.size());
    for (std::size_t v = 0; v < sigs.size(); ++v) {
      out[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sigs[v]) -
                                sorted.begin());
    }
    return std::make_pair(out, sorted.size());
  };

  std::vector<Signature> sigs(n);
  for (std::size_t v = 0; v < n; ++v) {
    std::int64_t degree = 0;
    for (std::size_t u = 0; u < n; ++u) degree += u == v ? 2 * a[v][u] : a[v][u];
    sigs[v] = {genus[v], degree, a[v][v]};
  }
  auto [colors, count] = rank(sigs);
  for (;;) {
    for (std::size_t v = 0; v < n; ++v) {
      std::vector<std::pair<int, int>> around;
      for (std::size_t u = 0; u < n; ++u) {
        if (u != v && a[v][u] > 0) around.emplace_back(colors[u], a[v][u]);
      }
      std::sort(around.begin(), around.end());
      Signature s{colors[v]};
      for (auto [c, m] : around) {
        s.push_back(c);
        s.push_back(m);
      }
      sigs[v] = std::move(s);
    }
    auto [next, next_count] = rank(sigs);
    if (next_count == count) return colors;
    colors = std::move(next);
    count = next_count;
  }
}

struct CanonicalSearch {
  const std::vector<int>& genus;
  const Matrix& a;
  std::vector<int> slot_color;  // color required at each position
  std::vector<int> color;
  std::vector<std::size_t> twin;  // least vertex of the twin class

  std::vector<std::size_t> order, best_order;
  std::vector<std::int64_t> code, best;
  std::vector<bool> placed;

  // Row written for position p: genus, then a[p][q] for q < p, then loops.
  void row(std::size_t p, std::vector<std::int64_t>& out) const {
    const std::size_t v = order[p];
    out.push_back(genus[v]);
    for (std::size_t q = 0; q < p; ++q) out.push_back(a[v][order[q]]);
    out.push_back(a[v][v]);
  }

  void search(std::size_t p, bool strictly_less) {
    const std::size_t n = genus.size();
    if (p == n) {
      if (best.empty() || strictly_less) {
        best = code;
        best_order = order;
      }
      return;
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (placed[v] || color[v] != slot_color[p]) continue;
      bool duplicate = false;
      for (std::size_t u = 0; u < v && !duplicate; ++u) {
        duplicate = !placed[u] && twin[u] == twin[v];
      }
      if (duplicate) continue;

      const std::size_t mark = code.size();
      order.push_back(v);
      row(p, code);
      bool less = strictly_less;
      bool prune = false;
      if (!best.empty() && !strictly_less) {
        auto cmp = std::lexicographical_compare_three_way(
            code.begin() + mark, code.end(), best.begin() + mark,
            best.begin() + static_cast<std::ptrdiff_t>(code.size()));
        if (cmp > 0) prune = true;
        if (cmp < 0) less = true;
      }
      if (!prune) {
        placed[v] = true;
        search(p + 1, less);
        placed[v] = false;
      }
      order.pop_back();
      code.resize(mark);
    }
  }
};

struct Canonical {
  CanonicalForm form;
  std::vector<std::size_t> order;  // position -> original vertex
};

Canonical canonicalize(const SurfaceGraph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<int> genus(n);
  for (std::size_t v = 0; v < n; ++v) genus[v] = g.vertex(v).genus;
  const Matrix a = adjacency(g);

  CanonicalSearch s{genus, a, {}, refine_colors(genus, a), std::vector<std::size_t>(n), {}, {},
                    {}, {}, std::vector<bool>(n, false)};
  s.slot_color = s.color;
  std::sort(s.slot_color.begin(), s.slot_color.end());
  for (std::size_t v = 0; v < n; ++v) {
    s.twin[v] = v;
    for (std::size_t u = 0; u < v; ++u) {
      if (s.twin[u] != u || s.color[u] != s.color[v] || a[u][u] != a[v][v]) continue;
      bool same = true;
      for (std::size_t x = 0; x < n && same; ++x) {
        if (x != u && x != v) same = a[u][x] == a[v][x];
      }
      if (same) {
        s.twin[v] = u;
        break;
      }
    }
  }
  s.search(0, false);

  Canonical out;
  out.form.push_back(static_cast<std::int64_t>(n));
  out.form.insert(out.form.end(), s.best.begin(), s.best.end());
  out.order = std::move(s.best_order);
  return out;
}

std::string label(char prefix, std::size_t i, std::size_t count) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "%c%0*zu", prefix, count > 10 ? 2 : 1, i);
  return buf;
}

SurfaceGraph graph_from_matrix(const std::vector<int>& genus, const Matrix& a, Mode mode) {
  const std::size_t n = genus.size();
  std::size_t edges = 0;
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q <= p; ++q) edges += static_cast<std::size_t>(a[p][q]);
  }
  SurfaceGraph::Builder b;
  b.mode(mode);
  for (std::size_t p = 0; p < n; ++p) b.vertex(label('v', p, n), genus[p]);
  std::size_t e = 0;
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q <= p; ++q) {
      for (int m = 0; m < a[p][q]; ++m) {
        b.edge(label('e', e++, edges), label('v', q, n), label('v', p, n));
      }
    }
  }
  return b.build();
}

struct VertexType {
  int genus;
  int degree;
  auto operator<=>(const VertexType&) const = default;
};

class Generator {
 public:
  Generator(const EnumSpec& spec, const std::function<bool(const SurfaceGraph&)>& visit)
      : spec_(spec), visit_(visit) {}

  void run() {
    const int max_edges = spec_.effective_max_edges();
    for (int e = 1; e <= max_edges && !stopped_; ++e) {
      for (int v = 1; v <= e + 1 && !stopped_; ++v) {
        const int rank = e - v + 1;
        if (rank > spec_.genus) continue;
        edges_ = e;
        types_.clear();
        choose_types(static_cast<std::size_t>(v), spec_.genus - rank, 2 * e);
      }
    }
  }

 private:
  int min_degree(int genus, std::size_t vertices) const {
    if (vertices == 1) return 0;
    if (spec_.mode == Mode::System && genus == 0) return 3;
    return 1;
  }

  // Nonincreasing sequences of (genus, degree) with the given totals.
  void choose_types(std::size_t vertices, int genus_left, int degree_left) {
    if (stopped_) return;
    const std::size_t placed = types_.size();
    if (placed == vertices) {
      if (genus_left == 0 && degree_left == 0) fill_types();
      return;
    }
    const std::size_t remaining = vertices - placed - 1;
    for (int g = genus_left; g >= 0; --g) {
      for (int d = degree_left; d >= min_degree(g, vertices); --d) {
        const VertexType t{g, d};
        if (!types_.empty() && types_.back() < t) continue;
        if (remaining == 0 && (g != genus_left || d != degree_left)) continue;
        if (static_cast<int>(remaining) > degree_left - d && vertices > 1) continue;
        types_.push_back(t);
        choose_types(vertices, genus_left - g, degree_left - d);
        types_.pop_back();
      }
    }
  }

  void fill_types() {
    const std::size_t n = types_.size();
    matrix_.assign(n, std::vector<int>(n, 0));
    remaining_.resize(n);
    for (std::size_t v = 0; v < n; ++v) remaining_[v] = types_[v].degree;
    fill(0, 0);
  }

  // Slot (i, j) with j >= i; j == i is the loop count of vertex i.
  void fill(std::size_t i, std::size_t j) {
    if (stopped_) return;
    const std::size_t n = types_.size();
    if (i == n) {
      emit();
      return;
    }
    if (j == n) {
      if (remaining_[i] == 0) fill(i + 1, i + 1);
      return;
    }
    if (j == i) {
      for (int loops = remaining_[i] / 2; loops >= 0; --loops) {
        matrix_[i][i] = loops;
        remaining_[i] -= 2 * loops;
        fill(i, i + 1);
        remaining_[i] += 2 * loops;
      }
      matrix_[i][i] = 0;
      return;
    }
    int capacity = 0;
    for (std::size_t k = j; k < n; ++k) capacity += remaining_[k];
    if (capacity < remaining_[i]) return;
    const int most = std::min(remaining_[i], remaining_[j]);
    const int least = j + 1 == n ? remaining_[i] : 0;
    for (int m = most; m >= least; --m) {
      matrix_[i][j] = matrix_[j][i] = m;
      remaining_[i] -= m;
      remaining_[j] -= m;
      fill(i, j + 1);
      remaining_[i] += m;
      remaining_[j] += m;
    }
    matrix_[i][j] = matrix_[j][i] = 0;
  }

  void emit() {
    std::vector<int> genus(types_.size());
    for (std::size_t v = 0; v < types_.size(); ++v) genus[v] = types_[v].genus;
    SurfaceGraph g = graph_from_matrix(genus, matrix_, spec_.mode);
    if (!validate(g).empty()) return;
    if (spec_.dedup) {
      auto c = canonicalize(g);
      if (!seen_.insert(std::move(c.form)).second) return;
      g = canonical_graph(g);
    }
    if (!visit_(g)) stopped_ = true;
  }

  const EnumSpec& spec_;
  const std::function<bool(const SurfaceGraph&)>& visit_;
  int edges_ = 0;
  std::vector<VertexType> types_;
  Matrix matrix_;
  std::vector<int> remaining_;
  std::set<CanonicalForm> seen_;
  bool stopped_ = false;
};

}  // namespace

void check_spec(const EnumSpec& spec) {
  if (spec.genus < 2) {
    throw PreconditionError("enumeration needs genus >= 2, got " + std::to_string(spec.genus));
  }
  const int max_edges = spec.effective_max_edges();
  if (max_edges < 1) throw PreconditionError("max_edges must be positive");
  if (spec.mode == Mode::System && max_edges > 3 * spec.genus - 3) {
    throw PreconditionError("a system of circles on a genus " + std::to_string(spec.genus) +
                            " surface has at most " + std::to_string(3 * spec.genus - 3) +
                            " circles");
  }
}

void for_each_system(const EnumSpec& spec,
                     const std::function<bool(const SurfaceGraph&)>& visit) {
  check_spec(spec);
  Generator(spec, visit).run();
}

std::vector<SurfaceGraph> enumerate_systems(const EnumSpec& spec) {
  std::vector<SurfaceGraph> out;
  for_each_system(spec, [&](const SurfaceGraph& g) {
    out.push_back(g);
    return true;
  });
  return out;
}

CanonicalForm canonical_form(const SurfaceGraph& g) { return canonicalize(g).form; }

SurfaceGraph canonical_graph(const SurfaceGraph& g) {
  const auto c = canonicalize(g);
  const std::size_t n = g.num_vertices();
  const Matrix a = adjacency(g);
  std::vector<int> genus(n);
  Matrix permuted(n, std::vector<int>(n, 0));
  for (std::size_t p = 0; p < n; ++p) {
    genus[p] = g.vertex(c.order[p]).genus;
    for (std::size_t q = 0; q < n; ++q) permuted[p][q] = a[c.order[p]][c.order[q]];
  }
  return graph_from_matrix(genus, permuted, g.mode());
}

bool isomorphic(const SurfaceGraph& a, const SurfaceGraph& b) {
  return a.num_vertices() == b.num_vertices() && a.num_edges() == b.num_edges() &&
         canonical_form(a) == canonical_form(b);
}

}  // namespace multitwist
