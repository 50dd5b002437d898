#include "multitwist/families.hpp"

#include <cstdio>
#include <string>

namespace multitwist::families {

namespace {

std::string numbered(char prefix, int i) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%c%02d", prefix, i);
  return buf;
}

void require_genus(int g) {
  if (g < 2) throw PreconditionError("family needs genus >= 2, got " + std::to_string(g));
}

}  // namespace

SurfaceGraph theta(int g1, int g2) {
  return SurfaceGraph::Builder()
      .vertex("Q1", g1)
      .vertex("Q2", g2)
      .edge("C", "Q1", "Q2")
      .edge("D", "Q1", "Q2")
      .edge("E", "Q1", "Q2")
      .build();
}

SurfaceGraph bounding_pair(int g1, int g2) {
  return SurfaceGraph::Builder()
      .vertex("Q1", g1)
      .vertex("Q2", g2)
      .edge("C", "Q1", "Q2")
      .edge("D", "Q1", "Q2")
      .build();
}

SurfaceGraph torus_loop() {
  return SurfaceGraph::Builder().vertex("Q", 0).edge("C", "Q", "Q").build();
}

SurfaceGraph separating_tree(int g) {
  require_genus(g);
  SurfaceGraph::Builder b;
  for (int i = 1; i <= g; ++i) b.vertex(numbered('T', i), 1);
  if (g == 2) {
    b.edge(numbered('c', 1), numbered('T', 1), numbered('T', 2));
    return b.build();
  }
  const int pants = g - 2;
  std::vector<int> degree(pants + 1, 0);
  int next_edge = 1;
  for (int i = 1; i <= pants; ++i) b.vertex(numbered('P', i), 0);
  for (int i = 1; i < pants; ++i) {
    b.edge(numbered('c', next_edge++), numbered('P', i), numbered('P', i + 1));
    ++degree[i];
    ++degree[i + 1];
  }
  int leaf = 1;
  for (int i = 1; i <= pants; ++i) {
    for (; degree[i] < 3; ++degree[i]) {
      b.edge(numbered('c', next_edge++), numbered('P', i), numbered('T', leaf++));
    }
  }
  return b.build();
}

SurfaceGraph pants_cycle_with_handles(int g) {
  require_genus(g);
  SurfaceGraph::Builder b;
  const int n = g - 1;
  for (int i = 1; i <= n; ++i) {
    b.vertex(numbered('P', i), 0);
    b.vertex(numbered('T', i), 1);
    b.edge(numbered('n', i), numbered('P', i), numbered('P', i % n + 1));
    b.edge(numbered('s', i), numbered('P', i), numbered('T', i));
  }
  return b.build();
}

SurfaceGraph torus_cycle(int g) {
  require_genus(g);
  SurfaceGraph::Builder b;
  const int n = g - 1;
  for (int i = 1; i <= n; ++i) {
    b.vertex(numbered('T', i), 1);
    b.edge(numbered('n', i), numbered('T', i), numbered('T', i % n + 1));
  }
  return b.build();
}

SurfaceGraph tetrahedral_pants() {
  SurfaceGraph::Builder b;
  for (int i = 1; i <= 4; ++i) b.vertex(numbered('P', i), 0);
  int e = 1;
  for (int i = 1; i <= 4; ++i) {
    for (int j = i + 1; j <= 4; ++j) {
      b.edge(numbered('c', e++), numbered('P', i), numbered('P', j));
    }
  }
  return b.build();
}

SurfaceGraph double_loop_sphere() {
  return SurfaceGraph::Builder()
      .vertex("Q", 0)
      .edge("A", "Q", "Q")
      .edge("B", "Q", "Q")
      .build();
}

}  // namespace multitwist::families
