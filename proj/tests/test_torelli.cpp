#include <doctest.h>

#include "multitwist/errors.hpp"
#include "multitwist/families.hpp"
#include "multitwist/homology.hpp"
#include "multitwist/torelli.hpp"
#include "oracles.hpp"

using namespace multitwist;
namespace fam = multitwist::families;

TEST_SUITE("torelli") {
  TEST_CASE("membership examples") {
    const auto bp = fam::bounding_pair(1, 1);
    CHECK(torelli_membership(bp, MultiTwist{{1, -1}}).member);
    CHECK_FALSE(torelli_membership(bp, MultiTwist{{1, 1}}).member);

    const auto theta = fam::theta(1, 1);
    const auto r = torelli_membership(theta, MultiTwist{{1, 1, 1}});
    CHECK_FALSE(r.member);
    REQUIRE(r.violations.size() == 3);
    for (const auto& v : r.violations) {
      CHECK(v.necklace.size() == 1);
      CHECK(v.exponent_sum == 1);
    }

    const auto tree = fam::separating_tree(3);
    CHECK(torelli_membership(tree, MultiTwist{{4, -7, 9}}).member);
    CHECK_THROWS_AS(torelli_membership(tree, MultiTwist{{1}}), PreconditionError);
  }

  TEST_CASE("theta: member iff every exponent vanishes") {
    for (int g1 = 1; g1 <= 2; ++g1) {
      for (int g2 = 1; g2 <= 2; ++g2) {
        const auto g = fam::theta(g1, g2);
        for (int a = -2; a <= 2; ++a) {
          for (int b = -2; b <= 2; ++b) {
            for (int c = -2; c <= 2; ++c) {
              const MultiTwist t{{a, b, c}};
              const bool zero = a == 0 && b == 0 && c == 0;
              CHECK(torelli_membership(g, t).member == zero);
              CHECK(oracle::difference_trivial(g, t) == zero);
            }
          }
        }
      }
    }
  }

  TEST_CASE("general mode is normalized first") {
    const auto g = SurfaceGraph::Builder()
                       .mode(Mode::General)
                       .vertex("A", 1)
                       .vertex("B", 1)
                       .vertex("M", 0)
                       .edge("C", "A", "M")
                       .edge("Cp", "M", "B")
                       .edge("D", "A", "B")
                       .build();
    const auto member = torelli_membership(g, MultiTwist::from_names(g, {{"C", 2}, {"Cp", -1}, {"D", -1}}));
    CHECK(member.member);
    CHECK(member.graph.num_edges() == 2);
    const auto not_member = torelli_membership(g, MultiTwist::from_names(g, {{"C", 2}, {"Cp", -2}, {"D", -1}}));
    CHECK_FALSE(not_member.member);
    REQUIRE(not_member.violations.size() == 1);
    CHECK(not_member.violations[0].exponent_sum == -1);
    CHECK(oracle::difference_trivial(g, MultiTwist::from_names(g, {{"C", 2}, {"Cp", -1}, {"D", -1}})));
  }

  TEST_CASE("rank and basis") {
    for (int g = 3; g <= 8; ++g) {
      CHECK(multitwist_subgroup_rank(fam::separating_tree(g)).rank == 2 * g - 3);
      CHECK(multitwist_subgroup_rank(fam::pants_cycle_with_handles(g)).rank == 2 * g - 3);
      CHECK(multitwist_subgroup_rank(fam::torus_cycle(g)).rank == g - 2);
    }
    const auto theta = multitwist_subgroup_rank(fam::theta(1, 1));
    CHECK(theta.rank == 0);
    CHECK(theta.basis.empty());

    const auto bp = fam::bounding_pair(1, 1);
    const auto r = multitwist_subgroup_rank(bp);
    REQUIRE(r.basis.size() == 1);
    CHECK(r.basis[0].exponents == std::vector<std::int64_t>{-1, 1});
  }

  TEST_CASE("d invariant") {
    const auto cycle = fam::pants_cycle_with_handles(4);
    CHECK(d_invariant(cycle, cycle.vertex_index("P01")) == 0);
    CHECK(d_invariant(cycle, cycle.vertex_index("T01")) == 0);
    const auto tori = fam::torus_cycle(4);
    CHECK(d_invariant(tori, 0) == 1);
    const auto annulus = SurfaceGraph::Builder()
                             .mode(Mode::General)
                             .vertex("A", 1).vertex("M", 0)
                             .edge("C", "A", "M").edge("D", "M", "A")
                             .build();
    CHECK_THROWS_AS(d_invariant(annulus, annulus.vertex_index("M")), PreconditionError);
    const auto closed = SurfaceGraph::Builder().vertex("S", 2).build();
    CHECK_THROWS_AS(d_invariant(closed, 0), PreconditionError);
  }

  TEST_CASE("system invariants") {
    for (int g = 3; g <= 6; ++g) {
      auto inv = system_invariants(fam::pants_cycle_with_handles(g));
      CHECK(inv.total_defect == 0);
      CHECK(inv.irregular_pieces == 0);
      inv = system_invariants(fam::torus_cycle(g));
      CHECK(inv.total_defect == g - 1);
      CHECK(inv.irregular_pieces == g - 1);
    }
    const auto theta = fam::theta(1, 1);
    const auto inv = system_invariants(theta);
    CHECK(inv.total_defect == 4);
    CHECK(inv.irregular_pieces == 2);
    CHECK(std::pair{inv.total_defect, inv.irregular_pieces} == oracle::defect_sums(theta));
  }

  TEST_CASE("rank bounds") {
    for (int g = 3; g <= 7; ++g) {
      const auto cycle = rank_upper_bounds(fam::pants_cycle_with_handles(g));
      CHECK(cycle.multitwist == 2 * g - 3);
      CHECK(cycle.generic == 2 * g - 3);
      CHECK_FALSE(cycle.conditional_2g4);

      const auto tori = rank_upper_bounds(fam::torus_cycle(g));
      CHECK(tori.multitwist == g - 2);
      CHECK(tori.refined == 2 * g - 3);
    }
    const auto tetra = rank_upper_bounds(fam::tetrahedral_pants());
    REQUIRE(tetra.conditional_2g4);
    CHECK(*tetra.conditional_2g4 == 2);
    CHECK(tetra.embedded_piece == "P01");

    // A genus-2 piece with one boundary circle is exceptional.
    const auto handle = SurfaceGraph::Builder().vertex("A", 2).vertex("B", 1).edge("C", "A", "B").build();
    const auto hb = rank_upper_bounds(handle);
    CHECK(hb.exceptional_piece == "A");
    CHECK(hb.conditional_2g4 == 2);

    CHECK_THROWS_AS(rank_upper_bounds(fam::torus_loop()), PreconditionError);
  }

  TEST_CASE("abelian rank bound") {
    for (int g = 3; g <= 6; ++g) {
      CHECK(abelian_rank_bound(fam::pants_cycle_with_handles(g), {}) == 2 * g - 3);
      Decoration all;
      const auto tori = fam::torus_cycle(g);
      for (const auto& v : tori.vertices()) all.marked.insert(v.name);
      CHECK(abelian_rank_bound(tori, all) == 2 * g - 3);
    }
    const auto cycle = fam::pants_cycle_with_handles(4);
    CHECK_THROWS_WITH_AS(
        abelian_rank_bound(cycle, {{"P01"}}),
        "invalid decoration at 'P01': no pseudo-Anosov class on a sphere with 3 holes",
        PreconditionError);
    CHECK_THROWS_AS(abelian_rank_bound(cycle, {{"T01"}}), PreconditionError);
    CHECK(validate_decoration(cycle, {{"T01"}, false}).empty());
    CHECK(validate_decoration(cycle, {{"X"}}).front().rule == "unknown vertex");
  }

  TEST_CASE("necklace lower bounds") {
    const auto two_loops = necklace_lower_bound_check(fam::double_loop_sphere());
    CHECK(two_loops.planar_applies);
    CHECK(two_loops.necklaces == 2);
    CHECK(two_loops.planar_margin == 0);
    CHECK_FALSE(two_loops.embedded_applies);

    const auto cycle = necklace_lower_bound_check(fam::pants_cycle_with_handles(5));
    CHECK_FALSE(cycle.planar_applies);
    CHECK(cycle.holds());

    const auto tetra = necklace_lower_bound_check(fam::tetrahedral_pants());
    CHECK(tetra.embedded_applies);
    CHECK(tetra.necklaces == 6);
    CHECK(tetra.embedded_margin == 2);
    CHECK(tetra.holds());
  }
}
