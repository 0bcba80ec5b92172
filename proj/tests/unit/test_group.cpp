#include <doctest.h>

#include <algorithm>
#include <random>

#include "cmred/catalog.hpp"
#include "cmred/group.hpp"
#include "oracles.hpp"

using namespace cmred;

namespace {

const FiniteGroup& g40() {
  static const FiniteGroup group = build_group("builtin:G40_12").group;
  return group;
}

const Permutation& g40_iota() {
  static const Permutation iota = central_involutions(g40()).at(0);
  return iota;
}

std::vector<FiniteGroup> catalog_groups_upto_48() {
  static const char* const specs[] = {
      "cyclic:2",     "cyclic:4",   "cyclic:6",
      "dihedral:8",   "dihedral:12", "product:alternating:4,cyclic:2",
      "wreath-c2:symmetric:3",
  };
  std::vector<FiniteGroup> out;
  for (const char* spec : specs) out.push_back(build_group(spec).group);
  return out;
}

}  // namespace

TEST_CASE("closure of the S3 generators") {
  const FiniteGroup s3 = FiniteGroup::generate(parse_cycles("deg=3;(1,2);(1,2,3)"));
  CHECK(s3.order() == 6);
  CHECK(central_involutions(s3).empty());
}

TEST_CASE("trivial closures") {
  CHECK(FiniteGroup::trivial(4).order() == 1);
  CHECK(FiniteGroup::generate(3, {Permutation::identity(3)}).order() == 1);
}

TEST_CASE("order cap raises a capacity error") {
  CHECK_THROWS_AS(FiniteGroup::generate(parse_cycles("deg=6;(1,2);(1,2,3,4,5,6)"), 100),
                  capacity_error);
}

TEST_CASE("deterministic element ordering") {
  const FiniteGroup a = FiniteGroup::generate(parse_cycles("deg=4;(1,2);(1,2,3,4)"));
  const FiniteGroup b = FiniteGroup::generate(parse_cycles("deg=4;(1,2);(1,2,3,4)"));
  REQUIRE(a.order() == 24);
  CHECK(a.elements() == b.elements());
  CHECK(std::is_sorted(a.elements().begin(), a.elements().end()));
}

TEST_CASE("the worked-example group") {
  CHECK(g40().order() == 40);
  CHECK(g40().degree() == 10);
  const auto invs = central_involutions(g40());
  REQUIRE(invs.size() == 1);
  CHECK(invs[0].cycle_string() == "(2,7)");
  // iota composed with any order-5 element has order 10
  for (const Permutation& x : g40().elements())
    if (x.order() == 5) {
      CHECK((invs[0] * x).order() == 10);
      break;
    }
}

TEST_CASE("central involution soundness across the catalog") {
  for (const FiniteGroup& g : catalog_groups_upto_48()) {
    for (const Permutation& iota : central_involutions(g)) {
      CHECK(!iota.is_identity());
      CHECK((iota * iota).is_identity());
      for (const Permutation& x : g.elements()) CHECK(iota * x == x * iota);
    }
    CHECK(!central_involutions(g).empty());  // every catalog CM group has one
  }
}

TEST_CASE("center of an abelian group is the whole group") {
  const FiniteGroup c6 = build_group("cyclic:6").group;
  CHECK(center(c6).order() == 6);
}

TEST_CASE("subgroup search: worked example has ten candidates") {
  const auto deltas = subgroups_of_order(g40(), 4, g40_iota());
  CHECK(deltas.size() == 10);
  for (const FiniteGroup& d : deltas) {
    CHECK(d.order() == 4);
    CHECK(!d.contains(g40_iota()));
    CHECK(d.is_subgroup_of(g40()));
  }
}

TEST_CASE("subgroup search edge cases") {
  const FiniteGroup d4 = build_group("dihedral:8").group;
  const auto invs = central_involutions(d4);
  REQUIRE(invs.size() == 1);
  // four reflections generate the order-2 subgroups avoiding the center
  CHECK(subgroups_of_order(d4, 2, invs[0]).size() == 4);
  // m = 1 keeps only the trivial subgroup
  const auto trivial = subgroups_of_order(d4, 1, invs[0]);
  REQUIRE(trivial.size() == 1);
  CHECK(trivial[0].order() == 1);
  // m = |G| cannot avoid an interior element
  CHECK(subgroups_of_order(d4, 8, invs[0]).empty());
  CHECK_THROWS_AS(subgroups_of_order(d4, 3, invs[0]), invalid_input);
  CHECK_THROWS_AS(subgroups_of_order(g40(), 4, g40_iota(), 30), capacity_error);
}

TEST_CASE("subgroup search completeness against the small-subset oracle") {
  for (const FiniteGroup& g : catalog_groups_upto_48()) {
    for (std::size_t m = 1; m <= g.order(); ++m) {
      if (g.order() % m != 0) continue;
      const auto found = subgroups_of_order(g, m);
      const auto expected = oracles::subgroups_by_small_subsets(g, m);
      REQUIRE(found.size() == expected.size());
      for (std::size_t i = 0; i < found.size(); ++i)
        CHECK(found[i].elements() == expected[i].elements());
      // Lagrange on everything returned
      for (const FiniteGroup& h : found) CHECK(g.order() % h.order() == 0);
    }
  }
}

TEST_CASE("join of the involution and the named subgroup") {
  const FiniteGroup delta = FiniteGroup::generate(parse_cycles("deg=10;(3,4,8,9)"));
  const FiniteGroup h0 = join_subgroup(g40(), g40_iota(), delta);
  CHECK(h0.order() == 8);
  // joining an element already inside is idempotent
  const FiniteGroup again =
      join_subgroup(g40(), delta.generators()[0], delta);
  CHECK(again.order() == delta.order());
  // join with the trivial subgroup is the cyclic group of the element
  const FiniteGroup from_trivial =
      join_subgroup(g40(), g40_iota(), FiniteGroup::trivial(10));
  CHECK(from_trivial.order() == 2);
  CHECK_THROWS_AS(join_subgroup(delta, g40_iota(), delta), invalid_input);
}

TEST_CASE("left cosets of the worked example") {
  const FiniteGroup delta = FiniteGroup::generate(parse_cycles("deg=10;(3,4,8,9)"));
  const CosetSpace space(g40(), delta);
  CHECK(space.index() == 10);
  // partition: every element maps to exactly one coset
  std::vector<std::size_t> counts(space.index(), 0);
  for (const Permutation& x : g40().elements()) ++counts[space.coset_of(x)];
  for (std::size_t c : counts) CHECK(c == delta.order());
  // representatives are the least members, listed in order
  for (std::size_t i = 0; i + 1 < space.index(); ++i)
    CHECK(space.cosets()[i].representative < space.cosets()[i + 1].representative);
  CHECK_THROWS_AS(CosetSpace(delta, g40()), invalid_input);
}

TEST_CASE("whole group gives one coset and Lagrange holds") {
  const FiniteGroup d6 = build_group("dihedral:12").group;
  CHECK(CosetSpace(d6, d6).index() == 1);
  for (std::size_t m : {1u, 2u, 3u, 4u, 6u, 12u}) {
    for (const FiniteGroup& h : subgroups_of_order(d6, m))
      CHECK(CosetSpace(d6, h).index() * h.order() == d6.order());
  }
}

TEST_CASE("orbit counts against the double-coset partition oracle") {
  for (const FiniteGroup& g : catalog_groups_upto_48()) {
    for (std::size_t m = 1; m < g.order(); ++m) {
      if (g.order() % m != 0) continue;
      for (const FiniteGroup& h : subgroups_of_order(g, m)) {
        const CosetSpace space(g, h);
        // identity actor: orbit count equals the index
        CHECK(orbit_count(space, CosetAction::LeftMultiplication,
                          Permutation::identity(g.degree())) == space.index());
        for (const Permutation& sigma : g.elements()) {
          const std::size_t orbits =
              orbit_count(space, CosetAction::LeftMultiplication, sigma);
          CHECK(orbits == oracles::double_coset_count(g, h, sigma));
        }
      }
    }
  }
}

TEST_CASE("the worked example has an inert element") {
  const FiniteGroup delta = FiniteGroup::generate(parse_cycles("deg=10;(3,4,8,9)"));
  const FiniteGroup h0 = join_subgroup(g40(), g40_iota(), delta);
  const CosetSpace on_delta(g40(), delta);
  const CosetSpace on_h0(g40(), h0);
  bool found = false;
  for (const Permutation& sigma : g40().elements())
    if (orbit_count(on_delta, CosetAction::LeftMultiplication, sigma) == 1 &&
        orbit_count(on_h0, CosetAction::LeftMultiplication, sigma) == 1)
      found = true;
  CHECK(found);
}

TEST_CASE("right action validity") {
  const FiniteGroup d4 = build_group("dihedral:8").group;
  const auto reflections = subgroups_of_order(d4, 2, central_involutions(d4)[0]);
  REQUIRE(!reflections.empty());
  const CosetSpace space(d4, reflections[0]);
  // central actor is fine
  CHECK_NOTHROW(orbit_count(space, CosetAction::RightMultiplication,
                            central_involutions(d4)[0]));
  // a reflection outside the subgroup neither is central nor normalizes it
  bool rejected = false;
  for (const Permutation& x : d4.elements()) {
    if (x.order() != 2 || reflections[0].contains(x)) continue;
    try {
      orbit_count(space, CosetAction::RightMultiplication, x);
    } catch (const invalid_input&) {
      rejected = true;
    }
  }
  CHECK(rejected);
}

TEST_CASE("overgroups") {
  const FiniteGroup c4 = build_group("cyclic:4").group;
  CHECK(overgroups(c4, FiniteGroup::trivial(4)).size() == 3);
  CHECK(overgroups(c4, c4).size() == 1);

  const FiniteGroup delta = FiniteGroup::generate(parse_cycles("deg=10;(3,4,8,9)"));
  const auto over = overgroups(g40(), delta);
  CHECK(over.size() == 4);  // delta, H0, the order-20 subgroup, G itself
  // cross-check against a full subgroup scan restricted to supersets
  std::size_t expected = 0;
  for (std::size_t m = 1; m <= 40; ++m) {
    if (40 % m != 0) continue;
    for (const FiniteGroup& h : subgroups_of_order(g40(), m))
      if (delta.is_subgroup_of(h)) ++expected;
  }
  CHECK(over.size() == expected);
}
