// test_topology.cpp -- finite topologies as validated families of bitmask
// subsets

#include <doctest.h>

#include "mvs/topology.hpp"

using namespace mvs;

TEST_CASE("discrete and indiscrete constructions") {
  const auto disc = FiniteTopology::discrete(2);
  CHECK(disc.point_count() == 2);
  CHECK(disc.opens() == std::vector<PointSet>{0, 1, 2, 3});
  CHECK(disc.full_set() == 3);

  const auto indisc = FiniteTopology::indiscrete(3);
  CHECK(indisc.opens() == std::vector<PointSet>{0, 7});
  CHECK(indisc.contains(0));
  CHECK(indisc.contains(7));
  CHECK_FALSE(indisc.contains(1));
}

TEST_CASE("construction sorts and deduplicates the open sets") {
  const FiniteTopology t(2, {3, 0, 1, 1});
  CHECK(t.opens() == std::vector<PointSet>{0, 1, 3});
}

TEST_CASE("construction demands the empty and the full set") {
  CHECK_THROWS_AS(FiniteTopology(2, {0, 1}), SemanticError);
  CHECK_THROWS_AS(FiniteTopology(2, {1, 3}), SemanticError);
}

TEST_CASE("construction demands closure under union and intersection") {
  // {0} and {1} open but their union missing
  CHECK_THROWS_AS(FiniteTopology(3, {0, 1, 2, 7}), SemanticError);
  // {0,1} and {1,2} open but their intersection missing
  CHECK_THROWS_AS(FiniteTopology(3, {0, 3, 6, 7}), SemanticError);
  CHECK_NOTHROW(FiniteTopology(3, {0, 3, 6, 2, 7}));
}

TEST_CASE("construction rejects stray points and oversized point sets") {
  CHECK_THROWS_AS(FiniteTopology(2, {0, 4, 3}), SemanticError);
  CHECK_THROWS_AS(FiniteTopology(17, {}), SemanticError);
}

TEST_CASE("subfamily ordering runs from indiscrete to discrete") {
  const FiniteTopology sierp(2, {0, 1, 3});
  CHECK(FiniteTopology::indiscrete(2).subfamily_of(sierp));
  CHECK(sierp.subfamily_of(FiniteTopology::discrete(2)));
  CHECK_FALSE(sierp.subfamily_of(FiniteTopology::indiscrete(2)));
  CHECK(sierp.subfamily_of(sierp));
}

TEST_CASE("equality compares point count and family") {
  CHECK(FiniteTopology(2, {0, 1, 3}) == FiniteTopology(2, {1, 0, 3}));
  CHECK_FALSE(FiniteTopology::discrete(2) == FiniteTopology::indiscrete(2));
}
