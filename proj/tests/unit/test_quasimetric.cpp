// test_quasimetric.cpp -- distance tables into a value set: condition
// checks, balls, induced topologies, comparisons, transforms, and the
// push onto the mutual-order quotient

#include <doctest.h>

#include "mvs/hom.hpp"
#include "mvs/quasimetric.hpp"

#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace mvs;

namespace {

QuasimetricTable canonical_sat3() { return canonical_quasimetric(fixtures::m_sat3()); }

QuasimetricTable all_zero(const FiniteMvs& m, std::size_t n) {
  std::vector<std::string> points;
  for (std::size_t i = 0; i < n; ++i) {
    points.push_back("p" + std::to_string(i));
  }
  return make_quasimetric(points, m, std::vector<std::vector<ElemId>>(n, std::vector<ElemId>(n, 0)));
}

} // namespace

TEST_CASE("condition report on the canonical chain table") {
  const auto q = canonical_sat3();
  const auto check = check_quasimetric(q.mvs(), q.values());
  CHECK(check.f1);
  CHECK(check.f2);
  CHECK_FALSE(check.f3);
  CHECK(check.valid());
  REQUIRE(check.f3_witness.has_value());
  CHECK((*check.f3_witness)[0] == 0);
  CHECK((*check.f3_witness)[1] == 1);
  CHECK_FALSE(q.symmetric());
}

TEST_CASE("the constant zero table satisfies every condition") {
  const auto m = fixtures::m_sat3();
  const auto check = check_quasimetric(m, std::vector<std::vector<ElemId>>(3, {0, 0, 0}));
  CHECK(check.f1);
  CHECK(check.f2);
  CHECK(check.f3);
  CHECK(all_zero(m, 3).symmetric());
}

TEST_CASE("a nonzero diagonal is caught with the smallest point") {
  const auto m = fixtures::m_max2();
  const auto check = check_quasimetric(m, {{1, 1}, {0, 0}});
  CHECK_FALSE(check.f2);
  REQUIRE(check.f2_witness.has_value());
  CHECK(*check.f2_witness == 0);
}

TEST_CASE("a triangle violation is caught with the smallest triple") {
  const auto m = fixtures::m_sat3();
  // going through the middle point is free while the direct hop costs 2
  const auto check = check_quasimetric(m, {{0, 0, 2}, {0, 0, 0}, {0, 0, 0}});
  CHECK_FALSE(check.f1);
  REQUIRE(check.f1_witness.has_value());
  CHECK(*check.f1_witness == std::array<std::size_t, 3>{0, 1, 2});
  CHECK_FALSE(check.valid());
}

TEST_CASE("table construction rejects invalid candidates with the report") {
  const auto m = fixtures::m_sat3();
  try {
    make_quasimetric({"x", "y", "z"}, m, {{0, 0, 2}, {0, 0, 0}, {0, 0, 0}});
    FAIL("expected rejection");
  } catch (const QuasimetricViolation& err) {
    CHECK_FALSE(err.check().f1);
  }
  CHECK_THROWS_AS(make_quasimetric({"x"}, m, {{0, 0}, {0, 0}}), SemanticError);
  CHECK_THROWS_AS(make_quasimetric({"x", "x"}, m, {{0, 0}, {0, 0}}), SemanticError);
}

TEST_CASE("condition checks agree with scans on random tables") {
  gen::Rng rng(0xD1);
  for (int iter = 0; iter < 120; ++iter) {
    const auto m = gen::random_mvs(rng, 4);
    const std::size_t n = gen::pick(rng, 2, 4);
    std::vector<std::vector<ElemId>> values(n, std::vector<ElemId>(n, 0));
    for (auto& row : values) {
      for (auto& v : row) {
        v = static_cast<ElemId>(gen::pick(rng, 0, m.card() - 1));
      }
    }
    const auto check = check_quasimetric(m, values);
    CHECK(check.f1 == oracle::triangle(m, values));
    bool diag = true;
    bool sym = true;
    for (std::size_t x = 0; x < n; ++x) {
      diag = diag && values[x][x] == 0;
      for (std::size_t y = 0; y < n; ++y) {
        sym = sym && values[x][y] == values[y][x];
      }
    }
    CHECK(check.f2 == diag);
    CHECK(check.f3 == sym);
  }
}

TEST_CASE("balls around the canonical chain table") {
  const auto q = canonical_sat3();
  CHECK(open_ball(q, 0, 1) == PointSet{0b001});
  CHECK(open_ball(q, 1, 1) == PointSet{0b011});
  CHECK(open_ball(q, 0, 2) == PointSet{0b111});
  CHECK_THROWS_AS(open_ball(q, 0, 0), NeutralRadius);
}

TEST_CASE("the centre lies in its ball whenever the radius is strictly above zero") {
  gen::Rng rng(0xD2);
  for (int iter = 0; iter < 60; ++iter) {
    const auto m = gen::random_mvs(rng, 4);
    const auto q = gen::random_quasimetric(rng, m, gen::pick(rng, 2, 4));
    for (std::size_t x = 0; x < q.point_count(); ++x) {
      for (ElemId r = 1; r < m.card(); ++r) {
        if (m.lt(0, r)) {
          CHECK((open_ball(q, x, r) & (PointSet{1} << x)) != 0);
        }
      }
    }
  }
}

TEST_CASE("induced opens of the canonical chain table form the nested family") {
  const auto t = induced_topology(canonical_sat3());
  CHECK(t.opens() == std::vector<PointSet>{0, 1, 3, 7});
}

TEST_CASE("the constant zero table induces the indiscrete topology") {
  for (std::size_t n = 2; n <= 4; ++n) {
    CHECK(induced_topology(all_zero(fixtures::m_sat3(), n)) == FiniteTopology::indiscrete(n));
  }
}

TEST_CASE("a constant unit distance induces the discrete topology") {
  const auto m = fixtures::m_sat3();
  std::vector<std::vector<ElemId>> values(3, std::vector<ElemId>(3, 1));
  for (std::size_t x = 0; x < 3; ++x) {
    values[x][x] = 0;
  }
  CHECK(induced_topology(make_quasimetric({"x", "y", "z"}, m, values)) ==
        FiniteTopology::discrete(3));
}

TEST_CASE("induced topologies match the subset scan on random tables") {
  gen::Rng rng(0xD3);
  for (int iter = 0; iter < 60; ++iter) {
    const auto m = gen::random_mvs(rng, 4);
    const std::size_t n = gen::pick(rng, 2, 4);
    const auto q = gen::random_quasimetric(rng, m, n);
    const auto t = induced_topology(q);
    CHECK(t.opens() == oracle::opens(m, n, q.values()));
    CHECK_NOTHROW(FiniteTopology(n, t.opens()));
  }
}

TEST_CASE("balls are directed: below any two radii sits a third") {
  gen::Rng rng(0xD4);
  for (int iter = 0; iter < 50; ++iter) {
    const auto m = gen::random_mvs(rng, 4);
    const auto q = gen::random_quasimetric(rng, m, gen::pick(rng, 2, 4));
    for (std::size_t x = 0; x < q.point_count(); ++x) {
      for (ElemId r1 = 1; r1 < m.card(); ++r1) {
        for (ElemId r2 = 1; r2 < m.card(); ++r2) {
          const PointSet cap = open_ball(q, x, r1) & open_ball(q, x, r2);
          bool found = false;
          for (ElemId r3 = 1; r3 < m.card() && !found; ++r3) {
            found = (open_ball(q, x, r3) & ~cap) == 0;
          }
          CHECK(found);
        }
      }
    }
  }
}

TEST_CASE("the canonical table lists each element along the zero row") {
  const auto q = canonical_sat3();
  CHECK(q.values() == std::vector<std::vector<ElemId>>{{0, 1, 2}, {0, 0, 2}, {0, 0, 0}});
  CHECK(q.points() == std::vector<std::string>{"0", "1", "2"});

  gen::Rng rng(0xD5);
  for (int iter = 0; iter < 30; ++iter) {
    const auto m = gen::random_commutative_mvs(rng, 6);
    const auto qm = canonical_quasimetric(m);
    CHECK(qm.point_count() == m.card());
    for (ElemId j = 0; j < m.card(); ++j) {
      CHECK(qm.value(0, j) == j);
      CHECK(qm.value(j, j) == 0);
    }
    for (ElemId i = 0; i < m.card(); ++i) {
      for (ElemId j = 0; j < m.card(); ++j) {
        CHECK(qm.value(i, j) == (m.leq(j, i) ? ElemId{0} : j));
      }
    }
  }
}

TEST_CASE("the canonical table on the two-cycle value set collapses distances") {
  const auto q = canonical_quasimetric(fixtures::m_ab());
  CHECK(q.values() == std::vector<std::vector<ElemId>>{{0, 1, 2}, {0, 0, 0}, {0, 0, 0}});
}

TEST_CASE("the canonical table requires commutativity") {
  CHECK_THROWS_AS(canonical_quasimetric(fixtures::m_nc4()), NotCommutative);
}

TEST_CASE("fineness and equivalence of tables") {
  const auto q = canonical_sat3();
  const auto zero = all_zero(fixtures::m_sat3(), 3);

  CHECK(is_finer(q, q));
  CHECK(are_equivalent(q, q));

  // the canonical opens include the indiscrete family but not conversely
  const auto zero_named = make_quasimetric(q.points(), q.mvs(),
                                           std::vector<std::vector<ElemId>>(3, {0, 0, 0}));
  CHECK(is_finer(q, zero_named));
  CHECK_FALSE(is_finer(zero_named, q));
  CHECK_FALSE(are_equivalent(q, zero_named));

  CHECK_THROWS_AS(is_finer(q, zero), PointSetMismatch);
  CHECK_THROWS_AS(are_equivalent(q, zero), PointSetMismatch);
}

TEST_CASE("transforming by the identity changes nothing") {
  const auto q = canonical_sat3();
  const auto t = transform(identity_hom(fixtures::m_sat3()), q);
  CHECK(t.values() == q.values());
  CHECK(t.points() == q.points());
}

TEST_CASE("transforming along the absorbing extension keeps the topology") {
  gen::Rng rng(0xD6);
  for (int iter = 0; iter < 30; ++iter) {
    const auto m = gen::random_mvs(rng, 4);
    const auto q = gen::random_quasimetric(rng, m, gen::pick(rng, 2, 4));
    const auto ext = adjoin_infinity(m);
    const auto h = make_hom(m, ext.mvs, ext.inclusion);
    const auto moved = transform(h, q);
    CHECK(induced_topology(moved) == induced_topology(q));
    CHECK(moved.symmetric() == q.symmetric());
  }
}

TEST_CASE("transforming along a fine map can only lose open sets") {
  gen::Rng rng(0xD7);
  int done = 0;
  while (done < 30) {
    const auto m = gen::random_commutative_mvs(rng, 5);
    const auto q = gen::random_quasimetric(rng, m, gen::pick(rng, 2, 4));
    const auto h = canonical_projection(m, mutual_order_congruence(m));
    REQUIRE(is_fine(h).fine);
    const auto moved = transform(h, q);
    CHECK(induced_topology(moved).subfamily_of(induced_topology(q)));
    ++done;
  }
}

TEST_CASE("transforming along an isomorphism keeps the topology") {
  gen::Rng rng(0xD8);
  for (int iter = 0; iter < 30; ++iter) {
    const auto m = gen::random_mvs(rng, 4);
    const auto twin = validate(gen::relabel(rng, m.raw()));
    const auto h = *find_isomorphism(m, twin);
    const auto q = gen::random_quasimetric(rng, m, gen::pick(rng, 2, 4));
    CHECK(induced_topology(transform(h, q)) == induced_topology(q));
  }
}

TEST_CASE("transforms demand a matching value set") {
  const auto q = canonical_sat3();
  CHECK_THROWS_AS(transform(identity_hom(fixtures::m_max2()), q), DomainMismatch);
}

TEST_CASE("pushing the two-cycle table onto its quotient keeps the topology") {
  const auto q = canonical_quasimetric(fixtures::m_ab());
  const auto pushed = quotient_metrize(q);
  CHECK(pushed.table.mvs().card() == 2);
  CHECK(pushed.projection.codomain() == pushed.table.mvs());
  CHECK(induced_topology(pushed.table) == induced_topology(q));
  CHECK(order_class(pushed.table.mvs()).kind == OrderKind::PartiallyOrdered);
}

TEST_CASE("pushing an already antisymmetric table is a relabelling") {
  const auto q = canonical_sat3();
  const auto pushed = quotient_metrize(q);
  CHECK(pushed.table.values() == q.values());
  CHECK(induced_topology(pushed.table) == induced_topology(q));
}

TEST_CASE("pushing onto the quotient requires commutativity") {
  const auto q = gen::random_quasimetric(*new gen::Rng(0xD9), fixtures::m_nc4(), 3);
  CHECK_THROWS_AS(quotient_metrize(q), NotCommutative);
}

TEST_CASE("pushing onto the quotient preserves topology for random tables") {
  gen::Rng rng(0xDA);
  for (int iter = 0; iter < 30; ++iter) {
    const auto m = gen::random_commutative_mvs(rng, 4);
    const auto q = gen::random_quasimetric(rng, m, gen::pick(rng, 2, 4));
    const auto pushed = quotient_metrize(q);
    CHECK(induced_topology(pushed.table) == induced_topology(q));
    CHECK(order_class(pushed.table.mvs()).kind != OrderKind::NotAntisymmetric);
  }
}
