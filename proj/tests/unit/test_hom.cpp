// test_hom.cpp -- homomorphism validation, composition, image and kernel,
// isomorphism search, fineness, and factorisation through the kernel

#include <doctest.h>

#include <algorithm>

#include "mvs/algebra.hpp"
#include "mvs/hom.hpp"

#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace mvs;

namespace {

// 0,1,2 -> 0,1,1: collapses the saturating chain onto the max table.
MvsMap collapse_sat3() {
  return make_hom(fixtures::m_sat3(), fixtures::m_max2(), {0, 1, 1});
}

} // namespace

TEST_CASE("collapsing the chain onto the max table is a homomorphism") {
  const auto h = collapse_sat3();
  CHECK(h.apply(0) == 0);
  CHECK(h.apply(2) == 1);
  CHECK_FALSE(h.bijective());
  CHECK(oracle::hom(h.domain(), h.codomain(), h.mapping()));
}

TEST_CASE("the identity map is a homomorphism") {
  const auto h = identity_hom(fixtures::m_sat3());
  CHECK(h.bijective());
  for (ElemId a = 0; a < 3; ++a) {
    CHECK(h.apply(a) == a);
  }
}

TEST_CASE("sending a nonzero element to zero violates zero-preservation") {
  try {
    make_hom(fixtures::m_max2(), fixtures::m_sat3(), {0, 0});
    FAIL("expected rejection");
  } catch (const H1Violation& err) {
    CHECK(err.witness() == 1);
  }
}

TEST_CASE("a non-additive map is rejected with the smallest pair") {
  // 1+1 saturates to 2 in the codomain but the image of 1+1 stays 1
  try {
    make_hom(fixtures::m_max2(), fixtures::m_sat3(), {0, 1});
    FAIL("expected rejection");
  } catch (const H2Violation& err) {
    CHECK(err.witness()[0] == 1);
    CHECK(err.witness()[1] == 1);
  }
}

TEST_CASE("validation agrees with the scan over every candidate mapping") {
  const auto dom = fixtures::m_ab();
  const auto cod = fixtures::m_sat3();
  const auto valid = gen::all_hom_mappings(dom, cod);

  std::vector<ElemId> f(dom.card(), 0);
  int checked = 0;
  while (true) {
    const bool expect = std::find(valid.begin(), valid.end(), f) != valid.end();
    bool got = true;
    try {
      make_hom(dom, cod, f);
    } catch (const Error&) {
      got = false;
    }
    CHECK(expect == got);
    ++checked;
    std::size_t i = f.size();
    while (i > 0 && f[i - 1] + 1 == cod.card()) {
      f[i - 1] = 0;
      --i;
    }
    if (i == 0) {
      break;
    }
    ++f[i - 1];
  }
  CHECK(checked == 27);
}

TEST_CASE("composition is pointwise and keeps validity") {
  const auto h = collapse_sat3();
  const auto id = identity_hom(fixtures::m_sat3());
  CHECK(compose(h, id).mapping() == h.mapping());

  const auto ext = adjoin_infinity(fixtures::m_max2());
  const auto incl = make_hom(fixtures::m_max2(), ext.mvs, ext.inclusion);
  const auto g = compose(incl, h);
  CHECK(g.apply(2) == 1);
  CHECK(g.domain() == fixtures::m_sat3());
  CHECK(g.codomain() == ext.mvs);
  CHECK(oracle::hom(g.domain(), g.codomain(), g.mapping()));

  CHECK_THROWS_AS(compose(h, incl), DomainMismatch);
}

TEST_CASE("the image is the full carrier for surjections and inclusions embed") {
  CHECK(image(collapse_sat3()) == std::vector<ElemId>{0, 1});
  CHECK(image(identity_hom(fixtures::m_nc4())) == std::vector<ElemId>{0, 1, 2, 3});

  const auto ext = adjoin_infinity(fixtures::m_sat3());
  const auto incl = make_hom(fixtures::m_sat3(), ext.mvs, ext.inclusion);
  CHECK(image(incl) == std::vector<ElemId>{0, 1, 2});
}

TEST_CASE("kernels are congruences with singleton zero class") {
  const auto h = collapse_sat3();
  const auto k = kernel(h);
  const auto classes = k.classes();
  REQUIRE(classes.size() == 2);
  CHECK(classes[0] == std::vector<ElemId>{0});
  CHECK(classes[1] == std::vector<ElemId>{1, 2});

  CHECK(kernel(identity_hom(fixtures::m_sat3())) == ElemRelation::identity(3));
  CHECK_NOTHROW(quotient(h.domain(), k));
}

TEST_CASE("fineness of the fixed maps") {
  CHECK(is_fine(identity_hom(fixtures::m_sat3())).fine);

  const auto ext = adjoin_infinity(fixtures::m_sat3());
  CHECK(is_fine(make_hom(fixtures::m_sat3(), ext.mvs, ext.inclusion)).fine);

  // nothing in the image divides the middle element
  const auto unfine = make_hom(fixtures::m_max2(), fixtures::m_sat3(), {0, 2});
  const auto check = is_fine(unfine);
  CHECK_FALSE(check.fine);
  REQUIRE(check.witness.has_value());
  CHECK(*check.witness == 1);
}

TEST_CASE("the projection onto the mutual-order quotient is fine") {
  const auto m = fixtures::m_ab();
  const auto h = canonical_projection(m, mutual_order_congruence(m));
  CHECK(h.codomain().card() == 2);
  CHECK(is_fine(h).fine);
  CHECK(h.mapping() == std::vector<ElemId>{0, 1, 1});
}

TEST_CASE("projections by the identity relation are bijective") {
  const auto m = fixtures::m_sat3();
  const auto h = canonical_projection(m, ElemRelation::identity(3));
  CHECK(h.bijective());
}

TEST_CASE("projections require a singleton zero class") {
  CHECK_THROWS_AS(canonical_projection(fixtures::m_max2(), ElemRelation::full(2)),
                  NeutralClassNotTrivial);
}

TEST_CASE("isomorphism search finds the collapse target and rejects size mismatch") {
  const auto m = fixtures::m_ab();
  const auto q = quotient(m, mutual_order_congruence(m));
  const auto iso = find_isomorphism(fixtures::m_max2(), q.mvs);
  REQUIRE(iso.has_value());
  CHECK(iso->bijective());

  CHECK_FALSE(find_isomorphism(fixtures::m_max2(), fixtures::m_sat3()).has_value());
}

TEST_CASE("self-isomorphism search returns the identity first") {
  for (const auto& m : {fixtures::m_max2(), fixtures::m_sat3(), fixtures::m_ab()}) {
    const auto iso = find_isomorphism(m, m);
    REQUIRE(iso.has_value());
    CHECK(iso->mapping() == identity_hom(m).mapping());
  }
}

TEST_CASE("isomorphism search succeeds symmetrically") {
  gen::Rng rng(0xC1);
  for (int iter = 0; iter < 30; ++iter) {
    const auto m = gen::random_mvs(rng, 5);
    const auto n = gen::random_mvs(rng, 5);
    CHECK(find_isomorphism(m, n).has_value() == find_isomorphism(n, m).has_value());

    const auto twin = validate(gen::relabel(rng, m.raw()));
    const auto iso = find_isomorphism(m, twin);
    REQUIRE(iso.has_value());
    CHECK(iso->bijective());
    CHECK(oracle::hom(m, twin, iso->mapping()));
  }
}

TEST_CASE("inverting an isomorphism gives its two-sided inverse") {
  const auto id = identity_hom(fixtures::m_sat3());
  CHECK(invert(id).mapping() == id.mapping());

  const auto m = fixtures::m_ab();
  const auto q = quotient(m, mutual_order_congruence(m));
  const auto iso = *find_isomorphism(fixtures::m_max2(), q.mvs);
  const auto back = invert(iso);
  CHECK(invert(back).mapping() == iso.mapping());
  for (ElemId a = 0; a < 2; ++a) {
    CHECK(back.apply(iso.apply(a)) == a);
  }

  CHECK_THROWS_AS(invert(collapse_sat3()), NotBijective);
}

TEST_CASE("every isomorphism and its inverse are fine") {
  gen::Rng rng(0xC2);
  for (int iter = 0; iter < 20; ++iter) {
    const auto m = gen::random_mvs(rng, 5);
    const auto twin = validate(gen::relabel(rng, m.raw()));
    const auto iso = *find_isomorphism(m, twin);
    CHECK(is_fine(iso).fine);
    CHECK(is_fine(invert(iso)).fine);
  }
}

TEST_CASE("factorisation through the kernel on the collapse map") {
  const auto h = collapse_sat3();
  const auto f = first_isomorphism(h);
  CHECK(f.source.mvs.card() == 2);
  CHECK(f.target.embed == std::vector<ElemId>{0, 1});
  CHECK(f.iso.bijective());
  for (ElemId m = 0; m < 3; ++m) {
    CHECK(f.target.embed[f.iso.apply(f.source.class_of[m])] == h.apply(m));
  }
}

TEST_CASE("factorisation of an inclusion keeps the full domain") {
  const auto m = fixtures::m_sat3();
  const auto ext = adjoin_infinity(m);
  const auto incl = make_hom(m, ext.mvs, ext.inclusion);
  const auto f = first_isomorphism(incl);
  CHECK(f.source.mvs.card() == m.card());
  CHECK(f.target.mvs.card() == m.card());
  CHECK(f.iso.bijective());
}

TEST_CASE("morphism properties hold across random homomorphisms") {
  gen::Rng rng(0xC3);
  int done = 0;
  while (done < 120) {
    const auto h = gen::random_hom(rng, 6);
    const auto& dom = h.domain();
    const auto& cod = h.codomain();

    // the image is a sub-value-set of the codomain
    CHECK(is_sub_mvs(cod, image(h)).ok());

    // the kernel is a congruence with singleton zero class
    const auto k = kernel(h);
    CHECK(is_congruence(dom, k).ok());
    CHECK(k.classes()[0] == std::vector<ElemId>{0});
    CHECK_NOTHROW(quotient(dom, k));

    // factorisation reproduces the map pointwise through a bijection
    const auto f = first_isomorphism(h);
    CHECK(f.iso.bijective());
    for (ElemId m = 0; m < dom.card(); ++m) {
      CHECK(f.target.embed[f.iso.apply(f.source.class_of[m])] == h.apply(m));
    }

    // divisibility is preserved, strictly as well
    for (ElemId a = 0; a < dom.card(); ++a) {
      for (ElemId b = 0; b < dom.card(); ++b) {
        if (dom.leq(a, b)) {
          CHECK(cod.leq(h.apply(a), h.apply(b)));
        }
        if (dom.lt(a, b)) {
          CHECK(cod.lt(h.apply(a), h.apply(b)));
        }
      }
    }
    ++done;
  }
}
