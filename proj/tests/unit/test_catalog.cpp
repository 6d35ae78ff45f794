#include <doctest.h>

#include "nilric/catalog.hpp"

using namespace nilric;

TEST_CASE("every catalog entry validates") {
  const Catalog& cat = Catalog::instance();
  CHECK(cat.entries().size() == 45);
  for (const CatalogEntry& e : cat.entries()) {
    CAPTURE(e.id);
    ValidityReport rep = validate(e.algebra);
    CHECK(rep.jacobi_ok);
    CHECK(rep.nilpotent);
    CHECK(!e.expected_signatures.empty());
  }
}

TEST_CASE("stored signature sets equal the live computation") {
  for (const CatalogEntry& e : Catalog::instance().entries()) {
    CAPTURE(e.id);
    CHECK(sign_set(dimension_profile(e.algebra)).triples == e.expected_signatures);
  }
}

TEST_CASE("stored bases are nice and stored seeds certify") {
  for (const CatalogEntry& e : Catalog::instance().entries()) {
    if (!e.nice_basis) continue;
    CAPTURE(e.id);
    CHECK(is_nice_basis(e.algebra, *e.nice_basis).is_nice);
    DiagSystem sys = build_diag_system(e.algebra, *e.nice_basis);
    if (e.nice_seed) {
      NiceCheckReport rep = check_nice_algebra(sys, *e.nice_seed);
      CHECK(rep.all_zero);
      CHECK(rep.jacobian_regular);
    }
    if (e.published_seed) {
      NiceCheckReport rep = check_nice_algebra(sys, *e.published_seed);
      CHECK(rep.all_zero);
      CHECK(rep.jacobian_regular);
    }
  }
}

TEST_CASE("seed-carrying entries of the inverse-function list") {
  // thirteen items in the published list; the two nonzero-parameter families
  // split into a catalog entry per parameter value
  const char* ids[] = {"L5_6",      "L5_7",     "L6_12",     "L6_13",    "L6_14",
                       "L6_15",     "L6_16",    "L6_17",     "L6_18",    "L6_19(-1)",
                       "L6_19(1)",  "L6_20",    "L6_21(-1)", "L6_21(0)", "L6_21(1)"};
  for (const char* id : ids) {
    CAPTURE(id);
    const CatalogEntry* e = Catalog::instance().find(id);
    REQUIRE(e);
    REQUIRE(e->nice_basis);
    REQUIRE(e->nice_seed);
    DiagSystem sys = diagonal_ricci_system(e->algebra, *e->nice_basis);
    CHECK(check_nice_algebra(sys, *e->nice_seed).passes());
  }
}

TEST_CASE("lookups") {
  const Catalog& cat = Catalog::instance();
  const CatalogEntry* l613 = cat.find("L6_13");
  REQUIRE(l613);
  CHECK(l613->algebra.structure_constant(2, 3, 5) == 1);  // [e3,e4] = e6

  CatalogEntry l1 = cat.resolve("12457L1");
  CHECK(l1.algebra.dim() == 7);
  CHECK(l1.algebra.structure_constant(2, 4, 6) == -1);  // [e3,e5] = -e7

  CHECK_THROWS_AS(cat.resolve("L9_99"), ValidationError);
  CHECK_THROWS_AS(cat.resolve("m0(2)"), ValidationError);

  CHECK(cat.expand_family("L6_19").size() == 3);
  CHECK(cat.expand_family("L6_22").size() == 3);
}

TEST_CASE("the filiform family") {
  CatalogEntry m04 = Catalog::instance().resolve("m0(4)");
  const CatalogEntry* l43 = Catalog::instance().find("L4_3");
  REQUIRE(l43);
  CHECK(m04.algebra.stored_brackets() == l43->algebra.stored_brackets());

  CatalogEntry m09 = Catalog::instance().resolve("m0(9)");
  CHECK(m09.algebra.dim() == 9);
  CHECK(m09.algebra.nilpotency_class() == 8);
  CHECK(m09.expected_signatures.size() == 28);  // compositions of 6 into three parts
  DiagSystem sys = diagonal_ricci_system(m09.algebra, *m09.nice_basis);
  CHECK(sys.polys.size() == 6);
}
