#include <doctest.h>

#include "nilric/catalog.hpp"

using namespace nilric;

namespace {

LieAlgebra catalog_algebra(const std::string& id) { return Catalog::instance().resolve(id).algebra; }

MPoly var(std::size_t n, std::size_t i) { return MPoly::variable(n, i); }

}  // namespace

TEST_CASE("nice basis detection") {
  CHECK(is_nice_basis(catalog_algebra("L3_2"), RatMat::identity(3)).is_nice);
  CHECK(is_nice_basis(Catalog::instance().resolve("m0(8)").algebra, RatMat::identity(8)).is_nice);

  NiceBasisReport bad = is_nice_basis(catalog_algebra("L6_11"), RatMat::identity(6));
  CHECK(!bad.is_nice);
  CHECK(bad.violation.find("share index 2") != std::string::npos);

  // a bracket with two components violates the first condition
  LieAlgebra l614 = catalog_algebra("L6_14");
  RatMat mix = RatMat::identity(6);
  mix(4, 3) = 1;  // f4 = e4 + e5
  NiceBasisReport two = is_nice_basis(l614, mix);
  CHECK(!two.is_nice);

  CHECK_THROWS_AS(is_nice_basis(catalog_algebra("L3_2"), RatMat(3, 3)), ValidationError);
}

TEST_CASE("diagonal Ricci systems") {
  SUBCASE("filiform chain polynomials") {
    CatalogEntry m07 = Catalog::instance().resolve("m0(7)");
    DiagSystem sys = diagonal_ricci_system(m07.algebra, *m07.nice_basis);
    REQUIRE(sys.polys.size() == 4);  // d - l = (n-2) - 1
    // order (x_7, x_3, x_4, x_5, x_6, x_1, x_2); original label i sits at
    // position i-2 for 3 <= i <= 6, x_7 at 1, x_1 at 6, x_2 at 7 (1-based).
    std::size_t n = 7;
    auto pos = [&](std::size_t orig) -> std::size_t {
      if (orig == 7) return 0;
      if (orig == 1) return 5;
      if (orig == 2) return 6;
      return orig - 2;
    };
    for (std::size_t j = 0; j < 4; ++j) {
      std::size_t i = j + 3;  // F_j belongs to x_i, 3 <= i <= 6
      MPoly expected =
          var(n, pos(i)) * var(n, pos(i)) - var(n, pos(i - 1)) * var(n, pos(i + 1));
      CHECK(sys.polys[j] == expected);
      CHECK(sys.divisors[j] == var(n, pos(1)) * var(n, pos(i - 1)));
    }
  }
  SUBCASE("the 7-dimensional example") {
    CatalogEntry e = Catalog::instance().resolve("12457L1");
    DiagSystem sys = diagonal_ricci_system(e.algebra, *e.nice_basis);
    REQUIRE(sys.polys.size() == 4);
    // second polynomial: a4^2 - a3*a6 with basis order (e7,e3,e4,e5,e6,e1,e2)
    MPoly expected = var(7, 2) * var(7, 2) - var(7, 1) * var(7, 4);
    CHECK(sys.polys[1] == expected);
  }
  SUBCASE("two-step systems are empty") {
    CatalogEntry m03 = Catalog::instance().resolve("m0(3)");
    DiagSystem sys = diagonal_ricci_system(m03.algebra, *m03.nice_basis);
    CHECK(sys.polys.empty());
    CHECK(sys.n2 == 0);
  }
  SUBCASE("preconditions are enforced") {
    // L5_3 has Z not contained in [g,g]
    const CatalogEntry* l53 = Catalog::instance().find("L5_3");
    CHECK_THROWS_AS(diagonal_ricci_system(l53->algebra, *l53->nice_basis), ValidationError);
    // wrong ordering: center not first
    CatalogEntry l57 = Catalog::instance().resolve("L5_7");
    CHECK_THROWS_AS(diagonal_ricci_system(l57.algebra, RatMat::identity(5)), ValidationError);
    // not nice at all
    CHECK_THROWS_AS(build_diag_system(catalog_algebra("L6_11"), RatMat::identity(6)),
                    ValidationError);
  }
  SUBCASE("every catalog system is homogeneous with quadratic own variables") {
    for (const CatalogEntry& e : Catalog::instance().entries()) {
      if (!e.nice_basis) continue;
      DiagSystem sys = build_diag_system(e.algebra, *e.nice_basis);
      for (std::size_t j = 0; j < sys.polys.size(); ++j) {
        CHECK(sys.polys[j].is_homogeneous());
        CHECK(sys.polys[j].degree_in(sys.own[j]) == 2);
      }
    }
  }
}

TEST_CASE("single-entry systems split as alpha x^2 - beta with positive parts") {
  // Whenever the reduced block has order one, the polynomial separates into
  // a positive multiple of the squared own variable minus a positive part
  // free of it, so scaling the own variable reaches both strict signs.
  int seen = 0;
  for (const CatalogEntry& e : Catalog::instance().entries()) {
    if (!e.nice_basis) continue;
    DiagSystem sys = build_diag_system(e.algebra, *e.nice_basis);
    if (sys.polys.size() != 1) continue;
    ++seen;
    CAPTURE(e.id);
    std::size_t own = sys.own[0];
    MPoly alpha(sys.basis.rows()), beta(sys.basis.rows());
    for (const auto& [expo, coeff] : sys.polys[0].terms()) {
      CHECK((expo[own] == 2 || expo[own] == 0));
      if (expo[own] == 2) {
        CHECK(sign(coeff) > 0);
        alpha.add_term(expo, coeff);
      } else {
        CHECK(sign(coeff) < 0);
        beta.add_term(expo, coeff);
      }
    }
    CHECK(!alpha.is_zero());
    CHECK(!beta.is_zero());
  }
  CHECK(seen >= 8);  // the order-one catalog systems
}

TEST_CASE("no basis vector is an eigenvector of another's ad") {
  // [f_i, f_j] never has an f_i or f_j component on a nilpotent algebra.
  for (const CatalogEntry& e : Catalog::instance().entries()) {
    if (!e.nice_basis) continue;
    LieAlgebra re = e.algebra.rebased(*e.nice_basis);
    for (std::size_t i = 0; i < re.dim(); ++i)
      for (std::size_t j = 0; j < re.dim(); ++j) {
        CHECK(is_zero(re.structure_constant(i, j, i)));
        CHECK(is_zero(re.structure_constant(i, j, j)));
      }
  }
}

TEST_CASE("seed certification") {
  SUBCASE("published seeds") {
    CatalogEntry e = Catalog::instance().resolve("12457L1");
    DiagSystem sys = diagonal_ricci_system(e.algebra, *e.nice_basis);
    NiceCheckReport rep = check_nice_algebra(sys, *e.nice_seed);
    CHECK(rep.all_zero);
    CHECK(rep.jacobian_regular);

    CatalogEntry m0 = Catalog::instance().resolve("m0(9)");
    DiagSystem fsys = diagonal_ricci_system(m0.algebra, *m0.nice_basis);
    NiceCheckReport frep = check_nice_algebra(fsys, *m0.nice_seed);
    CHECK(frep.all_zero);
    CHECK(frep.jacobian_regular);
  }
  SUBCASE("first-type system of a split-center algebra") {
    const CatalogEntry* l67 = Catalog::instance().find("L6_7");
    DiagSystem sys = build_diag_system(l67->algebra, *l67->nice_basis);
    CHECK(sys.n3 == 1);
    NiceCheckReport rep = check_nice_algebra(sys, *l67->nice_seed);
    CHECK(rep.all_zero);
    CHECK(rep.jacobian_regular);
  }
  SUBCASE("irrational seed in the quadratic field") {
    const CatalogEntry* e = Catalog::instance().find("L6_21(0)");
    REQUIRE(e->published_seed);
    DiagSystem sys = diagonal_ricci_system(e->algebra, *e->nice_basis);
    NiceCheckReport rep = check_nice_algebra(sys, *e->published_seed);
    CHECK(rep.all_zero);
    CHECK(rep.jacobian_regular);
    CHECK(!rep.jacobian_det.is_zero());
  }
  SUBCASE("a wrong seed is reported, a nonpositive one rejected") {
    CatalogEntry e = Catalog::instance().resolve("L6_18");
    DiagSystem sys = diagonal_ricci_system(e.algebra, *e.nice_basis);
    RatVec off(*e.nice_seed);
    off[1] = 2;
    NiceCheckReport rep = check_nice_algebra(sys, off);
    CHECK(!rep.all_zero);
    RatVec neg(*e.nice_seed);
    neg[0] = -1;
    CHECK_THROWS_AS(check_nice_algebra(sys, neg), ValidationError);
  }
}
