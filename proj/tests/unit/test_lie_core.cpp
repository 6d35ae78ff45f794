#include <doctest.h>

#include <random>

#include "nilric/catalog.hpp"
#include "nilric/json_io.hpp"

using namespace nilric;

namespace {

RatVec unit(std::size_t n, std::size_t i) {
  RatVec v(n, Rat(0));
  v[i] = 1;
  return v;
}

LieAlgebra catalog_algebra(const std::string& id) { return Catalog::instance().resolve(id).algebra; }

}  // namespace

TEST_CASE("bracket extends the structure constants bilinearly") {
  LieAlgebra h = catalog_algebra("L3_2");
  CHECK(h.bracket(unit(3, 0), unit(3, 1)) == unit(3, 2));
  CHECK(h.bracket(unit(3, 1), unit(3, 0)) == RatVec{Rat(0), Rat(0), Rat(-1)});

  LieAlgebra l57 = catalog_algebra("L5_7");
  CHECK(l57.bracket(unit(5, 0), unit(5, 3)) == unit(5, 4));

  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> c(-5, 5);
  for (int t = 0; t < 10; ++t) {
    RatVec u(5);
    for (Rat& x : u) x = c(rng);
    CHECK(vec_is_zero(l57.bracket(u, u)));
  }
  CHECK_THROWS_AS(l57.bracket(unit(4, 0), unit(5, 1)), ValidationError);
}

TEST_CASE("validation reports Jacobi and nilpotency") {
  ValidityReport ok = validate(catalog_algebra("L6_14"));
  CHECK(ok.jacobi_ok);
  CHECK(ok.nilpotent);
  CHECK(ok.nilpotency_class == 5);

  ValidityReport ab = validate(abelian_algebra(4));
  CHECK(ab.jacobi_ok);
  CHECK(ab.nilpotency_class == 1);

  // L6_14 with the sign of [e3,e4] flipped breaks the Jacobi identity.
  std::map<std::pair<int, int>, std::map<int, Rat>> brackets;
  brackets[{1, 2}][3] = 1;
  brackets[{1, 3}][4] = 1;
  brackets[{1, 4}][5] = 1;
  brackets[{2, 3}][5] = 1;
  brackets[{2, 5}][6] = 1;
  brackets[{3, 4}][6] = 1;  // should be -1
  ValidityReport bad = validate(6, brackets);
  CHECK(!bad.jacobi_ok);
  REQUIRE(bad.first_failure.has_value());
  CHECK(bad.first_failure->i == 1);
  CHECK(bad.first_failure->j == 2);
  CHECK(bad.first_failure->k == 4);
  CHECK_THROWS_AS(LieAlgebra(6, brackets), ValidationError);
}

TEST_CASE("center, derived ideal and series") {
  LieAlgebra l57 = catalog_algebra("L5_7");
  Subspace z = center(l57);
  REQUIRE(z.dim() == 1);
  CHECK(z.contains(unit(5, 4)));
  Subspace d = derived_ideal(l57);
  CHECK(d.dim() == 3);
  CHECK(d.contains(unit(5, 2)));
  CHECK(d.contains(unit(5, 3)));
  CHECK(d.contains(unit(5, 4)));

  LieAlgebra l619 = catalog_algebra("L6_19(0)");
  CHECK(center(l619).dim() == 2);
  CHECK(derived_ideal(l619).dim() == 3);

  LieAlgebra ab = abelian_algebra(4);
  CHECK(center(ab).dim() == 4);
  CHECK(derived_ideal(ab).dim() == 0);
  CHECK(lower_central_series(ab).size() == 1);

  std::vector<Subspace> series = lower_central_series(catalog_algebra("L6_14"));
  REQUIRE(series.size() == 5);
  CHECK(series[0].dim() == 4);
  CHECK(series[3].dim() == 1);
  CHECK(series[4].dim() == 0);
}

TEST_CASE("dimension profiles") {
  auto profile = [](const std::string& id) { return dimension_profile(catalog_algebra(id)); };
  CHECK(profile("L5_3") == DimensionProfile{5, 2, 2, 1});
  CHECK(profile("L3_2") == DimensionProfile{3, 1, 1, 1});
  CHECK(profile("L6_6") == DimensionProfile{6, 3, 2, 1});

  // non-nilpotent input is rejected
  std::map<std::pair<int, int>, std::map<int, Rat>> solvable;
  solvable[{1, 2}][2] = 1;
  CHECK_THROWS_AS(dimension_profile(LieAlgebra(2, solvable)), ValidationError);
}

TEST_CASE("catalog-wide structural properties") {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> c(-3, 3);
  for (const CatalogEntry& e : Catalog::instance().entries()) {
    const LieAlgebra& a = e.algebra;
    std::size_t n = a.dim();
    // antisymmetry through the public constants
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          CHECK(a.structure_constant(i, j, k) == -a.structure_constant(j, i, k));
    CHECK(validate(a).jacobi_ok);
    CHECK(a.nilpotent());
    DimensionProfile p = dimension_profile(a);
    CHECK(p.n - p.d >= 2);  // derived ideal has codimension at least two
    CHECK(p.ell <= std::min(p.d, p.k));
    // l computed a second way: central vectors inside the derived ideal
    Subspace d = derived_ideal(a);
    RatMat joint(n * n, d.dim());
    for (std::size_t cidx = 0; cidx < d.dim(); ++cidx) {
      RatMat adv = a.ad(d.basis.column(cidx));
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) joint(r * n + s, cidx) = adv(r, s);
    }
    CHECK(d.dim() - rank(joint) == p.ell);
  }
}

TEST_CASE("algebra JSON parsing enforces the input discipline") {
  Json good = Json::parse(R"({"dim":3,"brackets":[{"i":1,"j":2,"rhs":{"3":"1"}}]})");
  LieAlgebra a = algebra_from_json(good);
  CHECK(a.dim() == 3);
  CHECK(a.structure_constant(0, 1, 2) == 1);

  Json swapped = Json::parse(R"({"dim":3,"brackets":[{"i":2,"j":1,"rhs":{"3":"1"}}]})");
  CHECK_THROWS_AS(algebra_from_json(swapped), ValidationError);
  Json dup = Json::parse(
      R"({"dim":3,"brackets":[{"i":1,"j":2,"rhs":{"3":"1"}},{"i":1,"j":2,"rhs":{"3":"2"}}]})");
  CHECK_THROWS_AS(algebra_from_json(dup), ValidationError);
  Json range = Json::parse(R"({"dim":3,"brackets":[{"i":1,"j":2,"rhs":{"4":"1"}}]})");
  CHECK_THROWS_AS(algebra_from_json(range), ValidationError);

  // round trip through serialization
  Json again = algebra_to_json(a);
  CHECK(algebra_from_json(again).structure_constant(0, 1, 2) == 1);
}

TEST_CASE("rebased structure constants") {
  LieAlgebra h = catalog_algebra("L3_2");
  // swap e1 <-> e3
  RatMat p(3, 3);
  p(2, 0) = p(1, 1) = p(0, 2) = 1;
  LieAlgebra re = h.rebased(p);
  // [f2, f3] = [e2, e1] = -e3 = -f1
  CHECK(re.structure_constant(1, 2, 0) == -1);
  CHECK_THROWS_AS(h.rebased(RatMat(3, 3)), ValidationError);
}
