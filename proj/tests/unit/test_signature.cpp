#include <doctest.h>

#include <random>

#include "nilric/catalog.hpp"

using namespace nilric;

namespace {

RatVec unit(std::size_t n, std::size_t i) {
  RatVec v(n, Rat(0));
  v[i] = 1;
  return v;
}

Metric random_metric(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> c(-3, 3);
  RatMat p(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p(i, j) = c(rng);
  return Metric::from_gram(p.transpose() * p + RatMat::identity(n));
}

LieAlgebra catalog_algebra(const std::string& id) { return Catalog::instance().resolve(id).algebra; }

}  // namespace

TEST_CASE("characteristic splitting on pinned cases") {
  LieAlgebra h = catalog_algebra("L3_2");
  Metric id3 = Metric::from_diagonal(RatVec(3, Rat(1)));
  CharacteristicSplitting s = characteristic_splitting(h, id3);
  CHECK(s.n1() == 1);
  CHECK(s.n2() == 0);
  CHECK(s.n3() == 0);
  CHECK(s.n4() == 2);
  CHECK(s.k_plus.contains(unit(3, 2)));

  LieAlgebra ab = abelian_algebra(4);
  Metric id4 = Metric::from_diagonal(RatVec(4, Rat(1)));
  CharacteristicSplitting sa = characteristic_splitting(ab, id4);
  CHECK(sa.n3() == 4);
  CHECK(sa.n1() + sa.n2() + sa.n4() == 0);

  LieAlgebra l53 = catalog_algebra("L5_3");
  Metric id5 = Metric::from_diagonal(RatVec(5, Rat(1)));
  CharacteristicSplitting s5 = characteristic_splitting(l53, id5);
  CHECK(s5.n1() == 1);
  CHECK(s5.n2() == 1);
  CHECK(s5.n3() == 1);
  CHECK(s5.n4() == 2);
  CHECK(s5.k_plus.contains(unit(5, 3)));
  CHECK(s5.k_minus.contains(unit(5, 4)));
}

TEST_CASE("ricci_signature on pinned cases") {
  LieAlgebra h = catalog_algebra("L3_2");
  Metric id3 = Metric::from_diagonal(RatVec(3, Rat(1)));
  RicciSignatureResult r = ricci_signature(h, id3);
  CHECK(r.signature == SignatureTriple{2, 0, 1});
  CHECK(r.direct == r.signature);

  LieAlgebra ab = abelian_algebra(5);
  Metric id5 = Metric::from_diagonal(RatVec(5, Rat(1)));
  CHECK(ricci_signature(ab, id5).signature == SignatureTriple{0, 5, 0});

  LieAlgebra l611 = catalog_algebra("L6_11");
  Metric id6 = Metric::from_diagonal(RatVec(6, Rat(1)));
  RicciSignatureResult r11 = ricci_signature(l611, id6);
  CHECK(r11.signature == SignatureTriple{3, 2, 1});
  CHECK(r11.reduced.blocks.R.rows() == 2);
  CHECK(r11.reduced.blocks.R.is_zero());
}

TEST_CASE("signature underestimate") {
  LieAlgebra l53 = catalog_algebra("L5_3");
  Metric id5 = Metric::from_diagonal(RatVec(5, Rat(1)));
  CHECK(signature_underestimate(l53, id5) == SignatureTriple{2, 1, 1});

  LieAlgebra ab = abelian_algebra(3);
  Metric id3 = Metric::from_diagonal(RatVec(3, Rat(1)));
  CHECK(signature_underestimate(ab, id3) == SignatureTriple{0, 3, 0});

  // Z inside [g,g]: (n - d, 0, dim Z) for any metric
  std::mt19937_64 rng(11);
  LieAlgebra l57 = catalog_algebra("L5_7");
  Metric g = random_metric(rng, 5);
  CHECK(signature_underestimate(l57, g) == SignatureTriple{2, 0, 1});
}

TEST_CASE("admissible signature sets") {
  CHECK(sign_set(dimension_profile(catalog_algebra("L3_2"))).triples ==
        std::set<SignatureTriple>{{2, 0, 1}});
  CHECK(sign_set(dimension_profile(catalog_algebra("L5_3"))).triples ==
        std::set<SignatureTriple>{{2, 1, 2}, {2, 2, 1}, {3, 0, 2}, {3, 1, 1}, {4, 0, 1}});
  // two-step profile gives the singleton (n-k, k-d, d)
  for (const char* idstr : {"L5_4", "L6_22(1)", "L6_26"}) {
    DimensionProfile p = dimension_profile(catalog_algebra(idstr));
    CHECK(p.d == p.ell);
    auto s = sign_set(p).triples;
    REQUIRE(s.size() == 1);
    CHECK(*s.begin() == SignatureTriple{static_cast<int>(p.n - p.k),
                                        static_cast<int>(p.k - p.d), static_cast<int>(p.d)});
  }
  // filiform: (2+m-, m0, 1+m+) over compositions of n-3
  DimensionProfile fp = dimension_profile(Catalog::instance().resolve("m0(7)").algebra);
  auto fs = sign_set(fp).triples;
  CHECK(fs.size() == 15);  // compositions of 4 into three parts
  for (const SignatureTriple& t : fs) {
    CHECK(t.neg >= 2);
    CHECK(t.pos >= 1);
    CHECK(t.total() == 7);
  }
  // cardinality never exceeds (#p values) x (#compositions)
  for (const CatalogEntry& e : Catalog::instance().entries()) {
    DimensionProfile p = dimension_profile(e.algebra);
    std::size_t pvals = (p.k - p.ell) - (p.k > p.d ? p.k - p.d : 0) + 1;
    std::size_t comps = (p.d - p.ell + 1) * (p.d - p.ell + 2) / 2;
    CHECK(sign_set(p).triples.size() <= pvals * comps);
  }
}

TEST_CASE("membership and the block pattern on random metrics") {
  std::mt19937_64 rng(12);
  for (const char* idstr : {"L4_2", "L5_5", "L5_8", "L6_14", "L6_22(-1)", "L6_25"}) {
    LieAlgebra a = catalog_algebra(idstr);
    DimensionProfile p = dimension_profile(a);
    for (int t = 0; t < 4; ++t) {
      Metric g = random_metric(rng, a.dim());
      MembershipReport rep = check_membership(a, g);
      CHECK(rep.member);
      CHECK(rep.signature.neg >= 2);  // non-abelian nilpotent
      if (p.d == p.ell)
        CHECK(rep.signature == SignatureTriple{static_cast<int>(p.n - p.k),
                                               static_cast<int>(p.k - p.d),
                                               static_cast<int>(p.d)});
      // block structure at this metric
      RicciSignatureResult res = ricci_signature(a, g);
      const CharacteristicSplitting& s = res.splitting;
      RatMat ric = res.ric;
      if (s.n3() > 0) CHECK((s.k_minus.basis.transpose() * ric).is_zero());
      if (s.n1() > 0)
        CHECK(inertia(s.k_plus.basis.transpose() * ric * s.k_plus.basis) ==
              SignatureTriple{0, 0, static_cast<int>(s.n1())});
      if (s.n4() > 0)
        CHECK(inertia(s.o_minus.basis.transpose() * ric * s.o_minus.basis) ==
              SignatureTriple{static_cast<int>(s.n4()), 0, 0});
      CHECK((s.k_plus.basis.transpose() * ric * s.o_minus.basis).is_zero());
    }
  }
  // the admissible set is defined for nilpotent algebras only
  std::map<std::pair<int, int>, std::map<int, Rat>> b;
  b[{1, 2}][2] = 1;
  LieAlgebra solv(2, b);
  Metric id2 = Metric::from_diagonal(RatVec(2, Rat(1)));
  CHECK_THROWS_AS(check_membership(solv, id2), ValidationError);
  // but the reduction itself still runs (general Riemannian Lie group)
  CHECK(ricci_signature(solv, id2).signature == SignatureTriple{2, 0, 0});
}

TEST_CASE("reduce_in_basis validates the supplied basis") {
  LieAlgebra l53 = catalog_algebra("L5_3");
  const CatalogEntry* e = Catalog::instance().find("L5_3");
  REQUIRE(e);
  REQUIRE(!e->recipes.empty());
  const Recipe& recipe = e->recipes[0];
  Metric m = Metric::from_diagonal_on_basis(recipe.base_diag, recipe.basis);
  ReducedRicci red = reduce_in_basis(l53, m, recipe.basis);
  CHECK(red.n3 == 0);
  CHECK(red.blocks.R.rows() == 1);
  // a shuffled basis is not characteristic for this metric
  RatMat wrong = RatMat::identity(5);
  CHECK_THROWS_AS(reduce_in_basis(l53, m, wrong), ValidationError);
}
