#include "common.hpp"
#include "doctest.h"
#include "tga/generic_center.hpp"
#include "tga/standard_form.hpp"

using namespace tga;

TEST_CASE("exponent rows add the two factors and subtract the product") {
  auto g = Group::cyclic(4, "a");
  GenericCocycle s(Cocycle::trivial(g));
  auto m = exponent_matrix(s);
  REQUIRE(m.size() == 16);
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) {
      const auto& row = m[(size_t)(x * 4 + y)];
      REQUIRE(row.size() == 4);
      std::vector<long> expected(4, 0);
      expected[(size_t)x] += 1;
      expected[(size_t)y] += 1;
      expected[(size_t)g->op(x, y)] -= 1;
      CHECK(row == expected);
    }
}

TEST_CASE("the scalar parts of generic values span a full lattice") {
  auto c2 = Group::cyclic(2, "a");
  CHECK(rank_of_Yf(GenericCocycle(Cocycle::trivial(c2))) == 2);

  auto v4 = Group::direct(Group::cyclic(2, "a"), Group::cyclic(2, "b"));
  CHECK(rank_of_Yf(GenericCocycle(standard_cocycle(v4))) == 4);

  auto c3c3 = Group::direct(Group::cyclic(3, "a"), Group::cyclic(3, "b"));
  CHECK(rank_of_Yf(GenericCocycle(standard_cocycle(c3c3))) == 9);

  auto g36 = test::make_s3c6_group();
  CHECK(rank_of_Yf(GenericCocycle(test::make_s3c6_cocycle(g36))) == 36);
}

TEST_CASE("torsion of the value group is the coefficient group") {
  auto c2 = Group::cyclic(2, "a");
  CHECK(torsion_of_Y(GenericCocycle(Cocycle::trivial(c2))) == RootOfUnity());

  auto v4 = Group::direct(Group::cyclic(2, "a"), Group::cyclic(2, "b"));
  auto c1 = standard_cocycle(v4);
  CHECK(torsion_of_Y(GenericCocycle(c1)) == compute_mu(c1).generator);
  CHECK(torsion_of_Y(GenericCocycle(c1)).order() == 2);

  auto c3c3 = Group::direct(Group::cyclic(3, "a"), Group::cyclic(3, "b"));
  auto c2c = standard_cocycle(c3c3);
  CHECK(torsion_of_Y(GenericCocycle(c2c)) == compute_mu(c2c).generator);
  CHECK(torsion_of_Y(GenericCocycle(c2c)).order() == 3);

  auto g36 = test::make_s3c6_group();
  auto c3c = test::make_s3c6_cocycle(g36);
  CHECK(torsion_of_Y(GenericCocycle(c3c)) == compute_mu(c3c).generator);
  CHECK(torsion_of_Y(GenericCocycle(c3c)).order() == 6);
}

TEST_CASE("the scalar lattice quotient recovers the abelianization") {
  auto check = [](const GroupPtr& g) {
    CHECK(uv_quotient(*g) == g->abelian_invariants());
  };
  check(Group::cyclic(2, "a"));
  check(Group::direct(Group::cyclic(2, "a"), Group::cyclic(2, "b")));
  check(Group::direct(Group::cyclic(3, "a"), Group::cyclic(3, "b")));
  check(test::make_c9sc9());
  check(test::make_s3c6_group());
  check(test::make_q8());
}

TEST_CASE("centrality of monomials is decided by their degree") {
  auto v4 = Group::direct(Group::cyclic(2, "a"), Group::cyclic(2, "b"));
  GenericCocycle s(standard_cocycle(v4));
  int a = v4->eval_word("a"), b = v4->eval_word("b");

  CHECK(central_monomial_check(s, {}));
  CHECK(central_monomial_check(s, {{1, a}, {2, a}}));
  CHECK(central_monomial_check(s, {{1, a}, {1, b}, {1, v4->eval_word("a*b")}}));
  CHECK(!central_monomial_check(s, {{1, a}}));
  CHECK(!central_monomial_check(s, {{1, a}, {2, b}}));

  auto g36 = test::make_s3c6_group();
  GenericCocycle s36(test::make_s3c6_cocycle(g36));
  int y = g36->eval_word("y");
  CHECK(central_monomial_check(s36, {{1, y}, {2, y}, {3, y}}));
  CHECK(!central_monomial_check(s36, {{1, y}, {2, y}}));
  CHECK(central_monomial_check(s36, {{1, 0}}));
}
