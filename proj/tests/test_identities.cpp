#include <algorithm>
#include <random>
#include <set>

#include "common.hpp"
#include "doctest.h"
#include "tga/errors.hpp"
#include "tga/identities.hpp"
#include "tga/standard_form.hpp"

using namespace tga;

namespace {

// the two six-letter blocks of the running example's polynomial
std::vector<Letter> block_A(const Group& g) {
  int sg = g.eval_word("sigma"), tu = g.eval_word("tau"), y = g.eval_word("y");
  return {{1, sg}, {1, tu}, {1, tu}, {1, y}, {1, y}, {1, y}};
}
std::vector<Letter> block_B(const Group& g) {
  int sg = g.eval_word("sigma"), tu = g.eval_word("tau"), y = g.eval_word("y");
  return {{1, tu}, {1, y}, {1, tu}, {1, y}, {1, y}, {1, sg}};
}
GradedMonomial word_of(const Group& g, const std::string& pattern) {
  std::vector<Letter> letters;
  for (char ch : pattern) {
    auto blk = ch == 'A' ? block_A(g) : block_B(g);
    letters.insert(letters.end(), blk.begin(), blk.end());
  }
  return GradedMonomial{letters};
}

}  // namespace

TEST_CASE("monomial basics") {
  auto g = test::make_s3c6_group();
  GradedMonomial m{{{1, g->eval_word("sigma")}, {2, g->eval_word("tau")}}};
  CHECK(m.length() == 2);
  CHECK(m.degree(*g) == g->eval_word("sigma*tau"));
  CHECK(m.degrees() ==
        std::vector<int>{g->eval_word("sigma"), g->eval_word("tau")});
  CHECK(m.str(*g) == "x(1,sigma)*x(2,tau)");
  CHECK(GradedMonomial{}.str(*g) == "1");
  CHECK(GradedMonomial{}.degree(*g) == 0);
}

TEST_CASE("congruence of words") {
  auto g = test::make_s3c6_group();
  int sg = g->eval_word("sigma"), tu = g->eval_word("tau");
  GradedMonomial st{{{1, sg}, {1, tu}}}, ts{{{1, tu}, {1, sg}}};

  auto self = is_congruent(*g, st, st);
  REQUIRE(self.has_value());
  CHECK(*self == std::vector<int>{0, 1});

  // sigma and tau do not commute, so the swap changes the degree
  CHECK(!is_congruent(*g, st, ts).has_value());
  CHECK(!is_weakly_congruent(*g, st, ts));

  auto v4 = Group::direct(Group::cyclic(2, "a"), Group::cyclic(2, "b"));
  int a = v4->eval_word("a"), b = v4->eval_word("b");
  GradedMonomial ab{{{1, a}, {1, b}}}, ba{{{1, b}, {1, a}}};
  auto swp = is_congruent(*v4, ab, ba);
  REQUIRE(swp.has_value());
  CHECK(*swp == std::vector<int>{1, 0});

  // same degree but different letter multiset: weak only
  GradedMonomial other{{{2, a}, {2, b}}};
  CHECK(!is_congruent(*v4, ab, other).has_value());
  CHECK(is_weakly_congruent(*v4, ab, other));
}

TEST_CASE("elementary identities are binomial and true") {
  auto v4 = Group::direct(Group::cyclic(2, "a"), Group::cyclic(2, "b"));
  auto c = standard_cocycle(v4);
  int a = v4->eval_word("a"), b = v4->eval_word("b");
  GradedMonomial ab{{{1, a}, {1, b}}};

  auto trivial = elementary_identity(c, ab, {0, 1});
  CHECK(trivial.coeff == RootOfUnity());
  CHECK(trivial.z2 == ab);
  CHECK(trivial.to_polynomial(c).is_zero());

  auto e = elementary_identity(c, ab, {1, 0});
  CHECK(e.coeff == RootOfUnity(1, 2));
  CHECK(e.to_polynomial(c) ==
        parse_polynomial(v4, "x(1,a)*x(1,b) + x(1,b)*x(1,a)"));
  CHECK(decide_identity(e.to_polynomial(c), c));

  // a rearrangement that is not congruent is rejected
  GradedMonomial aa{{{1, a}, {2, a}}};
  CHECK_THROWS_AS(elementary_identity(c, aa, {0, 0}), input_error);
}

TEST_CASE("the running example's cube decomposes into elementary identities") {
  auto g = test::make_s3c6_group();
  auto c = test::make_s3c6_cocycle(g);
  auto alg = make_algebra(c);
  auto w = Cyclo::root(3, 1);

  auto f = parse_polynomial(
      g,
      "x(1,sigma)*x(1,tau)^2*x(1,y)^3 - z3*x(1,tau)*x(1,y)*x(1,tau)*x(1,y)^2*x(1,sigma)");

  // path coefficients of the eight block words
  auto path_of = [&](const std::string& p) { return c.path(word_of(*g, p).degrees()); };
  CHECK(path_of("AAA") == RootOfUnity());
  CHECK(path_of("AAB") == RootOfUnity(1, 3));
  CHECK(path_of("ABA") == RootOfUnity());
  CHECK(path_of("ABB") == RootOfUnity(1, 3));
  CHECK(path_of("BAA") == RootOfUnity(2, 3));
  CHECK(path_of("BAB") == RootOfUnity());
  CHECK(path_of("BBA") == RootOfUnity(2, 3));
  CHECK(path_of("BBB") == RootOfUnity());

  auto elem = [&](const std::string& p1, const std::string& p2) {
    auto z1 = word_of(*g, p1), z2 = word_of(*g, p2);
    auto pi = is_congruent(*g, z1, z2);
    REQUIRE(pi.has_value());
    auto e = elementary_identity(c, z1, *pi);
    CHECK(e.z2 == z2);
    CHECK(decide_identity(e.to_polynomial(c), c));
    return e;
  };
  auto e1 = elem("AAA", "BBB");
  auto e2 = elem("BAA", "AAB");
  auto e3 = elem("BAA", "ABA");
  auto e4 = elem("ABB", "BBA");
  auto e5 = elem("BAB", "BBA");
  CHECK(e1.coeff == RootOfUnity());
  CHECK(e2.coeff == RootOfUnity(1, 3));
  CHECK(e3.coeff == RootOfUnity(2, 3));
  CHECK(e4.coeff == RootOfUnity(2, 3));
  CHECK(e5.coeff == RootOfUnity(1, 3));

  // f itself and its square are not identities; the cube is, and it is
  // exactly the stated combination of the five elementary identities
  CHECK(!decide_identity(f, c));
  CHECK(!decide_identity(f * f, c));
  auto f3 = f.pow(3);
  CHECK(decide_identity(f3, c));
  CHECK(f3 == e1.to_polynomial(c) + e2.to_polynomial(c) +
                  w * w *
                      (e3.to_polynomial(c) + e4.to_polynomial(c) +
                       e5.to_polynomial(c)));

  // a lone monomial never vanishes identically
  CHECK(!decide_identity(GradedPolynomial::monomial(g, word_of(*g, "A")), c));

  // probabilistic cross-check through concrete substitutions
  std::mt19937_64 rng(20260816);
  int sg = g->eval_word("sigma"), tu = g->eval_word("tau"), y = g->eval_word("y");
  for (int trial = 0; trial < 50; ++trial) {
    std::map<Letter, Cyclo> scal;
    for (int elt : {sg, tu, y})
      scal[{1, elt}] = Cyclo::root(12, (long)(rng() % 12));
    CHECK(evaluate(f3, alg, scal).is_zero());
  }
  CHECK(!evaluate(f, alg, {}).is_zero());
}

TEST_CASE("homogeneous decomposition") {
  auto g = test::make_s3c6_group();
  auto c = test::make_s3c6_cocycle(g);
  auto f = parse_polynomial(
      g,
      "x(1,sigma)*x(1,tau)^2*x(1,y)^3 - z3*x(1,tau)*x(1,y)*x(1,tau)*x(1,y)^2*x(1,sigma)");

  // f has two non-congruent terms
  CHECK(homogeneous_decomposition(f).size() == 2);

  auto parts = homogeneous_decomposition(f.pow(3));
  REQUIRE(parts.size() == 3);
  std::multiset<size_t> sizes;
  GradedPolynomial sum(g);
  for (const auto& p : parts) {
    sizes.insert(p.terms().size());
    CHECK(decide_identity(p, c));  // components of an identity are identities
    sum += p;
  }
  CHECK(sizes == std::multiset<size_t>{2, 3, 3});
  CHECK(sum == f.pow(3));

  // a homogeneous polynomial is its own decomposition
  auto v4 = Group::direct(Group::cyclic(2, "a"), Group::cyclic(2, "b"));
  auto p = parse_polynomial(v4, "x(1,a)*x(1,b) + x(1,b)*x(1,a)");
  REQUIRE(homogeneous_decomposition(p).size() == 1);
  CHECK(homogeneous_decomposition(p)[0] == p);

  // same degree, different letters: two strong classes, one weak class
  auto q = parse_polynomial(v4, "x(1,a)*x(2,b) + x(2,a)*x(1,b)");
  CHECK(homogeneous_decomposition(q).size() == 2);
  CHECK(weak_homogeneous_decomposition(q).size() == 1);
}

TEST_CASE("canonical relabeling") {
  auto v4 = Group::direct(Group::cyclic(2, "a"), Group::cyclic(2, "b"));
  int a = v4->eval_word("a"), b = v4->eval_word("b");
  GradedMonomial z{{{2, a}, {5, b}, {2, a}, {7, a}}};
  auto r = canonical_relabel(z);
  CHECK(r == GradedMonomial{{{1, a}, {1, b}, {1, a}, {2, a}}});

  GradedMonomial z1{{{3, a}, {1, a}}}, z2{{{1, a}, {3, a}}};
  auto [r1, r2] = canonical_relabel_pair(z1, z2);
  CHECK(r1 == GradedMonomial{{{1, a}, {2, a}}});
  CHECK(r2 == GradedMonomial{{{2, a}, {1, a}}});
}

TEST_CASE("enumeration of short elementary identities") {
  auto c2 = Group::cyclic(2, "a");
  auto triv = Cocycle::trivial(c2);
  auto list = enumerate_E(triv, 2, 2);
  GradedMonomial z1{{{1, 1}, {2, 1}}}, z2{{{2, 1}, {1, 1}}};
  bool found = false;
  for (const auto& e : list)
    found = found || (e.z1 == z1 && e.z2 == z2 && e.coeff == RootOfUnity());
  CHECK(found);

  // raw enumeration contains relabelings of the canonical ones
  auto raw = enumerate_E(triv, 2, 2, 1000000, /*canonical_z1=*/false);
  CHECK(raw.size() >= list.size());
  for (const auto& e : list) {
    bool present = false;
    for (const auto& r : raw) present = present || r == e;
    CHECK(present);
  }

  auto v4 = Group::direct(Group::cyclic(2, "a"), Group::cyclic(2, "b"));
  auto c = standard_cocycle(v4);
  auto short_list = enumerate_E(c, 2, 2);
  CHECK(short_list.size() == 16);
  // independent count: a canonical length-2 left word is either
  // x(1,g)x(2,g) (4 choices) or x(1,g)x(1,h) with g != h (4*3 ordered
  // choices), and the only nontrivial rearrangement is the swap
  long expected = 4 + 4 * 3;
  CHECK((long)short_list.size() == expected);
  for (const auto& e : short_list) {
    CHECK(e.coeff.pow(v4->size()).is_one());
    CHECK(decide_identity(e.to_polynomial(c), c));
    CHECK(e.z1 == canonical_relabel(e.z1));
    CHECK(e.z2 != e.z1);
  }

  CHECK(enumerate_E(c, 3, 2).size() == 412);
  CHECK_THROWS_AS(enumerate_E(c, 3, 2, /*cap=*/10), input_error);
}

TEST_CASE("coefficient groups of bundled twists") {
  auto mu0 = compute_mu(Cocycle::trivial(Group::cyclic(2, "a")));
  CHECK(mu0.generator == RootOfUnity());
  CHECK(mu0.order == 1);
  CHECK(mu0.field_conductor == 1);

  auto v4 = Group::direct(Group::cyclic(2, "a"), Group::cyclic(2, "b"));
  auto mu2 = compute_mu(standard_cocycle(v4));
  CHECK(mu2.generator == RootOfUnity(1, 2));
  CHECK(mu2.order == 2);
  CHECK(mu2.field_conductor == 1);

  auto c3c3 = Group::direct(Group::cyclic(3, "a"), Group::cyclic(3, "b"));
  auto mu3 = compute_mu(standard_cocycle(c3c3));
  CHECK(mu3.order == 3);
  CHECK(mu3.generator.order() == 3);
  CHECK(mu3.field_conductor == 3);

  auto c4c4 = Group::direct(Group::cyclic(4, "a"), Group::cyclic(4, "b"));
  auto mu4 = compute_mu(standard_cocycle(c4c4));
  CHECK(mu4.order == 4);
  CHECK(mu4.generator.order() == 4);
  CHECK(mu4.field_conductor == 4);

  auto g36 = test::make_s3c6_group();
  auto mu6 = compute_mu(test::make_s3c6_cocycle(g36));
  CHECK(mu6.order == 6);
  CHECK(mu6.generator.order() == 6);
  CHECK(mu6.field_conductor == 3);
}

TEST_CASE("identity coefficients are coboundary invariants") {
  auto g = Group::direct(Group::cyclic(3, "a"), Group::cyclic(3, "b"));
  auto c = standard_cocycle(g);
  std::mt19937_64 rng(5);
  auto random_word = [&](int len) {
    std::vector<Letter> ls;
    for (int i = 0; i < len; ++i)
      ls.push_back({1 + (int)(rng() % 2), (int)(rng() % (unsigned long)g->size())});
    return GradedMonomial{ls};
  };
  for (int trial = 0; trial < 20; ++trial) {
    auto z1 = random_word(4 + (int)(rng() % 3));
    std::vector<int> pi(z1.length());
    for (size_t i = 0; i < pi.size(); ++i) pi[i] = (int)i;
    std::shuffle(pi.begin(), pi.end(), rng);
    auto base = elementary_identity(c, z1, pi);

    std::vector<RootOfUnity> lam((size_t)g->size());
    for (int x = 1; x < g->size(); ++x) lam[(size_t)x] = RootOfUnity((long)(rng() % 3), 3);
    auto d = c.coboundary_modify(lam);
    auto twisted = elementary_identity(d, z1, pi);
    CHECK(twisted.coeff == base.coeff);
    CHECK(decide_identity(twisted.to_polynomial(d), d));
  }
}

TEST_CASE("polynomial literal grammar") {
  auto v4 = Group::direct(Group::cyclic(2, "a"), Group::cyclic(2, "b"));
  auto p = parse_polynomial(v4, "(x(1,a)*x(1,b) + x(1,b)*x(1,a))^2");
  auto q = parse_polynomial(v4, "x(1,a)*x(1,b) + x(1,b)*x(1,a)");
  CHECK(p == q * q);
  CHECK(parse_polynomial(v4, "x(1,a)/2 - 1/2 * x(1,a)").is_zero());
  CHECK(parse_polynomial(v4, "-x(1,a) + x(1,a)").is_zero());
  CHECK(parse_polynomial(v4, "x(2,a*b)").terms().begin()->first ==
        GradedMonomial{{{2, v4->eval_word("a*b")}}});
  CHECK_THROWS_AS(parse_polynomial(v4, "x(0,a)"), input_error);
  CHECK_THROWS_AS(parse_polynomial(v4, "x(1,c)"), input_error);
  CHECK_THROWS_AS(parse_polynomial(v4, "x(1,a)*"), input_error);
}
