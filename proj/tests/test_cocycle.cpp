#include <map>
#include <random>
#include <set>

#include "common.hpp"
#include "doctest.h"
#include "tga/cocycle.hpp"
#include "tga/errors.hpp"
#include "tga/standard_form.hpp"

using namespace tga;

namespace {
const RootOfUnity kOne;
}

TEST_CASE("trivial cocycle is valid but fully degenerate") {
  auto g = Group::direct(Group::cyclic(2, "a"), Group::cyclic(2, "b"));
  auto c = Cocycle::trivial(g);
  CHECK(c.is_valid());
  auto nd = c.nondegeneracy();
  CHECK(!nd.nondegenerate);
  CHECK((int)nd.radical.size() == g->size() - 1);
  for (int x = 0; x < g->size(); ++x)
    for (int y = 0; y < g->size(); ++y) CHECK(c.at(x, y) == kOne);
}

TEST_CASE("standard cocycle on an even square is nondegenerate") {
  auto g = Group::direct(Group::cyclic(2, "a"), Group::cyclic(2, "b"));
  auto c = standard_cocycle(g);
  CHECK(c.is_valid());
  auto nd = c.nondegeneracy();
  CHECK(nd.nondegenerate);
  CHECK(nd.radical.empty());
  int a = g->eval_word("a"), b = g->eval_word("b");
  CHECK(c.pairing(a, b) == RootOfUnity(1, 2));
  CHECK(c.pairing(b, a) == RootOfUnity(1, 2));
}

TEST_CASE("pairing identities on an abelian group") {
  auto c = standard_cocycle(
      Group::direct(Group::cyclic(4, "a"), Group::cyclic(4, "b")));
  const auto& g = *c.group();
  for (int x = 0; x < g.size(); ++x) {
    CHECK(c.pairing(x, x) == kOne);
    for (int y = 0; y < g.size(); ++y) {
      CHECK(c.pairing(x, y) * c.pairing(y, x) == kOne);
      for (int z = 0; z < g.size(); ++z)
        CHECK(c.pairing(g.op(x, z), y) == c.pairing(x, y) * c.pairing(z, y));
    }
  }
}

TEST_CASE("path coefficients multiply the way products of units do") {
  auto g = test::make_s3c6_group();
  auto cc = test::make_s3c6_cocycle(g);
  CHECK(cc.path({g->eval_word("tau")}) == kOne);
  CHECK(cc.path({}) == kOne);
  for (int x = 0; x < g->size(); ++x)
    for (int y = 0; y < g->size(); ++y) CHECK(cc.path({x, y}) == cc.at(x, y));

  std::mt19937_64 rng(20260816);
  auto rand_word = [&](size_t len) {
    std::vector<int> w(len);
    for (auto& x : w) x = (int)(rng() % (unsigned long)g->size());
    return w;
  };
  for (int trial = 0; trial < 20; ++trial) {
    auto w1 = rand_word(1 + rng() % 4), w2 = rand_word(1 + rng() % 4);
    auto w12 = w1;
    w12.insert(w12.end(), w2.begin(), w2.end());
    CHECK(cc.path(w12) ==
          cc.path(w1) * cc.path(w2) * cc.at(cc.product(w1), cc.product(w2)));
  }
}

TEST_CASE("coboundary twists preserve everything observable") {
  auto g = test::make_c9sc9();
  auto c = standard_cocycle(g);
  std::vector<RootOfUnity> lam_one((size_t)g->size());
  auto same = c.coboundary_modify(lam_one);
  for (int x = 0; x < g->size(); ++x)
    for (int y = 0; y < g->size(); ++y) CHECK(same.at(x, y) == c.at(x, y));

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<RootOfUnity> lam((size_t)g->size());
    for (int x = 1; x < g->size(); ++x) lam[(size_t)x] = RootOfUnity((long)(rng() % 9), 9);
    auto d = c.coboundary_modify(lam);
    CHECK(d.is_valid());
    CHECK(d.nondegeneracy().nondegenerate);
    for (int x = 0; x < g->size(); ++x)
      for (int y = 0; y < g->size(); ++y)
        if (g->commutes(x, y)) CHECK(d.pairing(x, y) == c.pairing(x, y));
  }
}

TEST_CASE("crossed-homomorphism construction of the running example") {
  auto g = test::make_s3c6_group();
  auto c = test::make_s3c6_cocycle(g);
  CHECK(c.is_valid());
  CHECK(c.nondegeneracy().nondegenerate);
  CHECK(c.value_order_lcm() == 6);

  // both halves of the decomposition restrict trivially
  auto symm = g->closure({g->eval_word("sigma"), g->eval_word("tau")});
  auto rot = g->closure({g->eval_word("z")});
  for (auto* members : {&symm, &rot}) {
    auto sub = g->subgroup(*members);
    auto rc = c.restrict_to(sub, *members);
    CHECK(rc.is_valid());
    for (int i = 0; i < sub->size(); ++i)
      for (int j = 0; j < sub->size(); ++j) CHECK(rc.at(i, j) == kOne);
  }

  // the cross pairing that powers the worked example
  int y = g->eval_word("y"), sg = g->eval_word("sigma");
  auto w3sq = RootOfUnity(2, 3);
  CHECK(c.at(y, sg) == w3sq);
  CHECK(c.at(sg, y) == kOne);
  CHECK(c.pairing(y, sg) == w3sq);
}

TEST_CASE("a trivial exponent table yields the trivial twist") {
  auto g = test::make_s3c6_group();
  std::map<std::string, std::string> table;
  for (const auto& key :
       {"e", "tau", "sigma", "sigma^2", "tau*sigma", "tau*sigma^2"})
    table[key] = "e";
  auto c = from_one_cocycle(g, table);
  CHECK(c.is_valid());
  for (int x = 0; x < g->size(); ++x)
    for (int y = 0; y < g->size(); ++y) CHECK(c.at(x, y) == kOne);
}

TEST_CASE("incomplete or ill-formed exponent tables are rejected") {
  auto g = test::make_s3c6_group();
  CHECK_THROWS_AS(from_one_cocycle(g, {{"e", "e"}, {"tau", "z"}}), input_error);
  // a table that is not a crossed homomorphism (tau entry breaks the law)
  CHECK_THROWS_AS(from_one_cocycle(g, {{"e", "e"},
                                       {"tau", "z^2"},
                                       {"sigma", "z^2"},
                                       {"sigma^2", "z^4"},
                                       {"tau*sigma", "z^3"},
                                       {"tau*sigma^2", "z"}}),
                  input_error);
}

TEST_CASE("seeded perturbation is deterministic and structure preserving") {
  auto g = Group::direct(Group::cyclic(4, "a"), Group::cyclic(4, "b"));
  auto c = standard_cocycle(g);
  auto p1 = perturb_cocycle(c, 42);
  auto p2 = perturb_cocycle(c, 42);
  auto p3 = perturb_cocycle(c, 43);
  bool same12 = true, same13 = true;
  for (int x = 0; x < g->size(); ++x)
    for (int y = 0; y < g->size(); ++y) {
      same12 = same12 && p1.at(x, y) == p2.at(x, y);
      same13 = same13 && p1.at(x, y) == p3.at(x, y);
    }
  CHECK(same12);
  CHECK(!same13);
  CHECK(p1.is_valid());
  CHECK(p1.nondegeneracy().nondegenerate);

  // an automorphism permutes commuting pairs, so the multiset of pairing
  // values over all commuting pairs is unchanged
  std::multiset<RootOfUnity> before, after;
  for (int x = 0; x < g->size(); ++x)
    for (int y = 0; y < g->size(); ++y)
      if (g->commutes(x, y)) {
        before.insert(c.pairing(x, y));
        after.insert(p1.pairing(x, y));
      }
  CHECK(before == after);
}

TEST_CASE("inflation along a projection is valid but degenerate") {
  auto g = Group::direct(Group::direct(Group::cyclic(2, "a"), Group::cyclic(2, "b")),
                         Group::cyclic(3, "c"));
  std::vector<int> proj;
  auto q = g->quotient(g->closure({g->eval_word("c")}), &proj);
  auto cq = standard_cocycle(q);
  auto c = inflate(g, cq, proj);
  CHECK(c.is_valid());
  auto nd = c.nondegeneracy();
  CHECK(!nd.nondegenerate);
  // the kernel of the projection pairs trivially with everything
  CHECK((int)nd.radical.size() == 2);
}

TEST_CASE("generic scalars satisfy the same equation") {
  auto g = test::make_s3c6_group();
  GenericCocycle gen(test::make_s3c6_cocycle(g));
  CHECK(gen.validate().empty());

  // substituting 1 for every scalar recovers the base cocycle
  std::map<std::string, Cyclo> ones;
  for (int e = 0; e < g->size(); ++e) ones[t_name(g->name(e))] = Cyclo(1);
  for (int x = 0; x < g->size(); ++x)
    for (int y = 0; y < g->size(); ++y)
      CHECK(gen.value(x, y).substitute(ones) == gen.base.at(x, y).to_cyclo());

  // on commuting pairs the scalar parts cancel and the generic pairing is
  // the concrete one, as an exact identity of Laurent polynomials
  for (int x = 0; x < g->size(); ++x)
    for (int y = 0; y < g->size(); ++y) {
      if (!g->commutes(x, y)) continue;
      CHECK(gen.value(x, y) * gen.value(y, x).inv() ==
            Laurent(gen.base.pairing(x, y).to_cyclo()));
    }
}

TEST_CASE("generic value of a self product names the squared base scalar") {
  auto g = Group::cyclic(2, "a");
  GenericCocycle gen(Cocycle::trivial(g));
  auto expected = Laurent::variable(t_name("a")).pow(2) *
                  Laurent::variable(t_name("e")).pow(-1);
  CHECK(gen.value(1, 1) == expected);
  CHECK(gen.value(1, 1).str() == "t(a)^2 * t(e)^-1");
}
