#include <random>

#include "common.hpp"
#include "doctest.h"
#include "tga/errors.hpp"
#include "tga/lambda.hpp"

using namespace tga;

TEST_CASE("abelian bases have descending independent orders") {
  auto g = Group::direct(Group::direct(Group::cyclic(2, "a"), Group::cyclic(4, "b")),
                         Group::cyclic(3, "c"));
  auto basis = abelian_basis(*g);
  long prod = 1;
  long prev = 1L << 60;
  std::vector<int> span;
  for (int b : basis) {
    long ord = g->element_order(b);
    CHECK(ord <= prev);
    prev = ord;
    prod *= ord;
    span.push_back(b);
  }
  CHECK(prod == g->size());
  CHECK((long)g->closure(span).size() == g->size());
  CHECK_THROWS_AS(abelian_basis(*test::make_s3c6_group()), math_error);
}

TEST_CASE("symmetric type recognition") {
  auto v4 = Group::direct(Group::cyclic(2, "a"), Group::cyclic(2, "b"));
  CHECK(is_symmetric_type(*v4) == std::vector<long>{2});

  auto c4c2 = Group::direct(Group::cyclic(4, "a"), Group::cyclic(2, "b"));
  CHECK(!is_symmetric_type(*c4c2).has_value());

  auto big = Group::direct(
      Group::direct(Group::cyclic(9, "a"), Group::cyclic(9, "b")),
      Group::direct(Group::cyclic(3, "c"), Group::cyclic(3, "d")));
  CHECK(is_symmetric_type(*big) == std::vector<long>{9, 3});

  CHECK(is_symmetric_type(*Group::cyclic(1, "e")) == std::vector<long>{});
  CHECK_THROWS_AS(is_symmetric_type(*test::make_q8()), input_error);
}

TEST_CASE("first shape: abelian squares") {
  auto g = Group::direct(Group::cyclic(4, "a"), Group::cyclic(4, "b"));
  auto comp = classify_lambda_p(g);
  REQUIRE(comp.has_value());
  CHECK(comp->type == 1);
  CHECK(comp->p == 2);
  CHECK(comp->gamma_pairs == std::vector<long>{4});
  REQUIRE(comp->gammas.size() == 2);
  CHECK(g->element_order(comp->gammas[0]) == 4);
  CHECK(g->element_order(comp->gammas[1]) == 4);
}

TEST_CASE("second shape: odd twisted pair") {
  auto g = test::make_c9sc9();
  std::string why;
  auto comp = classify_lambda_p(g, &why);
  REQUIRE(comp.has_value());
  CHECK(comp->type == 2);
  CHECK(comp->p == 3);
  CHECK(comp->n == 2);
  CHECK(comp->s == 1);
  CHECK(comp->gammas.empty());
  // the defining relation, re-verified by multiplication: p^s + 1 = 4
  int pi = comp->pi, sg = comp->sigma;
  CHECK(g->element_order(pi) == 9);
  CHECK(g->element_order(sg) == 9);
  CHECK(g->conj(sg, pi) == g->pow(pi, 4));
}

TEST_CASE("third shape: even pair with an inverting involution") {
  auto g = test::make_c8s_c4xc2();
  auto comp = classify_lambda_p(g);
  REQUIRE(comp.has_value());
  CHECK(comp->type == 3);
  CHECK(comp->p == 2);
  CHECK(comp->n == 2);
  int pi = comp->pi, sg = comp->sigma, tau = comp->tau;
  CHECK(g->element_order(pi) == 8);
  CHECK(g->element_order(sg) == 4);
  CHECK(g->element_order(tau) == 2);
  CHECK(g->conj(sg, pi) == g->pow(pi, 3));
  CHECK(g->conj(tau, pi) == g->inv(pi));
  CHECK(g->commutes(sg, tau));

  auto small = test::make_c4s_c2xc2();
  auto comp2 = classify_lambda_p(small);
  REQUIRE(comp2.has_value());
  CHECK(comp2->type == 3);
  CHECK(comp2->n == 1);
}

TEST_CASE("p-groups matching none of the shapes") {
  std::string why;
  CHECK(!classify_lambda_p(test::make_q8(), &why).has_value());
  CHECK(!why.empty());
  auto c4c2 = Group::direct(Group::cyclic(4, "a"), Group::cyclic(2, "b"));
  CHECK(!classify_lambda_p(c4c2, &why).has_value());
  auto c8 = Group::cyclic(8, "a");
  CHECK(!classify_lambda_p(c8, &why).has_value());
}

TEST_CASE("whole group verdicts") {
  auto on1 = Group::direct(
      Group::direct(Group::cyclic(2, "a"), Group::cyclic(2, "b")),
      Group::direct(Group::cyclic(3, "c"), Group::cyclic(3, "d")));
  auto w1 = is_on_lambda(on1);
  CHECK(w1.on_list);
  REQUIRE(w1.components.size() == 2);
  CHECK(w1.components.at(2).type == 1);
  CHECK(w1.components.at(3).type == 1);
  CHECK(w1.sylow_members.at(2).size() == 4);
  CHECK(w1.sylow_members.at(3).size() == 9);

  auto on2 = Group::direct(test::make_c9sc9(),
                           Group::direct(Group::cyclic(2, "u"), Group::cyclic(2, "v")));
  auto w2 = is_on_lambda(on2);
  CHECK(w2.on_list);
  CHECK(w2.components.at(3).type == 2);
  CHECK(w2.components.at(2).type == 1);

  auto off1 = is_on_lambda(test::make_s3c6_group());
  CHECK(!off1.on_list);
  CHECK(off1.reason.find("not nilpotent") != std::string::npos);

  auto off2 = is_on_lambda(test::make_q8());
  CHECK(!off2.on_list);
  CHECK(!off2.reason.empty());

  // nilpotent, one good prime, one bad prime
  auto off3 = is_on_lambda(Group::direct(
      Group::direct(Group::cyclic(2, "a"), Group::cyclic(2, "b")),
      Group::cyclic(9, "c")));
  CHECK(!off3.on_list);
}

TEST_CASE("verdicts are stable under relabeling") {
  std::mt19937_64 rng(20260816);
  std::vector<GroupPtr> groups = {
      test::make_c9sc9(), test::make_c8s_c4xc2(),
      Group::direct(Group::cyclic(4, "a"), Group::cyclic(4, "b"))};
  for (const GroupPtr& g : groups) {
    auto before = classify_lambda_p(g);
    REQUIRE(before.has_value());
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<int> perm(g->size());
      for (int i = 0; i < g->size(); ++i) perm[(size_t)i] = i;
      for (size_t i = perm.size() - 1; i > 1; --i)
        std::swap(perm[i], perm[1 + rng() % i]);
      auto h = g->relabel(perm);
      auto after = classify_lambda_p(h);
      REQUIRE(after.has_value());
      CHECK(after->type == before->type);
      CHECK(after->p == before->p);
      CHECK(after->n == before->n);
      CHECK(after->s == before->s);
      CHECK(after->gamma_pairs == before->gamma_pairs);
    }
  }
}

TEST_CASE("exponent bound on the symmetric complement") {
  // attaching a C3 x C3 square to the twisted pair stays within the
  // exponent bound, while an attached C9 cannot be part of any complement
  auto good = Group::direct(test::make_c9sc9(),
                            Group::direct(Group::cyclic(3, "u"), Group::cyclic(3, "v")));
  CHECK(is_on_lambda(good).on_list);

  auto bad = Group::direct(test::make_c9sc9(), Group::cyclic(9, "u"));
  auto w = is_on_lambda(bad);
  CHECK(!w.on_list);
}
