#include <random>

#include "common.hpp"
#include "doctest.h"
#include "tga/errors.hpp"
#include "tga/lambda.hpp"
#include "tga/standard_form.hpp"

using namespace tga;

namespace {

// the bundled groups, one per standardization case
GroupPtr group_case1() {
  return Group::direct(Group::cyclic(4, "a"), Group::cyclic(4, "b"));
}
GroupPtr group_case2() { return test::make_c9sc9(); }
GroupPtr group_case3() { return test::make_c8s_c4xc2(); }
GroupPtr group_case4() { return test::make_c4s_c2xc2(); }

void check_verified(const StandardFormResult& r) {
  CHECK(r.verified);
  for (const auto& rel : r.relations) CHECK(rel.holds);
}

bool is_substitution(const AutoStep& s) {
  auto a = s.before, b = s.after;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a != b;
}

}  // namespace

TEST_CASE("scalars normalize unit orders") {
  auto c2 = Group::cyclic(2, "a");
  auto c = Cocycle::from_entries(c2, {{1, 1, RootOfUnity(1, 2)}});
  REQUIRE(c.is_valid());
  // (lambda u_a)^2 = lambda^2 c(a,a) must be 1
  auto lam = normalize_orders(c, {1});
  REQUIRE(lam.size() == 1);
  CHECK((lam[0].pow(2) * c.at(1, 1)).is_one());

  auto g = group_case1();
  auto sc = standard_cocycle(g);
  auto gens = abelian_basis(*g);
  auto lams = normalize_orders(sc, gens);
  RepCalc rc(&sc);
  for (size_t i = 0; i < gens.size(); ++i) {
    Rep r{lams[i], gens[i]};
    CHECK(rc.pow(r, g->element_order(gens[i])).s.is_one());
  }
}

TEST_CASE("partner extraction prefers an already standard basis") {
  auto g = group_case1();
  auto c = standard_cocycle(g);
  std::vector<int> all(static_cast<size_t>(g->size()));
  for (int i = 0; i < g->size(); ++i) all[(size_t)i] = i;
  auto basis = abelian_basis(*g);
  auto pairs = greedy_symplectic(c, all, basis);
  REQUIRE(pairs.size() == 2);
  CHECK(pairs == basis);
  CHECK(c.pairing(pairs[0], pairs[1]) == RootOfUnity(1, 4));

  // with no preference the pairing is still canonical
  auto pairs2 = greedy_symplectic(c, all, {});
  REQUIRE(pairs2.size() == 2);
  CHECK(c.pairing(pairs2[0], pairs2[1]) == RootOfUnity(1, 4));
  CHECK(g->element_order(pairs2[0]) == 4);

  CHECK_THROWS_AS(greedy_symplectic(Cocycle::trivial(g), all, {}), math_error);
}

TEST_CASE("standard cocycles standardize with no substitution moves") {
  for (auto [make, tag] :
       std::initializer_list<std::pair<GroupPtr (*)(), int>>{
           {group_case1, 1}, {group_case2, 2}, {group_case3, 3}, {group_case4, 4}}) {
    auto g = make();
    auto c = standard_cocycle(g);
    CHECK(c.is_valid());
    CHECK(c.is_nondegenerate());
    auto parts = standardize(c);
    REQUIRE(parts.size() == 1);
    const auto& r = parts[0].result;
    CHECK(r.case_tag == tag);
    check_verified(r);
    for (const auto& s : r.steps) CHECK(!is_substitution(s));
  }
}

TEST_CASE("expected shape parameters of the bundled cases") {
  auto r1 = standardize(standard_cocycle(group_case1()))[0].result;
  CHECK(r1.case_tag == 1);
  CHECK(r1.p == 2);
  CHECK(r1.m == 1);
  CHECK(r1.relations.size() == 3);

  auto r2 = standardize(standard_cocycle(group_case2()))[0].result;
  CHECK(r2.case_tag == 2);
  CHECK(r2.p == 3);
  CHECK(r2.n == 2);
  CHECK(r2.s == 1);
  CHECK(r2.relations.size() == 3);

  auto r3 = standardize(standard_cocycle(group_case3()))[0].result;
  CHECK(r3.case_tag == 3);
  CHECK(r3.p == 2);
  CHECK(r3.n == 2);
  CHECK(r3.relations.size() == 6);

  auto r4 = standardize(standard_cocycle(group_case4()))[0].result;
  CHECK(r4.case_tag == 4);
  CHECK(r4.p == 2);
  CHECK(r4.n == 1);
  CHECK(r4.relations.size() == 6);
}

TEST_CASE("perturbed cocycles standardize back to the same presentation") {
  for (auto make : {group_case1, group_case2, group_case3, group_case4}) {
    auto g = make();
    auto c = standard_cocycle(g);
    auto clean = standardize(c);
    REQUIRE(clean.size() == 1);
    for (unsigned long long seed = 1; seed <= 10; ++seed) {
      auto d = perturb_cocycle(c, seed);
      auto parts = standardize(d);
      REQUIRE(parts.size() == 1);
      const auto& r = parts[0].result;
      CHECK(r.case_tag == clean[0].result.case_tag);
      CHECK(r.p == clean[0].result.p);
      CHECK(r.n == clean[0].result.n);
      CHECK(r.s == clean[0].result.s);
      CHECK(r.m == clean[0].result.m);
      check_verified(r);
    }
  }
}

TEST_CASE("substitution moves carry automorphism evidence when they occur") {
  auto g = group_case2();
  auto c = standard_cocycle(g);
  bool saw_substitution = false;
  for (unsigned long long seed = 1; seed <= 20 && !saw_substitution; ++seed) {
    auto parts = standardize(perturb_cocycle(c, seed));
    for (const auto& s : parts[0].result.steps)
      if (is_substitution(s)) {
        saw_substitution = true;
        // replaying the element map must again extend to an automorphism
        CHECK(extend_generator_map(*c.group(), s.before, s.after).has_value());
      }
  }
  CHECK(saw_substitution);
}

TEST_CASE("a direct square factor joins through partner pairs") {
  auto g = Group::direct(test::make_c4s_c2xc2(),
                         Group::direct(Group::cyclic(2, "u"), Group::cyclic(2, "v")));
  auto c = standard_cocycle(g);
  CHECK(c.is_nondegenerate());
  auto parts = standardize(c);
  REQUIRE(parts.size() == 1);
  const auto& r = parts[0].result;
  CHECK(r.case_tag == 4);
  CHECK(r.m == 1);
  check_verified(r);
  // the partner pair anticommutes: its pairing relation mentions -1
  bool found = false;
  for (const auto& rel : r.relations)
    found = found || rel.relation.find("-1") != std::string::npos;
  CHECK(found);
}

TEST_CASE("mixed order groups standardize one Sylow part at a time") {
  auto g = Group::direct(Group::direct(Group::cyclic(2, "a"), Group::cyclic(2, "b")),
                         Group::direct(Group::cyclic(3, "c"), Group::cyclic(3, "d")));
  auto c = standard_cocycle(g);
  auto parts = standardize(c);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].p == 2);
  CHECK(parts[1].p == 3);
  CHECK(parts[0].members.size() == 4);
  CHECK(parts[1].members.size() == 9);
  for (const auto& part : parts) {
    CHECK(part.result.case_tag == 1);
    check_verified(part.result);
    CHECK(part.restricted.is_nondegenerate());
  }
}

TEST_CASE("degenerate and unrecognized inputs are rejected") {
  CHECK_THROWS_AS(standardize(Cocycle::trivial(group_case2())), math_error);
  CHECK_THROWS_AS(standard_cocycle(test::make_q8()), input_error);
  auto s3 = Group::semidirect(Group::cyclic(3, "sigma"), Group::cyclic(2, "tau"),
                              {{"tau", {{"sigma", "sigma^2"}}}});
  CHECK_THROWS_AS(standard_cocycle(s3), input_error);
}

TEST_CASE("standard cocycles of all bundled groups are nondegenerate") {
  std::vector<GroupPtr> groups = {group_case1(), group_case2(), group_case3(),
                                  group_case4()};
  for (const auto& g : groups) {
    auto c = standard_cocycle(g);
    CHECK(c.is_valid());
    CHECK(c.is_nondegenerate());
  }
}

TEST_CASE("relation verification notices tampering") {
  auto g = group_case4();
  auto c = standard_cocycle(g);
  auto r = standardize(c)[0].result;
  REQUIRE(r.verified);
  REQUIRE(!r.scalars.empty());
  auto tampered = r;
  tampered.scalars[0] = tampered.scalars[0] * RootOfUnity(1, 3);
  auto rels = verify_relations(tampered, c);
  bool any_fail = false;
  for (const auto& rel : rels) any_fail = any_fail || !rel.holds;
  CHECK(any_fail);
}

TEST_CASE("fourth case recognition converts the inverting involution") {
  // both involutions invert the core, yet the recognized tau role commutes
  auto g = group_case4();
  for (unsigned long long seed = 0; seed <= 5; ++seed) {
    auto c = seed == 0 ? standard_cocycle(g)
                       : perturb_cocycle(standard_cocycle(g), seed);
    auto r = standardize(c)[0].result;
    CHECK(r.case_tag == 4);
    REQUIRE(r.roles.size() >= 3);
    CHECK(r.roles[0] == "pi");
    int pi = r.elements[0], tau = r.elements[2];
    CHECK(c.group()->commutes(tau, pi));
    check_verified(r);
  }
}
