#pragma once
// Shared fixtures for the unit tests: the order-36 running example, the
// quaternion group, and a handful of bundled-group builders.

#include <map>
#include <string>
#include <vector>

#include "tga/cocycle.hpp"
#include "tga/group.hpp"
#include "tga/standard_form.hpp"

namespace tga::test {

// S3 acting on C6 through its sign character, with y = z^2 aliased; the
// order-36 group of the running example.
inline std::shared_ptr<Group> make_s3c6_group() {
  auto c3 = Group::cyclic(3, "sigma");
  auto c2 = Group::cyclic(2, "tau");
  auto s3 = Group::semidirect(c3, c2, {{"tau", {{"sigma", "sigma^2"}}}});
  auto c6 = Group::cyclic(6, "z");
  auto g = Group::semidirect(c6, s3,
                             {{"tau", {{"z", "z^5"}}}, {"sigma", {{"z", "z"}}}});
  g->add_alias("y", g->eval_word("z^2"));
  return g;
}

// The nondegenerate cocycle of the running example, induced by the bijective
// crossed homomorphism S3 -> C6.
inline Cocycle make_s3c6_cocycle(const GroupPtr& g) {
  return from_one_cocycle(g, {{"e", "e"},
                              {"tau", "z^5"},
                              {"sigma", "z^2"},
                              {"sigma^2", "z^4"},
                              {"tau*sigma", "z^3"},
                              {"tau*sigma^2", "z"}});
}

// Quaternion group of order 8: elements 1, -1, i, -i, j, -j, k, -k.
inline std::shared_ptr<Group> make_q8() {
  // index: 0=1, 1=-1, 2=i, 3=-i, 4=j, 5=-j, 6=k, 7=-k
  auto neg = [](int x) { return x ^ 1; };
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  // base products on {1, i, j, k} with signs
  auto mul = [&](int a, int b) {
    int sa = a & 1, sb = b & 1;
    int ba = a >> 1, bb = b >> 1;  // 0=1, 1=i, 2=j, 3=k
    static const int prod[4][4] = {{0, 1, 2, 3},
                                   {1, 0, 3, 2},
                                   {2, 3, 0, 1},
                                   {3, 2, 1, 0}};
    static const int sign[4][4] = {{0, 0, 0, 0},
                                   {0, 1, 0, 1},
                                   {0, 1, 1, 0},
                                   {0, 0, 1, 1}};
    int r = prod[ba][bb] << 1;
    int s = sa ^ sb ^ sign[ba][bb];
    return s ? neg(r) : r;
  };
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) t[a][b] = mul(a, b);
  return Group::from_table(t, {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

inline std::shared_ptr<Group> make_c9sc9() {
  return Group::semidirect(Group::cyclic(9, "pi"), Group::cyclic(9, "sigma"),
                           {{"sigma", {{"pi", "pi^4"}}}});
}

inline std::shared_ptr<Group> make_c8s_c4xc2() {
  auto acting = Group::direct(Group::cyclic(4, "sigma"), Group::cyclic(2, "tau"));
  return Group::semidirect(Group::cyclic(8, "pi"), acting,
                           {{"sigma", {{"pi", "pi^3"}}}, {"tau", {{"pi", "pi^7"}}}});
}

inline std::shared_ptr<Group> make_c4s_c2xc2() {
  auto acting = Group::direct(Group::cyclic(2, "sigma"), Group::cyclic(2, "tau"));
  return Group::semidirect(Group::cyclic(4, "pi"), acting,
                           {{"sigma", {{"pi", "pi^3"}}}, {"tau", {{"pi", "pi^3"}}}});
}

}  // namespace tga::test
