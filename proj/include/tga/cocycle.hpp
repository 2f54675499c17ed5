#pragma once
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "tga/cyclo.hpp"
#include "tga/group.hpp"
#include "tga/laurent.hpp"

namespace tga {

struct CocycleViolation {
  int g, h, k;        // k = -1 for normalization violations
  std::string what;
};

struct NondegeneracyReport {
  bool nondegenerate = false;
  // witness[g] = first element of the centralizer of g whose pairing with g
  // is nontrivial (g > 0); -1 where none exists.
  std::vector<int> witness;
  // Non-identity elements with trivial pairing against their whole
  // centralizer; empty exactly when the cocycle is nondegenerate.
  std::vector<int> radical;
};

// A 2-cocycle on a finite group with values that are roots of unity,
// stored as a full n-by-n table.
class Cocycle {
 public:
  Cocycle(GroupPtr g, std::vector<RootOfUnity> values);
  static Cocycle trivial(GroupPtr g);
  // Entries (i, j, value); omitted entries default to 1.
  static Cocycle from_entries(GroupPtr g,
                              const std::vector<std::tuple<int, int, RootOfUnity>>& entries);

  const GroupPtr& group() const { return g_; }
  const RootOfUnity& at(int g, int h) const { return v_[(size_t)g * n_ + h]; }

  // Cocycle condition and normalization violations (empty when valid).
  std::vector<CocycleViolation> validate() const;
  bool is_valid() const { return validate().empty(); }
  // Throws input_error when invalid.
  void ensure_valid() const;

  NondegeneracyReport nondegeneracy() const;
  bool is_nondegenerate() const { return nondegeneracy().nondegenerate; }

  // Commutator pairing c(g,h)/c(h,g); requires gh = hg.
  RootOfUnity pairing(int g, int h) const;
  // Path coefficient c(g1,...,gk) = c(g1,g2) c(g1g2,g3) ... ; 1 for k <= 1.
  RootOfUnity path(const std::vector<int>& gs) const;
  int product(const std::vector<int>& gs) const;

  // Multiply by the coboundary of lambda: c'(g,h) = lambda_g lambda_h
  // lambda_{gh}^{-1} c(g,h). Requires lambda[0] = 1 to stay normalized.
  Cocycle coboundary_modify(const std::vector<RootOfUnity>& lambda) const;
  // Push forward along an automorphism phi (full element map):
  // c'(g,h) = c(phi^{-1} g, phi^{-1} h).
  Cocycle pushforward(const std::vector<int>& phi) const;
  // Restriction to a subgroup: sub must be the group returned by
  // Group::subgroup(members) with `members` its embedding.
  Cocycle restrict_to(GroupPtr sub, const std::vector<int>& members) const;

  // lcm of the orders of all values (the natural root-of-unity conductor).
  long value_order_lcm() const;

 private:
  GroupPtr g_;
  int n_;
  std::vector<RootOfUnity> v_;
};

// Cocycle on G induced from a cocycle on a quotient G/N via the projection
// proj (element -> quotient index): c(g,h) = cq(proj g, proj h). Always
// degenerate for nontrivial N.
Cocycle inflate(GroupPtr g, const Cocycle& cq, const std::vector<int>& proj);

// The bijective-1-cocycle construction on a semidirect product H ⋉ A with A
// cyclic: pi maps each acting element (word over H's generators) to an
// element of A (word over A's generator), and
// c(h1 a1, h2 a2) = chi_{pi(h2)}(phi_{h2}(a1)) with chi the duality of A.
// Checks that pi is a bijective 1-cocycle and that the result is a valid
// cocycle.
Cocycle from_one_cocycle(GroupPtr g, const std::map<std::string, std::string>& pi);

// Seeded random perturbation within the orbit that standardization undoes:
// multiply by the coboundary of random root-of-unity scalars, then push
// forward along a random automorphism (found by trial generator images,
// identity when none is found). Deterministic for a fixed seed; preserves
// validity and nondegeneracy.
Cocycle perturb_cocycle(const Cocycle& c, unsigned long long seed);

// The generic cocycle s(g,h) = (t_g t_h / t_{gh}) c(g,h) with one Laurent
// indeterminate t_g per group element (including the identity).
struct GenericCocycle {
  Cocycle base;
  explicit GenericCocycle(Cocycle c) : base(std::move(c)) {}
  Laurent value(int g, int h) const;
  std::vector<CocycleViolation> validate() const;
};

}  // namespace tga
