#pragma once
#include <string>
#include <vector>

#include "tga/cocycle.hpp"
#include "tga/cyclo.hpp"
#include "tga/group.hpp"
#include "tga/lambda.hpp"

namespace tga {

// A scalar multiple s * u_g of a basis element of the twisted group algebra.
struct Rep {
  RootOfUnity s;
  int g = 0;
};

// Arithmetic with scalar multiples of basis elements.
class RepCalc {
 public:
  explicit RepCalc(const Cocycle* c) : c_(c) {}
  Rep unit(int g) const { return {RootOfUnity(), g}; }
  Rep mul(const Rep& a, const Rep& b) const;
  Rep inv(const Rep& a) const;
  Rep pow(Rep a, long k) const;          // k may be negative
  Rep conj(const Rep& a, const Rep& b) const;  // a b a^{-1}
  Rep commutator(const Rep& a, const Rep& b) const;  // a b a^{-1} b^{-1}

 private:
  const Cocycle* c_;
};

// One structural move on the generating set. When the move substitutes
// generators (after is not a permutation of before) the element map
// before[i] -> after[i] has been verified to extend to an automorphism of
// the group; otherwise it only renames roles within the same set.
struct AutoStep {
  std::string description;
  std::vector<std::string> roles;
  std::vector<int> before, after;
};

struct RelationCheck {
  std::string relation;
  bool holds = false;
};

// Outcome of driving a nondegenerate cocycle to its standard presentation:
// final role elements with representative scalars (lambda_g u_g), the moves
// taken, and the verified defining relations of the twisted algebra.
struct StandardFormResult {
  int case_tag = 0;  // 1 abelian, 2 p^n x| p^n, 3 2^{n+1} x| (2^n x 2), 4 = 3 with n = 1
  long p = 0;
  int n = 0, s = 0, m = 0;  // m = number of partner pairs
  RootOfUnity epsilon;      // distinguished primitive root for the relations
  std::vector<std::string> roles;
  std::vector<int> elements;
  std::vector<RootOfUnity> scalars;
  std::vector<AutoStep> steps;
  std::vector<RelationCheck> relations;
  bool verified = false;
};

// Representative scalars lambda with (lambda_g u_g)^{ord g} = 1, aligned
// with the given elements (canonical choice).
std::vector<RootOfUnity> normalize_orders(const Cocycle& c,
                                          const std::vector<int>& gens);

// Partner basis extraction on a commuting member set: returns elements
// (a1, b1, a2, b2, ...) spanning the set with pairing(a_k, b_k) exactly the
// canonical primitive root of its order, all other mutual pairings trivial,
// pair orders descending. Candidates from `prefer` are tried first so an
// already-standard basis is returned unchanged. math_error when the pairing
// is degenerate on the set.
std::vector<int> greedy_symplectic(const Cocycle& c, std::vector<int> members,
                                   const std::vector<int>& prefer);

// The four standardization routines. Inputs are checked (input_error for a
// witness that does not satisfy its presentation, math_error when the
// cocycle is degenerate or a nondegeneracy-backed assertion fails).
StandardFormResult standardize_abelian(const Cocycle& c,
                                       const std::vector<int>& gammas);
StandardFormResult standardize_case2(const Cocycle& c, const LambdaComponent& w);
StandardFormResult standardize_case3(const Cocycle& c, const LambdaComponent& w);
StandardFormResult standardize_case4(const Cocycle& c, const LambdaComponent& w);

// Recompute the defining relations of the standard presentation from the
// result's roles and scalars against the given cocycle.
std::vector<RelationCheck> verify_relations(const StandardFormResult& r,
                                            const Cocycle& c);

// Recognition plus per-Sylow standardization of the restricted cocycle.
struct SylowStandardization {
  long p = 0;
  std::vector<int> members;  // ambient indices of the Sylow subgroup
  Cocycle restricted;        // the cocycle `result` refers to
  StandardFormResult result;
};
std::vector<SylowStandardization> standardize(const Cocycle& c);

// The distinguished nondegenerate cocycle of a recognized group, built from
// the standard presentation scalars of each Sylow component (symmetric
// bicharacter on the partner pairs, conjugation scalars on the semidirect
// cores) and combined multiplicatively over the commuting Sylow parts.
// input_error when the group is not on the recognized list; the result is
// validated and nondegenerate by construction.
Cocycle standard_cocycle(const GroupPtr& g);

}  // namespace tga
