#pragma once
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tga/group.hpp"

namespace tga {

// Basis of a finite abelian group: independent elements whose cyclic spans
// realize the group as their direct product, orders descending (the
// invariant factor profile). math_error if the group is not abelian.
std::vector<int> abelian_basis(const Group& g);

// Orders of the paired invariant factors when the group is a square A x A
// (symmetric type): [d1, d2, ...] descending with factors (d1,d1,d2,d2,...);
// nullopt when the factors do not pair up. input_error if not abelian.
std::optional<std::vector<long>> is_symmetric_type(const Group& a);

// Structural witness for one recognized p-group:
//   type 1: abelian of symmetric type; gammas is a basis with partners
//     adjacent, gamma_pairs the per-pair orders (descending).
//   type 2: (C_{p^n} x| C_{p^n}) x G2 with sigma pi sigma^-1 = pi^{p^s+1},
//     1 <= s < n (s != 1 when p = 2), G2 symmetric of exponent <= p^s.
//   type 3: (C_{2^{n+1}} x| (C_{2^n} x C_2)) x G2 with
//     sigma pi sigma^-1 = pi^3, tau pi tau^-1 = pi^-1, sigma tau = tau sigma,
//     G2 symmetric of exponent <= 2.
// gammas/gamma_pairs describe G2 for types 2 and 3.
struct LambdaComponent {
  int type = 0;
  long p = 0;
  int n = 0, s = 0;
  int pi = -1, sigma = -1, tau = -1;
  std::vector<int> gammas;
  std::vector<long> gamma_pairs;
};

// Verdict for a whole group: every Sylow subgroup must be recognized.
// Component element indices are relative to the Sylow subgroup given by
// sylow_members (ambient element indices, sorted).
struct LambdaWitness {
  bool on_list = false;
  std::string reason;  // set when not on the list
  std::map<long, LambdaComponent> components;
  std::map<long, std::vector<int>> sylow_members;
};

// Recognize a p-group (all elements of prime-power order for one prime);
// nullopt with a reason when it matches none of the three shapes.
std::optional<LambdaComponent> classify_lambda_p(const GroupPtr& p_group,
                                                 std::string* why = nullptr);

// Nilpotency, Sylow decomposition, and per-prime recognition.
LambdaWitness is_on_lambda(const GroupPtr& g);

}  // namespace tga
