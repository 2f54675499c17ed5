#pragma once
#include <string>
#include <vector>

#include "tga/cocycle.hpp"
#include "tga/identities.hpp"

namespace tga {

// One rewriting move on a pair of congruent words (W_L, W_R), tracked with
// the coefficient kappa = path(W_L) / path(W_R) of the current binomial.
//
//   Contract: the same ordered letter pair sits at (left_pos, left_pos+1)
//     in W_L and (right_pos, right_pos+1) in W_R; both occurrences are
//     replaced by the single fresh letter `merged` (same group element
//     product). kappa is unchanged. Undoing the move is the substitution
//     x_merged -> x_a x_b, so the shorter identity implies the longer one.
//   Swap: the adjacent letters at (pos, pos+1) on one side (0 = left,
//     1 = right) are exchanged; their degrees must commute. This applies
//     the length-2 elementary identity `aux`, and kappa is multiplied by
//     `factor` (the pairing, inverted on the right side).
struct ReductionStep {
  enum Kind { kContract, kSwap };
  Kind kind;
  int left_pos = -1, right_pos = -1;  // contract
  Letter merged{0, 0};                // contract: fresh letter
  int side = -1, pos = -1;            // swap
  ElementaryIdentity aux;             // swap: invoked length-2 identity
  RootOfUnity factor;                 // multiplier applied to kappa
};

// Certificate that `input` reduces to `final_identity` (length <= ord(G),
// canonically relabeled) through the listed moves.
struct ReductionCertificate {
  ElementaryIdentity input;
  std::vector<ReductionStep> steps;
  ElementaryIdentity final_identity;
};

// Reduce an elementary identity to one of length <= ord(G) by contracting
// matching adjacent pairs, using swaps of commuting adjacent letters to
// expose such pairs. Identities already short enough get an empty
// certificate. math_error when no move applies (cannot happen for abelian
// groups, where every swap is available).
ReductionCertificate reduce_to_generators(const ElementaryIdentity& input, const Cocycle& c);

// Forward replay: verifies the input is elementary, re-applies every step
// (checking positions, letters, commutation, the invoked identities, and
// the kappa bookkeeping against freshly computed path coefficients), and
// checks the final identity. Returns the intermediate identities from input
// to final inclusive; throws math_error on any mismatch.
std::vector<ElementaryIdentity> replay(const ReductionCertificate& cert, const Cocycle& c);

}  // namespace tga
