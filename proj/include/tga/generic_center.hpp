#pragma once
#include <vector>

#include "tga/cocycle.hpp"
#include "tga/identities.hpp"

namespace tga {

// Integer exponent matrix of the generic cocycle's values: one row per
// ordered pair (g, h) holding the t-exponents of s(g, h) over the columns
// t_e, t_a, ... (one column per group element, identity included).
std::vector<std::vector<long>> exponent_matrix(const GenericCocycle& s);

// Rank over the integers of the multiplicative group generated by the
// t-parts of the generic values (the free part of the value group).
long rank_of_Yf(const GenericCocycle& s);

// Generator of the torsion of the value group: the roots of unity reached
// by products of generic values whose t-exponents cancel, computed from the
// kernel lattice of the exponent matrix applied to the base-value exponents.
RootOfUnity torsion_of_Y(const GenericCocycle& s);

// Invariant factors (nontrivial) of the quotient of the t-exponent lattice
// by the relation rows r_g + r_h - r_{gh}; equals the abelian invariants of
// the group.
std::vector<long> uv_quotient(const Group& g);

// True iff the word's degree product is the identity. When true, the
// product (t_{i1,g1} u_{g1}) ... (t_{im,gm} u_{gm}) is verified to commute
// with every basis element of the generic algebra, coefficient by Laurent
// coefficient; when false and the base cocycle is nondegenerate, a
// non-commuting basis element is verified to exist.
bool central_monomial_check(const GenericCocycle& s,
                            const std::vector<Letter>& word);

}  // namespace tga
