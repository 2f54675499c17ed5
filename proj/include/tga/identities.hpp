#pragma once
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tga/cocycle.hpp"
#include "tga/cyclo.hpp"
#include "tga/group.hpp"
#include "tga/twisted.hpp"

namespace tga {

// A letter x_{ig}: variable index i >= 1 together with a group element.
using Letter = std::pair<int, int>;

// A word x_{i1 g1} ... x_{ik gk} in the free graded algebra.
struct GradedMonomial {
  std::vector<Letter> letters;

  size_t length() const { return letters.size(); }
  // Product of the letters' group elements.
  int degree(const Group& g) const;
  std::vector<int> degrees() const;

  bool operator==(const GradedMonomial& o) const { return letters == o.letters; }
  bool operator!=(const GradedMonomial& o) const { return letters != o.letters; }
  std::string str(const Group& g) const;  // "x(1,a)*x(2,b)", "1" when empty
};

// Length first, then lexicographic on (index, element) pairs.
struct MonoLess {
  bool operator()(const GradedMonomial& a, const GradedMonomial& b) const;
};

// Sum of graded monomials with cyclotomic coefficients over a fixed group.
class GradedPolynomial {
 public:
  GradedPolynomial() = default;
  explicit GradedPolynomial(GroupPtr g) : g_(std::move(g)) {}
  static GradedPolynomial monomial(GroupPtr g, GradedMonomial m, Cyclo coef = Cyclo(1));

  const GroupPtr& group() const { return g_; }
  const std::map<GradedMonomial, Cyclo, MonoLess>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  GradedPolynomial operator-() const;
  GradedPolynomial& operator+=(const GradedPolynomial& o);
  GradedPolynomial& operator-=(const GradedPolynomial& o);
  GradedPolynomial& operator*=(const GradedPolynomial& o);
  GradedPolynomial& operator*=(const Cyclo& s);
  friend GradedPolynomial operator+(GradedPolynomial a, const GradedPolynomial& b) { return a += b; }
  friend GradedPolynomial operator-(GradedPolynomial a, const GradedPolynomial& b) { return a -= b; }
  friend GradedPolynomial operator*(GradedPolynomial a, const GradedPolynomial& b) { return a *= b; }
  friend GradedPolynomial operator*(const Cyclo& s, GradedPolynomial a) { return a *= s; }
  bool operator==(const GradedPolynomial& o) const { return t_ == o.t_; }
  bool operator!=(const GradedPolynomial& o) const { return !(*this == o); }
  GradedPolynomial pow(long k) const;  // k >= 0

  std::string str() const;

 private:
  GroupPtr g_;
  std::map<GradedMonomial, Cyclo, MonoLess> t_;
};

// Parse a polynomial literal like
//   "x(1,sigma)*x(1,tau)^2 - w3 * x(1,tau)*x(1,y)*x(1,sigma)"
// with group words inside x(i,...) and scalar literals as in element parsing.
GradedPolynomial parse_polynomial(const GroupPtr& g, const std::string& text);

// Binomial identity Z1 - coeff * Z2 where Z2 is the pi-rearrangement of Z1
// (z2.letters[i] = z1.letters[pi[i]]) and coeff is the quotient of the
// path coefficients of the two degree sequences.
struct ElementaryIdentity {
  GradedMonomial z1, z2;
  std::vector<int> pi;
  RootOfUnity coeff;

  GradedPolynomial to_polynomial(const Cocycle& c) const;
  bool operator==(const ElementaryIdentity& o) const {
    return z1 == o.z1 && z2 == o.z2 && pi == o.pi && coeff == o.coeff;
  }
};

// Permutation pi with z2.letters[i] = z1.letters[pi[i]] (first-fit, hence
// deterministic) when the words are congruent: equal length, equal letter
// multiset, and equal degree product. nullopt otherwise.
std::optional<std::vector<int>> is_congruent(const Group& g, const GradedMonomial& z1,
                                             const GradedMonomial& z2);
// Only the degree-product condition.
bool is_weakly_congruent(const Group& g, const GradedMonomial& z1, const GradedMonomial& z2);

// Build the elementary identity of z1 and its pi-rearrangement; input_error
// if the rearrangement is not congruent to z1.
ElementaryIdentity elementary_identity(const Cocycle& c, const GradedMonomial& z1,
                                       const std::vector<int>& pi);

// Exact decision: p is a graded identity of the twisted algebra iff it
// vanishes under the generic substitution x_{ig} -> t_{ig} u_g.
bool decide_identity(const GradedPolynomial& p, const Cocycle& c);
// The generic substitution itself (zero iff p is an identity).
GenericElement substitute_generic(const GradedPolynomial& p, const AlgebraPtr& alg);
// Concrete substitution x_{ig} -> scalars[(i,g)] u_g; letters without an
// assigned scalar get 1.
TwistedElement evaluate(const GradedPolynomial& p, const AlgebraPtr& alg,
                        const std::map<Letter, Cyclo>& scalars);

// Partition of the terms into congruence classes (each class summed into
// one homogeneous polynomial), ordered by smallest monomial.
std::vector<GradedPolynomial> homogeneous_decomposition(const GradedPolynomial& p);
// Coarser partition by degree product only.
std::vector<GradedPolynomial> weak_homogeneous_decomposition(const GradedPolynomial& p);

// Relabel variable indices so that, per group element, distinct indices
// appear in first-occurrence order 1, 2, ...
GradedMonomial canonical_relabel(const GradedMonomial& z);
// Simultaneous relabeling of a congruent pair (scan z1 then z2).
std::pair<GradedMonomial, GradedMonomial> canonical_relabel_pair(const GradedMonomial& z1,
                                                                 const GradedMonomial& z2);

// All elementary identities with canonically labeled Z1 of length <= max_len
// over variable indices 1..max_index, Z2 ranging over the distinct congruent
// rearrangements != Z1; deterministic order (Z1 ascending, then Z2).
// canonical_z1 = false enumerates every labeling of Z1 instead (the raw,
// redundancy-heavy set). Throws input_error when more than cap identities
// would be produced.
std::vector<ElementaryIdentity> enumerate_E(const Cocycle& c, int max_len, int max_index,
                                            long cap = 1000000, bool canonical_z1 = true);

// The group generated by the coefficients of all elementary identities:
// mu = { c(B) }, computed exactly from the finite group of monomials
// zeta^e u_g (its commutator subgroup's scalar part). field_conductor is
// the minimal m with Q(mu) = Q(zeta_m).
struct Mu {
  RootOfUnity generator;
  long order = 1;
  long field_conductor = 1;
};
Mu compute_mu(const Cocycle& c);

}  // namespace tga
