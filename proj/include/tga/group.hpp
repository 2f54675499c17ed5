#pragma once
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace tga {

class Group;
using GroupPtr = std::shared_ptr<const Group>;

// Structure retained when a group is built as normal ⋊ acting. Elements of
// the product are pairs (h, a), h from the acting part, a from the normal
// part, standing for the product h·a; multiplication is
// (h1·a1)(h2·a2) = (h1h2)·((h2^{-1}·a1)·a2), so conjugation by an acting
// element realizes the action automorphism.
struct SemidirectInfo {
  GroupPtr normal, acting;
  std::vector<int> pair_to_elt;             // [h * |A| + a] -> element
  std::vector<int> h_part, a_part;          // element -> parts
  std::vector<std::vector<int>> act;        // act[h][a] = phi_h(a)
  std::vector<int> normal_embed, acting_embed;
};

// A finite group given by its multiplication table. Element 0 is the
// identity. Construction always validates the table (fully up to order 256,
// with a deterministic associativity sample beyond that).
class Group {
 public:
  static std::shared_ptr<Group> from_table(std::vector<std::vector<int>> table,
                                           std::vector<std::string> names = {});
  static std::shared_ptr<Group> cyclic(int n, const std::string& gen = "a");
  static std::shared_ptr<Group> direct(GroupPtr a, GroupPtr b);
  // action: acting-generator name -> (normal-generator name -> image word).
  static std::shared_ptr<Group> semidirect(
      GroupPtr normal, GroupPtr acting,
      const std::map<std::string, std::map<std::string, std::string>>& action);

  int size() const { return n_; }
  int op(int a, int b) const { return table_[a][b]; }
  int inv(int a) const { return inv_[a]; }
  int pow(int a, long k) const;
  int element_order(int a) const { return order_[a]; }
  int conj(int h, int a) const { return op(op(h, a), inv(h)); }
  int commutator(int a, int b) const { return op(op(a, b), op(inv(a), inv(b))); }
  bool commutes(int a, int b) const { return op(a, b) == op(b, a); }

  const std::string& name(int a) const { return names_[a]; }
  const std::vector<std::pair<std::string, int>>& generators() const { return gens_; }
  // Names usable in element words: generators, aliases, "e".
  const std::map<std::string, int>& parse_names() const { return parse_names_; }
  void add_alias(const std::string& name, int elt);
  // Evaluate a word like "a^2*b^-1" over parse names.
  int eval_word(const std::string& word) const;

  bool is_abelian() const;
  bool is_nilpotent() const;
  std::vector<int> closure(std::vector<int> gens) const;  // sorted members
  std::vector<int> centralizer(const std::vector<int>& elts) const;
  std::vector<int> center() const;
  std::vector<int> derived_subgroup() const;
  // Invariant factors d1 | d2 | ... of G/[G,G].
  std::vector<long> abelian_invariants() const;
  // prime -> sorted Sylow p-subgroup members; math_error if not nilpotent.
  std::map<long, std::vector<int>> sylow_decomposition() const;

  std::shared_ptr<Group> quotient(const std::vector<int>& normal_members,
                                  std::vector<int>* proj = nullptr) const;
  std::shared_ptr<Group> subgroup(const std::vector<int>& members,
                                  std::vector<int>* embed = nullptr) const;
  // perm[old] = new, perm[0] must be 0.
  std::shared_ptr<Group> relabel(const std::vector<int>& perm) const;

  const std::string& structure() const { return structure_; }
  const std::optional<SemidirectInfo>& semidirect_info() const { return semi_; }

 private:
  int n_ = 1;
  std::vector<std::vector<int>> table_;
  std::vector<int> inv_;
  std::vector<int> order_;
  std::vector<std::string> names_;
  std::vector<std::pair<std::string, int>> gens_;
  std::map<std::string, int> parse_names_;
  std::string structure_ = "trivial";
  std::optional<SemidirectInfo> semi_;

  void finish(std::vector<std::string> names);  // validate + caches
};

// Word (list of indices into gens) for every element, via breadth-first
// search; empty word for the identity. math_error if gens do not generate.
std::vector<std::vector<int>> generator_words(const Group& g, const std::vector<int>& gens);

// Extend gens[i] -> images[i] to an automorphism: returns the full element
// map when the extension is a well-defined bijective homomorphism (checked
// against the entire multiplication table), nullopt otherwise.
std::optional<std::vector<int>> extend_generator_map(const Group& g,
                                                     const std::vector<int>& gens,
                                                     const std::vector<int>& images);

// Invariant factors of the free abelian group on all elements of g modulo
// the relations r_a + r_b - r_{ab}; equals abelian_invariants of g.
std::vector<long> relation_lattice_invariants(const Group& g);

}  // namespace tga
