#pragma once
#include <map>
#include <string>
#include <vector>

#include "tga/cyclo.hpp"

namespace tga {

// Global registry of indeterminate names; ids are dense and stable within a
// process. All ordering exposed to callers is by name, not id, so output is
// independent of interning order.
int intern_name(const std::string& name);
const std::string& interned_name(int id);

// Conventional indeterminate names for twisted-algebra scalars.
std::string t_name(const std::string& group_elt);          // "t(g)"
std::string t_name(int index, const std::string& group_elt);  // "t(i,g)"

// A Laurent monomial: sorted (name id, nonzero exponent) pairs.
struct LMono {
  std::vector<std::pair<int, int>> e;
  bool operator==(const LMono& o) const { return e == o.e; }
};

// Name-lexicographic order on monomials (deterministic across runs).
struct LMonoLess {
  bool operator()(const LMono& a, const LMono& b) const;
};

// Sparse Laurent polynomial over the cyclotomic field.
class Laurent {
 public:
  Laurent() = default;  // zero
  Laurent(long v);
  explicit Laurent(const Cyclo& v);
  static Laurent variable(const std::string& name, int exp = 1);

  bool is_zero() const { return t_.empty(); }
  bool is_one() const;
  bool is_monomial() const { return t_.size() == 1; }
  const std::map<LMono, Cyclo, LMonoLess>& terms() const { return t_; }

  Laurent operator-() const;
  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent& operator*=(const Laurent& o);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(Laurent a, const Laurent& b) { return a *= b; }
  bool operator==(const Laurent& o) const { return t_ == o.t_; }
  bool operator!=(const Laurent& o) const { return !(*this == o); }

  // Inverse of a single-term Laurent polynomial.
  Laurent inv() const;
  Laurent pow(long k) const;

  // Total substitution of values for every indeterminate that occurs.
  // Missing assignments or zero raised to a negative power are input errors.
  Cyclo substitute(const std::map<std::string, Cyclo>& values) const;

  // E.g. "z3^2 * t(a)^1 * t(ab)^-1"; multi-term sums join with " + ".
  std::string str() const;

 private:
  std::map<LMono, Cyclo, LMonoLess> t_;
  void prune(const LMono& m);
};

}  // namespace tga
