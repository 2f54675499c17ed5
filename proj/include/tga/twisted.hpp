#pragma once
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tga/cocycle.hpp"
#include "tga/cyclo.hpp"
#include "tga/errors.hpp"
#include "tga/group.hpp"
#include "tga/laurent.hpp"

namespace tga {

// A twisted group algebra is determined by its cocycle (which carries the
// group); elements share the cocycle through this handle.
using AlgebraPtr = std::shared_ptr<const Cocycle>;
inline AlgebraPtr make_algebra(Cocycle c) {
  c.ensure_valid();
  return std::make_shared<const Cocycle>(std::move(c));
}

// Sparse element sum_g coeffs[g] * u_g with u_g u_h = c(g,h) u_{gh}.
// Coeff is Cyclo (concrete scalars) or Laurent (generic coefficients).
// A default-constructed element is the zero of any algebra.
template <class Coeff>
class TwistedElem {
 public:
  TwistedElem() = default;
  explicit TwistedElem(AlgebraPtr alg) : alg_(std::move(alg)) {}
  static TwistedElem unit(AlgebraPtr alg, int g, Coeff coef = Coeff(1)) {
    TwistedElem x(std::move(alg));
    check_input(g >= 0 && g < x.alg_->group()->size(), "element: index out of range");
    if (!coef.is_zero()) x.c_[g] = std::move(coef);
    return x;
  }

  const AlgebraPtr& algebra() const { return alg_; }
  const std::map<int, Coeff>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  Coeff coeff(int g) const {
    auto it = c_.find(g);
    return it == c_.end() ? Coeff() : it->second;
  }

  TwistedElem operator-() const {
    TwistedElem r(*this);
    for (auto& [g, v] : r.c_) v = -v;
    return r;
  }
  TwistedElem& operator+=(const TwistedElem& o) {
    adopt(o);
    for (const auto& [g, v] : o.c_) {
      auto it = c_.find(g);
      if (it == c_.end()) {
        c_[g] = v;
      } else {
        it->second += v;
        if (it->second.is_zero()) c_.erase(it);
      }
    }
    return *this;
  }
  TwistedElem& operator-=(const TwistedElem& o) { return *this += -o; }
  TwistedElem& operator*=(const TwistedElem& o) {
    adopt(o);
    std::map<int, Coeff> r;
    if (alg_) {
      const Group& grp = *alg_->group();
      for (const auto& [g1, v1] : c_)
        for (const auto& [g2, v2] : o.c_) {
          int k = grp.op(g1, g2);
          Coeff term = v1 * v2 * Coeff(alg_->at(g1, g2).to_cyclo());
          auto it = r.find(k);
          if (it == r.end()) {
            if (!term.is_zero()) r[k] = std::move(term);
          } else {
            it->second += term;
            if (it->second.is_zero()) r.erase(it);
          }
        }
    }
    c_ = std::move(r);
    return *this;
  }
  friend TwistedElem operator+(TwistedElem a, const TwistedElem& b) { return a += b; }
  friend TwistedElem operator-(TwistedElem a, const TwistedElem& b) { return a -= b; }
  friend TwistedElem operator*(TwistedElem a, const TwistedElem& b) { return a *= b; }
  bool operator==(const TwistedElem& o) const { return c_ == o.c_; }
  bool operator!=(const TwistedElem& o) const { return !(*this == o); }

  // Inverse of a unit monomial alpha u_g: alpha^{-1} c(g,g^{-1})^{-1} u_{g^{-1}}.
  TwistedElem inv() const {
    check_input(c_.size() == 1, "element inverse: not a single monomial");
    const auto& [g, v] = *c_.begin();
    const Group& grp = *alg_->group();
    int gi = grp.inv(g);
    Coeff w = v.inv() * Coeff(alg_->at(g, gi).to_cyclo().inv());
    return unit(alg_, gi, std::move(w));
  }
  TwistedElem pow(long k) const {
    if (k < 0) return inv().pow(-k);
    check_input(alg_ != nullptr, "element power: zero element has no algebra");
    TwistedElem r = unit(alg_, 0);
    TwistedElem b = *this;
    for (; k > 0; k >>= 1) {
      if (k & 1) r *= b;
      if (k > 1) b *= b;
    }
    return r;
  }

  std::string str() const {
    if (c_.empty()) return "0";
    std::string s;
    const Group& grp = *alg_->group();
    for (const auto& [g, v] : c_) {
      if (!s.empty()) s += " + ";
      std::string cs = v.str();
      if (cs != "1") {
        if (cs.find(" + ") != std::string::npos) cs = "(" + cs + ")";
        s += cs + " * ";
      }
      s += "u(" + grp.name(g) + ")";
    }
    return s;
  }

 private:
  AlgebraPtr alg_;
  std::map<int, Coeff> c_;

  void adopt(const TwistedElem& o) {
    if (!alg_) alg_ = o.alg_;
    check_input(!o.alg_ || o.alg_ == alg_, "elements from different algebras");
  }
};

using TwistedElement = TwistedElem<Cyclo>;
using GenericElement = TwistedElem<Laurent>;

template <class Coeff>
TwistedElem<Coeff> multiply(TwistedElem<Coeff> x, const TwistedElem<Coeff>& y) {
  return x *= y;
}

// Scalar s with u_g u_h = s * u_h u_g, computed by actual algebra products;
// requires gh = hg. Agrees with Cocycle::pairing.
RootOfUnity group_commutator(const AlgebraPtr& alg, int g, int h);

// Basis of {x : x u_h = u_h x} solved against a generating set of the group
// (sufficient, since the u_h multiplicatively span the algebra); pass
// against_all to solve against every basis element instead.
std::vector<TwistedElement> center_basis(const AlgebraPtr& alg, bool against_all = false);

// Matrix of left multiplication by x on the basis {u_h}: column h holds the
// coefficients of x * u_h.
std::vector<std::vector<Cyclo>> left_matrix(const TwistedElement& x);
// Left multiplication matrices of all basis elements u_g.
std::vector<std::vector<std::vector<Cyclo>>> regular_representation(const AlgebraPtr& alg);

// Least r <= bound with x^r = 0 (and x^{r-1} != 0), nullopt if none.
template <class Coeff>
std::optional<long> nilpotency_index(const TwistedElem<Coeff>& x, long bound) {
  check_input(bound >= 1, "nilpotency bound must be positive");
  TwistedElem<Coeff> p = x;
  for (long r = 1; r <= bound; ++r) {
    if (p.is_zero()) return r;
    if (r < bound) p *= x;
  }
  return std::nullopt;
}

// Parse an element literal like "u(sigma) - u(y)*u(sigma)" or
// "z8^3 * u(a^2) + 1/2 * u(e)"; group words inside u(...) use the group's
// parse names, scalars are integers, fractions, or root-of-unity literals.
TwistedElement parse_element(const AlgebraPtr& alg, const std::string& text);

}  // namespace tga
