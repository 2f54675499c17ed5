#pragma once
#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tga {

using Rat = mpq_class;
using Int = mpz_class;

long gcd_long(long a, long b);
long lcm_long(long a, long b);
long euler_phi(long n);
std::vector<long> divisors(long n);
// Inverse of a modulo m, for gcd(a, m) = 1.
long inv_mod(long a, long m);
long pow_mod(long base, long exp, long m);

// Cyclotomic polynomial Phi_n, monic with integer coefficients, degree phi(n).
// Index i holds the coefficient of x^i.
const std::vector<Int>& cyclotomic_polynomial(long n);

// An element of the cyclotomic field Q(zeta_N), stored in the power basis
// 1, zeta, ..., zeta^{phi(N)-1} of Q(zeta_N) with N the stored conductor.
// The stored conductor is not forced to be minimal; equality and rendering
// are conductor-independent.
class Cyclo {
 public:
  Cyclo();  // zero
  Cyclo(long v);
  explicit Cyclo(const Rat& v);
  static Cyclo root(long n, long e = 1);  // zeta_n^e

  long conductor() const { return cond_; }
  const std::vector<Rat>& coords() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  Rat rational_value() const;  // requires is_rational()

  Cyclo operator-() const;
  Cyclo& operator+=(const Cyclo& o);
  Cyclo& operator-=(const Cyclo& o);
  Cyclo& operator*=(const Cyclo& o);
  friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
  friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
  friend Cyclo operator*(Cyclo a, const Cyclo& b) { return a *= b; }
  friend Cyclo operator/(const Cyclo& a, const Cyclo& b) { return a * b.inv(); }
  bool operator==(const Cyclo& o) const;
  bool operator!=(const Cyclo& o) const { return !(*this == o); }

  Cyclo inv() const;       // requires nonzero
  Cyclo pow(long k) const;  // k may be negative (requires nonzero then)
  // Galois action zeta_N -> zeta_N^j on the stored conductor N; gcd(j,N)=1.
  Cyclo galois(long j) const;

  // If the value is a root of unity, its order; otherwise nullopt.
  std::optional<long> root_order() const;
  // If the value is a root of unity, the pair (order m, exponent e) with the
  // value equal to zeta_m^e, 0 <= e < m and gcd(e, m) = 1 unless m = 1.
  std::optional<std::pair<long, long>> as_root_of_unity() const;

  // Canonical rendering at the minimal conductor: root-of-unity values as
  // "z12^5", "1", "-1"; rationals as "1/2", "0"; anything else as a
  // power-basis sum like "1 - z3".
  std::string str() const;

  // Embed into Q(zeta_n); requires conductor() | n.
  Cyclo lifted(long n) const;

 private:
  long cond_;
  std::vector<Rat> c_;  // size phi(cond_)

  // Build a value of conductor n from a list of (exponent, coefficient)
  // meaning sum coeff * zeta_n^exponent.
  static Cyclo from_power_terms(long n, const std::vector<std::pair<long, Rat>>& terms);
  friend class CycloBuilder;
};

// e^{2 pi i num/den} as a reduced fraction num/den mod 1; den >= 1.
class RootOfUnity {
 public:
  RootOfUnity() : num_(0), den_(1) {}
  RootOfUnity(long num, long den);

  long order() const { return den_; }
  long exponent() const { return num_; }
  bool is_one() const { return den_ == 1; }

  RootOfUnity operator*(const RootOfUnity& o) const;
  RootOfUnity inv() const;
  RootOfUnity pow(long k) const;
  // The canonical k-th root: exponent num/(den*k) of a full turn.
  RootOfUnity kth_root(long k) const;
  bool operator==(const RootOfUnity& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RootOfUnity& o) const { return !(*this == o); }
  bool operator<(const RootOfUnity& o) const {  // arbitrary total order
    return den_ != o.den_ ? den_ < o.den_ : num_ < o.num_;
  }

  Cyclo to_cyclo() const;
  std::string str() const;  // "1", "-1", "z12^5"
  static std::optional<RootOfUnity> parse(const std::string& s);

 private:
  long num_, den_;
  void reduce();
};

// Discrete log of v in the cyclic group generated by base: smallest k >= 0
// with base^k = v, or nullopt.
std::optional<long> dlog(const RootOfUnity& base, const RootOfUnity& v);

}  // namespace tga
