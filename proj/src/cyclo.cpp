#include "tga/cyclo.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "tga/errors.hpp"

namespace tga {

long gcd_long(long a, long b) { return std::gcd(a, b); }

long lcm_long(long a, long b) {
  check_input(a != 0 && b != 0, "lcm of zero");
  return a / std::gcd(a, b) * b;
}

long euler_phi(long n) {
  long r = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      r -= r / p;
    }
  }
  if (n > 1) r -= r / n;
  return r;
}

std::vector<long> divisors(long n) {
  std::vector<long> d;
  for (long i = 1; i * i <= n; ++i) {
    if (n % i == 0) {
      d.push_back(i);
      if (i != n / i) d.push_back(n / i);
    }
  }
  std::sort(d.begin(), d.end());
  return d;
}

long inv_mod(long a, long m) {
  long t = 0, nt = 1, r = m, nr = ((a % m) + m) % m;
  while (nr != 0) {
    long q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  check_math(r == 1, "inv_mod: arguments not coprime");
  return ((t % m) + m) % m;
}

long pow_mod(long base, long exp, long m) {
  check_math(exp >= 0 && m > 0, "pow_mod: bad arguments");
  long r = 1 % m, b = ((base % m) + m) % m;
  while (exp > 0) {
    if (exp & 1) r = (long)((__int128)r * b % m);
    b = (long)((__int128)b * b % m);
    exp >>= 1;
  }
  return r;
}

namespace {

// Exact division of integer polynomials: num / den with den monic.
// Returns the quotient; asserts the remainder is zero.
std::vector<Int> exact_div(std::vector<Int> num, const std::vector<Int>& den) {
  check_math(!den.empty() && den.back() == 1, "exact_div: divisor not monic");
  std::vector<Int> q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Int(0));
  for (long i = (long)num.size() - 1; i >= (long)den.size() - 1; --i) {
    Int f = num[i];
    if (f == 0) continue;
    long shift = i - ((long)den.size() - 1);
    q[shift] = f;
    for (size_t j = 0; j < den.size(); ++j) num[shift + j] -= f * den[j];
  }
  for (const auto& c : num) check_math(c == 0, "exact_div: nonzero remainder");
  while (q.size() > 1 && q.back() == 0) q.pop_back();
  return q;
}

}  // namespace

const std::vector<Int>& cyclotomic_polynomial(long n) {
  static std::mutex mu;
  static std::map<long, std::vector<Int>> cache;
  check_input(n >= 1, "cyclotomic_polynomial: n must be positive");
  std::scoped_lock lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  // Fill in every missing divisor in ascending order; each one only needs
  // strictly smaller divisors, which are already present by then.
  for (long d : divisors(n)) {
    if (cache.count(d)) continue;
    std::vector<Int> poly;
    if (d == 1) {
      poly = {Int(-1), Int(1)};  // x - 1
    } else {
      // (x^d - 1) / prod_{e | d, e < d} Phi_e
      std::vector<Int> num(d + 1, Int(0));
      num[0] = -1;
      num[d] = 1;
      for (long e : divisors(d))
        if (e != d) num = exact_div(std::move(num), cache.at(e));
      poly = std::move(num);
    }
    cache.emplace(d, std::move(poly));
  }
  return cache.at(n);
}

Cyclo::Cyclo() : cond_(1), c_(1, Rat(0)) {}

Cyclo::Cyclo(long v) : cond_(1), c_(1, Rat(v)) {}

Cyclo::Cyclo(const Rat& v) : cond_(1), c_(1, v) {}

Cyclo Cyclo::from_power_terms(long n, const std::vector<std::pair<long, Rat>>& terms) {
  // Accumulate into a degree < n polynomial (zeta_n^n = 1), then reduce
  // modulo Phi_n by polynomial division.
  std::vector<Rat> poly(n, Rat(0));
  for (const auto& [e, coef] : terms) {
    long ee = ((e % n) + n) % n;
    poly[ee] += coef;
  }
  const std::vector<Int>& phi = cyclotomic_polynomial(n);
  long deg = (long)phi.size() - 1;
  for (long i = n - 1; i >= deg; --i) {
    Rat f = poly[i];
    if (f == 0) continue;
    long shift = i - deg;
    for (long j = 0; j <= deg; ++j) poly[shift + j] -= f * Rat(phi[j]);
  }
  Cyclo r;
  r.cond_ = n;
  r.c_.assign(poly.begin(), poly.begin() + deg);
  return r;
}

Cyclo Cyclo::root(long n, long e) {
  check_input(n >= 1, "root of unity: order must be positive");
  return from_power_terms(n, {{e, Rat(1)}});
}

Cyclo Cyclo::lifted(long n) const {
  check_math(n % cond_ == 0, "lifted: conductor must divide target");
  if (n == cond_) return *this;
  std::vector<std::pair<long, Rat>> terms;
  long k = n / cond_;
  for (long e = 0; e < (long)c_.size(); ++e)
    if (c_[e] != 0) terms.push_back({e * k, c_[e]});
  return from_power_terms(n, terms);
}

bool Cyclo::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool Cyclo::is_one() const { return is_rational() && rational_value() == 1; }

bool Cyclo::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rat Cyclo::rational_value() const {
  check_math(is_rational(), "rational_value: value is irrational");
  return c_[0];
}

Cyclo Cyclo::operator-() const {
  Cyclo r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
  long n = lcm_long(cond_, o.cond_);
  Cyclo a = lifted(n), b = o.lifted(n);
  for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
  *this = std::move(a);
  return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) {
  *this += -o;
  return *this;
}

Cyclo& Cyclo::operator*=(const Cyclo& o) {
  long n = lcm_long(cond_, o.cond_);
  Cyclo a = lifted(n), b = o.lifted(n);
  // Convolve in the power basis, then fold exponents via from_power_terms.
  std::vector<Rat> prod(a.c_.size() + b.c_.size(), Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] == 0) continue;
      prod[i + j] += a.c_[i] * b.c_[j];
    }
  }
  std::vector<std::pair<long, Rat>> terms;
  for (size_t e = 0; e < prod.size(); ++e)
    if (prod[e] != 0) terms.push_back({(long)e, prod[e]});
  *this = from_power_terms(n, terms);
  return *this;
}

bool Cyclo::operator==(const Cyclo& o) const {
  long n = lcm_long(cond_, o.cond_);
  return lifted(n).c_ == o.lifted(n).c_;
}

Cyclo Cyclo::inv() const {
  check_math(!is_zero(), "inv: division by zero");
  // Extended Euclid in Q[x] between this value and Phi_N.
  const std::vector<Int>& phi_int = cyclotomic_polynomial(cond_);
  std::vector<Rat> r0(phi_int.size());
  for (size_t i = 0; i < phi_int.size(); ++i) r0[i] = Rat(phi_int[i]);
  std::vector<Rat> r1 = c_;
  while (r1.size() > 1 && r1.back() == 0) r1.pop_back();
  std::vector<Rat> s0 = {Rat(0)}, s1 = {Rat(1)};
  auto deg = [](const std::vector<Rat>& p) { return (long)p.size() - 1; };
  auto trim = [](std::vector<Rat>& p) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
  };
  while (!(r1.size() == 1 && r1[0] == 0)) {
    // Divide r0 by r1.
    std::vector<Rat> rem = r0;
    std::vector<Rat> q(std::max<long>(1, deg(r0) - deg(r1) + 1), Rat(0));
    for (long i = deg(rem); i >= deg(r1) && i >= 0; --i) {
      if (rem[i] == 0) continue;
      Rat f = rem[i] / r1.back();
      long shift = i - deg(r1);
      q[shift] = f;
      for (long j = 0; j <= deg(r1); ++j) rem[shift + j] -= f * r1[j];
    }
    trim(rem);
    // s_{k+1} = s_{k-1} - q * s_k
    std::vector<Rat> s2(std::max(s0.size(), q.size() + s1.size()), Rat(0));
    for (size_t i = 0; i < s0.size(); ++i) s2[i] += s0[i];
    for (size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
    }
    trim(s2);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is the gcd; it must be a nonzero constant.
  check_math(r0.size() == 1 && r0[0] != 0, "inv: value not invertible");
  Cyclo out;
  out.cond_ = cond_;
  out.c_.assign(euler_phi(cond_), Rat(0));
  for (size_t i = 0; i < s0.size() && i < out.c_.size(); ++i) out.c_[i] = s0[i] / r0[0];
  check_math(s0.size() <= out.c_.size(), "inv: cofactor degree out of range");
  return out;
}

Cyclo Cyclo::pow(long k) const {
  Cyclo base = *this;
  if (k < 0) {
    base = base.inv();
    k = -k;
  }
  Cyclo r(1);
  while (k > 0) {
    if (k & 1) r *= base;
    base *= base;
    k >>= 1;
  }
  return r;
}

Cyclo Cyclo::galois(long j) const {
  check_math(gcd_long(((j % cond_) + cond_) % cond_, cond_) == 1 || cond_ == 1,
             "galois: exponent not coprime to conductor");
  std::vector<std::pair<long, Rat>> terms;
  for (long e = 0; e < (long)c_.size(); ++e)
    if (c_[e] != 0) terms.push_back({e * j, c_[e]});
  return from_power_terms(cond_, terms);
}

std::optional<std::pair<long, long>> Cyclo::as_root_of_unity() const {
  if (is_zero()) return std::nullopt;
  // Roots of unity in Q(zeta_N) form mu_M with M = lcm(2, N).
  long m_max = lcm_long(2, cond_);
  for (long m : divisors(m_max)) {
    for (long e = 0; e < m; ++e) {
      if (m > 1 && gcd_long(e, m) != 1) continue;
      if (*this == root(m, e)) return std::make_pair(m, e);
    }
  }
  return std::nullopt;
}

std::optional<long> Cyclo::root_order() const {
  auto r = as_root_of_unity();
  if (!r) return std::nullopt;
  return r->first;
}

namespace {

std::string rat_str(const Rat& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

}  // namespace

std::string Cyclo::str() const {
  if (is_zero()) return "0";
  if (is_rational()) return rat_str(rational_value());
  if (auto r = as_root_of_unity()) return RootOfUnity(r->second, r->first).str();
  // Find the minimal conductor d | N whose Galois group fixes the value.
  long n = cond_;
  std::vector<long> units;
  for (long j = 1; j < n; ++j)
    if (gcd_long(j, n) == 1) units.push_back(j);
  long best = n;
  for (long d : divisors(n)) {
    if (d == n) {
      best = n;
      break;
    }
    bool fixed = true;
    for (long j : units) {
      if (j % d != 1 % d) continue;
      if (galois(j) != *this) {
        fixed = false;
        break;
      }
    }
    if (fixed) {
      best = d;
      break;
    }
  }
  // Express in the power basis of Q(zeta_best) by solving a linear system.
  long phi_d = euler_phi(best);
  std::vector<Cyclo> basis;
  for (long t = 0; t < phi_d; ++t) basis.push_back(root(best, t).lifted(n));
  long rows = (long)c_.size();
  // Augmented matrix [basis columns | value].
  std::vector<std::vector<Rat>> m(rows, std::vector<Rat>(phi_d + 1, Rat(0)));
  for (long r = 0; r < rows; ++r) {
    for (long col = 0; col < phi_d; ++col) m[r][col] = basis[col].coords()[r];
    m[r][phi_d] = c_[r];
  }
  // Gaussian elimination.
  std::vector<long> pivot_of_col(phi_d, -1);
  long rank = 0;
  for (long col = 0; col < phi_d && rank < rows; ++col) {
    long piv = -1;
    for (long r = rank; r < rows; ++r)
      if (m[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    Rat f = m[rank][col];
    for (auto& x : m[rank]) x /= f;
    for (long r = 0; r < rows; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      Rat g = m[r][col];
      for (long cc = col; cc <= phi_d; ++cc) m[r][cc] -= g * m[rank][cc];
    }
    pivot_of_col[col] = rank;
    ++rank;
  }
  std::vector<Rat> coord(phi_d, Rat(0));
  for (long col = 0; col < phi_d; ++col)
    if (pivot_of_col[col] >= 0) coord[col] = m[pivot_of_col[col]][phi_d];
  // Render, exponents ascending.
  std::ostringstream os;
  bool first = true;
  for (long e = 0; e < phi_d; ++e) {
    if (coord[e] == 0) continue;
    Rat a = coord[e];
    bool neg = a < 0;
    Rat mag = neg ? Rat(-a) : a;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    std::string var;
    if (e == 0) {
      os << rat_str(mag);
      continue;
    }
    var = "z" + std::to_string(best);
    if (e != 1) var += "^" + std::to_string(e);
    if (mag == 1)
      os << var;
    else
      os << rat_str(mag) << "*" << var;
  }
  return os.str();
}

RootOfUnity::RootOfUnity(long num, long den) : num_(num), den_(den) { reduce(); }

void RootOfUnity::reduce() {
  check_input(den_ != 0, "root of unity: zero order");
  if (den_ < 0) {
    den_ = -den_;
    num_ = -num_;
  }
  num_ = ((num_ % den_) + den_) % den_;
  long g = std::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
  if (num_ == 0) den_ = 1;
}

RootOfUnity RootOfUnity::operator*(const RootOfUnity& o) const {
  long d = lcm_long(den_, o.den_);
  return RootOfUnity(num_ * (d / den_) + o.num_ * (d / o.den_), d);
}

RootOfUnity RootOfUnity::inv() const { return RootOfUnity(-num_, den_); }

RootOfUnity RootOfUnity::pow(long k) const { return RootOfUnity(num_ * k, den_); }

RootOfUnity RootOfUnity::kth_root(long k) const {
  check_input(k >= 1, "kth_root: k must be positive");
  return RootOfUnity(num_, den_ * k);
}

Cyclo RootOfUnity::to_cyclo() const { return Cyclo::root(den_, num_); }

std::string RootOfUnity::str() const {
  if (den_ == 1) return "1";
  if (den_ == 2) return "-1";
  std::string s = "z" + std::to_string(den_);
  if (num_ != 1) s += "^" + std::to_string(num_);
  return s;
}

std::optional<RootOfUnity> RootOfUnity::parse(const std::string& s) {
  if (s == "1") return RootOfUnity(0, 1);
  if (s == "-1") return RootOfUnity(1, 2);
  if (s.size() < 2 || (s[0] != 'z' && s[0] != 'w')) return std::nullopt;
  size_t caret = s.find('^');
  std::string den_part = s.substr(1, caret == std::string::npos ? std::string::npos : caret - 1);
  std::string num_part = caret == std::string::npos ? "1" : s.substr(caret + 1);
  try {
    size_t used = 0;
    long den = std::stol(den_part, &used);
    if (used != den_part.size() || den < 1) return std::nullopt;
    long num = std::stol(num_part, &used);
    if (used != num_part.size()) return std::nullopt;
    return RootOfUnity(num, den);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

std::optional<long> dlog(const RootOfUnity& base, const RootOfUnity& v) {
  long m = base.order();
  if (v.order() == 1) return 0;
  if (m % v.order() != 0) return std::nullopt;
  // base = zeta_m^e with gcd(e, m) = 1; want k with e k = f (mod m) where
  // v = zeta_m^f.
  long f = v.exponent() * (m / v.order());
  long k = (long)((__int128)inv_mod(base.exponent(), m) * f % m);
  return ((k % m) + m) % m;
}

}  // namespace tga
