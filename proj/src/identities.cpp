#include "tga/identities.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <numeric>
#include <set>

#include "tga/errors.hpp"
#include "tga/laurent.hpp"

namespace tga {

int GradedMonomial::degree(const Group& g) const {
  int acc = 0;
  for (const auto& [i, e] : letters) acc = g.op(acc, e);
  return acc;
}

std::vector<int> GradedMonomial::degrees() const {
  std::vector<int> d;
  d.reserve(letters.size());
  for (const auto& [i, e] : letters) d.push_back(e);
  return d;
}

std::string GradedMonomial::str(const Group& g) const {
  if (letters.empty()) return "1";
  std::string s;
  for (const auto& [i, e] : letters) {
    if (!s.empty()) s += "*";
    s += "x(" + std::to_string(i) + "," + g.name(e) + ")";
  }
  return s;
}

bool MonoLess::operator()(const GradedMonomial& a, const GradedMonomial& b) const {
  if (a.letters.size() != b.letters.size()) return a.letters.size() < b.letters.size();
  return a.letters < b.letters;
}

GradedPolynomial GradedPolynomial::monomial(GroupPtr g, GradedMonomial m, Cyclo coef) {
  check_input(g != nullptr, "polynomial: null group");
  for (const auto& [i, e] : m.letters)
    check_input(i >= 1 && e >= 0 && e < g->size(), "polynomial: bad letter");
  GradedPolynomial p(std::move(g));
  if (!coef.is_zero()) p.t_[std::move(m)] = std::move(coef);
  return p;
}

GradedPolynomial GradedPolynomial::operator-() const {
  GradedPolynomial r(*this);
  for (auto& [m, v] : r.t_) v = -v;
  return r;
}

GradedPolynomial& GradedPolynomial::operator+=(const GradedPolynomial& o) {
  if (!g_) g_ = o.g_;
  check_input(!o.g_ || o.g_ == g_, "polynomials over different groups");
  for (const auto& [m, v] : o.t_) {
    auto it = t_.find(m);
    if (it == t_.end()) {
      t_[m] = v;
    } else {
      it->second += v;
      if (it->second.is_zero()) t_.erase(it);
    }
  }
  return *this;
}

GradedPolynomial& GradedPolynomial::operator-=(const GradedPolynomial& o) {
  return *this += -o;
}

GradedPolynomial& GradedPolynomial::operator*=(const GradedPolynomial& o) {
  if (!g_) g_ = o.g_;
  check_input(!o.g_ || o.g_ == g_, "polynomials over different groups");
  std::map<GradedMonomial, Cyclo, MonoLess> r;
  for (const auto& [m1, v1] : t_)
    for (const auto& [m2, v2] : o.t_) {
      GradedMonomial m = m1;
      m.letters.insert(m.letters.end(), m2.letters.begin(), m2.letters.end());
      Cyclo v = v1 * v2;
      auto it = r.find(m);
      if (it == r.end()) {
        if (!v.is_zero()) r[std::move(m)] = std::move(v);
      } else {
        it->second += v;
        if (it->second.is_zero()) r.erase(it);
      }
    }
  t_ = std::move(r);
  return *this;
}

GradedPolynomial& GradedPolynomial::operator*=(const Cyclo& s) {
  if (s.is_zero()) {
    t_.clear();
    return *this;
  }
  for (auto& [m, v] : t_) v *= s;
  return *this;
}

GradedPolynomial GradedPolynomial::pow(long k) const {
  check_input(k >= 0, "polynomial power: negative exponent");
  check_input(g_ != nullptr, "polynomial power: no group");
  GradedPolynomial r = monomial(g_, GradedMonomial{});
  GradedPolynomial b = *this;
  for (; k > 0; k >>= 1) {
    if (k & 1) r *= b;
    if (k > 1) b *= b;
  }
  return r;
}

std::string GradedPolynomial::str() const {
  if (t_.empty()) return "0";
  std::string s;
  for (const auto& [m, v] : t_) {
    if (!s.empty()) s += " + ";
    std::string cs = v.str();
    if (cs != "1" || m.letters.empty()) {
      if (cs.find(" + ") != std::string::npos) cs = "(" + cs + ")";
      s += cs;
      if (!m.letters.empty()) s += " * ";
    }
    if (!m.letters.empty()) s += m.str(*g_);
  }
  return s;
}

std::optional<std::vector<int>> is_congruent(const Group& g, const GradedMonomial& z1,
                                             const GradedMonomial& z2) {
  size_t k = z1.length();
  if (z2.length() != k) return std::nullopt;
  if (z1.degree(g) != z2.degree(g)) return std::nullopt;
  std::vector<int> pi(k);
  std::vector<bool> used(k, false);
  for (size_t i = 0; i < k; ++i) {
    int found = -1;
    for (size_t j = 0; j < k; ++j)
      if (!used[j] && z1.letters[j] == z2.letters[i]) {
        found = (int)j;
        break;
      }
    if (found < 0) return std::nullopt;
    used[found] = true;
    pi[i] = found;
  }
  return pi;
}

bool is_weakly_congruent(const Group& g, const GradedMonomial& z1, const GradedMonomial& z2) {
  return z1.degree(g) == z2.degree(g);
}

ElementaryIdentity elementary_identity(const Cocycle& c, const GradedMonomial& z1,
                                       const std::vector<int>& pi) {
  size_t k = z1.length();
  check_input(pi.size() == k, "elementary identity: permutation length mismatch");
  std::vector<bool> seen(k, false);
  GradedMonomial z2;
  z2.letters.resize(k);
  for (size_t i = 0; i < k; ++i) {
    check_input(pi[i] >= 0 && (size_t)pi[i] < k && !seen[pi[i]],
                "elementary identity: not a permutation");
    seen[pi[i]] = true;
    z2.letters[i] = z1.letters[pi[i]];
  }
  const Group& g = *c.group();
  check_input(z1.degree(g) == z2.degree(g),
              "elementary identity: rearrangement changes the degree");
  ElementaryIdentity b;
  b.z1 = z1;
  b.z2 = std::move(z2);
  b.pi = pi;
  b.coeff = c.path(z1.degrees()) * c.path(b.z2.degrees()).inv();
  return b;
}

GradedPolynomial ElementaryIdentity::to_polynomial(const Cocycle& c) const {
  GradedPolynomial p = GradedPolynomial::monomial(c.group(), z1);
  p -= GradedPolynomial::monomial(c.group(), z2, coeff.to_cyclo());
  return p;
}

GenericElement substitute_generic(const GradedPolynomial& p, const AlgebraPtr& alg) {
  check_input(p.group() == nullptr || p.group() == alg->group(),
              "substitution: polynomial group does not match the algebra");
  const Group& g = *alg->group();
  GenericElement sum(alg);
  for (const auto& [m, coef] : p.terms()) {
    GenericElement e = GenericElement::unit(alg, 0, Laurent(coef));
    for (const auto& [i, elt] : m.letters)
      e *= GenericElement::unit(alg, elt, Laurent::variable(t_name(i, g.name(elt))));
    sum += e;
  }
  return sum;
}

bool decide_identity(const GradedPolynomial& p, const Cocycle& c) {
  AlgebraPtr alg = std::make_shared<const Cocycle>(c);
  return substitute_generic(p, alg).is_zero();
}

TwistedElement evaluate(const GradedPolynomial& p, const AlgebraPtr& alg,
                        const std::map<Letter, Cyclo>& scalars) {
  check_input(p.group() == nullptr || p.group() == alg->group(),
              "substitution: polynomial group does not match the algebra");
  TwistedElement sum(alg);
  for (const auto& [m, coef] : p.terms()) {
    TwistedElement e = TwistedElement::unit(alg, 0, coef);
    for (const auto& letter : m.letters) {
      auto it = scalars.find(letter);
      Cyclo s = it == scalars.end() ? Cyclo(1) : it->second;
      e *= TwistedElement::unit(alg, letter.second, s);
    }
    sum += e;
  }
  return sum;
}

namespace {

std::vector<GradedPolynomial> decompose(const GradedPolynomial& p, bool full_congruence) {
  const Group* g = p.group().get();
  std::vector<GradedPolynomial> out;
  // Class key: degree product, plus the sorted letter multiset when
  // splitting into full congruence classes.
  std::vector<std::pair<int, std::vector<Letter>>> keys;
  for (const auto& [m, v] : p.terms()) {
    std::pair<int, std::vector<Letter>> key{m.degree(*g), {}};
    if (full_congruence) {
      key.second = m.letters;
      std::sort(key.second.begin(), key.second.end());
    }
    int idx = -1;
    for (size_t t = 0; t < keys.size(); ++t)
      if (keys[t] == key) {
        idx = (int)t;
        break;
      }
    if (idx < 0) {
      keys.push_back(std::move(key));
      out.emplace_back(p.group());
      idx = (int)keys.size() - 1;
    }
    out[idx] += GradedPolynomial::monomial(p.group(), m, v);
  }
  return out;
}

}  // namespace

std::vector<GradedPolynomial> homogeneous_decomposition(const GradedPolynomial& p) {
  return decompose(p, true);
}

std::vector<GradedPolynomial> weak_homogeneous_decomposition(const GradedPolynomial& p) {
  return decompose(p, false);
}

namespace {

// Relabeler assigning 1, 2, ... per group element in scan order.
struct Relabel {
  std::map<int, std::map<int, int>> next;  // element -> old index -> new index
  Letter operator()(const Letter& l) {
    auto& m = next[l.second];
    auto it = m.find(l.first);
    if (it == m.end()) it = m.emplace(l.first, (int)m.size() + 1).first;
    return {it->second, l.second};
  }
};

}  // namespace

GradedMonomial canonical_relabel(const GradedMonomial& z) {
  Relabel rl;
  GradedMonomial r;
  r.letters.reserve(z.letters.size());
  for (const auto& l : z.letters) r.letters.push_back(rl(l));
  return r;
}

std::pair<GradedMonomial, GradedMonomial> canonical_relabel_pair(const GradedMonomial& z1,
                                                                 const GradedMonomial& z2) {
  Relabel rl;
  GradedMonomial r1, r2;
  for (const auto& l : z1.letters) r1.letters.push_back(rl(l));
  for (const auto& l : z2.letters) r2.letters.push_back(rl(l));
  return {std::move(r1), std::move(r2)};
}

std::vector<ElementaryIdentity> enumerate_E(const Cocycle& c, int max_len, int max_index,
                                            long cap, bool canonical_z1) {
  check_input(max_len >= 0, "enumeration: negative length cap");
  check_input(max_index >= 1, "enumeration: index cap must be positive");
  check_input(cap >= 0, "enumeration: negative count cap");
  const Group& g = *c.group();
  int n = g.size();
  std::vector<ElementaryIdentity> out;

  GradedMonomial word;
  // Distinct indices used so far with each element (canonical words use
  // exactly 1..count, so count+1 is the only admissible new index).
  std::vector<int> used(n, 0);

  auto process = [&](const GradedMonomial& z1) {
    std::vector<Letter> perm = z1.letters;
    std::sort(perm.begin(), perm.end());
    do {
      GradedMonomial z2{perm};
      if (z2 == z1) continue;
      auto pi = is_congruent(g, z1, z2);
      if (!pi) continue;
      check_input((long)out.size() < cap, "enumeration cap exceeded");
      out.push_back(elementary_identity(c, z1, *pi));
    } while (std::next_permutation(perm.begin(), perm.end()));
  };

  auto gen = [&](auto&& self, int remaining) -> void {
    if ((int)word.length() >= 2) process(word);
    if (remaining == 0) return;
    for (int i = 1; i <= max_index; ++i)
      for (int e = 0; e < n; ++e) {
        if (canonical_z1 && i > used[e] + 1) continue;
        int before = used[e];
        used[e] = std::max(used[e], i);
        word.letters.push_back({i, e});
        self(self, remaining - 1);
        word.letters.pop_back();
        used[e] = before;
      }
  };
  gen(gen, max_len);

  std::sort(out.begin(), out.end(), [](const ElementaryIdentity& a, const ElementaryIdentity& b) {
    MonoLess less;
    if (a.z1 != b.z1) return less(a.z1, b.z1);
    return less(a.z2, b.z2);
  });
  return out;
}

Mu compute_mu(const Cocycle& c) {
  const Group& g = *c.group();
  int n = g.size();
  long N = c.value_order_lcm();

  // The finite group of monomials zeta_N^e u_x, encoded as e * n + x.
  auto mul = [&](long a, long b) {
    long ea = a / n, eb = b / n;
    int xa = (int)(a % n), xb = (int)(b % n);
    const RootOfUnity& r = c.at(xa, xb);
    long ec = (ea + eb + r.exponent() * (N / r.order())) % N;
    return ec * n + g.op(xa, xb);
  };

  // Closure from the identity under right multiplication by the u_x.
  std::vector<char> seen(N * n, 0);
  std::vector<long> elems{0};
  seen[0] = 1;
  for (size_t head = 0; head < elems.size(); ++head)
    for (int x = 0; x < n; ++x) {
      long y = mul(elems[head], (long)x);
      if (!seen[y]) {
        seen[y] = 1;
        elems.push_back(y);
      }
    }

  // Inverses, then the commutator subgroup by closure.
  std::map<long, long> inverse;
  for (long a : elems)
    for (long b : elems)
      if (mul(a, b) == 0) inverse[a] = b;

  std::vector<char> in_derived(N * n, 0);
  std::vector<long> derived{0};
  in_derived[0] = 1;
  for (long a : elems)
    for (long b : elems) {
      long k = mul(mul(a, b), mul(inverse[a], inverse[b]));
      if (!in_derived[k]) {
        in_derived[k] = 1;
        derived.push_back(k);
      }
    }
  for (size_t head = 0; head < derived.size(); ++head)
    for (size_t t = 0; t < derived.size(); ++t) {
      long y = mul(derived[head], derived[t]);
      if (!in_derived[y]) {
        in_derived[y] = 1;
        derived.push_back(y);
      }
    }

  // Scalar part: exponents e with zeta_N^e u_1 in the commutator subgroup.
  long d = N;
  for (long k : derived)
    if (k % n == 0) d = std::gcd(d, k / n);

  Mu mu;
  mu.generator = RootOfUnity(d, N);
  mu.order = mu.generator.order();
  mu.field_conductor = mu.order % 4 == 2 ? mu.order / 2 : mu.order;
  return mu;
}

namespace {

struct PolyToken {
  enum Kind { kOp, kInt, kIdent, kVar, kEnd } kind;
  std::string text;   // op char / digits / identifier
  int var_index = 0;  // kVar
  std::string var_word;
};

std::vector<PolyToken> lex_polynomial(const std::string& s) {
  std::vector<PolyToken> out;
  size_t i = 0;
  while (i < s.size()) {
    char ch = s[i];
    if (std::isspace((unsigned char)ch)) {
      ++i;
    } else if (std::strchr("+-*/^()", ch)) {
      out.push_back({PolyToken::kOp, std::string(1, ch), 0, ""});
      ++i;
    } else if (std::isdigit((unsigned char)ch)) {
      size_t j = i;
      while (j < s.size() && std::isdigit((unsigned char)s[j])) ++j;
      out.push_back({PolyToken::kInt, s.substr(i, j - i), 0, ""});
      i = j;
    } else if (std::isalpha((unsigned char)ch) || ch == '_') {
      size_t j = i;
      while (j < s.size() && (std::isalnum((unsigned char)s[j]) || s[j] == '_')) ++j;
      std::string name = s.substr(i, j - i);
      if (name == "x" && j < s.size() && s[j] == '(') {
        size_t k = j + 1, depth = 1;
        while (k < s.size() && depth > 0) {
          if (s[k] == '(') ++depth;
          if (s[k] == ')') --depth;
          ++k;
        }
        check_input(depth == 0, "polynomial literal: unbalanced x(...)");
        std::string inner = s.substr(j + 1, k - j - 2);
        size_t comma = inner.find(',');
        check_input(comma != std::string::npos, "polynomial literal: x(...) needs index,word");
        PolyToken t{PolyToken::kVar, "", 0, ""};
        try {
          t.var_index = std::stoi(inner.substr(0, comma));
        } catch (const std::exception&) {
          throw input_error("polynomial literal: bad variable index in x(" + inner + ")");
        }
        t.var_word = inner.substr(comma + 1);
        out.push_back(std::move(t));
        i = k;
      } else {
        out.push_back({PolyToken::kIdent, name, 0, ""});
        i = j;
      }
    } else {
      throw input_error("polynomial literal: unexpected character '" + std::string(1, ch) + "'");
    }
  }
  out.push_back({PolyToken::kEnd, "", 0, ""});
  return out;
}

struct PolyParser {
  const GroupPtr& g;
  std::vector<PolyToken> toks;
  size_t pos = 0;

  const PolyToken& peek() const { return toks[pos]; }
  PolyToken next() { return toks[pos++]; }
  bool eat_op(const char* op) {
    if (peek().kind == PolyToken::kOp && peek().text == op) {
      ++pos;
      return true;
    }
    return false;
  }

  long integer() {
    long sign = 1;
    while (eat_op("-")) sign = -sign;
    check_input(peek().kind == PolyToken::kInt, "polynomial literal: expected integer");
    return sign * std::stol(next().text);
  }

  GradedPolynomial primary() {
    if (eat_op("(")) {
      GradedPolynomial e = expression();
      check_input(eat_op(")"), "polynomial literal: expected ')'");
      return e;
    }
    PolyToken t = next();
    if (t.kind == PolyToken::kVar)
      return GradedPolynomial::monomial(
          g, GradedMonomial{{{t.var_index, g->eval_word(t.var_word)}}});
    if (t.kind == PolyToken::kInt)
      return GradedPolynomial::monomial(g, GradedMonomial{}, Cyclo(std::stol(t.text)));
    if (t.kind == PolyToken::kIdent) {
      auto r = RootOfUnity::parse(t.text);
      check_input(r.has_value(), "polynomial literal: unknown scalar '" + t.text + "'");
      return GradedPolynomial::monomial(g, GradedMonomial{}, r->to_cyclo());
    }
    throw input_error("polynomial literal: unexpected token '" + t.text + "'");
  }

  GradedPolynomial factor() {
    GradedPolynomial e = primary();
    if (eat_op("^")) e = e.pow(integer());
    return e;
  }

  // Division only by scalars (single constant term).
  GradedPolynomial term() {
    GradedPolynomial e = factor();
    for (;;) {
      if (eat_op("*")) {
        e *= factor();
      } else if (eat_op("/")) {
        GradedPolynomial d = factor();
        check_input(d.terms().size() == 1 && d.terms().begin()->first.letters.empty(),
                    "polynomial literal: division only by scalars");
        e *= d.terms().begin()->second.inv();
      } else {
        return e;
      }
    }
  }

  GradedPolynomial expression() {
    bool neg = false;
    while (true) {
      if (eat_op("-")) {
        neg = !neg;
      } else if (eat_op("+")) {
        // leading plus: no effect
      } else {
        break;
      }
    }
    GradedPolynomial e = term();
    if (neg) e = -e;
    for (;;) {
      if (eat_op("+")) {
        e += term();
      } else if (eat_op("-")) {
        e -= term();
      } else {
        return e;
      }
    }
  }
};

}  // namespace

GradedPolynomial parse_polynomial(const GroupPtr& g, const std::string& text) {
  check_input(g != nullptr, "polynomial literal: null group");
  PolyParser p{g, lex_polynomial(text)};
  GradedPolynomial e = p.expression();
  check_input(p.peek().kind == PolyToken::kEnd, "polynomial literal: trailing input");
  return e;
}

}  // namespace tga
