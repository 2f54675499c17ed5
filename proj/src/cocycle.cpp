#include "tga/cocycle.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "tga/errors.hpp"

namespace tga {

Cocycle::Cocycle(GroupPtr g, std::vector<RootOfUnity> values)
    : g_(std::move(g)), n_(g_ ? g_->size() : 0), v_(std::move(values)) {
  check_input(g_ != nullptr, "cocycle: null group");
  check_input((int)v_.size() == n_ * n_, "cocycle: value table has wrong size");
}

Cocycle Cocycle::trivial(GroupPtr g) {
  check_input(g != nullptr, "cocycle: null group");
  int n = g->size();
  return Cocycle(std::move(g), std::vector<RootOfUnity>((size_t)n * n));
}

Cocycle Cocycle::from_entries(GroupPtr g,
                              const std::vector<std::tuple<int, int, RootOfUnity>>& entries) {
  check_input(g != nullptr, "cocycle: null group");
  int n = g->size();
  std::vector<RootOfUnity> v((size_t)n * n);
  for (const auto& [i, j, val] : entries) {
    check_input(i >= 0 && i < n && j >= 0 && j < n, "cocycle: entry index out of range");
    v[(size_t)i * n + j] = val;
  }
  return Cocycle(std::move(g), std::move(v));
}

std::vector<CocycleViolation> Cocycle::validate() const {
  std::vector<CocycleViolation> out;
  const Group& g = *g_;
  for (int a = 0; a < n_; ++a) {
    if (!at(0, a).is_one())
      out.push_back({0, a, -1, "not normalized: c(e, " + g.name(a) + ") != 1"});
    if (a != 0 && !at(a, 0).is_one())
      out.push_back({a, 0, -1, "not normalized: c(" + g.name(a) + ", e) != 1"});
  }
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      for (int c = 0; c < n_; ++c) {
        RootOfUnity lhs = at(a, b) * at(g.op(a, b), c);
        RootOfUnity rhs = at(a, g.op(b, c)) * at(b, c);
        if (lhs != rhs)
          out.push_back({a, b, c,
                         "cocycle condition fails at (" + g.name(a) + ", " + g.name(b) +
                             ", " + g.name(c) + ")"});
      }
  return out;
}

void Cocycle::ensure_valid() const {
  auto v = validate();
  if (v.empty()) return;
  throw input_error("invalid cocycle: " + v.front().what + " (" +
                    std::to_string(v.size()) + " violation(s) total)");
}

NondegeneracyReport Cocycle::nondegeneracy() const {
  NondegeneracyReport rep;
  rep.witness.assign(n_, -1);
  for (int g = 1; g < n_; ++g) {
    int found = -1;
    for (int h = 0; h < n_; ++h) {
      if (!g_->commutes(g, h)) continue;
      if (!pairing(g, h).is_one()) {
        found = h;
        break;
      }
    }
    rep.witness[g] = found;
    if (found < 0) rep.radical.push_back(g);
  }
  rep.nondegenerate = rep.radical.empty();
  return rep;
}

RootOfUnity Cocycle::pairing(int g, int h) const {
  check_math(g_->commutes(g, h), "pairing: elements do not commute");
  return at(g, h) * at(h, g).inv();
}

RootOfUnity Cocycle::path(const std::vector<int>& gs) const {
  RootOfUnity r;
  if (gs.size() < 2) return r;
  int acc = gs[0];
  for (size_t i = 1; i < gs.size(); ++i) {
    r = r * at(acc, gs[i]);
    acc = g_->op(acc, gs[i]);
  }
  return r;
}

int Cocycle::product(const std::vector<int>& gs) const {
  int acc = 0;
  for (int x : gs) acc = g_->op(acc, x);
  return acc;
}

Cocycle Cocycle::coboundary_modify(const std::vector<RootOfUnity>& lambda) const {
  check_input((int)lambda.size() == n_, "coboundary: wrong cochain length");
  check_input(lambda[0].is_one(), "coboundary: cochain must be 1 at the identity");
  std::vector<RootOfUnity> v((size_t)n_ * n_);
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      v[(size_t)a * n_ + b] =
          lambda[a] * lambda[b] * lambda[g_->op(a, b)].inv() * at(a, b);
  return Cocycle(g_, std::move(v));
}

Cocycle Cocycle::pushforward(const std::vector<int>& phi) const {
  check_input((int)phi.size() == n_, "pushforward: wrong map length");
  std::vector<int> inv_phi(n_, -1);
  for (int x = 0; x < n_; ++x) {
    check_input(phi[x] >= 0 && phi[x] < n_ && inv_phi[phi[x]] < 0,
                "pushforward: not a permutation");
    inv_phi[phi[x]] = x;
  }
  check_input(phi[0] == 0, "pushforward: must fix the identity");
  std::vector<RootOfUnity> v((size_t)n_ * n_);
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      v[(size_t)a * n_ + b] = at(inv_phi[a], inv_phi[b]);
  return Cocycle(g_, std::move(v));
}

Cocycle Cocycle::restrict_to(GroupPtr sub, const std::vector<int>& members) const {
  check_input(sub != nullptr, "restrict: null subgroup");
  check_input((int)members.size() == sub->size(), "restrict: embedding size mismatch");
  int m = sub->size();
  std::vector<RootOfUnity> v((size_t)m * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      // The embedding must be a homomorphism onto the members.
      check_input(g_->op(members[a], members[b]) == members[sub->op(a, b)],
                  "restrict: embedding is not compatible");
      v[(size_t)a * m + b] = at(members[a], members[b]);
    }
  return Cocycle(sub, std::move(v));
}

long Cocycle::value_order_lcm() const {
  long n = 1;
  for (const auto& r : v_) n = lcm_long(n, r.order());
  return n;
}

Cocycle inflate(GroupPtr g, const Cocycle& cq, const std::vector<int>& proj) {
  check_input(g != nullptr, "inflate: null group");
  int n = g->size();
  check_input((int)proj.size() == n, "inflate: wrong projection length");
  int m = cq.group()->size();
  std::vector<RootOfUnity> v((size_t)n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      check_input(proj[a] >= 0 && proj[a] < m && proj[b] >= 0 && proj[b] < m,
                  "inflate: projection out of range");
      check_input(proj[g->op(a, b)] == cq.group()->op(proj[a], proj[b]),
                  "inflate: projection is not a homomorphism");
      v[(size_t)a * n + b] = cq.at(proj[a], proj[b]);
    }
  return Cocycle(std::move(g), std::move(v));
}

Cocycle from_one_cocycle(GroupPtr g, const std::map<std::string, std::string>& pi) {
  check_input(g != nullptr, "from_one_cocycle: null group");
  const auto& semi_opt = g->semidirect_info();
  check_input(semi_opt.has_value(),
              "from_one_cocycle: group must be built as a semidirect product");
  const SemidirectInfo& si = *semi_opt;
  const Group& h_grp = *si.acting;
  const Group& a_grp = *si.normal;
  check_input(a_grp.generators().size() == 1,
              "from_one_cocycle: normal part must be cyclic");
  int m = a_grp.size();
  int z = a_grp.generators()[0].second;
  check_input(a_grp.element_order(z) == m, "from_one_cocycle: normal part must be cyclic");

  // Discrete log table of the normal part base z.
  std::vector<int> dlog_a(m, -1);
  {
    int x = 0;
    for (int k = 0; k < m; ++k) {
      dlog_a[x] = k;
      x = a_grp.op(x, z);
    }
  }

  // Evaluate the table: acting word -> exponent of the assigned character.
  std::vector<int> pi_exp(h_grp.size(), -1);
  for (const auto& [hword, aword] : pi) {
    int h = h_grp.eval_word(hword);
    int a = a_grp.eval_word(aword);
    check_input(pi_exp[h] < 0, "from_one_cocycle: duplicate table entry for " + hword);
    pi_exp[h] = dlog_a[a];
  }
  // Bijectivity is not required: any 1-cocycle gives a valid 2-cocycle
  // below (a bijective one gives a nondegenerate result).
  for (int h = 0; h < h_grp.size(); ++h)
    check_input(pi_exp[h] >= 0,
                "from_one_cocycle: table misses acting element " + h_grp.name(h));
  check_input(pi_exp[0] == 0, "from_one_cocycle: identity must map to the trivial character");

  // d(h) = exponent of phi_h(z); the dual action sends chi_w to chi_{w^{d(h^-1)}}.
  std::vector<long> d(h_grp.size());
  for (int h = 0; h < h_grp.size(); ++h) d[h] = dlog_a[si.act[h][z]];

  // 1-cocycle condition pi(h1 h2) = pi(h1) * (h1 . pi(h2)).
  for (int h1 = 0; h1 < h_grp.size(); ++h1)
    for (int h2 = 0; h2 < h_grp.size(); ++h2) {
      long lhs = pi_exp[h_grp.op(h1, h2)];
      long rhs = (pi_exp[h1] + d[h_grp.inv(h1)] * pi_exp[h2]) % m;
      check_input(lhs == rhs, "from_one_cocycle: table is not a 1-cocycle at (" +
                                  h_grp.name(h1) + ", " + h_grp.name(h2) + ")");
    }

  // c(h1 a1, h2 a2) = chi_{pi(h2)}(a1) = zeta_m^{pi_exp(h2) e(a1)}. With pi a
  // 1-cocycle for the left dual action this satisfies the cocycle equation:
  // both sides of c(x,y) c(xy,t) = c(x,yt) c(y,t) reduce to evaluating
  // pi(h2) (h2 . pi(h3)) = pi(h2 h3) on a1.
  int n = g->size();
  std::vector<RootOfUnity> v((size_t)n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int a1 = si.a_part[x];
      int h2 = si.h_part[y];
      long e = (long)pi_exp[h2] * dlog_a[a1] % m;
      v[(size_t)x * n + y] = RootOfUnity(e, m);
    }
  Cocycle c(std::move(g), std::move(v));
  c.ensure_valid();
  return c;
}

Laurent GenericCocycle::value(int g, int h) const {
  const Group& grp = *base.group();
  Laurent r = Laurent::variable(t_name(grp.name(g)));
  r *= Laurent::variable(t_name(grp.name(h)));
  r *= Laurent::variable(t_name(grp.name(grp.op(g, h))), -1);
  r *= Laurent(base.at(g, h).to_cyclo());
  return r;
}

std::vector<CocycleViolation> GenericCocycle::validate() const {
  std::vector<CocycleViolation> out;
  const Group& g = *base.group();
  int n = g.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        Laurent lhs = value(a, b) * value(g.op(a, b), c);
        Laurent rhs = value(a, g.op(b, c)) * value(b, c);
        if (lhs != rhs)
          out.push_back({a, b, c, "generic cocycle condition fails"});
      }
  return out;
}

Cocycle perturb_cocycle(const Cocycle& c, unsigned long long seed) {
  const Group& g = *c.group();
  int n = g.size();
  std::mt19937_64 rng(seed);

  long conductor = c.value_order_lcm();
  if (conductor == 1)
    for (int a = 0; a < n; ++a)
      conductor = std::lcm(conductor, (long)g.element_order(a));
  std::vector<RootOfUnity> lambda((size_t)n);
  for (int a = 1; a < n; ++a)
    lambda[(size_t)a] = RootOfUnity((long)(rng() % (unsigned long long)conductor), conductor);
  Cocycle out = c.coboundary_modify(lambda);

  std::vector<int> gens;
  for (const auto& [name, elt] : g.generators()) gens.push_back(elt);
  std::vector<std::vector<int>> same_order((size_t)n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g.element_order(b) == g.element_order(a)) same_order[(size_t)a].push_back(b);
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<int> images;
    for (int x : gens) {
      const auto& pool = same_order[(size_t)x];
      images.push_back(pool[(size_t)(rng() % (unsigned long long)pool.size())]);
    }
    auto phi = extend_generator_map(g, gens, images);
    if (phi) return out.pushforward(*phi);
  }
  return out;
}

}  // namespace tga
