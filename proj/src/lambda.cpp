#include "tga/lambda.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include "tga/errors.hpp"

namespace tga {
namespace {

// Largest k with base^k dividing m; returns 0 when base does not divide m.
int prime_exponent(long m, long p) {
  int k = 0;
  while (m % p == 0) {
    m /= p;
    ++k;
  }
  return k;
}

bool is_power_of(long m, long p) {
  while (m % p == 0) m /= p;
  return m == 1;
}

long ipow(long b, int e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Discrete log of x in the cyclic subgroup generated by base, or -1.
int power_index(const Group& g, int base, int x) {
  int cur = 0, ord = g.element_order(base);
  for (int k = 0; k < ord; ++k) {
    if (cur == x) return k;
    cur = g.op(cur, base);
  }
  return -1;
}

bool pairwise_commuting(const Group& g, const std::vector<int>& elts) {
  for (size_t i = 0; i < elts.size(); ++i)
    for (size_t j = i + 1; j < elts.size(); ++j)
      if (!g.commutes(elts[i], elts[j])) return false;
  return true;
}

// Lift a basis of the quotient cg/z1 to coset representatives generating a
// complement of z1 inside cg: representatives are chosen order-preserving
// and so that every partial span stays independent (span size equals the
// product of the lifted orders). Returns lifts as cg element indices.
bool lift_complement(const Group& cg, const std::vector<int>& proj,
                     const Group& qg, const std::vector<int>& qbasis,
                     size_t at, long span_target, std::vector<int>* lifts) {
  if (at == qbasis.size()) return true;
  int qb = qbasis[at];
  int d = qg.element_order(qb);
  long target = span_target * d;
  for (int y = 0; y < cg.size(); ++y) {
    if (proj[y] != qb || cg.element_order(y) != d) continue;
    lifts->push_back(y);
    if ((long)cg.closure(*lifts).size() == target &&
        lift_complement(cg, proj, qg, qbasis, at + 1, target, lifts))
      return true;
    lifts->pop_back();
  }
  return false;
}

// Searches for a symmetric-type complement of the subgroup spanned by the
// distinguished generators, inside their centralizer. On success fills
// gammas (ambient indices, partners adjacent) and pair orders (descending).
bool symmetric_complement(const Group& g, const std::vector<int>& dist,
                          long max_exponent, std::vector<int>* gammas,
                          std::vector<long>* pairs) {
  std::vector<int> h = g.closure(dist);
  std::vector<int> c = g.centralizer(dist);
  if (!pairwise_commuting(g, c)) return false;
  std::vector<int> embed;
  auto cg = g.subgroup(c, &embed);
  std::vector<int> z1;  // members of h inside the centralizer, as cg indices
  for (int i = 0; i < cg->size(); ++i)
    if (std::binary_search(h.begin(), h.end(), embed[i])) z1.push_back(i);
  std::vector<int> proj;
  auto qg = cg->quotient(z1, &proj);
  if ((long)h.size() * qg->size() != g.size()) return false;
  auto sym = is_symmetric_type(*qg);
  if (!sym || (!sym->empty() && sym->front() > max_exponent)) return false;
  std::vector<int> qbasis = abelian_basis(*qg);
  std::vector<int> lifts;
  if (!lift_complement(*cg, proj, *qg, qbasis, 0, 1, &lifts)) return false;
  gammas->clear();
  for (int y : lifts) gammas->push_back(embed[y]);
  *pairs = *sym;
  return true;
}

std::optional<LambdaComponent> try_type2(const GroupPtr& pp, long p) {
  const Group& g = *pp;
  // Complement search depends only on the span of the candidate pair, so
  // each distinct span is attempted once.
  std::set<std::pair<std::vector<int>, long>> tried;
  for (int pi = 1; pi < g.size(); ++pi) {
    int ordp = g.element_order(pi);
    int nn = prime_exponent(ordp, p);
    if (ordp != ipow(p, nn) || nn < 2) continue;
    if ((long)ordp * ordp > g.size()) continue;
    for (int sigma = 1; sigma < g.size(); ++sigma) {
      if (g.element_order(sigma) != ordp) continue;
      int e = power_index(g, pi, g.conj(sigma, pi));
      if (e < 2) continue;
      int s = prime_exponent(e - 1, p);
      if (e - 1 != ipow(p, s) || s < 1 || s >= nn) continue;
      if (p == 2 && s == 1) continue;
      std::vector<int> span = g.closure({pi, sigma});
      if ((long)span.size() != (long)ordp * ordp) continue;
      if (!tried.insert({std::move(span), ipow(p, s)}).second) continue;
      LambdaComponent comp;
      if (!symmetric_complement(g, {pi, sigma}, ipow(p, s), &comp.gammas,
                                &comp.gamma_pairs))
        continue;
      comp.type = 2;
      comp.p = p;
      comp.n = nn;
      comp.s = s;
      comp.pi = pi;
      comp.sigma = sigma;
      return comp;
    }
  }
  return std::nullopt;
}

std::optional<LambdaComponent> try_type3(const GroupPtr& pp) {
  const Group& g = *pp;
  std::set<std::vector<int>> tried;  // spans already attempted
  for (int pi = 1; pi < g.size(); ++pi) {
    int ordp = g.element_order(pi);
    int nn = prime_exponent(ordp, 2) - 1;
    if (ordp != ipow(2, nn + 1) || nn < 1) continue;
    if ((long)ordp * ordp > g.size()) continue;
    int pi3 = g.pow(pi, 3);
    for (int sigma = 1; sigma < g.size(); ++sigma) {
      if (g.element_order(sigma) != ordp / 2) continue;
      if (g.conj(sigma, pi) != pi3) continue;
      for (int tau = 1; tau < g.size(); ++tau) {
        if (g.element_order(tau) != 2 || !g.commutes(sigma, tau)) continue;
        if (g.conj(tau, pi) != g.inv(pi)) continue;
        std::vector<int> span = g.closure({pi, sigma, tau});
        if ((long)span.size() != (long)ordp * ordp) continue;
        if (!tried.insert(std::move(span)).second) continue;
        LambdaComponent comp;
        if (!symmetric_complement(g, {pi, sigma, tau}, 2, &comp.gammas,
                                  &comp.gamma_pairs))
          continue;
        comp.type = 3;
        comp.p = 2;
        comp.n = nn;
        comp.s = 0;
        comp.pi = pi;
        comp.sigma = sigma;
        comp.tau = tau;
        return comp;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<int> abelian_basis(const Group& g) {
  check_math(g.is_abelian(), "abelian_basis needs an abelian group");
  if (g.size() == 1) return {};
  int best = 1;
  for (int x = 2; x < g.size(); ++x)
    if (g.element_order(x) > g.element_order(best)) best = x;
  std::vector<int> proj;
  auto q = g.quotient(g.closure({best}), &proj);
  std::vector<int> basis{best};
  for (int qb : abelian_basis(*q)) {
    int lifted = -1;
    for (int y = 1; y < g.size() && lifted < 0; ++y)
      if (proj[y] == qb && g.element_order(y) == q->element_order(qb))
        lifted = y;
    check_math(lifted >= 0, "abelian basis lift failed");
    basis.push_back(lifted);
  }
  return basis;
}

std::optional<std::vector<long>> is_symmetric_type(const Group& a) {
  check_input(a.is_abelian(), "symmetric type test needs an abelian group");
  std::vector<long> inv = a.abelian_invariants();  // ascending d1 | d2 | ...
  if (inv.size() % 2 != 0) return std::nullopt;
  std::vector<long> pairs;
  for (size_t i = 0; i + 1 < inv.size(); i += 2) {
    if (inv[i] != inv[i + 1]) return std::nullopt;
    pairs.push_back(inv[i]);
  }
  std::reverse(pairs.begin(), pairs.end());
  return pairs;
}

std::optional<LambdaComponent> classify_lambda_p(const GroupPtr& p_group,
                                                 std::string* why) {
  const Group& g = *p_group;
  check_input(g.size() >= 2, "classification needs a nontrivial group");
  long p = 2;
  while (g.size() % p != 0) ++p;
  check_input(is_power_of(g.size(), p), "classification needs a p-group");

  if (g.is_abelian()) {
    auto sym = is_symmetric_type(g);
    if (!sym) {
      if (why) *why = "abelian but not of symmetric type";
      return std::nullopt;
    }
    LambdaComponent comp;
    comp.type = 1;
    comp.p = p;
    comp.gammas = abelian_basis(g);
    comp.gamma_pairs = *sym;
    return comp;
  }

  if (auto comp = try_type2(p_group, p)) return comp;
  if (p == 2)
    if (auto comp = try_type3(p_group)) return comp;
  if (why)
    *why = "no semidirect presentation with a symmetric complement found";
  return std::nullopt;
}

LambdaWitness is_on_lambda(const GroupPtr& g) {
  LambdaWitness w;
  if (g->size() == 1) {
    w.on_list = true;
    return w;
  }
  if (!g->is_nilpotent()) {
    w.reason = "not nilpotent";
    return w;
  }
  for (const auto& [p, members] : g->sylow_decomposition()) {
    auto sub = g->subgroup(members);
    std::string why;
    auto comp = classify_lambda_p(sub, &why);
    if (!comp) {
      w.reason = "Sylow " + std::to_string(p) + " subgroup: " + why;
      w.components.clear();
      w.sylow_members.clear();
      return w;
    }
    w.components[p] = *comp;
    w.sylow_members[p] = members;
  }
  w.on_list = true;
  return w;
}

}  // namespace tga
