#include "tga/reduction.hpp"

#include <algorithm>
#include <set>

#include "tga/errors.hpp"

namespace tga {

namespace {

RootOfUnity path_ratio(const Cocycle& c, const std::vector<Letter>& l,
                       const std::vector<Letter>& r) {
  std::vector<int> dl, dr;
  for (const auto& x : l) dl.push_back(x.second);
  for (const auto& x : r) dr.push_back(x.second);
  return c.path(dl) * c.path(dr).inv();
}

// Check that b really is the elementary identity of (z1, pi); math_error
// with a context tag otherwise.
void verify_elementary(const ElementaryIdentity& b, const Cocycle& c, const std::string& who) {
  size_t k = b.z1.length();
  check_math(b.pi.size() == k && b.z2.length() == k, who + ": shape mismatch");
  std::vector<bool> seen(k, false);
  for (size_t i = 0; i < k; ++i) {
    check_math(b.pi[i] >= 0 && (size_t)b.pi[i] < k && !seen[b.pi[i]],
               who + ": not a permutation");
    seen[b.pi[i]] = true;
    check_math(b.z2.letters[i] == b.z1.letters[b.pi[i]], who + ": words do not match");
  }
  const Group& g = *c.group();
  check_math(b.z1.degree(g) == b.z2.degree(g), who + ": degree mismatch");
  check_math(b.coeff == path_ratio(c, b.z1.letters, b.z2.letters),
             who + ": wrong coefficient");
}

ElementaryIdentity identity_of(const Cocycle& c, const std::vector<Letter>& l,
                               const std::vector<Letter>& r) {
  GradedMonomial z1{l}, z2{r};
  auto pi = is_congruent(*c.group(), z1, z2);
  check_math(pi.has_value(), "reduction: words are not congruent");
  return elementary_identity(c, z1, *pi);
}

int fresh_index(int elem, const std::vector<Letter>& a, const std::vector<Letter>& b) {
  std::set<int> used;
  for (const auto& l : a)
    if (l.second == elem) used.insert(l.first);
  for (const auto& l : b)
    if (l.second == elem) used.insert(l.first);
  int i = 1;
  while (used.count(i)) ++i;
  return i;
}

}  // namespace

ReductionCertificate reduce_to_generators(const ElementaryIdentity& input, const Cocycle& c) {
  // Malformed inputs are caller errors here (replay treats them as math
  // failures instead).
  ElementaryIdentity rebuilt = elementary_identity(c, input.z1, input.pi);
  check_input(rebuilt.z2 == input.z2 && rebuilt.coeff == input.coeff,
              "reduction: input identity is inconsistent");
  const Group& g = *c.group();
  int n = g.size();
  check_input(n >= 2, "reduction: group must have order at least 2");

  ReductionCertificate cert;
  cert.input = input;
  std::vector<Letter> L = input.z1.letters, R = input.z2.letters;
  RootOfUnity kappa = input.coeff;

  auto swap_in_right = [&](int pos) {
    Letter a = R[pos], b = R[pos + 1];
    check_math(g.commutes(a.second, b.second),
               "reduction stuck: adjacent letters do not commute");
    ReductionStep s;
    s.kind = ReductionStep::kSwap;
    s.side = 1;
    s.pos = pos;
    s.aux = elementary_identity(c, GradedMonomial{{a, b}}, {1, 0});
    // Replacing [a b] by [b a] multiplies the right path by 1/coeff(aux),
    // hence kappa by coeff(aux).
    s.factor = s.aux.coeff;
    kappa = kappa * s.factor;
    std::swap(R[pos], R[pos + 1]);
    cert.steps.push_back(std::move(s));
  };

  auto contract = [&](int i, int j) {
    Letter a = L[i], b = L[i + 1];
    int prod = g.op(a.second, b.second);
    ReductionStep s;
    s.kind = ReductionStep::kContract;
    s.left_pos = i;
    s.right_pos = j;
    s.merged = Letter{fresh_index(prod, L, R), prod};
    L[i] = s.merged;
    L.erase(L.begin() + i + 1);
    R[j] = s.merged;
    R.erase(R.begin() + j + 1);
    cert.steps.push_back(std::move(s));
  };

  while ((int)L.size() > n) {
    // A letter pair adjacent in both words contracts immediately.
    int fi = -1, fj = -1;
    for (int i = 0; fi < 0 && i + 1 < (int)L.size(); ++i)
      for (int j = 0; j + 1 < (int)R.size(); ++j)
        if (L[i] == R[j] && L[i + 1] == R[j + 1]) {
          fi = i;
          fj = j;
          break;
        }
    if (fi >= 0) {
      contract(fi, fj);
      continue;
    }
    // Otherwise swap commuting neighbors in the right word until the left
    // word's first two letters sit at its front, then contract there.
    Letter a = L[0], b = L[1];
    int p = -1;
    for (int t = 0; t < (int)R.size(); ++t)
      if (R[t] == a) {
        p = t;
        break;
      }
    check_math(p >= 0, "reduction: words are not permutations of each other");
    while (p > 0) {
      if (R[p - 1] == R[p]) {
        --p;  // the earlier occurrence serves equally well
        continue;
      }
      swap_in_right(p - 1);
      --p;
    }
    int q = -1;
    for (int t = 1; t < (int)R.size(); ++t)
      if (R[t] == b) {
        q = t;
        break;
      }
    check_math(q >= 1, "reduction: words are not permutations of each other");
    while (q > 1) {
      if (R[q - 1] == R[q]) {
        --q;
        continue;
      }
      swap_in_right(q - 1);
      --q;
    }
    contract(0, 0);
  }

  auto [r1, r2] = canonical_relabel_pair(GradedMonomial{L}, GradedMonomial{R});
  cert.final_identity = identity_of(c, r1.letters, r2.letters);
  check_math(cert.final_identity.coeff == kappa,
             "reduction: coefficient bookkeeping failed");
  return cert;
}

std::vector<ElementaryIdentity> replay(const ReductionCertificate& cert, const Cocycle& c) {
  verify_elementary(cert.input, c, "replay input");
  const Group& g = *c.group();
  int n = g.size();
  std::vector<Letter> L = cert.input.z1.letters, R = cert.input.z2.letters;
  RootOfUnity kappa = cert.input.coeff;
  std::vector<ElementaryIdentity> trace{cert.input};

  for (size_t step = 0; step < cert.steps.size(); ++step) {
    const ReductionStep& s = cert.steps[step];
    std::string who = "replay step " + std::to_string(step);
    if (s.kind == ReductionStep::kContract) {
      int i = s.left_pos, j = s.right_pos;
      check_math(i >= 0 && i + 1 < (int)L.size() && j >= 0 && j + 1 < (int)R.size(),
                 who + ": contract position out of range");
      check_math(L[i] == R[j] && L[i + 1] == R[j + 1],
                 who + ": words disagree at the contracted pair");
      check_math(s.merged.second == g.op(L[i].second, L[i + 1].second),
                 who + ": merged letter has the wrong degree");
      // Freshness: undoing the contraction substitutes the merged letter,
      // which must therefore occur nowhere else in either word.
      for (const auto& l : L)
        check_math(l != s.merged, who + ": merged letter is not fresh");
      for (const auto& l : R)
        check_math(l != s.merged, who + ": merged letter is not fresh");
      check_math(s.factor.is_one(), who + ": contraction must not scale");
      L[i] = s.merged;
      L.erase(L.begin() + i + 1);
      R[j] = s.merged;
      R.erase(R.begin() + j + 1);
    } else {
      check_math(s.side == 0 || s.side == 1, who + ": bad side");
      std::vector<Letter>& W = s.side == 0 ? L : R;
      check_math(s.pos >= 0 && s.pos + 1 < (int)W.size(), who + ": swap position out of range");
      Letter a = W[s.pos], b = W[s.pos + 1];
      check_math(g.commutes(a.second, b.second), who + ": swapped letters do not commute");
      verify_elementary(s.aux, c, who + " aux");
      check_math(s.aux.z1.letters == std::vector<Letter>{a, b} &&
                     s.aux.z2.letters == std::vector<Letter>{b, a},
                 who + ": aux identity does not match the swapped letters");
      check_math(n >= 2, who + ": length-2 generator needs a group of order >= 2");
      RootOfUnity expect = s.side == 0 ? s.aux.coeff.inv() : s.aux.coeff;
      check_math(s.factor == expect, who + ": wrong swap factor");
      std::swap(W[s.pos], W[s.pos + 1]);
      kappa = kappa * s.factor;
    }
    check_math(path_ratio(c, L, R) == kappa, who + ": coefficient bookkeeping mismatch");
    trace.push_back(identity_of(c, L, R));
  }

  check_math((int)L.size() <= n, "replay: final identity is still too long");
  auto [r1, r2] = canonical_relabel_pair(GradedMonomial{L}, GradedMonomial{R});
  ElementaryIdentity fin = identity_of(c, r1.letters, r2.letters);
  check_math(fin.z1 == cert.final_identity.z1 && fin.z2 == cert.final_identity.z2 &&
                 fin.coeff == cert.final_identity.coeff,
             "replay: final identity does not match the certificate");
  verify_elementary(cert.final_identity, c, "replay final");
  trace.push_back(cert.final_identity);
  return trace;
}

}  // namespace tga
