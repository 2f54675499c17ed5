#include "tga/zlattice.hpp"

#include <algorithm>

#include "tga/errors.hpp"

namespace tga::zlat {

KernelAccumulator::KernelAccumulator(size_t cols) : cols_(cols), kgcd_(0) {}

void KernelAccumulator::add(Row a, Int w) {
  check_math(a.size() == cols_, "KernelAccumulator: wrong row width");
  auto leading_from = [&](size_t start) {
    for (size_t c = start; c < cols_; ++c)
      if (a[c] != 0) return c;
    return cols_;
  };
  // Eliminate the incoming row's leading entry against the row holding that
  // pivot column, advancing the lead strictly each round; combining only
  // rows with equal leading columns keeps the echelon invariant (pivots
  // strictly increasing, zeros left of every pivot).
  size_t lead = leading_from(0);
  size_t i = 0;
  while (lead < cols_) {
    while (i < pivots_.size() && pivots_[i] < lead) ++i;
    if (i == pivots_.size() || pivots_[i] > lead) break;  // free pivot slot
    Row& r = rows_[i];
    size_t p = lead;
    if (a[p] % r[p] == 0) {
      Int q = a[p] / r[p];
      for (size_t c = p; c < cols_; ++c) a[c] -= q * r[c];
      w -= q * vals_[i];
    } else {
      // Unimodular gcd combination of r and a at column p.
      Int g, u, v;
      mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), r[p].get_mpz_t(),
                 a[p].get_mpz_t());
      Int rp_g = r[p] / g, ap_g = a[p] / g;
      for (size_t c = p; c < cols_; ++c) {
        Int nr = u * r[c] + v * a[c];
        Int na = rp_g * a[c] - ap_g * r[c];
        r[c] = nr;
        a[c] = na;
      }
      Int nval = u * vals_[i] + v * w;
      w = rp_g * w - ap_g * vals_[i];
      vals_[i] = nval;
    }
    lead = leading_from(p + 1);
  }
  if (lead == cols_) {
    // Row reduced to zero: its value is in the kernel image.
    mpz_gcd(kgcd_.get_mpz_t(), kgcd_.get_mpz_t(), w.get_mpz_t());
    return;
  }
  if (a[lead] < 0) {
    for (auto& x : a) x = -x;
    w = -w;
  }
  rows_.insert(rows_.begin() + i, std::move(a));
  vals_.insert(vals_.begin() + i, std::move(w));
  pivots_.insert(pivots_.begin() + i, lead);
}

long rank(const std::vector<Row>& m) {
  if (m.empty()) return 0;
  KernelAccumulator acc(m[0].size());
  for (const Row& r : m) acc.add(r, Int(0));
  return acc.rank();
}

std::vector<Int> smith_invariants(const std::vector<Row>& m, size_t cols) {
  // Compress to an echelon basis first, then run the classic elimination.
  KernelAccumulator acc(cols);
  for (const Row& r : m) {
    check_math(r.size() == cols, "smith_invariants: wrong row width");
    acc.add(r, Int(0));
  }
  std::vector<Row> a = acc.rows();
  size_t rows = a.size();
  size_t t = 0;
  std::vector<Int> inv;
  while (t < rows && t < cols) {
    // Find the entry of minimal nonzero magnitude in the trailing block.
    size_t bi = rows, bj = cols;
    for (size_t i = t; i < rows; ++i)
      for (size_t j = t; j < cols; ++j) {
        if (a[i][j] == 0) continue;
        if (bi == rows || cmp(abs(a[i][j]), abs(a[bi][bj])) < 0) {
          bi = i;
          bj = j;
        }
      }
    if (bi == rows) break;  // trailing block vanished
    std::swap(a[t], a[bi]);
    for (size_t i = t; i < rows; ++i) std::swap(a[i][t], a[i][bj]);
    bool clean = true;
    for (size_t i = t + 1; i < rows; ++i) {
      if (a[i][t] == 0) continue;
      Int q;
      // Floor division leaves a residue smaller than the pivot, so the
      // minimal-magnitude pivot choice makes the loop terminate.
      mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
      if (q != 0)
        for (size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
      if (a[i][t] != 0) clean = false;
    }
    for (size_t j = t + 1; j < cols; ++j) {
      if (a[t][j] == 0) continue;
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
      if (q != 0)
        for (size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
      if (a[t][j] != 0) clean = false;
    }
    if (!clean) continue;
    // Pivot divides its row and column; enforce divisibility of the rest.
    bool divides_all = true;
    for (size_t i = t + 1; i < rows && divides_all; ++i)
      for (size_t j = t + 1; j < cols; ++j)
        if (a[i][j] % a[t][t] != 0) {
          // Fold row i into row t and restart this pivot.
          for (size_t jj = t; jj < cols; ++jj) a[t][jj] += a[i][jj];
          divides_all = false;
          break;
        }
    if (!divides_all) continue;
    inv.push_back(abs(a[t][t]));
    ++t;
  }
  return inv;
}

}  // namespace tga::zlat
