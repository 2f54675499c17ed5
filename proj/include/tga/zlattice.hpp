#pragma once
#include <gmpxx.h>

#include <vector>

namespace tga::zlat {

using Int = mpz_class;
using Row = std::vector<Int>;

// Incremental integer row reduction with an augmented value column.
// Rows of a matrix A are fed one at a time together with a value w; the
// accumulator maintains an echelon basis of the row lattice and, for the
// sublattice of integer row-combinations that vanish on A, the gcd of their
// values. All row operations are unimodular, so the vanishing combinations seen
// here generate the full left kernel of the fed matrix.
class KernelAccumulator {
 public:
  explicit KernelAccumulator(size_t cols);

  void add(Row a, Int w);

  long rank() const { return (long)rows_.size(); }
  // gcd of kernel values accumulated so far; 0 while none appeared.
  const Int& kernel_gcd() const { return kgcd_; }
  // Echelon rows with their values (pivot columns strictly increasing).
  const std::vector<Row>& rows() const { return rows_; }

 private:
  size_t cols_;
  Int kgcd_;
  std::vector<Row> rows_;
  std::vector<Int> vals_;
  std::vector<size_t> pivots_;
};

// Rank of an integer matrix.
long rank(const std::vector<Row>& m);

// Invariant factors d1 | d2 | ... (positive, including 1s) of the subgroup
// generated by the rows inside Z^cols; zero factors (free quotient
// directions) are not returned — use rank to detect them.
std::vector<Int> smith_invariants(const std::vector<Row>& m, size_t cols);

}  // namespace tga::zlat
