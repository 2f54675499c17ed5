#include "tga/generic_center.hpp"

#include "tga/errors.hpp"
#include "tga/zlattice.hpp"

namespace tga {
namespace {

// Exponent of the value at (a, b) relative to the common order N.
long value_exponent(const Cocycle& c, int a, int b, long n_common) {
  const RootOfUnity& v = c.at(a, b);
  return v.exponent() * (n_common / v.order());
}

void feed_rows(const Cocycle& c, zlat::KernelAccumulator* acc) {
  const Group& g = *c.group();
  int n = g.size();
  long nc = c.value_order_lcm();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      zlat::Row row(n, zlat::Int(0));
      row[a] += 1;
      row[b] += 1;
      row[g.op(a, b)] -= 1;
      acc->add(std::move(row), zlat::Int(value_exponent(c, a, b, nc)));
    }
}

}  // namespace

std::vector<std::vector<long>> exponent_matrix(const GenericCocycle& s) {
  const Group& g = *s.base.group();
  int n = g.size();
  std::vector<std::vector<long>> rows;
  rows.reserve((size_t)n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<long> row(n, 0);
      row[a] += 1;
      row[b] += 1;
      row[g.op(a, b)] -= 1;
      rows.push_back(std::move(row));
    }
  return rows;
}

long rank_of_Yf(const GenericCocycle& s) {
  zlat::KernelAccumulator acc((size_t)s.base.group()->size());
  feed_rows(s.base, &acc);
  return acc.rank();
}

RootOfUnity torsion_of_Y(const GenericCocycle& s) {
  zlat::KernelAccumulator acc((size_t)s.base.group()->size());
  feed_rows(s.base, &acc);
  long nc = s.base.value_order_lcm();
  zlat::Int d = gcd(acc.kernel_gcd(), zlat::Int(nc));
  return RootOfUnity(d.get_si(), nc);
}

std::vector<long> uv_quotient(const Group& g) {
  return relation_lattice_invariants(g);
}

bool central_monomial_check(const GenericCocycle& s,
                            const std::vector<Letter>& word) {
  const Group& g = *s.base.group();
  Laurent coeff(1);
  int prod = 0;
  for (const auto& [idx, elt] : word) {
    check_input(elt >= 0 && elt < g.size(), "letter element out of range");
    coeff *= Laurent::variable(t_name(idx, g.name(elt))) * s.value(prod, elt);
    prod = g.op(prod, elt);
  }

  bool central = prod == 0;
  if (central) {
    for (int h = 0; h < g.size(); ++h) {
      Laurent lhs = s.value(h, prod) * coeff;   // u_h (coeff u_prod)
      Laurent rhs = coeff * s.value(prod, h);   // (coeff u_prod) u_h
      check_math(g.op(h, prod) == g.op(prod, h) && lhs == rhs,
                 "central product fails to commute with u(" + g.name(h) + ")");
    }
  } else if (s.base.is_nondegenerate()) {
    bool witness = false;
    for (int h = 0; h < g.size() && !witness; ++h)
      witness = g.op(h, prod) != g.op(prod, h) ||
                s.value(h, prod) * coeff != coeff * s.value(prod, h);
    check_math(witness,
               "no non-commuting basis element despite nondegeneracy");
  }
  return central;
}

}  // namespace tga
