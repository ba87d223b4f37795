#pragma once

#include <map>

#include "logmod/rootdata.hpp"

namespace logmod {

// Laurent polynomial over Z, sparse in the exponent.
struct LaurentZ {
  std::map<long long, Int> c;

  static LaurentZ term(const Int& coeff, long long exp);
  bool is_zero() const { return c.empty(); }
  void set(long long exp, Int v);
  friend LaurentZ operator*(const LaurentZ& a, const LaurentZ& b);
  friend LaurentZ operator-(const LaurentZ& a, const LaurentZ& b);
  bool operator==(const LaurentZ& o) const = default;
};

// Exact quotient num / den; throws ConsistencyError if the division leaves a
// remainder.
LaurentZ laurent_div_exact(const LaurentZ& num, const LaurentZ& den);

// Gaussian binomial for arbitrary integer top argument, as the exact Laurent
// polynomial  prod_{i=1}^{b} (v^{a-i+1} - v^{-(a-i+1)}) / (v^i - v^{-i}).
LaurentZ gauss_binom_laurent(long long a, long long b);

// Specialize a Laurent polynomial at zeta_N^{e0}.
CycNum laurent_eval_root(const LaurentZ& p, const std::shared_ptr<const CycField>& f,
                         long long e0);

// gauss_binom evaluated at a root of unity v = zeta_N^{e0}
CycNum gauss_binom(long long a, long long b, const std::shared_ptr<const CycField>& f,
                   long long e0);

struct TorusEigendata {
  // per simple root
  std::vector<long long> m_prime;  // in [0, ord(q^{d_alpha}))
  std::vector<Int> n_prime;        // exact divided-power eigenvalue
};

TorusEigendata eigendata_of_weight(const RootDatum& d, const Weight& lambda);

// Inverse of eigendata_of_weight on X.  Throws ConsistencyError if the
// reconstructed weight does not lie in the character lattice.
Weight recover_degree(const RootDatum& d, const TorusEigendata& e);

}  // namespace logmod
