#pragma once

#include <functional>

#include "logmod/report.hpp"
#include "logmod/rootdata.hpp"

namespace logmod {

// Section-based balancing function: omega(a, a') = q^{-(a, x)} where
// a' = x + s(z), x in X^M, z the class of a'.  X-linear in the first slot,
// X^M-semilinear in the second, trivial on X^M x X.
class BalancingFunction {
 public:
  BalancingFunction(std::shared_ptr<const RootDatum> d, uint64_t section_seed = 0);

  const RootDatum& datum() const { return *d_; }
  const std::shared_ptr<const RootDatum>& datum_ptr() const { return d_; }
  uint64_t section_seed() const { return seed_; }

  // section rep of the class with linear index zi (possibly perturbed)
  const Weight& section(long long zi) const { return section_[zi]; }
  long long zsize() const { return static_cast<long long>(section_.size()); }

  CycNum omega(const Weight& a, const Weight& aprime) const;
  CycNum omega_inv(const Weight& a, const Weight& aprime) const;

 private:
  std::shared_ptr<const RootDatum> d_;
  uint64_t seed_;
  std::vector<Weight> section_;
};

BalancingFunction make_balancing(std::shared_ptr<const RootDatum> d, uint64_t section_seed = 0);

using OmegaFn = std::function<CycNum(const Weight&, const Weight&)>;

// Checks the three defining properties over section reps, X^M generators and
// seeded random lattice points.  The callable form lets tests feed a
// tampered omega as a negative control.
Report verify_balancing(const RootDatum& d, const OmegaFn& omega, int samples, uint64_t seed);
Report verify_balancing(const BalancingFunction& b, int samples, uint64_t seed);

// All quasi-Hopf coefficient tables on the finite quotient, one slot per
// linear Z index.  Every table is checked to be constant on X^M-cosets.
struct QuasiTables {
  long long nz = 0;
  std::vector<CycNum> phi;      // nz^3, index (z * nz + z') * nz + z''
  std::vector<CycNum> beta;     // nz
  std::vector<CycNum> tau2inv;  // nz, omega(s, s)^2
  // per simple root: gamma = +alpha_i and -alpha_i
  std::vector<std::vector<CycNum>> Lcal_plus, Lcal_minus;  // rank x nz
  std::vector<std::vector<CycNum>> L_plus, L_minus;
  std::vector<std::vector<CycNum>> iota_phi_inv_plus, iota_phi_inv_minus;  // rank x nz^2
  std::vector<std::vector<CycNum>> sE, sF;  // twisted-antipode coefficients

  const CycNum& phi_at(long long z1, long long z2, long long z3) const {
    return phi[(z1 * nz + z2) * nz + z3];
  }
};

QuasiTables derive_tables(const BalancingFunction& b);

// Exhaustive 3-cocycle check of a phi table over Z^4.
bool cocycle_check(const std::vector<CycNum>& phi, const QuotientZ& z);

}  // namespace logmod
