#include "logmod/balancing.hpp"

#include "logmod/admissibility.hpp"

namespace logmod {

BalancingFunction::BalancingFunction(std::shared_ptr<const RootDatum> d, uint64_t section_seed)
    : d_(std::move(d)), seed_(section_seed) {
  const QuotientZ& z = d_->quotient_Z();
  section_ = z.section_table;
  if (seed_ != 0) {
    // perturb the section by X^M elements; the class map is unchanged and
    // section(0) stays 0, so this picks a twist-equivalent balancing function
    Rng rng(seed_);
    const LatticeSubgroup& xm = d_->xm_sublattice();
    for (long long i = 1; i < static_cast<long long>(section_.size()); ++i) {
      Weight delta(d_->rank(), 0);
      for (int j = 0; j < xm.hnf.cols; ++j)
        delta = wadd(delta, wscale(rng.range(-2, 2), xm.column(j)));
      section_[i] = wadd(section_[i], delta);
    }
  }
}

CycNum BalancingFunction::omega(const Weight& a, const Weight& aprime) const {
  long long zi = d_->quotient_Z().project_idx(aprime);
  Weight x = wsub(aprime, section_[zi]);
  return d_->q_power(-d_->scaled_pairing(a, x));
}

CycNum BalancingFunction::omega_inv(const Weight& a, const Weight& aprime) const {
  long long zi = d_->quotient_Z().project_idx(aprime);
  Weight x = wsub(aprime, section_[zi]);
  return d_->q_power(d_->scaled_pairing(a, x));
}

BalancingFunction make_balancing(std::shared_ptr<const RootDatum> d, uint64_t section_seed) {
  AdmissibilityVerdict v = check_admissibility(*d);
  if (!v.strongly_admissible)
    throw DomainError("balancing functions require a strongly admissible lattice");
  return BalancingFunction(std::move(d), section_seed);
}

namespace {

Weight random_lattice_point(const RootDatum& d, Rng& rng, long long spread) {
  Weight w(d.rank(), 0);
  for (int j = 0; j < d.X.hnf.cols; ++j)
    w = wadd(w, wscale(rng.range(-spread, spread), d.X.column(j)));
  return w;
}

Weight random_xm_point(const RootDatum& d, Rng& rng, long long spread) {
  Weight w(d.rank(), 0);
  const LatticeSubgroup& xm = d.xm_sublattice();
  for (int j = 0; j < xm.hnf.cols; ++j)
    w = wadd(w, wscale(rng.range(-spread, spread), xm.column(j)));
  return w;
}

}  // namespace

Report verify_balancing(const RootDatum& d, const OmegaFn& omega, int samples, uint64_t seed) {
  Report rep;
  rep.config = Json{{"samples", samples}, {"seed", seed}};
  Rng rng(seed);
  const QuotientZ& z = d.quotient_Z();

  // pools: all section reps, X^M generators, plus random points
  std::vector<Weight> pool;
  for (long long i = 0; i < z.size; ++i) pool.push_back(z.section_table[i]);
  for (int j = 0; j < d.xm_sublattice().hnf.cols; ++j)
    pool.push_back(d.xm_sublattice().column(j));
  for (int s = 0; s < samples; ++s) pool.push_back(random_lattice_point(d, rng, 3));

  // (a): X-linearity in the first argument
  {
    bool ok = true;
    Json witness;
    for (size_t i = 0; i < pool.size() && ok; i += 3)
      for (size_t j = 1; j < pool.size() && ok; j += 3)
        for (size_t k2 = 2; k2 < pool.size() && ok; k2 += 3) {
          const Weight &a = pool[i], &a2 = pool[j], &ap = pool[k2];
          if (omega(wadd(a, a2), ap) != omega(a, ap) * omega(a2, ap)) {
            ok = false;
            witness = Json{{"a", weight_to_json(a)}, {"a2", weight_to_json(a2)},
                           {"aprime", weight_to_json(ap)}};
          }
        }
    rep.add(ok ? CheckResult::pass("omega-linearity-first-arg")
               : CheckResult::fail("omega-linearity-first-arg", witness));
  }

  // (b): X^M-semilinearity in the second argument
  {
    bool ok = true;
    Json witness;
    for (size_t i = 0; i < pool.size() && ok; ++i) {
      Weight x = random_xm_point(d, rng, 2);
      for (size_t j = 0; j < pool.size() && ok; j += 2) {
        const Weight &a = pool[i], &ap = pool[j];
        CycNum lhs = omega(a, wadd(ap, x));
        CycNum rhs = d.q_power(-d.scaled_pairing(a, x)) * omega(a, ap);
        if (lhs != rhs) {
          ok = false;
          witness = Json{{"a", weight_to_json(a)}, {"aprime", weight_to_json(ap)},
                         {"x", weight_to_json(x)}};
        }
      }
    }
    rep.add(ok ? CheckResult::pass("omega-xm-semilinearity")
               : CheckResult::fail("omega-xm-semilinearity", witness));
  }

  // (c): trivial on X^M x X
  {
    bool ok = true;
    Json witness;
    for (int g = 0; g < d.xm_sublattice().hnf.cols && ok; ++g) {
      Weight x = d.xm_sublattice().column(g);
      for (size_t j = 0; j < pool.size() && ok; ++j)
        if (!omega(x, pool[j]).is_one()) {
          ok = false;
          witness = Json{{"x", weight_to_json(x)}, {"aprime", weight_to_json(pool[j])}};
        }
    }
    for (int s = 0; s < samples && ok; ++s) {
      Weight x = random_xm_point(d, rng, 2);
      Weight ap = random_lattice_point(d, rng, 3);
      if (!omega(x, ap).is_one()) {
        ok = false;
        witness = Json{{"x", weight_to_json(x)}, {"aprime", weight_to_json(ap)}};
      }
    }
    rep.add(ok ? CheckResult::pass("omega-trivial-on-xm")
               : CheckResult::fail("omega-trivial-on-xm", witness));
  }
  return rep;
}

Report verify_balancing(const BalancingFunction& b, int samples, uint64_t seed) {
  return verify_balancing(
      b.datum(), [&](const Weight& x, const Weight& y) { return b.omega(x, y); }, samples,
      seed);
}

namespace {

// check f(rep + g) == f(rep) for every X^M generator g in the given slot
template <typename F>
void check_coset_constant(const RootDatum& d, const BalancingFunction& b, const F& eval,
                          int arity, const char* what) {
  const QuotientZ& z = d.quotient_Z();
  const LatticeSubgroup& xm = d.xm_sublattice();
  long long nz = z.size;
  std::vector<long long> idx(arity, 0);
  while (true) {
    std::vector<Weight> args(arity);
    for (int i = 0; i < arity; ++i) args[i] = b.section(idx[i]);
    CycNum base = eval(args);
    for (int slot = 0; slot < arity; ++slot)
      for (int g = 0; g < xm.hnf.cols; ++g) {
        std::vector<Weight> shifted = args;
        shifted[slot] = wadd(shifted[slot], xm.column(g));
        if (eval(shifted) != base)
          throw ConsistencyError(std::string("table not constant on cosets: ") + what);
      }
    int p = arity - 1;
    while (p >= 0 && ++idx[p] == nz) idx[p--] = 0;
    if (p < 0) break;
  }
}

}  // namespace

QuasiTables derive_tables(const BalancingFunction& b) {
  const RootDatum& d = b.datum();
  const QuotientZ& zq = d.quotient_Z();
  long long nz = zq.size;
  QuasiTables t;
  t.nz = nz;

  auto om = [&](const Weight& x, const Weight& y) { return b.omega(x, y); };
  auto omi = [&](const Weight& x, const Weight& y) { return b.omega_inv(x, y); };

  auto phi_fn = [&](const std::vector<Weight>& a) {
    return om(a[0], a[2]) * omi(a[0], wadd(a[1], a[2])) * om(a[0], a[1]);
  };
  check_coset_constant(d, b, phi_fn, 3, "phi");
  t.phi.reserve(nz * nz * nz);
  for (long long z1 = 0; z1 < nz; ++z1)
    for (long long z2 = 0; z2 < nz; ++z2)
      for (long long z3 = 0; z3 < nz; ++z3)
        t.phi.push_back(phi_fn({b.section(z1), b.section(z2), b.section(z3)}));

  auto beta_fn = [&](const std::vector<Weight>& a) {
    return omi(a[0], a[0]) * omi(a[0], wneg(a[0]));
  };
  check_coset_constant(d, b, beta_fn, 1, "beta");
  auto tau2_fn = [&](const std::vector<Weight>& a) {
    CycNum w = om(a[0], a[0]);
    return w * w;
  };
  check_coset_constant(d, b, tau2_fn, 1, "tau^-2");
  for (long long z = 0; z < nz; ++z) {
    t.beta.push_back(beta_fn({b.section(z)}));
    t.tau2inv.push_back(tau2_fn({b.section(z)}));
  }

  int n = d.rank();
  t.Lcal_plus.resize(n);
  t.Lcal_minus.resize(n);
  t.L_plus.resize(n);
  t.L_minus.resize(n);
  t.iota_phi_inv_plus.resize(n);
  t.iota_phi_inv_minus.resize(n);
  t.sE.resize(n);
  t.sF.resize(n);
  for (int i = 0; i < n; ++i) {
    Weight alpha = d.simple_root(i);
    Weight malpha = wneg(alpha);
    auto lcal = [&](const Weight& gamma, const std::vector<Weight>& a) {
      return d.q_power(-d.scaled_pairing(gamma, a[0])) * om(gamma, a[0]);
    };
    auto lfun = [&](const Weight& gamma, const std::vector<Weight>& a) {
      return om(a[0], gamma);
    };
    auto iota = [&](const Weight& gamma, const std::vector<Weight>& a) {
      return phi_fn({a[0], a[1], gamma}).inv();
    };
    // twisted-antipode coefficients from the tau-conjugated antipode:
    //   S(E-type) picks up q^{-(alpha, mu - alpha)} omega(mu,mu) / omega(mu-a, mu-a)
    //   S(F-type) picks up q^{ (alpha, mu + alpha)} omega(mu,mu) / omega(mu+a, mu+a)
    auto se = [&](const std::vector<Weight>& a) {
      Weight mu = a[0];
      Weight mua = wsub(mu, alpha);
      return d.q_power(-d.scaled_pairing(alpha, mua)) * om(mu, mu) * omi(mua, mua);
    };
    auto sf = [&](const std::vector<Weight>& a) {
      Weight mu = a[0];
      Weight mua = wadd(mu, alpha);
      return d.q_power(d.scaled_pairing(alpha, mua)) * om(mu, mu) * omi(mua, mua);
    };
    auto bindg = [&](auto fn, const Weight& g) {
      return [fn, g](const std::vector<Weight>& a) { return fn(g, a); };
    };
    check_coset_constant(d, b, bindg(lcal, alpha), 1, "Lcal");
    check_coset_constant(d, b, bindg(lfun, alpha), 1, "L");
    check_coset_constant(d, b, bindg(iota, alpha), 2, "iota_phi_inv");
    check_coset_constant(d, b, se, 1, "sE");
    check_coset_constant(d, b, sf, 1, "sF");
    for (long long z = 0; z < nz; ++z) {
      t.Lcal_plus[i].push_back(lcal(alpha, {b.section(z)}));
      t.Lcal_minus[i].push_back(lcal(malpha, {b.section(z)}));
      t.L_plus[i].push_back(lfun(alpha, {b.section(z)}));
      t.L_minus[i].push_back(lfun(malpha, {b.section(z)}));
      t.sE[i].push_back(se({b.section(z)}));
      t.sF[i].push_back(sf({b.section(z)}));
    }
    for (long long z1 = 0; z1 < nz; ++z1)
      for (long long z2 = 0; z2 < nz; ++z2) {
        t.iota_phi_inv_plus[i].push_back(iota(alpha, {b.section(z1), b.section(z2)}));
        t.iota_phi_inv_minus[i].push_back(iota(malpha, {b.section(z1), b.section(z2)}));
      }
  }
  return t;
}

bool cocycle_check(const std::vector<CycNum>& phi, const QuotientZ& z) {
  long long nz = z.size;
  if (static_cast<long long>(phi.size()) != nz * nz * nz)
    throw DomainError("phi table has wrong size");
  auto at = [&](long long a, long long b, long long c) -> const CycNum& {
    return phi[(a * nz + b) * nz + c];
  };
  for (long long x = 0; x < nz; ++x)
    for (long long y = 0; y < nz; ++y)
      for (long long zz = 0; zz < nz; ++zz)
        for (long long w = 0; w < nz; ++w) {
          CycNum lhs = at(y, zz, w) * at(x, z.add_idx(y, zz), w) * at(x, y, zz);
          CycNum rhs = at(z.add_idx(x, y), zz, w) * at(x, y, z.add_idx(zz, w));
          if (lhs != rhs) return false;
        }
  return true;
}

}  // namespace logmod
