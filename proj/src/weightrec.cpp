#include "logmod/weightrec.hpp"

namespace logmod {

LaurentZ LaurentZ::term(const Int& coeff, long long exp) {
  LaurentZ p;
  if (coeff != 0) p.c[exp] = coeff;
  return p;
}

void LaurentZ::set(long long exp, Int v) {
  if (v == 0)
    c.erase(exp);
  else
    c[exp] = std::move(v);
}

LaurentZ operator*(const LaurentZ& a, const LaurentZ& b) {
  LaurentZ r;
  for (const auto& [ea, ca] : a.c)
    for (const auto& [eb, cb] : b.c) {
      Int& slot = r.c[ea + eb];
      slot += ca * cb;
    }
  for (auto it = r.c.begin(); it != r.c.end();)
    it = (it->second == 0) ? r.c.erase(it) : std::next(it);
  return r;
}

LaurentZ operator-(const LaurentZ& a, const LaurentZ& b) {
  LaurentZ r = a;
  for (const auto& [e, v] : b.c) {
    Int& slot = r.c[e];
    slot -= v;
    if (slot == 0) r.c.erase(e);
  }
  return r;
}

LaurentZ laurent_div_exact(const LaurentZ& num, const LaurentZ& den) {
  if (den.is_zero()) throw DomainError("Laurent division by zero");
  LaurentZ rem = num, quot;
  auto lead = std::prev(den.c.end());  // highest exponent of the divisor
  // an exact quotient cannot reach below this exponent
  const long long floor_exp =
      num.is_zero() ? 0 : num.c.begin()->first - den.c.begin()->first;
  while (!rem.is_zero()) {
    auto top = std::prev(rem.c.end());
    if (top->second % lead->second != 0)
      throw ConsistencyError("inexact Laurent division (leading coefficient)");
    Int cq = top->second / lead->second;
    long long eq = top->first - lead->first;
    if (eq < floor_exp) throw ConsistencyError("inexact Laurent division (remainder)");
    quot.set(eq, quot.c.count(eq) ? quot.c[eq] + cq : cq);
    for (const auto& [e, v] : den.c) {
      Int& slot = rem.c[eq + e];
      slot -= cq * v;
      if (slot == 0) rem.c.erase(eq + e);
    }
  }
  return quot;
}

LaurentZ gauss_binom_laurent(long long a, long long b) {
  if (b < 0) throw DomainError("negative bottom argument");
  LaurentZ num = LaurentZ::term(Int(1), 0);
  LaurentZ den = LaurentZ::term(Int(1), 0);
  for (long long i = 1; i <= b; ++i) {
    long long e = a - i + 1;
    num = num * (LaurentZ::term(Int(1), e) - LaurentZ::term(Int(1), -e));
    den = den * (LaurentZ::term(Int(1), i) - LaurentZ::term(Int(1), -i));
  }
  return laurent_div_exact(num, den);
}

CycNum laurent_eval_root(const LaurentZ& p, const std::shared_ptr<const CycField>& f,
                         long long e0) {
  long long n = f->order();
  // bucket coefficients by exponent mod N, then reduce once
  std::vector<Int> bucket(n, Int(0));
  for (const auto& [e, v] : p.c) bucket[imod(e * e0, n)] += v;
  std::vector<Rat> out(f->degree(), Rat(0));
  for (long long e = 0; e < n; ++e) {
    if (bucket[e] == 0) continue;
    const auto& row = f->power_row(e);
    for (long long i = 0; i < f->degree(); ++i)
      if (row[i] != 0) out[i] += Rat(bucket[e] * row[i]);
  }
  return CycNum(f, std::move(out));
}

CycNum gauss_binom(long long a, long long b, const std::shared_ptr<const CycField>& f,
                   long long e0) {
  if (b == 0) return CycNum::one(f);
  return laurent_eval_root(gauss_binom_laurent(a, b), f, e0);
}

TorusEigendata eigendata_of_weight(const RootDatum& d, const Weight& lambda) {
  if (!d.X.contains(lambda)) throw DomainError("weight is not in the character lattice");
  TorusEigendata e;
  auto ls = d.l_alpha_values();
  for (int i = 0; i < d.rank(); ++i) {
    long long c = lambda[i];  // <alpha_i, lambda> equals the f-coordinate
    long long ordi = d.ord_q_power(d.d[i]);
    e.m_prime.push_back(imod(c, ordi));
    // eigenvalue of the divided-power torus operator: the q^{d_alpha}-binomial
    CycNum val = gauss_binom(c, ls[i], d.field, d.k * d.r * d.d[i]);
    auto rat = val.as_rational();
    if (!rat || rat->get_den() != 1)
      throw ConsistencyError("divided-power eigenvalue is not a rational integer");
    e.n_prime.push_back(rat->get_num());
  }
  return e;
}

Weight recover_degree(const RootDatum& d, const TorusEigendata& e) {
  int n = d.rank();
  if (static_cast<int>(e.m_prime.size()) != n || static_cast<int>(e.n_prime.size()) != n)
    throw DomainError("eigendata rank mismatch");
  Weight lambda(n, 0);
  auto ls = d.l_alpha_values();
  for (int i = 0; i < n; ++i) {
    long long ordi = d.ord_q_power(d.d[i]);
    bool odd = (ordi % 2 != 0);
    long long k_alpha = odd ? ordi : ordi / 2;
    if (k_alpha != ls[i]) throw ConsistencyError("k_alpha disagrees with l_alpha");
    long long m_raw = e.m_prime[i];
    if (m_raw < 0 || m_raw >= ordi) throw DomainError("m' out of range");
    long long m = (odd || m_raw < ordi / 2) ? m_raw : m_raw - ordi / 2;
    // sign twist uses the half-order of q^{d_alpha}, which the proof's
    // rank-one reduction calls l
    Int nv = e.n_prime[i];
    if (!odd && ((k_alpha % 2) != 0) && ((nv - 1) % 2 != 0)) nv = -nv;
    Int sign = 1;
    if ((m % 2 != 0) && ((ordi - 1) % 2 != 0)) sign = -1;
    Int ci = to_int(m) + sign * to_int(k_alpha) * nv;
    if (!ci.fits_slong_p()) throw DomainError("recovered coordinate overflows");
    lambda[i] = ci.get_si();
  }
  if (!d.X.contains(lambda))
    throw ConsistencyError("recovered weight is not in the character lattice");
  return lambda;
}

}  // namespace logmod
