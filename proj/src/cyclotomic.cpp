#include "logmod/cyclotomic.hpp"

#include <map>
#include <mutex>

namespace logmod {

long long euler_phi(long long n) {
  long long r = n;
  for (long long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      r -= r / p;
    }
  if (n > 1) r -= r / n;
  return r;
}

namespace {

// quotient of exact polynomial division in Z[x], ascending coefficients
std::vector<Int> div_exact(std::vector<Int> num, const std::vector<Int>& den) {
  while (!num.empty() && num.back() == 0) num.pop_back();
  std::vector<Int> q(num.size() - den.size() + 1, Int(0));
  const Int& lead = den.back();
  for (int d = static_cast<int>(num.size()) - 1; d + 1 >= static_cast<int>(den.size()); --d) {
    if (num[d] == 0) continue;
    if (num[d] % lead != 0) throw ConsistencyError("inexact polynomial division");
    Int c = num[d] / lead;
    int off = d - static_cast<int>(den.size()) + 1;
    q[off] = c;
    for (size_t i = 0; i < den.size(); ++i) num[off + i] -= c * den[i];
  }
  for (auto& v : num)
    if (v != 0) throw ConsistencyError("inexact polynomial division");
  return q;
}

std::map<long long, std::vector<Int>> g_cyclo_cache;
std::mutex g_cyclo_mutex;

std::vector<Int> cyclotomic_rec(long long n) {
  if (auto it = g_cyclo_cache.find(n); it != g_cyclo_cache.end()) return it->second;
  std::vector<Int> result;
  if (n == 1) {
    result = {Int(-1), Int(1)};
  } else {
    // (x^n - 1) / prod_{d | n, d < n} Phi_d
    std::vector<Int> num(n + 1, Int(0));
    num[0] = -1;
    num[n] = 1;
    for (long long d = 1; d < n; ++d)
      if (n % d == 0) num = div_exact(std::move(num), cyclotomic_rec(d));
    result = std::move(num);
  }
  g_cyclo_cache[n] = result;
  return result;
}

}  // namespace

std::vector<Int> cyclotomic_polynomial(long long n) {
  if (n < 1) throw DomainError("cyclotomic order must be positive");
  std::lock_guard<std::mutex> lk(g_cyclo_mutex);
  return cyclotomic_rec(n);
}

CycField::CycField(long long n) : n_(n) {
  phi_ = cyclotomic_polynomial(n);
  deg_ = static_cast<long long>(phi_.size()) - 1;
  pow_rows_.resize(n);
  for (long long e = 0; e < n; ++e) {
    if (e < deg_) {
      std::vector<Int> row(deg_, Int(0));
      row[e] = 1;
      pow_rows_[e] = std::move(row);
    } else {
      // zeta^e = zeta * zeta^{e-1}, reduced against the monic modulus
      std::vector<Int> row(deg_, Int(0));
      const std::vector<Int>& prev = pow_rows_[e - 1];
      Int top = prev[deg_ - 1];
      for (long long i = deg_ - 1; i > 0; --i) row[i] = prev[i - 1] - top * phi_[i];
      row[0] = -top * phi_[0];
      pow_rows_[e] = std::move(row);
    }
  }
}

std::shared_ptr<const CycField> CycField::get(long long n) {
  static std::map<long long, std::shared_ptr<const CycField>> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lk(mtx);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  auto f = std::shared_ptr<const CycField>(new CycField(n));
  cache[n] = f;
  return f;
}

CycNum::CycNum(std::shared_ptr<const CycField> f, std::vector<Rat> c) : f_(std::move(f)), c_(std::move(c)) {
  if (static_cast<long long>(c_.size()) != f_->degree()) throw DomainError("bad coefficient length");
  for (auto& v : c_) v.canonicalize();
}

CycNum CycNum::zero(const std::shared_ptr<const CycField>& f) {
  return CycNum(f, std::vector<Rat>(f->degree(), Rat(0)));
}

CycNum CycNum::one(const std::shared_ptr<const CycField>& f) { return from_rat(f, Rat(1)); }

CycNum CycNum::from_rat(const std::shared_ptr<const CycField>& f, const Rat& r) {
  std::vector<Rat> c(f->degree(), Rat(0));
  c[0] = r;
  return CycNum(f, std::move(c));
}

CycNum CycNum::root(const std::shared_ptr<const CycField>& f, long long k) {
  long long e = imod(k, f->order());
  const auto& row = f->power_row(e);
  std::vector<Rat> c(f->degree());
  for (size_t i = 0; i < c.size(); ++i) c[i] = Rat(row[i]);
  return CycNum(f, std::move(c));
}

bool CycNum::is_zero() const {
  for (const auto& v : c_)
    if (v != 0) return false;
  return true;
}

bool CycNum::is_one() const {
  if (c_.empty() || c_[0] != 1) return false;
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

std::optional<Rat> CycNum::as_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return std::nullopt;
  return c_.empty() ? Rat(0) : c_[0];
}

namespace {
void check_same(const CycNum& a, const CycNum& b) {
  if (a.field()->order() != b.field()->order())
    throw DomainError("mixed cyclotomic ambient orders");
}
}  // namespace

CycNum operator+(const CycNum& a, const CycNum& b) {
  CycNum r = a;
  r += b;
  return r;
}

CycNum operator-(const CycNum& a, const CycNum& b) {
  CycNum r = a;
  r -= b;
  return r;
}

CycNum operator-(const CycNum& a) {
  std::vector<Rat> c = a.coeffs();
  for (auto& v : c) v = -v;
  return CycNum(a.field(), std::move(c));
}

CycNum& CycNum::operator+=(const CycNum& b) {
  check_same(*this, b);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += b.c_[i];
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& b) {
  check_same(*this, b);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= b.c_[i];
  return *this;
}

CycNum operator*(const CycNum& a, const CycNum& b) {
  check_same(a, b);
  const auto& f = a.field();
  long long d = f->degree();
  std::vector<Rat> prod(2 * d - 1, Rat(0));
  for (long long i = 0; i < d; ++i) {
    if (a.coeffs()[i] == 0) continue;
    for (long long j = 0; j < d; ++j) {
      if (b.coeffs()[j] == 0) continue;
      prod[i + j] += a.coeffs()[i] * b.coeffs()[j];
    }
  }
  std::vector<Rat> c(d, Rat(0));
  for (long long e = 0; e < 2 * d - 1; ++e) {
    if (prod[e] == 0) continue;
    if (e < d) {
      c[e] += prod[e];
    } else {
      const auto& row = f->power_row(e % f->order());
      for (long long i = 0; i < d; ++i)
        if (row[i] != 0) c[i] += prod[e] * Rat(row[i]);
    }
  }
  return CycNum(f, std::move(c));
}

CycNum& CycNum::operator*=(const CycNum& b) {
  *this = *this * b;
  return *this;
}

CycNum CycNum::inv() const {
  if (is_zero()) throw DomainError("division by zero in cyclotomic field");
  // extended gcd of the representing polynomial with the modulus, over Q[x]
  long long d = f_->degree();
  std::vector<Rat> r0(f_->modulus().size());
  for (size_t i = 0; i < r0.size(); ++i) r0[i] = Rat(f_->modulus()[i]);
  std::vector<Rat> r1 = c_;
  while (!r1.empty() && r1.back() == 0) r1.pop_back();
  std::vector<Rat> s0 = {Rat(0)}, s1 = {Rat(1)};  // coefficients of *this

  auto degree = [](const std::vector<Rat>& p) { return static_cast<long long>(p.size()) - 1; };
  auto trim = [](std::vector<Rat>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
  };

  while (degree(r1) > 0) {
    // r0 = q * r1 + r2
    std::vector<Rat> q(degree(r0) - degree(r1) + 1, Rat(0));
    std::vector<Rat> rem = r0;
    for (long long k = degree(rem); k >= degree(r1); --k) {
      if (rem[k] == 0) continue;
      Rat c = rem[k] / r1.back();
      q[k - degree(r1)] = c;
      for (size_t i = 0; i < r1.size(); ++i) rem[k - degree(r1) + i] -= c * r1[i];
    }
    trim(rem);
    // s2 = s0 - q * s1
    std::vector<Rat> s2 = s0;
    s2.resize(std::max(s0.size(), q.size() + s1.size() - 1), Rat(0));
    for (size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
    }
    trim(s2);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r1.empty()) throw ConsistencyError("element shares a factor with the modulus");
  // r1 is a nonzero constant: inverse = s1 / r1[0], reduced mod Phi_N
  std::vector<Rat> c(d, Rat(0));
  for (size_t i = 0; i < s1.size(); ++i) {
    Rat v = s1[i] / r1[0];
    if (v == 0) continue;
    if (static_cast<long long>(i) < d) {
      c[i] += v;
    } else {
      const auto& row = f_->power_row(static_cast<long long>(i) % f_->order());
      for (long long j = 0; j < d; ++j)
        if (row[j] != 0) c[j] += v * Rat(row[j]);
    }
  }
  CycNum result(f_, std::move(c));
  return result;
}

CycNum CycNum::pow(long long e) const {
  if (e < 0) return inv().pow(-e);
  CycNum acc = one(f_);
  CycNum base = *this;
  while (e) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

bool CycNum::operator==(const CycNum& b) const {
  if (f_->order() != b.f_->order()) return false;
  return c_ == b.c_;
}

}  // namespace logmod
