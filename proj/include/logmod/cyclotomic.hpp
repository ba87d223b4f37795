#pragma once

#include <memory>
#include <optional>

#include "logmod/common.hpp"

namespace logmod {

long long euler_phi(long long n);

// Coefficients of the N-th cyclotomic polynomial, ascending degree, monic.
std::vector<Int> cyclotomic_polynomial(long long n);

// Shared per-order context: the modulus and reduction rows for every power
// zeta^e, 0 <= e < N, in the power basis 1, zeta, ..., zeta^{phi(N)-1}.
class CycField {
 public:
  static std::shared_ptr<const CycField> get(long long n);

  long long order() const { return n_; }
  long long degree() const { return deg_; }
  const std::vector<Int>& modulus() const { return phi_; }
  // reduction of zeta^e, 0 <= e < N, as an integer coefficient row
  const std::vector<Int>& power_row(long long e) const { return pow_rows_[e]; }

 private:
  explicit CycField(long long n);
  long long n_, deg_;
  std::vector<Int> phi_;
  std::vector<std::vector<Int>> pow_rows_;
};

// An element of Q(zeta_N) in the canonical power basis.
class CycNum {
 public:
  CycNum() = default;
  CycNum(std::shared_ptr<const CycField> f, std::vector<Rat> c);

  static CycNum zero(const std::shared_ptr<const CycField>& f);
  static CycNum one(const std::shared_ptr<const CycField>& f);
  static CycNum from_rat(const std::shared_ptr<const CycField>& f, const Rat& r);
  // zeta_N^k, any integer k
  static CycNum root(const std::shared_ptr<const CycField>& f, long long k);

  const std::shared_ptr<const CycField>& field() const { return f_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  // If the element is a rational number, return it.
  std::optional<Rat> as_rational() const;

  friend CycNum operator+(const CycNum& a, const CycNum& b);
  friend CycNum operator-(const CycNum& a, const CycNum& b);
  friend CycNum operator-(const CycNum& a);
  friend CycNum operator*(const CycNum& a, const CycNum& b);
  CycNum& operator+=(const CycNum& b);
  CycNum& operator-=(const CycNum& b);
  CycNum& operator*=(const CycNum& b);
  CycNum inv() const;  // throws DomainError on zero
  CycNum pow(long long e) const;
  bool operator==(const CycNum& b) const;
  bool operator!=(const CycNum& b) const { return !(*this == b); }

 private:
  std::shared_ptr<const CycField> f_;
  std::vector<Rat> c_;
};

}  // namespace logmod
