#pragma once

#include <optional>

#include "logmod/common.hpp"

namespace logmod {

// Dense arbitrary-precision integer matrix, row-major.
struct IntMat {
  int rows = 0, cols = 0;
  std::vector<Int> a;

  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Int(0)) {}

  Int& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Int& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static IntMat identity(int n);
  IntMat transpose() const;
  bool operator==(const IntMat& o) const = default;
};

IntMat mul(const IntMat& x, const IntMat& y);
IntMat mul_scalar(const Int& c, const IntMat& x);

// Determinant by fraction-free Gaussian elimination (Bareiss).
Int det(const IntMat& m);

// Column-style Hermite normal form: returns H with H = M * U for some
// unimodular U, columns of H generate the same column lattice as M.
// Zero columns are dropped; pivots are positive; entries right of a pivot,
// in the pivot row, are reduced into [0, pivot).  Canonical for a lattice.
IntMat hnf_cols(const IntMat& m);

struct SnfResult {
  IntMat u, s, v;  // u * m * v == s, u and v unimodular, s diagonal with
                   // s[0][0] | s[1][1] | ...
};
SnfResult snf(const IntMat& m);

// Inverse of a unimodular integer matrix.
IntMat inverse_unimodular(const IntMat& m);

// Solve m * x = b over the integers for square nonsingular m.
std::optional<std::vector<Int>> solve_integral(const IntMat& m, const std::vector<Int>& b);

// Rational matrix as numerator matrix plus common denominator.
struct RatMat {
  IntMat num;
  Int den = 1;
};

// Inverse of a nonsingular integer matrix, exact.
RatMat inverse_rational(const IntMat& m);

}  // namespace logmod
