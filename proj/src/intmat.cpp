#include "logmod/intmat.hpp"

namespace logmod {

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::transpose() const {
  IntMat t(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMat mul(const IntMat& x, const IntMat& y) {
  if (x.cols != y.rows) throw DomainError("matrix dimension mismatch");
  IntMat r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      if (x.at(i, k) == 0) continue;
      for (int j = 0; j < y.cols; ++j) r.at(i, j) += x.at(i, k) * y.at(k, j);
    }
  return r;
}

IntMat mul_scalar(const Int& c, const IntMat& x) {
  IntMat r = x;
  for (auto& v : r.a) v *= c;
  return r;
}

Int det(const IntMat& m) {
  if (m.rows != m.cols) throw DomainError("det of non-square matrix");
  int n = m.rows;
  if (n == 0) return 1;
  IntMat w = m;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (w.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (w.at(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int t = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
        w.at(i, j) = t / prev;  // Bareiss: division is exact
      }
    prev = w.at(k, k);
  }
  return sign > 0 ? w.at(n - 1, n - 1) : Int(-w.at(n - 1, n - 1));
}

namespace {

void swap_cols(IntMat& m, int j1, int j2) {
  for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, j1), m.at(i, j2));
}

// col[j2] -= q * col[j1]
void axpy_col(IntMat& m, const Int& q, int j1, int j2) {
  if (q == 0) return;
  for (int i = 0; i < m.rows; ++i) m.at(i, j2) -= q * m.at(i, j1);
}

}  // namespace

IntMat hnf_cols(const IntMat& m_in) {
  IntMat m = m_in;
  int pr = 0;  // pivot row
  int pc = 0;  //, column
  while (pr < m.rows && pc < m.cols) {
    // eliminate row pr across columns [pc, cols) by gcd steps
    while (true) {
      int nz = -1;
      for (int j = pc + 1; j < m.cols; ++j)
        if (m.at(pr, j) != 0) {
          nz = j;
          break;
        }
      if (m.at(pr, pc) == 0) {
        if (nz < 0) break;
        swap_cols(m, pc, nz);
        continue;
      }
      if (nz < 0) break;
      // reduce the pair (pc, nz)
      Int q = m.at(pr, nz) / m.at(pr, pc);
      axpy_col(m, q, pc, nz);
      if (m.at(pr, nz) != 0) swap_cols(m, pc, nz);
    }
    if (m.at(pr, pc) == 0) {
      ++pr;  // no pivot in this row
      continue;
    }
    if (m.at(pr, pc) < 0)
      for (int i = 0; i < m.rows; ++i) m.at(i, pc) = -m.at(i, pc);
    // reduce earlier columns against this pivot
    for (int j = 0; j < pc; ++j) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), m.at(pr, j).get_mpz_t(), m.at(pr, pc).get_mpz_t());
      axpy_col(m, q, pc, j);
    }
    ++pr;
    ++pc;
  }
  // drop zero columns
  int keep = pc;
  IntMat h(m.rows, keep);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < keep; ++j) h.at(i, j) = m.at(i, j);
  return h;
}

SnfResult snf(const IntMat& m_in) {
  SnfResult r;
  r.s = m_in;
  r.u = IntMat::identity(m_in.rows);
  r.v = IntMat::identity(m_in.cols);
  IntMat& s = r.s;
  int n = std::min(s.rows, s.cols);

  auto row_op = [&](const Int& q, int i1, int i2) {  // row[i2] -= q*row[i1]
    if (q == 0) return;
    for (int j = 0; j < s.cols; ++j) s.at(i2, j) -= q * s.at(i1, j);
    for (int j = 0; j < r.u.cols; ++j) r.u.at(i2, j) -= q * r.u.at(i1, j);
  };
  auto col_op = [&](const Int& q, int j1, int j2) {
    if (q == 0) return;
    for (int i = 0; i < s.rows; ++i) s.at(i, j2) -= q * s.at(i, j1);
    for (int i = 0; i < r.v.rows; ++i) r.v.at(i, j2) -= q * r.v.at(i, j1);
  };
  auto row_swap = [&](int i1, int i2) {
    if (i1 == i2) return;
    for (int j = 0; j < s.cols; ++j) std::swap(s.at(i1, j), s.at(i2, j));
    for (int j = 0; j < r.u.cols; ++j) std::swap(r.u.at(i1, j), r.u.at(i2, j));
  };
  auto col_swap = [&](int j1, int j2) {
    if (j1 == j2) return;
    for (int i = 0; i < s.rows; ++i) std::swap(s.at(i, j1), s.at(i, j2));
    for (int i = 0; i < r.v.rows; ++i) std::swap(r.v.at(i, j1), r.v.at(i, j2));
  };

  for (int k = 0; k < n; ++k) {
    // find nonzero pivot with minimal absolute value
    int pi = -1, pj = -1;
    Int best;
    for (int i = k; i < s.rows; ++i)
      for (int j = k; j < s.cols; ++j)
        if (s.at(i, j) != 0) {
          Int v = abs(s.at(i, j));
          if (pi < 0 || v < best) {
            best = v;
            pi = i;
            pj = j;
          }
        }
    if (pi < 0) break;
    row_swap(k, pi);
    col_swap(k, pj);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = k + 1; i < s.rows; ++i)
        if (s.at(i, k) != 0) {
          Int q = s.at(i, k) / s.at(k, k);
          row_op(q, k, i);
          if (s.at(i, k) != 0) {
            row_swap(k, i);
            clean = false;
          }
        }
      for (int j = k + 1; j < s.cols; ++j)
        if (s.at(k, j) != 0) {
          Int q = s.at(k, j) / s.at(k, k);
          col_op(q, k, j);
          if (s.at(k, j) != 0) {
            col_swap(k, j);
            clean = false;
          }
        }
    }
    if (s.at(k, k) < 0) {
      for (int j = 0; j < s.cols; ++j) s.at(k, j) = -s.at(k, j);
      for (int j = 0; j < r.u.cols; ++j) r.u.at(k, j) = -r.u.at(k, j);
    }
  }
  // enforce divisibility chain
  for (int k = 0; k + 1 < n; ++k) {
    for (int j = k + 1; j < n; ++j) {
      if (s.at(j, j) == 0) continue;
      if (s.at(k, k) == 0 || s.at(j, j) % s.at(k, k) != 0) {
        // fold s[j][j] into position k: add column j to column k, re-reduce 2x2
        col_op(Int(-1), j, k);
        // now rows k and j both touch column k
        while (s.at(j, k) != 0) {
          Int q = s.at(k, k) / s.at(j, k);
          row_op(q, j, k);
          row_swap(k, j);
        }
        // clear the fill-in in row k, column j
        if (s.at(k, k) != 0) {
          Int q = s.at(k, j) / s.at(k, k);
          col_op(q, k, j);
        }
        if (s.at(k, k) < 0) {
          for (int jj = 0; jj < s.cols; ++jj) s.at(k, jj) = -s.at(k, jj);
          for (int jj = 0; jj < r.u.cols; ++jj) r.u.at(k, jj) = -r.u.at(k, jj);
        }
        if (s.at(j, j) < 0) {
          for (int jj = 0; jj < s.cols; ++jj) s.at(j, jj) = -s.at(j, jj);
          for (int jj = 0; jj < r.u.cols; ++jj) r.u.at(j, jj) = -r.u.at(j, jj);
        }
        k = -1;  // restart the chain check
        break;
      }
    }
  }
  return r;
}

IntMat inverse_unimodular(const IntMat& m) {
  RatMat inv = inverse_rational(m);
  if (inv.den != 1 && inv.den != -1) throw DomainError("matrix is not unimodular");
  IntMat r = inv.num;
  if (inv.den == -1)
    for (auto& v : r.a) v = -v;
  return r;
}

RatMat inverse_rational(const IntMat& m) {
  if (m.rows != m.cols) throw DomainError("inverse of non-square matrix");
  int n = m.rows;
  Int d = det(m);
  if (d == 0) throw DomainError("singular matrix");
  // adjugate via cofactors; n is small here
  IntMat adj(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      IntMat minor(n - 1, n - 1);
      for (int r2 = 0, rr = 0; r2 < n; ++r2) {
        if (r2 == i) continue;
        for (int c2 = 0, cc = 0; c2 < n; ++c2) {
          if (c2 == j) continue;
          minor.at(rr, cc) = m.at(r2, c2);
          ++cc;
        }
        ++rr;
      }
      Int cof = (n == 1) ? Int(1) : det(minor);
      if ((i + j) % 2) cof = -cof;
      adj.at(j, i) = cof;
    }
  return RatMat{adj, d};
}

std::optional<std::vector<Int>> solve_integral(const IntMat& m, const std::vector<Int>& b) {
  RatMat inv = inverse_rational(m);
  int n = m.rows;
  std::vector<Int> x(n);
  for (int i = 0; i < n; ++i) {
    Int acc = 0;
    for (int j = 0; j < n; ++j) acc += inv.num.at(i, j) * b[j];
    if (acc % inv.den != 0) return std::nullopt;
    x[i] = acc / inv.den;
  }
  return x;
}

}  // namespace logmod
