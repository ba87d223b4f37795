#include "logmod/rootdata.hpp"

#include <algorithm>
#include <set>

namespace logmod {

bool valid_cartan_type(char family, int rank) {
  switch (family) {
    case 'A': return rank >= 1;
    case 'B': return rank >= 2;
    case 'C': return rank >= 2;
    case 'D': return rank >= 4;
    case 'E': return rank >= 6 && rank <= 8;
    case 'F': return rank == 4;
    case 'G': return rank == 2;
    default: return false;
  }
}

CartanType parse_cartan_type(const std::string& s) {
  if (s.size() < 2) throw UsageError("bad Cartan type: " + s);
  char fam = static_cast<char>(std::toupper(s[0]));
  int rank = 0;
  try {
    rank = std::stoi(s.substr(1));
  } catch (...) {
    throw UsageError("bad Cartan type: " + s);
  }
  if (!valid_cartan_type(fam, rank)) throw UsageError("invalid Cartan type: " + s);
  return CartanType{fam, rank};
}

// Edges carry (i, j, a_ij, a_ji) for i < j; everything else is diagonal 2.
IntMat cartan_matrix(const CartanType& t) {
  int n = t.rank;
  IntMat a = IntMat::identity(n);
  for (auto& v : a.a) v *= 2;
  auto link = [&](int i, int j, int aij, int aji) {
    a.at(i, j) = aij;
    a.at(j, i) = aji;
  };
  switch (t.family) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1, -1);
      break;
    case 'B':  // last root short: d = (2,..,2,1)
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1, -1);
      link(n - 2, n - 1, -1, -2);
      break;
    case 'C':  // last root long: d = (1,..,1,2)
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1, -1);
      link(n - 2, n - 1, -2, -1);
      break;
    case 'D':
      for (int i = 0; i + 3 < n; ++i) link(i, i + 1, -1, -1);
      link(n - 3, n - 2, -1, -1);
      link(n - 3, n - 1, -1, -1);
      break;
    case 'E':
      // Bourbaki: node 2 attaches to node 4 (1-indexed); chain 1-3-4-5-6-...
      {
        auto L = [&](int i, int j) { link(i - 1, j - 1, -1, -1); };
        L(1, 3);
        L(3, 4);
        L(2, 4);
        L(4, 5);
        L(5, 6);
        if (n >= 7) L(6, 7);
        if (n >= 8) L(7, 8);
      }
      break;
    case 'F':  // d = (2,2,1,1)
      link(0, 1, -1, -1);
      link(1, 2, -1, -2);
      link(2, 3, -1, -1);
      break;
    case 'G':  // alpha_1 short (d=1), alpha_2 long (d=3)
      link(0, 1, -3, -1);
      break;
    default:
      throw UsageError("invalid Cartan family");
  }
  return a;
}

std::vector<int> symmetrizers(const CartanType& t) {
  int n = t.rank;
  std::vector<int> d(n, 1);
  switch (t.family) {
    case 'B':
      for (int i = 0; i + 1 < n; ++i) d[i] = 2;
      break;
    case 'C':
      d[n - 1] = 2;
      break;
    case 'F':
      d[0] = d[1] = 2;
      break;
    case 'G':
      d[1] = 3;
      break;
    default:
      break;
  }
  return d;
}

bool LatticeSubgroup::contains(const Weight& w) const { return coords(w).has_value(); }

std::optional<std::vector<Int>> LatticeSubgroup::coords(const Weight& w) const {
  std::vector<Int> b(w.size());
  for (size_t i = 0; i < w.size(); ++i) b[i] = to_int(w[i]);
  return solve_integral(hnf, b);
}

Weight LatticeSubgroup::column(int j) const {
  Weight w(hnf.rows);
  for (int i = 0; i < hnf.rows; ++i) w[i] = hnf.at(i, j).get_si();
  return w;
}

long long pq_exponent(const CartanType& t) {
  SnfResult s = snf(cartan_matrix(t));
  Int e = 1;
  for (int i = 0; i < s.s.rows; ++i)
    if (s.s.at(i, i) > e) e = s.s.at(i, i);
  return e.get_si();
}

std::vector<long long> QuotientZ::project(const Weight& w) const {
  std::vector<Int> b(w.size());
  for (size_t i = 0; i < w.size(); ++i) b[i] = to_int(w[i]);
  auto u_opt = solve_integral(x_basis, b);
  if (!u_opt) throw DomainError("weight is not in the character lattice");
  int n = x_basis.rows;
  std::vector<long long> z(n);
  for (int i = 0; i < n; ++i) {
    Int acc = 0;
    for (int j = 0; j < n; ++j) acc += u.at(i, j) * (*u_opt)[j];
    Int m = to_int(diag[i]);
    Int rres;
    mpz_fdiv_r(rres.get_mpz_t(), acc.get_mpz_t(), m.get_mpz_t());
    z[i] = rres.get_si();
  }
  return z;
}

Weight QuotientZ::section(const std::vector<long long>& z) const {
  return section_table[index_of(z)];
}

long long QuotientZ::index_of(const std::vector<long long>& z) const {
  long long idx = 0;
  for (size_t i = 0; i < z.size(); ++i) idx = idx * diag[i] + imod(z[i], diag[i]);
  return idx;
}

std::vector<long long> QuotientZ::tuple_of(long long idx) const {
  std::vector<long long> z(diag.size());
  for (int i = static_cast<int>(diag.size()) - 1; i >= 0; --i) {
    z[i] = idx % diag[i];
    idx /= diag[i];
  }
  return z;
}

std::vector<long long> QuotientZ::add(const std::vector<long long>& a,
                                      const std::vector<long long>& b) const {
  std::vector<long long> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = imod(a[i] + b[i], diag[i]);
  return r;
}

std::vector<long long> QuotientZ::neg(const std::vector<long long>& a) const {
  std::vector<long long> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = imod(-a[i], diag[i]);
  return r;
}

long long QuotientZ::add_idx(long long a, long long b) const {
  return index_of(add(tuple_of(a), tuple_of(b)));
}

long long QuotientZ::neg_idx(long long a) const { return index_of(neg(tuple_of(a))); }

Weight RootDatum::simple_root(int i) const {
  Weight w(rank());
  for (int j = 0; j < rank(); ++j) w[j] = cartan.at(j, i).get_si();
  return w;
}

Weight RootDatum::fundamental_weight(int i) const {
  Weight w(rank(), 0);
  w[i] = 1;
  return w;
}

long long RootDatum::scaled_pairing(const Weight& x, const Weight& y) const {
  Int acc = 0;
  for (int i = 0; i < rank(); ++i) {
    if (!x[i]) continue;
    for (int j = 0; j < rank(); ++j) {
      if (!y[j]) continue;
      acc += to_int(x[i]) * scaled_gram.at(i, j) * to_int(y[j]);
    }
  }
  return acc.get_si();
}

Rat RootDatum::killing_pairing(const Weight& x, const Weight& y) const {
  return to_rat(scaled_pairing(x, y), r);
}

CycNum RootDatum::q_power(long long e) const { return CycNum::root(field, k * e); }

CycNum RootDatum::omega_eval(const Weight& x, const Weight& y) const {
  return q_power(scaled_pairing(x, y));
}

long long RootDatum::ord_q_power(long long d_alpha) const { return twol / igcd(d_alpha, twol); }

std::vector<long long> RootDatum::l_alpha_values() const {
  std::vector<long long> ls(rank());
  for (int i = 0; i < rank(); ++i) ls[i] = l_param / igcd(d[i], l_param);
  return ls;
}

namespace {

std::vector<Weight> all_positive_roots(const RootDatum& dat) {
  // orbit of the simple roots under simple reflections, then keep the
  // positive half (nonneg coordinates in the simple-root basis)
  std::set<Weight> seen;
  std::vector<Weight> queue;
  for (int i = 0; i < dat.rank(); ++i) {
    queue.push_back(dat.simple_root(i));
    seen.insert(queue.back());
  }
  for (size_t h = 0; h < queue.size(); ++h) {
    Weight w = queue[h];
    for (int i = 0; i < dat.rank(); ++i) {
      // s_i(w) = w - <alpha_i, w> alpha_i, and <alpha_i, w> = w_i
      Weight img = wsub(w, wscale(w[i], dat.simple_root(i)));
      if (seen.insert(img).second) queue.push_back(img);
    }
  }
  RatMat ainv = inverse_rational(dat.cartan);
  std::vector<Weight> pos;
  for (const auto& w : seen) {
    bool nonneg = true, nonzero = false;
    for (int i = 0; i < dat.rank() && nonneg; ++i) {
      Int acc = 0;
      for (int j = 0; j < dat.rank(); ++j) acc += ainv.num.at(i, j) * to_int(w[j]);
      // coefficient of alpha_i is acc / den
      if (acc != 0) nonzero = true;
      if ((acc > 0) != (ainv.den > 0) && acc != 0) nonneg = false;
    }
    if (nonneg && nonzero) pos.push_back(w);
  }
  std::sort(pos.begin(), pos.end());
  return pos;
}

}  // namespace

RootDatum build_root_datum(const CartanType& type, const LatticeSpec& lattice, long long twol,
                           long long k) {
  if (!valid_cartan_type(type.family, type.rank)) throw UsageError("invalid Cartan type");
  if (twol < 2) throw UsageError("order of q must be at least 2");
  if (igcd(k, twol) != 1) throw UsageError("k must be coprime to the order of q");

  RootDatum dat;
  dat.type = type;
  dat.cartan = cartan_matrix(type);
  auto dsym = symmetrizers(type);
  dat.d = dsym;
  dat.r = pq_exponent(type);
  dat.twol = twol;
  dat.k = k;
  dat.l_param = (twol % 2 == 0) ? twol / 2 : twol;
  dat.N = twol * dat.r;
  dat.field = CycField::get(dat.N);

  int n = type.rank;

  // scaled Gram: r * D * A^{-1}, then verify (f_i, alpha_j) = d_j delta_ij
  {
    RatMat ainv = inverse_rational(dat.cartan);
    IntMat da(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) da.at(i, j) = Int(dsym[i]) * ainv.num.at(i, j);
    // entries are r * d_i * ainv_ij / den; they must be integral
    IntMat s(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Int v = to_int(dat.r) * da.at(i, j);
        if (v % ainv.den != 0) throw ConsistencyError("scaled Gram matrix is not integral");
        s.at(i, j) = v / ainv.den;
      }
    dat.scaled_gram = s;
    if (s != s.transpose()) throw ConsistencyError("Killing Gram matrix is not symmetric");
    // self-check (f_i, alpha_j) = d_j delta_ij
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        long long p = dat.scaled_pairing(dat.fundamental_weight(i), dat.simple_root(j));
        long long expect = (i == j) ? dat.r * dsym[j] : 0;
        if (p != expect) throw ConsistencyError("Gram self-check failed");
      }
  }

  // character lattice
  switch (lattice.kind) {
    case LatticeKind::SimplyConnected:
      dat.X.hnf = IntMat::identity(n);
      dat.lattice_tag = "sc";
      break;
    case LatticeKind::Adjoint:
      dat.X.hnf = hnf_cols(dat.cartan);
      dat.lattice_tag = "adjoint";
      break;
    case LatticeKind::Explicit: {
      if (lattice.explicit_basis.rows != n) throw UsageError("explicit lattice has wrong rank");
      IntMat h = hnf_cols(lattice.explicit_basis);
      if (h.cols != n) throw UsageError("explicit lattice basis is not full rank");
      dat.X.hnf = h;
      dat.lattice_tag = "explicit";
      break;
    }
  }
  // Q <= X <= P: P is the identity (X expressed in f-coords), so only Q <= X
  // needs a check, plus integrality of the basis (automatic).
  for (int j = 0; j < n; ++j)
    if (!dat.X.contains(dat.simple_root(j)))
      throw UsageError("lattice does not contain the root lattice");

  // X^M = {x in X : (x, y) in l Z for all y in X}
  {
    IntMat b = dat.X.hnf;
    IntMat m = mul(mul(b.transpose(), dat.scaled_gram), b);
    Int modulus = to_int(dat.r) * to_int(dat.l_param);
    SnfResult sn = snf(m);
    // u with m u = 0 mod modulus:  u = v * diag(modulus / gcd(sigma_i, modulus)) * Z^n
    IntMat gens(n, n);
    for (int i = 0; i < n; ++i) {
      Int g;
      mpz_gcd(g.get_mpz_t(), sn.s.at(i, i).get_mpz_t(), modulus.get_mpz_t());
      Int mi = modulus / g;
      for (int row = 0; row < n; ++row) gens.at(row, i) = sn.v.at(row, i) * mi;
    }
    IntMat xm_in_f = mul(b, gens);
    dat.xm_.hnf = hnf_cols(xm_in_f);
    if (dat.xm_.hnf.cols != n) throw ConsistencyError("X^M is not full rank");
  }

  // quotient Z = X / X^M with SNF section, section(0) = 0
  {
    IntMat b = dat.X.hnf;
    // X^M basis in X-coordinates
    IntMat w(n, n);
    for (int j = 0; j < n; ++j) {
      auto c = dat.X.coords(dat.xm_.column(j));
      if (!c) throw ConsistencyError("X^M not contained in X");
      for (int i = 0; i < n; ++i) w.at(i, j) = (*c)[i];
    }
    SnfResult sn = snf(w);
    QuotientZ z;
    z.x_basis = b;
    z.u = sn.u;
    z.uinv = inverse_unimodular(sn.u);
    z.size = 1;
    for (int i = 0; i < n; ++i) {
      long long di = sn.s.at(i, i).get_si();
      if (di <= 0) throw ConsistencyError("bad quotient diagonal");
      z.diag.push_back(di);
      z.size *= di;
      if (di > 1) z.invariant_factors.push_back(di);
    }
    std::sort(z.invariant_factors.begin(), z.invariant_factors.end());
    // section table: z-tuple t -> x = B * Uinv * t
    z.section_table.resize(z.size);
    for (long long idx = 0; idx < z.size; ++idx) {
      auto t = z.tuple_of(idx);
      std::vector<Int> u(n, Int(0));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) u[i] += z.uinv.at(i, j) * to_int(t[j]);
      Weight x(n, 0);
      for (int i = 0; i < n; ++i) {
        Int acc = 0;
        for (int j = 0; j < n; ++j) acc += b.at(i, j) * u[j];
        x[i] = acc.get_si();
      }
      z.section_table[idx] = x;
    }
    if (!wzero(z.section_table[z.index_of(std::vector<long long>(n, 0))]))
      throw ConsistencyError("section(0) != 0");
    dat.z_ = std::move(z);
  }

  dat.pos_roots_ = all_positive_roots(dat);
  dat.rho_ = Weight(n, 0);
  for (const auto& g : dat.pos_roots_) dat.rho_ = wadd(dat.rho_, g);

  return dat;
}

DualCartanData RootDatum::dual_group_data() const {
  DualCartanData d2;
  auto ls = l_alpha_values();
  int n = rank();
  for (int i = 0; i < n; ++i) d2.dual_simple_roots.push_back(wscale(ls[i], simple_root(i)));
  IntMat a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // Cartan integer 2 (g_i, g_j) / (g_i, g_i) of the rescaled roots
      long long num = 2 * scaled_pairing(d2.dual_simple_roots[i], d2.dual_simple_roots[j]);
      long long den = scaled_pairing(d2.dual_simple_roots[i], d2.dual_simple_roots[i]);
      if (den == 0 || num % den != 0)
        throw ConsistencyError("dual Cartan integers are not integral");
      a.at(i, j) = to_int(num / den);
    }
  for (int i = 0; i < n; ++i) {
    if (a.at(i, i) != 2) throw ConsistencyError("dual Cartan diagonal must be 2");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a.at(i, j) > 0) throw ConsistencyError("dual Cartan off-diagonal must be <= 0");
      if ((a.at(i, j) == 0) != (a.at(j, i) == 0))
        throw ConsistencyError("dual Cartan zero pattern is not symmetric");
    }
  }
  d2.dual_cartan = a;
  d2.dual_char_lattice = xm_;
  return d2;
}

bool RootDatum::k_rho_trivial_on_xm() const {
  for (int j = 0; j < xm_.hnf.cols; ++j)
    if (!omega_eval(rho_, xm_.column(j)).is_one()) return false;
  return true;
}

std::vector<Weight> RootDatum::dominant_spanning_set() const {
  int n = rank();
  // lower-triangular column HNF of X gives minimal leading coordinates
  IntMat h = X.hnf;
  std::vector<Weight> xs(n);
  for (int j = 0; j < n; ++j) {
    Weight w(n);
    for (int i = 0; i < n; ++i) w[i] = h.at(i, j).get_si();
    xs[j] = w;
  }
  // HNF pivots must be on the diagonal for a full-rank lattice in f-coords
  for (int j = 0; j < n; ++j)
    if (xs[j][j] <= 0) throw ConsistencyError("unexpected HNF shape");
  // fix dominance by adding later columns, ascending coordinate sweep
  for (int j = 0; j < n; ++j) {
    for (int i = j + 1; i < n; ++i) {
      if (xs[j][i] < 0) {
        long long c = (-xs[j][i] + xs[i][i] - 1) / xs[i][i];
        xs[j] = wadd(xs[j], wscale(c, xs[i]));
      }
    }
  }
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      if (xs[j][i] < 0) throw ConsistencyError("dominance fix failed");
  // verify the set spans X: SNF of coordinates in the X basis is all ones
  IntMat m(n, n);
  for (int j = 0; j < n; ++j) {
    auto c = X.coords(xs[j]);
    if (!c) throw ConsistencyError("spanning candidate not in X");
    for (int i = 0; i < n; ++i) m.at(i, j) = (*c)[i];
  }
  SnfResult sn = snf(m);
  for (int i = 0; i < n; ++i)
    if (sn.s.at(i, i) != 1 && sn.s.at(i, i) != -1)
      throw ConsistencyError("dominant set does not span X");
  return xs;
}

}  // namespace logmod
