#include "logmod/window_oracle.hpp"

namespace logmod {

namespace {
void wadd_term(WindowOracle::WElem& e, WindowOracle::Key k, const CycNum& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = e.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) e.erase(it);
  }
}
void wadd_term2(WindowOracle::WElem2& e, const WindowOracle::Key2& k, const CycNum& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = e.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) e.erase(it);
  }
}
}  // namespace

WindowOracle::WindowOracle(const UmqAlgebra& u, long long half_width)
    : W(half_width), l(u.l), u_(&u), d_(u.datum.get()) {
  // [l]_q = 0 underwrites the E^l = F^l = 0 normalization used throughout
  CycNum bracket = CycNum::zero(d_->field);
  for (int j = 0; j < l; ++j) bracket += qi(l - 1 - 2 * j);
  if (!bracket.is_zero()) throw ConsistencyError("[l]_q does not vanish at this order");
  step_ = d_->X.hnf.at(0, 0).get_si();
  for (long long lam = -W; lam <= W; ++lam)
    if (lam % step_ == 0) pts_.push_back(lam);
}

WindowOracle::Key WindowOracle::key(int a, int c, long long lam) const {
  return (static_cast<long long>(a) * l + c) * (2 * W + 1) + (lam + W);
}

void WindowOracle::unpack(Key k, int& a, int& c, long long& lam) const {
  lam = k % (2 * W + 1) - W;
  long long rest = k / (2 * W + 1);
  c = static_cast<int>(rest % l);
  a = static_cast<int>(rest / l);
}

CycNum WindowOracle::qi(long long e) const { return d_->q_power(d_->r * e); }

WindowOracle::WElem WindowOracle::op_E() const {
  WElem e;
  for (long long lam : pts_) e.emplace(key(0, 1, lam), CycNum::one(d_->field));
  return e;
}

WindowOracle::WElem WindowOracle::op_F() const {
  WElem e;
  for (long long lam : pts_) e.emplace(key(1, 0, lam), CycNum::one(d_->field));
  return e;
}

WindowOracle::WElem WindowOracle::idem(long long lam) const {
  return {{key(0, 0, lam), CycNum::one(d_->field)}};
}

WindowOracle::WElem WindowOracle::diag(const std::function<CycNum(long long)>& f) const {
  WElem e;
  for (long long lam : pts_) wadd_term(e, key(0, 0, lam), f(lam));
  return e;
}

WindowOracle::WElem2 WindowOracle::diag2(
    const std::function<CycNum(long long, long long)>& f) const {
  WElem2 e;
  for (long long lam : pts_)
    for (long long mu : pts_) wadd_term2(e, {key(0, 0, lam), key(0, 0, mu)}, f(lam, mu));
  return e;
}

// E . (F^a E^c 1_lam) = (sum_{j<a} (K - K^{-1})/(q - q^{-1}) at lam + 2c - 2(a-1-j))
//                       F^{a-1} E^c 1_lam  +  [c+1 < l] F^a E^{c+1} 1_lam
WindowOracle::WElem WindowOracle::left_E(const WElem& x) const {
  auto f = d_->field;
  CycNum delta_inv = (qi(1) - qi(-1)).inv();
  WElem out;
  for (const auto& [k, coeff] : x) {
    int a, c;
    long long lam;
    unpack(k, a, c, lam);
    if (a > 0) {
      CycNum e = CycNum::zero(f);
      for (int j = 0; j < a; ++j) {
        long long w = lam + 2 * c - 2 * (a - 1 - j);
        e += (qi(w) - qi(-w)) * delta_inv;
      }
      wadd_term(out, key(a - 1, c, lam), coeff * e);
    }
    if (c + 1 < l) wadd_term(out, key(a, c + 1, lam), coeff);
  }
  return out;
}

WindowOracle::WElem WindowOracle::left_F(const WElem& x) const {
  WElem out;
  for (const auto& [k, coeff] : x) {
    int a, c;
    long long lam;
    unpack(k, a, c, lam);
    if (a + 1 < l) wadd_term(out, key(a + 1, c, lam), coeff);
  }
  return out;
}

namespace {
struct Term {
  WindowOracle::Key key;
  CycNum coeff;
};
}  // namespace

// product of two single basis operators; empty when the inner idempotents
// mismatch
std::vector<std::pair<WindowOracle::Key, CycNum>> WindowOracle::mul_term(Key kx, Key ky) const {
  int a1, c1, a2, c2;
  long long lam1, mu;
  unpack(kx, a1, c1, lam1);
  unpack(ky, a2, c2, mu);
  if (mu + 2 * (c2 - a2) != lam1) return {};
  std::vector<std::pair<Key, CycNum>> cur = {{ky, CycNum::one(d_->field)}};
  for (int t = 0; t < c1 && !cur.empty(); ++t) {
    std::vector<std::pair<Key, CycNum>> next;
    WElem tmp;
    for (auto& [k, c] : cur) tmp[k] = c;
    tmp = left_E(tmp);
    next.assign(tmp.begin(), tmp.end());
    cur = std::move(next);
  }
  for (int t = 0; t < a1 && !cur.empty(); ++t) {
    std::vector<std::pair<Key, CycNum>> next;
    for (auto& [k, c] : cur) {
      int a, cc;
      long long lam;
      unpack(k, a, cc, lam);
      if (a + 1 < l) next.push_back({key(a + 1, cc, lam), c});
    }
    cur = std::move(next);
  }
  return cur;
}

WindowOracle::WElem WindowOracle::mul(const WElem& x, const WElem& y) const {
  WElem out;
  for (const auto& [kx, cx] : x)
    for (const auto& [ky, cy] : y) {
      auto prod = mul_term(kx, ky);
      if (prod.empty()) continue;
      CycNum c = cx * cy;
      for (auto& [kk, ck] : prod) wadd_term(out, kk, c * ck);
    }
  return out;
}

WindowOracle::WElem2 WindowOracle::mul2(const WElem2& x, const WElem2& y) const {
  WElem2 out;
  auto quick_reject = [&](Key kx, Key ky) {
    int a1, c1, a2, c2;
    long long lam1, mu;
    unpack(kx, a1, c1, lam1);
    unpack(ky, a2, c2, mu);
    return mu + 2 * (c2 - a2) != lam1;
  };
  for (const auto& [kx, cx] : x)
    for (const auto& [ky, cy] : y) {
      if (quick_reject(kx.first, ky.first) || quick_reject(kx.second, ky.second)) continue;
      auto p1 = mul_term(kx.first, ky.first);
      if (p1.empty()) continue;
      auto p2 = mul_term(kx.second, ky.second);
      if (p2.empty()) continue;
      CycNum c = cx * cy;
      for (const auto& [k1, c1] : p1)
        for (const auto& [k2, c2] : p2) wadd_term2(out, {k1, k2}, c * c1 * c2);
    }
  return out;
}

WindowOracle::WElem2 WindowOracle::tensor(const WElem& x, const WElem& y) const {
  WElem2 out;
  for (const auto& [kx, cx] : x)
    for (const auto& [ky, cy] : y) wadd_term2(out, {kx, ky}, cx * cy);
  return out;
}

WindowOracle::WElem WindowOracle::antipode(const WElem& x) const {
  auto f = d_->field;
  // S(E) = -K^{-1}E, S(F) = -FK, S(1_lam) = 1_{-lam}
  WElem sE, sF;
  for (long long lam : pts_) {
    wadd_term(sE, key(0, 1, lam), -qi(-(lam + 2)));
    wadd_term(sF, key(1, 0, lam), -qi(lam));
  }
  WElem out;
  // S(F^a E^c 1_lam) = S(1_lam) S(E)^c S(F)^a, the idempotent leftmost
  for (const auto& [k, coeff] : x) {
    int a, c;
    long long lam;
    unpack(k, a, c, lam);
    if (!in_window(-lam)) continue;
    WElem acc = idem(-lam);
    for (int t = 0; t < c; ++t) acc = mul(acc, sE);
    for (int t = 0; t < a; ++t) acc = mul(acc, sF);
    for (const auto& [kk, ck] : acc) wadd_term(out, kk, coeff * ck);
  }
  return out;
}

WindowOracle::WElem2 WindowOracle::delta_E() const {
  WElem2 e;
  for (long long lam : pts_)
    for (long long mu : pts_) {
      wadd_term2(e, {key(0, 1, lam), key(0, 0, mu)}, CycNum::one(d_->field));
      wadd_term2(e, {key(0, 0, lam), key(0, 1, mu)}, qi(lam));
    }
  return e;
}

WindowOracle::WElem2 WindowOracle::delta_F() const {
  WElem2 e;
  for (long long lam : pts_)
    for (long long mu : pts_) {
      wadd_term2(e, {key(1, 0, lam), key(0, 0, mu)}, qi(-mu));
      wadd_term2(e, {key(0, 0, lam), key(1, 0, mu)}, CycNum::one(d_->field));
    }
  return e;
}

WindowOracle::WElem2 WindowOracle::delta_Ecal() const {
  WElem2 dk = diag2([&](long long lam, long long mu) { return qi(lam + mu); });
  return mul2(dk, delta_E());
}

WindowOracle::WElem2 WindowOracle::delta_idem(long long zidx) const {
  const QuotientZ& z = d_->quotient_Z();
  WElem2 e;
  for (long long lam : pts_)
    for (long long mu : pts_)
      if (z.project_idx(Weight{lam + mu}) == zidx)
        wadd_term2(e, {key(0, 0, lam), key(0, 0, mu)}, CycNum::one(d_->field));
  return e;
}

WindowOracle::WElem2 WindowOracle::delta_op(const WElem2& d) const {
  WElem2 out;
  for (const auto& [k, c] : d) wadd_term2(out, {k.second, k.first}, c);
  return out;
}

WindowOracle::WElem WindowOracle::tau() const {
  return diag([&](long long lam) { return u_->bal.omega_inv(Weight{lam}, Weight{lam}); });
}

WindowOracle::WElem WindowOracle::tau_inv() const {
  return diag([&](long long lam) { return u_->bal.omega(Weight{lam}, Weight{lam}); });
}

WindowOracle::WElem2 WindowOracle::omega2(bool inverse) const {
  return diag2([&](long long lam, long long mu) {
    return inverse ? u_->bal.omega_inv(Weight{lam}, Weight{mu})
                   : u_->bal.omega(Weight{lam}, Weight{mu});
  });
}

WindowOracle::WElem2 WindowOracle::omega21(bool inverse) const {
  return diag2([&](long long lam, long long mu) {
    return inverse ? u_->bal.omega_inv(Weight{mu}, Weight{lam})
                   : u_->bal.omega(Weight{mu}, Weight{lam});
  });
}

WindowOracle::WElem2 WindowOracle::omega_conj(const WElem2& x) const {
  return mul2(omega2(true), mul2(x, omega2(false)));
}

WindowOracle::WElem WindowOracle::tau_conj(const WElem& sx) const {
  return mul(tau_inv(), mul(sx, tau()));
}

WindowOracle::WElem WindowOracle::iota(const Elem& x) const {
  const QuotientZ& zq = d_->quotient_Z();
  WElem out;
  for (const auto& [i, coeff] : x) {
    int a, c;
    long long z;
    u_->unpack(i, a, z, c);
    for (long long mu : pts_) {
      long long post = mu + 2 * c;
      if (zq.project_idx(Weight{post}) != z) continue;
      // Ecal^c = q^{-c(c-1)} K^c E^c, K^c evaluated at the raised weight
      CycNum conv = qi(-static_cast<long long>(c) * (c - 1) + static_cast<long long>(c) * post);
      wadd_term(out, key(a, c, mu), coeff * conv);
    }
  }
  return out;
}

WindowOracle::WElem2 WindowOracle::iota2(const Elem2& x) const {
  WElem2 out;
  for (const auto& [i, coeff] : x) {
    uint32_t i1 = static_cast<uint32_t>(i / u_->dim), i2 = static_cast<uint32_t>(i % u_->dim);
    WElem w1 = iota({{i1, CycNum::one(d_->field)}});
    WElem w2 = iota({{i2, CycNum::one(d_->field)}});
    for (const auto& [k1, c1] : w1)
      for (const auto& [k2, c2] : w2) wadd_term2(out, {k1, k2}, coeff * c1 * c2);
  }
  return out;
}

bool WindowOracle::equal1(const WElem& a, const WElem& b, long long margin, Json* witness) const {
  WElem diff = a;
  for (const auto& [k, c] : b) wadd_term(diff, k, -c);
  for (const auto& [k, c] : diff) {
    int a2, c2;
    long long lam;
    unpack(k, a2, c2, lam);
    if (lam >= -(W - margin) && lam <= W - margin) {
      if (witness)
        *witness = Json{{"a", a2}, {"c", c2}, {"lam", lam}, {"value", cyc_to_json(c)}};
      return false;
    }
  }
  return true;
}

bool WindowOracle::equal2(const WElem2& a, const WElem2& b, long long margin,
                          Json* witness) const {
  WElem2 diff = a;
  for (const auto& [k, c] : b) wadd_term2(diff, k, -c);
  for (const auto& [k, c] : diff) {
    int a1, c1, a2, c2;
    long long lam, mu;
    unpack(k.first, a1, c1, lam);
    unpack(k.second, a2, c2, mu);
    bool inside = lam >= -(W - margin) && lam <= W - margin && mu >= -(W - margin) &&
                  mu <= W - margin && lam + mu >= -(W - margin) && lam + mu <= W - margin;
    if (inside) {
      if (witness)
        *witness = Json{{"leg1", Json{{"a", a1}, {"c", c1}, {"lam", lam}}},
                        {"leg2", Json{{"a", a2}, {"c", c2}, {"lam", mu}}},
                        {"value", cyc_to_json(c)}};
      return false;
    }
  }
  return true;
}

WindowOracle::RData WindowOracle::derive_R() const {
  auto f = d_->field;
  // Theta_n = sum q^{-(lam,mu)} E^n 1_lam ox F^n 1_mu
  std::vector<WElem2> theta(l);
  for (int n = 0; n < l; ++n)
    for (long long lam : pts_)
      for (long long mu : pts_)
        wadd_term2(theta[n], {key(0, n, lam), key(n, 0, mu)},
                   d_->q_power(-lam * mu));  // (lam f, mu f) scaled by r is lam*mu

  // intertwiner residual per slot, for x = E and x = F
  std::vector<WElem2> lhs(l);
  {
    WElem2 dE = delta_E(), dF = delta_F();
    WElem2 dEop = delta_op(dE), dFop = delta_op(dF);
    for (int n = 0; n < l; ++n) {
      WElem2 r1 = mul2(dEop, theta[n]);
      for (const auto& [k, c] : mul2(theta[n], dE)) wadd_term2(r1, k, -c);
      WElem2 r2 = mul2(dFop, theta[n]);
      for (const auto& [k, c] : mul2(theta[n], dF)) wadd_term2(r2, k, -c);
      // stack the two residuals with disjoint key spaces
      const Key off = (2 * W + 1) * static_cast<long long>(l) * l * 4;
      lhs[n] = std::move(r1);
      for (const auto& [k, c] : r2) wadd_term2(lhs[n], {k.first + off, k.second}, c);
    }
  }

  // gather linear equations sum_n c_n lhs[n][key] = 0 over interior keys
  const long long margin = 2 * l + 2;
  const Key stack_offset = (2 * W + 1) * static_cast<long long>(l) * l * 4;
  std::map<Key2, std::vector<CycNum>> rows;
  for (int n = 0; n < l; ++n)
    for (const auto& [k, c] : lhs[n]) {
      Key kf = k.first % stack_offset;
      int a1, c1, a2, c2;
      long long lam, mu;
      unpack(kf, a1, c1, lam);
      unpack(k.second, a2, c2, mu);
      if (lam < -(W - margin) || lam > W - margin || mu < -(W - margin) || mu > W - margin)
        continue;
      auto& row = rows[k];
      if (row.empty()) row.assign(l, CycNum::zero(f));
      row[n] = c;
    }

  // reduced row echelon form; expect nullity exactly 1, spanned by a vector
  // with nonzero leading slot
  std::vector<std::vector<CycNum>> rref;  // rows with strictly increasing pivots
  std::vector<int> pivots;
  for (auto& [k, row0] : rows) {
    std::vector<CycNum> r = row0;
    for (size_t t = 0; t < rref.size(); ++t)
      if (!r[pivots[t]].is_zero()) {
        CycNum factor = r[pivots[t]];
        for (int j2 = 0; j2 < l; ++j2) r[j2] -= factor * rref[t][j2];
      }
    int p = -1;
    for (int j2 = 0; j2 < l; ++j2)
      if (!r[j2].is_zero()) {
        p = j2;
        break;
      }
    if (p < 0) continue;
    CycNum inv = r[p].inv();
    for (auto& v : r) v = v * inv;
    // clear this column from earlier rows
    for (size_t t = 0; t < rref.size(); ++t)
      if (!rref[t][p].is_zero()) {
        CycNum factor = rref[t][p];
        for (int j2 = 0; j2 < l; ++j2) rref[t][j2] -= factor * r[j2];
      }
    rref.push_back(r);
    pivots.push_back(p);
    if (static_cast<int>(rref.size()) == l) break;
  }
  if (static_cast<int>(rref.size()) != l - 1)
    throw ConsistencyError("intertwiner system has unexpected rank");
  // one free column: set it to 1 and back-substitute, then renormalize so
  // that the leading coefficient is 1
  int free_col = -1;
  {
    std::vector<bool> is_pivot(l, false);
    for (int p : pivots) is_pivot[p] = true;
    for (int j2 = 0; j2 < l; ++j2)
      if (!is_pivot[j2]) {
        free_col = j2;
        break;
      }
  }
  std::vector<CycNum> coeffs(l, CycNum::zero(f));
  coeffs[free_col] = CycNum::one(f);
  for (size_t t = 0; t < rref.size(); ++t) coeffs[pivots[t]] = -rref[t][free_col];
  if (coeffs[0].is_zero())
    throw ConsistencyError("intertwiner solution has vanishing leading coefficient");
  CycNum scale = coeffs[0].inv();
  for (auto& c : coeffs) c = c * scale;

  RData out;
  out.coeffs = coeffs;
  for (int n = 0; n < l; ++n)
    for (const auto& [k, c] : theta[n]) wadd_term2(out.window_form, k, coeffs[n] * c);

  // confirm the intertwiner identities hold with the solved coefficients
  WElem2 dE = delta_E(), dF = delta_F();
  if (!equal2(mul2(delta_op(dE), out.window_form), mul2(out.window_form, dE), margin))
    throw ConsistencyError("R does not intertwine Delta(E)");
  if (!equal2(mul2(delta_op(dF), out.window_form), mul2(out.window_form, dF), margin))
    throw ConsistencyError("R does not intertwine Delta(F)");
  return out;
}

WindowOracle::WElem WindowOracle::drinfeld_u(const WElem2& rwin) const {
  WElem out;
  for (const auto& [k, c] : rwin) {
    WElem sb = antipode({{k.second, CycNum::one(d_->field)}});
    WElem prod = mul(sb, {{k.first, CycNum::one(d_->field)}});
    for (const auto& [kk, ck] : prod) wadd_term(out, kk, c * ck);
  }
  return out;
}

Elem WindowOracle::export_elem(const WElem& x, long long margin) const {
  const QuotientZ& zq = d_->quotient_Z();
  // F^a E^c 1_mu = q^{c(c-1) - c(mu + 2c)} F^a 1_{cls(mu+2c)} Ecal^c
  std::map<uint32_t, std::pair<CycNum, bool>> table;  // value, seen
  for (const auto& [k, coeff] : x) {
    int a, c;
    long long mu;
    unpack(k, a, c, mu);
    if (mu < -(W - margin) || mu > W - margin) continue;
    long long post = mu + 2 * c;
    CycNum conv = qi(static_cast<long long>(c) * (c - 1) - static_cast<long long>(c) * post);
    uint32_t i = u_->idx(a, zq.project_idx(Weight{post}), c);
    CycNum v = coeff * conv;
    auto it = table.find(i);
    if (it == table.end()) {
      table.emplace(i, std::make_pair(v, true));
    } else if (it->second.first != v) {
      throw ConsistencyError("window element is not constant on cosets");
    }
  }
  Elem out;
  for (auto& [i, pr] : table) add_term(out, i, pr.first);
  // consistency: the tabulated element must map back onto x in the interior
  if (!equal1(iota(out), x, margin))
    throw ConsistencyError("window export does not reproduce the element");
  return out;
}

}  // namespace logmod
