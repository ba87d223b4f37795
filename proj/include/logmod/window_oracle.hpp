#pragma once

#include "logmod/umq.hpp"

namespace logmod {

// Finite window of the ambient rank-one algebra of global operators: formal
// sums of F^a E^c 1_lam with the untwisted relations, lam a fundamental-weight
// coordinate in [-W, W].  The umq tables are re-derived here by conjugating
// the untwisted coproduct with the balancing twist; agreement on the interior
// of the window is the acceptance oracle.
class WindowOracle {
 public:
  WindowOracle(const UmqAlgebra& u, long long half_width);

  using Key = long long;  // packed (a, c, lam)
  using WElem = std::map<Key, CycNum>;
  using Key2 = std::pair<Key, Key>;
  using WElem2 = std::map<Key2, CycNum>;

  long long W;
  int l;

  Key key(int a, int c, long long lam) const;
  void unpack(Key k, int& a, int& c, long long& lam) const;
  bool in_window(long long lam) const {
    return lam >= -W && lam <= W && lam % step_ == 0;
  }
  const std::vector<long long>& points() const { return pts_; }

  // q^e for integer e (not the r-th root)
  CycNum qi(long long e) const;

  // --- element constructors ----------------------------------------------
  WElem op_E() const, op_F() const;
  WElem idem(long long lam) const;
  WElem diag(const std::function<CycNum(long long)>& f) const;  // sum f(lam) 1_lam
  WElem2 diag2(const std::function<CycNum(long long, long long)>& f) const;

  // --- algebra ------------------------------------------------------------
  std::vector<std::pair<Key, CycNum>> mul_term(Key kx, Key ky) const;
  WElem mul(const WElem& x, const WElem& y) const;
  WElem2 mul2(const WElem2& x, const WElem2& y) const;
  WElem2 tensor(const WElem& x, const WElem& y) const;
  WElem antipode(const WElem& x) const;  // untwisted S

  // untwisted coproducts on the window
  WElem2 delta_E() const;     // E ox 1 + K ox E
  WElem2 delta_F() const;     // F ox K^{-1} + 1 ox F
  WElem2 delta_Ecal() const;  // Ecal ox K + K^2 ox Ecal, computed as Delta(K)Delta(E)
  WElem2 delta_idem(long long zidx) const;
  WElem2 delta_op(const WElem2& d) const;  // swap legs

  // twist data as window elements
  WElem tau() const, tau_inv() const;
  WElem2 omega2(bool inverse) const, omega21(bool inverse) const;
  WElem2 omega_conj(const WElem2& x) const;  // omega^{-1} x omega
  WElem tau_conj(const WElem& x) const;      // tau^{-1} S(x) tau given S(x)

  // map a finite-quotient element into the window
  WElem iota(const Elem& x) const;
  WElem2 iota2(const Elem2& x) const;

  // comparisons on the safe interior
  bool equal1(const WElem& a, const WElem& b, long long margin, Json* witness = nullptr) const;
  bool equal2(const WElem2& a, const WElem2& b, long long margin, Json* witness = nullptr) const;

  // untwisted R-matrix: solves the intertwiner recursion for the c_n and
  // returns the window form sum_n c_n E^n 1_lam ox F^n 1_mu q^{-(lam,mu)}
  struct RData {
    std::vector<CycNum> coeffs;
    WElem2 window_form;
  };
  RData derive_R() const;

  // Drinfeld element sum S(R^(2)) R^(1) of the untwisted window algebra
  WElem drinfeld_u(const WElem2& rwin) const;

  // Re-express a window element in the finite quotient: converts E-powers to
  // the twisted generators, checks the coefficients are constant on cosets
  // inside the safe interior, and tabulates.
  Elem export_elem(const WElem& x, long long margin) const;

  const UmqAlgebra& u() const { return *u_; }

 private:
  const UmqAlgebra* u_;
  const RootDatum* d_;
  long long step_ = 1;  // X as a sublattice of the weight line
  std::vector<long long> pts_;
  WElem left_E(const WElem& x) const;
  WElem left_F(const WElem& x) const;
};

}  // namespace logmod
