#pragma once

#include <memory>
#include <optional>
#include <string>

#include "logmod/cyclotomic.hpp"
#include "logmod/intmat.hpp"

namespace logmod {

struct CartanType {
  char family;  // 'A'..'G'
  int rank;
};

// Parse "A1", "B3", ... and validate.
CartanType parse_cartan_type(const std::string& s);
bool valid_cartan_type(char family, int rank);

// Cartan matrix with a_ij = <alpha_i, alpha_j>; column j holds the
// fundamental-weight coordinates of alpha_j.
IntMat cartan_matrix(const CartanType& t);
std::vector<int> symmetrizers(const CartanType& t);  // d_i in {1,2,3}

struct LatticeSubgroup {
  IntMat hnf;  // column HNF basis, full column rank

  bool contains(const Weight& w) const;
  // coordinates of w in this basis, if w lies in the lattice
  std::optional<std::vector<Int>> coords(const Weight& w) const;
  int rank() const { return hnf.cols; }
  Weight column(int j) const;
};

enum class LatticeKind { SimplyConnected, Adjoint, Explicit };

struct LatticeSpec {
  LatticeKind kind = LatticeKind::SimplyConnected;
  IntMat explicit_basis;  // used when kind == Explicit, columns in f-coords

  static LatticeSpec sc() { return {LatticeKind::SimplyConnected, {}}; }
  static LatticeSpec adjoint() { return {LatticeKind::Adjoint, {}}; }
  static LatticeSpec explicit_cols(IntMat m) { return {LatticeKind::Explicit, std::move(m)}; }
};

struct QuotientZ {
  std::vector<long long> diag;              // full SNF diagonal of X^M inside X
  std::vector<long long> invariant_factors; // the entries > 1
  long long size = 1;
  // internals for project/section
  IntMat x_basis;        // basis of X (f-coords)
  IntMat uinv;           // inverse of the SNF row transform
  IntMat u;              // the SNF row transform itself
  std::vector<Weight> section_table;  // linear index -> section rep in X (f-coords)

  std::vector<long long> project(const Weight& w) const;  // throws if w not in X
  Weight section(const std::vector<long long>& z) const;
  long long index_of(const std::vector<long long>& z) const;
  std::vector<long long> tuple_of(long long idx) const;
  std::vector<long long> add(const std::vector<long long>& a, const std::vector<long long>& b) const;
  std::vector<long long> neg(const std::vector<long long>& a) const;
  long long add_idx(long long a, long long b) const;
  long long neg_idx(long long a) const;
  long long project_idx(const Weight& w) const { return index_of(project(w)); }
};

struct DualCartanData {
  std::vector<Weight> dual_simple_roots;  // l_i * alpha_i in f-coords
  IntMat dual_cartan;
  LatticeSubgroup dual_char_lattice;  // = X^M
};

// Everything derived from (type, lattice, order, k): the validated standing
// data every other module consumes.
class RootDatum {
 public:
  CartanType type;
  IntMat cartan;            // a_ij
  std::vector<int> d;       // symmetrizers
  long long r = 1;          // exponent of P/Q
  LatticeSubgroup X;        // character lattice, Q <= X <= P, f-coords
  std::string lattice_tag;  // "sc", "adjoint" or "explicit"
  long long twol = 2;       // order of q
  long long k = 1;          // q = zeta_N^{k r}
  long long l_param = 1;    // twol/2 when even, twol when odd
  long long N = 4;          // cyclotomic ambient order, = twol * r
  IntMat scaled_gram;       // r * Gram of the Killing form in the f-basis

  std::shared_ptr<const CycField> field;

  int rank() const { return type.rank; }
  Weight simple_root(int i) const;
  Weight fundamental_weight(int i) const;

  // r * (x, y), always an integer
  long long scaled_pairing(const Weight& x, const Weight& y) const;
  Rat killing_pairing(const Weight& x, const Weight& y) const;

  // (r-th root of q)^e = zeta_N^{k e}
  CycNum q_power(long long e) const;
  // Omega(x, y) = q^{(x,y)}
  CycNum omega_eval(const Weight& x, const Weight& y) const;

  std::vector<long long> l_alpha_values() const;
  long long ord_q_power(long long d_alpha) const;  // order of q^{d_alpha}

  const LatticeSubgroup& xm_sublattice() const { return xm_; }
  const QuotientZ& quotient_Z() const { return z_; }

  const std::vector<Weight>& positive_roots() const { return pos_roots_; }
  const Weight& rho() const { return rho_; }  // full sum of positive roots

  DualCartanData dual_group_data() const;
  bool k_rho_trivial_on_xm() const;
  std::vector<Weight> dominant_spanning_set() const;

 private:
  friend RootDatum build_root_datum(const CartanType&, const LatticeSpec&, long long, long long);
  LatticeSubgroup xm_;
  QuotientZ z_;
  std::vector<Weight> pos_roots_;
  Weight rho_;
};

RootDatum build_root_datum(const CartanType& type, const LatticeSpec& lattice, long long twol,
                           long long k);

// exponent of P/Q for a type (largest invariant factor of the Cartan matrix)
long long pq_exponent(const CartanType& t);

}  // namespace logmod
