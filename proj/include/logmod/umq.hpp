#pragma once

#include <map>

#include "logmod/balancing.hpp"

namespace logmod {

// Sparse element of the algebra; keys are PBW basis indices.
using Elem = std::map<uint32_t, CycNum>;
// Sparse elements of the twofold and threefold tensor square.
using Elem2 = std::map<uint64_t, CycNum>;
using Elem3 = std::map<uint64_t, CycNum>;

// Rank-one structure-constant realization over the finite quotient: basis
// F^a 1_z Ecal^c with 0 <= a, c < l and z running over Z.
class UmqAlgebra {
 public:
  static UmqAlgebra build(std::shared_ptr<const RootDatum> d, const BalancingFunction& b);

  std::shared_ptr<const RootDatum> datum;
  BalancingFunction bal;
  QuasiTables tabs;
  int l = 0;
  long long nz = 0;
  uint32_t dim = 0;
  long long alpha_bar = 0;  // Z index of the simple root class

  std::vector<CycNum> k2;  // K^2 as a table on Z

  // multiplication table: (i * dim + j) -> sparse row
  std::vector<std::vector<std::pair<uint32_t, CycNum>>> mult;

  Elem2 nabla_E, nabla_F;  // coproduct images of the generators
  Elem s_E, s_F;           // antipode images
  Elem2 R, R_inv;
  std::vector<CycNum> r_coeffs;  // c_n from the intertwiner recursion

  // --- basis bookkeeping -------------------------------------------------
  uint32_t idx(int a, long long z, int c) const {
    return static_cast<uint32_t>((static_cast<long long>(a) * nz + z) * l + c);
  }
  void unpack(uint32_t i, int& a, long long& z, int& c) const {
    c = static_cast<int>(i % l);
    z = static_cast<long long>((i / l) % nz);
    a = static_cast<int>(i / (l * nz));
  }
  long long zadd(long long a, long long b) const;
  long long zneg(long long a) const;

  // --- elements ----------------------------------------------------------
  Elem unit() const;
  Elem idem(long long z) const;  // 1_z
  Elem gen_E() const;            // sum_z Ecal 1_z
  Elem gen_F() const;
  Elem grouplike(const std::vector<CycNum>& table) const;  // sum_z t[z] 1_z
  CycNum counit(const Elem& x) const;

  // --- arithmetic (table-backed) ------------------------------------------
  Elem mul(const Elem& x, const Elem& y) const;
  Elem2 mul2(const Elem2& x, const Elem2& y) const;
  Elem3 mul3(const Elem3& x, const Elem3& y) const;
  Elem2 tensor(const Elem& x, const Elem& y) const;
  Elem3 tensor3(const Elem& x, const Elem& y, const Elem& z) const;
  Elem2 swap2(const Elem2& x) const;

  // --- structure maps ------------------------------------------------------
  Elem2 nabla(const Elem& x) const;  // multiplicative extension
  Elem2 nabla_op(const Elem& x) const;
  Elem antipode(const Elem& x) const;  // anti-multiplicative extension
  Elem3 nabla_leg(const Elem2& x, int leg) const;  // apply nabla to one leg

  // phi and beta as tensor elements
  Elem3 phi_elem(bool inverse = false) const;
  // phi with its legs permuted: perm[i] gives the destination slot of leg i
  Elem3 phi_perm(const std::array<int, 3>& perm, bool inverse) const;
  Elem beta_elem() const;
  // lift a two-leg element into the triple product with the unit in the
  // named slot
  Elem3 lift3(const Elem2& x, int missing_leg) const;

  // engine multiplication from the derived commutation rules; the public
  // table is validated against this and against the window oracle
  Elem engine_mul_basis(uint32_t i, uint32_t j) const;
  void validate_against_window() const;

  // serialization (alg.json)
  Json to_json() const;
  static UmqAlgebra from_json(const Json& j);

 private:
  UmqAlgebra(std::shared_ptr<const RootDatum> d, BalancingFunction b);
  Elem left_E(const Elem& x) const;
  Elem left_F(const Elem& x) const;
  void build_tables();
};

void add_term(Elem& e, uint32_t i, const CycNum& c);
void add_term2(Elem2& e, uint64_t i, const CycNum& c);

// Modules ------------------------------------------------------------------

struct ModuleRep {
  uint32_t dimension = 0;
  std::vector<long long> weights;           // Z index of each basis vector
  std::vector<std::vector<CycNum>> mat_E;   // dense, row-major action matrices
  std::vector<std::vector<CycNum>> mat_F;
  long long highest_weight = 0;

  std::vector<std::vector<CycNum>> act(const UmqAlgebra& u, const Elem& x) const;
};

ModuleRep verma(const UmqAlgebra& u, long long z);
ModuleRep simple(const UmqAlgebra& u, long long z);

// matrices of all defining relations vanish on the module
bool module_satisfies_relations(const UmqAlgebra& u, const ModuleRep& m);

// Pure lattice transparency test, any rank: lambda transparent iff
// (lambda, x) in lZ for a dominant spanning set, iff lambda in X^M.
bool lattice_transparency_criterion(const RootDatum& d, const Weight& lambda);

}  // namespace logmod
