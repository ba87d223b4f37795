#include "logmod/umq.hpp"

#include "logmod/admissibility.hpp"
#include "logmod/window_oracle.hpp"

namespace logmod {

void add_term(Elem& e, uint32_t i, const CycNum& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = e.try_emplace(i, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) e.erase(it);
  }
}

void add_term2(Elem2& e, uint64_t i, const CycNum& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = e.try_emplace(i, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) e.erase(it);
  }
}

UmqAlgebra::UmqAlgebra(std::shared_ptr<const RootDatum> d, BalancingFunction b)
    : datum(std::move(d)), bal(std::move(b)) {}

long long UmqAlgebra::zadd(long long a, long long b) const {
  return datum->quotient_Z().add_idx(a, b);
}
long long UmqAlgebra::zneg(long long a) const { return datum->quotient_Z().neg_idx(a); }

UmqAlgebra UmqAlgebra::build(std::shared_ptr<const RootDatum> d, const BalancingFunction& b) {
  if (d->type.family != 'A' || d->type.rank != 1)
    throw UsageError("structure-constant realization covers rank one only");
  if (d->twol % 2 != 0) throw UsageError("order of q must be even here");
  AdmissibilityVerdict v = check_admissibility(*d);
  if (!v.strongly_admissible) throw UsageError("lattice is not strongly admissible at q");

  UmqAlgebra u(d, b);
  u.l = static_cast<int>(d->l_param);
  u.nz = d->quotient_Z().size;
  u.dim = static_cast<uint32_t>(static_cast<long long>(u.l) * u.l * u.nz);
  u.alpha_bar = d->quotient_Z().project_idx(d->simple_root(0));
  u.tabs = derive_tables(b);

  // K^2 on Z: q^{2 (alpha, s(z))}
  Weight alpha = d->simple_root(0);
  for (long long z = 0; z < u.nz; ++z) {
    long long sp = d->scaled_pairing(alpha, b.section(z));
    u.k2.push_back(d->q_power(2 * sp));
  }

  u.build_tables();
  u.validate_against_window();
  return u;
}

// the commutation rules must reproduce the ambient operator algebra before
// the realization is accepted
void UmqAlgebra::validate_against_window() const {
  WindowOracle win(*this, 4 * l + 2);
  const long long margin = 2 * l + 2;
  std::vector<Elem> gens = {gen_E(), gen_F(), idem(0), idem(zadd(0, alpha_bar))};
  for (const Elem& x : gens)
    for (const Elem& y : gens) {
      WindowOracle::WElem lhs = win.mul(win.iota(x), win.iota(y));
      if (!win.equal1(lhs, win.iota(mul(x, y)), margin))
        throw ConsistencyError("generator products disagree with the window oracle");
    }
  // nilpotency holds upstream too
  WindowOracle::WElem ep = win.iota(gen_E()), fp = win.iota(gen_F());
  for (int t = 1; t < l; ++t) {
    ep = win.mul(ep, win.iota(gen_E()));
    fp = win.mul(fp, win.iota(gen_F()));
  }
  if (!win.equal1(win.mul(ep, win.iota(gen_E())), {}, margin) ||
      !win.equal1(win.mul(fp, win.iota(gen_F())), {}, margin))
    throw ConsistencyError("nilpotency degree disagrees with the window oracle");
}

// Ecal . (F^a 1_z Ecal^c) =
//   e(a, z) F^{a-1} 1_z Ecal^c + q^{-2a} [c+1 < l] F^a 1_{z+abar} Ecal^{c+1}
// with e(a, z) = sum_{j<a} q^{-2j} (K^2(z - (a-1-j) abar) - 1) / (q - q^{-1}).
Elem UmqAlgebra::left_E(const Elem& x) const {
  auto f = datum->field;
  const CycNum one = CycNum::one(f);
  const CycNum qm2 = datum->q_power(-2 * datum->r);
  const CycNum delta_inv = (datum->q_power(datum->r) - datum->q_power(-datum->r)).inv();
  Elem out;
  for (const auto& [i, coeff] : x) {
    int a, c;
    long long z;
    unpack(i, a, z, c);
    if (a > 0) {
      CycNum e = CycNum::zero(f);
      CycNum qpow = one;
      for (int j = 0; j < a; ++j) {
        long long w = z;
        for (int t = 0; t < a - 1 - j; ++t) w = zadd(w, zneg(alpha_bar));
        e += qpow * (k2[w] - one) * delta_inv;
        qpow = qpow * qm2;
      }
      add_term(out, idx(a - 1, z, c), coeff * e);
    }
    if (c + 1 < l) {
      CycNum scale = coeff;
      for (int t = 0; t < a; ++t) scale = scale * qm2;
      add_term(out, idx(a, zadd(z, alpha_bar), c + 1), scale);
    }
  }
  return out;
}

Elem UmqAlgebra::left_F(const Elem& x) const {
  Elem out;
  for (const auto& [i, coeff] : x) {
    int a, c;
    long long z;
    unpack(i, a, z, c);
    if (a + 1 < l) add_term(out, idx(a + 1, z, c), coeff);
  }
  return out;
}

Elem UmqAlgebra::engine_mul_basis(uint32_t i, uint32_t j) const {
  int a1, c1, a2, c2;
  long long z1, z2;
  unpack(i, a1, z1, c1);
  unpack(j, a2, z2, c2);
  Elem cur = {{j, CycNum::one(datum->field)}};
  for (int t = 0; t < c1; ++t) cur = left_E(cur);
  // project with 1_{z1}: output weight of F^a 1_z Ecal^c is z - a abar
  Elem filtered;
  for (const auto& [kk, coeff] : cur) {
    int a, c;
    long long z;
    unpack(kk, a, z, c);
    long long w = z;
    for (int t = 0; t < a; ++t) w = zadd(w, zneg(alpha_bar));
    if (w == z1) filtered.emplace(kk, coeff);
  }
  cur = std::move(filtered);
  for (int t = 0; t < a1; ++t) cur = left_F(cur);
  return cur;
}

void UmqAlgebra::build_tables() {
  mult.assign(static_cast<size_t>(dim) * dim, {});
  for (uint32_t i = 0; i < dim; ++i)
    for (uint32_t j = 0; j < dim; ++j) {
      Elem prod = engine_mul_basis(i, j);
      mult[static_cast<size_t>(i) * dim + j].assign(prod.begin(), prod.end());
    }

  const auto& t = tabs;
  // nabla(Ecal) = Ecal ox Lcal_a^{-1}
  //             + iota_{-a}phi^{-1}(z1, z2) L_{-a}(z1) K^2(z1) (1_{z1} ox 1_{z2} Ecal)
  // where z2 indexes the raised side of the second leg: 1_{z2}Ecal = Ecal 1_{z2-abar}.
  for (long long w = 0; w < nz; ++w)
    for (long long z = 0; z < nz; ++z)
      add_term2(nabla_E, static_cast<uint64_t>(idx(0, w, 1)) * dim + idx(0, z, 0),
                t.Lcal_plus[0][z].inv());
  for (long long z1 = 0; z1 < nz; ++z1)
    for (long long z2 = 0; z2 < nz; ++z2)
      add_term2(nabla_E, static_cast<uint64_t>(idx(0, z1, 0)) * dim + idx(0, z2, 1),
                t.iota_phi_inv_minus[0][z1 * nz + z2] * t.L_minus[0][z1] * k2[z1]);

  // nabla(F) = F ox Lcal_a + iota_a phi^{-1}(z1, z2) L_a(z1) (1_{z1} ox 1_{z2} F)
  // with z2 the lowered side: 1_{z2}F = F 1_{z2+abar}.
  for (long long w = 0; w < nz; ++w)
    for (long long z = 0; z < nz; ++z)
      add_term2(nabla_F, static_cast<uint64_t>(idx(1, w, 0)) * dim + idx(0, z, 0),
                t.Lcal_plus[0][z]);
  for (long long z1 = 0; z1 < nz; ++z1)
    for (long long z2 = 0; z2 < nz; ++z2)
      add_term2(nabla_F,
                static_cast<uint64_t>(idx(0, z1, 0)) * dim + idx(1, zadd(z2, alpha_bar), 0),
                t.iota_phi_inv_plus[0][z1 * nz + z2] * t.L_plus[0][z1]);

  // S(Ecal) = -sE K^{-2} Ecal, S(F) = -sF F; tables are indexed by the raised
  // (resp. lowered) weight the left function sees
  for (long long z = 0; z < nz; ++z) {
    long long up = zadd(z, alpha_bar);
    add_term(s_E, idx(0, up, 1), -(t.sE[0][up] * k2[up].inv()));
    long long down = zadd(z, zneg(alpha_bar));
    add_term(s_F, idx(1, z, 0), -t.sF[0][down]);
  }
}

Elem UmqAlgebra::unit() const {
  Elem e;
  for (long long z = 0; z < nz; ++z) e.emplace(idx(0, z, 0), CycNum::one(datum->field));
  return e;
}

Elem UmqAlgebra::idem(long long z) const { return {{idx(0, z, 0), CycNum::one(datum->field)}}; }

Elem UmqAlgebra::gen_E() const {
  Elem e;
  for (long long w = 0; w < nz; ++w) e.emplace(idx(0, w, 1), CycNum::one(datum->field));
  return e;
}

Elem UmqAlgebra::gen_F() const {
  Elem e;
  for (long long z = 0; z < nz; ++z) e.emplace(idx(1, z, 0), CycNum::one(datum->field));
  return e;
}

Elem UmqAlgebra::grouplike(const std::vector<CycNum>& table) const {
  Elem e;
  for (long long z = 0; z < nz; ++z)
    if (!table[z].is_zero()) e.emplace(idx(0, z, 0), table[z]);
  return e;
}

CycNum UmqAlgebra::counit(const Elem& x) const {
  CycNum v = CycNum::zero(datum->field);
  for (const auto& [i, coeff] : x) {
    int a, c;
    long long z;
    unpack(i, a, z, c);
    if (a == 0 && c == 0 && z == 0) v += coeff;
  }
  return v;
}

Elem UmqAlgebra::mul(const Elem& x, const Elem& y) const {
  Elem out;
  for (const auto& [i, ci] : x)
    for (const auto& [j, cj] : y) {
      const auto& row = mult[static_cast<size_t>(i) * dim + j];
      if (row.empty()) continue;
      CycNum c = ci * cj;
      for (const auto& [kk, ck] : row) add_term(out, kk, c * ck);
    }
  return out;
}

Elem2 UmqAlgebra::mul2(const Elem2& x, const Elem2& y) const {
  Elem2 out;
  for (const auto& [i, ci] : x) {
    uint32_t i1 = static_cast<uint32_t>(i / dim), i2 = static_cast<uint32_t>(i % dim);
    for (const auto& [j, cj] : y) {
      uint32_t j1 = static_cast<uint32_t>(j / dim), j2 = static_cast<uint32_t>(j % dim);
      const auto& r1 = mult[static_cast<size_t>(i1) * dim + j1];
      if (r1.empty()) continue;
      const auto& r2 = mult[static_cast<size_t>(i2) * dim + j2];
      if (r2.empty()) continue;
      CycNum c = ci * cj;
      for (const auto& [k1, c1] : r1)
        for (const auto& [k2c, c2] : r2)
          add_term2(out, static_cast<uint64_t>(k1) * dim + k2c, c * c1 * c2);
    }
  }
  return out;
}

Elem3 UmqAlgebra::mul3(const Elem3& x, const Elem3& y) const {
  Elem3 out;
  uint64_t d2 = static_cast<uint64_t>(dim) * dim;
  for (const auto& [i, ci] : x) {
    uint32_t i1 = static_cast<uint32_t>(i / d2), i2 = static_cast<uint32_t>((i / dim) % dim),
             i3 = static_cast<uint32_t>(i % dim);
    for (const auto& [j, cj] : y) {
      uint32_t j1 = static_cast<uint32_t>(j / d2), j2 = static_cast<uint32_t>((j / dim) % dim),
               j3 = static_cast<uint32_t>(j % dim);
      const auto& r1 = mult[static_cast<size_t>(i1) * dim + j1];
      if (r1.empty()) continue;
      const auto& r2 = mult[static_cast<size_t>(i2) * dim + j2];
      if (r2.empty()) continue;
      const auto& r3 = mult[static_cast<size_t>(i3) * dim + j3];
      if (r3.empty()) continue;
      CycNum c = ci * cj;
      for (const auto& [k1, c1] : r1) {
        CycNum cc1 = c * c1;
        for (const auto& [k2c, c2] : r2) {
          CycNum cc2 = cc1 * c2;
          for (const auto& [k3, c3] : r3)
            add_term2(out, (static_cast<uint64_t>(k1) * dim + k2c) * dim + k3, cc2 * c3);
        }
      }
    }
  }
  return out;
}

Elem2 UmqAlgebra::tensor(const Elem& x, const Elem& y) const {
  Elem2 out;
  for (const auto& [i, ci] : x)
    for (const auto& [j, cj] : y) add_term2(out, static_cast<uint64_t>(i) * dim + j, ci * cj);
  return out;
}

Elem3 UmqAlgebra::tensor3(const Elem& x, const Elem& y, const Elem& z) const {
  Elem3 out;
  for (const auto& [i, ci] : x)
    for (const auto& [j, cj] : y)
      for (const auto& [kk, ck] : z)
        add_term2(out, (static_cast<uint64_t>(i) * dim + j) * dim + kk, ci * cj * ck);
  return out;
}

Elem2 UmqAlgebra::swap2(const Elem2& x) const {
  Elem2 out;
  for (const auto& [i, c] : x)
    add_term2(out, (i % dim) * static_cast<uint64_t>(dim) + i / dim, c);
  return out;
}

Elem2 UmqAlgebra::nabla(const Elem& x) const {
  Elem2 out;
  auto f = datum->field;
  for (const auto& [i, coeff] : x) {
    int a, c;
    long long z;
    unpack(i, a, z, c);
    Elem2 acc;
    for (long long z1 = 0; z1 < nz; ++z1) {
      long long z2 = zadd(z, zneg(z1));
      add_term2(acc, static_cast<uint64_t>(idx(0, z1, 0)) * dim + idx(0, z2, 0), CycNum::one(f));
    }
    for (int t = 0; t < c; ++t) acc = mul2(acc, nabla_E);
    for (int t = 0; t < a; ++t) acc = mul2(nabla_F, acc);
    for (const auto& [kk, ck] : acc) add_term2(out, kk, coeff * ck);
  }
  return out;
}

Elem2 UmqAlgebra::nabla_op(const Elem& x) const { return swap2(nabla(x)); }

Elem UmqAlgebra::antipode(const Elem& x) const {
  Elem out;
  for (const auto& [i, coeff] : x) {
    int a, c;
    long long z;
    unpack(i, a, z, c);
    Elem acc = idem(zneg(z));
    for (int t = 0; t < c; ++t) acc = mul(s_E, acc);
    for (int t = 0; t < a; ++t) acc = mul(acc, s_F);
    for (const auto& [kk, ck] : acc) add_term(out, kk, coeff * ck);
  }
  return out;
}

Elem3 UmqAlgebra::nabla_leg(const Elem2& x, int leg) const {
  Elem3 out;
  for (const auto& [i, c] : x) {
    uint32_t i1 = static_cast<uint32_t>(i / dim), i2 = static_cast<uint32_t>(i % dim);
    Elem single = {{leg == 0 ? i1 : i2, c}};
    Elem2 spread = nabla(single);
    for (const auto& [j, cj] : spread) {
      uint32_t j1 = static_cast<uint32_t>(j / dim), j2 = static_cast<uint32_t>(j % dim);
      uint64_t key = (leg == 0) ? (static_cast<uint64_t>(j1) * dim + j2) * dim + i2
                                : (static_cast<uint64_t>(i1) * dim + j1) * dim + j2;
      add_term2(out, key, cj);
    }
  }
  return out;
}

Elem3 UmqAlgebra::phi_elem(bool inverse) const { return phi_perm({0, 1, 2}, inverse); }

Elem3 UmqAlgebra::phi_perm(const std::array<int, 3>& perm, bool inverse) const {
  Elem3 out;
  for (long long z1 = 0; z1 < nz; ++z1)
    for (long long z2 = 0; z2 < nz; ++z2)
      for (long long z3 = 0; z3 < nz; ++z3) {
        CycNum v = tabs.phi_at(z1, z2, z3);
        if (inverse) v = v.inv();
        std::array<long long, 3> slots{};
        slots[perm[0]] = z1;
        slots[perm[1]] = z2;
        slots[perm[2]] = z3;
        uint64_t key =
            (static_cast<uint64_t>(idx(0, slots[0], 0)) * dim + idx(0, slots[1], 0)) * dim +
            idx(0, slots[2], 0);
        add_term2(out, key, v);
      }
  return out;
}

Elem UmqAlgebra::beta_elem() const { return grouplike(tabs.beta); }

Elem3 UmqAlgebra::lift3(const Elem2& x, int missing_leg) const {
  Elem3 out;
  for (const auto& [i, c] : x) {
    uint32_t i1 = static_cast<uint32_t>(i / dim), i2 = static_cast<uint32_t>(i % dim);
    for (long long z = 0; z < nz; ++z) {
      uint32_t middle = idx(0, z, 0);
      uint64_t key;
      if (missing_leg == 2)
        key = (static_cast<uint64_t>(i1) * dim + i2) * dim + middle;
      else if (missing_leg == 1)
        key = (static_cast<uint64_t>(i1) * dim + middle) * dim + i2;
      else
        key = (static_cast<uint64_t>(middle) * dim + i1) * dim + i2;
      add_term2(out, key, c);
    }
  }
  return out;
}


namespace {

Json elem_to_json(const Elem& e) {
  Json a = Json::array();
  for (const auto& [i, c] : e) a.push_back(Json::array({i, cyc_to_json(c)}));
  return a;
}

Elem elem_from_json(const Json& j) {
  Elem e;
  for (const auto& t : j) e.emplace(t.at(0).get<uint32_t>(), cyc_from_json(t.at(1)));
  return e;
}

Json elem2_to_json(const Elem2& e, uint32_t dim) {
  Json a = Json::array();
  for (const auto& [k, c] : e)
    a.push_back(Json::array({k / dim, k % dim, cyc_to_json(c)}));
  return a;
}

Elem2 elem2_from_json(const Json& j, uint32_t dim) {
  Elem2 e;
  for (const auto& t : j)
    e.emplace(t.at(0).get<uint64_t>() * dim + t.at(1).get<uint64_t>(), cyc_from_json(t.at(2)));
  return e;
}

}  // namespace

Json UmqAlgebra::to_json() const {
  Json j;
  j["format"] = "alg-v1";
  j["config"] = Json{{"type", std::string(1, datum->type.family) + std::to_string(datum->type.rank)},
                     {"order", datum->twol},
                     {"k", datum->k},
                     {"lattice", datum->lattice_tag},
                     {"section_seed", bal.section_seed()}};
  j["l"] = l;
  j["lattice"] = datum->lattice_tag;
  Json zf = Json::array();
  for (auto v : datum->quotient_Z().invariant_factors) zf.push_back(v);
  j["z_factors"] = zf;
  Json basis = Json::array();
  for (uint32_t i = 0; i < dim; ++i) {
    int a, c;
    long long z;
    unpack(i, a, z, c);
    basis.push_back(Json{{"a", a}, {"z", z}, {"c", c}});
  }
  j["basis"] = basis;
  Json mj = Json::array();
  for (uint32_t i = 0; i < dim; ++i)
    for (uint32_t jj = 0; jj < dim; ++jj)
      for (const auto& [k, c] : mult[static_cast<size_t>(i) * dim + jj])
        mj.push_back(Json::array({i, jj, k, cyc_to_json(c)}));
  j["mult"] = mj;
  j["coproduct_generators"] =
      Json{{"E", elem2_to_json(nabla_E, dim)}, {"F", elem2_to_json(nabla_F, dim)}};
  j["antipode_generators"] = Json{{"E", elem_to_json(s_E)}, {"F", elem_to_json(s_F)}};
  Json phij = Json::array();
  for (long long z1 = 0; z1 < nz; ++z1)
    for (long long z2 = 0; z2 < nz; ++z2)
      for (long long z3 = 0; z3 < nz; ++z3)
        phij.push_back(Json::array({z1, z2, z3, cyc_to_json(tabs.phi_at(z1, z2, z3))}));
  j["phi"] = phij;
  Json betaj = Json::array();
  for (long long z = 0; z < nz; ++z) betaj.push_back(Json::array({z, cyc_to_json(tabs.beta[z])}));
  j["beta"] = betaj;
  j["R"] = elem2_to_json(R, dim);
  Json rc = Json::array();
  for (const auto& c : r_coeffs) rc.push_back(cyc_to_json(c));
  j["r_coeffs"] = rc;
  Json counit_j = Json::array();
  for (long long z = 0; z < nz; ++z)
    counit_j.push_back(Json::array({idx(0, z, 0), z == 0 ? 1 : 0}));
  j["counit"] = counit_j;
  return j;
}

UmqAlgebra UmqAlgebra::from_json(const Json& j) {
  const Json& cfg = j.at("config");
  CartanType t = parse_cartan_type(cfg.at("type").get<std::string>());
  std::string lat = cfg.at("lattice").get<std::string>();
  LatticeSpec spec = lat == "sc" ? LatticeSpec::sc() : LatticeSpec::adjoint();
  auto d = std::make_shared<const RootDatum>(build_root_datum(
      t, spec, cfg.at("order").get<long long>(), cfg.at("k").get<long long>()));
  BalancingFunction b(d, cfg.at("section_seed").get<uint64_t>());
  UmqAlgebra u(d, b);
  u.l = static_cast<int>(d->l_param);
  u.nz = d->quotient_Z().size;
  u.dim = static_cast<uint32_t>(static_cast<long long>(u.l) * u.l * u.nz);
  u.alpha_bar = d->quotient_Z().project_idx(d->simple_root(0));
  u.tabs = derive_tables(b);
  Weight alpha = d->simple_root(0);
  for (long long z = 0; z < u.nz; ++z)
    u.k2.push_back(d->q_power(2 * d->scaled_pairing(alpha, b.section(z))));

  // tables come from the file, not the derivation, so tampering is visible
  u.mult.assign(static_cast<size_t>(u.dim) * u.dim, {});
  for (const auto& row : j.at("mult")) {
    uint32_t i = row.at(0).get<uint32_t>(), jj = row.at(1).get<uint32_t>(),
             k = row.at(2).get<uint32_t>();
    u.mult[static_cast<size_t>(i) * u.dim + jj].push_back({k, cyc_from_json(row.at(3))});
  }
  u.nabla_E = elem2_from_json(j.at("coproduct_generators").at("E"), u.dim);
  u.nabla_F = elem2_from_json(j.at("coproduct_generators").at("F"), u.dim);
  u.s_E = elem_from_json(j.at("antipode_generators").at("E"));
  u.s_F = elem_from_json(j.at("antipode_generators").at("F"));
  for (const auto& row : j.at("phi")) {
    long long z1 = row.at(0).get<long long>(), z2 = row.at(1).get<long long>(),
              z3 = row.at(2).get<long long>();
    u.tabs.phi[(z1 * u.nz + z2) * u.nz + z3] = cyc_from_json(row.at(3));
  }
  for (const auto& row : j.at("beta"))
    u.tabs.beta[row.at(0).get<long long>()] = cyc_from_json(row.at(1));
  u.R = elem2_from_json(j.at("R"), u.dim);
  for (const auto& c : j.at("r_coeffs")) u.r_coeffs.push_back(cyc_from_json(c));
  if (!u.R.empty()) {
    // rebuild the inverse from the stored R
    Elem2 g0, higher;
    for (const auto& [k, c] : u.R) {
      int a, cc;
      long long z;
      u.unpack(static_cast<uint32_t>(k / u.dim), a, z, cc);
      if (cc == 0)
        add_term2(g0, k, c);
      else
        add_term2(higher, k, c);
    }
    Elem2 g0inv;
    for (const auto& [k, c] : g0) add_term2(g0inv, k, c.inv());
    Elem2 m = u.mul2(higher, g0inv);
    Elem2 acc = u.tensor(u.unit(), u.unit());
    Elem2 power = acc;
    for (int tt = 1; tt < u.l; ++tt) {
      power = u.mul2(power, m);
      if (power.empty()) break;
      for (const auto& [k, c] : power) add_term2(acc, k, tt % 2 == 1 ? -c : c);
    }
    u.R_inv = u.mul2(g0inv, acc);
  }
  return u;
}

}  // namespace logmod
