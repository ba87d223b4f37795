#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "logmod/api.hpp"
#include "logmod/window_oracle.hpp"

using namespace logmod;

namespace {
UmqAlgebra make(const std::string& lattice, long long twol, uint64_t seed = 0) {
  return build_algebra("A1", twol, lattice, 1, seed);
}
}  // namespace

TEST_CASE("build validations") {
  CHECK_THROWS_AS(build_algebra("A2", 4, "sc", 1, 0), UsageError);
  CHECK_THROWS_AS(build_algebra("A1", 4, "adjoint", 1, 0), DomainError);  // inadmissible
  CHECK_THROWS_AS(build_algebra("A1", 5, "sc", 1, 0), UsageError);        // odd order
}

TEST_CASE("dimension and basic structure") {
  UmqAlgebra u = make("sc", 4);
  CHECK(u.dim == 16);  // 2 l^3 with l = 2
  // idempotent orthogonality through the table
  for (long long z = 0; z < u.nz; ++z)
    for (long long w = 0; w < u.nz; ++w) {
      Elem p = u.mul(u.idem(z), u.idem(w));
      if (z == w) {
        REQUIRE(p.size() == 1);
        CHECK(p.begin()->second.is_one());
      } else {
        CHECK(p.empty());
      }
    }
  // unit is the identity
  Elem e = u.gen_E();
  CHECK(u.mul(u.unit(), e) == e);
  CHECK(u.mul(e, u.unit()) == e);
  // K = sum_z q^z 1_z lies in the grouplike algebra and commutes with it
  std::vector<CycNum> ktab;
  for (long long z = 0; z < u.nz; ++z)
    ktab.push_back(u.datum->q_power(u.datum->scaled_pairing(u.datum->simple_root(0),
                                                            u.bal.section(z))));
  Elem k = u.grouplike(ktab);
  CHECK(u.mul(k, u.idem(0)) == u.mul(u.idem(0), k));
}

TEST_CASE("engine relations") {
  for (long long twol : {4, 6}) {
    UmqAlgebra u = make("sc", twol);
    auto f = u.datum->field;
    CycNum qm2 = u.datum->q_power(-2 * u.datum->r);
    CycNum delta_inv = (u.datum->q_power(u.datum->r) - u.datum->q_power(-u.datum->r)).inv();
    // Ecal F - q^{-2} F Ecal = (K^2 - 1)/(q - q^{-1})
    Elem lhs = u.mul(u.gen_E(), u.gen_F());
    Elem rhs = u.mul(u.gen_F(), u.gen_E());
    for (auto& [kk, c] : rhs) c = c * qm2;
    Elem diff = lhs;
    for (const auto& [kk, c] : rhs) add_term(diff, kk, -c);
    std::vector<CycNum> rel;
    for (long long z = 0; z < u.nz; ++z)
      rel.push_back((u.k2[z] - CycNum::one(f)) * delta_inv);
    Elem expect = u.grouplike(rel);
    for (const auto& [kk, c] : expect) add_term(diff, kk, -c);
    CHECK(diff.empty());
    // nilpotency
    Elem ep = u.gen_E(), fp = u.gen_F();
    for (int t = 1; t < u.l; ++t) {
      ep = u.mul(ep, u.gen_E());
      fp = u.mul(fp, u.gen_F());
    }
    CHECK(u.mul(ep, u.gen_E()).empty());
    CHECK(u.mul(fp, u.gen_F()).empty());
    // idempotent shifts
    Elem se = u.mul(u.gen_E(), u.idem(0));
    Elem se2 = u.mul(u.idem(u.zadd(0, u.alpha_bar)), u.gen_E());
    CHECK(se == se2);
  }
}

TEST_CASE("associativity of the table, sampled") {
  UmqAlgebra u = make("sc", 6);
  Rng rng(77);
  auto f = u.datum->field;
  for (int trial = 0; trial < 60; ++trial) {
    uint32_t i = static_cast<uint32_t>(rng.range(0, u.dim - 1));
    uint32_t j = static_cast<uint32_t>(rng.range(0, u.dim - 1));
    uint32_t k = static_cast<uint32_t>(rng.range(0, u.dim - 1));
    Elem bi = {{i, CycNum::one(f)}}, bj = {{j, CycNum::one(f)}}, bk = {{k, CycNum::one(f)}};
    CHECK(u.mul(u.mul(bi, bj), bk) == u.mul(bi, u.mul(bj, bk)));
  }
}

TEST_CASE("counit is an algebra map on samples") {
  UmqAlgebra u = make("sc", 4);
  Rng rng(3);
  auto f = u.datum->field;
  for (int trial = 0; trial < 40; ++trial) {
    uint32_t i = static_cast<uint32_t>(rng.range(0, u.dim - 1));
    uint32_t j = static_cast<uint32_t>(rng.range(0, u.dim - 1));
    Elem bi = {{i, CycNum::one(f)}}, bj = {{j, CycNum::one(f)}};
    CHECK(u.counit(u.mul(bi, bj)) == u.counit(bi) * u.counit(bj));
  }
}

TEST_CASE("coproduct images match the tabulated coefficient shapes") {
  UmqAlgebra u = make("sc", 6);
  // nabla(1_z) = sum_{z1 + z2 = z} 1_{z1} ox 1_{z2}
  for (long long z = 0; z < u.nz; ++z) {
    Elem2 n = u.nabla(u.idem(z));
    CHECK(n.size() == static_cast<size_t>(u.nz));
    for (const auto& [k, c] : n) {
      uint32_t k1 = static_cast<uint32_t>(k / u.dim), k2 = static_cast<uint32_t>(k % u.dim);
      int a1, c1, a2, c2;
      long long z1, z2;
      u.unpack(k1, a1, z1, c1);
      u.unpack(k2, a2, z2, c2);
      CHECK(a1 == 0);
      CHECK(c1 == 0);
      CHECK(a2 == 0);
      CHECK(c2 == 0);
      CHECK(u.zadd(z1, z2) == z);
      CHECK(c.is_one());
    }
  }
  // counit axiom on generators comes from the full suite; spot check here
  Elem2 ne = u.nabla(u.gen_E());
  CHECK(!ne.empty());
}

TEST_CASE("quasi-Hopf suite passes for rank one configurations") {
  for (auto cfg : std::vector<std::pair<std::string, long long>>{
           {"sc", 4}, {"sc", 6}, {"adjoint", 6}, {"adjoint", 8}}) {
    UmqAlgebra u = make(cfg.first, cfg.second);
    Report rep = verify_quasihopf(u);
    INFO(cfg.first, " order ", cfg.second, "\n", rep.to_text());
    CHECK(rep.all_passed());
  }
}

TEST_CASE("quasitriangular suite passes") {
  for (auto cfg : std::vector<std::pair<std::string, long long>>{{"sc", 4}, {"sc", 6}}) {
    UmqAlgebra u = make(cfg.first, cfg.second);
    Report rep = verify_quasitriangular(u);
    INFO(rep.to_text());
    CHECK(rep.all_passed());
  }
}

TEST_CASE("oracle agreement") {
  for (auto cfg : std::vector<std::pair<std::string, long long>>{{"sc", 4}, {"sc", 6}}) {
    UmqAlgebra u = make(cfg.first, cfg.second);
    Report rep = oracle_agreement(u, 4 * u.l);
    INFO(rep.to_text());
    CHECK(rep.all_passed());
  }
}

TEST_CASE("modules") {
  UmqAlgebra u = make("sc", 6);  // l = 3
  // Verma: F shifts, Ecal kills the top
  ModuleRep m = verma(u, 2);
  CHECK(m.dimension == 3);
  CHECK(module_satisfies_relations(u, m));
  bool top_killed = true;
  for (uint32_t i = 0; i < m.dimension; ++i)
    if (!m.mat_E[i][0].is_zero()) top_killed = false;
  CHECK(top_killed);
  // simples: L(0) is trivial, count = |Z|, highest weights distinct
  CHECK(simple(u, 0).dimension == 1);
  std::set<long long> hw;
  for (long long z = 0; z < u.nz; ++z) {
    ModuleRep s = simple(u, z);
    CHECK(module_satisfies_relations(u, s));
    hw.insert(s.highest_weight);
    // exactly one singular line: E kills only the top basis vector
    for (uint32_t col = 1; col < s.dimension; ++col) {
      bool killed = true;
      for (uint32_t row = 0; row < s.dimension; ++row)
        if (!s.mat_E[row][col].is_zero()) killed = false;
      CHECK(!killed);
    }
  }
  CHECK(hw.size() == static_cast<size_t>(u.nz));
  // SL2 dims come in 1..l twice
  std::multiset<uint32_t> dims;
  for (long long z = 0; z < u.nz; ++z) dims.insert(simple(u, z).dimension);
  for (uint32_t d2 = 1; d2 <= static_cast<uint32_t>(u.l); ++d2)
    CHECK(dims.count(d2) == 2);
}

TEST_CASE("transparency and ribbon at order four") {
  UmqAlgebra u = make("sc", 4);
  Report t = transparency_suite(u);
  INFO(t.to_text());
  CHECK(t.all_passed());
  Report r = ribbon_search(u);
  INFO(r.to_text());
  CHECK(r.all_passed());
  CHECK(r.extra["solution_count"].get<size_t>() >= 1);
}

TEST_CASE("lattice transparency criterion") {
  RootDatum d = build_root_datum(parse_cartan_type("A1"), LatticeSpec::sc(), 6, 1);
  CHECK(!lattice_transparency_criterion(d, Weight{1}));  // f is never transparent
  CHECK(lattice_transparency_criterion(d, Weight{6}));   // l alpha
  CHECK(lattice_transparency_criterion(d, Weight{0}));
  // cross-check on random weights across ranks happens inside the call; run a
  // grid to exercise it
  Rng rng(8);
  for (std::string t : {"A2", "B2", "G2"}) {
    RootDatum dd = build_root_datum(parse_cartan_type(t), LatticeSpec::sc(), 8, 1);
    for (int trial = 0; trial < 40; ++trial) {
      Weight w(dd.rank());
      for (int i = 0; i < dd.rank(); ++i) w[i] = rng.range(-10, 10);
      lattice_transparency_criterion(dd, w);  // throws on disagreement
    }
    for (int j = 0; j < dd.xm_sublattice().hnf.cols; ++j)
      CHECK(lattice_transparency_criterion(dd, dd.xm_sublattice().column(j)));
  }
}

TEST_CASE("serialization round trip preserves the suites") {
  UmqAlgebra u = make("sc", 4);
  Json j = u.to_json();
  UmqAlgebra back = UmqAlgebra::from_json(j);
  CHECK(back.dim == u.dim);
  CHECK(back.R == u.R);
  Report rep = verify_quasihopf(back);
  CHECK(rep.all_passed());
  CHECK(back.to_json() == j);
}

TEST_CASE("negative controls: tampered tables fail with witnesses") {
  UmqAlgebra u = make("sc", 4);
  Json j = u.to_json();
  // scale one beta entry
  Json jb = j;
  jb["beta"][1][1] = cyc_to_json(-cyc_from_json(jb["beta"][1][1]));
  UmqAlgebra bad = UmqAlgebra::from_json(jb);
  Report rep = verify_quasihopf(bad);
  CHECK(!rep.all_passed());
  bool zigzag_failed = false;
  for (const auto& c : rep.checks)
    if (c.status == CheckStatus::Fail && c.name.rfind("zigzag", 0) == 0 && !c.witness.is_null())
      zigzag_failed = true;
  CHECK(zigzag_failed);
  // perturb one phi entry
  Json jp = j;
  jp["phi"][13][3] = cyc_to_json(-cyc_from_json(jp["phi"][13][3]));
  UmqAlgebra badp = UmqAlgebra::from_json(jp);
  Report rep2 = verify_quasihopf(badp);
  CHECK(!rep2.all_passed());
  bool pentagon_failed = false;
  for (const auto& c : rep2.checks)
    if (c.status == CheckStatus::Fail && c.name == "pentagon-cocycle") pentagon_failed = true;
  CHECK(pentagon_failed);
}

TEST_CASE("orientation flags stable across sections") {
  std::string coassoc, hex;
  for (uint64_t seed : {0ull, 5ull}) {
    UmqAlgebra u = make("sc", 4, seed);
    Report a = verify_quasihopf(u);
    Report b = verify_quasitriangular(u);
    REQUIRE(a.all_passed());
    REQUIRE(b.all_passed());
    std::string ca = a.extra["coassoc_orientation"].get<std::string>();
    std::string hb = b.extra["hexagon_orientation"].get<std::string>();
    if (coassoc.empty()) {
      coassoc = ca;
      hex = hb;
    } else {
      CHECK(ca == coassoc);
      CHECK(hb == hex);
    }
  }
}

TEST_CASE("center has the expected small shape at l = 2") {
  UmqAlgebra u = make("sc", 4);
  auto basis = center_basis(u);
  CHECK(!basis.empty());
  for (const auto& v : basis) {
    CHECK(u.mul(u.gen_E(), v) == u.mul(v, u.gen_E()));
    CHECK(u.mul(u.gen_F(), v) == u.mul(v, u.gen_F()));
  }
}

TEST_CASE("adjoint l = 4: the nontrivial simple is the classical three line") {
  // hand-coded restriction: the standard three-dimensional module with
  // highest K-eigenvalue q^2 at a primitive eighth root, written directly
  // from the textbook matrices, is a module for the adjoint realization and
  // is visibly irreducible; this pins the {1, 3} dimension pattern
  // independently of the Verma construction
  UmqAlgebra u = build_algebra("A1", 8, "adjoint", 1, 0);
  auto f = u.datum->field;
  CycNum q = u.datum->q_power(u.datum->r);
  CycNum two_q = q + q.inv();  // [2]_q
  ModuleRep m;
  m.dimension = 3;
  // weights alpha, 0, -alpha project to classes 1, 0, 1
  long long z1 = u.datum->quotient_Z().project_idx(Weight{2});
  long long z0 = u.datum->quotient_Z().project_idx(Weight{0});
  m.weights = {z1, z0, z1};
  m.highest_weight = z1;
  m.mat_E.assign(3, std::vector<CycNum>(3, CycNum::zero(f)));
  m.mat_F.assign(3, std::vector<CycNum>(3, CycNum::zero(f)));
  m.mat_F[1][0] = CycNum::one(f);
  m.mat_F[2][1] = CycNum::one(f);
  // Ecal = K E with E w_1 = [2] w_0, E w_2 = [2] w_1 and K = diag(q^2, 1, q^-2)
  m.mat_E[0][1] = q.pow(2) * two_q;
  m.mat_E[1][2] = two_q;
  CHECK(module_satisfies_relations(u, m));
  // irreducible: both raising steps are nonzero, so any nonzero vector
  // generates everything
  CHECK(!m.mat_E[0][1].is_zero());
  CHECK(!m.mat_E[1][2].is_zero());
  // and it is the head of the Verma at class 1
  CHECK(simple(u, z1).dimension == 3);
}

TEST_CASE("antipode is an anti-homomorphism") {
  UmqAlgebra u = make("sc", 6);
  // S(1_z) negates the index
  for (long long z = 0; z < u.nz; ++z)
    CHECK(u.antipode(u.idem(z)) == u.idem(u.zneg(z)));
  // S(xy) = S(y) S(x) on generator products and on random basis pairs
  Elem ef = u.mul(u.gen_E(), u.gen_F());
  CHECK(u.antipode(ef) == u.mul(u.antipode(u.gen_F()), u.antipode(u.gen_E())));
  Rng rng(12);
  auto f = u.datum->field;
  for (int trial = 0; trial < 25; ++trial) {
    uint32_t i = static_cast<uint32_t>(rng.range(0, u.dim - 1));
    uint32_t j = static_cast<uint32_t>(rng.range(0, u.dim - 1));
    Elem bi = {{i, CycNum::one(f)}}, bj = {{j, CycNum::one(f)}};
    CHECK(u.antipode(u.mul(bi, bj)) == u.mul(u.antipode(bj), u.antipode(bi)));
  }
}
