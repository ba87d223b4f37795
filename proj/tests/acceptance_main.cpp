// Acceptance gate: every numbered criterion below runs at the stated
// tolerance (exact arithmetic throughout) and prints one PASS/FAIL line.
#include <chrono>
#include <iostream>
#include <sstream>

#include "logmod/api.hpp"

using namespace logmod;

namespace {

int g_failures = 0;

struct Criterion {
  std::string name;
  bool ok = true;
  std::ostringstream notes;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes << "    failed: " << what << "\n";
    }
  }
  void finish(double seconds) {
    std::cout << (ok ? "PASS" : "FAIL") << "  " << name << "  (" << seconds << " s)\n";
    if (!ok) {
      std::cout << notes.str();
      ++g_failures;
    }
  }
};

template <typename F>
void criterion(const std::string& name, F body) {
  Criterion c;
  c.name = name;
  auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.finish(secs);
}

// The classification's fourth clause applies to the family singled out by
// its hypothesis: the Killing form is 2Z-valued on the root lattice and
// there are neighboring long simple roots.  In Bourbaki labels that is B_n
// with n >= 3 (some conventions label this family C_n).
bool clause4_family(const RootDatum& d) {
  if (d.rank() < 3) return false;
  int longs = 0;
  for (int i = 0; i < d.rank(); ++i) longs += d.d[i] > 1;
  if (longs < 2) return false;
  for (int i = 0; i < d.rank(); ++i)
    for (int j = 0; j < d.rank(); ++j)
      if (d.scaled_pairing(d.simple_root(i), d.simple_root(j)) % (2 * d.r) != 0) return false;
  return true;
}

}  // namespace

int main() {
  // 1. classification of lattice admissibility on the grid
  criterion("1 admissibility classification", [](Criterion& c) {
    std::vector<long long> orders = {4, 6, 8, 12, 16, 20};
    std::vector<CartanType> types;
    for (char fam : {'A', 'B', 'C', 'D', 'E', 'F', 'G'})
      for (int r = 1; r <= 4; ++r)
        if (valid_cartan_type(fam, r)) types.push_back(CartanType{fam, r});
    auto rows = classification_table(types, orders, 1, false);
    for (const auto& row : rows) {
      std::string label = std::string(1, row.family) + std::to_string(row.rank) + " " +
                          row.lattice + " ord " + std::to_string(row.order);
      RootDatum d = build_root_datum(CartanType{row.family, row.rank}, LatticeSpec::sc(),
                                     row.order, 1);
      if (row.lattice == "sc") {
        // clause (1): every simply-connected lattice admissible at even order
        c.expect(row.verdict.admissible, label + ": clause (1) sc admissibility");
        if (row.family == 'A' && row.rank == 1) {
          // clause (2)
          c.expect(row.verdict.strongly_admissible, label + ": clause (2)");
        } else if (clause4_family(d)) {
          // clause (4): strongly admissible iff ord = 2 mod 4 or 8 | ord
          bool expect_strong = (row.order % 4 != 0) || (row.order % 8 == 0);
          c.expect(row.verdict.strongly_admissible == expect_strong,
                   label + ": clause (4) strong admissibility");
        } else if (row.family != 'F') {
          // clause (3): the remaining named families, strongly iff 4 | ord
          c.expect(row.verdict.strongly_admissible == (row.order % 4 == 0),
                   label + ": clause (3) strong admissibility");
        }
      }
      if (row.family == 'A' && row.rank == 1 && row.lattice == "adjoint") {
        // clause (6)
        bool strong = (row.order % 4 != 0) || (row.order % 8 == 0);
        c.expect(row.verdict.strongly_admissible == strong, label + ": clause (6) strong");
        if (!strong)
          c.expect(!row.verdict.admissible, label + ": clause (6) inadmissible");
      }
    }
    // clause (5): at 2 exp(P/Q) | l every intermediate lattice is admissible
    for (const auto& t : types) {
      long long e = pq_exponent(t);
      for (long long ord : orders) {
        if (ord % 2 != 0 || (ord / 2) % (2 * e) != 0) continue;
        for (const IntMat& h : intermediate_lattices(t)) {
          RootDatum d = build_root_datum(t, LatticeSpec::explicit_cols(h), ord, 1);
          c.expect(check_admissibility(d).admissible,
                   std::string(1, t.family) + std::to_string(t.rank) + " intermediate at ord " +
                       std::to_string(ord) + ": clause (5)");
        }
      }
    }
    // named spot values; the clause-four family is labeled C in some
    // conventions and B in the Bourbaki labels used by this library
    auto get = [&](char f2, int r2, const std::string& lat, long long o) {
      for (const auto& row : rows)
        if (row.family == f2 && row.rank == r2 && row.lattice == lat && row.order == o)
          return row.verdict;
      throw ConsistencyError("row not found");
    };
    c.expect(!get('B', 3, "sc", 4).strongly_admissible, "clause-4 rank 3 at ord 4");
    c.expect(get('B', 3, "sc", 8).strongly_admissible, "clause-4 rank 3 at ord 8");
    c.expect(get('D', 4, "sc", 8).strongly_admissible, "D4 sc ord 8");
    c.expect(!get('A', 1, "adjoint", 4).admissible, "rank-one adjoint ord 4 inadmissible");
    c.expect(get('A', 1, "adjoint", 8).strongly_admissible, "rank-one adjoint ord 8 strong");
    c.expect(get('A', 1, "adjoint", 6).strongly_admissible, "rank-one adjoint odd-l strong");
    c.expect(get('A', 2, "sc", 8).strongly_admissible, "A2 sc iff 4 | ord");
    c.expect(!get('A', 2, "sc", 6).strongly_admissible, "A2 sc iff 4 | ord");
    c.expect(get('A', 2, "sc", 6).admissible, "A2 sc admissible at 6");
  });

  // 2. degree recovery and quantum binomial identities
  criterion("2 degree recovery", [](Criterion& c) {
    Rng rng(20240101);
    for (std::string t : {"A1", "A2", "A3", "B2", "G2"}) {
      for (long long twol : {4, 6, 8}) {
        RootDatum d = build_root_datum(parse_cartan_type(t), LatticeSpec::sc(), twol, 1);
        for (int trial = 0; trial < 200; ++trial) {
          Weight w(d.rank());
          for (int i = 0; i < d.rank(); ++i) w[i] = rng.range(-50, 50);
          Weight back = recover_degree(d, eigendata_of_weight(d, w));
          if (back != w) {
            c.expect(false, t + " order " + std::to_string(twol) + ": round trip");
            return;
          }
        }
      }
    }
    for (long long l : {2, 3, 4, 5, 6}) {
      auto f = CycField::get(4 * l);
      long long e0 = 2;  // q as a power of the ambient root
      for (long long k = 1; k <= 5; ++k) {
        long long sign = ((l * (k - 1)) % 2 == 0) ? 1 : -1;
        c.expect(gauss_binom(k * l, l, f, e0) == CycNum::from_rat(f, to_rat(sign * k)),
                 "binom(kl, l) identity");
        for (long long a = 0; a < l; ++a) {
          CycNum lhs = gauss_binom(k * l + a, l, f, e0);
          CycNum s1 = gauss_binom(k * l, l, f, e0);
          if (a % 2) s1 = -s1;
          CycNum s2 = gauss_binom(a, l, f, e0);
          if ((k * l) % 2) s2 = -s2;
          c.expect(lhs == s1 + s2, "binom(kl + a, l) decomposition");
        }
      }
    }
  });

  // 3. dimensions and simple counts
  criterion("3 dimension and simple count", [](Criterion& c) {
    for (long long l : {2, 3, 4}) {
      UmqAlgebra u = build_algebra("A1", 2 * l, "sc", 1, 0);
      c.expect(u.dim == static_cast<uint32_t>(2 * l * l * l),
               "dim = 2 l^3 at l = " + std::to_string(l));
      std::set<long long> hw;
      for (long long z = 0; z < u.nz; ++z) hw.insert(simple(u, z).highest_weight);
      c.expect(hw.size() == static_cast<size_t>(2 * l),
               "simple count = 2l at l = " + std::to_string(l));
    }
    UmqAlgebra p = build_algebra("A1", 8, "adjoint", 1, 0);
    std::multiset<uint32_t> dims;
    for (long long z = 0; z < p.nz; ++z) dims.insert(simple(p, z).dimension);
    c.expect(dims.size() == 2, "rank-one adjoint at l = 4 has exactly two simples");
    c.expect(dims == std::multiset<uint32_t>{1, 2},
             "adjoint l = 4 simple dimensions {1, 2}; computed {" +
                 std::to_string(*dims.begin()) + ", " + std::to_string(*dims.rbegin()) + "}");
  });

  // 4. quasi-Hopf axiom suite with negative controls
  criterion("4 quasi-Hopf axioms", [](Criterion& c) {
    std::set<std::string> orientations;
    for (auto cfg : std::vector<std::pair<std::string, long long>>{
             {"sc", 4}, {"sc", 6}, {"sc", 8}, {"adjoint", 6}, {"adjoint", 8}}) {
      UmqAlgebra u = build_algebra("A1", cfg.second, cfg.first, 1, 0);
      Report rep = verify_quasihopf(u);
      c.expect(rep.all_passed(),
               cfg.first + " order " + std::to_string(cfg.second) + ":\n" + rep.to_text());
      if (rep.extra.contains("coassoc_orientation"))
        orientations.insert(rep.extra["coassoc_orientation"].get<std::string>());
    }
    // the orientation is discovered, never hard-coded; it must be uniform
    // across configurations and across sections
    {
      UmqAlgebra u = build_algebra("A1", 4, "sc", 1, 17);
      Report rep = verify_quasihopf(u);
      c.expect(rep.all_passed(), "perturbed section still satisfies the axioms");
      if (rep.extra.contains("coassoc_orientation"))
        orientations.insert(rep.extra["coassoc_orientation"].get<std::string>());
    }
    c.expect(orientations.size() == 1, "coassociativity orientation is uniform");
    // negative controls through the serialized artifact
    UmqAlgebra u = build_algebra("A1", 4, "sc", 1, 0);
    Json alg = u.to_json();
    Json bad_beta = alg;
    bad_beta["beta"][1][1] = cyc_to_json(-cyc_from_json(bad_beta["beta"][1][1]));
    Report rb = verify_quasihopf(UmqAlgebra::from_json(bad_beta));
    bool zig_fail = false;
    for (const auto& ck : rb.checks)
      if (ck.status == CheckStatus::Fail && ck.name.rfind("zigzag", 0) == 0 &&
          !ck.witness.is_null())
        zig_fail = true;
    c.expect(zig_fail, "perturbed beta fails a zigzag with a witness");
    Json bad_phi = alg;
    bad_phi["phi"][21][3] = cyc_to_json(-cyc_from_json(bad_phi["phi"][21][3]));
    Report rp = verify_quasihopf(UmqAlgebra::from_json(bad_phi));
    bool pent_fail = false;
    for (const auto& ck : rp.checks)
      if (ck.status == CheckStatus::Fail && ck.name == "pentagon-cocycle") pent_fail = true;
    c.expect(pent_fail, "perturbed phi fails the pentagon");
  });

  // 5. quasitriangularity
  criterion("5 quasitriangularity", [](Criterion& c) {
    std::set<std::string> orientations;
    for (long long l : {2, 3}) {
      UmqAlgebra u = build_algebra("A1", 2 * l, "sc", 1, 0);
      Report rep = verify_quasitriangular(u);
      c.expect(rep.all_passed(), "l = " + std::to_string(l) + ":\n" + rep.to_text());
      c.expect(u.r_coeffs[0].is_one(), "c_0 = 1");
      CycNum c1_expect = -(u.datum->q_power(u.datum->r) - u.datum->q_power(-u.datum->r));
      c.expect(u.r_coeffs[1] == c1_expect, "c_1 = -(q - q^{-1})");
      c.expect(u.r_coeffs.size() == static_cast<size_t>(l), "no slots at n >= l");
      c.expect(u.R.size() <= static_cast<size_t>(l) * u.nz * u.nz,
               "R has at most l |Z|^2 terms");
      if (rep.extra.contains("hexagon_orientation"))
        orientations.insert(rep.extra["hexagon_orientation"].get<std::string>());
    }
    c.expect(orientations.size() == 1, "hexagon orientation is uniform");
  });

  // 6. oracle agreement
  criterion("6 window oracle agreement", [](Criterion& c) {
    for (long long l : {2, 3}) {
      UmqAlgebra u = build_algebra("A1", 2 * l, "sc", 1, 0);
      Report rep = oracle_agreement(u, 4 * l);
      c.expect(rep.all_passed(), "l = " + std::to_string(l) + ":\n" + rep.to_text());
    }
  });

  // 7. non-degeneracy at desk scale
  criterion("7 transparency", [](Criterion& c) {
    for (auto cfg : std::vector<std::pair<std::string, long long>>{
             {"sc", 4}, {"sc", 6}, {"adjoint", 8}}) {
      UmqAlgebra u = build_algebra("A1", cfg.second, cfg.first, 1, 0);
      Report rep = transparency_suite(u);
      c.expect(rep.all_passed(),
               cfg.first + " order " + std::to_string(cfg.second) + ":\n" + rep.to_text());
    }
  });

  // 8. ribbon existence and the adjoint pivot obstruction
  criterion("8 ribbon", [](Criterion& c) {
    for (long long l : {2, 3}) {
      UmqAlgebra u = build_algebra("A1", 2 * l, "sc", 1, 0);
      Report rep = ribbon_search(u);
      c.expect(rep.all_passed(), "l = " + std::to_string(l) + ":\n" + rep.to_text());
      c.expect(rep.extra.contains("solution_count") &&
                   rep.extra["solution_count"].get<size_t>() >= 1,
               "nonempty ribbon solution set");
    }
    UmqAlgebra p = build_algebra("A1", 8, "adjoint", 1, 0);
    Report rep = ribbon_search(p);
    bool skipped = false;
    for (const auto& ck : rep.checks)
      if (ck.name == "ribbon-search" && ck.status == CheckStatus::Skipped) skipped = true;
    c.expect(skipped, "adjoint with 4 | l reports the search skipped");
    bool minus_one = false;
    if (rep.extra.contains("k_rho_on_xm_generators"))
      for (const auto& v : rep.extra["k_rho_on_xm_generators"]) {
        CycNum x = cyc_from_json(v);
        if (x == -CycNum::one(p.datum->field)) minus_one = true;
      }
    c.expect(minus_one, "pivot obstruction K_rho((l/2) alpha) = -1 reproduced");
  });

  // 9. determinism of the full suite
  criterion("9 determinism", [](Criterion& c) {
    auto run_once = [] {
      UmqAlgebra u = build_algebra("A1", 4, "sc", 1, 42);
      std::set<std::string> suites(all_suites().begin(), all_suites().end());
      Report rep = run_suites(u, suites);
      return u.to_json().dump() + "\n" + rep.to_json().dump();
    };
    std::string a = run_once(), b = run_once();
    c.expect(a == b, "byte-identical JSON across runs");
  });

  std::cout << (g_failures == 0 ? "ALL CRITERIA PASSED"
                                : std::to_string(g_failures) + " CRITERIA FAILED")
            << "\n";
  return g_failures == 0 ? 0 : 1;
}
