#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>

#include "logmod/admissibility.hpp"

using namespace logmod;

namespace {
AdmissibilityVerdict verdict(const std::string& type, const LatticeSpec& spec, long long twol,
                             long long k = 1) {
  return check_admissibility(build_root_datum(parse_cartan_type(type), spec, twol, k));
}
}  // namespace

TEST_CASE("rank one verdicts") {
  for (long long twol : {4, 6, 8, 10, 12, 16, 20}) {
    auto v = verdict("A1", LatticeSpec::sc(), twol);
    CHECK(v.strongly_admissible);  // SL2 at every even order
  }
  CHECK(!verdict("A1", LatticeSpec::adjoint(), 4).admissible);
  CHECK(verdict("A1", LatticeSpec::adjoint(), 4).witness.has_value());
  CHECK(verdict("A1", LatticeSpec::adjoint(), 8).strongly_admissible);
  CHECK(verdict("A1", LatticeSpec::adjoint(), 6).strongly_admissible);
  CHECK(!verdict("A1", LatticeSpec::adjoint(), 12).admissible);
}

TEST_CASE("simply connected admissibility") {
  for (std::string t : {"A1", "A2", "A3", "B3", "D4", "G2", "F4"}) {
    for (long long twol : {4, 6, 8, 12}) {
      CHECK(verdict(t, LatticeSpec::sc(), twol).admissible);
    }
  }
  // The symplectic family is the exception at ord = 2 mod 4: the Killing
  // form is integral on the whole weight lattice, so X^M = lP rather than
  // lQ, and the diagonal picks up q^{l^2} = -1 at odd l.
  for (std::string t : {"B2", "C3", "C4"}) {
    CHECK(!verdict(t, LatticeSpec::sc(), 6).admissible);
    CHECK(verdict(t, LatticeSpec::sc(), 4).admissible);
    CHECK(verdict(t, LatticeSpec::sc(), 8).admissible);
    CHECK(verdict(t, LatticeSpec::sc(), 12).admissible);
  }
}

TEST_CASE("strong admissibility per clause") {
  // Simply laced above rank one, both doubly laced rank-two forms, G2, and
  // symplectic types: strongly admissible iff 4 | ord(q).
  for (std::string t : {"A2", "A3", "B2", "C3", "C4", "D4", "G2", "E6"}) {
    CHECK(verdict(t, LatticeSpec::sc(), 8).strongly_admissible);
    CHECK(verdict(t, LatticeSpec::sc(), 12).strongly_admissible);
    CHECK(!verdict(t, LatticeSpec::sc(), 6).strongly_admissible);
    CHECK(!verdict(t, LatticeSpec::sc(), 10).strongly_admissible);
    CHECK(verdict(t, LatticeSpec::sc(), 4).strongly_admissible);
  }
  // Odd orthogonal types (Killing form 2Z-valued on the root lattice).  At
  // odd rank: strongly admissible iff ord = 2 mod 4 or 8 | ord.  At even
  // rank the half-spin weights scale into X^M and break the odd-l branch,
  // leaving strong admissibility iff 8 | ord.
  {
    std::string t = "B3";
    CHECK(verdict(t, LatticeSpec::sc(), 6).strongly_admissible);
    CHECK(!verdict(t, LatticeSpec::sc(), 4).strongly_admissible);
    CHECK(verdict(t, LatticeSpec::sc(), 8).strongly_admissible);
    CHECK(!verdict(t, LatticeSpec::sc(), 12).strongly_admissible);
    CHECK(verdict(t, LatticeSpec::sc(), 16).strongly_admissible);
    CHECK(!verdict(t, LatticeSpec::sc(), 20).strongly_admissible);
  }
  {
    std::string t = "B4";
    auto v6 = verdict(t, LatticeSpec::sc(), 6);
    CHECK(v6.admissible);
    CHECK(!v6.strongly_admissible);
    CHECK(!verdict(t, LatticeSpec::sc(), 4).strongly_admissible);
    CHECK(verdict(t, LatticeSpec::sc(), 8).strongly_admissible);
    CHECK(!verdict(t, LatticeSpec::sc(), 12).strongly_admissible);
    CHECK(verdict(t, LatticeSpec::sc(), 16).strongly_admissible);
    CHECK(!verdict(t, LatticeSpec::sc(), 20).strongly_admissible);
  }
  // the hypothesis separating the two families
  auto even_q_form = [](const std::string& t) {
    RootDatum d = build_root_datum(parse_cartan_type(t), LatticeSpec::sc(), 4, 1);
    for (int i = 0; i < d.rank(); ++i)
      for (int j = 0; j < d.rank(); ++j)
        if (d.scaled_pairing(d.simple_root(i), d.simple_root(j)) % (2 * d.r) != 0)
          return false;
    return true;
  };
  CHECK(even_q_form("B3"));
  CHECK(!even_q_form("C3"));
  CHECK(!even_q_form("A2"));
  // A2 sc at order 6: admissible but not strongly
  auto v = verdict("A2", LatticeSpec::sc(), 6);
  CHECK(v.admissible);
  CHECK(!v.strongly_admissible);
}

TEST_CASE("verdicts are independent of the primitive root index") {
  for (std::string t : {"A1", "A2", "C3"}) {
    for (long long twol : {4, 6, 8, 12}) {
      AdmissibilityVerdict base = verdict(t, LatticeSpec::sc(), twol, 1);
      for (long long k = 3; k < twol; k += 2) {
        if (igcd(k, twol) != 1) continue;
        auto v = verdict(t, LatticeSpec::sc(), twol, k);
        CHECK(v.admissible == base.admissible);
        CHECK(v.strongly_admissible == base.strongly_admissible);
      }
    }
  }
}

TEST_CASE("generator sufficiency against a window") {
  // exhaustive check over bounded X^M combinations agrees with the
  // generator-only verdict
  for (std::string t : {"A1", "A2", "B2"}) {
    for (auto spec : {LatticeSpec::sc(), LatticeSpec::adjoint()}) {
      for (long long twol : {4, 6, 8}) {
        RootDatum d = build_root_datum(parse_cartan_type(t), spec, twol, 1);
        if (d.quotient_Z().size > 64) continue;
        auto v = check_admissibility(d);
        const LatticeSubgroup& xm = d.xm_sublattice();
        bool adm = true, strong = true;
        std::vector<Weight> pts;
        std::vector<long long> range = {-2, -1, 0, 1, 2};
        // all combinations of generator coefficients in [-2, 2]
        std::vector<int> idx(xm.hnf.cols, 0);
        while (true) {
          Weight w(d.rank(), 0);
          for (int j = 0; j < xm.hnf.cols; ++j)
            w = wadd(w, wscale(range[idx[j]], xm.column(j)));
          pts.push_back(w);
          int p = xm.hnf.cols - 1;
          while (p >= 0 && ++idx[p] == static_cast<int>(range.size())) idx[p--] = 0;
          if (p < 0) break;
        }
        for (const auto& x : pts) {
          if (!d.omega_eval(x, x).is_one()) adm = false;
          for (const auto& y : pts)
            if (!d.omega_eval(x, y).is_one()) strong = false;
        }
        CHECK(v.admissible == adm);
        CHECK(v.strongly_admissible == strong);
      }
    }
  }
}

TEST_CASE("homomorphism property underlying generator sufficiency") {
  Rng rng(5);
  for (std::string t : {"A2", "C3"}) {
    RootDatum d = build_root_datum(parse_cartan_type(t), LatticeSpec::sc(), 6, 1);
    const LatticeSubgroup& xm = d.xm_sublattice();
    CycNum one = CycNum::one(d.field);
    for (int trial = 0; trial < 40; ++trial) {
      Weight x(d.rank(), 0), y(d.rank(), 0);
      for (int j = 0; j < xm.hnf.cols; ++j) {
        x = wadd(x, wscale(rng.range(-3, 3), xm.column(j)));
        y = wadd(y, wscale(rng.range(-3, 3), xm.column(j)));
      }
      CycNum cross = d.omega_eval(x, y);
      CHECK((cross == one || cross == -one));
      CHECK(d.omega_eval(wadd(x, y), wadd(x, y)) ==
            d.omega_eval(x, x) * d.omega_eval(y, y) * cross * cross);
    }
  }
}

TEST_CASE("intermediate lattices and clause five") {
  // 2 exp(P/Q) | l makes every intermediate lattice admissible
  struct Case {
    std::string type;
    long long twol;
  };
  for (const Case& c : {Case{"A1", 8}, Case{"A2", 12}, Case{"A3", 16}, Case{"D4", 8}}) {
    CartanType t = parse_cartan_type(c.type);
    long long l = c.twol / 2;
    long long e = pq_exponent(t);
    REQUIRE(l % (2 * e) == 0);
    for (const IntMat& h : intermediate_lattices(t)) {
      RootDatum d = build_root_datum(t, LatticeSpec::explicit_cols(h), c.twol, 1);
      CHECK(check_admissibility(d).admissible);
    }
  }
  // counting known subgroup lattices of P/Q
  CHECK(intermediate_lattices(parse_cartan_type("A1")).size() == 2);
  CHECK(intermediate_lattices(parse_cartan_type("A2")).size() == 2);
  CHECK(intermediate_lattices(parse_cartan_type("A3")).size() == 3);
  CHECK(intermediate_lattices(parse_cartan_type("D4")).size() == 5);
}

TEST_CASE("classification table runs the grid") {
  auto rows = classification_table({parse_cartan_type("A1"), parse_cartan_type("C3")},
                                   {4, 8}, 1, false);
  CHECK(rows.size() == 8);  // 2 types x 2 lattices x 2 orders
}

TEST_CASE("symplectic counterexample cross-checked numerically") {
  // brute-force X^M from its definition over a window, then evaluate the
  // violating self-pairing through the complex embedding, independent of the
  // exact field arithmetic
  RootDatum d = build_root_datum(parse_cartan_type("C3"), LatticeSpec::sc(), 6, 1);
  long long rl = d.r * d.l_param;
  std::vector<Weight> gens;
  for (int j = 0; j < d.rank(); ++j) gens.push_back(d.X.column(j));
  // search a small window of X for vectors pairing into lZ with all of X
  std::vector<Weight> found;
  for (long long a = -4; a <= 4; ++a)
    for (long long b = -4; b <= 4; ++b)
      for (long long c = -4; c <= 4; ++c) {
        Weight x = wadd(wadd(wscale(a, gens[0]), wscale(b, gens[1])), wscale(c, gens[2]));
        bool in_xm = true;
        for (const auto& g : gens)
          if (d.scaled_pairing(x, g) % rl != 0) in_xm = false;
        if (in_xm) {
          CHECK(d.xm_sublattice().contains(x));
          if (!wzero(x)) found.push_back(x);
        } else {
          CHECK(!d.xm_sublattice().contains(x));
        }
      }
  REQUIRE(!found.empty());
  // some member violates Omega(x, x) = 1; confirm with plain doubles
  bool violated = false;
  for (const auto& x : found) {
    long long sp = d.scaled_pairing(x, x);  // r (x, x)
    double angle = 2.0 * 3.14159265358979323846 *
                   static_cast<double>(d.k * sp % d.N) / static_cast<double>(d.N);
    std::complex<double> omega(std::cos(angle), std::sin(angle));
    if (std::abs(omega - std::complex<double>(1.0, 0.0)) > 1e-9) violated = true;
  }
  CHECK(violated);
  CHECK(!check_admissibility(d).admissible);
}
