#include "logmod/admissibility.hpp"

#include <set>

namespace logmod {

AdmissibilityVerdict check_admissibility(const RootDatum& d) {
  AdmissibilityVerdict v;
  const LatticeSubgroup& xm = d.xm_sublattice();
  int n = xm.hnf.cols;
  v.admissible = true;
  v.strongly_admissible = true;
  // Omega(x, x) is a homomorphism on X^M (off-diagonal values there are
  // signs), so generators decide admissibility; bilinearity handles the rest.
  for (int i = 0; i < n && v.admissible; ++i) {
    Weight g = xm.column(i);
    if (!d.omega_eval(g, g).is_one()) {
      v.admissible = false;
      v.strongly_admissible = false;
      v.witness = {g, g};
    }
  }
  if (v.admissible) {
    for (int i = 0; i < n && v.strongly_admissible; ++i)
      for (int j = 0; j < n; ++j) {
        Weight g = xm.column(i), h = xm.column(j);
        if (!d.omega_eval(g, h).is_one()) {
          v.strongly_admissible = false;
          v.witness = {g, h};
          break;
        }
      }
  }
  return v;
}

std::vector<IntMat> intermediate_lattices(const CartanType& t) {
  IntMat a = cartan_matrix(t);
  int n = t.rank;
  // elements of P/Q: tuples modulo the SNF diagonal of the Cartan matrix
  SnfResult sn = snf(a);
  std::vector<long long> diag(n);
  long long total = 1;
  for (int i = 0; i < n; ++i) {
    diag[i] = sn.s.at(i, i).get_si();
    total *= diag[i];
  }
  IntMat uinv = inverse_unimodular(sn.u);
  // representative of tuple t in P (f-coords): Uinv * t
  auto rep_of = [&](long long idx) {
    std::vector<long long> tup(n);
    for (int i = n - 1; i >= 0; --i) {
      tup[i] = idx % diag[i];
      idx /= diag[i];
    }
    Weight w(n, 0);
    for (int i = 0; i < n; ++i) {
      long long acc = 0;
      for (int j = 0; j < n; ++j) acc += uinv.at(i, j).get_si() * tup[j];
      w[i] = acc;
    }
    return w;
  };
  auto tuple_of_weight = [&](const Weight& w) {
    std::vector<long long> tup(n);
    for (int i = 0; i < n; ++i) {
      long long acc = 0;
      for (int j = 0; j < n; ++j) acc += sn.u.at(i, j).get_si() * w[j];
      tup[i] = imod(acc, diag[i]);
    }
    return tup;
  };
  auto idx_of_tuple = [&](const std::vector<long long>& tup) {
    long long idx = 0;
    for (int i = 0; i < n; ++i) idx = idx * diag[i] + tup[i];
    return idx;
  };
  // enumerate subgroups of P/Q by closing each subset of elements; the
  // groups here are tiny so the quadratic dedup is fine
  std::set<std::set<long long>> subgroups;
  std::vector<std::set<long long>> stack = {{0}};
  subgroups.insert({0});
  while (!stack.empty()) {
    auto g = stack.back();
    stack.pop_back();
    for (long long e = 1; e < total; ++e) {
      if (g.count(e)) continue;
      // close g + {e}
      std::set<long long> h = g;
      std::vector<long long> queue(h.begin(), h.end());
      h.insert(e);
      queue.push_back(e);
      for (size_t qi = 0; qi < queue.size(); ++qi)
        for (long long b : std::vector<long long>(h.begin(), h.end())) {
          auto ta = tuple_of_weight(rep_of(queue[qi]));
          auto tb = tuple_of_weight(rep_of(b));
          std::vector<long long> tc(n);
          for (int i = 0; i < n; ++i) tc[i] = imod(ta[i] + tb[i], diag[i]);
          long long c = idx_of_tuple(tc);
          if (h.insert(c).second) queue.push_back(c);
        }
      if (subgroups.insert(h).second) stack.push_back(h);
    }
  }
  std::vector<IntMat> lattices;
  for (const auto& g : subgroups) {
    // lattice = Q + lifts of the subgroup elements
    IntMat cols(n, n + static_cast<int>(g.size()));
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) cols.at(i, j) = a.at(i, j);
    int j = n;
    for (long long e : g) {
      Weight w = rep_of(e);
      for (int i = 0; i < n; ++i) cols.at(i, j) = to_int(w[i]);
      ++j;
    }
    lattices.push_back(hnf_cols(cols));
  }
  return lattices;
}

std::vector<TableRow> classification_table(const std::vector<CartanType>& types,
                                           const std::vector<long long>& orders,
                                           long long k, bool include_intermediates) {
  std::vector<TableRow> rows;
  for (const auto& t : types) {
    std::vector<std::pair<std::string, LatticeSpec>> lattices = {
        {"sc", LatticeSpec::sc()}, {"adjoint", LatticeSpec::adjoint()}};
    if (include_intermediates) {
      auto all = intermediate_lattices(t);
      int tag = 0;
      for (auto& h : all)
        lattices.push_back({"int" + std::to_string(tag++), LatticeSpec::explicit_cols(h)});
    }
    for (const auto& [tag, spec] : lattices) {
      for (long long ord : orders) {
        long long kk = k;
        while (igcd(kk, ord) != 1) ++kk;  // keep k coprime across mixed orders
        RootDatum d = build_root_datum(t, spec, ord, kk);
        rows.push_back(TableRow{t.family, t.rank, tag, ord, check_admissibility(d)});
      }
    }
  }
  return rows;
}

}  // namespace logmod
