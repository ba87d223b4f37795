#pragma once

#include "logmod/rootdata.hpp"

namespace logmod {

struct AdmissibilityVerdict {
  bool admissible = false;
  bool strongly_admissible = false;
  // generator pair violating the failed condition, if any
  std::optional<std::pair<Weight, Weight>> witness;
};

AdmissibilityVerdict check_admissibility(const RootDatum& d);

struct TableRow {
  char family;
  int rank;
  std::string lattice;  // "sc", "adjoint", or an index tag for intermediates
  long long order;
  AdmissibilityVerdict verdict;
};

// Verdicts for the simply-connected and adjoint lattice of each type over a
// grid of even orders.  With include_intermediates, every lattice between Q
// and P is enumerated (subgroups of P/Q) and reported too.
std::vector<TableRow> classification_table(const std::vector<CartanType>& types,
                                           const std::vector<long long>& orders,
                                           long long k = 1,
                                           bool include_intermediates = false);

// All lattices Q <= X <= P, as HNF bases in f-coordinates (includes Q and P).
std::vector<IntMat> intermediate_lattices(const CartanType& t);

}  // namespace logmod
