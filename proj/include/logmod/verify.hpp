#pragma once

#include "logmod/report.hpp"
#include "logmod/umq.hpp"

namespace logmod {

// Quasi-Hopf axiom suite: pentagon (3-cocycle), quasi-coassociativity with
// the orientation discovered and recorded, counit axioms, the four antipode
// zig-zags with the normalized pair (alpha = 1, beta), and multiplicativity
// of the coproduct on the defining relations.
Report verify_quasihopf(const UmqAlgebra& u);

// Intertwiner and hexagon identities for the derived R-matrix; records which
// hexagon convention validates.  Also checks invertibility and the seed
// coefficients c_0, c_1.
Report verify_quasitriangular(const UmqAlgebra& u);

// Central solve for ribbon elements: candidates are grouplike translates of
// the closed forms K_rho u^{-1} and K_rho^{-1} u (Drinfeld element computed
// in the window oracle); each candidate is tested against the ribbon axioms
// exactly, and twist scalars on all simples are reported.
Report ribbon_search(const UmqAlgebra& u);

// Double-braiding transparency of every simple against every simple, and the
// highest-weight monodromy eigenvalue law.
Report transparency_suite(const UmqAlgebra& u);

// Entry-by-entry agreement of all tabulated data with the window-oracle
// conjugation at the given half-width.
Report oracle_agreement(const UmqAlgebra& u, long long half_width);

// R-matrix derivation through the window oracle; fills u.R, u.R_inv and
// u.r_coeffs.  Called by the builder, exposed for tests.
void derive_r_matrix(UmqAlgebra& u);

// basis elements commuting with everything
std::vector<Elem> center_basis(const UmqAlgebra& u);

}  // namespace logmod
