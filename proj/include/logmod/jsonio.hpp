#pragma once

#include <json.hpp>

#include "logmod/cyclotomic.hpp"
#include "logmod/intmat.hpp"

namespace logmod {

using Json = nlohmann::ordered_json;

// { "order": N, "coeffs": [[num, den], ...] } in power-basis order; numerator
// and denominator are decimal strings so the round trip is exact at any size.
Json cyc_to_json(const CycNum& x);
CycNum cyc_from_json(const Json& j);

Json intmat_to_json(const IntMat& m);
IntMat intmat_from_json(const Json& j);

Json weight_to_json(const Weight& w);
Weight weight_from_json(const Json& j);

}  // namespace logmod
