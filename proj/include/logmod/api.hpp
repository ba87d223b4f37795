#pragma once

#include <set>

#include "logmod/admissibility.hpp"
#include "logmod/verify.hpp"
#include "logmod/weightrec.hpp"

namespace logmod {

LatticeSpec lattice_spec_from_string(const std::string& s);

Json rootdata_json(const std::string& type, const std::string& lattice, long long order,
                   long long k);

Json admissibility_table_json(const std::vector<std::string>& families, int max_rank,
                              const std::vector<long long>& orders, long long k,
                              bool include_intermediates);
std::string render_admissibility_text(const Json& table);

// eigendata: { "type", "order", "k"?, "lattice"?, "m_prime": [...], "n_prime": [...] }
Json recover_degree_json(const Json& eigendata);
Json eigendata_json(const std::string& type, const std::string& lattice, long long order,
                    long long k, const Weight& lambda);

UmqAlgebra build_algebra(const std::string& type, long long order, const std::string& lattice,
                         long long k, uint64_t section_seed);

// Known suite names, in canonical run order.
const std::vector<std::string>& all_suites();

Report run_suites(const UmqAlgebra& u, const std::set<std::string>& suites);

Json simples_json(const UmqAlgebra& u);

}  // namespace logmod
