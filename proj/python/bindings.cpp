#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "logmod/api.hpp"

namespace py = pybind11;
using namespace logmod;

namespace {

std::string rootdata_str(const std::string& type, const std::string& lattice, long long order,
                         long long k) {
  return rootdata_json(type, lattice, order, k).dump();
}

std::string admissibility_str(const std::vector<std::string>& families, int max_rank,
                              const std::vector<long long>& orders, long long k,
                              bool intermediates) {
  return admissibility_table_json(families, max_rank, orders, k, intermediates).dump();
}

std::string eigendata_str(const std::string& type, const std::string& lattice, long long order,
                          long long k, const std::vector<long long>& coords) {
  return eigendata_json(type, lattice, order, k, coords).dump();
}

std::string recover_degree_str(const std::string& eigendata) {
  return recover_degree_json(Json::parse(eigendata)).dump();
}

std::string build_algebra_str(const std::string& type, long long order,
                              const std::string& lattice, long long k, uint64_t seed) {
  return build_algebra(type, order, lattice, k, seed).to_json().dump();
}

std::string verify_str(const std::string& alg_json, const std::vector<std::string>& suites) {
  UmqAlgebra u = UmqAlgebra::from_json(Json::parse(alg_json));
  std::set<std::string> s;
  if (suites.empty())
    s.insert(all_suites().begin(), all_suites().end());
  else
    s.insert(suites.begin(), suites.end());
  return run_suites(u, s).to_json().dump();
}

std::string simples_str(const std::string& alg_json) {
  UmqAlgebra u = UmqAlgebra::from_json(Json::parse(alg_json));
  return simples_json(u).dump();
}

std::vector<long long> lattice_transparent(const std::string& type, const std::string& lattice,
                                           long long order, long long k,
                                           const std::vector<std::vector<long long>>& weights) {
  RootDatum d =
      build_root_datum(parse_cartan_type(type), lattice_spec_from_string(lattice), order, k);
  std::vector<long long> out;
  for (const auto& w : weights)
    out.push_back(lattice_transparency_criterion(d, w) ? 1 : 0);
  return out;
}

}  // namespace

PYBIND11_MODULE(_logmod, m) {
  m.doc() = "exact machinery for log-modular quantum groups at even-order roots of unity";
  m.def("rootdata_json", &rootdata_str, py::arg("type"), py::arg("lattice") = "sc",
        py::arg("order") = 4, py::arg("k") = 1);
  m.def("admissibility_table_json", &admissibility_str, py::arg("families"),
        py::arg("max_rank") = 4, py::arg("orders"), py::arg("k") = 1,
        py::arg("intermediates") = false);
  m.def("eigendata_json", &eigendata_str, py::arg("type"), py::arg("lattice"), py::arg("order"),
        py::arg("k"), py::arg("coords"));
  m.def("recover_degree_json", &recover_degree_str, py::arg("eigendata_json"));
  m.def("build_algebra_json", &build_algebra_str, py::arg("type"), py::arg("order"),
        py::arg("lattice") = "sc", py::arg("k") = 1, py::arg("section_seed") = 0);
  m.def("verify_json", &verify_str, py::arg("alg_json"),
        py::arg("suites") = std::vector<std::string>{});
  m.def("simples_json", &simples_str, py::arg("alg_json"));
  m.def("lattice_transparent", &lattice_transparent, py::arg("type"), py::arg("lattice"),
        py::arg("order"), py::arg("k"), py::arg("weights"));
}
