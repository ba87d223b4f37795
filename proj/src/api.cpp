#include "logmod/api.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

namespace logmod {

LatticeSpec lattice_spec_from_string(const std::string& s) {
  if (s == "sc" || s == "simply-connected" || s == "simply_connected") return LatticeSpec::sc();
  if (s == "adjoint") return LatticeSpec::adjoint();
  // otherwise a JSON matrix of basis columns in f-coordinates
  Json j = Json::parse(s);
  int rows = static_cast<int>(j.size());
  int cols = rows ? static_cast<int>(j.at(0).size()) : 0;
  IntMat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int c = 0; c < cols; ++c) m.at(i, c) = to_int(j.at(i).at(c).get<long long>());
  return LatticeSpec::explicit_cols(m);
}

Json rootdata_json(const std::string& type, const std::string& lattice, long long order,
                   long long k) {
  CartanType t = parse_cartan_type(type);
  RootDatum d = build_root_datum(t, lattice_spec_from_string(lattice), order, k);
  Json j;
  j["type"] = type;
  j["order"] = order;
  j["k"] = k;
  Json cart = Json::array();
  for (int i = 0; i < d.rank(); ++i) {
    Json row = Json::array();
    for (int jj = 0; jj < d.rank(); ++jj) row.push_back(d.cartan.at(i, jj).get_si());
    cart.push_back(row);
  }
  j["cartan"] = cart;
  Json sym = Json::array();
  for (int v : d.d) sym.push_back(v);
  j["symmetrizers"] = sym;
  j["r"] = d.r;
  j["lattice_hnf"] = intmat_to_json(d.X.hnf);
  j["scaled_gram"] = intmat_to_json(d.scaled_gram);
  Json la = Json::array();
  for (auto v : d.l_alpha_values()) la.push_back(v);
  j["l_alpha"] = la;
  j["xm_hnf"] = intmat_to_json(d.xm_sublattice().hnf);
  Json zf = Json::array();
  for (auto v : d.quotient_Z().invariant_factors) zf.push_back(v);
  j["z_invariant_factors"] = zf;
  DualCartanData dual = d.dual_group_data();
  j["dual_cartan"] = intmat_to_json(dual.dual_cartan);
  j["rho"] = weight_to_json(d.rho());
  j["k_rho_trivial"] = d.k_rho_trivial_on_xm();
  return j;
}

Json admissibility_table_json(const std::vector<std::string>& families, int max_rank,
                              const std::vector<long long>& orders, long long k,
                              bool include_intermediates) {
  std::vector<CartanType> types;
  for (const auto& fam : families) {
    if (fam.size() != 1) throw UsageError("families must be single letters");
    char f = static_cast<char>(std::toupper(fam[0]));
    for (int r = 1; r <= max_rank; ++r)
      if (valid_cartan_type(f, r)) types.push_back(CartanType{f, r});
  }
  auto rows = classification_table(types, orders, k, include_intermediates);
  Json out = Json::array();
  for (const auto& r : rows) {
    Json row{{"family", std::string(1, r.family)},
             {"rank", r.rank},
             {"lattice", r.lattice},
             {"order", r.order},
             {"admissible", r.verdict.admissible},
             {"strongly_admissible", r.verdict.strongly_admissible}};
    if (r.verdict.witness) {
      row["witness"] = Json{{"x", weight_to_json(r.verdict.witness->first)},
                            {"y", weight_to_json(r.verdict.witness->second)}};
    }
    out.push_back(row);
  }
  return out;
}

std::string render_admissibility_text(const Json& table) {
  std::ostringstream os;
  os << "type  lattice   order  admissible  strongly\n";
  for (const auto& row : table) {
    std::string type = row.at("family").get<std::string>() +
                       std::to_string(row.at("rank").get<int>());
    os << type << std::string(6 - type.size(), ' ')
       << row.at("lattice").get<std::string>()
       << std::string(std::max<size_t>(1, 10 - row.at("lattice").get<std::string>().size()), ' ')
       << row.at("order").get<long long>() << "      "
       << (row.at("admissible").get<bool>() ? "yes" : "NO ") << "         "
       << (row.at("strongly_admissible").get<bool>() ? "yes" : "NO") << "\n";
  }
  return os.str();
}

Json eigendata_json(const std::string& type, const std::string& lattice, long long order,
                    long long k, const Weight& lambda) {
  CartanType t = parse_cartan_type(type);
  RootDatum d = build_root_datum(t, lattice_spec_from_string(lattice), order, k);
  TorusEigendata e = eigendata_of_weight(d, lambda);
  Json mp = Json::array(), np = Json::array();
  for (auto v : e.m_prime) mp.push_back(v);
  for (const auto& v : e.n_prime) np.push_back(v.get_str());
  return Json{{"type", type}, {"lattice", lattice}, {"order", order}, {"k", k},
              {"m_prime", mp}, {"n_prime", np}};
}

Json recover_degree_json(const Json& eigendata) {
  CartanType t = parse_cartan_type(eigendata.at("type").get<std::string>());
  std::string lattice =
      eigendata.contains("lattice") ? eigendata.at("lattice").get<std::string>() : "sc";
  long long k = eigendata.contains("k") ? eigendata.at("k").get<long long>() : 1;
  RootDatum d = build_root_datum(t, lattice_spec_from_string(lattice),
                                 eigendata.at("order").get<long long>(), k);
  TorusEigendata e;
  for (const auto& v : eigendata.at("m_prime")) e.m_prime.push_back(v.get<long long>());
  for (const auto& v : eigendata.at("n_prime")) {
    if (v.is_string())
      e.n_prime.push_back(Int(v.get<std::string>()));
    else
      e.n_prime.push_back(to_int(v.get<long long>()));
  }
  Weight lambda = recover_degree(d, e);
  return Json{{"weight", weight_to_json(lambda)}};
}

UmqAlgebra build_algebra(const std::string& type, long long order, const std::string& lattice,
                         long long k, uint64_t section_seed) {
  CartanType t = parse_cartan_type(type);
  auto d = std::make_shared<const RootDatum>(
      build_root_datum(t, lattice_spec_from_string(lattice), order, k));
  BalancingFunction b = make_balancing(d, section_seed);
  UmqAlgebra u = UmqAlgebra::build(d, b);
  derive_r_matrix(u);
  return u;
}

const std::vector<std::string>& all_suites() {
  static const std::vector<std::string> s = {"pentagon",    "coassoc", "counit",
                                             "antipode",    "intertwiner", "hexagon",
                                             "ribbon",      "transparency", "oracle"};
  return s;
}

namespace {

const std::map<std::string, std::vector<std::string>>& suite_members() {
  static const std::map<std::string, std::vector<std::string>> m = {
      {"pentagon", {"pentagon-cocycle", "phi-normalized"}},
      {"coassoc", {"quasi-coassociativity", "nabla-ef-relation", "nabla-nilpotency",
                   "nabla-idempotents"}},
      {"counit", {"counit-coproduct", "counit-associator"}},
      {"antipode", {"zigzag-antipode-left", "zigzag-antipode-right", "zigzag-associator",
                    "zigzag-associator-inverse"}},
      {"intertwiner", {"intertwiner", "r-seed-coefficients", "r-truncation", "r-invertible"}},
      {"hexagon", {"hexagons"}},
  };
  return m;
}

}  // namespace

Report run_suites(const UmqAlgebra& u, const std::set<std::string>& suites) {
  auto start = std::chrono::steady_clock::now();
  for (const auto& s : suites)
    if (std::find(all_suites().begin(), all_suites().end(), s) == all_suites().end())
      throw UsageError("unknown suite: " + s);

  bool want_qh = suites.count("pentagon") || suites.count("coassoc") ||
                 suites.count("counit") || suites.count("antipode");
  bool want_qt = suites.count("intertwiner") || suites.count("hexagon");

  // independent blocks, fanned out on the worker pool
  std::vector<std::function<Report()>> thunks;
  std::vector<std::string> block_names;
  if (want_qh) {
    thunks.push_back([&] { return verify_quasihopf(u); });
    block_names.push_back("qh");
  }
  if (want_qt) {
    thunks.push_back([&] { return verify_quasitriangular(u); });
    block_names.push_back("qt");
  }
  if (suites.count("ribbon")) {
    thunks.push_back([&] { return ribbon_search(u); });
    block_names.push_back("ribbon");
  }
  if (suites.count("transparency")) {
    thunks.push_back([&] { return transparency_suite(u); });
    block_names.push_back("transparency");
  }
  if (suites.count("oracle")) {
    thunks.push_back([&] { return oracle_agreement(u, 4 * u.l); });
    block_names.push_back("oracle");
  }

  size_t nthreads = std::thread::hardware_concurrency();
  if (nthreads == 0) nthreads = 1;
  if (const char* env = std::getenv("LOGMOD_THREADS")) {
    long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1) nthreads = std::min<size_t>(nthreads, static_cast<size_t>(cap));
  }
  nthreads = std::min(nthreads, thunks.size());
  std::vector<Report> results(thunks.size());
  if (nthreads <= 1) {
    for (size_t i = 0; i < thunks.size(); ++i) results[i] = thunks[i]();
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (size_t t = 0; t < nthreads; ++t)
      pool.emplace_back([&] {
        while (true) {
          size_t i = next.fetch_add(1);
          if (i >= thunks.size()) break;
          results[i] = thunks[i]();
        }
      });
    for (auto& th : pool) th.join();
  }

  // merge deterministically in block order, filtering to the requested suites
  Report merged;
  merged.config = Json{{"l", u.l},
                       {"lattice", u.datum->lattice_tag},
                       {"order", u.datum->twol},
                       {"k", u.datum->k},
                       {"section_seed", u.bal.section_seed()},
                       {"dim", u.dim}};
  auto want_check = [&](const std::string& name) {
    for (const auto& s : suites) {
      auto it = suite_members().find(s);
      if (it == suite_members().end()) continue;
      for (const auto& m : it->second)
        if (m == name) return true;
    }
    return false;
  };
  for (size_t i = 0; i < results.size(); ++i) {
    bool filtered_block = block_names[i] == "qh" || block_names[i] == "qt";
    for (auto& c : results[i].checks) {
      if (!filtered_block || want_check(c.name)) merged.add(c);
    }
    for (auto& [k, v] : results[i].extra.items()) merged.extra[k] = v;
  }
  merged.timing_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return merged;
}

Json simples_json(const UmqAlgebra& u) {
  Json out;
  out["l"] = u.l;
  out["lattice"] = u.datum->lattice_tag;
  out["count"] = u.nz;
  Report trans = transparency_suite(u);
  std::set<long long> transparent;
  if (trans.extra.contains("transparent_simples"))
    for (const auto& v : trans.extra["transparent_simples"])
      transparent.insert(v.get<long long>());
  Report rib = ribbon_search(u);
  // twist table of the first solution, if any
  std::map<long long, Json> twist_of;
  if (rib.extra.contains("twist_scalars") && !rib.extra["twist_scalars"].empty()) {
    for (const auto& e : rib.extra["twist_scalars"].at(0).at("twists"))
      twist_of[e.at("z").get<long long>()] = e.at("theta");
  }
  Json list = Json::array();
  for (long long z = 0; z < u.nz; ++z) {
    ModuleRep s = simple(u, z);
    Json row{{"z", z},
             {"dim", s.dimension},
             {"highest_weight", weight_to_json(u.bal.section(z))},
             {"transparent", transparent.count(z) > 0}};
    if (twist_of.count(z)) row["twist"] = twist_of[z];
    list.push_back(row);
  }
  out["simples"] = list;
  bool ribbon_skipped = false;
  for (const auto& c : rib.checks)
    if (c.name == "ribbon-search" && c.status == CheckStatus::Skipped) ribbon_skipped = true;
  out["ribbon_skipped"] = ribbon_skipped;
  return out;
}

}  // namespace logmod
