#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "logmod/api.hpp"

using namespace logmod;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCheckFailed = 2;
constexpr int kExitInternal = 3;

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text << "\n";
    return;
  }
  std::ofstream os(path);
  if (!os) throw UsageError("cannot open output file: " + path);
  os << text << "\n";
}

Json load_json(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw UsageError("cannot open file: " + path);
  Json j;
  is >> j;
  return j;
}

std::set<std::string> parse_suites(const std::string& arg) {
  std::set<std::string> out;
  if (arg.empty() || arg == "all") {
    for (const auto& s : all_suites()) out.insert(s);
    return out;
  }
  std::stringstream ss(arg);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) out.insert(tok);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"log-modular quantum group toolkit"};
  app.require_subcommand(1);

  // rootdata
  std::string rd_type = "A1", rd_lattice = "sc", rd_out;
  long long rd_order = 4, rd_k = 1;
  auto* rd = app.add_subcommand("rootdata", "emit Cartan/lattice data as JSON");
  rd->add_option("--type", rd_type, "Cartan type, e.g. A1, B3")->required();
  rd->add_option("--lattice", rd_lattice, "sc | adjoint | JSON basis columns");
  rd->add_option("--order", rd_order, "order of q")->required();
  rd->add_option("--k", rd_k, "primitive root index");
  rd->add_option("--out", rd_out, "output path (default stdout)");

  // admissibility-table
  std::string at_families = "A,B,C,D,E,F,G", at_orders = "4,6,8,12", at_format = "json", at_out;
  int at_max_rank = 4;
  long long at_k = 1;
  bool at_intermediates = false;
  auto* at = app.add_subcommand("admissibility-table", "lattice admissibility classification");
  at->add_option("--families", at_families, "comma list of families");
  at->add_option("--max-rank", at_max_rank, "largest rank per family");
  at->add_option("--orders", at_orders, "comma list of even orders");
  at->add_option("--k", at_k, "primitive root index");
  at->add_flag("--intermediates", at_intermediates, "include all intermediate lattices");
  at->add_option("--format", at_format, "json | text");
  at->add_option("--out", at_out, "output path");

  // recover-degree
  std::string rdeg_in, rdeg_out;
  auto* rdeg = app.add_subcommand("recover-degree", "recover a weight from torus eigendata");
  rdeg->add_option("input", rdeg_in, "eigendata JSON file")->required();
  rdeg->add_option("--out", rdeg_out, "output path");

  // build
  std::string b_type = "A1", b_lattice = "sc", b_out = "alg.json";
  long long b_order = 4, b_k = 1;
  uint64_t b_seed = 0;
  auto* bd = app.add_subcommand("build", "build the finite algebra and write alg.json");
  bd->add_option("--type", b_type, "Cartan type (rank one)")->required();
  bd->add_option("--order", b_order, "order of q")->required();
  bd->add_option("--lattice", b_lattice, "sc | adjoint");
  bd->add_option("--k", b_k, "primitive root index");
  bd->add_option("--section-seed", b_seed, "section perturbation seed");
  bd->add_option("--out", b_out, "output path");

  // verify
  std::string v_in, v_suites = "all", v_format = "text", v_out;
  bool v_timings = false;
  auto* vf = app.add_subcommand("verify", "run verification suites against alg.json");
  vf->add_option("input", v_in, "alg.json")->required();
  vf->add_option("--suite", v_suites, "comma list or 'all'");
  vf->add_option("--format", v_format, "json | text");
  vf->add_flag("--timings", v_timings, "include wall-clock timing in the JSON report");
  vf->add_option("--out", v_out, "output path");

  // simples
  std::string s_in, s_out;
  auto* sp = app.add_subcommand("simples", "dimensions, twists and transparency of simples");
  sp->add_option("input", s_in, "alg.json")->required();
  sp->add_option("--out", s_out, "output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (rd->parsed()) {
      Json j = rootdata_json(rd_type, rd_lattice, rd_order, rd_k);
      write_output(rd_out, j.dump(2));
      return kExitOk;
    }
    if (at->parsed()) {
      std::vector<std::string> fams;
      std::stringstream ss(at_families);
      std::string tok;
      while (std::getline(ss, tok, ',')) fams.push_back(tok);
      std::vector<long long> orders;
      std::stringstream so(at_orders);
      while (std::getline(so, tok, ',')) orders.push_back(std::stoll(tok));
      Json j = admissibility_table_json(fams, at_max_rank, orders, at_k, at_intermediates);
      write_output(at_out, at_format == "text" ? render_admissibility_text(j) : j.dump(2));
      return kExitOk;
    }
    if (rdeg->parsed()) {
      Json j = recover_degree_json(load_json(rdeg_in));
      write_output(rdeg_out, j.dump(2));
      return kExitOk;
    }
    if (bd->parsed()) {
      UmqAlgebra u = build_algebra(b_type, b_order, b_lattice, b_k, b_seed);
      write_output(b_out, u.to_json().dump());
      return kExitOk;
    }
    if (vf->parsed()) {
      UmqAlgebra u = UmqAlgebra::from_json(load_json(v_in));
      Report rep = run_suites(u, parse_suites(v_suites));
      write_output(v_out,
                   v_format == "json" ? rep.to_json(v_timings).dump(2) : rep.to_text());
      return rep.all_passed() ? kExitOk : kExitCheckFailed;
    }
    if (sp->parsed()) {
      UmqAlgebra u = UmqAlgebra::from_json(load_json(s_in));
      write_output(s_out, simples_json(u).dump(2));
      return kExitOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConsistencyError& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
