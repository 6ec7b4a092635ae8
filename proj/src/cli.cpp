#include "vne/cli.hpp"

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "vne/dispatch.hpp"
#include "vne/fixtures.hpp"
#include "vne/io.hpp"
#include "vne/oracle.hpp"
#include "vne/selftest.hpp"
#include "vne/solvers.hpp"
#include "vne/topology.hpp"

namespace vne {

namespace {

OracleConfig oracle_config_from(int max_n, std::int64_t path_budget) {
  OracleConfig config;
  config.max_n = max_n;
  config.path_budget = path_budget;
  if (config.max_n == 0) {
    if (const char* env = std::getenv("VNE_ORACLE_MAX_N")) config.max_n = std::atoi(env);
  }
  if (const char* env = std::getenv("VNE_ORACLE_PATH_BUDGET")) {
    if (path_budget == OracleConfig{}.path_budget) config.path_budget = std::atoll(env);
  }
  return config;
}

SolveResult run_oracle(const Instance& instance, const OracleConfig& config) {
  return instance.variant() == Variant::kWvne ? oracle_wvne(instance, config)
                                              : oracle_wcvne(instance, config);
}

SolveResult run_named_solver(const std::string& name, const Instance& instance,
                             const OracleConfig& config) {
  if (name == "brute") return run_oracle(instance, config);
  if (name == "star-vn") return solve_star_vn_wvne(instance);
  if (name == "star-pn") return solve_on_star_pn_wcvne(instance);
  if (name == "line-tree") return solve_uniform_line_on_tree_wcvne(instance);
  if (name == "oversub-tree") return solve_oversub_2star_on_tree_wcvne(instance);
  if (name == "line-identity") return solve_line_on_uniform_line_wvne(instance);
  throw std::invalid_argument("unknown solver: " + name);
}

Json topology_json(const TopologyClass& cls) {
  Json j;
  j["kind"] = to_string(cls.kind);
  j["uniform"] = cls.is_uniform;
  if (cls.kind == TopologyKind::kOversubTwoStar) {
    j["group_size"] = cls.group_size;
    j["oversubscription"] = cls.oversubscription;
    j["groups"] = cls.group_count;
  }
  return j;
}

int cmd_classify(const std::string& file, std::ostream& out) {
  Instance instance = instance_from_json(load_json_file(file));
  Json j;
  j["vn"] = topology_json(classify_topology(instance.vn()));
  j["pn"] = topology_json(classify_topology(instance.pn()));
  j["dispatch"] = dispatch(instance).label();
  out << dump_canonical(j);
  return kExitOk;
}

int emit_result(const Instance& instance, const SolveResult& result, const std::string& solver,
                std::ostream& out) {
  Json j;
  j["solver"] = solver;
  if (result.feasible()) {
    j["status"] = "optimal";
    j["cost"] = result.cost;
    j["embedding"] = to_json(*result.witness);
    if (instance.theta()) j["theta_met"] = decide_theta(instance, result);
    out << dump_canonical(j);
    return kExitOk;
  }
  j["status"] = "infeasible";
  out << dump_canonical(j);
  return kExitInfeasible;
}

int cmd_solve(const std::string& file, std::string solver, int max_n, std::int64_t path_budget,
              std::ostream& out, std::ostream& err) {
  Instance instance = instance_from_json(load_json_file(file));
  OracleConfig config = oracle_config_from(max_n, path_budget);

  if (solver != "auto") {
    auto result = run_named_solver(solver, instance, config);
    return emit_result(instance, result, solver == "brute" ? "brute" : solver, out);
  }

  auto decision = dispatch(instance);
  if (decision.status == CellStatus::kPoly && decision.solver != "uniform-star-external") {
    auto result = run_named_solver(decision.solver, instance, config);
    return emit_result(instance, result, decision.solver, out);
  }
  // Hard, open, or externally-polynomial cells fall back to the oracle.
  try {
    auto result = run_oracle(instance, config);
    return emit_result(instance, result, "brute", out);
  } catch (const BudgetError& e) {
    if (decision.status == CellStatus::kPoly)
      err << "polynomial cell (" << decision.solver
          << ") without an in-tree algorithm; oracle budget exceeded: " << e.what() << "\n";
    else
      err << "open/np-hard cell, oracle budget exceeded: " << e.what() << "\n";
    return kExitBeyondBudget;
  }
}

int cmd_reduce(const std::string& kind, const std::string& file, bool unsafe, bool to_cvne,
               std::ostream& out) {
  ReduceOptions options;
  options.allow_below_threshold = unsafe;
  auto artifact = reduce(kind, source_from_json(load_json_file(file)), options);
  if (to_cvne) artifact = transform_wvne0_to_cvne(artifact);
  out << dump_canonical(to_json(artifact));
  return kExitOk;
}

int cmd_witness(const std::string& artifact_file, const std::string& certificate_file,
                std::ostream& out) {
  auto artifact = artifact_from_json(load_json_file(artifact_file));
  auto certificate = certificate_from_json(load_json_file(certificate_file));
  out << dump_canonical(to_json(build_witness(artifact, certificate)));
  return kExitOk;
}

int cmd_extract(const std::string& artifact_file, const std::string& embedding_file,
                std::ostream& out) {
  auto artifact = artifact_from_json(load_json_file(artifact_file));
  auto embedding = embedding_from_json(load_json_file(embedding_file));
  out << dump_canonical(to_json(extract_certificate(artifact, embedding)));
  return kExitOk;
}

int cmd_verify_instance(const std::string& instance_file, const std::string& embedding_file,
                        std::ostream& out) {
  Instance instance = instance_from_json(load_json_file(instance_file));
  Embedding embedding = embedding_from_json(load_json_file(embedding_file));
  auto report = validate_embedding(instance, embedding);
  Json j;
  j["valid"] = report.ok();
  Json violations = Json::array();
  for (const auto& v : report.violations) violations.push_back(v.code + ": " + v.detail);
  j["violations"] = violations;
  bool all_ok = report.ok();
  if (report.ok()) {
    j["cost"] = embedding_cost(instance, embedding);
    Json loads = Json::object();
    for (const auto& [key, load] : edge_loads(instance, embedding))
      loads[std::to_string(key.first) + "-" + std::to_string(key.second)] = load;
    j["loads"] = loads;
    if (instance.capacities_apply()) {
      bool caps = check_capacities(instance, embedding);
      j["capacities_ok"] = caps;
      all_ok &= caps;
    }
    if (instance.theta()) {
      bool met = embedding_cost(instance, embedding) <= *instance.theta() &&
                 instance.variant() != Variant::kCvne;
      if (instance.variant() == Variant::kCvne) met = true;
      j["theta_met"] = met;
      all_ok &= met;
    }
  }
  out << dump_canonical(j);
  return all_ok ? kExitOk : kExitInfeasible;
}

int cmd_verify_source(const std::string& source_file, const std::string& certificate_file,
                      std::ostream& out) {
  auto source = source_from_json(load_json_file(source_file));
  auto certificate = certificate_from_json(load_json_file(certificate_file));
  bool ok = verify_source(source, certificate);
  out << dump_canonical(Json{{"valid", ok}});
  return ok ? kExitOk : kExitInfeasible;
}

std::string cell_text(const MatrixCell& cell) {
  switch (cell.status) {
    case CellStatus::kPoly: return "P: " + cell.solver;
    case CellStatus::kNpHard: return "NP-complete";
    case CellStatus::kOpen: return "open";
  }
  return "?";
}

Json matrix_json(const ComplexityMatrix& m) {
  Json rows = Json::array();
  for (size_t r = 0; r < m.cells.size(); ++r) {
    Json row = Json::array();
    for (const auto& cell : m.cells[r]) {
      Json c;
      c["status"] = cell.status == CellStatus::kPoly
                        ? "P"
                        : (cell.status == CellStatus::kOpen ? "open" : "NP-complete");
      if (cell.status == CellStatus::kPoly) c["solver"] = cell.solver;
      row.push_back(c);
    }
    rows.push_back(row);
  }
  return Json{{"title", m.title}, {"rows", m.row_names}, {"columns", m.col_names},
              {"cells", rows}};
}

void print_matrix(const ComplexityMatrix& m, std::ostream& out) {
  size_t width = 0;
  for (const auto& row : m.cells)
    for (const auto& cell : row) width = std::max(width, cell_text(cell).size());
  for (const auto& name : m.col_names) width = std::max(width, name.size());
  size_t head = 0;
  for (const auto& name : m.row_names) head = std::max(head, name.size());

  out << m.title << "\n";
  out << std::left << std::setw(static_cast<int>(head) + 2) << "VN \\ PN";
  for (const auto& name : m.col_names)
    out << std::setw(static_cast<int>(width) + 2) << name;
  out << "\n";
  for (size_t r = 0; r < m.cells.size(); ++r) {
    out << std::setw(static_cast<int>(head) + 2) << m.row_names[r];
    for (const auto& cell : m.cells[r])
      out << std::setw(static_cast<int>(width) + 2) << cell_text(cell);
    out << "\n";
  }
}

int cmd_matrix(bool as_json, std::ostream& out) {
  if (as_json) {
    out << dump_canonical(
        Json{{"wvne", matrix_json(wvne_matrix())}, {"cvne_wcvne", matrix_json(cvne_wcvne_matrix())}});
    return kExitOk;
  }
  print_matrix(wvne_matrix(), out);
  out << "\n";
  print_matrix(cvne_wcvne_matrix(), out);
  return kExitOk;
}

int cmd_selftest(const std::string& budget, std::uint64_t seed, const std::string& fixtures_dir,
                 std::ostream& out, std::ostream& err) {
  SuiteOptions options = budget == "small" ? small_suite_options() : SuiteOptions{};
  options.seed = seed;
  options.fixtures_dir = fixtures_dir;
  auto results = run_suites(options, &err);
  int total = 0, failed = 0, skipped = 0;
  for (const auto& r : results) {
    total += r.checked;
    failed += r.failed;
    skipped += r.skipped;
    out << (r.ok() ? "ok   " : "FAIL ") << r.name << ": " << r.checked << " checked, "
        << r.failed << " failed, " << r.skipped << " skipped\n";
    for (const auto& message : r.failures) out << "     " << message << "\n";
  }
  out << (failed == 0 ? "PASS" : "FAIL") << " " << results.size() << " suites, " << total
      << " checks, " << failed << " failures, " << skipped << " skipped\n";
  return failed == 0 ? kExitOk : kExitInfeasible;
}

int cmd_fixtures(const std::string& dir, bool check, std::ostream& out, std::ostream& err) {
  if (check) {
    auto bad = check_fixtures(dir);
    if (bad.empty()) {
      out << "fixtures match\n";
      return kExitOk;
    }
    for (const auto& path : bad) err << "drift: " << path << "\n";
    return kExitInfeasible;
  }
  int files = write_fixtures(dir);
  out << "wrote " << files << " files under " << dir << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"virtual network embedding workbench"};
  app.require_subcommand(1);

  std::string file, solver = "auto", kind, second_file;
  int max_n = 0;
  std::int64_t path_budget = OracleConfig{}.path_budget;
  bool unsafe = false, to_cvne = false, as_json = false, check = false;
  std::string budget = "small", fixtures_dir = "fixtures";
  std::uint64_t seed = SuiteOptions{}.seed;
  std::string instance_file, embedding_file, source_file, certificate_file;

  auto* classify = app.add_subcommand("classify", "topology classes and dispatch cell");
  classify->add_option("instance", file)->required();

  auto* solve = app.add_subcommand("solve", "solve an instance");
  solve->add_option("instance", file)->required();
  solve->add_option("--solver", solver)
      ->check(CLI::IsMember({"auto", "brute", "star-vn", "star-pn", "line-tree",
                             "oversub-tree"}));
  solve->add_option("--max-n", max_n, "oracle node budget override");
  solve->add_option("--path-budget", path_budget, "oracle simple-path budget per pair");

  auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive solve");
  oracle_cmd->add_option("instance", file)->required();
  oracle_cmd->add_option("--max-n", max_n);
  oracle_cmd->add_option("--path-budget", path_budget);

  auto* reduce_cmd = app.add_subcommand("reduce", "generate a hardness gadget");
  reduce_cmd->add_option("--kind", kind)->required()->check(CLI::IsMember(reduction_kinds()));
  reduce_cmd->add_option("source", file)->required();
  reduce_cmd->add_flag("--unsafe", unsafe, "emit below-threshold gadgets");
  reduce_cmd->add_flag("--to-cvne", to_cvne, "apply the zero-cost capacity transform");

  auto* witness_cmd = app.add_subcommand("witness", "build the forward-direction embedding");
  witness_cmd->add_option("artifact", file)->required();
  witness_cmd->add_option("certificate", second_file)->required();

  auto* extract_cmd = app.add_subcommand("extract", "read a certificate off an embedding");
  extract_cmd->add_option("artifact", file)->required();
  extract_cmd->add_option("embedding", second_file)->required();

  auto* verify_cmd = app.add_subcommand("verify", "check an embedding or a certificate");
  verify_cmd->add_option("--instance", instance_file);
  verify_cmd->add_option("--embedding", embedding_file);
  verify_cmd->add_option("--source", source_file);
  verify_cmd->add_option("--certificate", certificate_file);

  auto* matrix_cmd = app.add_subcommand("matrix", "print the complexity tables");
  matrix_cmd->add_flag("--json", as_json);

  auto* selftest_cmd = app.add_subcommand("selftest", "run the verification suites");
  selftest_cmd->add_option("--budget", budget)->check(CLI::IsMember({"small", "full"}));
  selftest_cmd->add_option("--seed", seed);
  selftest_cmd->add_option("--fixtures", fixtures_dir);

  auto* fixtures_cmd = app.add_subcommand("fixtures", "regenerate or check figure fixtures");
  fixtures_cmd->add_option("--dir", fixtures_dir);
  fixtures_cmd->add_flag("--check", check);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (classify->parsed()) return cmd_classify(file, out);
    if (solve->parsed()) return cmd_solve(file, solver, max_n, path_budget, out, err);
    if (oracle_cmd->parsed()) return cmd_solve(file, "brute", max_n, path_budget, out, err);
    if (reduce_cmd->parsed()) return cmd_reduce(kind, file, unsafe, to_cvne, out);
    if (witness_cmd->parsed()) return cmd_witness(file, second_file, out);
    if (extract_cmd->parsed()) return cmd_extract(file, second_file, out);
    if (verify_cmd->parsed()) {
      if (!instance_file.empty() && !embedding_file.empty())
        return cmd_verify_instance(instance_file, embedding_file, out);
      if (!source_file.empty() && !certificate_file.empty())
        return cmd_verify_source(source_file, certificate_file, out);
      err << "verify needs --instance with --embedding, or --source with --certificate\n";
      return kExitUsage;
    }
    if (matrix_cmd->parsed()) return cmd_matrix(as_json, out);
    if (selftest_cmd->parsed()) return cmd_selftest(budget, seed, fixtures_dir, out, err);
    if (fixtures_cmd->parsed()) return cmd_fixtures(fixtures_dir, check, out, err);
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BudgetError& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kExitBeyondBudget;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << "no subcommand\n";
  return kExitUsage;
}

}  // namespace vne
