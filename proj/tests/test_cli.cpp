#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "test_util.hpp"
#include "vne/cli.hpp"
#include "vne/io.hpp"
#include "vne/reductions.hpp"

using namespace vne;
using namespace vnetest;

namespace {

struct CliRun {
  int exit_code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

CliRun cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_json(const std::string& name, const Json& j) {
  auto path = (std::filesystem::temp_directory_path() / name).string();
  write_file(path, dump_canonical(j));
  return path;
}

}  // namespace

TEST_CASE("solve picks the dispatched solver and exit codes") {
  auto star = temp_json("cli_star.json",
                        to_json(Instance(gen::star_vn({2, 1, 3}), uniform_star_pn(4),
                                         Variant::kWvne)));
  auto run = cli({"solve", star});
  CHECK(run.exit_code == kExitOk);
  CHECK(run.json()["solver"] == "star-vn");
  CHECK(run.json()["status"] == "optimal");

  auto infeasible = temp_json(
      "cli_infeasible.json",
      to_json(Instance(gen::uniform_line_vn(3), uniform_line_pn(3, 0), Variant::kWcvne)));
  CHECK(cli({"solve", infeasible}).exit_code == kExitInfeasible);

  // Open cell beyond the oracle budget: exit 3 with a pointed message.
  VirtualNetwork two_star(20, [] {
    std::vector<VnEdge> edges;
    int next = 1;
    for (int g = 0; g < 4; ++g) {
      int head = next++;
      edges.push_back({0, head, 2});
      for (int l = 0; l < 3; ++l) edges.push_back({head, next++, 1});
    }
    while (next < 20) edges.push_back({0, next++, 1});  // bare leaves: unequal groups
    return edges;
  }());
  auto open_cell = temp_json("cli_open.json",
                             to_json(Instance(two_star, uniform_line_pn(20), Variant::kWvne)));
  auto open_run = cli({"solve", open_cell});
  CHECK(open_run.exit_code == kExitBeyondBudget);
  CHECK(open_run.err.find("open/np-hard cell, oracle budget exceeded") != std::string::npos);

  CHECK(cli({"solve", "/nonexistent.json"}).exit_code == kExitUsage);
  auto garbage = (std::filesystem::temp_directory_path() / "cli_garbage.json").string();
  write_file(garbage, "{not json");
  CHECK(cli({"solve", garbage}).exit_code == kExitUsage);
}

TEST_CASE("explicit solver selection and oracle budgets") {
  auto line = temp_json("cli_line.json", to_json(Instance(gen::uniform_line_vn(4),
                                                          uniform_line_pn(4), Variant::kWvne)));
  auto run = cli({"solve", line, "--solver", "line-tree"});
  CHECK(run.exit_code == kExitOk);
  CHECK(run.json()["cost"] == 3);

  auto big = temp_json("cli_big.json", to_json(Instance(gen::uniform_line_vn(10),
                                                        uniform_line_pn(10), Variant::kWvne)));
  CHECK(cli({"solve", big, "--solver", "brute"}).exit_code == kExitBeyondBudget);
  auto widened = cli({"solve", big, "--solver", "brute", "--max-n", "10"});
  CHECK(widened.exit_code == kExitOk);
  CHECK(widened.json()["cost"] == 9);

  // Wrong solver for the topology: usage error.
  CHECK(cli({"solve", line, "--solver", "star-vn"}).exit_code == kExitUsage);
}

TEST_CASE("reduce, witness, extract, verify pipeline") {
  auto source = temp_json("cli_bpp.json",
                          to_json(SourceProblem{BppSource{{2, 2}, 2, 2}}));
  auto reduced = cli({"reduce", "--kind", "bpp-line-line", source});
  REQUIRE(reduced.exit_code == kExitOk);
  auto artifact_path = temp_json("cli_artifact.json", reduced.json());

  auto theta = reduced.json()["theta"];
  CHECK(theta == 0);

  auto cert = temp_json("cli_cert.json", to_json(Certificate{BppCertificate{{0, 1}}}));
  auto witness = cli({"witness", artifact_path, cert});
  REQUIRE(witness.exit_code == kExitOk);
  auto witness_path = temp_json("cli_witness.json", witness.json());

  auto verify = cli({"verify", "--instance", artifact_path, "--embedding", witness_path});
  CHECK(verify.exit_code == kExitOk);
  CHECK(verify.json()["valid"] == true);
  CHECK(verify.json()["cost"] == 0);

  auto extracted = cli({"extract", artifact_path, witness_path});
  REQUIRE(extracted.exit_code == kExitOk);
  auto cert_path = temp_json("cli_cert_back.json", extracted.json());
  auto check = cli({"verify", "--source", source, "--certificate", cert_path});
  CHECK(check.exit_code == kExitOk);
  CHECK(check.json()["valid"] == true);

  // A wrong certificate verifies false with exit 2.
  auto bad_cert = temp_json("cli_bad_cert.json", to_json(Certificate{BppCertificate{{0, 0}}}));
  CHECK(cli({"verify", "--source", source, "--certificate", bad_cert}).exit_code ==
        kExitInfeasible);
}

TEST_CASE("classify and matrix emit machine-readable output") {
  auto star = temp_json("cli_classify.json",
                        to_json(Instance(gen::star_vn({1, 1, 1}), uniform_star_pn(4),
                                         Variant::kWcvne)));
  auto classified = cli({"classify", star});
  CHECK(classified.exit_code == kExitOk);
  CHECK(classified.json()["vn"]["kind"] == "star");
  CHECK(classified.json()["pn"]["kind"] == "star");
  CHECK(classified.json()["dispatch"] == "star-pn");

  auto matrix = cli({"matrix", "--json"});
  CHECK(matrix.exit_code == kExitOk);
  auto j = matrix.json();
  CHECK(j["wvne"]["cells"].size() == 6);
  CHECK(j["wvne"]["cells"][0].size() == 6);
  CHECK(j["cvne_wcvne"]["cells"][0].size() == 4);
  int open_cells = 0;
  for (const auto& row : j["wvne"]["cells"])
    for (const auto& cell : row) open_cells += cell["status"] == "open";
  CHECK(open_cells == 1);
}

TEST_CASE("json round trip through the CLI surfaces") {
  // parse -> serialize -> parse is the identity for instances.
  gen::Rng rng(71);
  auto inst = Instance(gen::random_connected_vn(rng, 5, 4),
                       gen::random_connected_pn(rng, 5, 4, 9), Variant::kWcvne, Cost{11});
  auto j = to_json(inst);
  CHECK(to_json(instance_from_json(j)) == j);
}
