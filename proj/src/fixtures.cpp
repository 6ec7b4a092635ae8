#include "vne/fixtures.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "vne/reductions.hpp"

namespace vne {

namespace {

Fixture make_fixture(const std::string& name, const ReductionArtifact& artifact,
                     const Certificate& certificate, Json expected, Json meta_extra) {
  Fixture f;
  f.name = name;
  f.artifact = to_json(artifact);
  f.witness = to_json(build_witness(artifact, certificate));
  f.meta = std::move(meta_extra);
  f.meta["name"] = name;
  f.meta["reduction"] = artifact.reduction;
  f.meta["expected"] = std::move(expected);
  return f;
}

}  // namespace

std::vector<Fixture> figure_fixtures() {
  ReduceOptions unsafe;
  unsafe.allow_below_threshold = true;
  std::vector<Fixture> out;

  {
    auto artifact = reduce_bpp_line_on_line({{5, 3, 1}, 5, 2});
    out.push_back(make_fixture(
        "fig1", artifact, Certificate{BppCertificate{{0, 1, 1}}},
        Json{{"theta", 0}, {"meets_theta", true}},
        Json{{"basis", "reference-figure"},
             {"notes", "items 5|3,1 split over the two zero-cost segments"}}));
  }
  {
    auto artifact = reduce_bpp_line_on_uniform_tree({{2, 3}, 3, 2});
    out.push_back(make_fixture(
        "fig2", artifact, Certificate{BppCertificate{{0, 1}}},
        Json{{"theta", 9}, {"meets_theta", true}},
        Json{{"basis", "reference-figure"},
             {"notes", "long chain over two legs and the root; items on the other legs"}}));
  }
  {
    auto artifact = reduce_3pp_star_on_2star({{5, 3, 4, 2, 1, 1}}, unsafe);
    out.push_back(make_fixture(
        "fig3", artifact, Certificate{ThreePpCertificate{{{0, 3, 4}, {1, 2, 5}}}},
        Json{{"feasible", true}, {"triple_sum", 8}},
        Json{{"basis", "reference-figure"},
             {"notes", "groups {5,2,1} and {4,3,1}; every capacity equals 8"}}));
  }
  {
    auto artifact = reduce_pp_star_on_line({{5, 3, 2}});
    out.push_back(make_fixture(
        "fig4", artifact, Certificate{PpCertificate{{1, 2}}},
        Json{{"feasible", true}, {"loads", Json::array({3, 5, 5})}},
        Json{{"basis", "reference-figure"},
             {"notes", "hub at position 2; loads 3/5, 5/5, 5/5 left to right"}}));
  }
  {
    ThreeDmSource source{2, {{0, 0, 0}, {0, 1, 0}, {0, 1, 1}, {1, 1, 1}}};
    auto artifact = reduce_3dm_oversub_2star(source, unsafe);
    out.push_back(make_fixture(
        "fig5", artifact, Certificate{ThreeDmCertificate{{0, 3}}},
        Json{{"feasible", true}},
        Json{{"basis", "reference-figure"},
             {"notes",
              "4 hyperedges over 6 vertices, max degree 3, group size 6, 6 fillers; "
              "matching {t0, t3}"}}));
  }
  return out;
}

int write_fixtures(const std::string& root) {
  namespace fs = std::filesystem;
  int files = 0;
  for (const auto& fixture : figure_fixtures()) {
    fs::path dir = fs::path(root) / fixture.name;
    fs::create_directories(dir);
    write_file((dir / "instance.json").string(), dump_canonical(fixture.artifact));
    write_file((dir / "witness.json").string(), dump_canonical(fixture.witness));
    write_file((dir / "meta.json").string(), dump_canonical(fixture.meta));
    files += 3;
  }
  return files;
}

namespace {

bool file_matches(const std::string& path, const std::string& expected,
                  std::vector<std::string>& bad) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    bad.push_back(path + " (missing)");
    return false;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  if (buf.str() != expected) {
    bad.push_back(path + " (differs)");
    return false;
  }
  return true;
}

}  // namespace

std::vector<std::string> check_fixtures(const std::string& root) {
  namespace fs = std::filesystem;
  std::vector<std::string> bad;
  for (const auto& fixture : figure_fixtures()) {
    fs::path dir = fs::path(root) / fixture.name;
    file_matches((dir / "instance.json").string(), dump_canonical(fixture.artifact), bad);
    file_matches((dir / "witness.json").string(), dump_canonical(fixture.witness), bad);
    file_matches((dir / "meta.json").string(), dump_canonical(fixture.meta), bad);
  }
  return bad;
}

}  // namespace vne
