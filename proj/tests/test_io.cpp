#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <functional>
#include <fstream>

#include "orbicoh/error.hpp"
#include "orbicoh/io.hpp"

using namespace orbicoh;
namespace fs = std::filesystem;

namespace {

std::vector<fs::path> golden_files() {
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(ORBICOH_TEST_GOLDEN_DIR))
    if (e.path().extension() == ".json") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

fs::path scratch(const std::string& name) { return fs::temp_directory_path() / ("orbicoh_test_" + name); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InternalError;
}

}  // namespace

TEST_CASE("golden resolutions replay") {
  const auto files = golden_files();
  REQUIRE(files.size() >= 5);
  for (const auto& path : files) {
    INFO(path.string());
    const GoldenResolution g = golden_from_json(read_json_file(path.string()));
    CHECK_FALSE(check_golden(g).has_value());
    ResolveOptions full;
    full.full_basis_depth = 2;
    CHECK_FALSE(check_golden(g, full).has_value());
  }
}

TEST_CASE("tampered golden files are caught") {
  const Json original = read_json_file(std::string(ORBICOH_TEST_GOLDEN_DIR) + "/klein4_cyclic_constant.json");

  Json wrong_dims = original;
  wrong_dims["ext"][3] = 4;
  CHECK(check_golden(golden_from_json(wrong_dims)).has_value());

  Json flipped = original;
  auto& map = flipped["resolution"]["degrees"][1]["map"];
  bool done = false;
  for (auto& block : map)
    for (auto& row : block)
      for (auto& x : row)
        if (!done) {
          x = x.get<int>() == 0 ? 1 : 0;
          done = true;
        }
  REQUIRE(done);
  CHECK(check_golden(golden_from_json(flipped)).has_value());

  Json future = original;
  future["schema"] = 99;
  CHECK(code_of([&] { golden_from_json(future); }) == ErrorCode::ParseError);
}

TEST_CASE("matrices") {
  const Matrix m = Matrix::from_rows({{1, 2}, {0, 1}, {2, 2}}, 3);
  CHECK(matrix_from_json(matrix_to_json(m), 3, 2, 3) == m);
  CHECK(code_of([&] { matrix_from_json(matrix_to_json(m), 2, 3, 3); }) == ErrorCode::ParseError);
  CHECK(matrix_from_json(Json::array(), 0, 4, 2).cols() == 4);
}

TEST_CASE("groups from files") {
  const Json cayley = {{"name", "c3"}, {"cayley", {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}}};
  CHECK(group_from_json(cayley).order() == 3);
  const Json perms = {{"name", "s3"}, {"points", 3}, {"generators", {{1, 0, 2}, {1, 2, 0}}}};
  CHECK(group_from_json(perms).order() == 6);
  CHECK(code_of([] { group_from_json(Json{{"name", "x"}}); }) == ErrorCode::ParseError);

  const fs::path path = scratch("group.json");
  write_json_file(path.string(), perms);
  CHECK(load_group(path.string())->order() == 6);
  CHECK(load_group("klein4")->order() == 4);
  fs::remove(path);
  CHECK(code_of([] { read_json_file("/nonexistent/orbicoh.json"); }) == ErrorCode::IoError);

  const fs::path junk = scratch("junk.json");
  std::ofstream(junk) << "{ not json";
  CHECK(code_of([&] { read_json_file(junk.string()); }) == ErrorCode::ParseError);
  fs::remove(junk);
}

TEST_CASE("representations") {
  const GroupPtr k = load_group("klein4");
  const auto gens = k->generators();
  Json j = {{"dim", 2}, {"generators", gens}, {"images", Json::array()}};
  for (std::size_t i = 0; i < gens.size(); ++i) j["images"].push_back({{0, 1}, {1, 0}});
  const GGRep r = rep_from_json(j, k, 2);
  CHECK(r.dim == 2);
  CHECK_FALSE(check_rep(r).has_value());
  // an image that is not invertible breaks the homomorphism property
  j["images"][0] = {{1, 1}, {1, 1}};
  CHECK(code_of([&] { rep_from_json(j, k, 2); }) == ErrorCode::InvalidRepresentation);

  CHECK(parse_rep("regular", k, 2).dim == 4);
  CHECK(parse_rep("perm:S1", k, 2).dim == 2);
  CHECK(parse_rep("trivial", k, 3).dim == 1);
  CHECK(code_of([&] { parse_rep("nonsense", k, 2); }) == ErrorCode::UnknownName);
}

TEST_CASE("modules") {
  const GroupPtr k = load_group("klein4");
  const CatPtr cat = orbit_category(k, "cyclic");
  CHECK(*parse_module("constant", cat, 2) == *constant_module(cat, 2));
  CHECK(parse_module("interval:S1,S0", cat, 2)->dim == std::vector<std::size_t>{1, 1, 0, 0});
  CHECK(parse_module("fixed:regular", cat, 2)->dim == std::vector<std::size_t>{4, 2, 2, 2});
  CHECK(parse_module("free:S1", cat, 2)->dim == std::vector<std::size_t>{2, 2, 0, 0});
  CHECK(parse_module("zero", cat, 2)->total_dim() == 0);

  const ModulePtr m = parse_module("fixed:perm:S2", cat, 3);
  CHECK(*module_from_json(module_to_json(*m), cat, 3) == *m);

  const fs::path path = scratch("module.json");
  write_json_file(path.string(), module_to_json(*m));
  CHECK(*parse_module("file:" + path.string(), cat, 3) == *m);
  fs::remove(path);

  Json broken = module_to_json(*m);
  broken["dims"].push_back(1);
  CHECK(code_of([&] { module_from_json(broken, cat, 3); }) == ErrorCode::InvalidModule);
  CHECK(code_of([&] { parse_module("interval:S7", cat, 2); }) == ErrorCode::UnknownSubgroupId);
}
