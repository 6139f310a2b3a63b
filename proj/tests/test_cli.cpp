#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hn/cli.hpp"
#include "hn/json_io.hpp"
#include "support/generators.hpp"

using namespace hn;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& file) { return std::string(HN_TEST_DATA_DIR) + "/" + file; }

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("hnctl-test-" + std::to_string(std::random_device{}()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string write(const std::string& name, const std::string& text) const {
    const fs::path p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

json parsed(const std::string& s) { return json::parse(s); }

}  // namespace

TEST_CASE("validate-type") {
  const Run ok = run({"validate-type", "--type", data("type_jump.json")});
  CHECK(ok.code == kExitOk);
  const json j = parsed(ok.out);
  CHECK(j["valid"] == true);
  CHECK(j["length"] == 2);
  CHECK(parse_type(j["type"]) == hn::testing::type_of({{2, 1}, {2, 2}}));

  const Run bad = run({"validate-type", "--input", data("type_equal_slopes.json")});
  CHECK(bad.code == kExitDiagnostic);
  CHECK(parsed(bad.out)["violation"] == "Condition3Violation");
  CHECK(parsed(bad.out)["index"] == 2);
  CHECK(parsed(bad.err)["error"] == "Condition3Violation");
}

TEST_CASE("compare-types and shift") {
  const Run lt = run({"compare-types", "--type", data("type_semistable_rank2.json"), "--type",
                      data("type_jump.json")});
  CHECK(lt.code == kExitOk);
  CHECK(parsed(lt.out)["result"] == "LEQ");
  const Run gt = run({"compare-types", "--type", data("type_jump.json"), "--type",
                      data("type_semistable_rank2.json")});
  CHECK(parsed(gt.out)["result"] == "GEQ");
  const Run eq = run({"compare-types", "--type", data("type_jump.json"), "--type",
                      data("type_jump.json")});
  CHECK(parsed(eq.out)["result"] == "EQ");

  const Run s = run({"shift", "--type", data("type_three_steps.json")});
  CHECK(s.code == kExitOk);
  CHECK(parse_type(parsed(s.out)["type"]) == hn::testing::type_of({{1, 1}, {1, 2}}));
  const Run undefined = run({"shift", "--type", data("type_semistable_rank2.json")});
  CHECK(undefined.code == kExitDiagnostic);
  CHECK(parsed(undefined.err)["error"] == "ShiftUndefined");
}

TEST_CASE("polygon") {
  TempDir tmp;
  const std::string svg = tmp.path("p.svg");
  const Run r = run({"polygon", "--type", data("type_jump.json"), "--at", "3", "--svg", svg});
  CHECK(r.code == kExitOk);
  const json j = parsed(r.out);
  CHECK(j["at"] == 3);
  REQUIRE(j["vertices"].size() == 3);
  CHECK(j["vertices"][1]["r"] == 1);
  CHECK(j["vertices"][1]["value"] == "5");
  CHECK(j["vertices"][2]["value"] == "8");
  std::ifstream in(svg);
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(text.find("<svg") != std::string::npos);
  CHECK(text.find("M 0 0") != std::string::npos);

  const Run dflt = run({"polygon", "--type", data("type_three_steps.json")});
  CHECK(dflt.code == kExitOk);
  CHECK(parsed(dflt.out)["at"].get<long long>() >= 0);
}

TEST_CASE("hn on splittings and lattices") {
  const Run s = run({"hn", "--input", data("splitting_2_2_0_m1.json"), "--oracle"});
  CHECK(s.code == kExitOk);
  const json j = parsed(s.out);
  CHECK(j["length"] == 3);
  CHECK(j["semistable"] == false);
  CHECK(j["filtration"]["steps"][1] == "O(2)+O(2)");
  CHECK(j["oracle"]["closed_form"] == true);
  CHECK(j["oracle"]["chain_search"]["unique_match"] == true);
  CHECK(parse_type(j["type"]) == hn::testing::type_of({{6, 2}, {7, 3}, {7, 4}}));

  const Run l = run({"hn", "--input", data("lattice_o1_om1.json"), "--oracle"});
  CHECK(l.code == kExitOk);
  CHECK(parsed(l.out)["filtration"]["steps"] == json::array({"0", "A", "E"}));

  const Run bad = run({"hn", "--input", data("lattice_not_monotone.json")});
  CHECK(bad.code == kExitDiagnostic);
  CHECK(parsed(bad.err)["error"] == "StrictMonotonicityViolation");
}

TEST_CASE("stratify and check-family") {
  const Run ok = run({"check-family", "--input", data("jump_family.json")});
  CHECK(ok.code == kExitOk);
  CHECK(parsed(ok.out)["semicontinuous"] == true);

  const Run bad = run({"check-family", "--input", data("reversed_family.json")});
  CHECK(bad.code == kExitDiagnostic);
  const json w = parsed(bad.out)["witness"];
  CHECK(w["generic"] == "generic");
  CHECK(w["special"] == "special");

  const Run st = run({"stratify", "--input", data("jump_family.json"), "--oracle", "--tau",
                      data("type_jump.json")});
  CHECK(st.code == kExitOk);
  const json j = parsed(st.out);
  REQUIRE(j["strata"].size() == 2);
  CHECK(j["strata"][1]["points"] == json::array({"special"}));
  CHECK(j["strata"][1]["at_most"] == json::array({"generic", "special"}));
  for (const auto& [key, value] : j["checks"].items()) CHECK_MESSAGE(value == true, key);
  CHECK(j["tau"]["points"] == json::array({"special"}));
  CHECK(j["tau"]["relative_hn"].is_null());

  const Run rev = run({"stratify", "--input", data("reversed_family.json")});
  CHECK(rev.code == kExitDiagnostic);
}

TEST_CASE("malformed input exits with 2") {
  TempDir tmp;
  CHECK(run({"validate-type", "--type", tmp.path("missing.json")}).code == kExitMalformed);
  CHECK(run({"validate-type", "--type", tmp.write("broken.json", "[[\"1\"")}).code ==
        kExitMalformed);
  CHECK(run({"validate-type", "--type", tmp.write("half.json", "[[\"1/2\"]]")}).code ==
        kExitMalformed);
  CHECK(run({"hn", "--input", tmp.write("weird.json", "{\"nodes\": 3}")}).code == kExitMalformed);
  CHECK(run({"no-such-command"}).code == kExitMalformed);
  CHECK(run({"compare-types", "--type", data("type_jump.json")}).code == kExitMalformed);
  const Run r = run({"hn", "--input", tmp.write("x.json", "{\"degrees\": []}")});
  CHECK(r.code == kExitMalformed);
  CHECK_FALSE(parsed(r.err)["error"].get<std::string>().empty());
}

TEST_CASE("output is deterministic and round-trips") {
  hn::testing::Rng rng(123);
  TempDir tmp;
  for (int trial = 0; trial < 10; ++trial) {
    const SplittingType s = hn::testing::random_splitting(rng, 5);
    const std::string lattice = tmp.write(
        "l" + std::to_string(trial) + ".json", to_json(lattice_from_splitting(s)).dump());
    const Run a = run({"hn", "--input", lattice, "--oracle"});
    const Run b = run({"hn", "--input", lattice, "--oracle"});
    CHECK(a.code == kExitOk);
    CHECK(a.out == b.out);
    const json j = parsed(a.out);
    CHECK(j.dump(-1, ' ', true) + "\n" == a.out);
    CHECK(parse_type(j["type"]) == hn_closed_form(s).type());

    // The lattice written by to_json parses back to the same structure.
    const SubobjectLattice back = parse_lattice(parsed(to_json(lattice_from_splitting(s)).dump()));
    CHECK(to_json(back) == to_json(lattice_from_splitting(s)));
  }
  const SheafFamily f = hn::testing::random_family(rng, 3, 6);
  const std::string fam = tmp.write("family.json", to_json(f).dump());
  const Run a = run({"stratify", "--input", fam});
  const Run b = run({"stratify", "--input", fam});
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
}
