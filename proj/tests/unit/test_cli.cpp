#include <filesystem>
#include <fstream>
#include <sstream>

#include "check.hpp"
#include "dzeta/cli.hpp"

using namespace dzeta;
using namespace dzeta::cli;

namespace {

int run_args(std::vector<std::string> args) {
  args.insert(args.begin(), "dzeta");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  return run(static_cast<int>(argv.size()), argv.data());
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path tmp(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("dzeta_test_" + name);
}

}  // namespace

TEST_CASE("complex literals") {
  CHECK(parse_complex("2") == Complex(2.0, 0.0));
  CHECK(parse_complex("-1.5+0.3i") == Complex(-1.5, 0.3));
  CHECK(parse_complex("0.3i") == Complex(0.0, 0.3));
  CHECK(parse_complex("i") == Complex(0.0, 1.0));
  CHECK(parse_complex("-i") == Complex(0.0, -1.0));
  CHECK(parse_complex("1e-3-2e-1i") == Complex(1e-3, -0.2));
  CHECK(parse_complex("1.5, -2") == Complex(1.5, -2.0));
  CHECK_THROWS(parse_complex("abc"));
  CHECK_THROWS(parse_complex("1+2j"));
  CHECK_THROWS(parse_complex(""));
}

TEST_CASE("sequence specs") {
  CHECK(parse_sequence("const").kind() == SequenceKind::constant);
  CHECK(parse_sequence("exp:0.3").beta() == 0.3);
  CHECK(parse_sequence("delta:5").delta_index() == 5);
  CHECK(parse_sequence("char:4:1").kind() == SequenceKind::character);
  CHECK(parse_sequence("periodic:1,0,-1,0").period() == 4);
  CHECK(parse_sequence("delta-form").kind() == SequenceKind::cusp_form);
  CHECK_THROWS(parse_sequence("delta:2.5"));
  CHECK_THROWS(parse_sequence("nosuch"));
  CHECK(parse_table("char:4:1").size() == 4);
}

TEST_CASE("gen-coeffs tau writes the table") {
  const auto out = tmp("tau.json");
  REQUIRE(run_args({"gen-coeffs", "tau", "--max", "5", "--out", out.string()}) == 0);
  const auto j = json::parse(slurp(out));
  CHECK(j["schema"] == kSchema);
  CHECK(j["values"] == json::array({1, -24, 252, -1472, 4830}));
}

TEST_CASE("gen-coeffs fourier round-trips") {
  const auto out = tmp("fourier.json");
  REQUIRE(run_args({"gen-coeffs", "fourier", "--seq", "1,0,-1,0", "--out", out.string()}) == 0);
  const auto j = json::parse(slurp(out));
  CHECK(j["roundtrip_ok"] == true);
  // hat a(1) = (1/4)(e^{-i pi/2} - e^{-3 i pi/2}) = -i/2
  CHECK(std::abs(complex_from_json(j["values"][0]) - Complex(0.0, -0.5)) < 1e-15);
}

TEST_CASE("eval reports values as [re, im] pairs") {
  const auto out = tmp("eval.json");
  REQUIRE(run_args({"eval", "L2", "--s1", "2", "--s2", "2", "--out", out.string()}) == 0);
  const auto j = json::parse(slurp(out));
  REQUIRE(j["value"].is_array());
  CHECK(std::abs(complex_from_json(j["value"]) - 0.8117424252833536) < 1e-10);
}

TEST_CASE("verify output is byte-identical across runs and thread counts") {
  const auto a = tmp("det_a.json"), b = tmp("det_b.json");
  const std::vector<std::string> base{"verify", "T3", "--k", "1", "--grid", "sigma1=0.2:0.6:0.2;t1=-1:1:1",
                                      "--omega2", "1.5", "--tol", "1e-7"};
  setenv("DZETA_THREADS", "1", 1);
  auto args = base;
  args.insert(args.end(), {"--out", a.string()});
  REQUIRE(run_args(args) == 0);
  setenv("DZETA_THREADS", "4", 1);
  args = base;
  args.insert(args.end(), {"--out", b.string()});
  REQUIRE(run_args(args) == 0);
  unsetenv("DZETA_THREADS");
  CHECK(slurp(a) == slurp(b));
  const auto j = json::parse(slurp(a));
  CHECK(j["reports"].size() == 9);
  CHECK(j["summary"]["pass"] == 9);
}

TEST_CASE("exit codes") {
  CHECK(run_args({"verify", "T5", "--s1", "5", "--s2", "0.1"}) == 2);
  CHECK(run_args({"verify", "T5", "--s1", "abc", "--s2", "0.1"}) == 1);
  CHECK(run_args({"eval", "nosuch"}) == 1);
  CHECK(run_args({"verify", "T5", "--tol", "0.5"}) == 1);
  CHECK(run_args({"verify", "T5", "--grid", "sigma1=0:1000:0.01"}) == 1);
  CHECK(run_args({"--help"}) == 0);
}

TEST_CASE("config file supplies the run") {
  const auto cfg = tmp("config.json"), out = tmp("config_out.json");
  std::ofstream(cfg) << R"({"command": "eval", "id": "zeta", "s": "2"})";
  REQUIRE(run_args({"--config", cfg.string(), "--out", out.string()}) == 0);
  const auto j = json::parse(slurp(out));
  CHECK(std::abs(complex_from_json(j["value"]) - kPi * kPi / 6.0) < 1e-14);
}

TEST_CASE("suite files load with defaults and expectations") {
  const auto s = load_suite(suite_dir() / "refusals.json");
  REQUIRE_FALSE(s.cases.empty());
  for (const auto& c : s.cases) CHECK(c.expect_refusal);
}
