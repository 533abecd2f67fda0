#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "bosonic/cli.hpp"
#include "bosonic/parallel.hpp"
#include "bosonic/sweep.hpp"

using namespace bosonic;

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

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "bosonic_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("occupation parsing") {
  CHECK(parse_occupation("fock:1,0,2") == Occupation({1, 0, 2}));
  CHECK(parse_occupation("fock:3") == Occupation({3}));
  CHECK_THROWS(parse_occupation("1,0,2"));
  CHECK_THROWS(parse_occupation("fock:"));
  CHECK_THROWS(parse_occupation("fock:1,-1"));
  CHECK_THROWS(parse_occupation("fock:1,,2"));
  CHECK_THROWS(parse_occupation("fock:a"));
}

TEST_CASE("p2 json") {
  const auto r = run({"p2", "--modes", "4", "--photons", "1"});
  REQUIRE(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["m"] == 4);
  CHECK(j["n"] == 1);
  CHECK(j["method"] == "closed");
  CHECK(j["p2_exact_num"] == "8");
  CHECK(j["p2_exact_den"] == "5");
  CHECK(j["p2"] == "1.6");
  for (const char* key : {"regime", "asymptote", "pz_bound_half"}) CHECK(j.contains(key));
}

TEST_CASE("p2 degenerate and cross-method") {
  const auto d = nlohmann::json::parse(run({"p2", "--modes", "1", "--photons", "5"}).out);
  CHECK(d["regime"] == "degenerate");
  CHECK(d["p2_exact_num"] == "1");
  CHECK(d["p2_exact_den"] == "1");

  const auto c = nlohmann::json::parse(run({"p2", "--modes", "6", "--photons", "3"}).out);
  const auto i = nlohmann::json::parse(run({"p2", "--modes", "6", "--photons", "3", "--method", "integral"}).out);
  CHECK_FALSE(i.contains("p2_exact_num"));
  const double pc = std::stod(c["p2"].get<std::string>());
  CHECK(std::abs(std::stod(i["p2"].get<std::string>()) - pc) <= 1e-9 * pc);

  const auto mc = nlohmann::json::parse(
      run({"p2", "--modes", "3", "--photons", "2", "--method", "mc", "--samples", "2000", "--seed", "3"}).out);
  CHECK(mc["method"] == "mc");
  CHECK(mc.contains("p2_std_error"));
  CHECK(run({"p2", "--modes", "3", "--photons", "2", "--format", "csv"}).out.rfind("m,n,method,p2", 0) == 0);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({"p2", "--modes", "4"}).code == kExitUsage);
  CHECK(run({"p2", "--modes", "4", "--photons", "1", "--method", "gauss"}).code == kExitUsage);
  CHECK(run({"p2", "--bogus"}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("sweep csv round trip and determinism") {
  const auto path = scratch("sweep.csv");
  const std::vector<std::string> args = {"sweep", "--c", "2", "--beta", "1", "--n-min", "5", "--n-max", "40",
                                         "--n-step", "5", "--out", path.string()};
  auto with_jobs = args;
  with_jobs.insert(with_jobs.end(), {"--jobs", "1"});
  REQUIRE(run(with_jobs).code == kExitOk);
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string first = buf.str();
  CHECK(first.rfind(std::string(kSweepCsvHeader) + "\r\n", 0) == 0);

  std::istringstream parse_in(first);
  const auto rows = parse_sweep_csv(parse_in);
  REQUIRE(rows.size() == 8);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].n == 5 + 5 * i);
    CHECK(rows[i].m == 2 * rows[i].n);
    CHECK(rows[i].asymptote == "3");
  }
  std::ostringstream again;
  write_sweep_csv(again, rows);
  CHECK(again.str() == first);

  auto parallel = args;
  parallel.insert(parallel.end(), {"--jobs", "3"});
  REQUIRE(run(parallel).code == kExitOk);
  std::ifstream in2(path, std::ios::binary);
  std::stringstream buf2;
  buf2 << in2.rdbuf();
  CHECK(buf2.str() == first);
}

TEST_CASE("sweep csv quoting survives a round trip") {
  std::vector<SweepRow> rows = {{3, 9, "1.5", "x,\"y\"", "closed", "a\nb"}};
  std::ostringstream out;
  write_sweep_csv(out, rows);
  std::istringstream in(out.str());
  CHECK(parse_sweep_csv(in) == rows);
  std::istringstream bad("n,m\r\n");
  CHECK_THROWS(parse_sweep_csv(bad));
}

TEST_CASE("sweep outputs") {
  CHECK(run({"sweep", "--c", "1", "--beta", "2", "--n-min", "2", "--n-max", "3", "--out",
             "/nonexistent-dir/x.csv"})
            .code == kExitFailure);
  const auto j = run({"sweep", "--c", "1", "--beta", "3", "--n-min", "5", "--n-max", "6", "--format", "json"});
  REQUIRE(j.code == kExitOk);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["rows"].size() == 2);
  const auto path = scratch("plot.csv");
  const auto script = scratch("plot.gp");
  std::filesystem::remove(script);
  REQUIRE(run({"sweep", "--c", "2", "--beta", "1", "--n-min", "5", "--n-max", "6", "--out", path.string(),
               "--emit-plot-script", script.string()})
              .code == kExitOk);
  CHECK(std::filesystem::exists(script));
  CHECK(run({"sweep", "--c", "2", "--beta", "1", "--n-min", "5", "--n-max", "6", "--emit-plot-script",
             script.string()})
            .code == kExitUsage);
  CHECK(run({"sweep", "--c", "2", "--beta", "1", "--n-min", "7", "--n-max", "6"}).code == kExitUsage);
}

TEST_CASE("moment") {
  const auto r = run({"moment", "--modes", "3", "--photons", "1", "--input", "fock:1,0,0", "--output", "fock:1,0,0"});
  REQUIRE(r.code == kExitOk);
  CHECK(r.out.find("1/6") != std::string::npos);
  const auto one = run({"moment", "--modes", "1", "--photons", "2", "--input", "fock:2", "--output", "fock:2",
                        "--format", "json"});
  REQUIRE(one.code == kExitOk);
  CHECK(nlohmann::json::parse(one.out)["second_moment_num"] == "1");
  CHECK(run({"moment", "--modes", "3", "--photons", "2", "--input", "fock:1,0,0", "--output", "fock:2,0,0"}).code ==
        kExitUsage);
  CHECK(run({"moment", "--modes", "3", "--photons", "2", "--input", "x", "--output", "fock:2,0,0"}).code ==
        kExitUsage);
  const auto mc = run({"moment", "--modes", "3", "--photons", "2", "--input", "fock:1,1,0", "--output",
                       "fock:2,0,0", "--mc-check", "20000", "--seed", "5"});
  CHECK(mc.code == kExitOk);
  CHECK(mc.out.find("PASS") != std::string::npos);
}

TEST_CASE("spectrum") {
  const auto vac = run({"spectrum", "--modes", "3", "--photons", "0", "--obs", "fock:0,0,0", "--format", "json"});
  REQUIRE(vac.code == kExitOk);
  const auto v = nlohmann::json::parse(vac.out);
  CHECK(v["entries"].size() == 1);
  CHECK(v["entries"][0]["norm_sq"] == "1");
  const auto cf = run({"spectrum", "--modes", "3", "--photons", "2", "--obs", "fock:1,1,0", "--verify-projection"});
  REQUIRE(cf.code == kExitOk);
  CHECK(cf.out.find("1/6") != std::string::npos);
  CHECK(cf.out.find("PASS") != std::string::npos);
  CHECK(run({"spectrum", "--modes", "3", "--photons", "2", "--obs", "fock:1,1"}).code == kExitUsage);
}

TEST_CASE("verify") {
  const auto r = run({"verify", "--skip-mc", "--max-modes", "3", "--max-photons", "3"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("PASS irrep-norms") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("job count from the environment") {
  setenv("BOSONIC_MOMENTS_JOBS", "3", 1);
  CHECK(default_jobs() == 3);
  setenv("BOSONIC_MOMENTS_JOBS", "junk", 1);
  CHECK(default_jobs() >= 1);
  unsetenv("BOSONIC_MOMENTS_JOBS");
  CHECK(default_jobs() >= 1);
}
