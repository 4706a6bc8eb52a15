#include <doctest.h>

#include <fstream>
#include <sstream>

#include "cli_app.hpp"

using solvstab::run_cli;

#ifndef SOLVSTAB_FIXTURE_DIR
#define SOLVSTAB_FIXTURE_DIR "fixtures"
#endif

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("help") {
    CliResult r = cli({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("catalog") != std::string::npos);
    CHECK(r.out.find("verify") != std::string::npos);
  }

  TEST_CASE("catalog listing") {
    CliResult r = cli({"catalog", "--max-field", "9", "--max-degree", "9"});
    CHECK(r.code == 0);
    CHECK(r.out.find("GL(2,3)") != std::string::npos);
    CHECK(r.out.find("Gamma(3^2)") != std::string::npos);
    CliResult csv = cli({"catalog", "--max-field", "9", "--max-degree", "9", "--format", "csv"});
    CHECK(csv.out.rfind("label,provenance,kind", 0) == 0);
  }

  TEST_CASE("analyze a named group") {
    CliResult r = cli({"analyze", "--group", "GL(2,3)", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"orbit_count\": 2") != std::string::npos);
    CHECK(r.out.find("\"good_count\": 2") != std::string::npos);
  }

  TEST_CASE("analyze the degree-512 fixture") {
    CliResult r = cli({"analyze", "--group", std::string(SOLVSTAB_FIXTURE_DIR) + "/deg512.json",
                       "--format", "json"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"order\": 9261") != std::string::npos);
    CHECK(r.out.find("\"abelian\": true") == std::string::npos);  // no abelian centralizer
  }

  TEST_CASE("distinct diagnostics, exit code 2") {
    CliResult unknown = cli({"analyze", "--group", "NoSuchGroup"});
    CHECK(unknown.code == 2);
    CHECK(unknown.err.find("unknown group label") != std::string::npos);

    CliResult missing = cli({"analyze", "--group", "/nonexistent/file.json"});
    CHECK(missing.code == 2);
    CHECK(missing.err.find("cannot open") != std::string::npos);

    CliResult usage = cli({"analyze"});
    CHECK(usage.code == 2);

    CliResult badsub = cli({"frobnicate"});
    CHECK(badsub.code == 2);
  }

  TEST_CASE("verify: exit 0 and worker-count independence") {
    std::vector<std::string> base{"verify", "--max-field", "9", "--max-degree", "9"};
    CliResult r1 = cli(base);
    CHECK(r1.code == 0);
    CHECK(r1.out.find("\"all_pass\": true") != std::string::npos);

    std::vector<std::string> jobs = base;
    jobs.insert(jobs.end(), {"--jobs", "3"});
    CliResult r3 = cli(jobs);
    CHECK(r3.code == 0);
    CHECK(r3.out == r1.out);
  }

  TEST_CASE("verify exits 1 when a verdict fails") {
    // An impossible good-orbit threshold turns real passes into honest fails.
    CliResult r = cli({"verify", "--max-field", "9", "--max-degree", "9", "--threshold", "0"});
    CHECK(r.code == 1);
    CHECK(r.out.find("\"all_pass\": false") != std::string::npos);
  }

  TEST_CASE("gluck emits the orbit CSV") {
    CliResult r = cli({"gluck", "--group", "GL(2,3)"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("bitmask,size,stabilizer_order,regular,complement_orbit", 0) == 0);
  }

  TEST_CASE("analyze rejects a non-solvable group with exit 2") {
    CliResult r = cli({"analyze", "--group", "GL(2,5)"});
    CHECK(r.code == 2);
    CHECK(r.err.find("not solvable") != std::string::npos);
  }

  TEST_CASE("options can come from a config file, flags winning") {
    std::string path = "/tmp/solvstab_test_config.ini";
    {
      std::ofstream f(path);
      f << "[catalog]\nmax-field=9\nmax-degree=9\nformat=csv\n";
    }
    CliResult r = cli({"--config", path, "catalog"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("label,provenance,kind", 0) == 0);  // csv came from the file
    CHECK(r.out.find("Gamma(3^2)") != std::string::npos); // max-field applied
    CHECK(r.out.find("Gamma(3^3)") == std::string::npos); // ... and capped at 9
    CliResult over = cli({"--config", path, "catalog", "--format", "md"});
    CHECK(over.out.rfind("| label |", 0) == 0);           // the flag wins
  }

  TEST_CASE("min-dl emits the two-point table") {
    CliResult r = cli({"min-dl", "--max-field", "9", "--max-degree", "9"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("label,degree,affine_order,x,y,min_derived_length", 0) == 0);
    CHECK(r.out.find("GL(2,3)") != std::string::npos);
  }
}
