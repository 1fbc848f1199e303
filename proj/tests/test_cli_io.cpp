#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "drcskit/manifest.hpp"
#include "drcskit/registry.hpp"

using namespace drcskit;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// Run the installed binary, capturing stdout (stderr is folded in).
RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(DRCSKIT_BIN) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  size_t len;
  while ((len = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    r.out.append(buf.data(), len);
  }
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

fs::path fresh_dir(const std::string& tag) {
  fs::path dir = fs::temp_directory_path() / ("drcskit_cli_" + tag);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("fnv1a64 matches the reference vectors") {
  CHECK(fnv1a64("") == 14695981039346656037ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(digest_hex(fnv1a64("a")) == "fnv1a64:af63dc4c8601ec8c");
}

TEST_CASE("atomic_write leaves no temporaries and overwrites in place") {
  fs::path dir = fresh_dir("atomic");
  fs::path target = dir / "out.txt";
  atomic_write(target, "first\n");
  CHECK(slurp(target) == "first\n");
  atomic_write(target, "second\n");
  CHECK(slurp(target) == "second\n");
  int files = 0;
  for (const auto& entry : fs::directory_iterator(dir)) {
    (void)entry;
    ++files;
  }
  CHECK(files == 1);
  fs::remove_all(dir);
}

TEST_CASE("manifest carries command, parameters, digests and timestamp") {
  fs::path dir = fresh_dir("manifest");
  fs::path input = dir / "input.txt";
  atomic_write(input, "payload");
  setenv("SOURCE_DATE_EPOCH", "1000000000", 1);
  RunManifest m = make_manifest("unit test", {{"flag", "7"}}, {input});
  unsetenv("SOURCE_DATE_EPOCH");
  CHECK(m.timestamp == "2001-09-09T01:46:40Z");
  CHECK(m.version == std::string("0.1.0"));
  REQUIRE(m.inputs.size() == 1);
  CHECK(m.inputs[0].second == digest_hex(fnv1a64("payload")));

  const std::string j = manifest_to_json(m);
  CHECK(j.find("\"command\": \"unit test\"") != std::string::npos);
  CHECK(j.find("\"flag\": \"7\"") != std::string::npos);

  write_manifest(m, dir / "artifact.csv");
  CHECK(fs::exists(dir / "artifact.csv.manifest.json"));
  fs::remove_all(dir);
}

TEST_CASE("registry holds the published parameter rows") {
  CHECK(registry::small_alphabet_rows().size() == 18);
  CHECK(registry::example1_bh().order == 10);
  CHECK(registry::example2_q() == 17);
  auto row = registry::p2_family_row(5);
  CHECK(row.K == 25);
  CHECK(row.N == 24);
  CHECK_THROWS(registry::p2_family_row(4));
}

TEST_CASE("cli builds the published rectangle byte-for-byte") {
  RunResult r = run_cli("rect build-qf --p 3 --n 2 --poly 2,2,1 --extend");
  CHECK(r.exit_code == 0);
  CHECK(r.out.starts_with("9 9 10\n1 3 4 7 2 6 8 5 9\n"));
}

TEST_CASE("cli exit codes distinguish failure classes") {
  CHECK(run_cli("rect build-qf --p 15 --n 1 --poly 1,1").exit_code == 4);
  CHECK(run_cli("bh build --kind seed --args no-such-seed").exit_code == 4);
  CHECK(run_cli("field check --p 3 --n 2 --poly 1,0,1").exit_code == 2);

  fs::path dir = fresh_dir("codes");
  atomic_write(dir / "dup.txt", "2 2 2\n0 1\n0 1\n");
  CHECK(run_cli("rect validate " + (dir / "dup.txt").string()).exit_code ==
        2);
  atomic_write(dir / "trunc.txt", "2 2 2\n0 1\n");
  CHECK(run_cli("rect validate " + (dir / "trunc.txt").string()).exit_code ==
        3);
  fs::remove_all(dir);
}

TEST_CASE("construct pipeline matches the repro bundle output") {
  fs::path dir = fresh_dir("pipeline");
  const std::string d = dir.string();
  CHECK(run_cli("rect build-florentine --q 17 -o " + d + "/flor.txt")
            .exit_code == 0);
  CHECK(run_cli("bh build --kind walsh --args 4 -o " + d + "/walsh.txt")
            .exit_code == 0);
  CHECK(run_cli("drcs construct --rect " + d + "/flor.txt --bh " + d +
                "/walsh.txt -o " + d + "/set.drcs")
            .exit_code == 0);
  RunResult metrics =
      run_cli("af metrics --drcs " + d + "/set.drcs --zx 16 --zy 16");
  CHECK(metrics.exit_code == 0);
  CHECK(metrics.out.find("\"theta_max\": 16.0") != std::string::npos);

  RunResult grid = run_cli("af grid --drcs " + d +
                           "/set.drcs --k1 0 --k2 0 --zx 2 --zy 2 -o " + d +
                           "/g.csv");
  CHECK(grid.exit_code == 0);
  const std::string csv = slurp(dir / "g.csv");
  CHECK(csv.starts_with("tau,v,re,im,mag\n"));
  CHECK(fs::exists(dir / "g.csv.manifest.json"));
  fs::remove_all(dir);
}

TEST_CASE("repro bundles are byte-identical across runs") {
  fs::path a = fresh_dir("repro_a");
  fs::path b = fresh_dir("repro_b");
  CHECK(run_cli("repro example1 --outdir " + a.string()).exit_code == 0);
  CHECK(run_cli("repro example1 --outdir " + b.string()).exit_code == 0);
  for (const char* name :
       {"rectangle.txt", "set.drcs", "paper_tables.txt", "metrics.json"}) {
    CHECK(slurp(a / name) == slurp(b / name));
  }
  // 4 sets x 9 position rows.
  std::istringstream tables(slurp(a / "paper_tables.txt"));
  std::string line;
  int lines = 0;
  while (std::getline(tables, line)) ++lines;
  CHECK(lines == 36);
  fs::remove_all(a);
  fs::remove_all(b);
}

TEST_CASE("bounds eval emits a machine-readable report") {
  RunResult r = run_cli(
      "bounds eval --which shen --K 9 --M 10 --N 9 --zx 9 --zy 9 --theta 10");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"bound\": \"shen\"") != std::string::npos);
  CHECK(r.out.find("\"rho\"") != std::string::npos);

  // Vacuous bound + rho request is a parameter error.
  RunResult vac = run_cli(
      "bounds eval --which uniform --K 2 --M 10 --N 8 --zy 2 --theta 5");
  CHECK(vac.exit_code == 4);
}
