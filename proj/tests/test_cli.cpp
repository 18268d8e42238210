#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include "fixtures/reference_arrays.hpp"
#include "sma/grid_io.hpp"
#include "sma/grid_ops.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr combined
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(SMA_CLI_PATH) + " " + args + " 2>&1";
  RunResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    res.output.append(buf.data(), got);
  }
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("sma_cli_test_" + std::to_string(::getpid()) + "_" +
            std::to_string(counter++));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  static inline int counter = 0;
};

}  // namespace

TEST_CASE("construct subcommand") {
  TempDir tmp;
  const std::string cat = " --catalog " + (tmp.path / "cat").string();

  SUBCASE("trivial tight array") {
    auto res = run_cli("construct tight --rows 1 --cols 1 --format text" + cat);
    CHECK(res.exit_code == 0);
    CHECK(res.output == "# 1 1 1 1\n0\n");
  }
  SUBCASE("text rendering matches the reference array") {
    auto res = run_cli("construct square --n 7 --t 5 --format text" + cat);
    CHECK(res.exit_code == 0);
    auto expected = sma::to_text(fixtures::grid(fixtures::kSms7x5).grid,
                                 sma::ArraySpec::square(7, 5));
    CHECK(res.output == expected);
  }
  SUBCASE("unsupported parameters exit 2 naming the condition") {
    auto res = run_cli("construct tight --rows 2 --cols 5" + cat);
    CHECK(res.exit_code == 2);
    CHECK(res.output.find("mod 4") != std::string::npos);
  }
  SUBCASE("open double-rectangle cells exit 2") {
    auto res = run_cli("construct double --m 5 --t 5" + cat);
    CHECK(res.exit_code == 2);
    CHECK(res.output.find("open case") != std::string::npos);
  }
  SUBCASE("json output round-trips through verify") {
    auto file = (tmp.path / "g.json").string();
    auto res = run_cli("construct double --m 7 --t 6 --out " + file + cat);
    CHECK(res.exit_code == 0);
    auto ver = run_cli("verify " + file);
    CHECK(ver.exit_code == 0);
    CHECK(ver.output.find("\"is_valid_sma\": true") != std::string::npos);
  }
  SUBCASE("provider timeout exits 3") {
    auto res =
        run_cli("construct tight --rows 5 --cols 9 --node-budget 10" + cat);
    CHECK(res.exit_code == 3);
  }
  SUBCASE("seed and jobs flags are accepted") {
    auto res = run_cli(
        "construct tight --rows 4 --cols 4 --seed 7 --jobs 2 --format text" +
        cat);
    CHECK(res.exit_code == 0);
  }
}

TEST_CASE("verify subcommand") {
  TempDir tmp;
  SUBCASE("the shiftable block verifies with its flag set") {
    auto file = (tmp.path / "fig2.json").string();
    auto gf = fixtures::grid(fixtures::kSma2x4);
    sma::save_grid_file(file, sma::to_json(gf.grid, gf.spec));
    auto res = run_cli("verify " + file);
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("\"is_shiftable\": true") != std::string::npos);
  }
  SUBCASE("text files verify too") {
    auto file = (tmp.path / "f1.txt").string();
    std::ofstream(file) << fixtures::kSma3x4;
    auto res = run_cli("verify " + file);
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("\"is_shiftable\": false") != std::string::npos);
  }
  SUBCASE("a corrupted grid names the failing lines") {
    auto file = (tmp.path / "bad.txt").string();
    std::ofstream(file) << "# 2 2 2 2\n1 -1\n-1 2\n";
    auto res = run_cli("verify " + file);
    CHECK(res.exit_code == 1);
    CHECK(res.output.find("column 2 sums to 1") != std::string::npos);
    CHECK(res.output.find("row 2 sums to 1") != std::string::npos);
  }
  SUBCASE("unparsable files exit 65") {
    auto file = (tmp.path / "junk.txt").string();
    std::ofstream(file) << "not a grid\n";
    CHECK(run_cli("verify " + file).exit_code == 65);
    CHECK(run_cli("verify " + (tmp.path / "missing.json").string()).exit_code ==
          65);
  }
}

TEST_CASE("decide subcommand") {
  CHECK(run_cli("decide 5 5 1 1").output == "NotExists (reason: t_below_3)\n");
  CHECK(run_cli("decide 5 10 10 5").output == "Unknown (reason: open_case)\n");
  CHECK(run_cli("decide 4 8 6 3").output == "Exists (method: heffter)\n");
  CHECK(run_cli("decide 6 6 6 6").output == "Exists (method: even_even)\n");
  SUBCASE("uncharacterized families exit 2") {
    auto res = run_cli("decide 3 5 4 2");
    CHECK(res.exit_code == 2);
    CHECK(res.output.find("family not characterized") != std::string::npos);
  }
  SUBCASE("decide exits 0 for all three verdicts") {
    CHECK(run_cli("decide 5 5 1 1").exit_code == 0);
    CHECK(run_cli("decide 5 10 10 5").exit_code == 0);
  }
}

TEST_CASE("oracle subcommand") {
  SUBCASE("exhaustive nonexistence") {
    auto res = run_cli("oracle --spec 2,5,5,2");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("none (exhaustive)") != std::string::npos);
  }
  SUBCASE("cell cap reports inconclusive") {
    auto res = run_cli("oracle --spec 6,6,6,6 --max-cells 14");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("inconclusive") != std::string::npos);
  }
  SUBCASE("existence prints the witness") {
    auto res = run_cli("oracle --spec 2,3,3,2");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("exists") != std::string::npos);
    CHECK(res.output.find("1  2 -3") != std::string::npos);
  }
  SUBCASE("counting") {
    auto res = run_cli("oracle --spec 1,1,1,1 --count");
    CHECK(res.output.find("count 1 (exhaustive)") != std::string::npos);
  }
  SUBCASE("malformed spec exits 64") {
    CHECK(run_cli("oracle --spec 1,2,3").exit_code == 64);
  }
}

TEST_CASE("catalog subcommand") {
  TempDir tmp;
  const std::string cat = " --catalog " + (tmp.path / "cat").string();
  SUBCASE("add and list") {
    auto file = (tmp.path / "h43.txt").string();
    auto gf = fixtures::grid(fixtures::kHeffter3x4);
    sma::save_grid_file(
        file, sma::to_text(sma::transpose(gf.grid), gf.spec.transposed()));
    auto res = run_cli("catalog add " + file + cat);
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("stored tight_heffter-4x3") != std::string::npos);
    auto ls = run_cli("catalog list" + cat);
    CHECK(ls.output.find("tight_heffter-4x3 tight_heffter user-supplied") !=
          std::string::npos);
    CHECK(ls.output.find("tight_heffter-3x4 tight_heffter builtin") !=
          std::string::npos);
  }
  SUBCASE("non-family grids are refused") {
    auto file = (tmp.path / "sma.txt").string();
    std::ofstream(file) << fixtures::kSma3x4;
    auto res = run_cli("catalog add " + file + cat);
    CHECK(res.exit_code == 2);
  }
  SUBCASE("gc sweeps corrupt entries") {
    fs::create_directories(tmp.path / "cat");
    std::ofstream(tmp.path / "cat" / "magic_rectangle-5x5.json") << "{broken";
    auto res = run_cli("catalog gc" + cat);
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("removed 1") != std::string::npos);
  }
}

TEST_CASE("usage errors exit 64") {
  CHECK(run_cli("construct tight --rows 2").exit_code == 64);
  CHECK(run_cli("frobnicate").exit_code == 64);
}
