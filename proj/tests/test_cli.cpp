#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "lattice_spectra/report_io.hpp"

using namespace lspec;
namespace fs = std::filesystem;

namespace {

std::string cli_path() {
  const char* p = std::getenv("LSPEC_CLI");
  REQUIRE_MESSAGE(p != nullptr, "LSPEC_CLI must point at the lspec binary");
  return p;
}

fs::path scratch_dir() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() /
                 ("lspec_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

int run(const std::string& args) {
  const std::string cmd =
      cli_path() + " " + args + " > /dev/null 2> /dev/null";
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -2;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::size_t count_lines(const std::string& text) {
  std::size_t lines = 0;
  for (char c : text)
    if (c == '\n') ++lines;
  return lines;
}

}  // namespace

TEST_CASE("gen then verify round-trips with exit 0") {
  const fs::path region = scratch_dir() / "box.json";
  const fs::path report = scratch_dir() / "box_report.csv";
  const fs::path report_json = scratch_dir() / "box_report.json";
  CHECK(run("gen --shape box --dims 3,2 --out " + region.string()) == 0);
  CHECK(fs::exists(region));
  CHECK(fs::exists(region.string() + ".manifest.json"));
  CHECK(run("verify --region " + region.string() + " --out " +
            report.string() + " --json " + report_json.string()) == 0);
  const std::string csv = slurp(report);
  CHECK(csv.find("# manifest: ") == 0);
  CHECK(csv.find("region_id,inequality_id,k,lhs,rhs,slack,precondition_met,pass") !=
        std::string::npos);
  // N = 6: 11 per-k records for k=1..5, 3 first-eigenvalue rows, 6 partials
  CHECK(count_lines(csv) == 2 + 11 * 5 + 3 + 6);
  CHECK(slurp(report_json).find("\"records\"") != std::string::npos);
}

TEST_CASE("verify handles the proof-internals flag") {
  const fs::path region = scratch_dir() / "ball.json";
  CHECK(run("gen --shape ball --n 2 --radius 2 --out " + region.string()) == 0);
  CHECK(run("verify --region " + region.string() + " --proof-internals") == 0);
}

TEST_CASE("usage and I/O failures exit with 2") {
  CHECK(run("gen --shape random --n 2 --size 5") == 2);  // missing --seed
  CHECK(run("gen --shape dodecahedron") == 2);
  CHECK(run("verify --region " + (scratch_dir() / "missing.json").string()) == 2);
  CHECK(run("frobnicate") == 2);
  CHECK(run("sweep --family boxes --n 1 --sizes nope") == 2);

  const fs::path bad = scratch_dir() / "bad.json";
  write_text_file(bad.string(), "{\"n\": 2, \"points\": [[0");
  CHECK(run("verify --region " + bad.string()) == 2);
}

TEST_CASE("generated outputs are byte-deterministic") {
  const fs::path a = scratch_dir() / "rand_a.json";
  const fs::path b = scratch_dir() / "rand_b.json";
  CHECK(run("gen --shape random --n 2 --size 12 --seed 7 --out " + a.string()) == 0);
  CHECK(run("gen --shape random --n 2 --size 12 --seed 7 --out " + b.string()) == 0);
  // manifest references differ with the path, the payload must not
  std::string ja = slurp(a), jb = slurp(b);
  ja.erase(ja.find(a.string()), a.string().size());
  jb.erase(jb.find(b.string()), b.string().size());
  CHECK(ja == jb);

  const fs::path t1 = scratch_dir() / "trace1.csv";
  const fs::path t2 = scratch_dir() / "trace2.csv";
  const std::string search_args =
      "search --ineq ppw --k 1 --n 2 --size 6 --steps 25 --seed 3 --out ";
  CHECK(run(search_args + t1.string()) == 0);
  CHECK(run(search_args + t2.string()) == 0);
  std::string c1 = slurp(t1), c2 = slurp(t2);
  c1.erase(0, c1.find('\n'));  // drop the manifest comment line
  c2.erase(0, c2.find('\n'));
  CHECK(c1 == c2);
  CHECK(c1.find("step,objective,accepted,best_so_far") != std::string::npos);
}

TEST_CASE("search writes the best region when asked") {
  const fs::path trace = scratch_dir() / "trace_best.csv";
  const fs::path best = scratch_dir() / "best.json";
  CHECK(run("search --ineq yang1 --k 1 --n 2 --size 6 --steps 15 --seed 1 "
            "--out " + trace.string() + " --best-out " + best.string()) == 0);
  CHECK(fs::exists(best));
  CHECK(run("verify --region " + best.string()) == 0);
}

TEST_CASE("sweep writes one row per surviving record") {
  const fs::path out = scratch_dir() / "sweep.csv";
  CHECK(run("sweep --family boxes --n 1 --sizes 2..4 --ineq ppw --out " +
            out.string()) == 0);
  const std::string csv = slurp(out);
  // manifest comment + header + (1 + 2 + 3) ppw rows
  CHECK(count_lines(csv) == 2 + 6);
  CHECK(csv.find("box_m2,ppw,1,") != std::string::npos);
  CHECK(csv.find("box_m4,ppw,3,") != std::string::npos);
}

TEST_CASE("number formatting round-trips and spells out infinities") {
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(1.0 / 3.0) == "0.3333333333333333");
  CHECK(format_double(kInf) == "inf");
  CHECK(format_double(-kInf) == "-inf");
  CHECK(format_double(0.0) == "0");
  CHECK(std::strtod(format_double(0.1 + 0.2).c_str(), nullptr) == 0.1 + 0.2);
}
