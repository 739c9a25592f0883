// Exercises the installed command surface by spawning the real binary:
// argv[1] = path to the arcflow executable, argv[2] = fixtures directory.
#include "test_util.hpp"

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& cmd) {
  RunResult r;
  FILE* p = popen((cmd + " 2>&1").c_str(), "r");
  REQUIRE_MSG(p != nullptr, "popen failed");
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int status = pclose(p);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

int main(int argc, char** argv) {
  REQUIRE_MSG(argc >= 3, "usage: test_cli ARCFLOW_BINARY FIXTURE_DIR");
  std::string bin = argv[1];
  std::string fix = argv[2];
  std::string tri = fix + "/simplest-braid.tri";
  std::string drift = fix + "/simplest-braid.drift";
  std::string slice = fix + "/simplest-braid.slice";

  // ingest: triangulation and drift-graph paths give the same report core
  {
    RunResult r = run(bin + " ingest " + tri);
    REQUIRE(r.exit_code == 0);
    REQUIRE(contains(r.out, "4 tetrahedra, 8 faces, 4 edge classes"));
    REQUIRE(contains(r.out, "rank 2"));
    REQUIRE(contains(r.out, "B = {(-2,2),(-1,1),(0,1),(1,1),(2,2)}"));
    REQUIRE(contains(r.out, "cone(B) rays = (-1,1) (1,1)"));
    REQUIRE(contains(r.out, "fibered cone rays = (-1,-1) (1,-1)"));
  }
  {
    RunResult r = run(bin + " ingest " + drift);
    REQUIRE(r.exit_code == 0);
    REQUIRE(contains(r.out, "drift graph"));
    REQUIRE(contains(r.out, "B = {(-2,2),(-1,1),(0,1),(1,1),(2,2)}"));
  }
  // corrupt gluing: exit 2 with a diagnostic
  {
    std::ifstream in(tri);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    std::string corrupted = text;
    auto pos = corrupted.find("glue 0 3 2 2 0312");
    corrupted.replace(pos, 17, "glue 0 3 0 3 0312");
    std::string tmp = fix + "/.corrupt_test.tri";
    std::ofstream(tmp) << corrupted;
    RunResult r = run(bin + " ingest " + tmp);
    REQUIRE(r.exit_code == 2);
    REQUIRE(contains(r.out, "error:"));
    std::remove(tmp.c_str());
  }

  // atl
  {
    RunResult r = run(bin + " atl " + drift + " --phi 0,-1");
    REQUIRE(r.exit_code == 0);
    REQUIRE(contains(r.out, "ell = 2/3; witness = "));
  }
  // a boundary class is not a fibration class: exit 3
  {
    RunResult r = run(bin + " atl " + drift + " --phi 1,-1");
    REQUIRE(r.exit_code == 3);
    REQUIRE(contains(r.out, "not a fibration class"));
  }
  // mu at phi_{1,-5} is 50/9
  {
    RunResult r = run(bin + " mu " + drift + " --phi 1,-5 --slice " + slice + " --d 1");
    REQUIRE(r.exit_code == 0);
    REQUIRE(contains(r.out, "mu = 50/9"));
  }
  // g at t = 1/3 is 9; boundary point exits 4
  {
    RunResult r = run(bin + " g " + drift + " --point t=1/3 --slice " + slice);
    REQUIRE(r.exit_code == 0);
    REQUIRE(contains(r.out, "g = 9"));
  }
  {
    RunResult r = run(bin + " g " + drift + " --point t=1 --slice " + slice);
    REQUIRE(r.exit_code == 4);
    REQUIRE(contains(r.out, "diverges"));
  }
  // explicit coordinates are scaled onto the norm-one slice
  {
    RunResult r = run(bin + " g " + drift + " --point 0,-1 --slice " + slice);
    REQUIRE(r.exit_code == 0);
    REQUIRE(contains(r.out, "g = 8"));
  }
  // scan: deterministic byte output, depth 1 is the midpoint
  {
    RunResult a = run(bin + " scan " + drift + " --slice " + slice + " --depth 1");
    REQUIRE(a.exit_code == 0);
    REQUIRE(a.out == "point;norm;ell;mu;g;gap\n0;2;2/3;8/3;8;16/3\n");
    RunResult b = run(bin + " scan " + drift + " --slice " + slice + " --depth 1");
    REQUIRE(a.out == b.out);
    RunResult c = run(bin + " scan " + tri + " --slice " + slice + " --depth 1");
    REQUIRE(a.out == c.out);
  }
  // tsv format
  {
    RunResult r = run(bin + " scan " + drift + " --slice " + slice +
                      " --depth 1 --format tsv");
    REQUIRE(r.exit_code == 0);
    REQUIRE(contains(r.out, "point\tnorm\tell\tmu\tg\tgap"));
  }
  // graph command reports gauge-dependence
  {
    RunResult r = run(bin + " graph " + drift + " --phi 0,-1");
    REQUIRE(r.exit_code == 0);
    REQUIRE(contains(r.out, "gauge-dependent"));
    REQUIRE(contains(r.out, "max mean cycle = 3/2"));
  }
  // converge
  {
    RunResult r = run(bin + " converge " + drift + " --slice " + slice +
                      " --kmin 5 --kmax 7");
    REQUIRE(r.exit_code == 0);
    REQUIRE(contains(r.out, "k;point;norm;ell;mu;g;gap;gap_over_g"));
    REQUIRE(contains(r.out, "5;-1/5;10;1/18;50/9;25/3;25/9;1/3"));
  }
  // verify-example
  {
    RunResult r = run(bin + " verify-example");
    REQUIRE(r.exit_code == 0);
    REQUIRE(contains(r.out, "verify-example: all rows match"));
  }

  return test_done("test_cli");
}
