#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "qpcluster/cli.hpp"
#include "support/oracles.hpp"

using namespace qpc;
using qpc::testing::data_path;

namespace {
struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& s, const std::string& piece) { return s.find(piece) != std::string::npos; }
}  // namespace

TEST_CASE("grading on the 9-vertex quiver fails with a witness") {
  const Run r = run({"grading", data_path("nine_vertex.qv"), "--cycles", "simple", "--format", "machine"});
  CHECK(r.code == kExitNegative);
  CHECK(contains(r.out, "infeasible cycles=5"));
  CHECK((contains(r.out, "lhs=3 rhs=2") || contains(r.out, "lhs=2 rhs=3")));
}

TEST_CASE("grading succeeds on Somos-5") {
  const Run r = run({"grading", data_path("somos5.qv"), "--positive-edges"});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "feasible"));
}

TEST_CASE("qmutate along the pentagon returns to the start") {
  const Run r = run({"--format", "machine", "qmutate", data_path("a2_quantum.qv"), "--seq", "1,2,1,2,1"});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "periodic yes perm=2,1"));
}

TEST_CASE("usage and parse errors exit with 2") {
  CHECK(run({"check", data_path("loop.qv")}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"check", data_path("missing.qv")}).code == kExitUsage);
  CHECK(run({"mutate", data_path("three_cycle.qv"), "--seq", "1,x"}).code == kExitUsage);
  CHECK(run({"expand", data_path("a2_quantum.qv"), "--monomial", "1,0,0"}).code == kExitUsage);
}

TEST_CASE("check, mutate and nondeg") {
  const Run c = run({"check", data_path("three_cycle.qv"), "--format", "machine"});
  CHECK(c.code == kExitOk);
  CHECK(contains(c.out, "homogeneous_degree 3"));
  const Run m = run({"mutate", data_path("three_cycle.qv"), "--seq", "2"});
  CHECK(m.code == kExitOk);
  CHECK(contains(m.out, "vertices 3"));
  CHECK_FALSE(contains(m.out, "term"));
  const Run n = run({"nondeg", data_path("three_cycle.qv"), "--seq", "2,1,3,2", "--format", "machine"});
  CHECK(n.code == kExitOk);
  CHECK(contains(n.out, "nondegenerate seq=2,1,3,2"));
  const Run d = run({"nondeg", data_path("a3.qv"), "--seq", "1", "--rand-seed", "3", "--order", "5"});
  CHECK(d.code == kExitOk);
  CHECK(contains(d.out, "working order: 5"));
}

TEST_CASE("quantize writes a compatible file") {
  const std::string path = (std::filesystem::temp_directory_path() / "qpc_cli_quantize.qv").string();
  const Run q = run({"quantize", data_path("somos5.qv"), "-o", path});
  CHECK(q.code == kExitOk);
  const Run c = run({"check", path, "--format", "machine"});
  CHECK(c.code == kExitOk);
  CHECK(contains(c.out, "compatible yes"));
  CHECK(contains(c.out, "vertices 10"));
  std::filesystem::remove(path);
}

TEST_CASE("expand and positivity") {
  const Run e = run({"expand", data_path("a2_quantum.qv"), "--seq", "1", "--monomial", "1", "--basis", "symmetric",
                     "--format", "machine"});
  CHECK(e.code == kExitOk);
  CHECK(contains(e.out, "term -1,1 1"));
  CHECK(contains(e.out, "term -1,0 1"));
  const Run p = run({"positivity", data_path("kronecker.qv"), "--seq", "1,2", "--monomial", "0,1", "--format",
                     "machine"});
  CHECK(p.code == kExitOk);
  CHECK(contains(p.out, "note quantized=4"));
  CHECK(contains(p.out, "parts=1:1 status=ok"));
  CHECK(contains(p.out, "summary positive=1 lefschetz=1 uniform_parity=1"));
}
