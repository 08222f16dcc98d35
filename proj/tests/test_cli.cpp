#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "algdyn/cli.hpp"

namespace {

struct RunResult {
  int exit_code;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = algdyn::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("fixedpoints matches the documented line") {
  auto r = run({"fixedpoints", "--f", "u1 - 2", "--lattice", "5"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "fixedpoints f=-2+u1 lattice=5 torus_rank=0 torsion=[31]\n");
}

TEST_CASE("snf matches the documented line") {
  auto r = run({"snf", "--matrix", "2,4;6,8"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "snf matrix=2,4;6,8 invariants=[2,4]\n");
}

TEST_CASE("sigma matches the documented line") {
  auto r = run({"sigma", "--width", "3"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "injective=true witness_nonsurjective=100@0\n");
}

TEST_CASE("mul emits canonical forms") {
  auto r = run({"mul", "--f", "u1 - 2", "--g", "u1 + 2"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "mul f=-2+u1 g=2+u1 product=-4+u1^2\n");
}

TEST_CASE("certify reports and exit codes") {
  auto expansive = run({"certify", "--f", "3 - u1 - u2"});
  CHECK(expansive.exit_code == 0);
  CHECK(expansive.out ==
        "certify f=3-u2-u1 expansive=lopsided gamma0=(0,0) mixing=mixing\n");

  auto unknown = run({"certify", "--f", "1 + u1 + u2"});
  CHECK(unknown.exit_code == 1);
  CHECK(unknown.out == "certify f=1+u2+u1 expansive=unknown mixing=unknown\n");

  auto grid = run({"certify", "--f", "2 + 2*u1 + u1^2", "--grid-exponent", "6"});
  CHECK(grid.exit_code == 0);
  CHECK(grid.out == "certify f=2+2*u1+u1^2 expansive=grid grid_exponent=6 mixing=unknown\n");
}

TEST_CASE("surjunctivity over a diagonal family") {
  auto r = run({"surjunctivity", "--a", "u1", "--f", "u1 - 2", "--lattices", "diag:N<=3"});
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "stratum lattice=1 injective=true surjective=true\n"
        "stratum lattice=2 injective=true surjective=true\n"
        "stratum lattice=3 injective=true surjective=true\n"
        "verdict=Consistent\n");
}

TEST_CASE("surjunctivity over a seeded random family is reproducible") {
  std::vector<std::string> args{"surjunctivity", "--a", "u1", "--f", "3 - u1 - u2",
                                "--lattices", "random:4,99"};
  auto r1 = run(args);
  auto r2 = run(args);
  CHECK(r1.exit_code == 0);
  CHECK(r1.out == r2.out);
  CHECK(r1.out.find("verdict=Consistent") != std::string::npos);
}

TEST_CASE("dcc line") {
  auto r = run({"dcc", "--factors", "8", "--matrix", "2"});
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "dcc factors=[8] matrix=2 k=3 image_free_rank=0 image_torsion=[] "
        "dual_injective=false dual_surjective=false\n");
}

TEST_CASE("densify lines") {
  auto r = run({"densify", "--window", "0:a;1:b", "--modulus", "2", "--dim", "1"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "densify dim=1 modulus=2 lattice=2\ncell (0)=a\ncell (1)=b\n");
}

TEST_CASE("demo lines") {
  auto shift = run({"demo", "--kind", "shift", "--m", "1"});
  CHECK(shift.exit_code == 0);
  CHECK(shift.out.find("shift_embed m=1") == 0);
  CHECK(shift.out.find("injective_on_samples=true") != std::string::npos);

  auto padic = run({"demo", "--kind", "padic", "--p", "2", "--m", "3"});
  CHECK(padic.exit_code == 0);
  CHECK(padic.out == "padic p=2 m=3 injective=true image_index=2 cokernel=[2]\n");
}

TEST_CASE("json lines output") {
  auto r = run({"fixedpoints", "--f", "u1 - 2", "--lattice", "4", "--oracle", "--output",
                "json-lines"});
  CHECK(r.exit_code == 0);
  std::istringstream lines(r.out);
  std::string line;
  REQUIRE(std::getline(lines, line));
  auto rec = nlohmann::json::parse(line);
  CHECK(rec["record"] == "fixedpoints");
  CHECK(rec["torus_rank"] == 0);
  CHECK(rec["torsion"] == nlohmann::json::array({"15"}));
  REQUIRE(std::getline(lines, line));
  auto oracle = nlohmann::json::parse(line);
  CHECK(oracle["record"] == "oracle");
  CHECK(oracle["count"] == "15");
  CHECK_FALSE(std::getline(lines, line));
}

TEST_CASE("json output is deterministic") {
  std::vector<std::string> args{"surjunctivity", "--a", "u1 + 1", "--f", "3 - u1",
                                "--lattices", "diag:N<=4", "--output", "json-lines"};
  auto r1 = run(args);
  auto r2 = run(args);
  CHECK(r1.out == r2.out);
  std::istringstream lines(r1.out);
  std::string line;
  int strata = 0;
  bool saw_verdict = false;
  while (std::getline(lines, line)) {
    auto rec = nlohmann::json::parse(line);
    if (rec["record"] == "stratum") ++strata;
    if (rec["record"] == "verdict") saw_verdict = true;
  }
  CHECK(strata == 4);
  CHECK(saw_verdict);
}

TEST_CASE("input errors exit with 2") {
  auto bad_poly = run({"fixedpoints", "--f", "u1 +", "--lattice", "5"});
  CHECK(bad_poly.exit_code == 2);
  CHECK(bad_poly.err.find("ParseError") != std::string::npos);

  auto bad_matrix = run({"snf", "--matrix", "1,2;x,4"});
  CHECK(bad_matrix.exit_code == 2);

  auto mismatch = run({"fixedpoints", "--f", "u1*u2", "--lattice", "5"});
  CHECK(mismatch.exit_code == 2);
  CHECK(mismatch.err.find("DimensionMismatch") != std::string::npos);

  auto bad_flag = run({"fixedpoints", "--f", "u1 - 2"});
  CHECK(bad_flag.exit_code == 2);

  auto bad_family = run({"surjunctivity", "--a", "u1", "--f", "u1 - 2", "--lattices",
                         "prime:4"});
  CHECK(bad_family.exit_code == 2);

  auto bad_translation = run({"surjunctivity", "--a", "u1", "--f", "4 - u1", "--b", "1/2",
                              "--lattices", "diag:N<=2"});
  CHECK(bad_translation.exit_code == 2);
  CHECK(bad_translation.err.find("EquivarianceViolation") != std::string::npos);

  auto no_command = run({});
  CHECK(no_command.exit_code == 2);

  auto singular = run({"fixedpoints", "--f", "u1 - 2", "--lattice", "0"});
  CHECK(singular.exit_code == 2);
}

TEST_CASE("round trip: reported canonical forms parse back") {
  auto r = run({"mul", "--f", "1 + u1^-1*u2", "--g", "1 + u1^-1*u2"});
  CHECK(r.exit_code == 0);
  auto eq = r.out.find("product=");
  REQUIRE(eq != std::string::npos);
  std::string canon = r.out.substr(eq + 8);
  canon.pop_back();  // newline
  auto again = run({"mul", "--f", canon, "--g", "1"});
  CHECK(again.out.find("product=" + canon) != std::string::npos);
}

TEST_CASE("help exits zero") {
  auto r = run({"--help"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("sigma") != std::string::npos);
}
