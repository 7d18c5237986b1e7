#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qdl/cli.hpp"

using qdl::IntPoly;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = qdl::run(args, out, err);
  return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("compute qdelannoy") {
  auto r = invoke({"compute", "qdelannoy", "--h", "2", "--k", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "1 + 2*q + 4*q^2 + 4*q^3 + 2*q^4\n");
  for (const char *route : {"def", "alt", "rec"})
    CHECK(invoke({"compute", "qdelannoy", "--h", "2", "--k", "2", "--route", route}).out == r.out);
}

TEST_CASE("compute other targets") {
  CHECK(invoke({"compute", "delannoy", "--h", "5", "--k", "5"}).out == "1683\n");
  CHECK(invoke({"compute", "qbinom", "--h", "4", "--k", "2"}).out == "1 + q + 2*q^2 + q^3 + q^4\n");
  CHECK(invoke({"compute", "cyclotomic", "--n", "6"}).out == "1 - q + q^2\n");
  CHECK(invoke({"compute", "sigma-poly", "--h", "1", "--k", "1"}).out == "1 + 2*q\n");
}

TEST_CASE("compute --json round-trips the polynomial") {
  auto r = invoke({"compute", "qdelannoy", "--h", "6", "--k", "5", "--json"});
  REQUIRE(r.code == 0);
  auto j = qdl::Json::parse(r.out);
  CHECK(j["kind"] == "qdelannoy");
  CHECK(j["route"] == "rec");
  CHECK(qdl::poly_from_json(j["poly"]) == qdl::q_delannoy_rec(6, 5));
}

TEST_CASE("poly JSON") {
  IntPoly p{-3, 0, 7};
  p *= IntPoly::constant(qdl::BigInt("98765432109876543210"));
  auto j = qdl::poly_to_json(p);
  CHECK(j[1] == "0");
  CHECK(qdl::poly_from_json(j) == p);
  CHECK(qdl::poly_to_json(IntPoly{}).empty());
  CHECK(qdl::poly_from_json(qdl::Json::array()).is_zero());
  CHECK_THROWS_AS(qdl::poly_from_json(qdl::Json::parse("[1, 2]")), std::invalid_argument);
  CHECK_THROWS_AS(qdl::poly_from_json(qdl::Json::parse("\"1\"")), std::invalid_argument);
}

TEST_CASE("verify thm2 --json") {
  auto r = invoke({"verify", "thm2", "--max-n", "4", "--max-h", "4", "--max-k", "4", "--json"});
  CHECK(r.code == 0);
  auto j = qdl::Json::parse(r.out);
  CHECK(j["kind"] == "thm2");
  CHECK(j["cases"] == 100);
  CHECK(j["failed"] == 0);
  CHECK(j["ok"] == true);
}

TEST_CASE("verify text output") {
  auto r = invoke({"verify", "thm1", "--max-n", "3", "--max-a", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "thm1: 56 cases, 56 passed, 0 failed\ninduction: 56 cases, 0 failed\n");
  auto e = invoke({"verify", "lucas", "--max-n", "1"});
  CHECK(e.code == 0);
  CHECK(e.out == "lucas: 0 cases, 0 passed, 0 failed\n");
}

TEST_CASE("orbits audit") {
  auto r = invoke({"orbits", "audit", "--h", "1", "--k", "1", "--n", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("Q4: 21 paths") != std::string::npos);
  CHECK(r.out.find("S4 = q^5 + 2*q^6") != std::string::npos);
  CHECK(r.out.substr(r.out.size() - 5) == "PASS\n");

  auto j = qdl::Json::parse(invoke({"orbits", "audit", "--h", "0", "--k", "0", "--n", "2", "--json"}).out);
  CHECK(j["total_paths"] == 13);
  CHECK(j["violations"].empty());
  CHECK(j["ok"] == true);
  CHECK(qdl::poly_from_json(j["residues"]["total"]) == IntPoly{1});
}

TEST_CASE("usage errors exit 2 with a message") {
  std::vector<std::vector<std::string>> bad = {
      {},
      {"compute", "qdelannoy", "--h", "2"},
      {"compute", "qdelannoy", "--h", "x", "--k", "2"},
      {"compute", "qdelannoy", "--h", "2", "--k", "2", "--route", "fast"},
      {"compute", "widget", "--h", "2", "--k", "2"},
      {"compute", "cyclotomic", "--n", "0"},
      {"verify", "thm3"},
      {"verify", "thm2", "--max-n", "-1"},
      {"verify", "thm2", "--bogus"},
      {"verify", "thm2", "--jobs", "0"},
      {"orbits", "audit", "--h", "1", "--k", "1"},
      {"orbits", "audit", "--h", "1", "--k", "1", "--n", "0"},
      {"orbits"},
  };
  for (const auto &args : bad) {
    auto r = invoke(args);
    CAPTURE(r.err);
    CHECK(r.code == qdl::exit_code::usage);
    CHECK_FALSE(r.err.empty());
    CHECK(r.out.empty());
  }
}

TEST_CASE("help exits 0") {
  auto r = invoke({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verify") != std::string::npos);
}

TEST_CASE("output is byte-identical across --jobs") {
  std::vector<std::vector<std::string>> cmds = {
      {"verify", "thm1", "--max-n", "4", "--max-a", "1", "--json"},
      {"verify", "thm2", "--max-n", "5", "--max-h", "3", "--max-k", "3"},
      {"verify", "qlucas", "--max-n", "5", "--max-a", "2", "--json"},
      {"verify", "dlucas", "--max-n", "5", "--max-a", "2", "--json"},
      {"verify", "interp", "--max-h", "4", "--max-k", "4", "--json"},
  };
  for (auto args : cmds) {
    args.push_back("--jobs");
    args.push_back("1");
    auto base = invoke(args);
    CHECK(base.code == 0);
    for (const char *jobs : {"2", "7"}) {
      args.back() = jobs;
      CHECK(invoke(args).out == base.out);
    }
    CHECK(invoke(args).out == base.out);
  }
}

TEST_CASE("--out writes the report to a file") {
  auto path = std::filesystem::temp_directory_path() / "qdelannoy_cli_test_out.json";
  std::filesystem::remove(path);
  auto r = invoke({"compute", "delannoy", "--h", "3", "--k", "3", "--json", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  auto j = qdl::Json::parse(buf.str());
  CHECK(j["value"] == "63");
  std::filesystem::remove(path);

  auto bad = invoke({"compute", "delannoy", "--h", "3", "--k", "3", "--out", "/nonexistent-dir/x.txt"});
  CHECK(bad.code == qdl::exit_code::usage);
}
