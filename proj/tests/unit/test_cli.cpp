#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "cli.hpp"
#include "cyclok2/algebra/rational.hpp"
#include "doctest.h"
#include "json.hpp"
#include "tables.hpp"

using cyclok2::cli::run;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("cyclok2_cli_" + name);
}

}  // namespace

TEST_CASE("verify zset,counts passes and lists the zset") {
  const auto r = call({"verify", "--suites", "zset,counts"});
  CHECK(r.code == 0);
  CHECK(r.out.find("zset(7,3): {2,3,4,5}") != std::string::npos);
  CHECK(r.out.find("l=7 p=3 n=2: (12, 2)") != std::string::npos);
  CHECK(r.out.find("[fail]") == std::string::npos);
}

TEST_CASE("verify identities covers every p") {
  const auto r = call({"verify", "--suites", "identities", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["ok"] == true);
  std::set<std::string> names;
  for (const auto& c : j["suites"][0]["checks"]) {
    CHECK(c["status"] == "pass");
    names.insert(c["anchor"].get<std::string>());
  }
  for (const char* n : {"selmer-reduction p=5", "selmer-reduction p=7", "selmer-reduction p=11",
                        "selmer-reduction p=13", "newton-family p=3", "newton-family p=5", "newton-family p=7",
                        "golden-square", "norm-collapse p=5", "norm-collapse p=7"}) {
    CHECK(names.count(n) == 1);
  }
}

TEST_CASE("verify diophantine lists four solutions") {
  const auto r = call({"verify", "--suites", "diophantine"});
  CHECK(r.code == 0);
  CHECK(r.out.find("4 solutions: (-1,1) (0,-1) (0,1) (1,-1)") != std::string::npos);
}

TEST_CASE("json output is byte-deterministic and independent of jobs") {
  const auto a = call({"verify", "--format", "json", "--suites", "degree-law,factor-law,tame,bruteforce"});
  const auto b = call({"--jobs", "3", "verify", "--format", "json", "--suites", "degree-law,factor-law,tame,bruteforce"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto c = call({"verify", "--seed", "9", "--format", "json", "--suites", "degree-law"});
  const auto d = call({"verify", "--seed", "9", "--format", "json", "--suites", "degree-law"});
  CHECK(c.code == 0);
  CHECK(c.out == d.out);
  CHECK(json::parse(c.out)["suites"][0].count("seconds") == 0);
  const auto t = call({"verify", "--timing", "--format", "json", "--suites", "genus"});
  CHECK(json::parse(t.out)["suites"][0].count("seconds") == 1);
}

TEST_CASE("csv verify output") {
  const auto r = call({"verify", "--suites", "genus", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("suite,id,anchor,status,detail\n", 0) == 0);
  CHECK(r.out.find("genus,exceptions p=2,") != std::string::npos);
}

TEST_CASE("table counts") {
  const auto r = call({"table", "counts", "--l", "7", "--p", "3", "--n", "1..2"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "l,p,n,c,cs,predicted_c,predicted_cs,match\n"
        "7,3,1,6,1,6,1,true\n"
        "7,3,2,12,2,12,2,true\n");
  const auto z = call({"table", "counts", "--l", "11", "--p", "0", "--n", "1..4", "--format", "json"});
  CHECK(z.code == 0);
  const auto j = json::parse(z.out);
  REQUIRE(j.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(j[i]["c"] == 2 * (i + 1));
    CHECK(j[i]["cs"] == 0);
  }
}

TEST_CASE("table genus exceptions") {
  const auto r = call({"table", "genus", "--p", "2", "--n", "3..20", "--format", "json"});
  CHECK(r.code == 0);
  std::vector<int> exc;
  for (const auto& row : json::parse(r.out)) {
    CHECK(row["match"] == true);
    if (!row["finite"].get<bool>()) exc.push_back(row["n"].get<int>());
  }
  CHECK(exc == std::vector<int>{3, 4, 5, 6, 8, 10, 12});
}

TEST_CASE("table zset: disagreements only where Phi_l is reducible") {
  const auto r = call({"--jobs", "2", "table", "zset", "--l", "5..23", "--p", "2..19", "--format", "json"});
  const auto j = json::parse(r.out);
  int bad = 0;
  for (const auto& row : j) {
    CHECK(row["agree"] == (row["full"] == row["predicate"]));
    if (!row["agree"].get<bool>()) {
      ++bad;
      CHECK(row["phi_l_irreducible"] == false);
    }
  }
  CHECK(bad == 9);
  CHECK(r.code == 1);
  const auto s = call({"table", "zset", "--l", "5..23", "--p", "2..19", "--format", "json"});
  CHECK(s.out == r.out);
}

TEST_CASE("nonclosure certificate round trip and tamper") {
  const auto path = temp_file("cert.json");
  const auto g = call({"nonclosure", "--n", "9", "--p", "3", "--count", "3", "--out", path.string()});
  REQUIRE(g.code == 0);
  std::ifstream in(path);
  json cert = json::parse(in);
  CHECK(cert["entries"].size() == 3);
  const auto ok = call({"recheck", path.string()});
  CHECK(ok.code == 0);

  cert["entries"][0]["A"] = cyclok2::algebra::BigInt(cyclok2::algebra::BigInt(cert["entries"][0]["A"].get<std::string>()) + 1).get_str();
  const auto bad_path = temp_file("tampered.json");
  std::ofstream(bad_path) << cert.dump();
  const auto bad = call({"recheck", bad_path.string(), "--format", "json"});
  CHECK(bad.code == 1);
  const auto j = json::parse(bad.out);
  bool named = false;
  for (const auto& c : j["suites"][0]["checks"]) named = named || (c["id"] == "A_construction" && c["status"] == "fail");
  CHECK(named);

  std::ofstream(bad_path) << "{not json";
  CHECK(call({"recheck", bad_path.string()}).code == 1);
  std::filesystem::remove(path);
  std::filesystem::remove(bad_path);
}

TEST_CASE("nonclosure to stdout and exhaustion") {
  const auto r = call({"nonclosure", "--n", "9", "--p", "3", "--count", "1"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["entries"].size() == 1);
  const auto e = call({"nonclosure", "--n", "9", "--p", "3", "--count", "3", "--max-k", "2", "--trial-limit", "100"});
  CHECK(e.code == 1);
  CHECK(e.err.find("search exhausted") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(call({}).code == 2);
  CHECK(call({"bogus"}).code == 2);
  CHECK(call({"verify", "--suites", "nope"}).code == 2);
  CHECK(call({"verify", "--format", "xml"}).code == 2);
  CHECK(call({"table", "zset", "--l", "5..x", "--p", "2"}).code == 2);
  CHECK(call({"table", "zset", "--l", "9..5", "--p", "2"}).code == 2);
  CHECK(call({"table", "zset", "--l", "5..7"}).code == 2);
  CHECK(call({"table", "widgets", "--l", "5"}).code == 2);
  CHECK(call({"nonclosure", "--n", "8", "--p", "2"}).code == 2);
  CHECK(call({"nonclosure", "--n", "9", "--p", "2"}).code == 2);
  CHECK(call({"nonclosure", "--p", "3"}).code == 2);
  CHECK(call({"recheck", "/nonexistent/cert.json"}).code == 2);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("parse_range") {
  using cyclok2::cli::parse_range;
  CHECK(parse_range("7") == std::vector<std::uint64_t>{7});
  CHECK(parse_range("1..3") == std::vector<std::uint64_t>{1, 2, 3});
  CHECK(parse_range("10..11,2,3") == std::vector<std::uint64_t>{2, 3, 10, 11});
  CHECK(parse_range("3,3") == std::vector<std::uint64_t>{3});
  for (const char* bad : {"", "a", "1..", "..2", "1...3", "-1", "2..1", "1,,2"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_range(bad), cyclok2::cli::RangeError);
  }
}
