#include <cstdlib>
#include <functional>
#include <set>

#include "cyclok2/k2tame/nonclosure.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace cyclok2;
using algebra::BigInt;
using k2tame::nonclosure_sequence;
using k2tame::recheck_nonclosure;

namespace {

// x^6 + x^3 + 1
BigInt phi9(const BigInt& x) { return x * x * x * x * x * x + x * x * x + 1; }

std::string tamper(const std::string& json, const std::function<void(nlohmann::json&)>& edit) {
  auto j = nlohmann::json::parse(json);
  edit(j);
  return j.dump();
}

}  // namespace

TEST_CASE("nonclosure n = 9, p = 3, count = 1") {
  const auto c = nonclosure_sequence(9, 3, 1);
  REQUIRE(c.entries.size() == 1);
  const auto& e = c.entries[0];
  const BigInt v = phi9(e.A);
  CHECK(v % e.prime == 0);
  CHECK(v % (e.prime * e.prime) != 0);
  CHECK(c.m0 == 19683);
  CHECK(c.N == 20);
  CHECK(e.residues.size() == 2);
}

TEST_CASE("nonclosure n = 9, p = 3, count = 3: cross conditions") {
  const auto c = nonclosure_sequence(9, 3, 3);
  REQUIRE(c.entries.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& e = c.entries[i];
    CHECK(phi9(e.A) % e.prime == 0);
    CHECK(phi9(e.A) % (e.prime * e.prime) != 0);
    for (std::size_t j = 0; j < i; ++j) {
      CHECK(c.entries[j].A % e.prime != 0);
      CHECK(phi9(c.entries[j].A) % e.prime != 0);
    }
    for (unsigned long j = 1; j <= 2; ++j) {
      BigInt r;
      const BigInt ex(3 * j);
      mpz_powm(r.get_mpz_t(), e.A.get_mpz_t(), ex.get_mpz_t(), e.prime.get_mpz_t());
      CHECK(r != 1);
      CHECK(r == e.residues[j - 1]);
    }
  }
  const auto report = recheck_nonclosure(k2tame::to_json(c));
  CHECK(report.ok());
  CHECK(report.first_failure().empty());
  CHECK(report.checks.size() == 11);
}

TEST_CASE("nonclosure preconditions") {
  for (std::uint64_t n : {1, 4, 8, 12}) CHECK_THROWS_AS(nonclosure_sequence(n, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(nonclosure_sequence(18, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(nonclosure_sequence(9, 4, 1), std::invalid_argument);
  CHECK_THROWS_AS(nonclosure_sequence(9, 3, 0), std::invalid_argument);
}

TEST_CASE("nonclosure search limits") {
  k2tame::SearchLimits tiny;
  tiny.factor.trial_limit = 30;
  tiny.factor.rho_iterations = 0;
  tiny.max_k = 3;
  try {
    nonclosure_sequence(9, 3, 1, tiny);
    FAIL("expected SearchExhausted");
  } catch (const k2tame::SearchExhausted& e) {
    CHECK(e.entries_found == 0);
    CHECK(e.last_k == 3);
  }
  k2tame::SearchLimits small_m;
  small_m.max_digits = 100;
  try {
    nonclosure_sequence(9, 3, 3, small_m);
    FAIL("expected SearchExhausted");
  } catch (const k2tame::SearchExhausted& e) {
    CHECK(e.entries_found == 1);
  }

  ::setenv("CYCLOK2_TRIAL_LIMIT", "1234", 1);
  ::setenv("CYCLOK2_RHO_LIMIT", "0", 1);
  const auto env = k2tame::SearchLimits::from_env();
  CHECK(env.factor.trial_limit == 1234);
  CHECK(env.factor.rho_iterations == 0);
  ::unsetenv("CYCLOK2_TRIAL_LIMIT");
  ::unsetenv("CYCLOK2_RHO_LIMIT");
}

TEST_CASE("property: certificates for other (n, p) recheck") {
  const std::vector<std::pair<std::uint64_t, std::uint64_t>> cases{{9, 3}, {16, 2}, {18, 3}, {25, 5}, {20, 2}, {27, 3}};
  for (const auto& [n, p] : cases) {
    CAPTURE(n);
    const auto c = nonclosure_sequence(n, p, 2);
    const auto r = recheck_nonclosure(k2tame::to_json(c));
    CHECK(r.ok());
  }
}

TEST_CASE("tampered certificates fail with a named invariant") {
  const std::string good = k2tame::to_json(nonclosure_sequence(9, 3, 3));
  REQUIRE(recheck_nonclosure(good).ok());

  auto fails_with = [&](const std::function<void(nlohmann::json&)>& edit) {
    return recheck_nonclosure(tamper(good, edit)).first_failure();
  };
  auto failing = [&](const std::function<void(nlohmann::json&)>& edit) {
    std::set<std::string> out;
    for (const auto& c : recheck_nonclosure(tamper(good, edit)).checks) {
      if (!c.ok) out.insert(c.name);
    }
    return out;
  };
  auto bump = [](nlohmann::json& v) { v = BigInt(BigInt(v.get<std::string>()) + 1).get_str(); };

  CHECK(fails_with([&](nlohmann::json& j) { bump(j["entries"][0]["A"]); }) == "A_construction");
  CHECK(fails_with([&](nlohmann::json& j) { bump(j["entries"][1]["prime"]); }) == "prime");
  CHECK(fails_with([&](nlohmann::json& j) { bump(j["entries"][2]["exponent_checks"][1]["residue"]); }) ==
        "exponent_table");
  CHECK(fails_with([&](nlohmann::json& j) { bump(j["m0"]); }) == "m0_resultant");
  CHECK(failing([&](nlohmann::json& j) { bump(j["entries"][2]["M"]); }).count("M_chain") == 1);
  CHECK(fails_with([&](nlohmann::json& j) { j["entries"][0]["adjusted"] = true; }) == "A_construction");
  CHECK(fails_with([&](nlohmann::json& j) { j["n"] = "8"; }) == "parameters");
  CHECK(fails_with([&](nlohmann::json& j) { j["entries"][0]["k"] = 7; }) == "format");
  CHECK(failing([&](nlohmann::json& j) {
          j["entries"][1]["prime"] = j["entries"][0]["prime"];
        }).count("prime") == 1);
  CHECK(recheck_nonclosure("{not json").first_failure() == "format");
}

TEST_CASE("certificate JSON uses decimal strings") {
  const auto j = nlohmann::json::parse(k2tame::to_json(nonclosure_sequence(9, 3, 1)));
  CHECK(j["n"] == "9");
  CHECK(j["p"] == "3");
  CHECK(j["m0"] == "19683");
  CHECK(j["entries"][0]["index"] == "1");
  CHECK(j["entries"][0]["A"].is_string());
  CHECK(j["entries"][0]["exponent_checks"].size() == 2);
}
