#include <numeric>

#include "cyclok2/arith/primes.hpp"
#include "cyclok2/genus/genus.hpp"
#include "doctest.h"
#include "printers.hpp"

using namespace cyclok2;
using genus::Place;
using genus::Rational;

namespace {

// Riemann-Hurwitz for a degree p cover of P^1: each branch place with r_P
// places above it and index p / r_P adds p - r_P to 2g - 2 + 2p.
std::int64_t hurwitz_genus(std::uint64_t n, std::uint64_t p) {
  std::uint64_t phi = 0;
  for (std::uint64_t k = 1; k <= n; ++k) phi += std::gcd(k, n) == 1 ? 1 : 0;
  const auto r_inf = static_cast<std::int64_t>(std::gcd(p, phi));
  const auto P = static_cast<std::int64_t>(p);
  const std::int64_t twice = -2 * P + static_cast<std::int64_t>(phi) * (P - 1) + (P - r_inf) + 2;
  REQUIRE(twice % 2 == 0);
  return twice / 2;
}

}  // namespace

TEST_CASE("kummer_genus examples") {
  std::vector<Place> phi5(4, Place{1, 1});
  phi5.push_back(Place{2, 1});
  CHECK(genus::kummer_genus(2, phi5, 0, 1) == Rational(1));
  std::vector<Place> phi7(6, Place{1, 1});
  phi7.push_back(Place{2, 1});
  CHECK(genus::kummer_genus(2, phi7, 0, 1) == Rational(2));
  CHECK_THROWS_AS(genus::kummer_genus(5, {}, 0, 1), genus::InconsistentProfile);
  CHECK_THROWS_AS(genus::kummer_genus(2, {Place{1, 1}}, 0, 1), genus::InconsistentProfile);
  CHECK_THROWS_AS(genus::kummer_genus(1, phi5, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(genus::kummer_genus(4, {Place{3, 1}}, 0, 1), std::invalid_argument);
}

TEST_CASE("genus_curve examples") {
  CHECK(genus::genus_curve(5, 2) == 1);
  CHECK(genus::genus_curve(7, 2) == 2);
  CHECK(genus::genus_curve(3, 5) == 2);
  CHECK_THROWS_AS(genus::genus_curve(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(genus::genus_curve(9, 4), std::invalid_argument);
}

TEST_CASE("finiteness_classifier examples") {
  CHECK_FALSE(genus::finiteness_classifier(5, 2).finite());
  CHECK_FALSE(genus::finiteness_classifier(6, 3).finite());
  const auto f93 = genus::finiteness_classifier(9, 3);
  CHECK(f93.finite());
  CHECK(f93.lhs == 12);
  CHECK(f93.rhs == 6);
  CHECK(genus::to_json(f93) == R"({"n":9,"p":3,"genus":4,"lhs":12,"rhs":6,"finite":true})");
}

TEST_CASE("property: closed form, general formula and Riemann-Hurwitz agree") {
  for (std::uint64_t p : {2, 3, 5, 7}) {
    for (std::uint64_t n = 3; n <= 60; ++n) {
      CAPTURE(n);
      CAPTURE(p);
      const auto g = genus::genus_curve(n, p);
      const auto profile = genus::ramification_profile(n, p);
      CHECK(genus::kummer_genus(p, profile.places(), 0, 1) == Rational(g));
      CHECK(g == hurwitz_genus(n, p));
      CHECK(genus::finiteness_classifier(n, p).finite() == (g >= 2));
    }
  }
}

TEST_CASE("property: exception sets up to n = 200") {
  CHECK(genus::finiteness_exceptions(2, 200) == std::vector<std::uint64_t>{3, 4, 5, 6, 8, 10, 12});
  CHECK(genus::finiteness_exceptions(3, 200) == std::vector<std::uint64_t>{3, 4, 6});
  for (std::uint64_t p : arith::primes_up_to(50)) {
    if (p >= 5) CHECK(genus::finiteness_exceptions(p, 200).empty());
  }
}
