#include <algorithm>
#include <random>
#include <vector>

#include "cyclok2/algebra.hpp"
#include "cyclok2/arith/primes.hpp"
#include "cyclok2/factorx/fp.hpp"
#include "cyclok2/factorx/q.hpp"
#include "doctest.h"

using namespace cyclok2;
using algebra::FpPoly;
using algebra::PrimeField;
using algebra::QPoly;
using algebra::RationalField;

namespace {

const RationalField QQ{};

FpPoly fp(const PrimeField& f, std::initializer_list<long> c) { return FpPoly::from_ints(f, c); }
QPoly q(std::initializer_list<long> c) { return QPoly::from_ints(QQ, c); }

FpPoly random_fp(const PrimeField& f, std::mt19937_64& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<std::uint64_t> coef(0, f.modulus() - 1);
  while (true) {
    std::vector<std::uint64_t> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c) x = coef(rng);
    FpPoly p(f, c);
    if (!p.is_zero()) return p;
  }
}

// All monic polynomials of degree d over F_p.
std::vector<FpPoly> monics(const PrimeField& f, int d) {
  std::vector<FpPoly> out;
  const std::uint64_t p = f.modulus();
  std::uint64_t total = 1;
  for (int i = 0; i < d; ++i) total *= p;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<std::uint64_t> c(static_cast<std::size_t>(d) + 1, 0);
    std::uint64_t k = code;
    for (int i = 0; i < d; ++i) {
      c[static_cast<std::size_t>(i)] = k % p;
      k /= p;
    }
    c.back() = 1;
    out.emplace_back(f, c);
  }
  return out;
}

// Irreducible iff no monic factor of degree 1..deg/2 divides.
bool irreducible_by_trial(const FpPoly& g) {
  for (int d = 1; 2 * d <= g.degree(); ++d) {
    for (const auto& h : monics(g.ring(), d)) {
      if ((g % h).is_zero()) return false;
    }
  }
  return g.degree() >= 1;
}

}  // namespace

TEST_CASE("factor_fp: cyclotomic 7 over F_3 is irreducible") {
  const PrimeField f3(3);
  const auto fac = factorx::factor_fp(fp(f3, {1, 1, 1, 1, 1, 1, 1}));
  REQUIRE(fac.factors.size() == 1);
  CHECK(fac.factors[0].first.degree() == 6);
  CHECK(fac.factors[0].second == 1);
}

TEST_CASE("factor_fp: x^5 + x + 1 over F_2 against trial division") {
  const PrimeField f2(2);
  const FpPoly target = fp(f2, {1, 1, 0, 0, 0, 1});
  // Oracle: every monic irreducible of degree <= 3 tried as a divisor.
  std::vector<FpPoly> found;
  FpPoly rest = target;
  for (int d = 1; d <= 3; ++d) {
    for (const auto& h : monics(f2, d)) {
      if (!irreducible_by_trial(h)) continue;
      while ((rest % h).is_zero()) {
        found.push_back(h);
        rest = rest / h;
      }
    }
  }
  CHECK(rest.degree() == 0);
  REQUIRE(found.size() == 2);
  CHECK(found[0] == fp(f2, {1, 1, 1}));
  // (x^2 + x + 1)(x^3 + x + 1) = x^5 + x^4 + 1, so the cubic is x^3 + x^2 + 1.
  CHECK(found[1] == fp(f2, {1, 0, 1, 1}));
  CHECK(fp(f2, {1, 1, 1}) * fp(f2, {1, 1, 0, 1}) == fp(f2, {1, 0, 0, 0, 1, 1}));

  const auto fac = factorx::factor_fp(target);
  REQUIRE(fac.factors.size() == 2);
  CHECK(fac.factors[0].first == found[0]);
  CHECK(fac.factors[1].first == found[1]);
  CHECK(fac.str() == "(x^2 + x + 1) * (x^3 + x^2 + 1)");
}

TEST_CASE("factor_fp: x^p - x splits into all linear factors") {
  for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    const PrimeField f(p);
    const FpPoly xp = FpPoly::monomial(f, 1, p) - FpPoly::x(f);
    const auto fac = factorx::factor_fp(xp);
    REQUIRE(fac.factors.size() == p);
    // Sorted by constant term, so the a-th factor is x + a.
    for (std::uint64_t a = 0; a < p; ++a) {
      CHECK(fac.factors[a].first == FpPoly::x(f) + FpPoly::constant(f, a));
      CHECK(fac.factors[a].second == 1);
    }
  }
}

TEST_CASE("factor_fp: zero input is rejected") {
  const PrimeField f3(3);
  CHECK_THROWS(factorx::factor_fp(FpPoly(f3)));
}

TEST_CASE("property: factorization reassembles and factors pass the order test") {
  std::mt19937_64 rng(11);
  int count = 0;
  for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u}) {
    const PrimeField f(p);
    for (int trial = 0; trial < 100; ++trial, ++count) {
      const FpPoly g = random_fp(f, rng, 24);
      const auto fac = factorx::factor_fp(g, static_cast<std::uint64_t>(trial));
      REQUIRE(fac.expand(f) == g);
      for (std::size_t i = 0; i < fac.factors.size(); ++i) {
        const auto& h = fac.factors[i].first;
        CHECK(h.is_monic());
        for (std::size_t j = i + 1; j < fac.factors.size(); ++j) CHECK_FALSE(fac.factors[j].first == h);
        // x^{p^d} = x mod h at d = deg h and at no smaller d.
        const FpPoly X = FpPoly::x(f);
        FpPoly fr = X;
        for (int d = 1; d <= h.degree(); ++d) {
          fr = algebra::powmod(fr, p, h);
          const bool fixed = ((fr - X) % h).is_zero();
          CHECK(fixed == (d == h.degree()));
        }
      }
    }
  }
  CHECK(count == 500);
}

TEST_CASE("property: factorization does not depend on the seed") {
  std::mt19937_64 rng(5);
  for (std::uint64_t p : {2u, 3u, 7u}) {
    const PrimeField f(p);
    for (int trial = 0; trial < 30; ++trial) {
      const FpPoly g = random_fp(f, rng, 20);
      const auto a = factorx::factor_fp(g, 0);
      const auto b = factorx::factor_fp(g, 977 + static_cast<std::uint64_t>(trial));
      CHECK(a.str() == b.str());
    }
  }
}

TEST_CASE("factorx irreducibility helpers") {
  const PrimeField f2(2);
  CHECK(factorx::is_irreducible_fp(fp(f2, {1, 1, 1})));
  CHECK_FALSE(factorx::is_irreducible_fp(fp(f2, {1, 0, 1})));
  CHECK_THROWS_AS(factorx::certified_ideal(fp(f2, {1, 0, 1})), std::invalid_argument);
  const auto sq = factorx::squarefree_decomposition(fp(f2, {1, 0, 1}).pow(3) * fp(f2, {1, 1, 1}));
  FpPoly back = FpPoly::constant(f2, 1);
  for (const auto& [part, m] : sq) back *= part.pow(static_cast<std::uint64_t>(m));
  CHECK(back == fp(f2, {1, 0, 1}).pow(3) * fp(f2, {1, 1, 1}));
}

TEST_CASE("newton_polygon examples") {
  SUBCASE("x^5 + x^4 + 2 at 2") {
    const auto np = factorx::newton_polygon(q({2, 0, 0, 0, 1, 1}), 2);
    const std::vector<std::pair<int, int>> v{{0, 1}, {4, 0}, {5, 0}};
    CHECK(np.vertices == v);
    REQUIRE(np.slopes.size() == 2);
    CHECK(np.slopes[0] == algebra::Rational(algebra::BigInt(1), algebra::BigInt(4)));
    CHECK(np.slopes[1] == algebra::Rational(0L));
  }
  SUBCASE("x^2 + p") {
    for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
      const auto np = factorx::newton_polygon(q({static_cast<long>(p), 0, 1}), p);
      REQUIRE(np.slopes.size() == 1);
      CHECK(np.slopes[0] == algebra::Rational(algebra::BigInt(1), algebra::BigInt(2)));
    }
  }
  SUBCASE("x^3 + 4x + 2 at 2") {
    const auto np = factorx::newton_polygon(q({2, 4, 0, 1}), 2);
    // Oracle: points (0,1), (1,2), (3,0); (1,2) lies above the chord from (0,1) to (3,0).
    const std::vector<std::pair<int, int>> v{{0, 1}, {3, 0}};
    CHECK(np.vertices == v);
  }
  CHECK_THROWS(factorx::newton_polygon(q({0, 1, 1}), 2));
}

TEST_CASE("property: Newton side lengths sum to the degree") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> c(-40, 40);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<long> co(static_cast<std::size_t>(2 + trial % 9));
    for (auto& x : co) x = c(rng);
    if (co.front() == 0) co.front() = 6;
    if (co.back() == 0) co.back() = 1;
    QPoly f(QQ, std::vector<algebra::Rational>(co.begin(), co.end()));
    for (std::uint64_t p : {2u, 3u, 5u}) {
      const auto np = factorx::newton_polygon(f, p);
      int total = 0;
      for (int len : np.lengths) total += len;
      CHECK(total == f.degree());
      for (std::size_t k = 1; k < np.slopes.size(); ++k) CHECK(np.slopes[k] < np.slopes[k - 1]);
    }
  }
}

TEST_CASE("is_irreducible_q examples") {
  const auto a = factorx::is_irreducible_q(q({1, 1, 0, 0, 0, 0, 0, 1}));
  CHECK(a.verdict == factorx::Verdict::Irreducible);
  CHECK(factorx::check_certificate(q({1, 1, 0, 0, 0, 0, 0, 1}), a));

  const auto b = factorx::is_irreducible_q(q({1, 1, 0, 0, 0, 1}));
  CHECK(b.verdict == factorx::Verdict::Reducible);
  REQUIRE(b.factor.has_value());
  const QPoly fac = factorx::primitive_integer_part(*b.factor);
  CHECK((fac == q({1, 1, 1}) || fac == q({1, -1, 0, 1})));
  CHECK((q({1, 1, 0, 0, 0, 1}) % *b.factor).is_zero());

  const auto c = factorx::is_irreducible_q(q({1, 0, -1, 1}));
  CHECK(c.irreducible());
  CHECK(factorx::check_certificate(q({1, 0, -1, 1}), c));

  // (x^2 + 1)^2 + x has no modular shortcut at every prime; any verdict must be right.
  const auto d = factorx::is_irreducible_q(q({1, 1, 2, 0, 1}));
  CHECK(d.verdict != factorx::Verdict::Reducible);

  // (x^4 + 1)(x^4 + 3): reducible with no rational root, found by search.
  const auto e = factorx::is_irreducible_q(q({1, 0, 0, 0, 1}) * q({3, 0, 0, 0, 1}));
  CHECK(e.verdict == factorx::Verdict::Reducible);
}

TEST_CASE("is_irreducible_q agrees with products of known irreducibles") {
  std::mt19937_64 rng(17);
  const std::vector<QPoly> pieces{q({1, 1, 1}), q({2, 0, 1}), q({-1, -1, 0, 1}), q({1, 0, 0, 0, 1}),
                                  q({3, 1}), q({1, 1, 0, 0, 0, 0, 0, 1})};
  for (const auto& a : pieces) {
    CHECK(factorx::is_irreducible_q(a).irreducible());
    for (const auto& b : pieces) {
      if (a.degree() + b.degree() > 8) continue;
      const auto cert = factorx::is_irreducible_q(a * b);
      CHECK(cert.verdict == factorx::Verdict::Reducible);
      CHECK(factorx::check_certificate(a * b, cert));
    }
  }
}

TEST_CASE("arith primes") {
  using namespace cyclok2::arith;
  CHECK(is_prime(std::uint64_t{2}));
  CHECK_FALSE(is_prime(std::uint64_t{1}));
  CHECK(is_prime(std::uint64_t{18446744073709551557ull}));
  CHECK_FALSE(is_prime(std::uint64_t{3215031751ull}));
  CHECK(primes_up_to(30) == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
  CHECK(multiplicative_order(2, 7) == 3);
  CHECK(multiplicative_order(3, 7) == 6);
  CHECK_THROWS(multiplicative_order(7, 14));
  CHECK(euler_phi(36) == 12);
  CHECK(valuation(BigInt(96), BigInt(2)) == 5);

  // Sieve-free oracle for primality below 2000.
  for (std::uint64_t n = 0; n < 2000; ++n) {
    bool oracle = n >= 2;
    for (std::uint64_t d = 2; d * d <= n; ++d) oracle = oracle && n % d != 0;
    CHECK(is_prime(n) == oracle);
  }

  const BigInt big = BigInt("1000000007") * BigInt("998244353") * 12;
  const auto fac = factor_integer(big);
  CHECK(fac.complete());
  BigInt back = 1;
  for (const auto& [pr, e] : fac.factors) {
    CHECK(is_prime(pr));
    for (unsigned i = 0; i < e; ++i) back *= pr;
  }
  CHECK(back == big);
  const auto divs = divisors(factor_integer(BigInt(36)));
  CHECK(divs.size() == 9);
  CHECK(divs.back() == 36);

  // A tiny trial limit with no rho budget leaves a cofactor.
  const auto partial = factor_integer(BigInt("1000000007") * BigInt("998244353"), FactorLimits{10, 0});
  CHECK_FALSE(partial.complete());
}
