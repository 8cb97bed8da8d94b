#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cyclok2/algebra/rational.hpp"

namespace cyclok2::arith {

using algebra::BigInt;

/// Effort caps for integer factoring. Defaults: 10^6 trial divisions and
/// 10^5 Pollard rho iterations per cofactor.
struct FactorLimits {
  std::uint64_t trial_limit = 1'000'000;
  std::uint64_t rho_iterations = 100'000;

  /// Defaults overridden by CYCLOK2_TRIAL_LIMIT and CYCLOK2_RHO_LIMIT.
  static FactorLimits from_env();
};

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(std::uint64_t n);
/// Deterministic below 2^64, BPSW-strength probabilistic above.
bool is_prime(const BigInt& n);

std::vector<std::uint64_t> primes_up_to(std::uint64_t n);

struct IntFactorization {
  std::vector<std::pair<BigInt, unsigned>> factors;  // ascending primes
  BigInt cofactor = 1;  // composite part left unfactored; 1 when complete

  bool complete() const { return cofactor == 1; }
};

/// Factors |n| (n != 0) by trial division then Pollard rho (Brent).
IntFactorization factor_integer(const BigInt& n, const FactorLimits& limits = {});

/// One nontrivial factor of the composite n, or 0 when the budget runs out.
BigInt pollard_rho(const BigInt& n, std::uint64_t iterations, std::uint64_t seed = 1);

/// Positive divisors of a completely factored number, ascending.
std::vector<BigInt> divisors(const IntFactorization& f);

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);

/// Multiplicative order of a modulo m; requires gcd(a, m) = 1 and m > 1.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m);

std::uint64_t euler_phi(std::uint64_t n);

/// v_p(n) for n != 0.
unsigned valuation(const BigInt& n, const BigInt& p);

}  // namespace cyclok2::arith
