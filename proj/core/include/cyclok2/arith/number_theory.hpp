#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cyclok2/algebra/poly.hpp"
#include "cyclok2/arith/primes.hpp"
#include "cyclok2/factorx/q.hpp"

namespace cyclok2::arith {

/// ord_l(p) == l - 1. Throws std::invalid_argument when l is not prime or l | p.
bool is_primitive_root(long long p, std::uint64_t l);

class FactoringEffortExceeded : public std::runtime_error {
 public:
  explicit FactoringEffortExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Smallest prime dividing a^n + b^n but no a^k + b^k with 1 <= k < n.
/// `primitive_prime` is empty exactly for the exception 2^3 + 1^3.
struct ZsigmondyResult {
  std::uint64_t a = 0, b = 0, n = 0;
  BigInt value;  // a^n + b^n
  std::optional<BigInt> primitive_prime;

  bool exception() const { return !primitive_prime; }
};

/// Requires a > b > 0, gcd(a, b) = 1, n > 1. Throws FactoringEffortExceeded
/// when a^n + b^n is not completely factored within `limits`.
ZsigmondyResult zsigmondy(std::uint64_t a, std::uint64_t b, std::uint64_t n, const FactorLimits& limits = {});

/// Direct recheck: q | a^n + b^n and q divides no earlier term.
bool is_primitive_divisor(std::uint64_t a, std::uint64_t b, std::uint64_t n, const BigInt& q);

/// x^n + x + 1 over Q. For n = 2 mod 3, n > 2, the factor x^2 + x + 1 is divided out
/// and the irreducibility certificate refers to the cofactor.
struct SelmerResult {
  int n = 0;
  bool quadratic_factor = false;
  algebra::QPoly cofactor;
  factorx::IrreducibilityCertificate certificate;

  /// false when the certificate is inconclusive: irreducibility then rests on
  /// Selmer's theorem only.
  bool certified() const { return certificate.irreducible(); }
  std::string describe() const;
};

SelmerResult selmer_check(int n, const factorx::IrreducibilityOptions& opt = {});

/// Integer points of x^4 + x^3 y + x^2 (y^2-1) + x y (y^2-1) + (y^2-1)^2 = 0.
std::int64_t quartic_71(std::int64_t x, std::int64_t y);

struct Diophantine71 {
  std::int64_t bound = 0;
  std::vector<std::pair<std::int64_t, std::int64_t>> solutions;  // sorted
  /// For y = +-1 the quartic is x^3 (x +- 1); these roots are listed here.
  std::vector<std::pair<std::int64_t, std::int64_t>> unit_row_roots;
  /// No solution found in the scanned box with y^2 != 1.
  bool off_unit_rows_empty = true;
};

/// Exhaustive scan of |x|, |y| <= bound. Requires bound >= 1.
Diophantine71 diophantine_71(std::int64_t bound, unsigned jobs = 1);

/// Expands both sides of
///   x^4 + x^3 y + x^2 (y^2+1) + x y (y^2+1) + (y^2+1)^2
///   = (x^4 + x^3 y + x^2 y^2 + x y^3 + y^4) + (x^2 + x y + y^2) + (y^2 + 1)
/// in Q[y][x] and compares.
bool lemma_72_identity();

/// Both sides of the same identity evaluated at an integer point.
std::pair<BigInt, BigInt> lemma_72_sides(const BigInt& x, const BigInt& y);

}  // namespace cyclok2::arith
