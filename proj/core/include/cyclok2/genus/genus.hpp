#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cyclok2/algebra/rational.hpp"

namespace cyclok2::genus {

using algebra::Rational;

class InconsistentProfile : public std::domain_error {
 public:
  explicit InconsistentProfile(const std::string& what) : std::domain_error(what) {}
};

struct Place {
  std::uint64_t r = 1;       // gcd(m, v_P(u))
  std::uint64_t degree = 1;  // deg P
};

/// 1 + m/[k':k] (g(K) - 1 + 1/2 sum (1 - r_P/m) deg P), exactly.
/// Throws InconsistentProfile when the value is not a nonnegative integer.
Rational kummer_genus(std::uint64_t m, const std::vector<Place>& profile, std::uint64_t base_genus,
                      std::uint64_t constant_degree);

/// Places of F(x) that can ramify in y^p = Phi_n(x) over an algebraically
/// closed constant field: phi(n) simple zeros and the place at infinity.
struct RamificationProfile {
  std::uint64_t n = 0, p = 0;
  std::uint64_t phi_n = 0;
  std::uint64_t branch_points = 0;  // all with r = 1
  std::uint64_t infinite_r = 0;     // gcd(p, phi(n))

  std::vector<Place> places() const;
};

/// Requires n >= 3 and n <= 10^6.
RamificationProfile ramification_profile(std::uint64_t n, std::uint64_t p);

/// 1 + p (-1 + phi(n)(1 - 1/p)/2 + (1 - gcd(p, phi(n))/p)/2).
std::int64_t genus_curve(std::uint64_t n, std::uint64_t p);

struct Finiteness {
  std::uint64_t n = 0, p = 0;
  std::int64_t genus = 0;
  std::uint64_t lhs = 0;  // phi(n)(p - 1)
  std::uint64_t rhs = 0;  // p + gcd(p, phi(n))
  /// lhs > rhs: genus >= 2, so finitely many rational points.
  bool finite() const { return lhs > rhs; }
};

Finiteness finiteness_classifier(std::uint64_t n, std::uint64_t p);

/// n in [3, n_max] for which the inequality fails.
std::vector<std::uint64_t> finiteness_exceptions(std::uint64_t p, std::uint64_t n_max);

std::string to_json(const Finiteness& f);

}  // namespace cyclok2::genus
