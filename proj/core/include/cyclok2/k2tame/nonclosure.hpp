#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclok2/arith/primes.hpp"

namespace cyclok2::k2tame {

using algebra::BigInt;

/// One step of the sequence over Q: p_i exactly divides Phi_n(A_i), where
/// A_i = k_i M_i, or k_i M_i + p_i when p_i^2 | Phi_n(k_i M_i).
struct NonClosureEntry {
  BigInt k;
  BigInt M;
  BigInt prime;                 // p_i
  unsigned valuation_at_kM = 0; // v_{p_i}(Phi_n(k_i M_i))
  bool adjusted = false;
  BigInt A;
  std::vector<BigInt> residues; // A_i^{p j} mod p_i for j = 1 .. n/p - 1
};

struct NonClosureCertificate {
  std::uint64_t n = 0;
  std::uint64_t p = 0;
  std::uint64_t N = 0;  // every prime <= N divides M_1
  BigInt m0;            // |res(Phi_n, Phi_n')|
  std::vector<NonClosureEntry> entries;
};

struct SearchLimits {
  /// Candidate primes q = 1 mod n are scanned up to factor.trial_limit; when
  /// none divides Phi_n(k M), factor.rho_iterations of Pollard rho are spent
  /// on values below 2^1024.
  arith::FactorLimits factor;
  std::uint64_t max_k = 10'000;
  std::size_t max_digits = 200'000;  // cap on the decimal size of M_i
  std::uint64_t cutoff = 0;          // N; 0 selects max(n, p, 20)

  /// factor limits from CYCLOK2_TRIAL_LIMIT and CYCLOK2_RHO_LIMIT.
  static SearchLimits from_env();
};

class SearchExhausted : public std::runtime_error {
 public:
  SearchExhausted(const std::string& what, std::size_t found, std::uint64_t last_k)
      : std::runtime_error(what), entries_found(found), last_k(last_k) {}
  std::size_t entries_found;
  std::uint64_t last_k;
};

/// Requires p prime, p^2 | n, n not in {1, 4, 8, 12}, count >= 1.
NonClosureCertificate nonclosure_sequence(std::uint64_t n, std::uint64_t p, std::size_t count,
                                          const SearchLimits& limits = {});

/// All integers are decimal strings.
std::string to_json(const NonClosureCertificate& c);

struct InvariantCheck {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct RecheckReport {
  std::vector<InvariantCheck> checks;

  bool ok() const;
  /// Name of the first failing invariant, empty when all pass.
  std::string first_failure() const;
};

/// Re-verifies a serialized certificate from scratch with plain GMP integer
/// arithmetic; shares no code with the generator. Invariant names:
///   format, parameters, m0_resultant, M1_small_primes, M_chain,
///   A_construction, prime, exact_division, cross_conditions,
///   exponent_table, psi_conclusion
RecheckReport recheck_nonclosure(const std::string& json);

}  // namespace cyclok2::k2tame
