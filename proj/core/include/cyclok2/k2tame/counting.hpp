#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>

#include "cyclok2/algebra/ratfunc.hpp"

namespace cyclok2::k2tame {

/// The residues t in [2, l-2] with t = +-p^{2m} (mod l) for some m >= 0.
struct ZSet {
  int l = 0;
  std::uint64_t p = 0;
  std::set<int> members;
};

/// m runs over one full period of p^2 modulo l.
ZSet zset(int l, std::uint64_t p);

/// |zset(l, p)| == l - 3.
bool zset_is_full(int l, std::uint64_t p);

/// l = 3 (mod 4) and p is a primitive root of l.
bool lemma_514_predicate(int l, std::uint64_t p);

/// c_l(x)^t = c_l(x^k) with k = sign * p^m; k = +-1 covers t in {1, l-1}.
struct PowerWitness {
  int sign = 1;
  int m = 0;
  long exponent = 1;  // sign * p^m
  std::string describe() const;  // "x", "1/x", "x^9", "x^(-3)"
};

struct PowerClass {
  bool cyclotomic = false;
  std::optional<PowerWitness> witness;
};

/// p = 0 means characteristic zero. Requires 1 <= t <= l - 1.
PowerClass power_classification(int l, std::uint64_t p, int t);

/// Checks c_l(x)^t = c_l(witness) over F_p(x): the Frobenius identity
/// Phi_l(x^{p^m}) = Phi_l(x)^{p^m} by expansion and equality of tame symbols
/// at every prime where either side can be ramified.
bool verify_power_witness(int l, std::uint64_t p, int t, const PowerWitness& w);

struct CycloCount {
  long c = 0;   // nontrivial cyclotomic elements
  long cs = 0;  // nontrivial cyclotomic subgroups
};

/// Counts for the group generated by n pairwise essentially distinct linear
/// cyclotomic elements of level l. Requires 1 <= n <= (l-3)/2, a prime l >= 5,
/// p != l, and Phi_l irreducible over F_p when p > 0.
CycloCount count_cyclotomic(int l, int n, std::uint64_t p);

}  // namespace cyclok2::k2tame
