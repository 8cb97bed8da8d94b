#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyclok2/cyclo/decompose.hpp"
#include "cyclok2/moebius/mat2.hpp"

namespace cyclok2::k2tame {

using algebra::FpPoly;
using algebra::PrimeField;
using moebius::Mat2;

/// c_l(F/G) with (F, G) = (f^{p^s}, g^{p^s}) equals
/// prod c_l(A_i)^{signature_i}. (f, g) is the descended core: coprime, f monic,
/// not both in F_p[x^p], max degree within the search bound.
struct Witness {
  FpPoly f;
  FpPoly g;
  int s = 0;
  std::vector<int> signature;  // exponents in [0, l) per generator
  std::vector<int> r;          // v_{P_i}(Phi_l(f, g))
  cyclo::Decomposition decomposition;

  FpPoly lifted_f() const;
  FpPoly lifted_g() const;
  std::string describe() const;  // "f = x^3, g = 1"
};

struct SearchStats {
  std::uint64_t candidates = 0;     // (f, g) pairs produced by the CRT enumeration
  std::uint64_t descended = 0;      // skipped because f' = g' = 0
  std::uint64_t coprime = 0;
  std::uint64_t valuation_ok = 0;   // l does not divide any r_i
  std::uint64_t residual_ok = 0;    // residual is alpha * Psi^l
  std::uint64_t decomposed = 0;     // confirmed by decompose_form
  double seconds = 0;

  SearchStats& operator+=(const SearchStats& o);
};

/// Least witness (by s, core degree, then coefficients) for every reachable
/// signature with all entries nonzero.
struct Reachability {
  int l = 0;
  std::uint64_t p = 0;
  int degree_bound = 0;
  std::map<std::vector<int>, Witness> witnesses;
  SearchStats stats;
};

/// Every (f, g) with f monic, g nonzero, gcd 1 and core degree <= degree_bound
/// for which every generator form divides Phi_l(f, g) is examined; the result
/// is complete for signatures with no zero entry. Requires Phi_l irreducible
/// mod p and pairwise essentially distinct generators. `jobs` splits the g
/// range across threads; the result does not depend on it.
Reachability reachable_signatures(int l, std::uint64_t p, const std::vector<Mat2<PrimeField>>& generators,
                                  int degree_bound, unsigned jobs = 1);

struct BruteForceResult {
  std::optional<Witness> witness;  // none means certified absent within the bound
  int degree_bound = 0;
  SearchStats stats;
};

/// Is prod c_l(A_i)^{e_i} cyclotomic? Exponents lie in [1, l-1].
BruteForceResult brute_force_cyclotomicity(int l, std::uint64_t p, const std::vector<Mat2<PrimeField>>& generators,
                                           const std::vector<int>& exponents, int degree_bound, unsigned jobs = 1);

/// Independent check of a witness through tame symbols: c_l(F/G) and
/// prod c_l(A_i)^{e_i} agree at every prime where either can be ramified.
bool verify_witness(int l, const std::vector<Mat2<PrimeField>>& generators, const std::vector<int>& exponents,
                    const Witness& w);

/// Counts from exhaustive search: c = nontrivial cyclotomic elements of the
/// group generated by the c_l(A_i), cs = cyclotomic subgroups of order l.
/// Each nonempty subset S of generators is searched at p(2|S| - 1), or at
/// `degree_bound` when it is nonnegative.
struct BruteForceCount {
  long c = 0;
  long cs = 0;
  std::vector<std::vector<int>> cyclotomic;  // exponent vectors, sorted
  SearchStats stats;
};
BruteForceCount brute_force_count(int l, std::uint64_t p, const std::vector<Mat2<PrimeField>>& generators,
                                  int degree_bound = -1, unsigned jobs = 1);

std::string to_json(const BruteForceResult& r);

}  // namespace cyclok2::k2tame
