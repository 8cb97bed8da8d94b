#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cyclok2/algebra/poly.hpp"
#include "cyclok2/algebra/ratfunc.hpp"

namespace cyclok2::factorx {

using algebra::FpPoly;
using algebra::PrimeField;

/// unit * prod factor^multiplicity, factors monic, irreducible, pairwise
/// distinct and sorted by (degree, coefficients lowest first).
struct Factorization {
  std::uint64_t unit = 1;
  std::vector<std::pair<FpPoly, int>> factors;

  FpPoly expand(const PrimeField& f) const;
  /// "2 * (x + 1)^2 * (x^2 + x + 2)"; a bare unit when there are no factors.
  std::string str() const;
};

/// Complete factorization over F_p by Cantor-Zassenhaus. Equal-degree
/// splitting draws from std::mt19937_64(seed); the sorted result does not
/// depend on the seed.
Factorization factor_fp(const FpPoly& f, std::uint64_t seed = 0);

/// Squarefree decomposition: monic pairwise coprime squarefree parts with
/// multiplicities, f = lc(f) * prod part^mult.
std::vector<std::pair<FpPoly, int>> squarefree_decomposition(const FpPoly& f);

/// Products of all irreducible factors of each degree in a monic squarefree f.
std::vector<std::pair<FpPoly, int>> distinct_degree(const FpPoly& f);

/// Splits a monic squarefree f whose irreducible factors all have degree d.
std::vector<FpPoly> equal_degree(const FpPoly& f, int d, std::uint64_t seed);

/// Rabin's test.
bool is_irreducible_fp(const FpPoly& f);

/// Prime ideal (f) after checking irreducibility; throws std::invalid_argument.
algebra::PrimeIdeal<PrimeField> certified_ideal(const FpPoly& f);

/// Strict ordering used for canonical output: degree, then coefficients from
/// the constant term upward.
bool canonical_less(const FpPoly& a, const FpPoly& b);

}  // namespace cyclok2::factorx
