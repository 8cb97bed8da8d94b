#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "cyclok2/cyclo/cyclotomic.hpp"
#include "cyclok2/moebius/mat2.hpp"

namespace cyclok2::cyclo {

using moebius::Mat2;

/// Thrown when Phi_l is reducible over the base field, which the structure
/// theorem excludes.
class ReducibleCyclotomic : public std::invalid_argument {
 public:
  ReducibleCyclotomic(int l, std::uint64_t p);
};

/// One basis entry P_i = monic Phi_l(a_i x + b_i, c_i x + d_i) with
/// r_i = v_{P_i}(Phi_l(f, g)), l not dividing r_i, and
/// (f/g)^{r_i} = zeta_i^{e_i} mod P_i where zeta_i = (a_i x + b_i)/(c_i x + d_i).
struct BasisExponent {
  std::size_t index = 0;
  int r = 0;
  int e = 0;
};

/// Phi_l(f, g) = alpha * Psi^l * prod P_i^{r_i}.
struct Decomposition {
  std::uint64_t alpha = 1;
  FpPoly psi;
  std::vector<BasisExponent> exponents;  // sorted by index
};

struct NoDecomposition {
  std::string reason;
};

using DecompositionResult = std::variant<Decomposition, NoDecomposition>;

/// The monic normalization of Phi_l(a x + b, c x + d).
FpPoly basis_form(int l, const Mat2<PrimeField>& m);

/// Requires gcd(f, g) = 1 and Phi_l irreducible over F_p. When `targets` is
/// given (one exponent l_i per basis entry), also demands
/// (f/g)^{r_i} = zeta_i^{l_i} mod P_i, and that entries with l_i != 0 mod l
/// actually occur.
DecompositionResult decompose_form(const CyclotomicForm<PrimeField>& form,
                                   const std::vector<Mat2<PrimeField>>& basis,
                                   const std::optional<std::vector<int>>& targets = std::nullopt,
                                   std::uint64_t seed = 0);

FpPoly reassemble(const Decomposition& d, int l, const std::vector<Mat2<PrimeField>>& basis);

std::string to_json(const Decomposition& d);
std::string to_string(const Decomposition& d);

/// Phi_l irreducible over F_p, i.e. p has order l - 1 modulo l.
bool cyclotomic_irreducible_mod(int l, std::uint64_t p);

}  // namespace cyclok2::cyclo
