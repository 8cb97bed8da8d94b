#include "cyclok2/k2tame/counting.hpp"

#include <stdexcept>

#include "cyclok2/arith/primes.hpp"
#include "cyclok2/cyclo/decompose.hpp"
#include "cyclok2/factorx/fp.hpp"
#include "cyclok2/k2tame/symbols.hpp"

namespace cyclok2::k2tame {

using algebra::FpPoly;
using algebra::PrimeField;
using algebra::QPoly;
using algebra::RationalField;

namespace {

void require_level(int l) {
  if (l < 5 || !cyclo::is_small_prime(l)) throw std::invalid_argument("level l must be a prime >= 5");
}

void require_coprime(int l, std::uint64_t p) {
  if (p % static_cast<std::uint64_t>(l) == 0) throw std::invalid_argument("p must differ from l");
}

std::uint64_t period_of_square(int l, std::uint64_t p) {
  const std::uint64_t L = static_cast<std::uint64_t>(l);
  return arith::multiplicative_order(arith::mulmod(p % L, p % L, L), L);
}

// c_l(a) for a = x^k as a symbol product over F(x).
template <algebra::Field F>
FxSymbols<F> power_element(int l, const F& f, long k) {
  const Poly<F> xk = Poly<F>::monomial(f, f.one(), static_cast<std::size_t>(k < 0 ? -k : k));
  const Poly<F> one = Poly<F>::constant(f, f.one());
  const RationalFunction<F> a = k >= 0 ? RationalFunction<F>(xk, one) : RationalFunction<F>(one, xk);
  return cyclotomic_element(static_cast<std::uint64_t>(l), a);
}

template <algebra::Field F>
bool fingerprints_agree(int l, const F& f, const std::vector<Poly<F>>& primes, int t, long k) {
  const auto lhs = power_element(l, f, 1).pow(t);
  const auto rhs = power_element(l, f, k);
  for (const auto& P : primes) {
    const auto ideal = algebra::PrimeIdeal<F>::from_irreducible(P);
    if (!(tame_fx(lhs, ideal) == tame_fx(rhs, ideal))) return false;
  }
  return true;
}

}  // namespace

ZSet zset(int l, std::uint64_t p) {
  require_level(l);
  require_coprime(l, p);
  const std::uint64_t L = static_cast<std::uint64_t>(l);
  ZSet z{l, p, {}};
  const std::uint64_t q = arith::mulmod(p % L, p % L, L);
  std::uint64_t pw = 1;
  for (std::uint64_t m = 0; m < period_of_square(l, p); ++m) {
    for (std::uint64_t t : {pw, (L - pw) % L}) {
      if (t >= 2 && t <= L - 2) z.members.insert(static_cast<int>(t));
    }
    pw = arith::mulmod(pw, q, L);
  }
  return z;
}

bool zset_is_full(int l, std::uint64_t p) {
  return static_cast<int>(zset(l, p).members.size()) == l - 3;
}

bool lemma_514_predicate(int l, std::uint64_t p) {
  require_level(l);
  require_coprime(l, p);
  const std::uint64_t L = static_cast<std::uint64_t>(l);
  return l % 4 == 3 && arith::multiplicative_order(p % L, L) == L - 1;
}

std::string PowerWitness::describe() const {
  if (exponent == 1) return "x";
  if (exponent == -1) return "1/x";
  if (exponent > 0) return "x^" + std::to_string(exponent);
  return "x^(" + std::to_string(exponent) + ")";
}

PowerClass power_classification(int l, std::uint64_t p, int t) {
  require_level(l);
  if (t < 1 || t > l - 1) throw std::out_of_range("t must lie in [1, l-1]");
  if (t == 1) return {true, PowerWitness{1, 0, 1}};
  if (t == l - 1) return {true, PowerWitness{-1, 0, -1}};
  if (p == 0) return {false, std::nullopt};
  require_coprime(l, p);
  const std::uint64_t L = static_cast<std::uint64_t>(l);
  const std::uint64_t q = arith::mulmod(p % L, p % L, L);
  std::uint64_t pw = 1;
  long pm = 1;
  for (std::uint64_t m = 0; m < period_of_square(l, p); ++m) {
    if (pw == static_cast<std::uint64_t>(t)) return {true, PowerWitness{1, static_cast<int>(m), pm}};
    if ((L - pw) % L == static_cast<std::uint64_t>(t)) {
      return {true, PowerWitness{-1, static_cast<int>(m), -pm}};
    }
    pw = arith::mulmod(pw, q, L);
    pm *= static_cast<long>(p);
  }
  return {false, std::nullopt};
}

bool verify_power_witness(int l, std::uint64_t p, int t, const PowerWitness& w) {
  if (p == 0) {
    if (w.m != 0 || w.exponent != w.sign) return false;
    const RationalField Q;
    const std::vector<QPoly> primes{QPoly::x(Q), cyclo::cyclotomic_poly(static_cast<std::uint64_t>(l))};
    return fingerprints_agree(l, Q, primes, t, w.sign);
  }
  const PrimeField f(p);
  long pm = 1;
  for (int i = 0; i < w.m; ++i) pm *= static_cast<long>(p);
  if (w.exponent != w.sign * pm) return false;
  const FpPoly phi = cyclo::cyclotomic_poly(f, static_cast<std::uint64_t>(l));
  if (!(phi.inflate(static_cast<std::size_t>(pm)) == phi.pow(static_cast<std::uint64_t>(pm)))) return false;
  std::vector<FpPoly> primes{FpPoly::x(f)};
  for (const auto& [g, mult] : factorx::factor_fp(phi).factors) primes.push_back(g);
  return fingerprints_agree(l, f, primes, t, w.exponent);
}

CycloCount count_cyclotomic(int l, int n, std::uint64_t p) {
  require_level(l);
  if (n < 1 || n > (l - 3) / 2) {
    throw std::out_of_range("n must satisfy 1 <= n <= (l-3)/2; larger n is not covered");
  }
  if (p == 0) return {2L * n, 0};
  require_coprime(l, p);
  if (!cyclo::cyclotomic_irreducible_mod(l, p)) throw cyclo::ReducibleCyclotomic(l, p);
  const long z = static_cast<long>(zset(l, p).members.size());
  return {n * (2 + z), lemma_514_predicate(l, p) ? n : 0};
}

}  // namespace cyclok2::k2tame
