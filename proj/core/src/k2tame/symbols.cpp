#include "cyclok2/k2tame/symbols.hpp"

#include "cyclok2/arith/primes.hpp"

namespace cyclok2::k2tame {

using algebra::BigInt;

QSymbols cyclotomic_element(std::uint64_t n, const Rational& a) {
  const Rational v = cyclo::cyclotomic_poly(n).evaluate(a);
  if (a.is_zero() || v.is_zero()) throw std::domain_error("c_n(a) needs a and Phi_n(a) nonzero");
  QSymbols s;
  s.add(a, v);
  return s;
}

std::uint64_t tame_q(const QSymbols& s, std::uint64_t q) {
  if (!arith::is_prime(q)) throw std::invalid_argument("tame symbol at a non-prime");
  const algebra::PrimeField f(q);
  const BigInt Q(q);
  auto unit_residue = [&](const Rational& w, long& v) {
    if (w.is_zero()) throw algebra::ZeroValuation();
    BigInt num = w.num(), den = w.den();
    const long vn = arith::valuation(num, Q), vd = arith::valuation(den, Q);
    for (long i = 0; i < vn; ++i) num /= Q;
    for (long i = 0; i < vd; ++i) den /= Q;
    v = vn - vd;
    const auto dn = f.from_bigint(den);
    if (dn == 0) throw ResidueFault();
    return f.div(f.from_bigint(num), dn);
  };
  auto pow_signed = [&](std::uint64_t x, long e) {
    if (e < 0) return f.pow(f.inv(x), static_cast<std::uint64_t>(-e));
    return f.pow(x, static_cast<std::uint64_t>(e));
  };
  std::uint64_t acc = f.one();
  for (const auto& t : s.terms) {
    long a = 0, b = 0;
    const auto u0 = unit_residue(t.u, a);
    const auto v0 = unit_residue(t.v, b);
    std::uint64_t val = f.mul(pow_signed(u0, b), pow_signed(v0, -a));
    if ((a * b) % 2 != 0) val = f.neg(val);
    acc = f.mul(acc, pow_signed(val, t.e));
  }
  return acc;
}

}  // namespace cyclok2::k2tame
