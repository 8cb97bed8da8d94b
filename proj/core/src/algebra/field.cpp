#include "cyclok2/algebra/field.hpp"

#include <limits>

namespace cyclok2::algebra {

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p < 2 || p > std::numeric_limits<std::uint32_t>::max()) {
    throw std::invalid_argument("prime field modulus out of range: " + std::to_string(p));
  }
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) throw std::invalid_argument("modulus is not prime: " + std::to_string(p));
  }
}

PrimeField::value_type PrimeField::from_bigint(const BigInt& v) const {
  BigInt r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p_);
  return r.get_ui();
}

PrimeField::value_type PrimeField::inv(value_type a) const {
  if (a % p_ == 0) throw std::domain_error("inverse of zero in " + name());
  std::int64_t r0 = static_cast<std::int64_t>(p_), r1 = static_cast<std::int64_t>(a % p_);
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  return from_int(static_cast<long>(s0));
}

PrimeField::value_type PrimeField::pow(value_type a, std::uint64_t e) const {
  value_type r = one(), b = a % p_;
  while (e != 0) {
    if (e & 1U) r = mul(r, b);
    b = mul(b, b);
    e >>= 1U;
  }
  return r;
}

PrimeField::value_type PrimeField::parse(std::string_view s) const {
  if (s.find('/') != std::string_view::npos) {
    const Rational r = Rational::parse(s);
    return div(from_bigint(r.num()), from_bigint(r.den()));
  }
  return from_bigint(parse_bigint(s));
}

}  // namespace cyclok2::algebra
