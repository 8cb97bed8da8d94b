#include "cyclok2/cyclo/cyclotomic.hpp"

#include <map>

namespace cyclok2::cyclo {

using algebra::Rational;
using algebra::RationalField;

namespace {

const RationalField QQ{};

QPoly x_pow_minus_one(std::uint64_t n) {
  QPoly p = QPoly::monomial(QQ, Rational(1L), n);
  return p - QPoly::constant(QQ, Rational(1L));
}

}  // namespace

bool is_small_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

QPoly cyclotomic_poly(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("cyclotomic polynomial of index 0");
  std::vector<std::uint64_t> divs;
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d == 0) divs.push_back(d);
  }
  std::map<std::uint64_t, QPoly> phi;
  for (std::uint64_t d : divs) {
    QPoly acc = x_pow_minus_one(d);
    for (std::uint64_t e : divs) {
      if (e >= d) break;
      if (d % e == 0) acc = algebra::exact_div(acc, phi.at(e));
    }
    phi.emplace(d, std::move(acc));
  }
  return phi.at(n);
}

Descent frobenius_descent(const FpPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("descent of the zero polynomial");
  const std::uint64_t p = f.ring().modulus();
  Descent out{f, 0};
  while (out.core.degree() > 0) {
    bool in_subring = true;
    for (std::size_t i = 0; i < out.core.size(); ++i) {
      if (i % p != 0 && out.core[i] != 0) {
        in_subring = false;
        break;
      }
    }
    if (!in_subring) break;
    std::vector<std::uint64_t> c;
    for (std::size_t i = 0; i < out.core.size(); i += p) c.push_back(out.core[i]);
    out.core = FpPoly(f.ring(), std::move(c));
    ++out.r;
  }
  return out;
}

QPoly psi_cofactor(std::uint64_t n, std::uint64_t p) {
  if (!is_small_prime(static_cast<long>(p)) || n % p != 0) {
    throw std::invalid_argument("psi cofactor needs a prime p dividing n");
  }
  const QPoly lhs = cyclotomic_poly(p).inflate(n / p);
  auto [q, r] = algebra::divrem(lhs, cyclotomic_poly(n));
  if (!r.is_zero()) throw std::logic_error("Phi_n does not divide Phi_p(x^(n/p))");
  return q;
}

}  // namespace cyclok2::cyclo
