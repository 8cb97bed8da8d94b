#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cyclok2/algebra/poly.hpp"

namespace cyclok2::cyclo {

using algebra::Field;
using algebra::FpPoly;
using algebra::Poly;
using algebra::PrimeField;
using algebra::QPoly;

/// Phi_n over Z, by exact division of x^n - 1 by Phi_d for proper divisors d.
QPoly cyclotomic_poly(std::uint64_t n);

template <Field F>
Poly<F> cyclotomic_poly(const F& field, std::uint64_t n) {
  return algebra::map_poly(field, cyclotomic_poly(n));
}

/// Phi_l(f, g) = sum_{j<l} f^j g^{l-1-j} for a prime l.
template <Field F>
struct CyclotomicForm {
  int l = 0;
  Poly<F> f;
  Poly<F> g;
  Poly<F> value;
};

bool is_small_prime(long n);

template <Field F>
CyclotomicForm<F> cyclotomic_form(int l, const Poly<F>& f, const Poly<F>& g) {
  f.check(g);
  if (!is_small_prime(l)) throw std::invalid_argument("cyclotomic form needs a prime l");
  if (static_cast<std::uint64_t>(l) == f.ring().characteristic()) {
    throw std::invalid_argument("l equals the characteristic");
  }
  if (f.is_zero() && g.is_zero()) throw std::invalid_argument("cyclotomic form of (0, 0)");
  std::vector<Poly<F>> gp{Poly<F>::constant(f.ring(), f.ring().one())};
  for (int j = 1; j < l; ++j) gp.push_back(gp.back() * g);
  Poly<F> value(f.ring()), fp = gp.front();
  for (int j = 0; j < l; ++j) {
    value += fp * gp[static_cast<std::size_t>(l - 1 - j)];
    if (j + 1 < l) fp = fp * f;
  }
  return {l, f, g, std::move(value)};
}

/// f(x) = core(x^{p^r}) with core not in F_p[x^p]. Constants return r = 0.
struct Descent {
  FpPoly core;
  int r = 0;
};
Descent frobenius_descent(const FpPoly& f);

/// Phi_p(x^{n/p}) / Phi_n(x). Throws std::logic_error if the division leaves
/// a remainder.
QPoly psi_cofactor(std::uint64_t n, std::uint64_t p);

}  // namespace cyclok2::cyclo
