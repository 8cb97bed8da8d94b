#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>

#include "cyclok2/algebra/poly.hpp"

namespace cyclok2::algebra {

/// F[x]/(m) for a monic m of degree >= 1, used both for residue fields
/// F[x]/(P) and for number fields Q[x]/(m). Elements are reduced
/// representatives of degree < deg m. Satisfies the Ring concept.
template <Field F>
class QuotientRing {
 public:
  using value_type = Poly<F>;

  explicit QuotientRing(Poly<F> modulus) : mod_(monic(modulus)) {
    if (mod_.degree() < 1) throw std::invalid_argument("quotient modulus must be nonconstant");
  }

  const Poly<F>& modulus() const { return mod_; }
  const F& base() const { return mod_.ring(); }
  int degree() const { return mod_.degree(); }

  value_type zero() const { return value_type(base()); }
  value_type one() const { return value_type::constant(base(), base().one()); }
  value_type from_int(long v) const { return value_type::constant(base(), base().from_int(v)); }
  value_type from_base(const typename F::value_type& c) const { return value_type::constant(base(), c); }
  /// The class of x.
  value_type generator() const { return reduce(value_type::x(base())); }
  value_type reduce(const Poly<F>& p) const { return p % mod_; }

  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return (a * b) % mod_; }
  value_type neg(const value_type& a) const { return -a; }
  bool is_zero(const value_type& a) const { return a.is_zero(); }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }

  /// Throws std::domain_error when a is not a unit.
  value_type inv(const value_type& a) const {
    if (a.is_zero()) throw std::domain_error("inverse of zero in quotient ring");
    const auto b = xgcd(a, mod_);
    if (b.gcd.degree() != 0) throw std::domain_error("element is not a unit in quotient ring");
    return b.s % mod_;
  }
  value_type div(const value_type& a, const value_type& b) const { return mul(a, inv(b)); }

  value_type pow(const value_type& a, long e) const {
    if (e < 0) return pow(inv(a), -e);
    return powmod(a, static_cast<std::uint64_t>(e), mod_);
  }

  /// Image of p(x) under x -> a.
  value_type evaluate(const Poly<F>& p, const value_type& a) const {
    value_type acc = zero();
    for (std::size_t i = p.size(); i-- > 0;) acc = add(mul(acc, a), from_base(p[i]));
    return acc;
  }

  friend bool operator==(const QuotientRing& a, const QuotientRing& b) { return a.mod_ == b.mod_; }

 private:
  Poly<F> mod_;
};

}  // namespace cyclok2::algebra
