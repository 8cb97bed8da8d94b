#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "cyclok2/algebra/poly.hpp"

namespace cyclok2::algebra {

/// Thrown when a valuation of zero is requested.
class ZeroValuation : public std::domain_error {
 public:
  ZeroValuation() : std::domain_error("valuation of zero is undefined") {}
};

/// The prime ideal (P) of F[x] for a monic irreducible P.
///
/// `from_irreducible` trusts its caller; factorx::certified_ideal checks.
template <Field F>
class PrimeIdeal {
 public:
  static PrimeIdeal from_irreducible(Poly<F> p) {
    if (p.degree() < 1) throw std::invalid_argument("prime ideal generator must be nonconstant");
    return PrimeIdeal(monic(p));
  }
  const Poly<F>& generator() const { return gen_; }
  int degree() const { return gen_.degree(); }
  friend bool operator==(const PrimeIdeal& a, const PrimeIdeal& b) { return a.gen_ == b.gen_; }

 private:
  explicit PrimeIdeal(Poly<F> g) : gen_(std::move(g)) {}
  Poly<F> gen_;
};

template <Field F>
int valuation(const Poly<F>& f, const PrimeIdeal<F>& p) {
  if (f.is_zero()) throw ZeroValuation();
  return multiplicity(p.generator(), f);
}

/// num/den with gcd 1 and den monic.
template <Field F>
class RationalFunction {
 public:
  explicit RationalFunction(Poly<F> num)
      : num_(std::move(num)), den_(Poly<F>::constant(num_.ring(), num_.ring().one())) {}
  RationalFunction(Poly<F> num, Poly<F> den) : num_(std::move(num)), den_(std::move(den)) {
    num_.check(den_);
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    normalize();
  }

  const Poly<F>& num() const { return num_; }
  const Poly<F>& den() const { return den_; }
  const F& field() const { return num_.ring(); }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero rational function");
    return RationalFunction(den_, num_);
  }
  RationalFunction pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    return RationalFunction(num_.pow(static_cast<std::uint64_t>(e)),
                            den_.pow(static_cast<std::uint64_t>(e)), Reduced{});
  }

  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    return a * b.inverse();
  }
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  struct Reduced {};
  RationalFunction(Poly<F> num, Poly<F> den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

  void normalize() {
    const F& f = num_.ring();
    if (num_.is_zero()) {
      den_ = Poly<F>::constant(f, f.one());
      return;
    }
    const Poly<F> g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
    const auto lc = den_.lead();
    if (!f.equal(lc, f.one())) {
      const auto inv = f.inv(lc);
      num_ = num_.scaled(inv);
      den_ = den_.scaled(inv);
    }
  }

  Poly<F> num_;
  Poly<F> den_;
};

template <Field F>
int valuation(const RationalFunction<F>& r, const PrimeIdeal<F>& p) {
  if (r.is_zero()) throw ZeroValuation();
  return valuation(r.num(), p) - valuation(r.den(), p);
}

template <Field F>
std::string to_string(const RationalFunction<F>& r, std::string_view var = "x") {
  if (r.den().degree() == 0) return to_string(r.num(), var);
  return "(" + to_string(r.num(), var) + ")/(" + to_string(r.den(), var) + ")";
}

}  // namespace cyclok2::algebra
