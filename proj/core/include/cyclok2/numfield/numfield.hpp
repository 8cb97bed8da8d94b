#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "cyclok2/algebra/poly.hpp"
#include "cyclok2/algebra/quotient.hpp"

namespace cyclok2::numfield {

using algebra::QPoly;
using algebra::Rational;
using algebra::RationalField;

class Element;

/// Q[x]/(m) for a monic m whose irreducibility is certified on construction.
class NumberField {
 public:
  /// Runs the factorx irreducibility search. When that is inconclusive and
  /// `citation` is nonempty the field is accepted on the cited result;
  /// otherwise std::invalid_argument. A found factor always throws.
  explicit NumberField(const QPoly& modulus, const std::string& citation = "");

  /// x^p + x + 1, or its quotient by x^2 + x + 1 when p = 2 mod 3.
  static NumberField selmer(std::uint64_t p);
  /// x^p + x^{p-1} + 2.
  static NumberField newton_family(std::uint64_t p);

  const QPoly& modulus() const;
  int degree() const;
  /// How irreducibility was established, e.g. "certified: degree-pattern".
  const std::string& certification() const;
  bool certified() const;

  Element generator() const;
  Element from_poly(const QPoly& p) const;
  Element from_int(long v) const;

  friend bool operator==(const NumberField& a, const NumberField& b);

 private:
  struct Data;
  friend class Element;
  friend Element operator*(const Element& a, const Element& b);
  std::shared_ptr<const Data> d_;
};

class Element {
 public:
  const QPoly& value() const { return v_; }
  const NumberField& field() const { return f_; }
  bool is_zero() const { return v_.is_zero(); }

  Element operator-() const;
  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator/(const Element& a, const Element& b);
  friend bool operator==(const Element& a, const Element& b);

  /// Throws std::domain_error for zero.
  Element inverse() const;
  Element pow(long e) const;
  /// p(this) for p in Q[x].
  Element apply(const QPoly& p) const;

  /// prod h(alpha_i) over the roots of the modulus, as res(h, m).
  Rational norm() const;

  std::string str() const;

 private:
  friend class NumberField;
  Element(NumberField f, QPoly v) : f_(std::move(f)), v_(std::move(v)) {}
  NumberField f_;
  QPoly v_;
};

struct Check {
  std::string name;
  bool passed = false;
  std::string witness;
};

struct Report {
  std::string name;
  std::vector<Check> checks;

  bool ok() const;
  void add(std::string check, bool passed, std::string witness);
  /// {"name":..., "ok":..., "checks":[{"name","status","witness"}]}
  std::string to_json() const;
};

/// In Q[x]/(f_{p,i}), p > 3: Phi_p(alpha) = Phi_p(alpha^3), the reduction
/// Phi_p(alpha) = (alpha + 2)/(1 - alpha), N(alpha + 2), the primitive prime q
/// of 2^p + 1 and the residue (-2)^e != 1 mod q for every e <= v_q(2^p + 1).
Report verify_thm_93(std::uint64_t p);

/// In Q[x]/(x^p + x^{p-1} + 2), p >= 3 odd: (1 + alpha)^2 Phi_p(-alpha) =
/// 1 - alpha, Phi_p(alpha) = (1 + 3 alpha)/(1 - alpha^2), |N(1 + 3 alpha)| =
/// 2(3^p + 1), and a primitive prime q != 2 of 3^p + 1.
Report verify_thm_910(std::uint64_t p);

/// In Q[x]/(x^2 - 3x + 1).
Report verify_ex_912();

/// Norm-level collapse of prod_sigma c_p(sigma(alpha)) to c_p(-2); for p = 5
/// also the three distinct subgroups of the cubic field.
Report verify_cor_96(std::uint64_t p);

}  // namespace cyclok2::numfield
