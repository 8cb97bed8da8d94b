#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "cyclok2/algebra/field.hpp"

namespace cyclok2::algebra {

/// Dense univariate polynomial, coefficients lowest degree first.
///
/// The zero polynomial has an empty coefficient vector and degree -1; any
/// other polynomial has a nonzero last coefficient.
template <Ring R>
class Poly {
 public:
  using ring_type = R;
  using value_type = typename R::value_type;

  Poly() requires std::default_initializable<R> = default;
  explicit Poly(R ring) : ring_(std::move(ring)) {}
  Poly(R ring, std::vector<value_type> lowest_first)
      : ring_(std::move(ring)), c_(std::move(lowest_first)) {
    trim();
  }

  static Poly constant(R ring, value_type c) {
    return Poly(ring, std::vector<value_type>{std::move(c)});
  }
  static Poly monomial(R ring, value_type c, std::size_t degree) {
    std::vector<value_type> v(degree + 1, ring.zero());
    v[degree] = std::move(c);
    return Poly(std::move(ring), std::move(v));
  }
  static Poly x(R ring) {
    auto one = ring.one();
    return monomial(std::move(ring), std::move(one), 1);
  }
  static Poly from_ints(R ring, std::initializer_list<long> lowest_first) {
    std::vector<value_type> v;
    v.reserve(lowest_first.size());
    for (long c : lowest_first) v.push_back(ring.from_int(c));
    return Poly(std::move(ring), std::move(v));
  }

  const R& ring() const { return ring_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  std::size_t size() const { return c_.size(); }

  value_type coeff(std::size_t i) const { return i < c_.size() ? c_[i] : ring_.zero(); }
  const value_type& operator[](std::size_t i) const { return c_[i]; }
  const value_type& lead() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return c_.back();
  }
  std::span<const value_type> coeffs() const { return c_; }

  bool is_monic() const { return !c_.empty() && ring_.equal(c_.back(), ring_.one()); }

  Poly operator-() const {
    Poly r(ring_);
    r.c_.reserve(c_.size());
    for (const auto& a : c_) r.c_.push_back(ring_.neg(a));
    return r;
  }

  Poly& operator+=(const Poly& o) {
    check(o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), ring_.zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = ring_.add(c_[i], o.c_[i]);
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    check(o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), ring_.zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = ring_.sub(c_[i], o.c_[i]);
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check(b);
    Poly r(a.ring_);
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, a.ring_.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.ring_.is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        r.c_[i + j] = a.ring_.add(r.c_[i + j], a.ring_.mul(a.c_[i], b.c_[j]));
      }
    }
    r.trim();
    return r;
  }

  Poly scaled(const value_type& s) const {
    Poly r(ring_);
    if (ring_.is_zero(s)) return r;
    r.c_.reserve(c_.size());
    for (const auto& a : c_) r.c_.push_back(ring_.mul(a, s));
    r.trim();
    return r;
  }

  /// Multiplies by x^k.
  Poly shifted(std::size_t k) const {
    if (is_zero()) return *this;
    std::vector<value_type> v(k, ring_.zero());
    v.insert(v.end(), c_.begin(), c_.end());
    return Poly(ring_, std::move(v));
  }

  value_type evaluate(const value_type& at) const {
    value_type acc = ring_.zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = ring_.add(ring_.mul(acc, at), *it);
    return acc;
  }

  /// this(inner(x)).
  Poly compose(const Poly& inner) const {
    check(inner);
    Poly acc(ring_);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc = acc * inner + constant(ring_, *it);
    }
    return acc;
  }

  Poly derivative() const {
    Poly r(ring_);
    if (c_.size() <= 1) return r;
    r.c_.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) {
      r.c_.push_back(ring_.mul(ring_.from_int(static_cast<long>(i)), c_[i]));
    }
    r.trim();
    return r;
  }

  Poly pow(std::uint64_t e) const {
    Poly result = constant(ring_, ring_.one());
    Poly base = *this;
    while (e != 0) {
      if (e & 1U) result *= base;
      e >>= 1U;
      if (e != 0) base *= base;
    }
    return result;
  }

  /// this(x^k).
  Poly inflate(std::size_t k) const {
    if (k == 0) throw std::invalid_argument("inflate by zero");
    if (is_zero()) return *this;
    std::vector<value_type> v((c_.size() - 1) * k + 1, ring_.zero());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i * k] = c_[i];
    return Poly(ring_, std::move(v));
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (!(a.ring_ == b.ring_) || a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (!a.ring_.equal(a.c_[i], b.c_[i])) return false;
    }
    return true;
  }

  void check(const Poly& o) const {
    if (!(ring_ == o.ring_)) throw FieldMismatch();
  }

 private:
  void trim() {
    while (!c_.empty() && ring_.is_zero(c_.back())) c_.pop_back();
  }

  R ring_{};
  std::vector<value_type> c_;
};

using QPoly = Poly<RationalField>;
using FpPoly = Poly<PrimeField>;

/// Polynomial ring over a field viewed as a coefficient ring, so that F[y][x]
/// can be expressed as Poly<PolyRing<F>>.
template <Field F>
class PolyRing {
 public:
  using value_type = Poly<F>;
  PolyRing() requires std::default_initializable<F> = default;
  explicit PolyRing(F base) : base_(std::move(base)) {}

  const F& base() const { return base_; }
  value_type zero() const { return value_type(base_); }
  value_type one() const { return value_type::constant(base_, base_.one()); }
  value_type from_int(long v) const { return value_type::constant(base_, base_.from_int(v)); }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  bool is_zero(const value_type& a) const { return a.is_zero(); }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }
  bool operator==(const PolyRing&) const = default;

 private:
  F base_{};
};

// ---------------------------------------------------------------------------
// Field-only operations.

template <Field F>
struct QuotientRemainder {
  Poly<F> quotient;
  Poly<F> remainder;
};

/// Schoolbook long division. Throws std::domain_error for a zero divisor.
template <Field F>
QuotientRemainder<F> divrem(const Poly<F>& a, const Poly<F>& b) {
  a.check(b);
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const F& f = a.ring();
  if (a.degree() < b.degree()) return {Poly<F>(f), a};
  std::vector<typename F::value_type> rem(a.coeffs().begin(), a.coeffs().end());
  const std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<typename F::value_type> quo(rem.size() - db, f.zero());
  const auto inv_lead = f.inv(b.lead());
  for (std::size_t i = rem.size(); i-- > db;) {
    if (f.is_zero(rem[i])) continue;
    const auto q = f.mul(rem[i], inv_lead);
    quo[i - db] = q;
    for (std::size_t j = 0; j <= db; ++j) {
      rem[i - db + j] = f.sub(rem[i - db + j], f.mul(q, b[j]));
    }
  }
  rem.resize(db);
  return {Poly<F>(f, std::move(quo)), Poly<F>(f, std::move(rem))};
}

template <Field F>
Poly<F> operator/(const Poly<F>& a, const Poly<F>& b) {
  return divrem(a, b).quotient;
}

template <Field F>
Poly<F> operator%(const Poly<F>& a, const Poly<F>& b) {
  return divrem(a, b).remainder;
}

/// Exact division; throws std::logic_error when b does not divide a.
template <Field F>
Poly<F> exact_div(const Poly<F>& a, const Poly<F>& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
  return q;
}

template <Field F>
bool divides(const Poly<F>& d, const Poly<F>& a) {
  return (a % d).is_zero();
}

template <Field F>
Poly<F> monic(const Poly<F>& a) {
  if (a.is_zero()) return a;
  return a.scaled(a.ring().inv(a.lead()));
}

QPoly gcd_subresultant(const QPoly& a, const QPoly& b);

/// Monic generator of the ideal (a, b); gcd(0, 0) = 0.
template <Field F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
  a.check(b);
  if constexpr (std::is_same_v<F, RationalField>) {
    return gcd_subresultant(a, b);
  } else {
    while (!b.is_zero()) {
      Poly<F> r = a % b;
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }
}

template <Field F>
struct Bezout {
  Poly<F> gcd;  // monic
  Poly<F> s;
  Poly<F> t;    // s*a + t*b == gcd
};

template <Field F>
Bezout<F> xgcd(const Poly<F>& a, const Poly<F>& b) {
  a.check(b);
  const F& f = a.ring();
  Poly<F> r0 = a, r1 = b;
  Poly<F> s0 = Poly<F>::constant(f, f.one()), s1(f);
  Poly<F> t0(f), t1 = Poly<F>::constant(f, f.one());
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly<F> s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly<F> t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const auto inv = f.inv(r0.lead());
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

/// base^e mod m.
template <Field F, class Exp>
Poly<F> powmod(const Poly<F>& base, Exp e, const Poly<F>& m) {
  const F& f = m.ring();
  Poly<F> result = Poly<F>::constant(f, f.one()) % m;
  Poly<F> b = base % m;
  if constexpr (std::is_same_v<Exp, BigInt>) {
    if (e < 0) throw std::invalid_argument("negative exponent in powmod");
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
      result = (result * result) % m;
      if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * b) % m;
    }
  } else {
    static_assert(std::is_unsigned_v<Exp>);
    while (e != 0) {
      if (e & 1U) result = (result * b) % m;
      e >>= 1U;
      if (e != 0) b = (b * b) % m;
    }
  }
  return result;
}

/// res(f, g) = lc(g)^{deg f} * prod f(beta) over the roots beta of g.
/// Zero exactly when f and g share a factor. Throws for a zero operand.
template <Field F>
typename F::value_type resultant(const Poly<F>& f_in, const Poly<F>& g_in) {
  f_in.check(g_in);
  if (f_in.is_zero() || g_in.is_zero()) throw std::domain_error("resultant of the zero polynomial");
  const F& fld = f_in.ring();
  Poly<F> f = f_in, g = g_in;
  auto acc = fld.one();
  auto power = [&](typename F::value_type b, int e) {
    auto r = fld.one();
    for (int i = 0; i < e; ++i) r = fld.mul(r, b);
    return r;
  };
  while (true) {
    if (g.degree() == 0) return fld.mul(acc, power(g.lead(), f.degree()));
    Poly<F> r = f % g;
    if (r.is_zero()) return fld.zero();
    // R(f,g) = lc(g)^{df-dr} R(r,g) and R(r,g) = (-1)^{dr*dg} R(g,r).
    acc = fld.mul(acc, power(g.lead(), f.degree() - r.degree()));
    if ((r.degree() * g.degree()) % 2 != 0) acc = fld.neg(acc);
    f = std::move(g);
    g = std::move(r);
  }
}

/// Largest k with d^k | a. Requires a nonzero and deg d >= 1.
template <Field F>
int multiplicity(const Poly<F>& d, Poly<F> a) {
  if (a.is_zero()) throw std::domain_error("multiplicity in the zero polynomial");
  if (d.degree() < 1) throw std::invalid_argument("multiplicity of a unit");
  int k = 0;
  while (true) {
    auto [q, r] = divrem(a, d);
    if (!r.is_zero()) return k;
    a = std::move(q);
    ++k;
  }
}

/// Image of a polynomial with rational coefficients in F[x]; for F_p the
/// denominators must be prime to p.
template <Field F>
Poly<F> map_poly(const F& field, const QPoly& p) {
  if constexpr (std::is_same_v<F, RationalField>) {
    return p;
  } else {
    std::vector<typename F::value_type> c;
    c.reserve(p.size());
    for (const auto& a : p.coeffs()) {
      c.push_back(field.div(from_integer(field, a.num()), from_integer(field, a.den())));
    }
    return Poly<F>(field, std::move(c));
  }
}

// ---------------------------------------------------------------------------
// Text encoding: "3*x^2 - 1/2*x + 7".

namespace detail {

template <class F>
bool coefficient_negative(const F&, const typename F::value_type& c) {
  if constexpr (std::is_same_v<F, RationalField>) {
    return c.sign() < 0;
  } else {
    return false;
  }
}

std::vector<std::pair<std::string, std::size_t>> split_terms(std::string_view text,
                                                              std::string_view var);

}  // namespace detail

template <Field F>
std::string to_string(const Poly<F>& p, std::string_view var = "x") {
  if (p.is_zero()) return "0";
  const F& f = p.ring();
  std::string out;
  bool first = true;
  for (std::size_t i = p.size(); i-- > 0;) {
    const auto& c = p[i];
    if (f.is_zero(c)) continue;
    const bool neg = detail::coefficient_negative(f, c);
    const auto mag = neg ? f.neg(c) : c;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    const bool unit = f.equal(mag, f.one());
    if (i == 0) {
      out += f.format(mag);
      continue;
    }
    if (!unit) out += f.format(mag) + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

/// Parses the canonical text form; accepts any term order, repeated
/// exponents, and free spacing. Throws std::invalid_argument.
template <Field F>
Poly<F> parse_poly(const F& field, std::string_view text, std::string_view var = "x") {
  Poly<F> acc(field);
  for (const auto& [coef, exp] : detail::split_terms(text, var)) {
    acc += Poly<F>::monomial(field, field.parse(coef), exp);
  }
  return acc;
}

}  // namespace cyclok2::algebra
