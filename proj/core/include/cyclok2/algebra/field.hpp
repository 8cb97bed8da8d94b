#pragma once

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cyclok2/algebra/rational.hpp"

namespace cyclok2::algebra {

/// A coefficient context: carries whatever runtime data the ring needs (the
/// modulus for 𝔽_p) and performs element arithmetic. Polynomials store one
/// context and plain values.
template <class R>
concept Ring = requires(const R& r, const typename R::value_type& a,
                        const typename R::value_type& b) {
  typename R::value_type;
  { r.zero() } -> std::convertible_to<typename R::value_type>;
  { r.one() } -> std::convertible_to<typename R::value_type>;
  { r.add(a, b) } -> std::convertible_to<typename R::value_type>;
  { r.sub(a, b) } -> std::convertible_to<typename R::value_type>;
  { r.mul(a, b) } -> std::convertible_to<typename R::value_type>;
  { r.neg(a) } -> std::convertible_to<typename R::value_type>;
  { r.is_zero(a) } -> std::convertible_to<bool>;
  { r.equal(a, b) } -> std::convertible_to<bool>;
  { r.from_int(1L) } -> std::convertible_to<typename R::value_type>;
  { r == r } -> std::convertible_to<bool>;
};

template <class F>
concept Field = Ring<F> && requires(const F& f, const typename F::value_type& a) {
  { f.inv(a) } -> std::convertible_to<typename F::value_type>;
  { f.characteristic() } -> std::convertible_to<std::uint64_t>;
};

/// ℚ.
struct RationalField {
  using value_type = Rational;

  value_type zero() const { return {}; }
  value_type one() const { return Rational(1L); }
  value_type from_int(long v) const { return Rational(v); }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type inv(const value_type& a) const { return a.inverse(); }
  value_type div(const value_type& a, const value_type& b) const { return a / b; }
  bool is_zero(const value_type& a) const { return a.is_zero(); }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }
  std::uint64_t characteristic() const { return 0; }

  std::string format(const value_type& a) const { return a.str(); }
  value_type parse(std::string_view s) const { return Rational::parse(s); }
  std::string name() const { return "Q"; }

  bool operator==(const RationalField&) const = default;
};

/// 𝔽_p for a prime p < 2^32. Residues are kept in [0, p).
class PrimeField {
 public:
  using value_type = std::uint64_t;

  PrimeField() = default;
  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const { return p_; }
  std::uint64_t characteristic() const { return p_; }

  value_type zero() const { return 0; }
  value_type one() const { return 1 % p_; }
  value_type from_int(long v) const {
    const long r = v % static_cast<long>(p_);
    return static_cast<value_type>(r < 0 ? r + static_cast<long>(p_) : r);
  }
  value_type from_bigint(const BigInt& v) const;
  value_type reduce(std::uint64_t v) const { return v % p_; }
  value_type add(value_type a, value_type b) const {
    const value_type s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p_ - b; }
  value_type mul(value_type a, value_type b) const { return (a * b) % p_; }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type inv(value_type a) const;
  value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }
  value_type pow(value_type a, std::uint64_t e) const;
  bool is_zero(value_type a) const { return a == 0; }
  bool equal(value_type a, value_type b) const { return a == b; }

  std::string format(value_type a) const { return std::to_string(a); }
  value_type parse(std::string_view s) const;
  std::string name() const { return "F_" + std::to_string(p_); }

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint64_t p_ = 2;
};

inline Rational from_integer(const RationalField&, const BigInt& v) { return Rational(v); }
inline std::uint64_t from_integer(const PrimeField& f, const BigInt& v) { return f.from_bigint(v); }

/// Thrown when operands live over different coefficient fields.
class FieldMismatch : public std::invalid_argument {
 public:
  FieldMismatch() : std::invalid_argument("operands over different fields") {}
};

}  // namespace cyclok2::algebra
