#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cyclok2/algebra/field.hpp"
#include "cyclok2/algebra/poly.hpp"

namespace cyclok2::moebius {

using algebra::Field;
using algebra::PrimeField;
using algebra::RationalField;

class SingularMatrix : public std::invalid_argument {
 public:
  SingularMatrix() : std::invalid_argument("matrix is singular") {}
};

/// Invertible [[a, b], [c, d]]; acts on F(x) by x -> (ax + b)/(cx + d).
template <Field F>
class Mat2 {
 public:
  using value_type = typename F::value_type;

  Mat2(F field, value_type a, value_type b, value_type c, value_type d)
      : f_(std::move(field)), e_{std::move(a), std::move(b), std::move(c), std::move(d)} {
    if (f_.is_zero(det())) throw SingularMatrix();
  }
  static Mat2 from_ints(F field, long a, long b, long c, long d) {
    return Mat2(field, field.from_int(a), field.from_int(b), field.from_int(c), field.from_int(d));
  }
  static Mat2 identity(F field) { return from_ints(std::move(field), 1, 0, 0, 1); }

  const F& field() const { return f_; }
  const value_type& a() const { return e_[0]; }
  const value_type& b() const { return e_[1]; }
  const value_type& c() const { return e_[2]; }
  const value_type& d() const { return e_[3]; }
  const std::array<value_type, 4>& entries() const { return e_; }

  value_type det() const { return f_.sub(f_.mul(e_[0], e_[3]), f_.mul(e_[1], e_[2])); }

  /// ax + b.
  algebra::Poly<F> top() const { return algebra::Poly<F>(f_, {e_[1], e_[0]}); }
  /// cx + d.
  algebra::Poly<F> bottom() const { return algebra::Poly<F>(f_, {e_[3], e_[2]}); }

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    const F& f = x.f_;
    auto dot = [&](const value_type& p, const value_type& q, const value_type& r, const value_type& s) {
      return f.add(f.mul(p, q), f.mul(r, s));
    };
    return Mat2(f, dot(x.a(), y.a(), x.b(), y.c()), dot(x.a(), y.b(), x.b(), y.d()),
                dot(x.c(), y.a(), x.d(), y.c()), dot(x.c(), y.b(), x.d(), y.d()));
  }

  friend bool operator==(const Mat2& x, const Mat2& y) {
    if (!(x.f_ == y.f_)) return false;
    for (std::size_t i = 0; i < 4; ++i) {
      if (!x.f_.equal(x.e_[i], y.e_[i])) return false;
    }
    return true;
  }

 private:
  F f_;
  std::array<value_type, 4> e_;
};

/// W(F) as an explicit finite list.
template <Field F>
struct RootsOfUnity {
  std::vector<typename F::value_type> members;

  bool contains(const F& f, const typename F::value_type& mu) const {
    for (const auto& w : members) {
      if (f.equal(w, mu)) return true;
    }
    return false;
  }
};

/// All of F_p^*.
RootsOfUnity<PrimeField> roots_of_unity(const PrimeField& f);
/// {1, -1}.
RootsOfUnity<RationalField> roots_of_unity(const RationalField& f);

namespace detail {

// lambda with y = lambda * x for nonzero 2-vectors, if it exists.
template <Field F>
bool row_ratio(const F& f, const typename F::value_type& x0, const typename F::value_type& x1,
               const typename F::value_type& y0, const typename F::value_type& y1,
               typename F::value_type& lambda) {
  if (!f.equal(f.mul(x0, y1), f.mul(x1, y0))) return false;
  lambda = f.is_zero(x0) ? f.mul(y1, f.inv(x1)) : f.mul(y0, f.inv(x0));
  return true;
}

}  // namespace detail

/// False iff B = alpha * diag(mu, 1) * [[0,1],[1,0]]^eps * A with alpha in F^*,
/// mu in W, eps in {0, 1}.
template <Field F>
bool essentially_distinct(const Mat2<F>& A, const Mat2<F>& B, const RootsOfUnity<F>& W) {
  if (!(A.field() == B.field())) throw algebra::FieldMismatch();
  const F& f = A.field();
  using V = typename F::value_type;
  for (int eps = 0; eps < 2; ++eps) {
    const V& r0a = eps == 0 ? A.a() : A.c();
    const V& r0b = eps == 0 ? A.b() : A.d();
    const V& r1a = eps == 0 ? A.c() : A.a();
    const V& r1b = eps == 0 ? A.d() : A.b();
    V l0{}, l1{};
    if (!detail::row_ratio(f, r0a, r0b, B.a(), B.b(), l0)) continue;
    if (!detail::row_ratio(f, r1a, r1b, B.c(), B.d(), l1)) continue;
    if (W.contains(f, f.mul(l0, f.inv(l1)))) return false;
  }
  return true;
}

/// True iff B = lambda * A.
template <Field F>
bool pgl_equal(const Mat2<F>& A, const Mat2<F>& B) {
  if (!(A.field() == B.field())) throw algebra::FieldMismatch();
  const F& f = A.field();
  typename F::value_type l0{}, l1{};
  return detail::row_ratio(f, A.a(), A.b(), B.a(), B.b(), l0) &&
         detail::row_ratio(f, A.c(), A.d(), B.c(), B.d(), l1) && f.equal(l0, l1);
}

/// Scales so the first nonzero entry in row-major order is 1.
template <Field F>
Mat2<F> pgl_normalize(const Mat2<F>& A) {
  const F& f = A.field();
  const auto& e = A.entries();
  std::size_t i = 0;
  while (f.is_zero(e[i])) ++i;
  const auto s = f.inv(e[i]);
  return Mat2<F>(f, f.mul(e[0], s), f.mul(e[1], s), f.mul(e[2], s), f.mul(e[3], s));
}

/// A class of matrices that are pairwise not essentially distinct.
struct DistinctnessClass {
  Mat2<PrimeField> representative;
  std::vector<Mat2<PrimeField>> members;
};

/// Partition of GL(2, F_p) into essential-distinctness classes, each
/// represented by its lexicographically least matrix (a, b, c, d), listed in
/// increasing order. Throws std::invalid_argument for p = 2.
std::vector<DistinctnessClass> distinctness_classes(std::uint64_t p);

/// Representatives only; p(p+1)/2 of them.
std::vector<Mat2<PrimeField>> enumerate_distinct_classes(std::uint64_t p);

/// "[a,b,c,d]".
std::string to_json(const Mat2<PrimeField>& m);

}  // namespace cyclok2::moebius
