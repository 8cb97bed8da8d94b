#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cyclok2/algebra/quotient.hpp"
#include "cyclok2/algebra/ratfunc.hpp"
#include "cyclok2/cyclo/cyclotomic.hpp"
#include "cyclok2/moebius/mat2.hpp"

namespace cyclok2::k2tame {

using algebra::Field;
using algebra::Poly;
using algebra::PrimeIdeal;
using algebra::Rational;
using algebra::RationalFunction;

/// Formal product of Steinberg symbols {u_k, v_k}^{e_k}. No K_2 relations are
/// applied; the product is only ever inspected through tame symbols.
template <class T>
struct SymbolProduct {
  struct Term {
    T u;
    T v;
    long e = 1;
  };
  std::vector<Term> terms;

  SymbolProduct& add(T u, T v, long e = 1) {
    terms.push_back({std::move(u), std::move(v), e});
    return *this;
  }
  friend SymbolProduct operator*(SymbolProduct a, const SymbolProduct& b) {
    a.terms.insert(a.terms.end(), b.terms.begin(), b.terms.end());
    return a;
  }
  SymbolProduct pow(long k) const {
    SymbolProduct out = *this;
    for (auto& t : out.terms) t.e *= k;
    return out;
  }
};

template <Field F>
using FxSymbols = SymbolProduct<RationalFunction<F>>;
using QSymbols = SymbolProduct<Rational>;

/// c_n(a) = {a, Phi_n(a)} for a in F(x).
template <Field F>
FxSymbols<F> cyclotomic_element(std::uint64_t n, const RationalFunction<F>& a) {
  const auto phi = cyclo::cyclotomic_poly(a.field(), n);
  // Phi_n(num/den) = den^{-deg} * homogenized value.
  Poly<F> hom(a.field());
  const Poly<F>& num = a.num();
  const Poly<F>& den = a.den();
  std::vector<Poly<F>> dp{Poly<F>::constant(a.field(), a.field().one())};
  for (int j = 1; j <= phi.degree(); ++j) dp.push_back(dp.back() * den);
  Poly<F> np = Poly<F>::constant(a.field(), a.field().one());
  for (int j = 0; j <= phi.degree(); ++j) {
    hom += (np * dp[static_cast<std::size_t>(phi.degree() - j)]).scaled(phi.coeff(static_cast<std::size_t>(j)));
    np = np * num;
  }
  if (hom.is_zero()) throw std::domain_error("Phi_n(a) vanishes");
  FxSymbols<F> s;
  s.add(a, RationalFunction<F>(hom, dp.back()));
  return s;
}

/// c_n(a) for a in Q.
QSymbols cyclotomic_element(std::uint64_t n, const Rational& a);

/// Thrown when a unit part reduces to zero, which valuations exclude.
class ResidueFault : public std::logic_error {
 public:
  ResidueFault() : std::logic_error("unit part vanishes modulo the prime") {}
};

/// Tame symbol at (P): prod [(-1)^{v(u)v(v)} u^{v(v)} / v^{v(u)}]^e mod P, as a
/// reduced element of F[x]/(P).
template <Field F>
Poly<F> tame_fx(const FxSymbols<F>& s, const PrimeIdeal<F>& P) {
  const algebra::QuotientRing<F> R(P.generator());
  const Poly<F>& pi = P.generator();
  auto unit_residue = [&](const RationalFunction<F>& w, int& v) {
    if (w.is_zero()) throw algebra::ZeroValuation();
    Poly<F> num = w.num(), den = w.den();
    int vn = 0, vd = 0;
    while (true) {
      auto [q, r] = algebra::divrem(num, pi);
      if (!r.is_zero()) break;
      num = std::move(q);
      ++vn;
    }
    while (true) {
      auto [q, r] = algebra::divrem(den, pi);
      if (!r.is_zero()) break;
      den = std::move(q);
      ++vd;
    }
    v = vn - vd;
    const Poly<F> dn = R.reduce(den);
    if (dn.is_zero() || R.reduce(num).is_zero()) throw ResidueFault();
    return R.mul(R.reduce(num), R.inv(dn));
  };
  Poly<F> acc = R.one();
  for (const auto& t : s.terms) {
    int a = 0, b = 0;
    const Poly<F> u0 = unit_residue(t.u, a);
    const Poly<F> v0 = unit_residue(t.v, b);
    Poly<F> val = R.mul(R.pow(u0, b), R.pow(v0, -a));
    if ((static_cast<long>(a) * b) % 2 != 0) val = R.neg(val);
    acc = R.mul(acc, R.pow(val, t.e));
  }
  return acc;
}

/// Tame symbol at the rational prime q, as a residue in [0, q).
std::uint64_t tame_q(const QSymbols& s, std::uint64_t q);

/// Residue of c_l((ax + b)/(cx + d)) at P by the linear-element rule: the class of
/// (ax + b)/(cx + d) when P = (monic Phi_l(ax + b, cx + d)), and 1 otherwise.
template <Field F>
Poly<F> cyclo_tame(int l, const moebius::Mat2<F>& m, const PrimeIdeal<F>& P) {
  const algebra::QuotientRing<F> R(P.generator());
  const auto form = algebra::monic(cyclo::cyclotomic_form(l, m.top(), m.bottom()).value);
  if (!(form == P.generator())) return R.one();
  return R.mul(R.reduce(m.top()), R.inv(R.reduce(m.bottom())));
}

/// {f/g, Phi_l(f, g)} {f, g}^{-(l-1)}, the expansion of c_l(f/g).
template <Field F>
FxSymbols<F> expanded_cyclotomic(int l, const Poly<F>& f, const Poly<F>& g) {
  const auto form = cyclo::cyclotomic_form(l, f, g);
  FxSymbols<F> s;
  s.add(RationalFunction<F>(f, g), RationalFunction<F>(form.value));
  s.add(RationalFunction<F>(f), RationalFunction<F>(g), -(l - 1));
  return s;
}

}  // namespace cyclok2::k2tame
