#include "cyclok2/factorx/fp.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "cyclok2/arith/primes.hpp"

namespace cyclok2::factorx {

using algebra::BigInt;

namespace {

FpPoly one(const PrimeField& f) { return FpPoly::constant(f, 1); }

// g with g(x^p) = f(x); requires f' = 0. Coefficients are fixed by Frobenius.
FpPoly pth_root(const FpPoly& f) {
  const std::uint64_t p = f.ring().modulus();
  std::vector<std::uint64_t> c;
  for (std::size_t i = 0; i < f.size(); i += p) c.push_back(f[i]);
  return FpPoly(f.ring(), std::move(c));
}

FpPoly random_below(const PrimeField& f, int degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> coef(0, f.modulus() - 1);
  std::vector<std::uint64_t> c(static_cast<std::size_t>(degree));
  for (auto& x : c) x = coef(rng);
  return FpPoly(f, std::move(c));
}

void equal_degree_into(const FpPoly& f, int d, std::mt19937_64& rng, std::vector<FpPoly>& out) {
  if (f.degree() == d) {
    out.push_back(f);
    return;
  }
  const PrimeField& fld = f.ring();
  const std::uint64_t p = fld.modulus();
  while (true) {
    const FpPoly a = random_below(fld, f.degree(), rng);
    if (a.degree() < 1) continue;
    FpPoly b(fld);
    if (p == 2) {
      // Trace from F_{2^d} to F_2.
      FpPoly t = a, acc = a;
      for (int i = 1; i < d; ++i) {
        t = (t * t) % f;
        acc += t;
      }
      b = acc;
    } else {
      BigInt e;
      mpz_ui_pow_ui(e.get_mpz_t(), p, static_cast<unsigned long>(d));
      e = (e - 1) / 2;
      b = algebra::powmod(a, e, f) - one(fld);
    }
    const FpPoly g = algebra::gcd(b, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree_into(g, d, rng, out);
      equal_degree_into(algebra::exact_div(f, g), d, rng, out);
      return;
    }
  }
}

}  // namespace

bool canonical_less(const FpPoly& a, const FpPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(),
                                      b.coeffs().end());
}

FpPoly Factorization::expand(const PrimeField& f) const {
  FpPoly acc = FpPoly::constant(f, f.reduce(unit));
  for (const auto& [g, m] : factors) acc *= g.pow(static_cast<std::uint64_t>(m));
  return acc;
}

std::string Factorization::str() const {
  std::string out = std::to_string(unit);
  if (factors.empty()) return out;
  if (unit == 1) out.clear();
  for (const auto& [g, m] : factors) {
    if (!out.empty()) out += " * ";
    out += "(" + algebra::to_string(g) + ")";
    if (m > 1) out += "^" + std::to_string(m);
  }
  return out;
}

std::vector<std::pair<FpPoly, int>> squarefree_decomposition(const FpPoly& f_in) {
  if (f_in.is_zero()) throw std::domain_error("squarefree decomposition of zero");
  const PrimeField& fld = f_in.ring();
  const std::uint64_t p = fld.modulus();
  std::vector<std::pair<FpPoly, int>> out;
  FpPoly f = algebra::monic(f_in);
  if (f.degree() < 1) return out;

  FpPoly c = algebra::gcd(f, f.derivative());
  FpPoly w = algebra::exact_div(f, c);
  int i = 1;
  while (w.degree() > 0) {
    const FpPoly y = algebra::gcd(w, c);
    const FpPoly z = algebra::exact_div(w, y);
    if (z.degree() > 0) out.emplace_back(z, i);
    ++i;
    w = y;
    c = algebra::exact_div(c, y);
  }
  if (c.degree() > 0) {
    for (auto& [g, m] : squarefree_decomposition(pth_root(c))) {
      out.emplace_back(std::move(g), m * static_cast<int>(p));
    }
  }
  return out;
}

std::vector<std::pair<FpPoly, int>> distinct_degree(const FpPoly& f_in) {
  const PrimeField& fld = f_in.ring();
  const std::uint64_t p = fld.modulus();
  std::vector<std::pair<FpPoly, int>> out;
  FpPoly f = f_in;
  const FpPoly x = FpPoly::x(fld);
  FpPoly h = x % f;
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    h = algebra::powmod(h, p, f);
    const FpPoly g = algebra::gcd(h - x, f);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      f = algebra::exact_div(f, g);
      h = h % f;
    }
  }
  if (f.degree() > 0) out.emplace_back(f, f.degree());
  return out;
}

std::vector<FpPoly> equal_degree(const FpPoly& f, int d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<FpPoly> out;
  equal_degree_into(f, d, rng, out);
  return out;
}

Factorization factor_fp(const FpPoly& f, std::uint64_t seed) {
  if (f.is_zero()) throw std::domain_error("factorization of the zero polynomial");
  Factorization out;
  out.unit = f.lead();
  std::mt19937_64 rng(seed);
  for (const auto& [part, mult] : squarefree_decomposition(f)) {
    for (const auto& [block, d] : distinct_degree(part)) {
      std::vector<FpPoly> pieces;
      equal_degree_into(block, d, rng, pieces);
      for (auto& g : pieces) out.factors.emplace_back(std::move(g), mult);
    }
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
  return out;
}

bool is_irreducible_fp(const FpPoly& f) {
  const int n = f.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  const PrimeField& fld = f.ring();
  const FpPoly m = algebra::monic(f);
  const FpPoly x = FpPoly::x(fld);
  const std::uint64_t p = fld.modulus();
  auto frob = [&](int k) {
    FpPoly h = x % m;
    for (int i = 0; i < k; ++i) h = algebra::powmod(h, p, m);
    return h;
  };
  if (!(frob(n) == x % m)) return false;
  for (const auto& [q, e] : arith::factor_integer(BigInt(n)).factors) {
    const int k = n / static_cast<int>(q.get_si());
    if (algebra::gcd(frob(k) - x, m).degree() != 0) return false;
  }
  return true;
}

algebra::PrimeIdeal<PrimeField> certified_ideal(const FpPoly& f) {
  if (!is_irreducible_fp(f)) {
    throw std::invalid_argument("not irreducible over " + f.ring().name() + ": " + algebra::to_string(f));
  }
  return algebra::PrimeIdeal<PrimeField>::from_irreducible(f);
}

}  // namespace cyclok2::factorx
