#include "cyclok2/arith/number_theory.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <thread>

namespace cyclok2::arith {

using algebra::PolyRing;
using algebra::QPoly;
using algebra::RationalField;

bool is_primitive_root(long long p, std::uint64_t l) {
  if (!is_prime(l)) throw std::invalid_argument("is_primitive_root: modulus is not prime");
  const long long sl = static_cast<long long>(l);
  const long long r = ((p % sl) + sl) % sl;
  if (r == 0) throw std::invalid_argument("is_primitive_root: l divides p");
  return multiplicative_order(static_cast<std::uint64_t>(r), l) == l - 1;
}

namespace {

BigInt power_sum(std::uint64_t a, std::uint64_t b, std::uint64_t k) {
  BigInt x, y;
  mpz_ui_pow_ui(x.get_mpz_t(), a, k);
  mpz_ui_pow_ui(y.get_mpz_t(), b, k);
  return x + y;
}

// a^k + b^k mod q
BigInt power_sum_mod(std::uint64_t a, std::uint64_t b, std::uint64_t k, const BigInt& q) {
  BigInt x, y, e(static_cast<unsigned long>(k));
  const BigInt ba(static_cast<unsigned long>(a)), bb(static_cast<unsigned long>(b));
  mpz_powm(x.get_mpz_t(), ba.get_mpz_t(), e.get_mpz_t(), q.get_mpz_t());
  mpz_powm(y.get_mpz_t(), bb.get_mpz_t(), e.get_mpz_t(), q.get_mpz_t());
  return BigInt((x + y) % q);
}

}  // namespace

bool is_primitive_divisor(std::uint64_t a, std::uint64_t b, std::uint64_t n, const BigInt& q) {
  if (q < 2) return false;
  if (power_sum(a, b, n) % q != 0) return false;
  for (std::uint64_t k = 1; k < n; ++k) {
    if (power_sum_mod(a, b, k, q) == 0) return false;
  }
  return true;
}

ZsigmondyResult zsigmondy(std::uint64_t a, std::uint64_t b, std::uint64_t n, const FactorLimits& limits) {
  if (!(a > b && b > 0)) throw std::invalid_argument("zsigmondy: need a > b > 0");
  if (std::gcd(a, b) != 1) throw std::invalid_argument("zsigmondy: a and b must be coprime");
  if (n < 2) throw std::invalid_argument("zsigmondy: need n > 1");
  ZsigmondyResult r;
  r.a = a;
  r.b = b;
  r.n = n;
  r.value = power_sum(a, b, n);
  const auto f = factor_integer(r.value, limits);
  if (!f.complete()) {
    throw FactoringEffortExceeded("zsigmondy: " + r.value.get_str() + " left composite cofactor " +
                                  f.cofactor.get_str());
  }
  for (const auto& [q, e] : f.factors) {
    bool primitive = true;
    for (std::uint64_t k = 1; k < n && primitive; ++k) primitive = power_sum_mod(a, b, k, q) != 0;
    if (primitive) {
      r.primitive_prime = q;
      break;
    }
  }
  return r;
}

std::string SelmerResult::describe() const {
  std::string s = "x^" + std::to_string(n) + " + x + 1";
  if (quadratic_factor) s += " = (x^2 + x + 1) * (" + algebra::to_string(cofactor) + ")";
  s += certified() ? ", certified irreducible (" + factorx::to_string(certificate.method) + ")"
                   : ", irreducibility certified only by Selmer's theorem";
  return s;
}

SelmerResult selmer_check(int n, const factorx::IrreducibilityOptions& opt) {
  if (n < 2) throw std::invalid_argument("selmer_check: need n >= 2");
  const RationalField q;
  std::vector<algebra::Rational> c(static_cast<std::size_t>(n) + 1, algebra::Rational(0));
  c[0] = 1;
  c[1] = 1;
  c[static_cast<std::size_t>(n)] += 1;
  QPoly f(q, std::move(c));
  SelmerResult r;
  r.n = n;
  // n = 2 is x^2 + x + 1 itself
  r.quadratic_factor = n % 3 == 2 && n > 2;
  r.cofactor = f;
  if (r.quadratic_factor) r.cofactor = algebra::exact_div(f, QPoly::from_ints(q, {1, 1, 1}));
  r.certificate = factorx::is_irreducible_q(r.cofactor, opt);
  if (r.certificate.verdict == factorx::Verdict::Reducible) {
    throw std::logic_error("selmer_check: " + algebra::to_string(r.cofactor) + " reported reducible");
  }
  return r;
}

std::int64_t quartic_71(std::int64_t x, std::int64_t y) {
  const std::int64_t c = y * y - 1;
  return x * x * x * x + x * x * x * y + x * x * c + x * y * c + c * c;
}

Diophantine71 diophantine_71(std::int64_t bound, unsigned jobs) {
  if (bound < 1) throw std::invalid_argument("diophantine_71: need bound >= 1");
  // |x|, |y| <= 10^4 keeps every term below 2^63.
  if (bound > 10'000) throw std::invalid_argument("diophantine_71: bound above 10^4 would overflow");
  Diophantine71 out;
  out.bound = bound;
  jobs = std::max(1U, jobs);
  std::mutex mu;
  auto scan = [&](unsigned offset) {
    std::vector<std::pair<std::int64_t, std::int64_t>> local;
    for (std::int64_t y = -bound + offset; y <= bound; y += jobs) {
      for (std::int64_t x = -bound; x <= bound; ++x) {
        if (quartic_71(x, y) == 0) local.emplace_back(x, y);
      }
    }
    const std::lock_guard lock(mu);
    out.solutions.insert(out.solutions.end(), local.begin(), local.end());
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(scan, t);
  scan(0);
  for (auto& t : pool) t.join();
  std::sort(out.solutions.begin(), out.solutions.end());

  // y^2 = 1 kills every (y^2 - 1) term, leaving x^3 (x + y).
  for (std::int64_t y : {-1, 1}) {
    for (std::int64_t x : {std::int64_t{0}, -y}) {
      if (quartic_71(x, y) != 0) throw std::logic_error("diophantine_71: unit row reduction");
      out.unit_row_roots.emplace_back(x, y);
    }
  }
  std::sort(out.unit_row_roots.begin(), out.unit_row_roots.end());
  for (const auto& [x, y] : out.solutions) {
    if (y * y != 1) out.off_unit_rows_empty = false;
  }
  return out;
}

bool lemma_72_identity() {
  using QY = PolyRing<RationalField>;
  using QYX = algebra::Poly<QY>;
  const RationalField q;
  const QY ring(q);
  const QPoly y = QPoly::x(q);
  const QPoly one = QPoly::constant(q, 1);
  auto yx = [&](std::vector<QPoly> c) { return QYX(ring, std::move(c)); };
  const QPoly y2p1 = y * y + one;
  const QYX x = QYX::x(ring);
  const QYX cy = QYX::constant(ring, y);
  const QYX cw = QYX::constant(ring, y2p1);

  const QYX lhs = x.pow(4) + x.pow(3) * cy + x.pow(2) * cw + x * cy * cw + cw * cw;
  const QYX quartic = yx({y.pow(4), y.pow(3), y.pow(2), y, one});
  const QYX quadratic = yx({y.pow(2), y, one});
  const QYX rhs = quartic + quadratic + cw;
  return lhs == rhs;
}

std::pair<BigInt, BigInt> lemma_72_sides(const BigInt& x, const BigInt& y) {
  const BigInt w = y * y + 1;
  BigInt lhs = x * x * x * x + x * x * x * y + x * x * w + x * y * w + w * w;
  BigInt rhs = (x * x * x * x + x * x * x * y + x * x * y * y + x * y * y * y + y * y * y * y) +
               (x * x + x * y + y * y) + w;
  return {lhs, rhs};
}

}  // namespace cyclok2::arith
