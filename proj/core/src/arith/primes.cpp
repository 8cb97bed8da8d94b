#include "cyclok2/arith/primes.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace cyclok2::arith {

namespace {

std::uint64_t env_or(const char* name, std::uint64_t fallback) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return fallback;
  try {
    return std::stoull(v);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("bad value for ") + name + ": " + v);
  }
}

bool fits_u64(const BigInt& n) { return n >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64; }

std::uint64_t to_u64(const BigInt& n) {
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof out, 0, 0, n.get_mpz_t());
  return out;
}

void add_factor(std::vector<std::pair<BigInt, unsigned>>& out, const BigInt& p, unsigned e) {
  for (auto& [q, k] : out) {
    if (q == p) {
      k += e;
      return;
    }
  }
  out.emplace_back(p, e);
}

// Splits n completely when the budget allows; leftovers multiply into cofactor.
void split(const BigInt& n, const FactorLimits& limits, IntFactorization& acc, std::uint64_t seed) {
  if (n == 1) return;
  if (is_prime(n)) {
    add_factor(acc.factors, n, 1);
    return;
  }
  BigInt d = 0;
  for (std::uint64_t s = seed; s < seed + 4 && d == 0; ++s) d = pollard_rho(n, limits.rho_iterations, s);
  if (d == 0) {
    acc.cofactor *= n;
    return;
  }
  split(d, limits, acc, seed + 1);
  split(BigInt(n / d), limits, acc, seed + 1);
}

}  // namespace

FactorLimits FactorLimits::from_env() {
  FactorLimits l;
  l.trial_limit = env_or("CYCLOK2_TRIAL_LIMIT", l.trial_limit);
  l.rho_iterations = env_or("CYCLOK2_RHO_LIMIT", l.rho_iterations);
  return l;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  __extension__ using u128 = unsigned __int128;
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e != 0) {
    if (e & 1U) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1U;
  }
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  if (fits_u64(n)) return is_prime(to_u64(n));
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  if (n < 2) return out;
  std::vector<bool> composite(n + 1, false);
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
  }
  return out;
}

BigInt pollard_rho(const BigInt& n, std::uint64_t iterations, std::uint64_t seed) {
  if (n % 2 == 0) return 2;
  // Brent's cycle detection on x -> x^2 + c with batched gcds.
  const BigInt c = BigInt(seed % 1000 + 1);
  BigInt y = 2, x, ys, q = 1, g = 1;
  std::uint64_t r = 1, done = 0;
  constexpr std::uint64_t batch = 64;
  while (g == 1) {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) y = (y * y + c) % n;
    std::uint64_t k = 0;
    while (k < r && g == 1) {
      ys = y;
      const std::uint64_t steps = std::min(batch, r - k);
      for (std::uint64_t i = 0; i < steps; ++i) {
        y = (y * y + c) % n;
        q = (q * abs(BigInt(x - y))) % n;
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      k += steps;
      done += steps;
      if (done > iterations) return 0;
    }
    r *= 2;
  }
  if (g == n) {
    do {
      ys = (ys * ys + c) % n;
      BigInt diff = abs(BigInt(x - ys));
      mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  return g == n ? BigInt(0) : g;
}

IntFactorization factor_integer(const BigInt& n_in, const FactorLimits& limits) {
  if (n_in == 0) throw std::domain_error("factorization of zero");
  IntFactorization out;
  BigInt n = abs(n_in);
  auto strip = [&](std::uint64_t p) {
    unsigned e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
      ++e;
    }
    if (e > 0) out.factors.emplace_back(BigInt(p), e);
  };
  strip(2);
  for (std::uint64_t d = 3; d <= limits.trial_limit; d += 2) {
    if (n == 1) break;
    if (BigInt(d) * d > n) break;
    strip(d);
  }
  if (n != 1) split(n, limits, out, 1);
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

std::vector<BigInt> divisors(const IntFactorization& f) {
  if (!f.complete()) throw std::invalid_argument("divisors of an incompletely factored number");
  std::vector<BigInt> out{1};
  for (const auto& [p, e] : f.factors) {
    const std::size_t base = out.size();
    BigInt pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m) {
  if (m < 2) throw std::invalid_argument("order modulo m < 2");
  BigInt g;
  mpz_gcd_ui(g.get_mpz_t(), BigInt(a).get_mpz_t(), m);
  if (g != 1) throw std::domain_error("order of a non-unit");
  const std::uint64_t phi = euler_phi(m);
  std::uint64_t order = phi;
  for (const auto& [q, e] : factor_integer(BigInt(phi)).factors) {
    const std::uint64_t qq = to_u64(q);
    for (unsigned i = 0; i < e; ++i) {
      if (powmod(a, order / qq, m) == 1) {
        order /= qq;
      } else {
        break;
      }
    }
  }
  return order;
}

std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("phi(0)");
  std::uint64_t result = n, m = n;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

unsigned valuation(const BigInt& n, const BigInt& p) {
  if (n == 0) throw std::domain_error("valuation of zero");
  if (p < 2) throw std::invalid_argument("valuation at a non-prime");
  unsigned e = 0;
  BigInt m = n;
  while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t()) != 0) {
    mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
    ++e;
  }
  return e;
}

}  // namespace cyclok2::arith
