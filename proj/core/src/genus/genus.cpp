#include "cyclok2/genus/genus.hpp"

#include <numeric>

#include "cyclok2/arith/primes.hpp"
#include "json.hpp"

namespace cyclok2::genus {

Rational kummer_genus(std::uint64_t m, const std::vector<Place>& profile, std::uint64_t base_genus,
                      std::uint64_t constant_degree) {
  if (m < 2) throw std::invalid_argument("kummer_genus: need m > 1");
  if (constant_degree == 0) throw std::invalid_argument("kummer_genus: constant degree must be positive");
  const Rational mm(static_cast<long>(m));
  Rational sum(0);
  for (const auto& pl : profile) {
    if (pl.r == 0 || m % pl.r != 0) throw std::invalid_argument("kummer_genus: r_P must divide m");
    if (pl.degree == 0) throw std::invalid_argument("kummer_genus: place of degree zero");
    sum += (Rational(1) - Rational(static_cast<long>(pl.r)) / mm) * Rational(static_cast<long>(pl.degree));
  }
  const Rational g = Rational(1) + mm / Rational(static_cast<long>(constant_degree)) *
                                       (Rational(static_cast<long>(base_genus)) - Rational(1) + sum / Rational(2));
  if (!g.is_integer() || g < Rational(0)) {
    throw InconsistentProfile("kummer_genus: value " + g.str() + " is not a nonnegative integer");
  }
  return g;
}

std::vector<Place> RamificationProfile::places() const {
  std::vector<Place> out(branch_points, Place{1, 1});
  out.push_back(Place{infinite_r, 1});
  return out;
}

RamificationProfile ramification_profile(std::uint64_t n, std::uint64_t p) {
  if (n < 3) throw std::invalid_argument("genus: need n >= 3");
  if (n > 1'000'000) throw std::invalid_argument("genus: n above 10^6");
  if (!arith::is_prime(p)) throw std::invalid_argument("genus: p must be prime");
  RamificationProfile r;
  r.n = n;
  r.p = p;
  r.phi_n = arith::euler_phi(n);
  r.branch_points = r.phi_n;
  r.infinite_r = std::gcd(p, r.phi_n);
  return r;
}

std::int64_t genus_curve(std::uint64_t n, std::uint64_t p) {
  const auto pr = ramification_profile(n, p);
  const Rational P(static_cast<long>(p));
  const Rational phi(static_cast<long>(pr.phi_n));
  const Rational half(algebra::BigInt(1), algebra::BigInt(2));
  const Rational g = Rational(1) + P * (Rational(-1) + half * phi * (Rational(1) - Rational(1) / P) +
                                        half * (Rational(1) - Rational(static_cast<long>(pr.infinite_r)) / P));
  if (!g.is_integer()) throw std::logic_error("genus_curve: non-integral closed form");
  return g.num().get_si();
}

Finiteness finiteness_classifier(std::uint64_t n, std::uint64_t p) {
  const auto pr = ramification_profile(n, p);
  Finiteness f;
  f.n = n;
  f.p = p;
  f.genus = genus_curve(n, p);
  f.lhs = pr.phi_n * (p - 1);
  f.rhs = p + pr.infinite_r;
  return f;
}

std::vector<std::uint64_t> finiteness_exceptions(std::uint64_t p, std::uint64_t n_max) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 3; n <= n_max; ++n) {
    if (!finiteness_classifier(n, p).finite()) out.push_back(n);
  }
  return out;
}

std::string to_json(const Finiteness& f) {
  nlohmann::ordered_json j;
  j["n"] = f.n;
  j["p"] = f.p;
  j["genus"] = f.genus;
  j["lhs"] = f.lhs;
  j["rhs"] = f.rhs;
  j["finite"] = f.finite();
  return j.dump();
}

}  // namespace cyclok2::genus
