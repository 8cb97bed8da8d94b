#include "cyclok2/k2tame/nonclosure.hpp"

#include <algorithm>

#include "cyclok2/algebra/poly.hpp"
#include "cyclok2/cyclo/cyclotomic.hpp"
#include "json.hpp"

namespace cyclok2::k2tame {

namespace {

std::vector<BigInt> integer_coeffs(const algebra::QPoly& f) {
  std::vector<BigInt> c;
  c.reserve(f.size());
  for (const auto& a : f.coeffs()) c.push_back(a.raw().get_num());
  return c;
}

BigInt evaluate(const std::vector<BigInt>& c, const BigInt& x) {
  BigInt acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

BigInt evaluate_mod(const std::vector<BigInt>& c, const BigInt& x, const BigInt& m) {
  BigInt acc = 0;
  const BigInt xr = BigInt(x % m);
  for (std::size_t i = c.size(); i-- > 0;) acc = BigInt((acc * xr + c[i]) % m);
  if (acc < 0) acc += m;
  return acc;
}

std::uint64_t evaluate_mod(const std::vector<std::int64_t>& c, std::uint64_t x, std::uint64_t q) {
  std::uint64_t acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    const std::int64_t ci = c[i] % static_cast<std::int64_t>(q);
    const std::uint64_t cu = ci < 0 ? static_cast<std::uint64_t>(ci + static_cast<std::int64_t>(q))
                                    : static_cast<std::uint64_t>(ci);
    acc = (arith::mulmod(acc, x, q) + cu) % q;
  }
  return acc;
}

std::size_t digits(const BigInt& v) { return mpz_sizeinbase(v.get_mpz_t(), 10); }

struct Search {
  std::uint64_t n, p;
  const SearchLimits& limits;
  std::vector<BigInt> phi;
  std::vector<std::int64_t> phi_small;
  std::vector<std::uint64_t> candidates;  // primes q = 1 mod n, q > N

  // Smallest prime from the scan, else a rho factor, else 0.
  BigInt find_prime(const BigInt& kM) const {
    for (std::uint64_t q : candidates) {
      const std::uint64_t x = mpz_fdiv_ui(kM.get_mpz_t(), q);
      if (evaluate_mod(phi_small, x, q) == 0) return BigInt(static_cast<unsigned long>(q));
    }
    if (limits.factor.rho_iterations == 0) return 0;
    const BigInt v = evaluate(phi, kM);
    if (mpz_sizeinbase(v.get_mpz_t(), 2) > 1024) return 0;
    if (arith::is_prime(v)) return v;
    const BigInt d = arith::pollard_rho(v, limits.factor.rho_iterations);
    if (d == 0) return 0;
    const BigInt e = v / d;
    BigInt best = 0;
    for (const BigInt& c : {d, e}) {
      if (arith::is_prime(c) && (best == 0 || c < best)) best = c;
    }
    return best;
  }
};

}  // namespace

SearchLimits SearchLimits::from_env() {
  SearchLimits s;
  s.factor = arith::FactorLimits::from_env();
  return s;
}

NonClosureCertificate nonclosure_sequence(std::uint64_t n, std::uint64_t p, std::size_t count,
                                          const SearchLimits& limits) {
  if (n == 1 || n == 4 || n == 8 || n == 12) throw std::invalid_argument("nonclosure: n must not be 1, 4, 8 or 12");
  if (!arith::is_prime(p)) throw std::invalid_argument("nonclosure: p must be prime");
  if (n % (p * p) != 0) throw std::invalid_argument("nonclosure: p^2 must divide n");
  if (count == 0) throw std::invalid_argument("nonclosure: count must be positive");

  NonClosureCertificate cert;
  cert.n = n;
  cert.p = p;
  cert.N = limits.cutoff != 0 ? limits.cutoff : std::max<std::uint64_t>({n, p, 20});
  if (cert.N <= p) throw std::invalid_argument("nonclosure: cutoff N must exceed p");

  const algebra::QPoly phi = cyclo::cyclotomic_poly(n);
  cert.m0 = abs(algebra::resultant(phi, phi.derivative()).raw().get_num());

  Search s{n, p, limits, integer_coeffs(phi), {}, {}};
  for (const auto& c : s.phi) {
    if (!c.fits_slong_p()) throw std::invalid_argument("nonclosure: Phi_n coefficients exceed 64 bits");
    s.phi_small.push_back(c.get_si());
  }
  for (std::uint64_t q : arith::primes_up_to(limits.factor.trial_limit)) {
    if (q % n == 1 && q > cert.N) s.candidates.push_back(q);
  }

  BigInt M = cert.m0;
  for (std::uint64_t q : arith::primes_up_to(cert.N)) M *= static_cast<unsigned long>(q);

  std::vector<unsigned long> js;
  for (std::uint64_t j = 1; j < n / p; ++j) js.push_back(static_cast<unsigned long>(p * j));

  std::uint64_t last_k = 0;
  while (cert.entries.size() < count) {
    if (digits(M) > limits.max_digits) {
      throw SearchExhausted("nonclosure: M_" + std::to_string(cert.entries.size() + 1) + " has " +
                                std::to_string(digits(M)) + " digits, above the cap",
                            cert.entries.size(), last_k);
    }
    NonClosureEntry e;
    e.M = M;
    for (std::uint64_t k = 1;; ++k) {
      if (k > limits.max_k) {
        throw SearchExhausted("nonclosure: no prime found for entry " + std::to_string(cert.entries.size() + 1) +
                                  " with k <= " + std::to_string(limits.max_k),
                              cert.entries.size(), k - 1);
      }
      last_k = k;
      const BigInt kM = BigInt(static_cast<unsigned long>(k)) * M;
      const BigInt q = s.find_prime(kM);
      if (q == 0) continue;
      e.k = static_cast<unsigned long>(k);
      e.prime = q;
      break;
    }
    const BigInt kM = e.k * e.M;
    const BigInt q2 = e.prime * e.prime;
    const BigInt at_kM = evaluate_mod(s.phi, kM, q2);
    e.valuation_at_kM = at_kM == 0 ? arith::valuation(evaluate(s.phi, kM), e.prime) : 1;
    e.adjusted = e.valuation_at_kM > 1;
    e.A = e.adjusted ? BigInt(kM + e.prime) : kM;
    if (evaluate_mod(s.phi, e.A, q2) == 0) throw std::logic_error("nonclosure: adjusted A_i still has p_i^2");
    for (unsigned long j : js) {
      BigInt r;
      const BigInt ej(j);
      mpz_powm(r.get_mpz_t(), e.A.get_mpz_t(), ej.get_mpz_t(), e.prime.get_mpz_t());
      e.residues.push_back(r);
    }

    const BigInt kM_plus = kM + e.prime;
    M = kM * kM_plus * evaluate(s.phi, kM) * evaluate(s.phi, kM_plus);
    cert.entries.push_back(std::move(e));
  }
  return cert;
}

std::string to_json(const NonClosureCertificate& c) {
  nlohmann::ordered_json j;
  j["kind"] = "nonclosure-certificate";
  j["n"] = std::to_string(c.n);
  j["p"] = std::to_string(c.p);
  j["N"] = std::to_string(c.N);
  j["m0"] = c.m0.get_str();
  auto& entries = j["entries"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < c.entries.size(); ++i) {
    const auto& e = c.entries[i];
    nlohmann::ordered_json je;
    je["index"] = std::to_string(i + 1);
    je["k"] = e.k.get_str();
    je["M"] = e.M.get_str();
    je["prime"] = e.prime.get_str();
    je["valuation_at_kM"] = std::to_string(e.valuation_at_kM);
    je["adjusted"] = e.adjusted;
    je["A"] = e.A.get_str();
    auto& table = je["exponent_checks"] = nlohmann::ordered_json::array();
    for (std::size_t t = 0; t < e.residues.size(); ++t) {
      table.push_back({{"j", std::to_string(t + 1)}, {"residue", e.residues[t].get_str()}});
    }
    entries.push_back(std::move(je));
  }
  return j.dump(2);
}

}  // namespace cyclok2::k2tame
