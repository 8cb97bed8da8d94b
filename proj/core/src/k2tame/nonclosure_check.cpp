// Certificate recheck. Deliberately self-contained: integer polynomials,
// the resultant and primality all come straight from GMP here.
#include <gmpxx.h>

#include "cyclok2/k2tame/nonclosure.hpp"
#include "json.hpp"

namespace cyclok2::k2tame {

namespace {

using ZPoly = std::vector<mpz_class>;  // lowest first

void trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Exact division by a monic divisor.
ZPoly divide_monic(ZPoly a, const ZPoly& b) {
  const std::size_t db = b.size() - 1;
  ZPoly q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    const mpz_class c = a[i];
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  trim(a);
  if (!a.empty()) throw std::logic_error("inexact cyclotomic division");
  return q;
}

ZPoly cyclotomic(std::uint64_t n) {
  ZPoly num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (std::uint64_t d = 1; d < n; ++d) {
    if (n % d == 0) num = divide_monic(num, cyclotomic(d));
  }
  return num;
}

mpz_class eval(const ZPoly& f, const mpz_class& x) {
  mpz_class acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
  return acc;
}

mpz_class eval_mod(const ZPoly& f, const mpz_class& x, const mpz_class& m) {
  mpz_class acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) {
    acc = acc * x + f[i];
    mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), m.get_mpz_t());
  }
  return acc;
}

// Sylvester determinant by fraction-free elimination.
mpz_class resultant(const ZPoly& f, const ZPoly& g) {
  const std::size_t m = f.size() - 1, n = g.size() - 1, s = m + n;
  std::vector<std::vector<mpz_class>> a(s, std::vector<mpz_class>(s, 0));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t i = 0; i <= m; ++i) a[r][r + i] = f[m - i];
  }
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t i = 0; i <= n; ++i) a[n + r][r + i] = g[n - i];
  }
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < s; ++k) {
    std::size_t piv = k;
    while (piv < s && a[piv][k] == 0) ++piv;
    if (piv == s) return 0;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < s; ++i) {
      for (std::size_t j = k + 1; j < s; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]);
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[s - 1][s - 1];
}

bool probable_prime(const mpz_class& v) { return v > 1 && mpz_probab_prime_p(v.get_mpz_t(), 40) > 0; }

mpz_class parse_int(const nlohmann::json& j, const char* key) {
  const auto& v = j.at(key);
  if (!v.is_string()) throw std::invalid_argument(std::string(key) + " is not a decimal string");
  mpz_class out;
  if (out.set_str(v.get<std::string>(), 10) != 0) throw std::invalid_argument(std::string(key) + " is not an integer");
  return out;
}

struct Entry {
  mpz_class k, M, prime, A;
  unsigned long valuation = 0;
  bool adjusted = false;
  std::vector<std::pair<mpz_class, mpz_class>> table;  // (j, residue)
};

class Checker {
 public:
  RecheckReport report;

  void check(const std::string& name, bool ok, const std::string& detail) {
    for (auto& c : report.checks) {
      if (c.name == name) {
        if (c.ok && !ok) {
          c.ok = false;
          c.detail = detail;
        }
        return;
      }
    }
    report.checks.push_back({name, ok, ok ? "" : detail});
  }
};

}  // namespace

bool RecheckReport::ok() const {
  if (checks.empty()) return false;
  for (const auto& c : checks) {
    if (!c.ok) return false;
  }
  return true;
}

std::string RecheckReport::first_failure() const {
  for (const auto& c : checks) {
    if (!c.ok) return c.name;
  }
  return checks.empty() ? "format" : "";
}

RecheckReport recheck_nonclosure(const std::string& text) {
  Checker ck;
  mpz_class n, p, N, m0;
  std::vector<Entry> entries;
  try {
    const auto j = nlohmann::json::parse(text);
    if (j.at("kind") != "nonclosure-certificate") throw std::invalid_argument("kind");
    n = parse_int(j, "n");
    p = parse_int(j, "p");
    N = parse_int(j, "N");
    m0 = parse_int(j, "m0");
    for (const auto& je : j.at("entries")) {
      Entry e;
      e.k = parse_int(je, "k");
      e.M = parse_int(je, "M");
      e.prime = parse_int(je, "prime");
      e.A = parse_int(je, "A");
      const mpz_class v = parse_int(je, "valuation_at_kM");
      if (!v.fits_ulong_p()) throw std::invalid_argument("valuation");
      e.valuation = v.get_ui();
      e.adjusted = je.at("adjusted").get<bool>();
      for (const auto& row : je.at("exponent_checks")) e.table.emplace_back(parse_int(row, "j"), parse_int(row, "residue"));
      entries.push_back(std::move(e));
    }
    if (entries.empty()) throw std::invalid_argument("no entries");
    if (!n.fits_ulong_p() || !N.fits_ulong_p() || n > 100000 || N > 10000000) throw std::invalid_argument("n or N out of range");
  } catch (const std::exception& e) {
    ck.check("format", false, e.what());
    return ck.report;
  }
  ck.check("format", true, "");

  const unsigned long nn = n.get_ui();
  const bool params =
      probable_prime(p) && n % (p * p) == 0 && nn != 1 && nn != 4 && nn != 8 && nn != 12 && N > p;
  ck.check("parameters", params, "need p prime, p^2 | n, n not in {1,4,8,12}, N > p");
  if (!params) return ck.report;

  const ZPoly phi = cyclotomic(nn);
  ZPoly dphi;
  for (std::size_t i = 1; i < phi.size(); ++i) dphi.push_back(phi[i] * static_cast<unsigned long>(i));
  ck.check("m0_resultant", abs(resultant(phi, dphi)) == m0 && m0 != 0, "m0 differs from |res(Phi_n, Phi_n')|");

  bool small = entries[0].M % m0 == 0;
  for (unsigned long q = 2; q <= N.get_ui(); ++q) {
    if (mpz_probab_prime_p(mpz_class(q).get_mpz_t(), 40) > 0 && entries[0].M % q != 0) small = false;
  }
  ck.check("M1_small_primes", small, "M_1 misses m0 or a prime <= N");

  const mpz_class np = n / p;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const Entry& e = entries[i];
    const std::string tag = "entry " + std::to_string(i + 1);
    if (i > 0) {
      const Entry& f = entries[i - 1];
      const mpz_class kM = f.k * f.M, kMp = kM + f.prime;
      ck.check("M_chain", e.M == kM * kMp * eval(phi, kM) * eval(phi, kMp), tag + ": M differs from the product rule");
    }
    const mpz_class kM = e.k * e.M;
    ck.check("A_construction", e.k >= 1 && e.A == (e.adjusted ? mpz_class(kM + e.prime) : kM),
             tag + ": A is neither kM nor kM + p_i as flagged");
    const bool prime_ok = probable_prime(e.prime) && e.prime > N && e.prime != p && kM % e.prime != 0;
    ck.check("prime", prime_ok, tag + ": p_i must be a prime above N not dividing kM");
    if (!prime_ok) continue;
    const mpz_class q2 = e.prime * e.prime;
    const mpz_class at_kM = eval_mod(phi, kM, q2);
    const bool flag_ok = at_kM % e.prime == 0 && (at_kM == 0) == e.adjusted && (e.valuation > 1) == e.adjusted;
    const mpz_class at_A = eval_mod(phi, e.A, q2);
    ck.check("exact_division", flag_ok && at_A % e.prime == 0 && at_A != 0,
             tag + ": p_i does not divide Phi_n(A) exactly once, or the adjustment flag is wrong");
    bool cross = true;
    for (std::size_t j = 0; j < i; ++j) {
      if (entries[j].A % e.prime == 0 || eval_mod(phi, entries[j].A, e.prime) == 0) cross = false;
    }
    ck.check("cross_conditions", cross, tag + ": p_i divides an earlier A_j or Phi_n(A_j)");

    bool table = e.table.size() + 1 == np;
    for (std::size_t t = 0; table && t < e.table.size(); ++t) {
      const auto& [j, r] = e.table[t];
      mpz_class want;
      const mpz_class ex = p * j;
      mpz_powm(want.get_mpz_t(), e.A.get_mpz_t(), ex.get_mpz_t(), e.prime.get_mpz_t());
      table = j == static_cast<unsigned long>(t + 1) && r == want && want != 1;
    }
    ck.check("exponent_table", table, tag + ": A^{pj} mod p_i table is wrong or contains 1");

    // Phi_n(A) Psi(A) = Phi_p(A^{n/p}); with p_i | Phi_n(A) the right side is 0 mod p_i,
    // while A^{n/p} = 1 would force it to be p.
    mpz_class an;
    mpz_powm(an.get_mpz_t(), e.A.get_mpz_t(), np.get_mpz_t(), e.prime.get_mpz_t());
    mpz_class phip = 0, pw = 1;
    for (unsigned long t = 0; t < p.get_ui(); ++t) {
      phip += pw;
      pw = pw * an % e.prime;
    }
    ck.check("psi_conclusion", p % e.prime != 0 && phip % e.prime == 0 && an != 1,
             tag + ": Phi_p(A^{n/p}) is not 0 mod p_i or A^{n/p} = 1");
  }
  return ck.report;
}

}  // namespace cyclok2::k2tame
