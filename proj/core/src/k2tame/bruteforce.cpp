#include "cyclok2/k2tame/bruteforce.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>
#include <thread>

#include "cyclok2/algebra/quotient.hpp"
#include "cyclok2/arith/primes.hpp"
#include "cyclok2/factorx/fp.hpp"
#include "cyclok2/k2tame/symbols.hpp"
#include "json.hpp"

namespace cyclok2::k2tame {

using algebra::QuotientRing;

namespace {

FpPoly frobenius_lift(const FpPoly& f, int s, std::uint64_t p) {
  std::size_t q = 1;
  for (int i = 0; i < s; ++i) q *= static_cast<std::size_t>(p);
  return f.inflate(q);
}

bool poly_less(const FpPoly& a, const FpPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return factorx::canonical_less(a, b);
}

bool witness_less(const Witness& a, const Witness& b) {
  if (a.s != b.s) return a.s < b.s;
  const int da = std::max(a.f.degree(), a.g.degree()), db = std::max(b.f.degree(), b.g.degree());
  if (da != db) return da < db;
  if (!(a.f == b.f)) return poly_less(a.f, b.f);
  return poly_less(a.g, b.g);
}

void keep_least(std::map<std::vector<int>, Witness>& into, const std::vector<int>& key, const Witness& w) {
  auto it = into.find(key);
  if (it == into.end()) {
    into.emplace(key, w);
  } else if (witness_less(w, it->second)) {
    it->second = w;
  }
}

void require_inputs(int l, std::uint64_t p, const std::vector<Mat2<PrimeField>>& gens) {
  if (!cyclo::is_small_prime(l) || l < 5) throw std::invalid_argument("level l must be a prime >= 5");
  if (!cyclo::cyclotomic_irreducible_mod(l, p)) throw cyclo::ReducibleCyclotomic(l, p);
  if (gens.empty()) throw std::invalid_argument("at least one generator is required");
  const PrimeField fld(p);
  const auto W = moebius::roots_of_unity(fld);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!(gens[i].field() == fld)) throw algebra::FieldMismatch();
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (!moebius::essentially_distinct(gens[i], gens[j], W)) {
        throw std::invalid_argument("generators must be pairwise essentially distinct");
      }
    }
  }
}

// Shared, read-only search setup.
struct Plan {
  int l = 0;
  std::uint64_t p = 0;
  int bound = 0;
  PrimeField fld;
  std::vector<Mat2<PrimeField>> gens;
  std::vector<FpPoly> forms;                // P_i
  std::vector<std::vector<FpPoly>> zeta;    // zeta[i][j] = zeta_i^j mod P_i, j in [0, l)
  std::vector<FpPoly> idem;                 // E_i: 1 mod P_i, 0 mod P_k
  FpPoly modulus;                           // prod P_i
  std::vector<FpPoly> shifts;               // h * modulus with deg <= bound
  std::uint64_t square_period = 0;
  std::uint64_t p2 = 0;                      // p^2 mod l
};

Plan make_plan(int l, std::uint64_t p, const std::vector<Mat2<PrimeField>>& gens, int bound) {
  Plan pl{l, p, bound, PrimeField(p), gens, {}, {}, {}, FpPoly(PrimeField(p)), {}, 0, 0};
  const PrimeField& f = pl.fld;
  pl.modulus = FpPoly::constant(f, 1);
  for (const auto& m : gens) {
    const FpPoly P = cyclo::basis_form(l, m);
    pl.forms.push_back(P);
    pl.modulus *= P;
    const QuotientRing<PrimeField> R(P);
    const FpPoly z = R.mul(R.reduce(m.top()), R.inv(R.reduce(m.bottom())));
    std::vector<FpPoly> pw{R.one()};
    for (int j = 1; j < l; ++j) pw.push_back(R.mul(pw.back(), z));
    pl.zeta.push_back(std::move(pw));
  }
  for (const auto& P : pl.forms) {
    const FpPoly rest = algebra::exact_div(pl.modulus, P);
    // s * rest + t * P = 1, so s * rest is 1 mod P and 0 mod the others.
    const auto bz = algebra::xgcd(rest, P);
    pl.idem.push_back((bz.s * rest) % pl.modulus);
  }
  const int room = bound - pl.modulus.degree();
  pl.shifts.push_back(FpPoly(f));
  if (room >= 0) {
    std::uint64_t total = 1;
    for (int i = 0; i <= room; ++i) total *= p;
    for (std::uint64_t code = 1; code < total; ++code) {
      std::vector<std::uint64_t> c(static_cast<std::size_t>(room) + 1, 0);
      std::uint64_t k = code;
      for (auto& x : c) {
        x = k % p;
        k /= p;
      }
      pl.shifts.push_back(FpPoly(f, c) * pl.modulus);
    }
  }
  const std::uint64_t L = static_cast<std::uint64_t>(l);
  pl.p2 = arith::mulmod(p % L, p % L, L);
  pl.square_period = arith::multiplicative_order(pl.p2, L);
  return pl;
}

// Monic g of degree d, indexed by code in [0, p^d).
FpPoly monic_from_code(const PrimeField& f, int d, std::uint64_t code) {
  std::vector<std::uint64_t> c(static_cast<std::size_t>(d) + 1, 0);
  for (int i = 0; i < d; ++i) {
    c[static_cast<std::size_t>(i)] = code % f.modulus();
    code /= f.modulus();
  }
  c.back() = 1;
  return FpPoly(f, std::move(c));
}

struct Worker {
  const Plan& pl;
  std::map<std::vector<int>, Witness> best;
  SearchStats stats;

  void examine(const FpPoly& f_raw, const FpPoly& g_raw) {
    ++stats.candidates;
    if (f_raw.derivative().is_zero() && g_raw.derivative().is_zero()) {
      ++stats.descended;
      return;
    }
    if (algebra::gcd(f_raw, g_raw).degree() != 0) return;
    ++stats.coprime;
    const auto form = cyclo::cyclotomic_form(pl.l, f_raw, g_raw);
    FpPoly residual = form.value;
    std::vector<int> r;
    int r_total = 0;
    for (const auto& P : pl.forms) {
      int v = 0;
      while (true) {
        auto [q, rem] = algebra::divrem(residual, P);
        if (!rem.is_zero()) break;
        residual = std::move(q);
        ++v;
      }
      if (v % pl.l == 0) return;
      r.push_back(v);
      r_total += v;
    }
    ++stats.valuation_ok;
    // deg Psi^l = (l - 1)(max deg - sum r) must be a multiple of l(l - 1).
    const int dmax = std::max(f_raw.degree(), g_raw.degree());
    if ((dmax - r_total) % pl.l != 0) return;
    for (const auto& [part, m] : factorx::squarefree_decomposition(residual)) {
      if (m % pl.l != 0) return;
    }
    ++stats.residual_ok;

    // Normalize f monic for the record; the ratio is unchanged.
    const auto inv = pl.fld.inv(f_raw.lead());
    const FpPoly f = f_raw.scaled(inv), g = g_raw.scaled(inv);
    const auto nform = cyclo::cyclotomic_form(pl.l, f, g);
    const auto res = cyclo::decompose_form(nform, pl.gens);
    const auto* d = std::get_if<cyclo::Decomposition>(&res);
    if (d == nullptr || d->exponents.size() != pl.gens.size()) {
      throw std::logic_error("prefiltered candidate failed to decompose");
    }
    ++stats.decomposed;
    std::vector<int> e(pl.gens.size());
    for (const auto& be : d->exponents) e[be.index] = be.e;

    const std::uint64_t L = static_cast<std::uint64_t>(pl.l);
    std::uint64_t mult = 1;
    for (std::uint64_t s = 0; s < pl.square_period; ++s) {
      std::vector<int> sig(e.size());
      for (std::size_t i = 0; i < e.size(); ++i) {
        sig[i] = static_cast<int>(arith::mulmod(static_cast<std::uint64_t>(e[i]), mult, L));
      }
      Witness w{f, g, static_cast<int>(s), sig, r, *d};
      keep_least(best, sig, w);
      mult = arith::mulmod(mult, pl.p2, L);
    }
  }

  void run_g(const FpPoly& g) {
    const std::size_t n = pl.forms.size();
    std::vector<FpPoly> g_mod;
    for (const auto& P : pl.forms) g_mod.push_back(g % P);
    std::vector<int> j(n, 1);
    while (true) {
      FpPoly f0(pl.fld);
      for (std::size_t i = 0; i < n; ++i) {
        const FpPoly target = (pl.zeta[i][static_cast<std::size_t>(j[i])] * g_mod[i]) % pl.forms[i];
        f0 += target * pl.idem[i];
      }
      f0 = f0 % pl.modulus;
      for (const auto& h : pl.shifts) {
        const FpPoly f = f0 + h;
        if (f.is_zero() || f.degree() > pl.bound) continue;
        examine(f, g);
      }
      std::size_t k = 0;
      while (k < n && j[k] == pl.l - 1) j[k++] = 1;
      if (k == n) break;
      ++j[k];
    }
  }
};

std::vector<FpPoly> all_monic_g(const PrimeField& f, int bound) {
  std::vector<FpPoly> out;
  std::uint64_t total = 1;
  for (int d = 0; d <= bound; ++d) {
    for (std::uint64_t code = 0; code < total; ++code) out.push_back(monic_from_code(f, d, code));
    total *= f.modulus();
  }
  return out;
}

}  // namespace

FpPoly Witness::lifted_f() const { return frobenius_lift(f, s, f.ring().modulus()); }
FpPoly Witness::lifted_g() const { return frobenius_lift(g, s, g.ring().modulus()); }

std::string Witness::describe() const {
  return "f = " + algebra::to_string(lifted_f()) + ", g = " + algebra::to_string(lifted_g());
}

SearchStats& SearchStats::operator+=(const SearchStats& o) {
  candidates += o.candidates;
  descended += o.descended;
  coprime += o.coprime;
  valuation_ok += o.valuation_ok;
  residual_ok += o.residual_ok;
  decomposed += o.decomposed;
  seconds += o.seconds;
  return *this;
}

Reachability reachable_signatures(int l, std::uint64_t p, const std::vector<Mat2<PrimeField>>& generators,
                                  int degree_bound, unsigned jobs) {
  require_inputs(l, p, generators);
  if (degree_bound < 0) throw std::invalid_argument("degree bound must be nonnegative");
  const auto start = std::chrono::steady_clock::now();
  const Plan plan = make_plan(l, p, generators, degree_bound);
  const std::vector<FpPoly> gs = all_monic_g(plan.fld, degree_bound);

  jobs = std::max(1u, jobs);
  std::vector<Worker> workers(jobs, Worker{plan, {}, {}});
  auto body = [&](unsigned w) {
    for (std::size_t k = w; k < gs.size(); k += jobs) workers[w].run_g(gs[k]);
  };
  if (jobs == 1) {
    body(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < jobs; ++w) threads.emplace_back(body, w);
    for (auto& t : threads) t.join();
  }

  Reachability out{l, p, degree_bound, {}, {}};
  for (const auto& w : workers) {
    out.stats += w.stats;
    for (const auto& [sig, wit] : w.best) keep_least(out.witnesses, sig, wit);
  }
  out.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

BruteForceResult brute_force_cyclotomicity(int l, std::uint64_t p, const std::vector<Mat2<PrimeField>>& generators,
                                           const std::vector<int>& exponents, int degree_bound, unsigned jobs) {
  if (exponents.size() != generators.size()) {
    throw std::invalid_argument("one exponent per generator expected");
  }
  for (int e : exponents) {
    if (e < 1 || e >= l) throw std::out_of_range("exponents must lie in [1, l-1]");
  }
  const Reachability reach = reachable_signatures(l, p, generators, degree_bound, jobs);
  BruteForceResult out{std::nullopt, degree_bound, reach.stats};
  if (auto it = reach.witnesses.find(exponents); it != reach.witnesses.end()) out.witness = it->second;
  return out;
}

bool verify_witness(int l, const std::vector<Mat2<PrimeField>>& generators, const std::vector<int>& exponents,
                    const Witness& w) {
  const FpPoly F = w.lifted_f(), G = w.lifted_g();
  std::vector<FpPoly> primes;
  auto add = [&](const FpPoly& h) {
    if (h.degree() < 1) return;
    for (const auto& [q, m] : factorx::factor_fp(h).factors) {
      if (std::find(primes.begin(), primes.end(), q) == primes.end()) primes.push_back(q);
    }
  };
  add(cyclo::cyclotomic_form(l, w.f, w.g).value);
  add(w.f);
  add(w.g);
  for (const auto& m : generators) {
    add(cyclo::basis_form(l, m));
    add(m.top());
    add(m.bottom());
  }
  const auto lhs = cyclotomic_element(static_cast<std::uint64_t>(l), algebra::RationalFunction<PrimeField>(F, G));
  for (const auto& P : primes) {
    const auto ideal = algebra::PrimeIdeal<PrimeField>::from_irreducible(P);
    const QuotientRing<PrimeField> R(P);
    FpPoly rhs = R.one();
    for (std::size_t i = 0; i < generators.size(); ++i) {
      rhs = R.mul(rhs, R.pow(cyclo_tame(l, generators[i], ideal), exponents[i]));
    }
    if (!(tame_fx(lhs, ideal) == rhs)) return false;
  }
  return true;
}

BruteForceCount brute_force_count(int l, std::uint64_t p, const std::vector<Mat2<PrimeField>>& generators,
                                  int degree_bound, unsigned jobs) {
  require_inputs(l, p, generators);
  const std::size_t n = generators.size();
  if (n > 8) throw std::invalid_argument("too many generators for exhaustive counting");
  BruteForceCount out;
  std::set<std::vector<int>> reachable;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<Mat2<PrimeField>> sub;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) {
        sub.push_back(generators[i]);
        idx.push_back(i);
      }
    }
    const int bound = degree_bound >= 0 ? degree_bound : static_cast<int>(p) * (2 * static_cast<int>(sub.size()) - 1);
    const Reachability r = reachable_signatures(l, p, sub, bound, jobs);
    out.stats += r.stats;
    for (const auto& [sig, w] : r.witnesses) {
      std::vector<int> full(n, 0);
      for (std::size_t k = 0; k < idx.size(); ++k) full[idx[k]] = sig[k];
      reachable.insert(full);
    }
  }
  out.cyclotomic.assign(reachable.begin(), reachable.end());
  out.c = static_cast<long>(reachable.size());
  // Lines through the origin, represented with first nonzero entry 1.
  std::vector<int> v(n, 0);
  while (true) {
    std::size_t k = 0;
    while (k < n && v[k] == l - 1) v[k++] = 0;
    if (k == n) break;
    ++v[k];
    const auto lead = std::find_if(v.begin(), v.end(), [](int x) { return x != 0; });
    if (*lead != 1) continue;
    bool all = true;
    for (int t = 1; t < l && all; ++t) {
      std::vector<int> w(n);
      for (std::size_t i = 0; i < n; ++i) w[i] = (v[i] * t) % l;
      all = reachable.count(w) > 0;
    }
    out.cs += all;
  }
  return out;
}

std::string to_json(const BruteForceResult& r) {
  nlohmann::ordered_json j;
  j["degree_bound"] = r.degree_bound;
  if (r.witness) {
    const Witness& w = *r.witness;
    j["result"] = "witness";
    j["f"] = algebra::to_string(w.lifted_f());
    j["g"] = algebra::to_string(w.lifted_g());
    j["core_f"] = algebra::to_string(w.f);
    j["core_g"] = algebra::to_string(w.g);
    j["frobenius_power"] = w.s;
    j["r"] = w.r;
    j["decomposition"] = nlohmann::ordered_json::parse(cyclo::to_json(w.decomposition));
  } else {
    j["result"] = "none within bound";
  }
  j["stats"] = {{"candidates", std::to_string(r.stats.candidates)},
                {"descended", std::to_string(r.stats.descended)},
                {"coprime", std::to_string(r.stats.coprime)},
                {"valuation_ok", std::to_string(r.stats.valuation_ok)},
                {"residual_ok", std::to_string(r.stats.residual_ok)},
                {"decomposed", std::to_string(r.stats.decomposed)}};
  return j.dump();
}

}  // namespace cyclok2::k2tame
