#include "cyclok2/factorx/q.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "cyclok2/arith/primes.hpp"
#include "cyclok2/factorx/fp.hpp"

namespace cyclok2::factorx {

using algebra::BigInt;
using algebra::RationalField;

namespace {

const RationalField QQ{};

// Sums of sub-multisets, as a bitmask over degrees 0..n.
std::vector<bool> subset_sums(const std::vector<std::pair<int, int>>& parts, int n) {
  // parts: (unit degree, max count)
  std::vector<bool> reach(static_cast<std::size_t>(n) + 1, false);
  reach[0] = true;
  for (const auto& [unit, count] : parts) {
    for (int k = 0; k < count; ++k) {
      for (int s = n; s >= unit; --s) {
        if (reach[static_cast<std::size_t>(s - unit)]) reach[static_cast<std::size_t>(s)] = true;
      }
    }
  }
  return reach;
}

FpPoly reduce_mod(const QPoly& f, const PrimeField& fld) {
  std::vector<std::uint64_t> c;
  c.reserve(f.size());
  for (const auto& a : f.coeffs()) c.push_back(fld.from_bigint(a.num()));
  return FpPoly(fld, std::move(c));
}

// Possible degrees of a factor over Q allowed by the factorization mod q, or
// empty optional when q is unusable (drops degree or is not squarefree).
std::optional<std::vector<bool>> modular_pattern(const QPoly& f, std::uint64_t q) {
  const PrimeField fld(q);
  const FpPoly fb = reduce_mod(f, fld);
  if (fb.degree() != f.degree()) return std::nullopt;
  if (algebra::gcd(fb, fb.derivative()).degree() != 0) return std::nullopt;
  std::vector<std::pair<int, int>> parts;
  for (const auto& [block, d] : distinct_degree(algebra::monic(fb))) {
    parts.emplace_back(d, block.degree() / d);
  }
  return subset_sums(parts, f.degree());
}

std::vector<bool> newton_pattern(const NewtonPolygon& np, int n) {
  std::vector<std::pair<int, int>> parts;
  for (std::size_t k = 0; k < np.slopes.size(); ++k) {
    const int e = static_cast<int>(np.slopes[k].den().get_si());
    parts.emplace_back(e, np.lengths[k] / e);
  }
  return subset_sums(parts, n);
}

std::vector<Rational> rational_roots(const QPoly& f, bool& complete) {
  complete = true;
  std::vector<Rational> roots;
  if (f.coeff(0).is_zero()) roots.emplace_back(0L);
  std::size_t low = 0;
  while (f[low].is_zero()) ++low;
  const BigInt a0 = abs(f[low].num()), an = abs(f.lead().num());
  arith::FactorLimits lim;
  lim.trial_limit = 100'000;
  lim.rho_iterations = 20'000;
  const auto fa = arith::factor_integer(a0, lim), fb = arith::factor_integer(an, lim);
  if (!fa.complete() || !fb.complete()) {
    complete = false;
    return roots;
  }
  for (const auto& d : arith::divisors(fa)) {
    for (const auto& e : arith::divisors(fb)) {
      for (int s : {1, -1}) {
        const Rational r(BigInt(s * d), e);
        if (f.evaluate(r).is_zero() &&
            std::find(roots.begin(), roots.end(), r) == roots.end()) {
          roots.push_back(r);
        }
      }
    }
  }
  return roots;
}

QPoly linear_factor(const Rational& r) {
  return QPoly(QQ, {Rational(BigInt(-r.num())), Rational(r.den())});
}

std::vector<BigInt> signed_divisors(const BigInt& v, bool positive_only) {
  arith::FactorLimits lim;
  lim.trial_limit = 100'000;
  const auto fz = arith::factor_integer(v, lim);
  if (!fz.complete()) return {};
  std::vector<BigInt> out;
  for (const auto& d : arith::divisors(fz)) {
    out.push_back(d);
    if (!positive_only) out.push_back(-d);
  }
  return out;
}

// Kronecker: a factor of degree d is determined by its values at d+1 points,
// each of which divides the value of f there.
std::optional<QPoly> kronecker_factor(const QPoly& f, int d) {
  std::vector<std::pair<long, BigInt>> pts;
  for (long x = -12; x <= 12; ++x) {
    const Rational v = f.evaluate(Rational(x));
    if (!v.is_zero()) pts.emplace_back(x, abs(v.num()));
  }
  std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
    return a.second < b.second || (a.second == b.second && a.first < b.first);
  });
  pts.resize(static_cast<std::size_t>(d) + 1);
  std::vector<std::vector<BigInt>> choices;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    choices.push_back(signed_divisors(pts[i].second, i == 0));
    if (choices.back().empty()) return std::nullopt;
  }
  std::vector<Rational> xs;
  for (const auto& pt : pts) xs.emplace_back(pt.first);
  std::vector<BigInt> vals(pts.size());
  std::optional<QPoly> found;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (found) return;
    if (i == pts.size()) {
      // Lagrange interpolation through (xs, vals).
      QPoly g(QQ);
      for (std::size_t a = 0; a < xs.size(); ++a) {
        QPoly basis = QPoly::constant(QQ, Rational(vals[a]));
        for (std::size_t b = 0; b < xs.size(); ++b) {
          if (a == b) continue;
          basis = basis * QPoly(QQ, {-xs[b], Rational(1L)});
          basis = basis.scaled((xs[a] - xs[b]).inverse());
        }
        g += basis;
      }
      if (g.degree() != d) return;
      for (const auto& c : g.coeffs()) {
        if (!c.is_integer()) return;
      }
      if (algebra::divides(g, f)) found = primitive_integer_part(g);
      return;
    }
    for (const auto& v : choices[i]) {
      vals[i] = v;
      rec(i + 1);
      if (found) return;
    }
  };
  rec(0);
  return found;
}

struct PatternResult {
  std::vector<bool> allowed;
  std::vector<std::uint64_t> modular, newton;
};

PatternResult degree_pattern(const QPoly& f, int wanted_primes, bool have_root) {
  const int n = f.degree();
  PatternResult out;
  out.allowed.assign(static_cast<std::size_t>(n) + 1, true);
  auto narrow = [&](const std::vector<bool>& pat) {
    bool changed = false;
    for (int d = 1; d < n; ++d) {
      if (out.allowed[static_cast<std::size_t>(d)] && !pat[static_cast<std::size_t>(d)]) {
        out.allowed[static_cast<std::size_t>(d)] = false;
        changed = true;
      }
    }
    return changed;
  };
  auto empty = [&]() {
    for (int d = 1; d < n; ++d) {
      if (out.allowed[static_cast<std::size_t>(d)]) {
        if (!have_root && (d == 1 || d == n - 1)) continue;
        return false;
      }
    }
    return true;
  };
  if (empty()) return out;
  // Newton polygons at small primes dividing the constant term or the
  // leading coefficient.
  for (std::uint64_t q : arith::primes_up_to(100)) {
    if (!f.coeff(0).is_zero() &&
        (mpz_divisible_ui_p(f.coeff(0).num().get_mpz_t(), q) != 0 ||
         mpz_divisible_ui_p(f.lead().num().get_mpz_t(), q) != 0)) {
      const NewtonPolygon np = newton_polygon(f, q);
      if (np.slopes.size() > 1 || (np.slopes.size() == 1 && np.slopes[0].den() != 1)) {
        if (narrow(newton_pattern(np, n))) out.newton.push_back(q);
        if (empty()) return out;
      }
    }
  }
  int used = 0;
  for (std::uint64_t q : arith::primes_up_to(2000)) {
    if (used >= wanted_primes) break;
    const auto pat = modular_pattern(f, q);
    if (!pat) continue;
    ++used;
    if (narrow(*pat)) out.modular.push_back(q);
    if (empty()) return out;
  }
  return out;
}

bool pattern_empty(const std::vector<bool>& allowed, int n, bool have_root) {
  for (int d = 1; d < n; ++d) {
    if (!allowed[static_cast<std::size_t>(d)]) continue;
    if (!have_root && (d == 1 || d == n - 1)) continue;
    return false;
  }
  return true;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Irreducible: return "irreducible";
    case Verdict::Reducible: return "reducible";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

std::string to_string(IrreducibilityMethod m) {
  switch (m) {
    case IrreducibilityMethod::Linear: return "linear";
    case IrreducibilityMethod::RationalRoot: return "rational-root";
    case IrreducibilityMethod::DegreePattern: return "degree-pattern";
    case IrreducibilityMethod::ExhaustiveSearch: return "exhaustive-search";
    case IrreducibilityMethod::None: return "none";
  }
  return "?";
}

QPoly primitive_integer_part(const QPoly& f) {
  if (f.is_zero()) return f;
  BigInt l = 1, g = 0;
  for (const auto& c : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
  std::vector<BigInt> ints;
  for (const auto& c : f.coeffs()) ints.push_back(c.num() * (l / c.den()));
  for (const auto& c : ints) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (ints.back() < 0) g = -g;
  std::vector<Rational> out;
  for (const auto& c : ints) out.emplace_back(BigInt(c / g));
  return QPoly(QQ, std::move(out));
}

NewtonPolygon newton_polygon(const QPoly& f, std::uint64_t p) {
  if (f.is_zero() || f.coeff(0).is_zero()) {
    throw std::domain_error("Newton polygon needs a nonzero constant term");
  }
  if (!arith::is_prime(p)) throw std::invalid_argument("Newton polygon at a non-prime");
  NewtonPolygon np;
  np.prime = p;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const Rational& c = f[i];
    if (c.is_zero()) continue;
    if (!c.is_integer()) throw std::invalid_argument("Newton polygon needs integer coefficients");
    np.points.emplace_back(static_cast<int>(i), static_cast<int>(arith::valuation(c.num(), BigInt(p))));
  }
  // Monotone chain lower hull; points are sorted by exponent already.
  std::vector<std::pair<int, int>> hull;
  auto cross = [](const std::pair<int, int>& o, const std::pair<int, int>& a,
                  const std::pair<int, int>& b) {
    return static_cast<long>(a.first - o.first) * (b.second - o.second) -
           static_cast<long>(a.second - o.second) * (b.first - o.first);
  };
  for (const auto& pt : np.points) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), pt) <= 0) hull.pop_back();
    hull.push_back(pt);
  }
  np.vertices = hull;
  for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
    const int len = hull[k + 1].first - hull[k].first;
    np.lengths.push_back(len);
    np.slopes.emplace_back(BigInt(hull[k].second - hull[k + 1].second), BigInt(len));
  }
  return np;
}

IrreducibilityCertificate is_irreducible_q(const QPoly& f_in, const IrreducibilityOptions& opt) {
  if (f_in.degree() < 1) throw std::invalid_argument("irreducibility of a constant");
  const QPoly f = primitive_integer_part(f_in);
  const int n = f.degree();
  IrreducibilityCertificate cert;
  if (n == 1) {
    cert.verdict = Verdict::Irreducible;
    cert.method = IrreducibilityMethod::Linear;
    cert.detail = "degree one";
    return cert;
  }
  bool roots_complete = false;
  const auto roots = rational_roots(f, roots_complete);
  if (!roots.empty()) {
    cert.verdict = Verdict::Reducible;
    cert.method = IrreducibilityMethod::RationalRoot;
    cert.factor = linear_factor(roots.front());
    cert.detail = "rational root " + roots.front().str();
    return cert;
  }
  if (roots_complete && n <= 3) {
    cert.verdict = Verdict::Irreducible;
    cert.method = IrreducibilityMethod::RationalRoot;
    cert.detail = "no rational root in degree " + std::to_string(n);
    return cert;
  }
  const bool have_root = !roots_complete;  // unknown counts as possible
  const PatternResult pat = degree_pattern(f, opt.modular_primes, have_root);
  cert.modular_primes = pat.modular;
  cert.newton_primes = pat.newton;
  if (pattern_empty(pat.allowed, n, have_root)) {
    cert.verdict = Verdict::Irreducible;
    cert.method = IrreducibilityMethod::DegreePattern;
    cert.detail = "no factor degree survives";
    return cert;
  }
  if (n <= opt.exhaustive_degree) {
    for (int d = 2; 2 * d <= n; ++d) {
      if (!pat.allowed[static_cast<std::size_t>(d)]) continue;
      if (auto g = kronecker_factor(f, d)) {
        cert.verdict = Verdict::Reducible;
        cert.method = IrreducibilityMethod::ExhaustiveSearch;
        cert.factor = *g;
        cert.detail = "factor of degree " + std::to_string(d);
        return cert;
      }
    }
    if (roots_complete) {
      cert.verdict = Verdict::Irreducible;
      cert.method = IrreducibilityMethod::ExhaustiveSearch;
      cert.detail = "no integer factor of degree <= " + std::to_string(n / 2);
      return cert;
    }
  }
  cert.detail = "degree " + std::to_string(n) + " above the exhaustive bound and no certificate found";
  return cert;
}

bool check_certificate(const QPoly& f_in, const IrreducibilityCertificate& cert) {
  const QPoly f = primitive_integer_part(f_in);
  const int n = f.degree();
  if (cert.verdict == Verdict::Reducible) {
    return cert.factor && cert.factor->degree() >= 1 && cert.factor->degree() < n &&
           algebra::divides(*cert.factor, f);
  }
  if (cert.verdict != Verdict::Irreducible) return false;
  switch (cert.method) {
    case IrreducibilityMethod::Linear: return n == 1;
    case IrreducibilityMethod::RationalRoot: {
      bool complete = false;
      return n <= 3 && rational_roots(f, complete).empty() && complete;
    }
    case IrreducibilityMethod::DegreePattern: {
      bool complete = false;
      const bool have_root = !(rational_roots(f, complete).empty() && complete);
      std::vector<bool> allowed(static_cast<std::size_t>(n) + 1, true);
      auto apply = [&](const std::vector<bool>& pat) {
        for (int d = 1; d < n; ++d) allowed[static_cast<std::size_t>(d)] = allowed[static_cast<std::size_t>(d)] && pat[static_cast<std::size_t>(d)];
      };
      for (auto q : cert.newton_primes) apply(newton_pattern(newton_polygon(f, q), n));
      for (auto q : cert.modular_primes) {
        const auto pat = modular_pattern(f, q);
        if (!pat) return false;
        apply(*pat);
      }
      return pattern_empty(allowed, n, have_root);
    }
    case IrreducibilityMethod::ExhaustiveSearch:
      return is_irreducible_q(f).irreducible();
    case IrreducibilityMethod::None: return false;
  }
  return false;
}

}  // namespace cyclok2::factorx
