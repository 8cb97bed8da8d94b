#include "cyclok2/numfield/numfield.hpp"

#include <sstream>

#include "cyclok2/arith/number_theory.hpp"
#include "cyclok2/cyclo/cyclotomic.hpp"
#include "cyclok2/factorx/fp.hpp"
#include "cyclok2/factorx/q.hpp"
#include "cyclok2/k2tame/symbols.hpp"
#include "json.hpp"

namespace cyclok2::numfield {

using algebra::BigInt;
using Ring = algebra::QuotientRing<RationalField>;

struct NumberField::Data {
  Ring ring;
  std::string certification;
  bool certified;
};

NumberField::NumberField(const QPoly& modulus, const std::string& citation) {
  if (modulus.degree() < 1) throw std::invalid_argument("number field modulus must be nonconstant");
  if (!modulus.is_monic()) throw std::invalid_argument("number field modulus must be monic");
  const auto cert = factorx::is_irreducible_q(modulus);
  if (cert.verdict == factorx::Verdict::Reducible) {
    throw std::invalid_argument("number field modulus " + algebra::to_string(modulus) + " is reducible");
  }
  std::string how;
  bool ok = cert.irreducible();
  if (ok) {
    how = "certified: " + factorx::to_string(cert.method);
  } else if (!citation.empty()) {
    how = "cited: " + citation;
  } else {
    throw std::invalid_argument("irreducibility of " + algebra::to_string(modulus) + " not certified");
  }
  d_ = std::make_shared<const Data>(Data{Ring(modulus), how, ok});
}

NumberField NumberField::selmer(std::uint64_t p) {
  if (p < 2) throw std::invalid_argument("selmer field: need p >= 2");
  const RationalField q;
  std::vector<Rational> c(p + 1, Rational(0));
  c[0] = 1;
  c[1] = 1;
  c[p] += 1;
  QPoly f(q, std::move(c));
  if (p % 3 == 2 && p > 2) f = algebra::exact_div(f, QPoly::from_ints(q, {1, 1, 1}));
  return NumberField(f, "Selmer's theorem on x^n + x + 1");
}

NumberField NumberField::newton_family(std::uint64_t p) {
  if (p < 2) throw std::invalid_argument("x^p + x^(p-1) + 2: need p >= 2");
  const RationalField q;
  std::vector<Rational> c(p + 1, Rational(0));
  c[0] = 2;
  c[p - 1] += 1;
  c[p] += 1;
  return NumberField(QPoly(q, std::move(c)), "Newton polygon at 2 for x^n + x^(n-1) + 2");
}

const QPoly& NumberField::modulus() const { return d_->ring.modulus(); }
int NumberField::degree() const { return d_->ring.degree(); }
const std::string& NumberField::certification() const { return d_->certification; }
bool NumberField::certified() const { return d_->certified; }

Element NumberField::generator() const { return Element(*this, d_->ring.generator()); }
Element NumberField::from_poly(const QPoly& p) const { return Element(*this, d_->ring.reduce(p)); }
Element NumberField::from_int(long v) const { return Element(*this, d_->ring.from_int(v)); }

bool operator==(const NumberField& a, const NumberField& b) {
  return a.d_ == b.d_ || a.d_->ring.modulus() == b.d_->ring.modulus();
}

namespace {

void same_field(const Element& a, const Element& b) {
  if (!(a.field() == b.field())) throw algebra::FieldMismatch();
}

}  // namespace

Element Element::operator-() const { return Element(f_, -v_); }

Element operator+(const Element& a, const Element& b) {
  same_field(a, b);
  return Element(a.f_, a.v_ + b.v_);
}

Element operator-(const Element& a, const Element& b) {
  same_field(a, b);
  return Element(a.f_, a.v_ - b.v_);
}

Element operator*(const Element& a, const Element& b) {
  same_field(a, b);
  return Element(a.f_, a.f_.d_->ring.mul(a.v_, b.v_));
}

Element operator/(const Element& a, const Element& b) { return a * b.inverse(); }

bool operator==(const Element& a, const Element& b) { return a.f_ == b.f_ && a.v_ == b.v_; }

Element Element::inverse() const { return Element(f_, f_.d_->ring.inv(v_)); }

Element Element::pow(long e) const { return Element(f_, f_.d_->ring.pow(v_, e)); }

Element Element::apply(const QPoly& p) const { return Element(f_, f_.d_->ring.evaluate(p, v_)); }

Rational Element::norm() const {
  if (v_.is_zero()) return Rational(0);
  return algebra::resultant(v_, f_.modulus());
}

std::string Element::str() const { return algebra::to_string(v_, "a"); }

bool Report::ok() const {
  if (checks.empty()) return false;
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

void Report::add(std::string check, bool passed, std::string witness) {
  checks.push_back({std::move(check), passed, std::move(witness)});
}

std::string Report::to_json() const {
  nlohmann::ordered_json j;
  j["name"] = name;
  j["ok"] = ok();
  auto& arr = j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    arr.push_back({{"name", c.name}, {"status", c.passed ? "pass" : "fail"}, {"witness", c.witness}});
  }
  return j.dump();
}

namespace {

BigInt pow_ui(unsigned long a, unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), a, e);
  return r;
}

// (base)^e mod q for e = 1 .. emax never equals 1.
bool residue_powers_avoid_one(long base, unsigned emax, const BigInt& q, std::string& witness) {
  BigInt b = base;
  b %= q;
  if (b < 0) b += q;
  BigInt acc = 1;
  std::ostringstream os;
  os << "(" << base << ")^e mod " << q.get_str() << ":";
  for (unsigned e = 1; e <= emax; ++e) {
    acc = BigInt(acc * b % q);
    os << " " << acc.get_str();
    if (acc == 1) {
      witness = os.str();
      return false;
    }
  }
  witness = os.str();
  return true;
}

std::string str(const Rational& r) { return r.str(); }

void check_prime_residue(Report& r, const BigInt& q, unsigned l, long base) {
  std::string w;
  const bool ok = residue_powers_avoid_one(base, l, q, w);
  r.add("tame_residue", ok, w);
}

bool prime_coprime(const BigInt& q, const Rational& v) { return v.is_integer() && v.num() % q != 0; }

}  // namespace

Report verify_thm_93(std::uint64_t p) {
  if (p <= 3 || !arith::is_prime(p)) throw std::invalid_argument("verify_thm_93: need a prime p > 3");
  Report r;
  r.name = "selmer-reduction p=" + std::to_string(p);
  const NumberField F = NumberField::selmer(p);
  const bool i2 = p % 3 == 2;
  r.add("modulus", true, algebra::to_string(F.modulus()) + " (" + F.certification() + ")");

  const Element a = F.generator();
  const Element one = F.from_int(1);
  const QPoly phi = cyclo::cyclotomic_poly(p);
  const long lp = static_cast<long>(p);

  const Rational na = a.norm();
  r.add("alpha_unit", na == Rational(1) || na == Rational(-1), "N(alpha) = " + str(na));
  r.add("cube_chain", a.pow(2 * lp) + a.pow(lp) + one == a.pow(2) + a + one,
        "alpha^2p + alpha^p + 1 = alpha^2 + alpha + 1");
  const Element phi_a = a.apply(phi);
  r.add("phi_p(alpha)=phi_p(alpha^3)", phi_a == a.pow(3).apply(phi), "Phi_p(alpha) = " + phi_a.str());
  const Element two = F.from_int(2);
  r.add("phi_p(alpha)=(alpha+2)/(1-alpha)", phi_a == (a + two) / (one - a), "");

  const BigInt target = pow_ui(2, p) + 1;
  const BigInt expected = i2 ? BigInt(target / 3) : target;
  const Rational n2 = (a + two).norm();
  r.add("norm(alpha+2)", n2 == Rational(expected),
        "N(alpha + 2) = " + str(n2) + (i2 ? ", (2^p + 1)/3 = " : ", 2^p + 1 = ") + expected.get_str());

  const auto z = arith::zsigmondy(2, 1, p);
  if (!z.primitive_prime) {
    r.add("zsigmondy", false, "2^p + 1 has no primitive prime");
    return r;
  }
  const BigInt q = *z.primitive_prime;
  r.add("zsigmondy", arith::is_primitive_divisor(2, 1, p, q),
        "q = " + q.get_str() + " divides 2^p + 1 = " + target.get_str() + " and no 2^d + 1, d < p");
  const unsigned l = arith::valuation(target, q);
  BigInt ql = 1, fl = 1;
  for (unsigned t = 0; t < l; ++t) {
    ql *= q;
    fl *= 5;
  }
  r.add("valuation_bound", q >= 5 && fl <= ql && ql < target && l < p,
        "v_q(2^p + 1) = " + std::to_string(l) + ", 5^l <= q^l < 2^p + 1");
  r.add("q_divides_norm", n2.is_integer() && n2.num() % q == 0, "q | N(alpha + 2)");
  const BigInt fm2 = F.modulus().evaluate(Rational(-2)).num();
  r.add("residue_field", fm2 % q == 0, "f(-2) = " + fm2.get_str() + " = 0 mod q: alpha -> -2 at a prime over q");
  check_prime_residue(r, q, l, -2);
  return r;
}

Report verify_thm_910(std::uint64_t p) {
  if (p < 3 || !arith::is_prime(p)) throw std::invalid_argument("verify_thm_910: need an odd prime p");
  Report r;
  r.name = "newton-family p=" + std::to_string(p);
  const NumberField F = NumberField::newton_family(p);
  r.add("modulus", true, algebra::to_string(F.modulus()) + " (" + F.certification() + ")");
  const Element a = F.generator();
  const Element one = F.from_int(1);
  const QPoly phi = cyclo::cyclotomic_poly(p);

  const Element opa = one + a;
  r.add("(1+alpha)^2 phi_p(-alpha) = 1-alpha", opa.pow(2) * (-a).apply(phi) == one - a, "");
  const Element phi_a = a.apply(phi);
  r.add("square_chain", (one - a) * phi_a == opa.pow(2) * a.pow(2).apply(phi),
        "(1 - alpha) Phi_p(alpha) = (1 + alpha)^2 Phi_p(alpha^2)");
  const Element three = F.from_int(3);
  r.add("phi_p(alpha)=(1+3alpha)/(1-alpha^2)", phi_a == (one + three * a) / (one - a.pow(2)), "");

  const BigInt target = pow_ui(3, p) + 1;
  const Rational n13 = (one + three * a).norm();
  r.add("norm(1+3alpha)", n13.abs() == Rational(BigInt(2 * target)),
        "N(1 + 3 alpha) = " + str(n13) + ", |N| = 2(3^p + 1) = " + BigInt(2 * target).get_str());

  const auto z = arith::zsigmondy(3, 1, p);
  if (!z.primitive_prime) {
    r.add("zsigmondy", false, "3^p + 1 has no primitive prime");
    return r;
  }
  const BigInt q = *z.primitive_prime;
  const unsigned l = arith::valuation(target, q);
  r.add("zsigmondy", arith::is_primitive_divisor(3, 1, p, q) && q != 2 && l < p,
        "q = " + q.get_str() + ", v_q(3^p + 1) = " + std::to_string(l));
  const Rational n1a = opa.norm();
  r.add("q_coprime_to_1+alpha", prime_coprime(q, n1a), "N(1 + alpha) = " + str(n1a));
  check_prime_residue(r, q, l, -3);
  return r;
}

Report verify_ex_912() {
  Report r;
  r.name = "golden-square";
  const RationalField Q;
  const NumberField F(QPoly::from_ints(Q, {1, -3, 1}));
  r.add("modulus", true, algebra::to_string(F.modulus()) + " (" + F.certification() + ")");
  const Element b = F.generator();
  const Element one = F.from_int(1);
  const QPoly phi5 = cyclo::cyclotomic_poly(5);
  const Element three = F.from_int(3);

  r.add("beta(3-beta)=1", b * (three - b) == one, "");
  r.add("phi5(-beta)=(1-beta^2)^2", (-b).apply(phi5) == (one - b.pow(2)).pow(2), "");
  const Element phi_b = b.apply(phi5);
  r.add("phi5(beta)=11beta^2", phi_b == F.from_int(11) * b.pow(2), "Phi_5(beta) = " + phi_b.str());
  r.add("(beta-1)^2=beta", (b - one).pow(2) == b, "");
  r.add("units", (three - b) * (b - one).pow(2) == one && b.norm() == Rational(1),
        "(3 - beta)(beta - 1)^2 = 1, N(beta) = " + str(b.norm()));
  const Element sqrt5 = F.from_int(2) * b - three;
  r.add("sqrt5", sqrt5.pow(2) == F.from_int(5), "(2 beta - 3)^2 = 5");
  const Rational n = (F.from_int(4) + sqrt5).norm();
  r.add("norm(4+sqrt5)=11", n == Rational(11), "N(4 + sqrt5) = " + str(n));

  const algebra::PrimeField f11(11);
  const auto fac = factorx::factor_fp(algebra::map_poly(f11, F.modulus()));
  std::vector<std::uint64_t> roots;
  for (const auto& [g, e] : fac.factors) {
    if (g.degree() == 1 && e == 1) roots.push_back((11 - g.coeff(0)) % 11);
  }
  std::sort(roots.begin(), roots.end());
  r.add("split_mod_11", roots == std::vector<std::uint64_t>{5, 9}, "x^2 - 3x + 1 = " + fac.str() + " mod 11");

  // {beta, 11} at a degree-one prime over 11: v(11) = 1, v(beta) = 0, residue beta.
  bool ok = roots.size() == 2;
  std::string w = "tau = ";
  for (std::uint64_t rt : roots) {
    ok = ok && rt != 1;
    w += std::to_string(rt) + " ";
  }
  r.add("tame_residue", ok, w);
  return r;
}

Report verify_cor_96(std::uint64_t p) {
  if (p <= 3 || !arith::is_prime(p)) throw std::invalid_argument("verify_cor_96: need a prime p > 3");
  Report r;
  r.name = "norm-collapse p=" + std::to_string(p);
  const NumberField F = NumberField::selmer(p);
  const bool i2 = p % 3 == 2;
  const Element a = F.generator();
  const int d = F.degree();
  const Rational sign = d % 2 == 0 ? Rational(1) : Rational(-1);

  const BigInt target = pow_ui(2, p) + 1;
  const Rational prod2 = (a + F.from_int(2)).norm();
  const Rational f_m2 = F.modulus().evaluate(Rational(-2));
  r.add("prod(2+alpha_i)", prod2 == sign * f_m2 && prod2 == Rational(i2 ? BigInt(target / 3) : target),
        "prod (2 + alpha_i) = (-1)^d f(-2) = " + str(prod2));
  const Rational prod_a = a.norm();
  r.add("prod(alpha_i)", prod_a == sign * F.modulus().evaluate(Rational(0)) && prod_a.abs() == Rational(1),
        "prod alpha_i = " + str(prod_a));

  const QPoly phi = cyclo::cyclotomic_poly(p);
  const Rational phim2 = phi.evaluate(Rational(-2));
  r.add("phi_p(-2)=(2^p+1)/3", phim2 == Rational(BigInt(target / 3)), "Phi_p(-2) = " + str(phim2));

  // {-2, 2^p + 1} against c_p(-2) = {-2, Phi_p(-2)} at every prime where either ramifies.
  k2tame::QSymbols lhs;
  lhs.add(Rational(-2), Rational(target));
  const auto rhs = k2tame::cyclotomic_element(p, Rational(-2));
  const auto fac = arith::factor_integer(BigInt(6 * target));
  bool ok = fac.complete();
  std::string w;
  for (const auto& [q, e] : fac.factors) {
    const std::uint64_t qq = q.get_ui();
    const auto tl = k2tame::tame_q(lhs, qq), tr = k2tame::tame_q(rhs, qq);
    ok = ok && tl == tr;
    w += "tau_" + q.get_str() + ": " + std::to_string(tl) + " = " + std::to_string(tr) + "; ";
  }
  r.add("fingerprints", ok, w);

  if (p == 5) {
    k2tame::QSymbols s;
    s.add(Rational(-2), Rational(11));
    const auto t = k2tame::tame_q(s, 11);
    r.add("cubic product residue", t == 9 && t != 1, "tau_11({-2, 11}) = " + std::to_string(t));
    std::string w1, w2;
    const bool a1 = residue_powers_avoid_one(-2, 4, BigInt(11), w1);
    const bool a2 = residue_powers_avoid_one(4, 4, BigInt(11), w2);
    r.add("cubic distinct subgroups", a1 && a2, w1 + "; " + w2);
    // alpha_i -> -2 at a degree-one unramified prime over 11 for exactly one root
    const algebra::PrimeField f11(11);
    const auto fm = algebra::map_poly(f11, F.modulus());
    const auto m2 = f11.from_int(-2);
    r.add("cubic simple root", fm.evaluate(m2) == 0 && fm.derivative().evaluate(m2) != 0,
          "f(-2) = 0 and f'(-2) != 0 mod 11");
  }
  return r;
}

}  // namespace cyclok2::numfield
