#include "cyclok2/algebra/poly.hpp"

#include <cctype>

namespace cyclok2::algebra {

namespace {

using IntVec = std::vector<BigInt>;

void trim(IntVec& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

BigInt content(const IntVec& v) {
  BigInt g = 0;
  for (const auto& c : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

// Integer coefficients with content 1, up to sign.
IntVec primitive_part(const QPoly& p) {
  BigInt l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
  IntVec v;
  v.reserve(p.size());
  for (const auto& c : p.coeffs()) v.push_back(c.num() * (l / c.den()));
  const BigInt g = content(v);
  if (g != 0) {
    for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
  return v;
}

void make_primitive(IntVec& v) {
  const BigInt g = content(v);
  if (g > 1) {
    for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
}

// lc(b)^(deg a - deg b + 1) * a  mod  b, exactly over Z.
IntVec pseudo_remainder(IntVec a, const IntVec& b) {
  const std::size_t db = b.size() - 1;
  const BigInt& lb = b.back();
  std::size_t steps = a.size() - db;
  while (a.size() > db && !a.empty()) {
    const BigInt la = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (auto& c : a) c *= lb;
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= la * b[j];
    trim(a);
    --steps;
  }
  if (steps > 0) {
    BigInt f;
    mpz_pow_ui(f.get_mpz_t(), lb.get_mpz_t(), steps);
    for (auto& c : a) c *= f;
  }
  return a;
}

QPoly to_monic_qpoly(const IntVec& v) {
  std::vector<Rational> c;
  c.reserve(v.size());
  for (const auto& x : v) c.emplace_back(x, v.back());
  return QPoly(RationalField{}, std::move(c));
}

}  // namespace

QPoly gcd_subresultant(const QPoly& a, const QPoly& b) {
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  IntVec A = primitive_part(a), B = primitive_part(b);
  if (A.size() < B.size()) std::swap(A, B);
  BigInt g = 1, h = 1;
  while (true) {
    if (B.size() == 1) return QPoly::constant(RationalField{}, Rational(1L));
    const std::size_t delta = A.size() - B.size();
    IntVec R = pseudo_remainder(A, B);
    if (R.empty()) {
      make_primitive(B);
      return to_monic_qpoly(B);
    }
    BigInt divisor;
    mpz_pow_ui(divisor.get_mpz_t(), h.get_mpz_t(), delta);
    divisor *= g;
    for (auto& c : R) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());
    A = std::move(B);
    B = std::move(R);
    g = A.back();
    // h <- g^delta / h^(delta-1)
    if (delta == 0) {
      // h unchanged
    } else {
      BigInt num, den;
      mpz_pow_ui(num.get_mpz_t(), g.get_mpz_t(), delta);
      mpz_pow_ui(den.get_mpz_t(), h.get_mpz_t(), delta - 1);
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
  }
}

namespace detail {

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void bad(std::string_view text, const std::string& why) {
  throw std::invalid_argument("cannot parse polynomial '" + std::string(text) + "': " + why);
}

}  // namespace

std::vector<std::pair<std::string, std::size_t>> split_terms(std::string_view text,
                                                              std::string_view var) {
  std::string compact;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) compact.push_back(ch);
  }
  if (compact.empty()) bad(text, "empty input");

  // Cut into signed terms at top-level '+'/'-' that are not exponent signs.
  std::vector<std::string> terms;
  std::string cur;
  for (std::size_t i = 0; i < compact.size(); ++i) {
    const char ch = compact[i];
    if ((ch == '+' || ch == '-') && i > 0 && compact[i - 1] != '^' && compact[i - 1] != '*' &&
        compact[i - 1] != '/') {
      terms.push_back(cur);
      cur.clear();
    }
    cur.push_back(ch);
  }
  terms.push_back(cur);

  std::vector<std::pair<std::string, std::size_t>> out;
  for (std::string_view t : terms) {
    bool neg = false;
    if (!t.empty() && (t[0] == '+' || t[0] == '-')) {
      neg = t[0] == '-';
      t.remove_prefix(1);
    }
    if (t.empty()) bad(text, "dangling sign");
    std::string coef = "1";
    std::size_t exp = 0;
    const auto vpos = t.find(var);
    if (vpos == std::string_view::npos) {
      coef = std::string(t);
    } else {
      std::string_view head = t.substr(0, vpos);
      std::string_view tail = t.substr(vpos + var.size());
      if (!head.empty()) {
        if (head.back() != '*') bad(text, "expected '*' before variable");
        head.remove_suffix(1);
        if (head.empty()) bad(text, "missing coefficient");
        coef = std::string(head);
      }
      exp = 1;
      if (!tail.empty()) {
        if (tail[0] != '^') bad(text, "unexpected text after variable");
        tail.remove_prefix(1);
        if (tail.empty()) bad(text, "missing exponent");
        for (char ch : tail) {
          if (!std::isdigit(static_cast<unsigned char>(ch))) bad(text, "bad exponent");
        }
        exp = std::stoul(std::string(tail));
      }
    }
    coef = std::string(strip(coef));
    if (coef.empty() || coef[0] == '+' || coef[0] == '-') bad(text, "bad coefficient");
    if (neg) coef = "-" + coef;
    out.emplace_back(std::move(coef), exp);
  }
  return out;
}

}  // namespace detail

}  // namespace cyclok2::algebra
