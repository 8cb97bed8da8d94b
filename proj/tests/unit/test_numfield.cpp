#include <random>

#include "cyclok2/numfield/numfield.hpp"
#include "doctest.h"
#include "json.hpp"
#include "printers.hpp"

using namespace cyclok2;
using numfield::Element;
using numfield::NumberField;
using numfield::QPoly;
using numfield::Rational;

namespace {

const algebra::RationalField Q;

// det of the multiplication-by-h matrix on the power basis, by Gaussian
// elimination over Q.
Rational norm_by_matrix(const Element& h) {
  const NumberField& F = h.field();
  const int d = F.degree();
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d, Rational(0)));
  Element col = h;
  const Element a = F.generator();
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) m[i][j] = col.value().coeff(i);
    col = col * a;
  }
  Rational det(1);
  for (int c = 0; c < d; ++c) {
    int piv = c;
    while (piv < d && m[piv][c] == Rational(0)) ++piv;
    if (piv == d) return Rational(0);
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (int r = c + 1; r < d; ++r) {
      const Rational t = m[r][c] / m[c][c];
      for (int k = c; k < d; ++k) m[r][k] -= t * m[c][k];
    }
  }
  return det;
}

Element random_element(const NumberField& F, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(-6, 6);
  std::vector<Rational> c(F.degree(), Rational(0));
  for (auto& x : c) x = Rational(static_cast<long>(dist(rng)));
  return F.from_poly(QPoly(Q, std::move(c)));
}

}  // namespace

TEST_CASE("number field arithmetic examples") {
  const NumberField K(QPoly::from_ints(Q, {1, -3, 1}));
  const Element b = K.generator();
  CHECK(b * (K.from_int(3) - b) == K.from_int(1));
  CHECK(K.certified());

  const NumberField F = NumberField::selmer(5);
  CHECK(F.modulus() == QPoly::from_ints(Q, {1, 0, -1, 1}));
  const Element a = F.generator();
  CHECK(a.pow(0) == F.from_int(1));
  CHECK((a.pow(5) + a + F.from_int(1)).is_zero());
  CHECK((F.from_int(2) + a).norm() == Rational(11));
  CHECK(F.from_int(1).norm() == Rational(1));

  const NumberField G = NumberField::selmer(7);
  CHECK((G.generator() + G.from_int(2)).norm() == Rational(129));
}

TEST_CASE("number field errors") {
  CHECK_THROWS_AS(NumberField(QPoly::from_ints(Q, {-1, 0, 1})), std::invalid_argument);
  CHECK_THROWS_AS(NumberField(QPoly::from_ints(Q, {1, 0, 2})), std::invalid_argument);
  CHECK_THROWS_AS(NumberField(QPoly::from_ints(Q, {3})), std::invalid_argument);
  const NumberField F = NumberField::selmer(5), G = NumberField::selmer(7);
  CHECK_THROWS_AS(F.generator() + G.generator(), algebra::FieldMismatch);
  CHECK_THROWS_AS(F.generator() * G.generator(), algebra::FieldMismatch);
  CHECK_THROWS(F.from_int(0).inverse());
  CHECK(F.from_int(0).norm() == Rational(0));
  CHECK(NumberField::selmer(5) == F);
}

TEST_CASE("property: norm is multiplicative and matches the matrix determinant") {
  std::mt19937_64 rng(3);
  for (const NumberField& F : {NumberField::selmer(5), NumberField::selmer(7), NumberField::newton_family(5),
                               NumberField(QPoly::from_ints(Q, {1, -3, 1}))}) {
    const int d = F.degree();
    const Rational sign = d % 2 == 0 ? Rational(1) : Rational(-1);
    CHECK(F.generator().norm() == sign * F.modulus().coeff(0));
    for (int t = 0; t < 15; ++t) {
      const Element x = random_element(F, rng), y = random_element(F, rng);
      CHECK((x * y).norm() == x.norm() * y.norm());
      CHECK(x.norm() == norm_by_matrix(x));
      if (!x.is_zero()) CHECK(x * x.inverse() == F.from_int(1));
    }
  }
}

TEST_CASE("selmer and newton fields certify irreducibility") {
  for (std::uint64_t p : {5, 7, 11, 13}) {
    CAPTURE(p);
    const NumberField F = NumberField::selmer(p);
    CHECK(F.degree() == static_cast<int>(p % 3 == 2 ? p - 2 : p));
  }
  for (std::uint64_t p : {3, 5, 7}) CHECK(NumberField::newton_family(p).degree() == static_cast<int>(p));
}

TEST_CASE("x^p + x + 1 reductions") {
  for (std::uint64_t p : {5, 7, 11, 13}) {
    CAPTURE(p);
    const auto r = numfield::verify_thm_93(p);
    for (const auto& c : r.checks) {
      CAPTURE(c.name);
      CAPTURE(c.witness);
      CHECK(c.passed);
    }
    CHECK(r.ok());
  }
  const auto r7 = numfield::verify_thm_93(7);
  const auto j = nlohmann::json::parse(r7.to_json());
  bool saw43 = false;
  for (const auto& c : j["checks"]) {
    if (c["name"] == "zsigmondy") saw43 = c["witness"].get<std::string>().find("q = 43 ") != std::string::npos;
  }
  CHECK(saw43);
  CHECK(numfield::verify_thm_93(13).to_json().find("q = 2731 ") != std::string::npos);
  CHECK_THROWS_AS(numfield::verify_thm_93(3), std::invalid_argument);
  CHECK_THROWS_AS(numfield::verify_thm_93(9), std::invalid_argument);
}

TEST_CASE("x^p + x^(p-1) + 2 reductions") {
  for (std::uint64_t p : {3, 5, 7}) {
    CAPTURE(p);
    const auto r = numfield::verify_thm_910(p);
    for (const auto& c : r.checks) {
      CAPTURE(c.name);
      CAPTURE(c.witness);
      CHECK(c.passed);
    }
    CHECK(r.ok());
  }
  // 3^3 + 1 = 28 = 4 * 7, 3^5 + 1 = 244 = 4 * 61, 3^7 + 1 = 2188 = 4 * 547
  CHECK(numfield::verify_thm_910(5).to_json().find("q = 61,") != std::string::npos);
  CHECK(numfield::verify_thm_910(7).to_json().find("q = 547,") != std::string::npos);
}

TEST_CASE("quadratic field of the golden ratio square") {
  const auto r = numfield::verify_ex_912();
  for (const auto& c : r.checks) {
    CAPTURE(c.name);
    CAPTURE(c.witness);
    CHECK(c.passed);
  }
  CHECK(r.ok());
}

TEST_CASE("norm-level collapse to c_p(-2)") {
  for (std::uint64_t p : {5, 7}) {
    CAPTURE(p);
    const auto r = numfield::verify_cor_96(p);
    for (const auto& c : r.checks) {
      CAPTURE(c.name);
      CAPTURE(c.witness);
      CHECK(c.passed);
    }
    CHECK(r.ok());
    CHECK(r.checks.size() == (p == 5 ? 7u : 4u));
  }
}

TEST_CASE("report json shape") {
  numfield::Report r;
  r.name = "x";
  CHECK_FALSE(r.ok());
  r.add("a", true, "w");
  r.add("b", false, "");
  CHECK(r.to_json() ==
        R"({"name":"x","ok":false,"checks":[{"name":"a","status":"pass","witness":"w"},{"name":"b","status":"fail","witness":""}]})");
}
