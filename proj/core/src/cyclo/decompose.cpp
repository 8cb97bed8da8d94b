#include "cyclok2/cyclo/decompose.hpp"

#include <algorithm>

#include "cyclok2/algebra/quotient.hpp"
#include "cyclok2/arith/primes.hpp"
#include "cyclok2/factorx/fp.hpp"
#include "json.hpp"

namespace cyclok2::cyclo {

using algebra::QuotientRing;

ReducibleCyclotomic::ReducibleCyclotomic(int l, std::uint64_t p)
    : std::invalid_argument("Phi_" + std::to_string(l) + " is reducible over F_" + std::to_string(p)) {}

bool cyclotomic_irreducible_mod(int l, std::uint64_t p) {
  if (p % static_cast<std::uint64_t>(l) == 0) return false;
  return arith::multiplicative_order(p % static_cast<std::uint64_t>(l), static_cast<std::uint64_t>(l)) ==
         static_cast<std::uint64_t>(l - 1);
}

FpPoly basis_form(int l, const Mat2<PrimeField>& m) {
  return algebra::monic(cyclotomic_form(l, m.top(), m.bottom()).value);
}

namespace {

// e in [1, l-1] with zeta^e = u, both taken modulo P.
int discrete_log(const QuotientRing<PrimeField>& R, const FpPoly& zeta, const FpPoly& u, int l) {
  FpPoly acc = zeta;
  for (int e = 1; e < l; ++e) {
    if (acc == u) return e;
    acc = R.mul(acc, zeta);
  }
  throw std::logic_error("residue is not a power of the basis root of unity");
}

}  // namespace

DecompositionResult decompose_form(const CyclotomicForm<PrimeField>& form,
                                   const std::vector<Mat2<PrimeField>>& basis,
                                   const std::optional<std::vector<int>>& targets,
                                   std::uint64_t seed) {
  const PrimeField& fld = form.value.ring();
  const int l = form.l;
  if (!cyclotomic_irreducible_mod(l, fld.modulus())) throw ReducibleCyclotomic(l, fld.modulus());
  if (algebra::gcd(form.f, form.g).degree() != 0) {
    throw std::invalid_argument("decomposition needs coprime f and g");
  }
  if (targets && targets->size() != basis.size()) {
    throw std::invalid_argument("one target exponent per basis entry expected");
  }
  std::vector<FpPoly> forms;
  forms.reserve(basis.size());
  for (const auto& m : basis) forms.push_back(basis_form(l, m));

  const factorx::Factorization fac = factorx::factor_fp(form.value, seed);
  Decomposition out;
  out.alpha = fac.unit;
  out.psi = FpPoly::constant(fld, 1);
  for (const auto& [g, m] : fac.factors) {
    const auto it = std::find(forms.begin(), forms.end(), g);
    if (it != forms.end() && m % l != 0) {
      out.exponents.push_back({static_cast<std::size_t>(it - forms.begin()), m, 0});
      continue;
    }
    if (m % l != 0) {
      return NoDecomposition{"factor " + algebra::to_string(g) + " with multiplicity " + std::to_string(m) +
                             " matches no basis form and is not an l-th power"};
    }
    out.psi *= g.pow(static_cast<std::uint64_t>(m / l));
  }
  if (out.psi.degree() % (l - 1) != 0) {
    throw std::logic_error("degree of Psi is not divisible by l - 1");
  }
  std::sort(out.exponents.begin(), out.exponents.end(),
            [](const auto& a, const auto& b) { return a.index < b.index; });

  for (auto& be : out.exponents) {
    const QuotientRing<PrimeField> R(forms[be.index]);
    const FpPoly u = R.pow(R.mul(R.reduce(form.f), R.inv(R.reduce(form.g))), be.r);
    const auto& m = basis[be.index];
    const FpPoly zeta = R.mul(R.reduce(m.top()), R.inv(R.reduce(m.bottom())));
    be.e = discrete_log(R, zeta, u, l);
  }
  if (targets) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const int want = (((*targets)[i] % l) + l) % l;
      const auto it = std::find_if(out.exponents.begin(), out.exponents.end(),
                                   [&](const auto& be) { return be.index == i; });
      const int have = it == out.exponents.end() ? 0 : it->e;
      if (want != have) {
        return NoDecomposition{"congruence fails at basis entry " + std::to_string(i) + ": residue exponent " +
                               std::to_string(have) + ", target " + std::to_string(want)};
      }
    }
  }
  return out;
}

FpPoly reassemble(const Decomposition& d, int l, const std::vector<Mat2<PrimeField>>& basis) {
  const PrimeField& fld = d.psi.ring();
  FpPoly acc = FpPoly::constant(fld, d.alpha) * d.psi.pow(static_cast<std::uint64_t>(l));
  for (const auto& be : d.exponents) {
    acc *= basis_form(l, basis.at(be.index)).pow(static_cast<std::uint64_t>(be.r));
  }
  return acc;
}

std::string to_json(const Decomposition& d) {
  nlohmann::ordered_json j;
  j["alpha"] = std::to_string(d.alpha);
  j["psi"] = algebra::to_string(d.psi);
  auto& arr = j["exponents"] = nlohmann::ordered_json::array();
  for (const auto& be : d.exponents) {
    arr.push_back({{"index", be.index}, {"r", be.r}, {"e", be.e}});
  }
  return j.dump();
}

std::string to_string(const Decomposition& d) {
  std::string s = "alpha=" + std::to_string(d.alpha) + " psi=" + algebra::to_string(d.psi);
  for (const auto& be : d.exponents) {
    s += " [" + std::to_string(be.index) + ": r=" + std::to_string(be.r) + " e=" + std::to_string(be.e) + "]";
  }
  return s;
}

}  // namespace cyclok2::cyclo
