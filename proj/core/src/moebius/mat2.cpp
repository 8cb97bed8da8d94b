#include "cyclok2/moebius/mat2.hpp"

namespace cyclok2::moebius {

RootsOfUnity<PrimeField> roots_of_unity(const PrimeField& f) {
  RootsOfUnity<PrimeField> w;
  for (std::uint64_t v = 1; v < f.modulus(); ++v) w.members.push_back(v);
  return w;
}

RootsOfUnity<RationalField> roots_of_unity(const RationalField&) {
  return {{algebra::Rational(1L), algebra::Rational(-1L)}};
}

std::vector<DistinctnessClass> distinctness_classes(std::uint64_t p) {
  if (p == 2) throw std::invalid_argument("class enumeration requires an odd prime");
  const PrimeField f(p);
  const std::size_t n = p * p * p * p;
  std::vector<bool> seen(n, false);
  auto index = [p](std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d) {
    return static_cast<std::size_t>(((a * p + b) * p + c) * p + d);
  };
  std::vector<DistinctnessClass> out;
  for (std::size_t k = 0; k < n; ++k) {
    if (seen[k]) continue;
    const std::uint64_t a = k / (p * p * p), b = (k / (p * p)) % p, c = (k / p) % p, d = k % p;
    if (f.sub(f.mul(a, d), f.mul(b, c)) == 0) continue;
    const Mat2<PrimeField> rep(f, a, b, c, d);
    DistinctnessClass cls{rep, {}};
    // Rows scale independently over F_p since W(F_p) = F_p^*.
    for (int eps = 0; eps < 2; ++eps) {
      const std::uint64_t r0a = eps ? c : a, r0b = eps ? d : b, r1a = eps ? a : c, r1b = eps ? b : d;
      for (std::uint64_t l0 = 1; l0 < p; ++l0) {
        for (std::uint64_t l1 = 1; l1 < p; ++l1) {
          const std::uint64_t A = f.mul(l0, r0a), B = f.mul(l0, r0b), C = f.mul(l1, r1a), D = f.mul(l1, r1b);
          const std::size_t j = index(A, B, C, D);
          if (seen[j]) continue;
          seen[j] = true;
          cls.members.emplace_back(f, A, B, C, D);
        }
      }
    }
    out.push_back(std::move(cls));
  }
  return out;
}

std::vector<Mat2<PrimeField>> enumerate_distinct_classes(std::uint64_t p) {
  std::vector<Mat2<PrimeField>> reps;
  for (auto& cls : distinctness_classes(p)) reps.push_back(cls.representative);
  return reps;
}

std::string to_json(const Mat2<PrimeField>& m) {
  return "[" + std::to_string(m.a()) + "," + std::to_string(m.b()) + "," + std::to_string(m.c()) + "," +
         std::to_string(m.d()) + "]";
}

}  // namespace cyclok2::moebius
