#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyclok2/algebra/poly.hpp"

namespace cyclok2::factorx {

using algebra::QPoly;
using algebra::Rational;

/// Lower convex hull of {(i, v_p(a_i))}. `slopes[k]` is the drop in
/// valuation per unit step along side k, so a descending side has a positive
/// slope; `lengths[k]` is its horizontal extent.
struct NewtonPolygon {
  std::uint64_t prime = 0;
  std::vector<std::pair<int, int>> points;
  std::vector<std::pair<int, int>> vertices;
  std::vector<Rational> slopes;
  std::vector<int> lengths;
};

/// Requires integer coefficients and f(0) != 0.
NewtonPolygon newton_polygon(const QPoly& f, std::uint64_t p);

enum class Verdict { Irreducible, Reducible, Inconclusive };

enum class IrreducibilityMethod {
  Linear,             // degree one
  RationalRoot,       // degree <= 3 with no rational root, or a root found
  DegreePattern,      // mod-q factor degrees and Newton polygons leave no degree
  ExhaustiveSearch,   // Kronecker search over integer divisors
  None,
};

std::string to_string(Verdict v);
std::string to_string(IrreducibilityMethod m);

struct IrreducibilityCertificate {
  Verdict verdict = Verdict::Inconclusive;
  IrreducibilityMethod method = IrreducibilityMethod::None;
  std::optional<QPoly> factor;               // a proper factor when reducible
  std::vector<std::uint64_t> modular_primes;  // primes whose patterns were used
  std::vector<std::uint64_t> newton_primes;
  std::string detail;

  bool irreducible() const { return verdict == Verdict::Irreducible; }
};

struct IrreducibilityOptions {
  int exhaustive_degree = 8;
  int modular_primes = 40;
};

/// Tries, in order: degree one, rational roots, degree patterns from
/// factorizations modulo small primes intersected with Newton polygon
/// constraints, and Kronecker's search up to `exhaustive_degree`.
/// The input is replaced by its primitive integer part first.
IrreducibilityCertificate is_irreducible_q(const QPoly& f, const IrreducibilityOptions& opt = {});

/// Re-derives the certificate's conclusion from its recorded primes (or its
/// factor) without redoing the search.
bool check_certificate(const QPoly& f, const IrreducibilityCertificate& cert);

/// Integer coefficients with content one and positive leading coefficient.
QPoly primitive_integer_part(const QPoly& f);

}  // namespace cyclok2::factorx
