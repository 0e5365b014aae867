#pragma once

#include "k3pol/integer.hpp"
#include "k3pol/lattice.hpp"

#include <vector>

namespace k3pol {

// p = x + i y up to scale, with exact rational coordinates.
struct PeriodPoint {
  // Throws Error(invalid_argument) on a length mismatch or x = y = 0.
  PeriodPoint(Lattice lattice, RationalVector x, RationalVector y);

  Lattice lattice;
  RationalVector x;
  RationalVector y;
};

// (p,p) = 0 and (p, conj p) > 0, i.e. (x,x) = (y,y), (x,y) = 0, (x,x) > 0.
bool is_period_point(const PeriodPoint& p);

// (x, lambda) = (y, lambda) = 0. Throws Error(invalid_period).
bool in_period_perp(const PeriodPoint& p, const LatticeVector& lambda);

// Hermite basis of the integral classes orthogonal to p. Throws
// Error(invalid_period).
std::vector<LatticeVector> one_one_lattice(const PeriodPoint& p);

// Two positive vectors of a signature (1, k) form share a component of the
// positive cone iff (x, y) > 0. Throws Error(wrong_signature) or
// Error(nonpositive_norm).
bool same_positive_component(const Lattice& lattice, const RationalVector& x,
                             const RationalVector& y);

// For a signature (1, k) form, (x,x) > 0 and a nonzero isotropic lambda:
// returns the sign of (x, lambda). A zero pairing throws
// Error(zero_pairing); it cannot happen under the preconditions.
int isotropic_positive_pairing_check(const Lattice& lattice, const RationalVector& x,
                                     const LatticeVector& lambda);

// Restriction of a nondegenerate lattice of positive index p >= 1 to the
// orthogonal of p-1 mutually orthogonal positive vectors that are also
// orthogonal to lambda. The result has signature (1, k) and contains
// lambda; for index 3 the two vectors span a period plane.
struct PositivityWitness {
  std::vector<RationalVector> positive_plane;
  std::vector<LatticeVector> restricted_basis;
  Lattice restricted;
  IntVector lambda_coords;
  // Positive vector of the restricted lattice, oriented so that the
  // pairing with lambda is positive.
  RationalVector x;
  Rational pairing;
  int sign = 0;
};

// Throws Error(not_isotropic), Error(radical_vector) or
// Error(wrong_signature) when the construction does not apply.
PositivityWitness positivity_witness(const LatticeVector& lambda);

}  // namespace k3pol
