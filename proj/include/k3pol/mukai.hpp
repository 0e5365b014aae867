#pragma once

#include "k3pol/integer.hpp"
#include "k3pol/lattice.hpp"
#include "k3pol/matrix.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace k3pol {

// Shared instances of E8(-1)^2 + U^3 and E8(-1)^2 + U^4.
const Lattice& k3_lattice();
const Lattice& mukai_lattice();
// E8(-1)^2 + U^3 + <2-2n>.
Lattice k3n_lattice(std::int64_t n);

// (r, c, s) in H^0 + H^2 + H^4 of a K3 surface. Effectivity of c when
// r == 0 is geometric and is not checked.
class MukaiVector {
 public:
  // Throws Error(lattice_mismatch) unless c lives in the K3 lattice.
  MukaiVector(Integer r, LatticeVector c, Integer s);

  const Integer& r() const noexcept { return r_; }
  const LatticeVector& c() const noexcept { return c_; }
  const Integer& s() const noexcept { return s_; }

  friend bool operator==(const MukaiVector&, const MukaiVector&) = default;

 private:
  Integer r_;
  LatticeVector c_;
  Integer s_;
};

// (c, c') - r s' - s r'
Integer mukai_pairing(const MukaiVector& v, const MukaiVector& w);

// Identification with the standard Mukai lattice: the K3 part goes to the
// first 22 coordinates and (r, s) goes to r * e4 - s * f4 in the fourth U
// summand, so ((1,0,0), (0,0,1)) = -1 matches (e4, -f4).
LatticeVector to_mukai_lattice(const MukaiVector& v);
MukaiVector from_mukai_lattice(const LatticeVector& x);

// (rk, c1, (c1,c1)/2 - c2 + rk)
MukaiVector mukai_vector_of_sheaf(const Integer& rank, const LatticeVector& c1,
                                  const Integer& c2);
// Degree-4 component 1 - g + deg of a sheaf of degree deg on a smooth
// genus-g curve.
Integer chi_of_support_sheaf(const Integer& genus, const Integer& degree);

// (v,v) + 2. Throws Error(invalid_argument) when (v,v) is odd or < -2.
Integer moduli_dimension(const MukaiVector& v);

struct PrimitiveEmbedding {
  Lattice source;
  Lattice target;
  IntegerMatrix matrix;  // rank(target) x rank(source)
  LatticeVector complement_generator;

  LatticeVector apply(const LatticeVector& x) const;
};

// Identity on E8(-1)^2 + U^3 and l -> e4 - (n-1) f4, with complement
// generator e4 + (n-1) f4. Invariants are checked before returning.
PrimitiveEmbedding canonical_embedding(std::int64_t n);

// Canonical representative of a class in I_{n,d}: b_star = min(b, -b) mod d.
class InvariantClass {
 public:
  std::int64_t n() const noexcept { return n_; }
  std::int64_t d() const noexcept { return d_; }
  std::int64_t b_star() const noexcept { return b_star_; }

  friend bool operator==(const InvariantClass&, const InvariantClass&) = default;
  friend InvariantClass canonical_invariant(std::int64_t n, std::int64_t d,
                                            std::int64_t b);

 private:
  InvariantClass(std::int64_t n, std::int64_t d, std::int64_t b_star)
      : n_(n), d_(d), b_star_(b_star) {}

  std::int64_t n_;
  std::int64_t d_;
  std::int64_t b_star_;
};

// Throws Error(invalid_argument) unless n >= 2, d >= 1, d^2 | n-1 and
// gcd(d, b) == 1.
InvariantClass canonical_invariant(std::int64_t n, std::int64_t d, std::int64_t b);

// Every d >= 1 with d^2 | n-1, ascending.
std::vector<std::int64_t> admissible_divisibilities(std::int64_t n);

// Brute force over the isometries (x, y) -> (e x, t x + e' y), |t| <= bound,
// of the degenerate form c x^2 on Z^2. True iff one maps (d, b1) to
// +-(d, b2).
bool isometry_orbit_oracle(std::int64_t n, std::int64_t d, std::int64_t b1,
                           std::int64_t b2, std::int64_t bound);

std::vector<InvariantClass> enumerate_invariant_set(std::int64_t n, std::int64_t d);

struct MonodromyInvariant {
  Integer divisibility;
  // Least b >= 0 with (x - b v) / d integral.
  std::int64_t b = 0;
  // Hermite basis of the saturation of <v, x>.
  std::vector<LatticeVector> saturation_basis;
  // {w, r}: r spans the radical, (w, w) = (2n-2)/d^2.
  std::vector<LatticeVector> witness_basis;
  IntegerMatrix gram;
  InvariantClass invariant;
};

// Invariant of the pair (H, v) where H is the saturation of <v, x> inside
// v's lattice and d is the divisibility of x in v^perp. Every claim of the
// construction is verified; a violation throws Error(verification_failed).
MonodromyInvariant monodromy_invariant(std::int64_t n, const LatticeVector& v,
                                       const LatticeVector& x, const Integer& d);

// h(lambda) for a primitive isotropic lambda in the level-n lattice, via the
// canonical embedding. Throws Error(not_primitive) / Error(not_isotropic) on
// bad input.
MonodromyInvariant h_lambda(std::int64_t n, const LatticeVector& lambda);

// gcd of |(x, b)| over the given basis. Throws Error(invalid_argument) when
// x is not in the saturation of the basis and Error(radical_vector) when
// every pairing vanishes.
Integer div_in_sublattice(const Lattice& ambient, std::span<const LatticeVector> sub_basis,
                          const LatticeVector& x);

struct VerificationCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct BeauvilleMukaiWitness {
  std::int64_t n = 0;
  std::int64_t d = 0;
  std::int64_t b = 0;
  Integer k;  // (n-1)/d^2
  LatticeVector beta;
  Integer s;  // least positive inverse of b mod d
  MukaiVector v;
  MukaiVector alpha;
  Integer self_pairing;
  Integer dimension;
  Integer alpha_dot_v;
  Integer div_alpha;
  std::vector<LatticeVector> v_perp;
  InvariantClass alpha_invariant;
  std::vector<VerificationCheck> checks;
};

// v = (0, d beta, s) with beta = e1 + k f1 and alpha = (0, 0, 1), with all
// lattice-level verifications. Throws Error(invalid_argument) on bad
// parameters and Error(verification_failed) if any check fails.
BeauvilleMukaiWitness beauville_mukai_vector(std::int64_t n, std::int64_t d, std::int64_t b);

}  // namespace k3pol
