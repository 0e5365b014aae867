#pragma once

#include "k3pol/integer.hpp"
#include "k3pol/lattice.hpp"
#include "k3pol/matrix.hpp"

#include <optional>
#include <span>
#include <vector>

namespace k3pol {

// U * M * V == S, U and V unimodular, S diagonal with d1 | d2 | ... >= 0 and
// zeros last. Pivot: nonzero entry of least absolute value, first in
// row-major order.
struct SmithForm {
  IntegerMatrix S;
  IntegerMatrix U;
  IntegerMatrix V;
};
SmithForm smith_normal_form(const IntegerMatrix& m);

// Diagonal of the Smith form, length min(rows, cols).
IntVector elementary_divisors(const IntegerMatrix& m);

// U * M == H with U unimodular and H in row Hermite form: positive pivots,
// entries above a pivot reduced into [0, pivot), zero rows last.
struct HermiteForm {
  IntegerMatrix H;
  IntegerMatrix U;
  std::size_t rank = 0;
};
HermiteForm hermite_normal_form(const IntegerMatrix& m);

// Nonzero rows of the Hermite form of the given row vectors.
std::vector<IntVector> hermite_basis(const std::vector<IntVector>& rows,
                                     std::size_t dim);

// Hermite-canonical basis of {x in Z^cols : M x = 0}.
std::vector<IntVector> integer_kernel(const IntegerMatrix& m);

// Integer c with sum_i c_i * basis[i] == target, if one exists.
std::optional<IntVector> coordinates_in_basis(const std::vector<IntVector>& basis,
                                              std::span<const Integer> target);

// Index of span(rows) inside its saturation: the product of the nonzero
// elementary divisors.
Integer saturation_index(const std::vector<IntVector>& rows, std::size_t dim);

std::vector<LatticeVector> orthogonal_complement(const Lattice& lattice,
                                                 std::span<const LatticeVector> vs);

// Throws Error(dependent_input) when the basis is rationally dependent.
std::vector<LatticeVector> saturation(const Lattice& lattice,
                                      std::span<const LatticeVector> basis);

class PolarizationType {
 public:
  // Throws Error(invalid_argument) unless every entry is positive and each
  // divides the next.
  explicit PolarizationType(IntVector chain);

  static PolarizationType principal(std::size_t n);

  const IntVector& chain() const noexcept { return chain_; }
  std::size_t size() const noexcept { return chain_.size(); }
  bool is_principal() const;

  friend bool operator==(const PolarizationType&, const PolarizationType&) = default;

 private:
  IntVector chain_;
};

// [[0, D], [-D, 0]] for D = diag(divisors).
IntegerMatrix standard_symplectic(std::span<const Integer> divisors);

// T^T * A * T == standard_symplectic(type.chain()), T unimodular.
struct SymplecticForm {
  PolarizationType type;
  IntegerMatrix transform;
};

// Throws Error(invalid_argument) for a non-square matrix, then
// Error(odd_dimension), Error(not_alternating) or Error(singular).
SymplecticForm symplectic_normal_form(const IntegerMatrix& a);

// Type of the alternating form, cross-checked against the Smith diagonal
// (d1, d1, d2, d2, ...). A disagreement throws Error(self_check_failed).
PolarizationType polarization_type(const IntegerMatrix& a);

}  // namespace k3pol
