#pragma once

#include "k3pol/integer.hpp"
#include "k3pol/matrix.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace k3pol {

// Free Z-module of finite rank with an integral symmetric bilinear form.
// Copies share the immutable Gram matrix.
class Lattice {
 public:
  // Throws Error(invalid_argument) unless gram is square, nonempty and
  // symmetric.
  explicit Lattice(IntegerMatrix gram);

  std::size_t rank() const noexcept { return gram_->rows(); }
  const IntegerMatrix& gram() const noexcept { return *gram_; }

  Integer pairing(std::span<const Integer> x, std::span<const Integer> y) const;
  Rational pairing(std::span<const Rational> x, std::span<const Rational> y) const;
  // gram * x
  IntVector dual(std::span<const Integer> x) const { return *gram_ * x; }

  bool same_as(const Lattice& other) const noexcept;

  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.same_as(b);
  }

 private:
  std::shared_ptr<const IntegerMatrix> gram_;
};

class LatticeVector {
 public:
  // Throws Error(invalid_argument) if coords.size() != lattice.rank().
  LatticeVector(Lattice lattice, IntVector coords);

  static LatticeVector zero(const Lattice& lattice);
  static LatticeVector basis(const Lattice& lattice, std::size_t i);

  const Lattice& lattice() const noexcept { return lattice_; }
  const IntVector& coords() const noexcept { return coords_; }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  std::size_t size() const noexcept { return coords_.size(); }

  friend bool operator==(const LatticeVector& a, const LatticeVector& b) {
    return a.lattice_ == b.lattice_ && a.coords_ == b.coords_;
  }

 private:
  Lattice lattice_;
  IntVector coords_;
};

LatticeVector operator+(const LatticeVector& a, const LatticeVector& b);
LatticeVector operator-(const LatticeVector& a, const LatticeVector& b);
LatticeVector operator*(const Integer& k, const LatticeVector& a);

enum class StandardLattice { U, E8neg, rank_one, K3, K3n, Mukai };

// Fixed summand order: E8(-1), E8(-1), U, U, U, then <2-2n> for K3n or U, U
// for Mukai. rank_one takes param = the self-pairing k; K3n takes param = n
// (n >= 2); Mukai accepts an optional n >= 2 that does not change the form.
Lattice standard_lattice(StandardLattice name,
                         std::optional<Integer> param = std::nullopt);

// Coordinate offsets inside K3, K3n and Mukai. Summand U_i (1-based) has
// e_i at u(i) and f_i at u(i) + 1.
namespace layout {
inline constexpr std::size_t e8_first = 0;
inline constexpr std::size_t e8_second = 8;
constexpr std::size_t u(int i) { return 16 + 2 * static_cast<std::size_t>(i - 1); }
inline constexpr std::size_t k3_rank = 22;
inline constexpr std::size_t k3n_rank = 23;
inline constexpr std::size_t mukai_rank = 24;
// Generator l of <2-2n> in K3n.
inline constexpr std::size_t tail = 22;
}  // namespace layout

// Negated E8 Cartan matrix, Bourbaki node order.
IntegerMatrix e8_negative_gram();

Lattice direct_sum(const Lattice& a, const Lattice& b);

// Throws Error(lattice_mismatch) when x and y live in different lattices.
Integer pairing(const LatticeVector& x, const LatticeVector& y);
bool is_isotropic(const LatticeVector& x);
// false for the zero vector.
bool is_primitive(const LatticeVector& x);
// gcd of the entries of gram * x. Throws Error(radical_vector) when x pairs
// to zero with the whole lattice.
Integer divisibility(const LatticeVector& x);

struct Signature {
  std::size_t positive = 0;
  std::size_t zero = 0;
  std::size_t negative = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

// Congruence diagonalization over Q: transform^T * gram * transform is
// diagonal. Columns of transform are the new basis vectors.
struct Diagonalization {
  RationalVector diagonal;
  std::vector<RationalVector> basis;
};
Diagonalization diagonalize(const IntegerMatrix& gram);

Signature signature(const IntegerMatrix& gram);
Signature signature(const Lattice& lattice);
bool is_unimodular(const Lattice& lattice);
bool is_even(const Lattice& lattice);

}  // namespace k3pol
