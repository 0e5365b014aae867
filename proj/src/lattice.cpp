#include "k3pol/lattice.hpp"

#include "k3pol/error.hpp"

#include <array>
#include <utility>

namespace k3pol {

Lattice::Lattice(IntegerMatrix gram) {
  if (gram.rows() == 0 || !gram.is_square())
    throw Error(Errc::invalid_argument, "Gram matrix must be square and nonempty");
  if (!gram.is_symmetric())
    throw Error(Errc::invalid_argument, "Gram matrix must be symmetric");
  gram_ = std::make_shared<const IntegerMatrix>(std::move(gram));
}

Integer Lattice::pairing(std::span<const Integer> x,
                         std::span<const Integer> y) const {
  const auto& g = *gram_;
  Integer total = 0;
  for (std::size_t i = 0; i < g.rows(); ++i) {
    if (x[i] == 0) continue;
    Integer row = 0;
    for (std::size_t j = 0; j < g.cols(); ++j)
      if (y[j] != 0 && g(i, j) != 0) row += g(i, j) * y[j];
    total += x[i] * row;
  }
  return total;
}

Rational Lattice::pairing(std::span<const Rational> x,
                          std::span<const Rational> y) const {
  const auto& g = *gram_;
  Rational total = 0;
  for (std::size_t i = 0; i < g.rows(); ++i) {
    if (x[i] == 0) continue;
    Rational row = 0;
    for (std::size_t j = 0; j < g.cols(); ++j)
      if (y[j] != 0 && g(i, j) != 0) row += Rational(g(i, j)) * y[j];
    total += x[i] * row;
  }
  return total;
}

bool Lattice::same_as(const Lattice& other) const noexcept {
  return gram_ == other.gram_ || *gram_ == *other.gram_;
}

LatticeVector::LatticeVector(Lattice lattice, IntVector coords)
    : lattice_(std::move(lattice)), coords_(std::move(coords)) {
  if (coords_.size() != lattice_.rank())
    throw Error(Errc::invalid_argument,
                "vector length " + std::to_string(coords_.size()) +
                    " does not match lattice rank " +
                    std::to_string(lattice_.rank()));
}

LatticeVector LatticeVector::zero(const Lattice& lattice) {
  return {lattice, IntVector(lattice.rank())};
}

LatticeVector LatticeVector::basis(const Lattice& lattice, std::size_t i) {
  IntVector c(lattice.rank());
  c.at(i) = 1;
  return {lattice, std::move(c)};
}

namespace {

void require_same_lattice(const LatticeVector& a, const LatticeVector& b) {
  if (!(a.lattice() == b.lattice()))
    throw Error(Errc::lattice_mismatch, "vectors belong to different lattices");
}

Lattice hyperbolic_plane() { return Lattice(IntegerMatrix{{0, 1}, {1, 0}}); }

Integer require_level(const std::optional<Integer>& param, const char* name) {
  if (!param)
    throw Error(Errc::invalid_argument, std::string(name) + " requires n");
  if (*param < 2)
    throw Error(Errc::invalid_argument, std::string(name) + " requires n >= 2");
  return *param;
}

}  // namespace

LatticeVector operator+(const LatticeVector& a, const LatticeVector& b) {
  require_same_lattice(a, b);
  IntVector c = a.coords();
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
  return {a.lattice(), std::move(c)};
}

LatticeVector operator-(const LatticeVector& a, const LatticeVector& b) {
  require_same_lattice(a, b);
  IntVector c = a.coords();
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b[i];
  return {a.lattice(), std::move(c)};
}

LatticeVector operator*(const Integer& k, const LatticeVector& a) {
  IntVector c = a.coords();
  for (auto& x : c) x *= k;
  return {a.lattice(), std::move(c)};
}

IntegerMatrix e8_negative_gram() {
  // Bourbaki: chain 1-3-4-5-6-7-8 with node 2 attached to node 4.
  constexpr std::array<std::pair<int, int>, 7> edges{
      {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}}};
  IntegerMatrix g(8, 8);
  for (std::size_t i = 0; i < 8; ++i) g(i, i) = -2;
  for (auto [a, b] : edges) {
    g(a - 1, b - 1) = 1;
    g(b - 1, a - 1) = 1;
  }
  return g;
}

Lattice direct_sum(const Lattice& a, const Lattice& b) {
  const std::size_t ra = a.rank(), rb = b.rank();
  IntegerMatrix g(ra + rb, ra + rb);
  for (std::size_t i = 0; i < ra; ++i)
    for (std::size_t j = 0; j < ra; ++j) g(i, j) = a.gram()(i, j);
  for (std::size_t i = 0; i < rb; ++i)
    for (std::size_t j = 0; j < rb; ++j) g(ra + i, ra + j) = b.gram()(i, j);
  return Lattice(std::move(g));
}

Lattice standard_lattice(StandardLattice name, std::optional<Integer> param) {
  switch (name) {
    case StandardLattice::U:
      return hyperbolic_plane();
    case StandardLattice::E8neg:
      return Lattice(e8_negative_gram());
    case StandardLattice::rank_one:
      if (!param)
        throw Error(Errc::invalid_argument, "rank_one requires the self-pairing k");
      return Lattice(IntegerMatrix{{*param}});
    case StandardLattice::K3:
    case StandardLattice::K3n:
    case StandardLattice::Mukai: {
      Integer n = 0;
      if (name == StandardLattice::K3n) n = require_level(param, "K3n");
      if (name == StandardLattice::Mukai && param) n = require_level(param, "Mukai");
      const Lattice e8(e8_negative_gram());
      const Lattice u = hyperbolic_plane();
      Lattice l = direct_sum(e8, e8);
      for (int i = 0; i < 3; ++i) l = direct_sum(l, u);
      if (name == StandardLattice::K3n)
        l = direct_sum(l, Lattice(IntegerMatrix{{Integer(2 - 2 * n)}}));
      if (name == StandardLattice::Mukai) l = direct_sum(l, u);
      return l;
    }
  }
  throw Error(Errc::invalid_argument, "unknown standard lattice");
}

Integer pairing(const LatticeVector& x, const LatticeVector& y) {
  require_same_lattice(x, y);
  return x.lattice().pairing(x.coords(), y.coords());
}

bool is_isotropic(const LatticeVector& x) { return pairing(x, x) == 0; }

bool is_primitive(const LatticeVector& x) { return content(x.coords()) == 1; }

Integer divisibility(const LatticeVector& x) {
  const Integer g = content(x.lattice().dual(x.coords()));
  if (g == 0)
    throw Error(Errc::radical_vector,
                "divisibility undefined: vector lies in the radical of the form");
  return g;
}

Diagonalization diagonalize(const IntegerMatrix& gram) {
  if (!gram.is_symmetric())
    throw Error(Errc::invalid_argument, "diagonalize needs a symmetric matrix");
  const std::size_t n = gram.rows();
  std::vector<RationalVector> g(n, RationalVector(n));
  std::vector<RationalVector> p(n, RationalVector(n));  // p[i] = column i
  for (std::size_t i = 0; i < n; ++i) {
    p[i][i] = 1;
    for (std::size_t j = 0; j < n; ++j) g[i][j] = gram(i, j);
  }
  // Basis vector b_dst += factor * b_src, applied as a congruence.
  auto add_basis = [&](std::size_t dst, std::size_t src, const Rational& factor) {
    for (std::size_t j = 0; j < n; ++j) g[dst][j] += factor * g[src][j];
    for (std::size_t i = 0; i < n; ++i) g[i][dst] += factor * g[i][src];
    for (std::size_t i = 0; i < n; ++i) p[dst][i] += factor * p[src][i];
  };
  auto swap_basis = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap(g[a], g[b]);
    for (std::size_t i = 0; i < n; ++i) std::swap(g[i][a], g[i][b]);
    std::swap(p[a], p[b]);
  };

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = n;
    for (std::size_t i = k; i < n && pivot == n; ++i)
      if (g[i][i] != 0) pivot = i;
    if (pivot == n) {
      // Zero diagonal: combine two basis vectors with a nonzero pairing.
      std::size_t a = n, b = n;
      for (std::size_t i = k; i < n && a == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (g[i][j] != 0) {
            a = i;
            b = j;
            break;
          }
      if (a == n) break;  // remaining block is zero
      add_basis(a, b, 1);  // new diagonal entry 2 * g[a][b]
      pivot = a;
    }
    swap_basis(k, pivot);
    for (std::size_t m = k + 1; m < n; ++m) {
      if (g[m][k] == 0) continue;
      add_basis(m, k, -g[m][k] / g[k][k]);
    }
  }

  Diagonalization out;
  out.diagonal.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.diagonal[i] = g[i][i];
  out.basis = std::move(p);
  return out;
}

Signature signature(const IntegerMatrix& gram) {
  Signature s;
  for (const auto& d : diagonalize(gram).diagonal) {
    if (d > 0) ++s.positive;
    else if (d < 0) ++s.negative;
    else ++s.zero;
  }
  return s;
}

Signature signature(const Lattice& lattice) { return signature(lattice.gram()); }

bool is_unimodular(const Lattice& lattice) {
  return abs(lattice.gram().determinant()) == 1;
}

bool is_even(const Lattice& lattice) {
  for (std::size_t i = 0; i < lattice.rank(); ++i)
    if (lattice.gram()(i, i) % 2 != 0) return false;
  return true;
}

}  // namespace k3pol
