#include "k3pol/periods.hpp"

#include "k3pol/error.hpp"
#include "k3pol/zlinalg.hpp"

#include <utility>

namespace k3pol {

namespace {

void require_period(const PeriodPoint& p) {
  if (!is_period_point(p))
    throw Error(Errc::invalid_period, "not a point of the period domain");
}

void require_hyperbolic(const Lattice& lattice) {
  const auto sig = signature(lattice);
  if (sig.positive != 1 || sig.zero != 0)
    throw Error(Errc::wrong_signature, "form does not have signature (1, k)");
}

void require_positive(const Lattice& lattice, const RationalVector& x) {
  if (x.size() != lattice.rank())
    throw Error(Errc::invalid_argument, "vector length does not match the lattice rank");
  if (lattice.pairing(x, x) <= 0)
    throw Error(Errc::nonpositive_norm, "vector does not have positive square");
}

RationalVector scale(const RationalVector& v, const Rational& f) {
  RationalVector out(v);
  for (auto& e : out) e *= f;
  return out;
}

}  // namespace

PeriodPoint::PeriodPoint(Lattice l, RationalVector px, RationalVector py)
    : lattice(std::move(l)), x(std::move(px)), y(std::move(py)) {
  if (x.size() != lattice.rank() || y.size() != lattice.rank())
    throw Error(Errc::invalid_argument, "period coordinates do not match the lattice rank");
  bool nonzero = false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0 || y[i] != 0) nonzero = true;
  if (!nonzero) throw Error(Errc::invalid_argument, "period point is zero");
}

bool is_period_point(const PeriodPoint& p) {
  const Rational xx = p.lattice.pairing(p.x, p.x);
  const Rational yy = p.lattice.pairing(p.y, p.y);
  return xx == yy && p.lattice.pairing(p.x, p.y) == 0 && xx + yy > 0;
}

bool in_period_perp(const PeriodPoint& p, const LatticeVector& lambda) {
  require_period(p);
  if (!(lambda.lattice() == p.lattice))
    throw Error(Errc::lattice_mismatch, "lambda is not in the period's lattice");
  const auto l = to_rational(lambda.coords());
  return p.lattice.pairing(p.x, l) == 0 && p.lattice.pairing(p.y, l) == 0;
}

std::vector<LatticeVector> one_one_lattice(const PeriodPoint& p) {
  require_period(p);
  const auto& g = p.lattice.gram();
  std::vector<IntVector> rows;
  for (const auto* v : {&p.x, &p.y}) {
    const IntVector iv = clear_denominators(*v);
    rows.push_back(g * std::span<const Integer>(iv));
  }
  std::vector<LatticeVector> out;
  for (auto& k : integer_kernel(IntegerMatrix::from_rows(rows, p.lattice.rank())))
    out.emplace_back(p.lattice, std::move(k));
  return out;
}

bool same_positive_component(const Lattice& lattice, const RationalVector& x,
                             const RationalVector& y) {
  require_hyperbolic(lattice);
  require_positive(lattice, x);
  require_positive(lattice, y);
  return lattice.pairing(x, y) > 0;
}

int isotropic_positive_pairing_check(const Lattice& lattice, const RationalVector& x,
                                     const LatticeVector& lambda) {
  if (!(lambda.lattice() == lattice))
    throw Error(Errc::lattice_mismatch, "lambda is not in the lattice");
  require_hyperbolic(lattice);
  require_positive(lattice, x);
  if (is_zero(lambda.coords())) throw Error(Errc::invalid_argument, "lambda is zero");
  if (!is_isotropic(lambda)) throw Error(Errc::not_isotropic, "lambda is not isotropic");
  const Rational value = lattice.pairing(x, to_rational(lambda.coords()));
  if (value == 0)
    throw Error(Errc::zero_pairing, "(x, lambda) = 0 for a positive x and isotropic lambda");
  return value > 0 ? 1 : -1;
}

PositivityWitness positivity_witness(const LatticeVector& lambda) {
  const Lattice& lattice = lambda.lattice();
  if (is_zero(lambda.coords())) throw Error(Errc::invalid_argument, "lambda is zero");
  if (!is_isotropic(lambda)) throw Error(Errc::not_isotropic, "lambda is not isotropic");
  const auto sig = signature(lattice);
  if (sig.zero != 0 || sig.positive == 0)
    throw Error(Errc::wrong_signature, "lattice must be nondegenerate with a positive direction");
  const std::size_t rank = lattice.rank();

  // Positive directions inside lambda^perp.
  const std::vector<LatticeVector> span{lambda};
  const auto perp = orthogonal_complement(lattice, span);
  IntegerMatrix perp_gram(perp.size(), perp.size());
  for (std::size_t i = 0; i < perp.size(); ++i)
    for (std::size_t j = 0; j < perp.size(); ++j) perp_gram(i, j) = pairing(perp[i], perp[j]);
  const auto diag = diagonalize(perp_gram);
  std::vector<RationalVector> plane;
  for (std::size_t c = 0; c < perp.size(); ++c) {
    if (diag.diagonal[c] <= 0) continue;
    RationalVector v(rank);
    for (std::size_t i = 0; i < perp.size(); ++i)
      if (diag.basis[c][i] != 0)
        for (std::size_t j = 0; j < rank; ++j) v[j] += diag.basis[c][i] * Rational(perp[i][j]);
    plane.push_back(std::move(v));
  }
  if (plane.size() + 1 != sig.positive)
    throw Error(Errc::wrong_signature, "lambda^perp has unexpected positive index");

  std::vector<LatticeVector> restricted_basis;
  IntVector lambda_coords;
  if (plane.empty()) {
    for (std::size_t i = 0; i < rank; ++i) restricted_basis.push_back(LatticeVector::basis(lattice, i));
    lambda_coords = lambda.coords();
  } else {
    std::vector<IntVector> rows;
    for (const auto& v : plane) {
      const IntVector iv = clear_denominators(v);
      rows.push_back(lattice.dual(iv));
    }
    for (auto& k : integer_kernel(IntegerMatrix::from_rows(rows, rank)))
      restricted_basis.emplace_back(lattice, std::move(k));
    std::vector<IntVector> basis_rows;
    for (const auto& b : restricted_basis) basis_rows.push_back(b.coords());
    auto coords = coordinates_in_basis(basis_rows, lambda.coords());
    if (!coords)
      throw Error(Errc::verification_failed, "lambda is not in the restricted lattice");
    lambda_coords = std::move(*coords);
  }

  const std::size_t m = restricted_basis.size();
  IntegerMatrix gram(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      gram(i, j) = pairing(restricted_basis[i], restricted_basis[j]);
  Lattice restricted(std::move(gram));
  const LatticeVector lam(restricted, lambda_coords);

  const auto rdiag = diagonalize(restricted.gram());
  RationalVector x;
  for (std::size_t c = 0; c < m && x.empty(); ++c)
    if (rdiag.diagonal[c] > 0) x = rdiag.basis[c];
  if (x.empty()) throw Error(Errc::wrong_signature, "restricted lattice has no positive vector");

  int sign = isotropic_positive_pairing_check(restricted, x, lam);
  if (sign < 0) {
    x = scale(x, -1);
    sign = isotropic_positive_pairing_check(restricted, x, lam);
  }
  const Rational value = restricted.pairing(x, to_rational(lam.coords()));
  return {std::move(plane), std::move(restricted_basis), std::move(restricted),
          std::move(lambda_coords), std::move(x), value, sign};
}

}  // namespace k3pol
