#include "k3pol/random.hpp"

#include "k3pol/error.hpp"

namespace k3pol::random {

std::int64_t uniform(Engine& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

Unimodular unimodular(Engine& rng, std::size_t n, std::size_t max_moves) {
  Unimodular u{IntegerMatrix::identity(n), IntegerMatrix::identity(n)};
  if (n == 0) return u;
  const auto moves = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(max_moves)));
  const auto last = static_cast<std::int64_t>(n) - 1;
  for (std::size_t m = 0; m < moves; ++m) {
    const auto i = static_cast<std::size_t>(uniform(rng, 0, last));
    const auto j = static_cast<std::size_t>(uniform(rng, 0, last));
    const auto kind = uniform(rng, 0, 5);
    // matrix <- matrix * E, inverse <- E^{-1} * inverse
    if (kind == 0 && i != j) {
      u.matrix.swap_cols(i, j);
      u.inverse.swap_rows(i, j);
    } else if (kind == 1) {
      u.matrix.negate_col(i);
      u.inverse.negate_row(i);
    } else if (i != j) {
      std::int64_t f = uniform(rng, -3, 3);
      if (f == 0) f = 1;
      // E = I + f e_{j,i}: column i += f * column j.
      u.matrix.add_col_multiple(i, j, f);
      u.inverse.add_row_multiple(j, i, -f);
    }
  }
  return u;
}

IntegerMatrix matrix(Engine& rng, std::size_t rows, std::size_t cols, std::int64_t bound) {
  IntegerMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = uniform(rng, -bound, bound);
  return m;
}

IntVector divisor_chain(Engine& rng, std::size_t n, std::int64_t max_entry) {
  IntVector chain;
  std::int64_t current = 1;
  for (std::size_t i = 0; i < n; ++i) {
    current *= uniform(rng, 1, std::min<std::int64_t>(max_entry / current, 6));
    chain.emplace_back(current);
  }
  return chain;
}

Lattice hyperbolic_lattice(Engine& rng, std::size_t k) {
  if (k == 0) throw Error(Errc::invalid_argument, "hyperbolic lattice needs k >= 1");
  IntegerMatrix g(k + 1, k + 1);
  g(0, 1) = 1;
  g(1, 0) = 1;
  for (std::size_t i = 2; i <= k; ++i) g(i, i) = -2 * uniform(rng, 1, 3);
  return Lattice(std::move(g));
}

LatticeVector isotropic_vector(Engine& rng, const Lattice& l) {
  const std::size_t rank = l.rank();
  for (;;) {
    IntVector v(rank);
    for (std::size_t i = 2; i < rank; ++i) v[i] = uniform(rng, -4, 4);
    // (v,v) = 2 a b + (z,z) with z the negative part; (z,z) is even.
    const Integer zz = l.pairing(v, v);
    const Integer target = -zz / 2;  // a * b
    if (target == 0) {
      if (uniform(rng, 0, 1) == 0) v[0] = uniform(rng, 1, 5) * (uniform(rng, 0, 1) ? 1 : -1);
      else v[1] = uniform(rng, 1, 5) * (uniform(rng, 0, 1) ? 1 : -1);
      if (v[0] == 0 && v[1] == 0) continue;
      return {l, std::move(v)};
    }
    // pick a divisor a of target
    std::vector<Integer> divisors;
    for (Integer a = 1; a * a <= target; ++a)
      if (target % a == 0) {
        divisors.push_back(a);
        divisors.push_back(target / a);
      }
    const Integer a = divisors[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(divisors.size()) - 1))];
    const Integer sign = uniform(rng, 0, 1) ? 1 : -1;
    v[0] = sign * a;
    v[1] = sign * (target / a);
    return {l, std::move(v)};
  }
}

RationalVector positive_vector(Engine& rng, const Lattice& l) {
  // x = p e + q f + z with 2 p q > -(z, z).
  RationalVector x(l.rank());
  for (std::size_t i = 2; i < l.rank(); ++i)
    if (uniform(rng, 0, 2) == 0) x[i] = Rational(uniform(rng, -5, 5), uniform(rng, 1, 3));
  const Rational zz = l.pairing(x, x);
  const Rational p(uniform(rng, 1, 9), uniform(rng, 1, 4));
  const Rational margin(uniform(rng, 1, 20), uniform(rng, 1, 5));
  const Rational q = (margin - zz) / (2 * p);
  const int sign = uniform(rng, 0, 1) ? 1 : -1;
  x[0] = sign * p;
  x[1] = sign * q;
  if (l.pairing(x, x) <= 0) throw Error(Errc::verification_failed, "positive_vector: bad lattice layout");
  return x;
}

}  // namespace k3pol::random
