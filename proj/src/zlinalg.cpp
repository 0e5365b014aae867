#include "k3pol/zlinalg.hpp"

#include "k3pol/error.hpp"

#include <algorithm>
#include <utility>

namespace k3pol {

namespace {

struct Position {
  std::size_t row;
  std::size_t col;
};

// Least nonzero |entry| in the block [from_row.., from_col..], row-major
// first on ties.
std::optional<Position> min_abs_entry(const IntegerMatrix& m, std::size_t from_row,
                                      std::size_t from_col) {
  std::optional<Position> best;
  Integer best_abs;
  for (std::size_t i = from_row; i < m.rows(); ++i)
    for (std::size_t j = from_col; j < m.cols(); ++j) {
      if (m(i, j) == 0) continue;
      Integer a = abs(m(i, j));
      if (!best || a < best_abs) {
        best = Position{i, j};
        best_abs = std::move(a);
        if (best_abs == 1) return best;
      }
    }
  return best;
}

}  // namespace

SmithForm smith_normal_form(const IntegerMatrix& m) {
  SmithForm f{m, IntegerMatrix::identity(m.rows()), IntegerMatrix::identity(m.cols())};
  auto& s = f.S;
  const std::size_t steps = std::min(m.rows(), m.cols());
  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      const auto pivot = min_abs_entry(s, t, t);
      if (!pivot) return f;  // the rest is zero
      s.swap_rows(t, pivot->row);
      f.U.swap_rows(t, pivot->row);
      s.swap_cols(t, pivot->col);
      f.V.swap_cols(t, pivot->col);

      bool clean = true;
      for (std::size_t i = t + 1; i < s.rows(); ++i) {
        if (s(i, t) == 0) continue;
        const Integer q = s(i, t) / s(t, t);
        s.add_row_multiple(i, t, -q);
        f.U.add_row_multiple(i, t, -q);
        if (s(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < s.cols(); ++j) {
        if (s(t, j) == 0) continue;
        const Integer q = s(t, j) / s(t, t);
        s.add_col_multiple(j, t, -q);
        f.V.add_col_multiple(j, t, -q);
        if (s(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // The pivot must divide the remaining block; otherwise fold an
      // offending row into row t and reduce again.
      std::optional<std::size_t> offending;
      for (std::size_t i = t + 1; i < s.rows() && !offending; ++i)
        for (std::size_t j = t + 1; j < s.cols(); ++j)
          if (s(i, j) % s(t, t) != 0) {
            offending = i;
            break;
          }
      if (!offending) break;
      s.add_row_multiple(t, *offending, 1);
      f.U.add_row_multiple(t, *offending, 1);
    }
    if (s(t, t) < 0) {
      s.negate_row(t);
      f.U.negate_row(t);
    }
  }
  return f;
}

IntVector elementary_divisors(const IntegerMatrix& m) {
  const auto f = smith_normal_form(m);
  IntVector d;
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) d.push_back(f.S(i, i));
  return d;
}

HermiteForm hermite_normal_form(const IntegerMatrix& m) {
  HermiteForm f{m, IntegerMatrix::identity(m.rows()), 0};
  auto& h = f.H;
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
    for (;;) {
      std::optional<std::size_t> best;
      for (std::size_t i = r; i < h.rows(); ++i)
        if (h(i, c) != 0 && (!best || abs(h(i, c)) < abs(h(*best, c)))) best = i;
      if (!best) break;
      h.swap_rows(r, *best);
      f.U.swap_rows(r, *best);
      bool clean = true;
      for (std::size_t i = r + 1; i < h.rows(); ++i) {
        if (h(i, c) == 0) continue;
        const Integer q = h(i, c) / h(r, c);
        h.add_row_multiple(i, r, -q);
        f.U.add_row_multiple(i, r, -q);
        if (h(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h(r, c) == 0) continue;  // no pivot in this column
    if (h(r, c) < 0) {
      h.negate_row(r);
      f.U.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      const Integer q = floor_div(h(i, c), h(r, c));
      h.add_row_multiple(i, r, -q);
      f.U.add_row_multiple(i, r, -q);
    }
    ++r;
  }
  f.rank = r;
  return f;
}

std::vector<IntVector> hermite_basis(const std::vector<IntVector>& rows,
                                     std::size_t dim) {
  const auto f = hermite_normal_form(IntegerMatrix::from_rows(rows, dim));
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < f.rank; ++i) {
    auto r = f.H.row(i);
    out.emplace_back(r.begin(), r.end());
  }
  return out;
}

std::vector<IntVector> integer_kernel(const IntegerMatrix& m) {
  // U * M^T = H; the rows of U beyond rank(H) span the kernel of M.
  const auto f = hermite_normal_form(m.transpose());
  std::vector<IntVector> rows;
  for (std::size_t i = f.rank; i < f.U.rows(); ++i) {
    auto r = f.U.row(i);
    rows.emplace_back(r.begin(), r.end());
  }
  if (rows.empty()) return rows;
  return hermite_basis(rows, m.cols());
}

std::optional<IntVector> coordinates_in_basis(const std::vector<IntVector>& basis,
                                              std::span<const Integer> target) {
  const std::size_t dim = target.size();
  if (basis.empty()) {
    if (is_zero(target)) return IntVector{};
    return std::nullopt;
  }
  const auto f = hermite_normal_form(IntegerMatrix::from_rows(basis, dim));
  // Solve y * H = target along the pivots, then c = y * U.
  IntVector y(basis.size());
  std::size_t col = 0;
  for (std::size_t k = 0; k < f.rank; ++k) {
    while (f.H(k, col) == 0) ++col;
    Integer rest = target[col];
    for (std::size_t i = 0; i < k; ++i) rest -= y[i] * f.H(i, col);
    if (rest % f.H(k, col) != 0) return std::nullopt;
    y[k] = rest / f.H(k, col);
  }
  for (std::size_t j = 0; j < dim; ++j) {
    Integer v = 0;
    for (std::size_t k = 0; k < f.rank; ++k) v += y[k] * f.H(k, j);
    if (v != target[j]) return std::nullopt;
  }
  IntVector c(basis.size());
  for (std::size_t k = 0; k < f.rank; ++k) {
    if (y[k] == 0) continue;
    for (std::size_t i = 0; i < basis.size(); ++i) c[i] += y[k] * f.U(k, i);
  }
  return c;
}

Integer saturation_index(const std::vector<IntVector>& rows, std::size_t dim) {
  Integer index = 1;
  for (const auto& d : elementary_divisors(IntegerMatrix::from_rows(rows, dim)))
    if (d != 0) index *= d;
  return index;
}

namespace {

void require_members(const Lattice& lattice, std::span<const LatticeVector> vs) {
  for (const auto& v : vs)
    if (!(v.lattice() == lattice))
      throw Error(Errc::lattice_mismatch, "vector does not belong to the lattice");
}

std::vector<LatticeVector> wrap(const Lattice& lattice, std::vector<IntVector> rows) {
  std::vector<LatticeVector> out;
  out.reserve(rows.size());
  for (auto& r : rows) out.emplace_back(lattice, std::move(r));
  return out;
}

}  // namespace

std::vector<LatticeVector> orthogonal_complement(const Lattice& lattice,
                                                 std::span<const LatticeVector> vs) {
  if (vs.empty())
    throw Error(Errc::invalid_argument, "orthogonal complement of an empty set");
  require_members(lattice, vs);
  std::vector<IntVector> rows;
  for (const auto& v : vs) rows.push_back(lattice.dual(v.coords()));
  return wrap(lattice, integer_kernel(IntegerMatrix::from_rows(rows, lattice.rank())));
}

std::vector<LatticeVector> saturation(const Lattice& lattice,
                                      std::span<const LatticeVector> basis) {
  require_members(lattice, basis);
  std::vector<IntVector> rows;
  for (const auto& v : basis) rows.push_back(v.coords());
  const auto b = IntegerMatrix::from_rows(rows, lattice.rank());
  if (b.rank() != rows.size())
    throw Error(Errc::dependent_input, "saturation input is linearly dependent");
  // Q-span(B) ∩ Z^r is the kernel of a kernel basis of B.
  const auto relations = integer_kernel(b);
  return wrap(lattice, integer_kernel(IntegerMatrix::from_rows(relations, lattice.rank())));
}

PolarizationType::PolarizationType(IntVector chain) : chain_(std::move(chain)) {
  for (std::size_t i = 0; i < chain_.size(); ++i) {
    if (chain_[i] < 1)
      throw Error(Errc::invalid_argument, "polarization type entries must be positive");
    if (i > 0 && chain_[i] % chain_[i - 1] != 0)
      throw Error(Errc::invalid_argument, "polarization type must be a divisor chain");
  }
}

PolarizationType PolarizationType::principal(std::size_t n) {
  return PolarizationType(IntVector(n, Integer(1)));
}

bool PolarizationType::is_principal() const {
  return std::all_of(chain_.begin(), chain_.end(), [](const Integer& x) { return x == 1; });
}

IntegerMatrix standard_symplectic(std::span<const Integer> divisors) {
  const std::size_t n = divisors.size();
  IntegerMatrix m(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, n + i) = divisors[i];
    m(n + i, i) = -divisors[i];
  }
  return m;
}

namespace {

void validate_alternating(const IntegerMatrix& a) {
  if (!a.is_square())
    throw Error(Errc::invalid_argument, "alternating form must be a square matrix");
  if (a.rows() % 2 != 0)
    throw Error(Errc::odd_dimension, "alternating form has odd dimension");
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (a(i, i) != 0)
      throw Error(Errc::not_alternating, "alternating form has a nonzero diagonal entry");
    for (std::size_t j = i + 1; j < a.cols(); ++j)
      if (a(i, j) != -a(j, i))
        throw Error(Errc::not_alternating, "matrix is not antisymmetric");
  }
  if (a.rows() == 0)
    throw Error(Errc::invalid_argument, "alternating form is empty");
  if (a.determinant() == 0)
    throw Error(Errc::singular, "alternating form is degenerate");
}

// Tracks A under congruence moves together with the basis change T.
struct Congruence {
  IntegerMatrix a;
  IntegerMatrix t;

  void add(std::size_t dst, std::size_t src, const Integer& factor) {
    if (factor == 0) return;
    a.add_row_multiple(dst, src, factor);
    a.add_col_multiple(dst, src, factor);
    t.add_col_multiple(dst, src, factor);
  }
  void swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    a.swap_rows(i, j);
    a.swap_cols(i, j);
    t.swap_cols(i, j);
  }
  void negate(std::size_t i) {
    a.negate_row(i);
    a.negate_col(i);
    t.negate_col(i);
  }
};

}  // namespace

SymplecticForm symplectic_normal_form(const IntegerMatrix& input) {
  validate_alternating(input);
  const std::size_t dim = input.rows();
  const std::size_t n = dim / 2;
  Congruence c{input, IntegerMatrix::identity(dim)};
  auto& a = c.a;

  IntVector divisors;
  for (std::size_t base = 0; base < dim; base += 2) {
    const std::size_t p = base, q = base + 1;
    for (;;) {
      const auto pivot = min_abs_entry(a, base, base);
      // Nondegeneracy was checked, so the block is nonzero.
      c.swap(p, pivot->row);
      c.swap(q, pivot->col == p ? pivot->row : pivot->col);
      if (a(p, q) < 0) c.negate(q);
      const Integer g = a(p, q);

      bool clean = true;
      for (std::size_t m = base + 2; m < dim; ++m) {
        c.add(m, q, -(a(p, m) / g));
        c.add(m, p, a(q, m) / g);
        if (a(p, m) != 0 || a(q, m) != 0) clean = false;
      }
      if (!clean) continue;

      std::optional<std::size_t> offending;
      for (std::size_t i = base + 2; i < dim && !offending; ++i)
        for (std::size_t j = base + 2; j < dim; ++j)
          if (a(i, j) % g != 0) {
            offending = i;
            break;
          }
      if (!offending) break;
      c.add(p, *offending, 1);
    }
    divisors.push_back(a(p, q));
  }

  // Reorder (e1, f1, e2, f2, ...) into (e1, ..., en, f1, ..., fn).
  IntegerMatrix t(dim, dim);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < dim; ++i) {
      t(i, k) = c.t(i, 2 * k);
      t(i, n + k) = c.t(i, 2 * k + 1);
    }
  return {PolarizationType(std::move(divisors)), std::move(t)};
}

PolarizationType polarization_type(const IntegerMatrix& a) {
  auto form = symplectic_normal_form(a);
  if (form.transform.transpose() * a * form.transform !=
      standard_symplectic(form.type.chain()))
    throw Error(Errc::self_check_failed, "symplectic transform does not reproduce the normal form");
  const auto snf = elementary_divisors(a);
  const auto& chain = form.type.chain();
  for (std::size_t i = 0; i < chain.size(); ++i)
    if (snf[2 * i] != chain[i] || snf[2 * i + 1] != chain[i])
      throw Error(Errc::self_check_failed,
                  "symplectic type disagrees with the Smith diagonal");
  return form.type;
}

}  // namespace k3pol
