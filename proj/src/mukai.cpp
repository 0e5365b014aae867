#include "k3pol/mukai.hpp"

#include "k3pol/error.hpp"
#include "k3pol/zlinalg.hpp"

#include <numeric>
#include <optional>
#include <utility>

namespace k3pol {

namespace {

void require(bool condition, const std::string& what) {
  if (!condition) throw Error(Errc::verification_failed, what);
}

void require_arg(bool condition, const std::string& what) {
  if (!condition) throw Error(Errc::invalid_argument, what);
}

std::string str(std::int64_t x) { return std::to_string(x); }

void require_parameters(std::int64_t n, std::int64_t d) {
  require_arg(n >= 2, "n must be at least 2");
  require_arg(d >= 1, "d must be positive");
  require_arg((n - 1) % (d * d) == 0,
              "d^2 = " + str(d * d) + " does not divide n-1 = " + str(n - 1));
}

std::int64_t mod64(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

const Lattice& k3_lattice() {
  static const Lattice lattice = standard_lattice(StandardLattice::K3);
  return lattice;
}

const Lattice& mukai_lattice() {
  static const Lattice lattice = standard_lattice(StandardLattice::Mukai);
  return lattice;
}

Lattice k3n_lattice(std::int64_t n) {
  return standard_lattice(StandardLattice::K3n, Integer(n));
}

MukaiVector::MukaiVector(Integer r, LatticeVector c, Integer s)
    : r_(std::move(r)), c_(std::move(c)), s_(std::move(s)) {
  if (!(c_.lattice() == k3_lattice()))
    throw Error(Errc::lattice_mismatch, "Mukai vector degree-2 part must lie in the K3 lattice");
}

Integer mukai_pairing(const MukaiVector& v, const MukaiVector& w) {
  return pairing(v.c(), w.c()) - v.r() * w.s() - v.s() * w.r();
}

LatticeVector to_mukai_lattice(const MukaiVector& v) {
  IntVector coords = v.c().coords();
  coords.push_back(v.r());
  coords.push_back(-v.s());
  return {mukai_lattice(), std::move(coords)};
}

MukaiVector from_mukai_lattice(const LatticeVector& x) {
  if (!(x.lattice() == mukai_lattice()))
    throw Error(Errc::lattice_mismatch, "vector is not in the Mukai lattice");
  IntVector c(x.coords().begin(), x.coords().begin() + layout::k3_rank);
  return {x[layout::u(4)], LatticeVector(k3_lattice(), std::move(c)),
          -x[layout::u(4) + 1]};
}

MukaiVector mukai_vector_of_sheaf(const Integer& rank, const LatticeVector& c1,
                                  const Integer& c2) {
  require_arg(rank >= 0, "sheaf rank must be nonnegative");
  const Integer square = pairing(c1, c1);
  require_arg(square % 2 == 0, "c1 must have even self-intersection");
  return {rank, c1, square / 2 - c2 + rank};
}

Integer chi_of_support_sheaf(const Integer& genus, const Integer& degree) {
  return 1 - genus + degree;
}

Integer moduli_dimension(const MukaiVector& v) {
  const Integer square = mukai_pairing(v, v);
  require_arg(square % 2 == 0, "Mukai vector has odd self-pairing");
  require_arg(square >= -2, "Mukai vector has self-pairing below -2");
  return square + 2;
}

LatticeVector PrimitiveEmbedding::apply(const LatticeVector& x) const {
  if (!(x.lattice() == source))
    throw Error(Errc::lattice_mismatch, "vector is not in the embedding source");
  return {target, matrix * std::span<const Integer>(x.coords())};
}

PrimitiveEmbedding canonical_embedding(std::int64_t n) {
  require_arg(n >= 2, "canonical embedding requires n >= 2");
  const Lattice source = k3n_lattice(n);
  const Lattice& target = mukai_lattice();
  const std::size_t e4 = layout::u(4), f4 = e4 + 1;

  IntegerMatrix m(layout::mukai_rank, layout::k3n_rank);
  for (std::size_t i = 0; i < layout::k3_rank; ++i) m(i, i) = 1;
  m(e4, layout::tail) = 1;
  m(f4, layout::tail) = -(n - 1);
  IntVector v(layout::mukai_rank);
  v[e4] = 1;
  v[f4] = n - 1;
  PrimitiveEmbedding emb{source, target, std::move(m),
                         LatticeVector(target, std::move(v))};

  require(emb.matrix.transpose() * target.gram() * emb.matrix == source.gram(),
          "embedding does not preserve the pairing");
  std::vector<LatticeVector> image;
  for (std::size_t j = 0; j < layout::k3n_rank; ++j)
    image.emplace_back(target, emb.matrix.column(j));
  require(saturation(target, image).size() == image.size() &&
              saturation_index(emb.matrix.transpose().row_vectors(), layout::mukai_rank) == 1,
          "embedding image is not saturated");
  const auto complement = orthogonal_complement(target, image);
  require(complement.size() == 1, "complement of the image is not of rank 1");
  require(complement[0] == emb.complement_generator ||
              complement[0] == Integer(-1) * emb.complement_generator,
          "complement generator does not span the complement");
  require(pairing(emb.complement_generator, emb.complement_generator) == 2 * n - 2,
          "complement generator does not have square 2n-2");
  return emb;
}

InvariantClass canonical_invariant(std::int64_t n, std::int64_t d, std::int64_t b) {
  require_parameters(n, d);
  require_arg(std::gcd(d, b) == 1, "gcd(d, b) must be 1");
  if (d == 1) return {n, 1, 0};
  const std::int64_t r = mod64(b, d);
  return {n, d, std::min(r, mod64(d - r, d))};
}

std::vector<std::int64_t> admissible_divisibilities(std::int64_t n) {
  require_arg(n >= 2, "n must be at least 2");
  std::vector<std::int64_t> out;
  for (std::int64_t d = 1; d * d <= n - 1; ++d)
    if ((n - 1) % (d * d) == 0) out.push_back(d);
  return out;
}

bool isometry_orbit_oracle(std::int64_t n, std::int64_t d, std::int64_t b1,
                           std::int64_t b2, std::int64_t bound) {
  require_parameters(n, d);
  require_arg(std::gcd(d, b1) == 1 && std::gcd(d, b2) == 1, "gcd(d, b) must be 1");
  for (std::int64_t e : {1, -1})
    for (std::int64_t e2 : {1, -1})
      for (std::int64_t t = -bound; t <= bound; ++t) {
        const std::int64_t x = e * d, y = t * d + e2 * b1;
        if ((x == d && y == b2) || (x == -d && y == -b2)) return true;
      }
  return false;
}

std::vector<InvariantClass> enumerate_invariant_set(std::int64_t n, std::int64_t d) {
  require_parameters(n, d);
  if (d == 1) return {canonical_invariant(n, 1, 0)};
  std::vector<InvariantClass> out;
  for (std::int64_t b = 1; 2 * b <= d; ++b)
    if (std::gcd(b, d) == 1) out.push_back(canonical_invariant(n, d, b));
  return out;
}

MonodromyInvariant monodromy_invariant(std::int64_t n, const LatticeVector& v,
                                       const LatticeVector& x, const Integer& d) {
  const Lattice& ambient = v.lattice();
  if (!(x.lattice() == ambient))
    throw Error(Errc::lattice_mismatch, "v and x live in different lattices");
  require(pairing(v, v) == 2 * n - 2, "(v,v) != 2n-2");
  require(is_primitive(x) && is_isotropic(x) && pairing(x, v) == 0,
          "x must be primitive, isotropic and orthogonal to v");
  require(d >= 1 && (n - 1) % (d * d) == 0,
          "d^2 does not divide n-1 (d = " + to_string(d) + ")");
  const std::int64_t dd = static_cast<std::int64_t>(d);
  const Integer c = (2 * n - 2) / (d * d);

  const std::vector<LatticeVector> span{v, x};
  auto sat = saturation(ambient, span);
  require(sat.size() == 2, "saturation of <v, x> is not of rank 2");
  IntegerMatrix g2(2, 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) g2(i, j) = pairing(sat[i], sat[j]);

  // Radical and complement of H.
  const auto radical = integer_kernel(g2);
  require(radical.size() == 1, "H does not have a rank-1 radical");
  const Integer& ra = radical[0][0];
  const Integer& rb = radical[0][1];
  const LatticeVector r = ra * sat[0] + rb * sat[1];
  require(r == x || r == Integer(-1) * x, "radical of H is not spanned by x");
  const auto eg = extended_gcd(ra, rb);
  const LatticeVector complement = eg.y * sat[0] - eg.x * sat[1];
  require(pairing(complement, complement) == c,
          "H is not isometric to H_{n,d}: complement has square " +
              to_string(pairing(complement, complement)));

  auto divisible_by_d = [&](const LatticeVector& y) {
    for (const auto& e : y.coords())
      if (e % d != 0) return false;
    return true;
  };
  std::optional<std::int64_t> b;
  std::optional<std::int64_t> v_coordinate;
  for (std::int64_t t = 0; t < dd && (!b || !v_coordinate); ++t) {
    if (!b && divisible_by_d(x - Integer(t) * v)) b = t;
    if (!v_coordinate && divisible_by_d(v - Integer(t) * x)) v_coordinate = t;
  }
  require(b.has_value(), "no b with (x - b v)/d integral");
  require(v_coordinate.has_value(), "no t with (v - t x)/d integral");
  require(std::gcd(dd, *b) == 1, "gcd(d, b) != 1");
  require(mod64(*b * *v_coordinate - 1, dd) == 0, "b is not inverse to v's coordinate");

  // {g1, x} with v = d g1 + t x exhibits (H, v) as (H_{n,d}, (d, t)).
  IntVector g1 = (v - Integer(*v_coordinate) * x).coords();
  for (auto& e : g1) e /= d;
  const LatticeVector g1v(ambient, std::move(g1));
  std::vector<IntVector> sat_rows{sat[0].coords(), sat[1].coords()};
  const auto c1 = coordinates_in_basis(sat_rows, g1v.coords());
  const auto c2 = coordinates_in_basis(sat_rows, x.coords());
  require(c1 && c2, "witness basis is not contained in H");
  require(abs((*c1)[0] * (*c2)[1] - (*c1)[1] * (*c2)[0]) == 1,
          "witness vectors do not form a basis of H");
  IntVector m = (x - Integer(*b) * v).coords();
  for (auto& e : m) e /= d;
  require(coordinates_in_basis(sat_rows, m).has_value(),
          "(x - b v)/d is not a class of H");

  IntegerMatrix gram(2, 2);
  gram(0, 0) = pairing(g1v, g1v);
  gram(0, 1) = pairing(g1v, x);
  gram(1, 0) = gram(0, 1);
  gram(1, 1) = pairing(x, x);
  require(gram == IntegerMatrix::diagonal(IntVector{c, 0}), "witness Gram is not c*[[1,0],[0,0]]");

  return MonodromyInvariant{d, *b, std::move(sat), {g1v, x}, std::move(gram),
                            canonical_invariant(n, dd, *b)};
}

MonodromyInvariant h_lambda(std::int64_t n, const LatticeVector& lambda) {
  require_arg(n >= 2, "n must be at least 2");
  if (!(lambda.lattice() == k3n_lattice(n)))
    throw Error(Errc::lattice_mismatch, "lambda is not in the level-n lattice");
  if (!is_primitive(lambda)) throw Error(Errc::not_primitive, "lambda is not primitive");
  if (!is_isotropic(lambda)) throw Error(Errc::not_isotropic, "lambda is not isotropic");
  const Integer d = divisibility(lambda);
  require((n - 1) % (d * d) == 0,
          "Div(lambda)^2 = " + to_string(Integer(d * d)) + " does not divide n-1");
  const auto emb = canonical_embedding(n);
  return monodromy_invariant(n, emb.complement_generator, emb.apply(lambda), d);
}

Integer div_in_sublattice(const Lattice& ambient, std::span<const LatticeVector> sub_basis,
                          const LatticeVector& x) {
  if (!(x.lattice() == ambient))
    throw Error(Errc::lattice_mismatch, "vector is not in the ambient lattice");
  const auto sat = saturation(ambient, sub_basis);
  std::vector<IntVector> rows;
  for (const auto& b : sat) rows.push_back(b.coords());
  require_arg(coordinates_in_basis(rows, x.coords()).has_value(),
              "vector is not in the saturation of the sublattice");
  Integer g = 0;
  for (const auto& b : sub_basis) g = gcd(g, pairing(x, b));
  if (g == 0)
    throw Error(Errc::radical_vector, "vector pairs to zero with the whole sublattice");
  return g;
}

BeauvilleMukaiWitness beauville_mukai_vector(std::int64_t n, std::int64_t d,
                                             std::int64_t b) {
  require_parameters(n, d);
  require_arg(std::gcd(d, b) == 1, "gcd(d, b) must be 1");
  const Integer k = (n - 1) / (d * d);
  const Lattice& k3 = k3_lattice();
  const std::size_t e1 = layout::u(1), f1 = e1 + 1;

  IntVector beta_coords(layout::k3_rank);
  beta_coords[e1] = 1;
  beta_coords[f1] = k;
  LatticeVector beta(k3, std::move(beta_coords));

  std::int64_t s = 1;
  if (d > 1) {
    s = 0;
    for (std::int64_t t = 1; t < d; ++t)
      if (mod64(t * b, d) == 1) {
        s = t;
        break;
      }
  }

  MukaiVector v(0, Integer(d) * beta, s);
  MukaiVector alpha(0, LatticeVector::zero(k3), 1);
  const LatticeVector v_hat = to_mukai_lattice(v);
  const LatticeVector alpha_hat = to_mukai_lattice(alpha);

  std::vector<VerificationCheck> checks;
  auto check = [&](std::string name, bool ok, std::string detail) {
    checks.push_back({std::move(name), ok, std::move(detail)});
  };

  const Integer self = mukai_pairing(v, v);
  const Integer dot = mukai_pairing(alpha, v);
  const std::vector<LatticeVector> v_span{v_hat};
  auto v_perp = orthogonal_complement(mukai_lattice(), v_span);

  check("inverse", s >= 1 && mod64(s * b, d) == mod64(1, d), "s = " + str(s));
  check("beta_primitive", is_primitive(beta), "beta = e1 + " + to_string(k) + " f1");
  check("beta_square", pairing(beta, beta) == 2 * k,
        "(beta,beta) = " + to_string(pairing(beta, beta)));
  check("v_primitive", is_primitive(v_hat), "content(v) = " + to_string(content(v_hat.coords())));
  check("v_square", self == 2 * n - 2 && pairing(v_hat, v_hat) == self,
        "(v,v) = " + to_string(self));
  Integer dim = -1;
  if (self % 2 == 0 && self >= -2) dim = moduli_dimension(v);
  check("moduli_dimension", dim == 2 * n, "dim M(v) = " + to_string(dim));
  check("alpha_orthogonal", dot == 0 && pairing(alpha_hat, v_hat) == 0,
        "(alpha,v) = " + to_string(dot));
  check("alpha_isotropic", mukai_pairing(alpha, alpha) == 0, "(alpha,alpha) = 0");
  Integer div_alpha = 0;
  try {
    div_alpha = div_in_sublattice(mukai_lattice(), v_perp, alpha_hat);
  } catch (const Error&) {
  }
  check("div_alpha", div_alpha == d, "Div(alpha) in v^perp = " + to_string(div_alpha));
  check("div_check", mod64(1 - b * s, d) == 0,
        "1 - b s = " + str(1 - b * s));

  std::optional<InvariantClass> alpha_invariant;
  if (div_alpha == d) {
    try {
      alpha_invariant = monodromy_invariant(n, v_hat, alpha_hat, div_alpha).invariant;
    } catch (const Error&) {
    }
  }
  const auto expected = canonical_invariant(n, d, b);
  check("alpha_invariant", alpha_invariant && *alpha_invariant == expected,
        alpha_invariant ? "b* = " + str(alpha_invariant->b_star()) : "not computed");

  std::string failed;
  for (const auto& c : checks)
    if (!c.passed) failed += (failed.empty() ? "" : ", ") + c.name + " (" + c.detail + ")";
  require(failed.empty(), "Beauville-Mukai verification failed: " + failed);

  return BeauvilleMukaiWitness{n,
                               d,
                               b,
                               k,
                               std::move(beta),
                               Integer(s),
                               std::move(v),
                               std::move(alpha),
                               self,
                               dim,
                               dot,
                               div_alpha,
                               std::move(v_perp),
                               *alpha_invariant,
                               std::move(checks)};
}

}  // namespace k3pol
