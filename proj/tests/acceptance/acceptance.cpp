// Acceptance suite: one PASS/FAIL line per criterion. Oracles here are
// written independently of the library code they check.

#include "k3pol/certificate.hpp"
#include "k3pol/cli.hpp"
#include "k3pol/json_io.hpp"
#include "k3pol/lattice.hpp"
#include "k3pol/mukai.hpp"
#include "k3pol/periods.hpp"
#include "k3pol/random.hpp"
#include "k3pol/sweeps.hpp"
#include "k3pol/zlinalg.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

using namespace k3pol;
using nlohmann::json;

namespace {

constexpr double time_limit_seconds = 60.0;

struct Outcome {
  bool ok = true;
  std::string detail;
  std::vector<std::string> failures;

  void fail(std::string what) {
    ok = false;
    if (failures.size() < 5) failures.push_back(std::move(what));
  }
};

// Elementary divisors by plain repeated gcd elimination: move the entry of
// least absolute value to the corner, clear its row and column by division
// with remainder, and fix divisibility by adding a row. Diagonal only.
IntVector oracle_elementary_divisors(IntegerMatrix a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  const std::size_t r = std::min(rows, cols);
  for (std::size_t t = 0; t < r; ++t) {
    for (;;) {
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a(i, j) != 0 && (pi == rows || abs(a(i, j)) < abs(a(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == rows) break;
      a.swap_rows(t, pi);
      a.swap_cols(t, pj);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        const Integer q = a(i, t) / a(t, t);
        a.add_row_multiple(i, t, -q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        const Integer q = a(t, j) / a(t, t);
        a.add_col_multiple(j, t, -q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a(i, j) % a(t, t) != 0) {
            a.add_row_multiple(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
  }
  IntVector d;
  for (std::size_t i = 0; i < r; ++i) d.push_back(abs(a(i, i)));
  return d;
}

bool chain_monotone(const IntVector& d) {
  for (std::size_t i = 0; i + 1 < d.size(); ++i) {
    if (d[i] < 0) return false;
    if (d[i] == 0 ? d[i + 1] != 0 : d[i + 1] % d[i] != 0) return false;
  }
  return true;
}

Integer gram_pairing(const IntegerMatrix& g, const IntVector& x, const IntVector& y) {
  Integer s = 0;
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) s += x[i] * g(i, j) * y[j];
  return s;
}

// Sylvester: a symmetric matrix is positive definite iff every leading
// principal minor is positive.
bool positive_definite(const IntegerMatrix& g) {
  for (std::size_t k = 1; k <= g.rows(); ++k) {
    IntegerMatrix m(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) m(i, j) = g(i, j);
    if (m.determinant() <= 0) return false;
  }
  return true;
}

struct CliResult {
  int code;
  std::string out;
};

CliResult cli_run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str()};
}

std::string coords_json(const IntVector& c) {
  json a = json::array();
  for (const auto& x : c) a.push_back(to_string(x));
  return a.dump();
}

// ---------------------------------------------------------------- 1
Outcome criterion_polarization_type() {
  Outcome o;
  for (std::size_t n = 1; n <= 10; ++n) {
    IntegerMatrix a(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      a(i, n + i) = 1;
      a(n + i, i) = -1;
    }
    const auto t = polarization_type(a);
    if (t.chain() != IntVector(n, Integer(1))) o.fail("principal form n=" + std::to_string(n));
  }
  random::Engine rng(20261016);
  std::size_t cases = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const auto n = static_cast<std::size_t>(random::uniform(rng, 1, 5));
    const auto chain = random::divisor_chain(rng, n, 50);
    const auto w = random::unimodular(rng, 2 * n, 30);
    IntegerMatrix block(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      block(i, n + i) = chain[i];
      block(n + i, i) = -chain[i];
    }
    const auto a = w.matrix.transpose() * block * w.matrix;
    ++cases;
    IntVector doubled;
    for (const auto& d : chain) {
      doubled.push_back(d);
      doubled.push_back(d);
    }
    const auto recovered = polarization_type(a).chain();
    if (recovered != chain) o.fail("trial " + std::to_string(trial) + ": type mismatch");
    if (oracle_elementary_divisors(a) != doubled) o.fail("trial " + std::to_string(trial) + ": SNF-pairing oracle mismatch");
  }
  o.detail = "10 principal forms, " + std::to_string(cases) + " random basis changes";
  return o;
}

// ---------------------------------------------------------------- 2
Outcome criterion_normal_forms() {
  Outcome o;
  random::Engine rng(8128);
  for (int trial = 0; trial < 500; ++trial) {
    const auto rows = static_cast<std::size_t>(random::uniform(rng, 1, 8));
    const auto cols = static_cast<std::size_t>(random::uniform(rng, 1, 8));
    const auto m = random::matrix(rng, rows, cols, 100);
    const auto f = smith_normal_form(m);
    const std::string tag = "trial " + std::to_string(trial);
    if (!(f.U * m * f.V == f.S)) o.fail(tag + ": U M V != S");
    if (abs(f.U.determinant()) != 1 || abs(f.V.determinant()) != 1) o.fail(tag + ": not unimodular");
    IntVector diag;
    for (std::size_t i = 0; i < std::min(rows, cols); ++i) diag.push_back(f.S(i, i));
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (i != j && f.S(i, j) != 0) o.fail(tag + ": S not diagonal");
    if (!chain_monotone(diag)) o.fail(tag + ": divisor chain not monotone");
    if (diag != oracle_elementary_divisors(m)) o.fail(tag + ": elementary divisors disagree with oracle");
    const auto h = hermite_normal_form(m);
    if (!(h.U * m == h.H) || abs(h.U.determinant()) != 1) o.fail(tag + ": U M != H");
    if (!(hermite_normal_form(h.H).H == h.H)) o.fail(tag + ": HNF not idempotent");
  }
  o.detail = "500 SNF + HNF cases";
  return o;
}

// ---------------------------------------------------------------- 3
Outcome criterion_lattice_constants() {
  Outcome o;
  IntegerMatrix minus_e8 = e8_negative_gram();
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) minus_e8(i, j) = -minus_e8(i, j);
  if (!positive_definite(minus_e8)) o.fail("E8(-1) is not negative definite");
  for (std::int64_t n = 2; n <= 50; ++n) {
    const Lattice l = k3n_lattice(n);
    if (!(signature(l) == Signature{3, 0, 20})) o.fail("signature of K3n n=" + std::to_string(n));
    if (!is_even(l)) o.fail("K3n not even n=" + std::to_string(n));
    bool even = true;
    for (std::size_t i = 0; i < l.rank(); ++i) even = even && l.gram()(i, i) % 2 == 0;
    if (!even) o.fail("K3n diagonal odd n=" + std::to_string(n));
    if (abs(l.gram().determinant()) != 2 * n - 2) o.fail("K3n discriminant n=" + std::to_string(n));
  }
  const Lattice m = mukai_lattice();
  if (m.rank() != 24) o.fail("Mukai rank");
  if (abs(m.gram().determinant()) != 1) o.fail("Mukai |det|");
  if (!is_even(m)) o.fail("Mukai not even");
  if (!(signature(m) == Signature{4, 0, 20})) o.fail("Mukai signature");
  o.detail = "K3n for n = 2..50, Mukai lattice";
  return o;
}

// ---------------------------------------------------------------- 4
Outcome criterion_beauville_mukai() {
  Outcome o;
  std::size_t cases = 0;
  const IntegerMatrix& g = mukai_lattice().gram();
  for (std::int64_t n = 2; n <= 50; ++n)
    for (auto d : admissible_divisibilities(n))
      for (const auto& cls : enumerate_invariant_set(n, d)) {
        ++cases;
        const std::int64_t b = cls.b_star();
        const std::string tag = "(" + std::to_string(n) + "," + std::to_string(d) + "," + std::to_string(b) + ")";
        BeauvilleMukaiWitness w = [&] {
          try {
            return beauville_mukai_vector(n, d, b);
          } catch (const Error& e) {
            o.fail(tag + ": " + e.what());
            throw;
          }
        }();
        const IntVector v = to_mukai_lattice(w.v).coords();
        const IntVector alpha = to_mukai_lattice(w.alpha).coords();
        Integer cont = 0;
        for (const auto& x : v) cont = gcd(cont, x);
        if (cont != 1) o.fail(tag + ": v not primitive");
        const Integer vv = gram_pairing(g, v, v);
        if (vv != 2 * n - 2) o.fail(tag + ": (v,v) != 2n-2");
        if (vv + 2 != 2 * n || w.dimension != 2 * n) o.fail(tag + ": moduli dimension");
        if (gram_pairing(g, alpha, v) != 0) o.fail(tag + ": alpha not orthogonal to v");
        // v_perp must be a rank-23 primitive sublattice orthogonal to v.
        if (w.v_perp.size() != 23) o.fail(tag + ": v_perp rank");
        std::vector<IntVector> rows;
        Integer div = 0;
        for (const auto& p : w.v_perp) {
          if (gram_pairing(g, p.coords(), v) != 0) o.fail(tag + ": v_perp vector not orthogonal");
          rows.push_back(p.coords());
          div = gcd(div, gram_pairing(g, alpha, p.coords()));
        }
        const auto sub = IntegerMatrix::from_rows(rows, 24);
        if (oracle_elementary_divisors(sub) != IntVector(23, Integer(1))) o.fail(tag + ": v_perp not saturated");
        if (!coordinates_in_basis(rows, alpha)) o.fail(tag + ": alpha not in v_perp");
        if (div != d) o.fail(tag + ": Div(alpha) != d");
        const std::int64_t s = static_cast<std::int64_t>(w.s);
        if (((1 - b * s) % d) != 0) o.fail(tag + ": d does not divide 1 - b s");
      }
  const auto parallel = sweep_beauville_mukai(50, Execution::parallel);
  if (!parallel.ok()) o.fail("library sweep: " + parallel.failures.front());
  o.detail = std::to_string(cases) + " classes for n <= 50";
  return o;
}

// ---------------------------------------------------------------- 5
Outcome criterion_monodromy_invariants() {
  Outcome o;
  std::size_t cases = 0;
  for (std::int64_t n = 2; n <= 30; ++n)
    for (auto d : admissible_divisibilities(n))
      for (const auto& cls : enumerate_invariant_set(n, d))
        for (std::int64_t c : {cls.b_star(), cls.b_star() + d, d - cls.b_star(), -cls.b_star()}) {
          if (std::gcd(c, d) != 1 || c == 0) continue;
          ++cases;
          const std::string tag = "(" + std::to_string(n) + "," + std::to_string(d) + ",c=" + std::to_string(c) + ")";
          const std::int64_t k = (n - 1) / (d * d);
          IntVector coords(layout::k3n_rank);
          coords[layout::u(3)] = d;
          coords[layout::u(3) + 1] = Integer(d) * k * c * c;
          coords[layout::tail] = c;
          const LatticeVector lambda(k3n_lattice(n), coords);
          try {
            const auto m = h_lambda(n, lambda);
            if (m.divisibility != d) o.fail(tag + ": divisibility");
            if ((n - 1) % (d * d) != 0) o.fail(tag + ": d^2 does not divide n-1");
            const Integer cc = Integer(2 * n - 2) / (d * d);
            if (!(m.gram == IntegerMatrix{{cc, 0}, {0, 0}})) o.fail(tag + ": H not isometric to H_{n,d}");
            if (std::gcd(m.b, d) != 1) o.fail(tag + ": gcd(d, b) != 1");
            // (iota(lambda) - b v)/d integral, checked directly.
            IntVector il(coords.begin(), coords.begin() + layout::k3_rank);
            il.push_back(coords[layout::tail]);
            il.push_back(-(n - 1) * coords[layout::tail]);
            bool integral = true;
            il[layout::u(4)] -= m.b;
            il[layout::u(4) + 1] -= Integer(m.b) * (n - 1);
            for (const auto& x : il) integral = integral && x % d == 0;
            if (!integral) o.fail(tag + ": (iota(lambda) - b v)/d not integral");
            if (!(m.invariant == canonical_invariant(n, d, c))) o.fail(tag + ": invariant class");
          } catch (const Error& e) {
            o.fail(tag + ": " + e.what());
          }
        }
  // Golden fixture.
  IntVector golden(layout::k3n_rank);
  golden[layout::u(3)] = 2;
  golden[layout::u(3) + 1] = 2;
  golden[layout::tail] = 1;
  const auto m = h_lambda(5, LatticeVector(k3n_lattice(5), golden));
  if (m.divisibility != 2 || m.invariant.b_star() != 1) o.fail("golden (5, 2e3+2f3+l) != (2,1)");
  if (!(m.gram == IntegerMatrix{{2, 0}, {0, 0}})) o.fail("golden Gram != [[2,0],[0,0]]");
  const auto parallel = sweep_monodromy_invariants(30, Execution::parallel);
  if (!parallel.ok()) o.fail("library sweep: " + parallel.failures.front());
  o.detail = std::to_string(cases) + " lambdas for n <= 30 + golden fixture";
  return o;
}

// ---------------------------------------------------------------- 6
Outcome criterion_canonicalization() {
  Outcome o;
  std::size_t pairs = 0;
  for (std::int64_t d = 1; d <= 20; ++d) {
    const std::int64_t n = d * d + 1;
    for (std::int64_t b1 = -d; b1 <= 2 * d; ++b1) {
      if (std::gcd(b1, d) != 1) continue;
      for (std::int64_t b2 = -d; b2 <= 2 * d; ++b2) {
        if (std::gcd(b2, d) != 1) continue;
        ++pairs;
        const bool canonical = canonical_invariant(n, d, b1) == canonical_invariant(n, d, b2);
        const bool oracle = isometry_orbit_oracle(n, d, b1, b2, 2 * d);
        if (canonical != oracle)
          o.fail("d=" + std::to_string(d) + " b1=" + std::to_string(b1) + " b2=" + std::to_string(b2));
      }
    }
  }
  o.detail = std::to_string(pairs) + " pairs for d <= 20";
  return o;
}

// ---------------------------------------------------------------- 7
Outcome criterion_isotropic_positive() {
  Outcome o;
  random::Engine rng(1729);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto k = static_cast<std::size_t>(random::uniform(rng, 1, 20));
    const Lattice l = random::hyperbolic_lattice(rng, k);
    const std::string tag = "trial " + std::to_string(trial);
    if (!(signature(l) == Signature{1, 0, k})) o.fail(tag + ": lattice signature");
    const auto x = random::positive_vector(rng, l);
    const auto y = random::positive_vector(rng, l);
    const auto lambda = random::isotropic_vector(rng, l);
    if (l.pairing(x, x) <= 0 || is_zero(lambda.coords()) || pairing(lambda, lambda) != 0) {
      o.fail(tag + ": bad sample");
      continue;
    }
    const Rational xl = l.pairing(x, to_rational(lambda.coords()));
    if (xl == 0) o.fail(tag + ": (x, lambda) = 0");
    try {
      const int sign = isotropic_positive_pairing_check(l, x, lambda);
      if (sign != (xl > 0 ? 1 : -1)) o.fail(tag + ": sign disagrees with direct pairing");
      RationalVector minus_y = y;
      for (auto& c : minus_y) c = -c;
      const bool same = same_positive_component(l, x, y);
      if (same_positive_component(l, x, minus_y) == same) o.fail(tag + ": component flip");
      if (!same_positive_component(l, x, x)) o.fail(tag + ": x not in its own component");
      const Rational yl = l.pairing(y, to_rational(lambda.coords()));
      if (same != ((xl > 0) == (yl > 0))) o.fail(tag + ": component does not fix the sign of (., lambda)");
    } catch (const Error& e) {
      o.fail(tag + ": " + e.what());
    }
  }
  o.detail = "1000 trials, k <= 20";
  return o;
}

// ---------------------------------------------------------------- 8
Outcome criterion_certificates() {
  Outcome o;
  const auto corpus = certificate_corpus(30, 3);
  if (corpus.size() < 100) o.fail("corpus has fewer than 100 instances");
  std::size_t passed = 0, corrupted = 0;
  for (const auto& c : corpus) {
    const std::string tag = "(" + std::to_string(c.n) + "," + std::to_string(c.d) + ",c=" + std::to_string(c.c) + ")";
    const auto lambda = lambda_with_invariant(c.n, c.d, c.c);
    const std::string lj = coords_json(lambda.coords());
    const auto r = cli_run({"certificate", "--n", std::to_string(c.n), "--lambda", lj});
    if (r.code != 0) {
      o.fail(tag + ": exit " + std::to_string(r.code));
      continue;
    }
    const json doc = json::parse(r.out);
    if (doc.at("conclusion").at("polarization_type") != json(std::vector<std::string>(c.n, "1")))
      o.fail(tag + ": conclusion is not (1,...,1) of length n");
    std::size_t cited = 0;
    for (const auto& s : doc.at("steps")) {
      if (s.at("status") == "paper-supplied") ++cited;
      if (s.at("status") == "fail") o.fail(tag + ": failed step in complete certificate");
      if ((s.at("step") == "deformation_invariance" || s.at("step") == "beauville_mukai_principal") &&
          s.at("status") != "paper-supplied")
        o.fail(tag + ": analytic step not marked paper-supplied");
    }
    if (cited != 2) o.fail(tag + ": expected two paper-supplied steps");
    ++passed;

    // Non-isotropic: add e1 + f1, which is orthogonal to lambda with square 2.
    IntVector bad = lambda.coords();
    bad[layout::u(1)] += 1;
    bad[layout::u(1) + 1] += 1;
    ++corrupted;
    if (cli_run({"certificate", "--n", std::to_string(c.n), "--lambda", coords_json(bad)}).code != 1)
      o.fail(tag + ": non-isotropic lambda not rejected with exit 1");
    // Tampered b: a residue not congruent to the true b.
    if (c.d >= 2) {
      ++corrupted;
      const std::int64_t tampered = c.c + 1;
      if (cli_run({"certificate", "--n", std::to_string(c.n), "--lambda", lj, "--b", std::to_string(tampered)}).code != 1)
        o.fail(tag + ": tampered b not rejected with exit 1");
    }
  }
  // The installed binary follows the same contract.
  IntVector golden(layout::k3n_rank);
  golden[layout::u(3)] = 2;
  golden[layout::u(3) + 1] = 2;
  golden[layout::tail] = 1;
  const std::string bin = K3POL_CLI_PATH;
  const auto status = [](const std::string& cmd) {
    const int s = std::system((cmd + " > /dev/null 2>&1").c_str());
    return WIFEXITED(s) ? WEXITSTATUS(s) : -1;
  };
  const std::string g = "'" + coords_json(golden) + "'";
  if (status(bin + " certificate --n 5 --lambda " + g) != 0) o.fail("binary: golden certificate");
  if (status(bin + " certificate --n 5 --lambda " + g + " --b 0") != 1) o.fail("binary: tampered b");
  golden[layout::u(1)] = 1;
  golden[layout::u(1) + 1] = 1;
  if (status(bin + " certificate --n 5 --lambda '" + coords_json(golden) + "'") != 1)
    o.fail("binary: non-isotropic lambda");
  const auto parallel = sweep_certificates(corpus, Execution::parallel);
  if (!parallel.ok()) o.fail("library sweep: " + parallel.failures.front());
  o.detail = std::to_string(passed) + "/" + std::to_string(corpus.size()) + " certificates, " +
             std::to_string(corrupted) + " corrupted fixtures rejected";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"polarization-type correctness", criterion_polarization_type},
      {"normal-form exactness", criterion_normal_forms},
      {"lattice constants", criterion_lattice_constants},
      {"Beauville-Mukai exhaustive verification", criterion_beauville_mukai},
      {"monodromy-invariant consistency", criterion_monodromy_invariants},
      {"canonicalization vs oracle", criterion_canonicalization},
      {"isotropic/positive pairing property", criterion_isotropic_positive},
      {"end-to-end certificate", criterion_certificates},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > time_limit_seconds) o.fail("exceeded " + std::to_string(time_limit_seconds) + " s");
    std::printf("%s criterion %zu: %s [%s] (%.2f s)\n", o.ok ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), o.detail.c_str(), secs);
    for (const auto& f : o.failures) std::printf("    %s\n", f.c_str());
    std::fflush(stdout);
    if (!o.ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
