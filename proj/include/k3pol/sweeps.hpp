#pragma once

#include "k3pol/integer.hpp"
#include "k3pol/lattice.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace k3pol {

// Exhaustive verification sweeps. Each case is independent; the parallel
// path distributes cases over OpenMP threads and the serial path is the
// reference it is tested against. Reports list failures in case order, so
// both paths produce identical reports.
enum class Execution { serial, parallel };

struct SweepReport {
  std::size_t cases = 0;
  std::vector<std::string> failures;

  bool ok() const noexcept { return failures.empty(); }
  friend bool operator==(const SweepReport&, const SweepReport&) = default;
};

// lambda = d e3 + d k c^2 f3 + c l in the level-n lattice, k = (n-1)/d^2.
// Primitive and isotropic with Div = d when gcd(c, d) = 1 and c != 0; the
// b of (iota(lambda) - b v)/d is c mod d.
LatticeVector lambda_with_invariant(std::int64_t n, std::int64_t d, std::int64_t c);

// Every n in [2, n_max], admissible d and canonical b*: the Beauville-Mukai
// construction passes all of its verifications, and the reported values
// match (v,v) = 2n-2, dim = 2n, Div(alpha) = d, d | 1 - b s.
SweepReport sweep_beauville_mukai(std::int64_t n_max, Execution exec);

// Every n in [2, n_max], admissible d and canonical b*: h_lambda on
// lambda_with_invariant(n, d, b*) recovers d and b* with gcd(d, b) = 1.
SweepReport sweep_monodromy_invariants(std::int64_t n_max, Execution exec);

// Every d in [1, d_max] and b1, b2 in [-d, 2d] coprime to d: canonical
// class equality agrees with the brute-force isometry oracle (bound 2d).
SweepReport sweep_canonicalization(std::int64_t d_max, Execution exec);

struct CertificateCase {
  std::int64_t n = 0;
  std::int64_t d = 0;
  std::int64_t b_star = 0;
  std::int64_t c = 0;
};

// Cases for every n in [2, n_max], admissible d and canonical b*, with
// `variants` choices of c per class.
std::vector<CertificateCase> certificate_corpus(std::int64_t n_max, std::size_t variants);

// Each case must yield a complete certificate with a principal conclusion
// of length n and both cited steps marked paper-supplied.
SweepReport sweep_certificates(const std::vector<CertificateCase>& corpus, Execution exec);

}  // namespace k3pol
