#include "k3pol/sweeps.hpp"

#include "k3pol/certificate.hpp"
#include "k3pol/error.hpp"
#include "k3pol/mukai.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>

namespace k3pol {

namespace {

using CaseResult = std::optional<std::string>;  // failure message, if any

template <typename Case>
SweepReport run_cases(const std::vector<Case>& cases,
                      const std::function<CaseResult(const Case&)>& kernel,
                      Execution exec) {
  std::vector<CaseResult> results(cases.size());
  const auto count = static_cast<std::int64_t>(cases.size());
  auto guarded = [&](std::int64_t i) {
    try {
      results[i] = kernel(cases[i]);
    } catch (const std::exception& e) {
      results[i] = std::string("exception: ") + e.what();
    }
  };
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i) guarded(i);
  } else {
    for (std::int64_t i = 0; i < count; ++i) guarded(i);
  }
  SweepReport report;
  report.cases = cases.size();
  for (auto& r : results)
    if (r) report.failures.push_back(std::move(*r));
  return report;
}

struct ClassCase {
  std::int64_t n;
  std::int64_t d;
  std::int64_t b_star;
};

std::vector<ClassCase> all_classes(std::int64_t n_max) {
  std::vector<ClassCase> out;
  for (std::int64_t n = 2; n <= n_max; ++n)
    for (std::int64_t d : admissible_divisibilities(n))
      for (const auto& c : enumerate_invariant_set(n, d)) out.push_back({n, d, c.b_star()});
  return out;
}

std::string label(std::int64_t n, std::int64_t d, std::int64_t b) {
  return "(n=" + std::to_string(n) + ", d=" + std::to_string(d) + ", b=" + std::to_string(b) + ")";
}

std::int64_t representative(std::int64_t d, std::int64_t b_star) {
  return d == 1 ? 1 : b_star;
}

}  // namespace

LatticeVector lambda_with_invariant(std::int64_t n, std::int64_t d, std::int64_t c) {
  if (n < 2 || d < 1 || (n - 1) % (d * d) != 0 || c == 0)
    throw Error(Errc::invalid_argument, "lambda_with_invariant: bad parameters");
  const Integer k = (n - 1) / (d * d);
  IntVector coords(layout::k3n_rank);
  coords[layout::u(3)] = d;
  coords[layout::u(3) + 1] = Integer(d) * k * c * c;
  coords[layout::tail] = c;
  return {k3n_lattice(n), std::move(coords)};
}

SweepReport sweep_beauville_mukai(std::int64_t n_max, Execution exec) {
  return run_cases<ClassCase>(all_classes(n_max), [](const ClassCase& c) -> CaseResult {
    const auto w = beauville_mukai_vector(c.n, c.d, c.b_star);
    const auto v_hat = to_mukai_lattice(w.v);
    if (!is_primitive(v_hat)) return label(c.n, c.d, c.b_star) + ": v not primitive";
    if (w.self_pairing != 2 * c.n - 2) return label(c.n, c.d, c.b_star) + ": (v,v) != 2n-2";
    if (moduli_dimension(w.v) != 2 * c.n) return label(c.n, c.d, c.b_star) + ": dim != 2n";
    if (mukai_pairing(w.alpha, w.v) != 0) return label(c.n, c.d, c.b_star) + ": alpha not orthogonal to v";
    if (w.div_alpha != c.d) return label(c.n, c.d, c.b_star) + ": Div(alpha) != d";
    if ((1 - c.b_star * w.s) % c.d != 0) return label(c.n, c.d, c.b_star) + ": d does not divide 1 - b s";
    return std::nullopt;
  }, exec);
}

SweepReport sweep_monodromy_invariants(std::int64_t n_max, Execution exec) {
  return run_cases<ClassCase>(all_classes(n_max), [](const ClassCase& c) -> CaseResult {
    const auto lambda = lambda_with_invariant(c.n, c.d, representative(c.d, c.b_star));
    const auto h = h_lambda(c.n, lambda);
    const std::string tag = label(c.n, c.d, c.b_star);
    if (h.divisibility != c.d) return tag + ": wrong divisibility " + to_string(h.divisibility);
    if (std::gcd(c.d, h.b) != 1) return tag + ": gcd(d, b) != 1";
    if (h.invariant.b_star() != c.b_star) return tag + ": wrong b* " + std::to_string(h.invariant.b_star());
    if (h.gram != IntegerMatrix{{Integer((2 * c.n - 2) / (c.d * c.d)), 0}, {0, 0}})
      return tag + ": H(lambda) is not H_{n,d}";
    return std::nullopt;
  }, exec);
}

SweepReport sweep_canonicalization(std::int64_t d_max, Execution exec) {
  struct PairCase {
    std::int64_t d, b1, b2;
  };
  std::vector<PairCase> cases;
  for (std::int64_t d = 1; d <= d_max; ++d)
    for (std::int64_t b1 = -d; b1 <= 2 * d; ++b1)
      for (std::int64_t b2 = -d; b2 <= 2 * d; ++b2)
        if (std::gcd(d, b1) == 1 && std::gcd(d, b2) == 1) cases.push_back({d, b1, b2});
  return run_cases<PairCase>(cases, [](const PairCase& c) -> CaseResult {
    const std::int64_t n = c.d * c.d + 1;
    const bool canonical_equal = canonical_invariant(n, c.d, c.b1) == canonical_invariant(n, c.d, c.b2);
    const bool oracle = isometry_orbit_oracle(n, c.d, c.b1, c.b2, 2 * c.d);
    if (canonical_equal != oracle)
      return "d=" + std::to_string(c.d) + " b1=" + std::to_string(c.b1) + " b2=" + std::to_string(c.b2) +
             ": canonical " + (canonical_equal ? "equal" : "different") + ", oracle " +
             (oracle ? "isometric" : "not isometric");
    return std::nullopt;
  }, exec);
}

std::vector<CertificateCase> certificate_corpus(std::int64_t n_max, std::size_t variants) {
  std::vector<CertificateCase> out;
  for (const auto& c : all_classes(n_max)) {
    // c runs through b*, d - b*, b* + d, 2d - b*, ..., all coprime to d;
    // for d = 1 simply 1, 2, 3, ...
    std::vector<std::int64_t> values;
    for (std::int64_t j = 0; values.size() < variants; ++j) {
      std::int64_t value = j + 1;
      if (c.d > 1) value = (j % 2 == 0 ? c.b_star : c.d - c.b_star) + (j / 2) * c.d;
      if (std::find(values.begin(), values.end(), value) == values.end()) values.push_back(value);
    }
    for (auto value : values) out.push_back({c.n, c.d, c.b_star, value});
  }
  return out;
}

SweepReport sweep_certificates(const std::vector<CertificateCase>& corpus, Execution exec) {
  return run_cases<CertificateCase>(corpus, [](const CertificateCase& c) -> CaseResult {
    const std::string tag = label(c.n, c.d, c.b_star) + " c=" + std::to_string(c.c);
    const auto cert = principality_certificate(c.n, lambda_with_invariant(c.n, c.d, c.c));
    if (!cert.conclusion || cert.conclusion->size() != static_cast<std::size_t>(c.n) ||
        !cert.conclusion->is_principal())
      return tag + ": conclusion is not (1,...,1) of length n";
    std::size_t cited = 0;
    for (const auto& s : cert.steps) {
      if (s.status == StepStatus::fail) return tag + ": step " + s.step + " failed";
      if (s.status == StepStatus::paper_supplied) ++cited;
    }
    if (cited != 2) return tag + ": cited steps not marked paper-supplied";
    for (const auto& s : cert.steps)
      if (s.step == "monodromy_invariant" &&
          s.witness.at("invariant").at("b_star") != std::to_string(c.b_star))
        return tag + ": certificate reports the wrong class";
    return std::nullopt;
  }, exec);
}

}  // namespace k3pol
