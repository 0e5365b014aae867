#pragma once

#include "k3pol/error.hpp"
#include "k3pol/lattice.hpp"
#include "k3pol/zlinalg.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace k3pol {

enum class StepStatus { pass, fail, paper_supplied };

std::string_view to_string(StepStatus status);

struct CertificateStep {
  std::string step;
  std::string claim;
  std::string tag;
  StepStatus status = StepStatus::fail;
  nlohmann::json witness;
};

struct Certificate {
  std::int64_t n = 0;
  IntVector lambda;
  std::vector<CertificateStep> steps;
  // Present only when every computed step passed.
  std::optional<PolarizationType> conclusion;
};

// Thrown when a step fails; carries the steps run so far, the last one
// marked as failed.
class CertificateFailure : public Error {
 public:
  CertificateFailure(Certificate partial, const std::string& what)
      : Error(Errc::verification_failed, what), partial_(std::move(partial)) {}

  const Certificate& partial() const noexcept { return partial_; }
  const std::string& failed_step() const { return partial_.steps.back().step; }

 private:
  Certificate partial_;
};

// Lattice-checkable chain showing that a fibration class lambda in the
// level-n lattice leads to a principal polarization type. The two analytic
// inputs (deformation invariance of the type, principality for
// Beauville-Mukai systems) are recorded as cited steps, not computed.
//
// claimed_b replaces the computed b when given, so a tampered value makes
// the invariant step fail.
Certificate principality_certificate(std::int64_t n, const LatticeVector& lambda,
                                     std::optional<std::int64_t> claimed_b = std::nullopt);

}  // namespace k3pol
