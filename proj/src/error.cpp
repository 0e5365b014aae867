#include "k3pol/error.hpp"

namespace k3pol {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::invalid_argument: return "invalid_argument";
    case Errc::lattice_mismatch: return "lattice_mismatch";
    case Errc::radical_vector: return "radical_vector";
    case Errc::dependent_input: return "dependent_input";
    case Errc::odd_dimension: return "odd_dimension";
    case Errc::not_alternating: return "not_alternating";
    case Errc::singular: return "singular";
    case Errc::self_check_failed: return "self_check_failed";
    case Errc::not_primitive: return "not_primitive";
    case Errc::not_isotropic: return "not_isotropic";
    case Errc::invalid_period: return "invalid_period";
    case Errc::wrong_signature: return "wrong_signature";
    case Errc::nonpositive_norm: return "nonpositive_norm";
    case Errc::zero_pairing: return "zero_pairing";
    case Errc::verification_failed: return "verification_failed";
  }
  return "unknown";
}

}  // namespace k3pol
