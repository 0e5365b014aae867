#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace k3pol {

enum class Errc {
  invalid_argument,
  lattice_mismatch,
  radical_vector,
  dependent_input,
  odd_dimension,
  not_alternating,
  singular,
  self_check_failed,
  not_primitive,
  not_isotropic,
  invalid_period,
  wrong_signature,
  nonpositive_norm,
  zero_pairing,
  verification_failed,
};

std::string_view to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace k3pol
