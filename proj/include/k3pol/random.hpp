#pragma once

#include "k3pol/integer.hpp"
#include "k3pol/lattice.hpp"
#include "k3pol/matrix.hpp"

#include <cstdint>
#include <random>

namespace k3pol::random {

using Engine = std::mt19937_64;

std::int64_t uniform(Engine& rng, std::int64_t lo, std::int64_t hi);

struct Unimodular {
  IntegerMatrix matrix;
  IntegerMatrix inverse;
};

// Product of at most max_moves elementary matrices (transvections with
// small multipliers, swaps, sign flips), with its exact inverse.
Unimodular unimodular(Engine& rng, std::size_t n, std::size_t max_moves);

IntegerMatrix matrix(Engine& rng, std::size_t rows, std::size_t cols, std::int64_t bound);

// Divisor chain of length n with entries <= max_entry.
IntVector divisor_chain(Engine& rng, std::size_t n, std::int64_t max_entry);

// U + <-2 a_1> + ... + <-2 a_{k-1}>, signature (1, k).
Lattice hyperbolic_lattice(Engine& rng, std::size_t k);

// Nonzero isotropic vector of a lattice built by hyperbolic_lattice.
LatticeVector isotropic_vector(Engine& rng, const Lattice& hyperbolic);

// Rational vector with positive square in a lattice built by
// hyperbolic_lattice.
RationalVector positive_vector(Engine& rng, const Lattice& hyperbolic);

}  // namespace k3pol::random
