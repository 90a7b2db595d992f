#pragma once

#include <random>

#include "qcurve/hilbert.hpp"

namespace qcurve::sampling {

using Rng = std::mt19937_64;

/// (A + A^dagger)/2 with i.i.d. standard normal real and imaginary parts.
HermitianOperator random_hermitian(std::size_t dim, Rng& rng);

/// Gaussian vector, normalized (Haar-distributed on the unit sphere).
StateVector random_state(std::size_t dim, Rng& rng);

}  // namespace qcurve::sampling
