#pragma once

#include <cstddef>
#include <random>

#include "crmostow/symspace.hpp"

namespace crmostow {

using Rng = std::mt19937_64;

/// Entries with independent N(0, scale^2) real and imaginary parts.
CMat random_complex(std::size_t n, Rng& rng, double scale = 1.0);
CMat random_traceless(std::size_t n, Rng& rng, double scale = 1.0);
CMat random_hermitian_traceless(std::size_t n, Rng& rng, double scale = 1.0);
CMat random_antihermitian_traceless(std::size_t n, Rng& rng, double scale = 1.0);
/// exp of a random traceless matrix: an element of SL_n(C).
CMat random_special_linear(std::size_t n, Rng& rng, double scale = 0.5);
/// exp of a random Hermitian traceless matrix: positive definite, det 1.
CMat random_spd_det_one(std::size_t n, Rng& rng, double scale = 0.5);
/// H Hermitian traceless, Z traceless, T Hermitian traceless and diagonal in the eigenbasis of H.
JacobiFieldSpec random_jacobi_spec(std::size_t n, Rng& rng, double scale = 0.5);

}  // namespace crmostow
