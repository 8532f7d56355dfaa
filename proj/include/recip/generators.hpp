#pragma once

#include "recip/matrix.hpp"

#include <cstdint>

namespace recip {

/// Circulant with first row (1, b, 1, ..., 1, 1/b): positions (i, i+1 mod k)
/// hold b, (i, i-1 mod k) hold 1/b, everything else 1. Constant row sums
/// k - 2 + b + 1/b; inconsistent exactly when b != 1.
reciprocal_matrix bozoki(std::size_t k, double b);

/// Reciprocal Toeplitz matrix, k odd, first row (1, b, 1/b, b, ..., b, 1/b).
/// Constant row sums; inconsistent exactly when b != 1.
reciprocal_matrix toeplitz_alt(std::size_t k, double b);

/// [[T0, T1], [T1, T0]]: both blocks must have constant row sums and T1 must
/// itself be reciprocal so the composite is. Inconsistent when either block
/// differs from J_k.
reciprocal_matrix block_double(const reciprocal_matrix& t0, const reciprocal_matrix& t1);

/// Borders an inconsistent constant-row-sum matrix with the constant column
/// whose closed-form root keeps the row sums constant; grows the family by one
/// order per application.
reciprocal_matrix bordered_growth(const reciprocal_matrix& t0);

/// Upper-triangle entries drawn log-uniform on [1/scale, scale], reciprocals
/// filled in. Deterministic per seed; scale 1 gives J_n.
reciprocal_matrix random_reciprocal(std::size_t n, double scale, std::uint64_t seed);

/// consistent_from_weights of log-uniform weights.
reciprocal_matrix random_consistent(std::size_t n, double scale, std::uint64_t seed);

namespace detail {

/// SplitMix64 stream; used wherever reproducible sub-seeds are derived.
std::uint64_t mix64(std::uint64_t x);

} // namespace detail

} // namespace recip
