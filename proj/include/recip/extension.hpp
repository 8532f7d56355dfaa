#pragma once

#include "recip/matrix.hpp"

#include <cstdint>
#include <vector>

namespace recip {

/// Outcome of a one-row-one-column extension. The leading principal block of
/// `matrix` reproduces the input base, `target_perron` is the Perron vector
/// the construction guarantees, and `transform` is the conjugation that was
/// applied (identity when none).
struct extension_result {
    reciprocal_matrix matrix;
    double root_x;
    similarity_transform transform;
    weight_vector target_perron;
    std::vector<std::string> warnings;
};

/// Borders B with the column (r_max - r_i + x), x the root of the bordering
/// function, so that every row sum of the result equals r_max + x. The result
/// has Perron vector e_n.
extension_result extend_constant_row_sums(const reciprocal_matrix& base);

/// The unique A with A(n) = B and Perron vector w: conjugate B into
/// constant-row-sum coordinates of w, border, conjugate back.
extension_result extend_with_perron(const reciprocal_matrix& base, const weight_vector& w);

/// [[T, a e], [e^T / a, 1]] for a constant-row-sum T. When T is inconsistent
/// the Perron vector of the result is inefficient and n is a sink.
extension_result border_constant_column(const reciprocal_matrix& t, double a);

/// Grows B to order `target_order` with an inefficient Perron vector:
/// B -> inconsistent S of order n-1 (seeded log-uniform bordering when B is
/// smaller), S -> constant-row-sum C, C bordered by the constant column a,
/// everything conjugated back by diag(perron(S)) + [c]. Rejects a consistent
/// B at full order, where no such extension exists.
extension_result extend_inefficient(const reciprocal_matrix& base, std::size_t target_order,
                                    double a = 1.0, double c = 1.0, std::uint64_t seed = 0);

/// Extension with an efficient Perron vector: normalize B by one of its
/// columns (0-based `column`), which makes it well-behaved with e_k efficient,
/// border to constant row sums, conjugate back.
extension_result extend_efficient(const reciprocal_matrix& base, std::size_t column = 0);

} // namespace recip
