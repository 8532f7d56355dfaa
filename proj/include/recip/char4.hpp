#pragma once

#include "recip/efficiency.hpp"
#include "recip/matrix.hpp"

#include <optional>
#include <vector>

namespace recip {

/// Witness for the 4-by-4 characterization: the Perron vector is inefficient
/// exactly when the constant-row-sum form B has a row whose off-diagonal
/// entries all exceed 1, equivalently when G(A, w) has a sink vertex.
struct char4_witness {
    bool inefficient = false;
    std::vector<std::size_t> sink_vertices;
    std::vector<double> diagonal; // D with A = D^{-1} B D
    reciprocal_matrix constant_row_sum_form;
    std::optional<std::size_t> dominating_row;
};

/// Decides inefficiency of the Perron vector of a 4-by-4 matrix by all three
/// equivalent criteria and cross-checks them against each other.
char4_witness characterize_4x4(const reciprocal_matrix& a, double edge_tol = 0.0);

/// Some index i with w(i) efficient for A(i), w the Perron vector; such an
/// index always exists at order 4.
std::size_t subvector_guarantee_4x4(const reciprocal_matrix& a, double edge_tol = 0.0);

} // namespace recip
