#pragma once

#include "recip/matrix.hpp"

#include <utility>

namespace recip {

struct perron_result {
    double eigenvalue = 0.0;
    /// Perron vector, last entry normalized to 1.
    weight_vector vector;
    /// max_i |(A w)_i - lambda w_i| / lambda
    double residual = 0.0;
    int iterations = 0;
};

constexpr double default_eigen_tol = 1e-10;
constexpr int default_max_iterations = 100000;

/// Dominant eigenpair by power iteration from the all-ones start vector.
/// Deterministic; converges geometrically for positive matrices.
perron_result perron(const reciprocal_matrix& a, double eigen_tol = default_eigen_tol,
                     int max_iterations = default_max_iterations);

/// Diagonal similarity D A D^{-1} with D = diag(perron vector)^{-1}; the
/// result has Perron vector e_n, i.e. constant row sums equal to lambda.
std::pair<similarity_transform, reciprocal_matrix>
to_constant_row_sums(const reciprocal_matrix& a);

/// Row-wise geometric mean (Pi_j a_ij)^(1/n), last entry normalized to 1.
weight_vector geometric_mean_vector(const reciprocal_matrix& a);

} // namespace recip
