#pragma once

#include "recip/matrix.hpp"

#include <optional>

namespace recip {

enum class wb_kind { type_1, type_2, not_well_behaved };

const char* wb_kind_name(wb_kind kind);

/// Row-sum classification governing whether the constant-row-sum extension of
/// a matrix keeps an efficient Perron vector.
struct well_behaved_class {
    wb_kind kind;
    /// r_max - r_min over the row sums.
    double gap;
    /// f(1 + r_min - r_max); present only when gap < 1.
    std::optional<double> boundary_value;
};

/// The bordering function of a base matrix with row sums r_i:
///   f(x) = sum_i 1 / (r_max - r_i + x) + 1 - r_max - x.
/// Strictly decreasing on (0, inf) with range R.
double f_eval(const row_sum_profile& profile, double x);
double f_eval(const reciprocal_matrix& b, double x);

/// The unique positive root of f; always <= 1, and 1 only for J_k.
double solve_f(const row_sum_profile& profile, double root_tol = 1e-12);
double solve_f(const reciprocal_matrix& b, double root_tol = 1e-12);

/// Root of f when all row sums are equal to a1:
///   x = (1 - a1 + sqrt((1 - a1)^2 + 4k)) / 2.
double closed_form_root(double a1, int k);

well_behaved_class classify(const row_sum_profile& profile);
well_behaved_class classify(const reciprocal_matrix& b);

} // namespace recip
