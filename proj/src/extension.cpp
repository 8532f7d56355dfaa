#include "recip/extension.hpp"

#include "recip/generators.hpp"
#include "recip/spectral.hpp"
#include "recip/wellbehaved.hpp"

#include <cmath>
#include <random>

namespace recip {

namespace {

/// [[block, col], [1/col^T, 1]] with exact reciprocal pairs in the border.
reciprocal_matrix border(const reciprocal_matrix& block, const std::vector<double>& column) {
    std::size_t k = block.order();
    std::size_t n = k + 1;
    std::vector<double> entries(n * n, 1.0);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j)
            entries[i * n + j] = block(i, j);
        entries[i * n + k] = column[i];
        entries[k * n + i] = 1.0 / column[i];
    }
    return reciprocal_matrix::validate(std::move(entries), n,
                                       std::max(1e-6, block.tolerance()));
}

double relative_row_sum_spread(const row_sum_profile& profile) {
    return (profile.max_sum() - profile.min_sum()) / profile.max_sum();
}

} // namespace

extension_result extend_constant_row_sums(const reciprocal_matrix& base) {
    std::size_t k = base.order();
    row_sum_profile profile = row_sums(base);
    double x = solve_f(profile);
    double r_max = profile.max_sum();
    std::vector<double> column(k);
    for (std::size_t i = 0; i < k; ++i)
        column[i] = r_max - profile.sums[i] + x;
    reciprocal_matrix extended = border(base, column);
    return extension_result{std::move(extended), x, similarity_transform::identity(k + 1),
                            weight_vector(std::vector<double>(k + 1, 1.0)), {}};
}

extension_result extend_with_perron(const reciprocal_matrix& base, const weight_vector& w) {
    std::size_t k = base.order();
    std::size_t n = k + 1;
    if (w.size() != n)
        throw error(errc::dimension_mismatch, "target vector must have one entry more than the base");

    // Move to coordinates where the target is e_n, border there, move back.
    std::vector<double> scaled(k * k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            scaled[i * k + j] = base(i, j) * w[j] / w[i];
    for (std::size_t i = 0; i < k; ++i)
        scaled[i * k + i] = 1.0;
    extension_result inner = extend_constant_row_sums(reciprocal_matrix::validate(
        std::move(scaled), k, std::max(1e-6, base.tolerance())));

    std::vector<double> column(k);
    for (std::size_t i = 0; i < k; ++i)
        column[i] = inner.matrix(i, k) * w[i] / w[n - 1];
    reciprocal_matrix extended = border(base, column);

    return extension_result{std::move(extended), inner.root_x,
                            similarity_transform::scaling(w.entries),
                            w.normalized_last(), {}};
}

extension_result border_constant_column(const reciprocal_matrix& t, double a) {
    if (!(a > 0.0))
        throw error(errc::non_positive_entry, "border entry must be positive");
    std::size_t k = t.order();
    row_sum_profile profile = row_sums(t);
    if (relative_row_sum_spread(profile) > 1e-9)
        throw error(errc::not_constant_row_sums, "base must have constant row sums");
    double x = closed_form_root(profile.max_sum(), static_cast<int>(k));
    double x0 = x / a;

    reciprocal_matrix extended = border(t, std::vector<double>(k, a));
    std::vector<double> target(k + 1, 1.0 / x0);
    target[k] = 1.0;
    return extension_result{std::move(extended), x, similarity_transform::identity(k + 1),
                            weight_vector(std::move(target)), {}};
}

extension_result extend_inefficient(const reciprocal_matrix& base, std::size_t target_order,
                                    double a, double c, std::uint64_t seed) {
    std::size_t k = base.order();
    std::size_t n = target_order;
    if (n <= k)
        throw error(errc::dimension_mismatch, "target order must exceed the base order");
    if (!(a > 0.0) || !(c > 0.0))
        throw error(errc::non_positive_entry, "parameters a and c must be positive");

    std::vector<std::string> warnings;

    reciprocal_matrix s = base;
    if (k == n - 1) {
        if (is_consistent(s))
            throw error(errc::consistent_input,
                        "a consistent base of order n-1 has no extension of order n with "
                        "inefficient Perron vector");
        if (is_consistent(s, 10.0 * reciprocal_matrix::default_consistency_tol))
            warnings.push_back("base is nearly consistent; the construction degrades "
                               "numerically near consistency");
    } else {
        // Grow to order n-1 by random bordering; redraw if the result lands on
        // a consistent matrix (practically unreachable, but guarded).
        std::mt19937_64 rng(detail::mix64(seed));
        std::uniform_real_distribution<double> log_entry(-std::log(9.0), std::log(9.0));
        for (int attempt = 0;; ++attempt) {
            reciprocal_matrix grown = base;
            while (grown.order() < n - 1) {
                std::vector<double> column(grown.order());
                for (double& v : column)
                    v = std::exp(log_entry(rng));
                grown = border(grown, column);
            }
            if (!is_consistent(grown)) {
                s = std::move(grown);
                break;
            }
            if (attempt >= 100)
                throw error(errc::consistent_input,
                            "random growth kept producing consistent matrices");
        }
    }

    std::size_t m = n - 1;
    weight_vector v = perron(s).vector;

    // C = R S R^{-1}, R = diag(v)^{-1}: constant row sums.
    std::vector<double> crs(m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            crs[i * m + j] = s(i, j) * v[j] / v[i];
    for (std::size_t i = 0; i < m; ++i)
        crs[i * m + i] = 1.0;
    reciprocal_matrix constant_form =
        reciprocal_matrix::validate(std::move(crs), m, std::max(1e-6, s.tolerance()));
    double x = closed_form_root(row_sums(constant_form).max_sum(), static_cast<int>(m));

    // A = D^{-1} [[C, a e], [e^T/a, 1]] D with D = diag(v)^{-1} + [c]:
    // the block collapses back to S and the border column becomes a c v_i.
    std::vector<double> column(m);
    for (std::size_t i = 0; i < m; ++i)
        column[i] = a * c * v[i];
    reciprocal_matrix extended = border(s, column);

    std::vector<double> diagonal(v.entries);
    diagonal.push_back(1.0 / c);
    std::vector<double> target(v.entries);
    target.push_back(x / (a * c));
    return extension_result{std::move(extended), x,
                            similarity_transform::scaling(std::move(diagonal)),
                            weight_vector(std::move(target)).normalized_last(),
                            std::move(warnings)};
}

extension_result extend_efficient(const reciprocal_matrix& base, std::size_t column) {
    std::size_t k = base.order();
    if (column >= k)
        throw error(errc::index_out_of_range, "column index out of range");

    // Normalizing by a column plants a unit row and column, which makes the
    // scaled matrix well-behaved with e_k efficient for it.
    std::vector<double> d_inv(k);
    for (std::size_t i = 0; i < k; ++i)
        d_inv[i] = base(i, column);

    std::vector<double> scaled(k * k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            scaled[i * k + j] = base(i, j) * d_inv[j] / d_inv[i];
    for (std::size_t i = 0; i < k; ++i)
        scaled[i * k + i] = 1.0;
    extension_result inner = extend_constant_row_sums(reciprocal_matrix::validate(
        std::move(scaled), k, std::max(1e-6, base.tolerance())));

    std::vector<double> border_column(k);
    for (std::size_t i = 0; i < k; ++i)
        border_column[i] = d_inv[i] * inner.matrix(i, k);
    reciprocal_matrix extended = border(base, border_column);

    std::vector<double> diagonal(d_inv);
    diagonal.push_back(1.0);
    std::vector<double> target(d_inv);
    target.push_back(1.0);
    return extension_result{std::move(extended), inner.root_x,
                            similarity_transform::scaling(std::move(diagonal)),
                            weight_vector(std::move(target)), {}};
}

} // namespace recip
