#include "recip/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace recip {

const char* errc_name(errc code) {
    switch (code) {
    case errc::non_positive_entry: return "non_positive_entry";
    case errc::reciprocity_violation: return "reciprocity_violation";
    case errc::non_unit_diagonal: return "non_unit_diagonal";
    case errc::not_square: return "not_square";
    case errc::dimension_mismatch: return "dimension_mismatch";
    case errc::index_out_of_range: return "index_out_of_range";
    case errc::order_too_small: return "order_too_small";
    case errc::order_too_large: return "order_too_large";
    case errc::order_not_odd: return "order_not_odd";
    case errc::not_constant_row_sums: return "not_constant_row_sums";
    case errc::consistent_input: return "consistent_input";
    case errc::shape_mismatch: return "shape_mismatch";
    case errc::wrong_order: return "wrong_order";
    case errc::no_convergence: return "no_convergence";
    case errc::not_found: return "not_found";
    case errc::unknown_property: return "unknown_property";
    case errc::parse_error: return "parse_error";
    case errc::internal_inconsistency: return "internal_inconsistency";
    }
    return "unknown";
}

reciprocal_matrix reciprocal_matrix::validate(std::vector<double> entries, std::size_t order,
                                              double tol) {
    if (order < 2)
        throw error(errc::order_too_small, "matrix order must be at least 2, got " +
                                               std::to_string(order));
    if (entries.size() != order * order)
        throw error(errc::not_square, "expected " + std::to_string(order * order) +
                                          " entries, got " + std::to_string(entries.size()));
    for (std::size_t i = 0; i < order; ++i) {
        for (std::size_t j = 0; j < order; ++j) {
            double v = entries[i * order + j];
            if (!(v > 0.0) || !std::isfinite(v))
                throw error(errc::non_positive_entry,
                            "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                ") is not a positive finite number");
        }
    }
    for (std::size_t i = 0; i < order; ++i) {
        if (std::abs(entries[i * order + i] - 1.0) > tol)
            throw error(errc::non_unit_diagonal,
                        "diagonal entry (" + std::to_string(i + 1) + "," +
                            std::to_string(i + 1) + ") must be 1");
    }
    double worst = 0.0;
    std::size_t worst_i = 0, worst_j = 0;
    for (std::size_t i = 0; i < order; ++i) {
        for (std::size_t j = i + 1; j < order; ++j) {
            double dev = std::abs(entries[i * order + j] * entries[j * order + i] - 1.0);
            if (dev > worst) {
                worst = dev;
                worst_i = i;
                worst_j = j;
            }
        }
    }
    if (worst > tol)
        throw error(errc::reciprocity_violation,
                    "reciprocity violated at (" + std::to_string(worst_i + 1) + "," +
                        std::to_string(worst_j + 1) + "): |a_ij * a_ji - 1| = " +
                        std::to_string(worst));
    return reciprocal_matrix(std::move(entries), order, tol);
}

reciprocal_matrix reciprocal_matrix::validate(
    std::initializer_list<std::initializer_list<double>> rows, double tol) {
    std::size_t order = rows.size();
    std::vector<double> entries;
    entries.reserve(order * order);
    for (const auto& row : rows) {
        if (row.size() != order)
            throw error(errc::not_square, "row length does not match row count");
        entries.insert(entries.end(), row.begin(), row.end());
    }
    return validate(std::move(entries), order, tol);
}

reciprocal_matrix reciprocal_matrix::ones(std::size_t order) {
    return validate(std::vector<double>(order * order, 1.0), order);
}

double reciprocal_matrix::entry_total() const {
    return std::accumulate(entries_.begin(), entries_.end(), 0.0);
}

weight_vector::weight_vector(std::vector<double> values) : entries(std::move(values)) {
    if (entries.empty())
        throw error(errc::dimension_mismatch, "weight vector must be nonempty");
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (!(entries[i] > 0.0) || !std::isfinite(entries[i]))
            throw error(errc::non_positive_entry,
                        "weight " + std::to_string(i + 1) + " is not a positive finite number");
    }
}

weight_vector weight_vector::dropped(std::size_t index) const {
    if (index >= entries.size())
        throw error(errc::index_out_of_range, "weight index out of range");
    std::vector<double> out;
    out.reserve(entries.size() - 1);
    for (std::size_t i = 0; i < entries.size(); ++i)
        if (i != index)
            out.push_back(entries[i]);
    return weight_vector(std::move(out));
}

weight_vector weight_vector::normalized_last() const {
    std::vector<double> out(entries);
    double last = out.back();
    for (double& v : out)
        v /= last;
    out.back() = 1.0;
    return weight_vector(std::move(out));
}

similarity_transform similarity_transform::identity(std::size_t order) {
    similarity_transform s;
    s.diagonal.assign(order, 1.0);
    s.permutation.resize(order);
    std::iota(s.permutation.begin(), s.permutation.end(), std::size_t{0});
    return s;
}

similarity_transform similarity_transform::scaling(std::vector<double> diagonal) {
    similarity_transform s = identity(diagonal.size());
    for (double d : diagonal)
        if (!(d > 0.0) || !std::isfinite(d))
            throw error(errc::non_positive_entry, "similarity diagonal must be positive");
    s.diagonal = std::move(diagonal);
    return s;
}

bool similarity_transform::is_identity() const {
    for (std::size_t i = 0; i < order(); ++i)
        if (diagonal[i] != 1.0 || permutation[i] != i)
            return false;
    return true;
}

similarity_transform similarity_transform::inverse() const {
    similarity_transform inv;
    std::size_t n = order();
    inv.diagonal.resize(n);
    inv.permutation.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        inv.permutation[permutation[i]] = i;
    for (std::size_t j = 0; j < n; ++j)
        inv.diagonal[j] = 1.0 / diagonal[permutation[j]];
    return inv;
}

weight_vector similarity_transform::apply(const weight_vector& w) const {
    if (w.size() != order())
        throw error(errc::dimension_mismatch, "transform and vector size differ");
    std::vector<double> out(order());
    for (std::size_t i = 0; i < order(); ++i)
        out[i] = diagonal[permutation[i]] * w[permutation[i]];
    return weight_vector(std::move(out));
}

reciprocal_matrix similarity_transform::apply(const reciprocal_matrix& a) const {
    return monomial_similarity(a, *this);
}

bool is_consistent(const reciprocal_matrix& a, double tol) {
    std::size_t n = a.order();
    // Scale-free log-space test, symmetric in the triple.
    std::vector<double> logs(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            logs[i * n + j] = std::log(a(i, j));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                if (std::abs(logs[i * n + j] + logs[j * n + k] - logs[i * n + k]) > tol)
                    return false;
    return true;
}

reciprocal_matrix consistent_from_weights(const weight_vector& w) {
    std::size_t n = w.size();
    if (n < 2)
        throw error(errc::order_too_small, "need at least 2 weights");
    std::vector<double> entries(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            entries[i * n + j] = w[i] / w[j];
    for (std::size_t i = 0; i < n; ++i)
        entries[i * n + i] = 1.0;
    return reciprocal_matrix::validate(std::move(entries), n);
}

row_sum_profile row_sums(const reciprocal_matrix& a) {
    std::size_t n = a.order();
    row_sum_profile profile;
    profile.sums.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            s += a(i, j);
        profile.sums[i] = s;
        if (s > profile.sums[profile.max_index])
            profile.max_index = i;
        if (s < profile.sums[profile.min_index])
            profile.min_index = i;
    }
    profile.sorted_desc.resize(n);
    std::iota(profile.sorted_desc.begin(), profile.sorted_desc.end(), std::size_t{0});
    std::stable_sort(profile.sorted_desc.begin(), profile.sorted_desc.end(),
                     [&](std::size_t i, std::size_t j) { return profile.sums[i] > profile.sums[j]; });
    return profile;
}

reciprocal_matrix monomial_similarity(const reciprocal_matrix& a,
                                      const similarity_transform& s) {
    std::size_t n = a.order();
    if (s.order() != n)
        throw error(errc::dimension_mismatch, "transform and matrix order differ");
    std::vector<double> entries(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t pi = s.permutation[i];
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t pj = s.permutation[j];
            entries[i * n + j] = s.diagonal[pi] / s.diagonal[pj] * a(pi, pj);
        }
        entries[i * n + i] = 1.0;
    }
    // Conjugation by a badly scaled diagonal can amplify reciprocity rounding.
    return reciprocal_matrix::validate(std::move(entries), n, std::max(1e-6, a.tolerance()));
}

reciprocal_matrix principal_submatrix(const reciprocal_matrix& a,
                                      std::span<const std::size_t> deleted) {
    std::size_t n = a.order();
    std::vector<bool> drop(n, false);
    for (std::size_t k : deleted) {
        if (k >= n)
            throw error(errc::index_out_of_range,
                        "deletion index " + std::to_string(k + 1) + " out of range");
        drop[k] = true;
    }
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < n; ++i)
        if (!drop[i])
            keep.push_back(i);
    if (keep.size() < 2)
        throw error(errc::order_too_small, "submatrix order would be below 2");
    std::size_t m = keep.size();
    std::vector<double> entries(m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            entries[i * m + j] = a(keep[i], keep[j]);
    return reciprocal_matrix::validate(std::move(entries), m, std::max(1e-6, a.tolerance()));
}

reciprocal_matrix principal_submatrix(const reciprocal_matrix& a, std::size_t deleted) {
    std::size_t k = deleted;
    return principal_submatrix(a, std::span<const std::size_t>(&k, 1));
}

} // namespace recip
