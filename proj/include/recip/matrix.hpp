#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace recip {

enum class errc {
    non_positive_entry,
    reciprocity_violation,
    non_unit_diagonal,
    not_square,
    dimension_mismatch,
    index_out_of_range,
    order_too_small,
    order_too_large,
    order_not_odd,
    not_constant_row_sums,
    consistent_input,
    shape_mismatch,
    wrong_order,
    no_convergence,
    not_found,
    unknown_property,
    parse_error,
    internal_inconsistency,
};

const char* errc_name(errc code);

class error : public std::runtime_error {
public:
    error(errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

/// Dense positive square matrix with a_ji = 1/a_ij and unit diagonal.
/// Immutable after construction; all entries are ratio judgments.
class reciprocal_matrix {
public:
    static constexpr double default_reciprocity_tol = 1e-9;
    static constexpr double default_consistency_tol = 1e-8;
    /// Looser tolerance for matrices transcribed from rounded decimal print-outs.
    static constexpr double fixture_tol = 1e-3;

    /// Checks positivity, unit diagonal and reciprocity (relative tolerance).
    /// Rejects rather than repairs: a diagonal != 1 or a bad reciprocal pair
    /// is reported with the offending position.
    static reciprocal_matrix validate(std::vector<double> entries, std::size_t order,
                                      double tol = default_reciprocity_tol);
    static reciprocal_matrix validate(std::initializer_list<std::initializer_list<double>> rows,
                                      double tol = default_reciprocity_tol);

    /// J_n, the all-ones matrix.
    static reciprocal_matrix ones(std::size_t order);

    std::size_t order() const noexcept { return order_; }
    double operator()(std::size_t i, std::size_t j) const {
        return entries_[i * order_ + j];
    }
    std::span<const double> entries() const noexcept { return entries_; }

    double entry_total() const;

    /// The reciprocity tolerance this matrix was validated with. Derived
    /// matrices (submatrices, conjugates) inherit it so that a loosely
    /// transcribed fixture is not rejected by a downstream revalidation.
    double tolerance() const noexcept { return tol_; }

private:
    reciprocal_matrix(std::vector<double> entries, std::size_t order, double tol)
        : entries_(std::move(entries)), order_(order), tol_(tol) {}

    std::vector<double> entries_;
    std::size_t order_;
    double tol_;
};

/// Positive priority-weight vector; scale-free.
struct weight_vector {
    std::vector<double> entries;

    explicit weight_vector(std::vector<double> values);
    weight_vector(std::initializer_list<double> values)
        : weight_vector(std::vector<double>(values)) {}

    std::size_t size() const noexcept { return entries.size(); }
    double operator[](std::size_t i) const { return entries[i]; }

    /// Copy with entry `index` removed.
    weight_vector dropped(std::size_t index) const;
    /// Rescaled so the last entry equals 1.
    weight_vector normalized_last() const;
};

struct row_sum_profile {
    std::vector<double> sums;
    std::size_t max_index = 0;
    std::size_t min_index = 0;
    /// Indices ordered by nonincreasing row sum (ties by index).
    std::vector<std::size_t> sorted_desc;

    double max_sum() const { return sums[max_index]; }
    double min_sum() const { return sums[min_index]; }
};

/// Monomial similarity S = P * D: a positive diagonal scaling followed by a
/// relabeling. permutation[i] is the source index mapped to position i.
struct similarity_transform {
    std::vector<double> diagonal;
    std::vector<std::size_t> permutation;

    static similarity_transform identity(std::size_t order);
    static similarity_transform scaling(std::vector<double> diagonal);

    std::size_t order() const noexcept { return diagonal.size(); }
    bool is_identity() const;
    similarity_transform inverse() const;

    /// S w
    weight_vector apply(const weight_vector& w) const;
    /// S A S^{-1}
    reciprocal_matrix apply(const reciprocal_matrix& a) const;
};

bool is_consistent(const reciprocal_matrix& a,
                   double tol = reciprocal_matrix::default_consistency_tol);

/// Rank-one matrix [w_i / w_j]; always consistent.
reciprocal_matrix consistent_from_weights(const weight_vector& w);

row_sum_profile row_sums(const reciprocal_matrix& a);

reciprocal_matrix monomial_similarity(const reciprocal_matrix& a,
                                      const similarity_transform& s);

/// Deletes the rows and columns listed in `deleted` (0-based, any order).
reciprocal_matrix principal_submatrix(const reciprocal_matrix& a,
                                      std::span<const std::size_t> deleted);
reciprocal_matrix principal_submatrix(const reciprocal_matrix& a, std::size_t deleted);

} // namespace recip
