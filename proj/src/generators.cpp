#include "recip/generators.hpp"

#include "recip/wellbehaved.hpp"

#include <cmath>
#include <random>

namespace recip {

namespace detail {

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

} // namespace detail

namespace {

double log_uniform(std::mt19937_64& rng, double scale) {
    if (scale == 1.0)
        return 1.0;
    std::uniform_real_distribution<double> dist(-std::log(scale), std::log(scale));
    return std::exp(dist(rng));
}

double max_row_sum_spread(const reciprocal_matrix& t) {
    row_sum_profile profile = row_sums(t);
    return (profile.max_sum() - profile.min_sum()) / profile.max_sum();
}

} // namespace

reciprocal_matrix bozoki(std::size_t k, double b) {
    if (k < 3)
        throw error(errc::order_too_small, "order must be at least 3");
    if (!(b > 0.0))
        throw error(errc::non_positive_entry, "b must be positive");
    std::vector<double> entries(k * k, 1.0);
    for (std::size_t i = 0; i < k; ++i) {
        entries[i * k + (i + 1) % k] = b;
        entries[i * k + (i + k - 1) % k] = 1.0 / b;
    }
    return reciprocal_matrix::validate(std::move(entries), k);
}

reciprocal_matrix toeplitz_alt(std::size_t k, double b) {
    if (k < 3)
        throw error(errc::order_too_small, "order must be at least 3");
    if (k % 2 == 0)
        throw error(errc::order_not_odd, "order must be odd");
    if (!(b > 0.0))
        throw error(errc::non_positive_entry, "b must be positive");
    std::vector<double> entries(k * k, 1.0);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            if (i == j)
                continue;
            std::size_t lag = j > i ? j - i : i - j;
            double above = lag % 2 == 1 ? b : 1.0 / b;
            entries[i * k + j] = j > i ? above : 1.0 / above;
        }
    }
    return reciprocal_matrix::validate(std::move(entries), k);
}

reciprocal_matrix block_double(const reciprocal_matrix& t0, const reciprocal_matrix& t1) {
    std::size_t k = t0.order();
    if (t1.order() != k)
        throw error(errc::shape_mismatch, "blocks must have equal order");
    if (max_row_sum_spread(t0) > 1e-9 || max_row_sum_spread(t1) > 1e-9)
        throw error(errc::not_constant_row_sums, "blocks must have constant row sums");
    std::size_t n = 2 * k;
    std::vector<double> entries(n * n);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            entries[i * n + j] = t0(i, j);
            entries[i * n + (k + j)] = t1(i, j);
            entries[(k + i) * n + j] = t1(i, j);
            entries[(k + i) * n + (k + j)] = t0(i, j);
        }
    }
    // validate rejects the composite if T1 is not reciprocal against itself
    return reciprocal_matrix::validate(std::move(entries), n);
}

reciprocal_matrix bordered_growth(const reciprocal_matrix& t0) {
    std::size_t k = t0.order();
    if (max_row_sum_spread(t0) > 1e-9)
        throw error(errc::not_constant_row_sums, "base must have constant row sums");
    if (is_consistent(t0))
        throw error(errc::consistent_input, "base must be inconsistent");
    double x = closed_form_root(row_sums(t0).max_sum(), static_cast<int>(k));
    std::size_t n = k + 1;
    std::vector<double> entries(n * n, 1.0);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j)
            entries[i * n + j] = t0(i, j);
        entries[i * n + k] = x;
        entries[k * n + i] = 1.0 / x;
    }
    return reciprocal_matrix::validate(std::move(entries), n);
}

reciprocal_matrix random_reciprocal(std::size_t n, double scale, std::uint64_t seed) {
    if (n < 2)
        throw error(errc::order_too_small, "order must be at least 2");
    if (!(scale > 0.0))
        throw error(errc::non_positive_entry, "scale must be positive");
    std::mt19937_64 rng(detail::mix64(seed));
    std::vector<double> entries(n * n, 1.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            double v = log_uniform(rng, scale);
            entries[i * n + j] = v;
            entries[j * n + i] = 1.0 / v;
        }
    }
    return reciprocal_matrix::validate(std::move(entries), n);
}

reciprocal_matrix random_consistent(std::size_t n, double scale, std::uint64_t seed) {
    if (n < 2)
        throw error(errc::order_too_small, "order must be at least 2");
    if (!(scale > 0.0))
        throw error(errc::non_positive_entry, "scale must be positive");
    std::mt19937_64 rng(detail::mix64(seed ^ 0xc0ffee));
    std::vector<double> weights(n);
    for (double& w : weights)
        w = log_uniform(rng, scale);
    return consistent_from_weights(weight_vector(std::move(weights)));
}

} // namespace recip
