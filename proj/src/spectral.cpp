#include "recip/spectral.hpp"

#include <cmath>
#include <vector>

namespace recip {

namespace {

void multiply(const reciprocal_matrix& a, const std::vector<double>& x,
              std::vector<double>& out) {
    std::size_t n = a.order();
    for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            s += a(i, j) * x[j];
        out[i] = s;
    }
}

} // namespace

perron_result perron(const reciprocal_matrix& a, double eigen_tol, int max_iterations) {
    std::size_t n = a.order();
    std::vector<double> w(n, 1.0);
    std::vector<double> next(n);

    constexpr double step_tol = 1e-13;
    int iterations = 0;
    double lambda = static_cast<double>(n);
    while (iterations < max_iterations) {
        ++iterations;
        multiply(a, w, next);
        lambda = next[n - 1]; // w[n-1] == 1 after normalization
        double inv = 1.0 / next[n - 1];
        double step = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double v = next[i] * inv;
            step = std::max(step, std::abs(v - w[i]));
            w[i] = v;
        }
        w[n - 1] = 1.0;
        if (step <= step_tol)
            break;
        if (iterations == max_iterations)
            throw error(errc::no_convergence,
                        "power iteration did not converge in " +
                            std::to_string(max_iterations) + " iterations");
    }

    multiply(a, w, next);
    lambda = next[n - 1];
    double residual = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        residual = std::max(residual, std::abs(next[i] - lambda * w[i]));
    residual /= lambda;
    if (residual > eigen_tol)
        throw error(errc::no_convergence,
                    "eigen residual " + std::to_string(residual) + " above tolerance");

    return perron_result{lambda, weight_vector(std::move(w)), residual, iterations};
}

std::pair<similarity_transform, reciprocal_matrix>
to_constant_row_sums(const reciprocal_matrix& a) {
    perron_result p = perron(a);
    std::vector<double> diagonal(a.order());
    for (std::size_t i = 0; i < a.order(); ++i)
        diagonal[i] = 1.0 / p.vector[i];
    similarity_transform d = similarity_transform::scaling(std::move(diagonal));
    return {d, monomial_similarity(a, d)};
}

weight_vector geometric_mean_vector(const reciprocal_matrix& a) {
    std::size_t n = a.order();
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            s += std::log(a(i, j));
        v[i] = std::exp(s / static_cast<double>(n));
    }
    return weight_vector(std::move(v)).normalized_last();
}

} // namespace recip
