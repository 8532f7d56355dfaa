#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "recip/efficiency.hpp"
#include "recip/extension.hpp"
#include "recip/generators.hpp"
#include "recip/spectral.hpp"
#include "recip/wellbehaved.hpp"

#include <algorithm>
#include <cmath>

using namespace recip;

namespace {

void check_block_preserved(const reciprocal_matrix& a, const reciprocal_matrix& base) {
    REQUIRE(a.order() >= base.order());
    for (std::size_t i = 0; i < base.order(); ++i)
        for (std::size_t j = 0; j < base.order(); ++j)
            CHECK(a(i, j) == base(i, j));
}

void check_matches(const reciprocal_matrix& a, const reciprocal_matrix& b, double tol) {
    REQUIRE(a.order() == b.order());
    for (std::size_t i = 0; i < a.order(); ++i)
        for (std::size_t j = 0; j < a.order(); ++j)
            CHECK(a(i, j) == doctest::Approx(b(i, j)).epsilon(tol));
}

bool has_sink(const efficiency_report& report, std::size_t vertex) {
    return std::find(report.sinks.begin(), report.sinks.end(), vertex) !=
           report.sinks.end();
}

} // namespace

TEST_CASE("constant-row-sum extension reproduces the recorded 4x4") {
    extension_result ext = extend_constant_row_sums(fixtures::skew_3x3());
    CHECK(ext.root_x == doctest::Approx(fixtures::skew_csum_root).epsilon(1e-4));
    check_matches(ext.matrix, fixtures::skew_csum_4x4(), 1e-3);
    check_block_preserved(ext.matrix, fixtures::skew_3x3());

    perron_result p = perron(ext.matrix);
    for (std::size_t i = 0; i < 4; ++i)
        CHECK(p.vector[i] == doctest::Approx(1.0).epsilon(1e-10));
    efficiency_report report = is_efficient(ext.matrix, p.vector);
    CHECK_FALSE(report.efficient);
    CHECK(has_sink(report, 3));
}

TEST_CASE("constant-row-sum extension always yields the flat Perron vector") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        std::size_t k = 3 + seed % 4;
        reciprocal_matrix base = random_reciprocal(k, 9.0, seed);
        extension_result ext = extend_constant_row_sums(base);
        check_block_preserved(ext.matrix, base);
        row_sum_profile sums = row_sums(ext.matrix);
        CHECK((sums.max_sum() - sums.min_sum()) / sums.max_sum() < 1e-9);
        // Efficiency of the flat vector matches the base classification.
        bool efficient =
            is_efficient(ext.matrix, perron(ext.matrix).vector, 1e-12).efficient;
        bool base_nwb = classify(base).kind == wb_kind::not_well_behaved;
        if (base_nwb)
            CHECK_FALSE(efficient);
    }
}

TEST_CASE("prescribed-Perron extension is exact on the block and hits the target") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        std::size_t k = 3 + seed % 4;
        reciprocal_matrix base = random_reciprocal(k, 9.0, seed);
        reciprocal_matrix w_source = random_reciprocal(k + 1, 4.0, seed ^ 0xabc);
        weight_vector w = perron(w_source).vector;
        extension_result ext = extend_with_perron(base, w);
        check_block_preserved(ext.matrix, base);
        perron_result p = perron(ext.matrix);
        for (std::size_t i = 0; i <= k; ++i)
            CHECK(p.vector[i] == doctest::Approx(w.normalized_last()[i]).epsilon(1e-8));
    }
}

TEST_CASE("prescribed-Perron extension of a consistent base by its ratios is consistent") {
    weight_vector w{3.0, 1.0, 0.25, 2.0};
    reciprocal_matrix full = consistent_from_weights(w);
    reciprocal_matrix base = principal_submatrix(full, 3);
    extension_result ext = extend_with_perron(base, w);
    CHECK(is_consistent(ext.matrix));
    check_matches(ext.matrix, full, 1e-12);
}

TEST_CASE("prescribed-Perron extension rejects mismatched vector length") {
    CHECK_THROWS_AS(extend_with_perron(fixtures::mild_3x3(), weight_vector{1.0, 2.0}),
                    error);
}

TEST_CASE("constant-column border of an inconsistent constant-row-sum base") {
    for (double a : {0.5, 1.0, 3.0}) {
        reciprocal_matrix t = bozoki(5, 2.0);
        extension_result ext = border_constant_column(t, a);
        check_block_preserved(ext.matrix, t);
        CHECK(ext.matrix(0, 5) == a);
        perron_result p = perron(ext.matrix);
        for (std::size_t i = 0; i <= 5; ++i)
            CHECK(p.vector[i] ==
                  doctest::Approx(ext.target_perron.normalized_last()[i]).epsilon(1e-8));
        efficiency_report report = is_efficient(ext.matrix, p.vector, 1e-12);
        CHECK_FALSE(report.efficient);
        CHECK(has_sink(report, 5));
    }
    CHECK_THROWS_AS(border_constant_column(fixtures::mild_3x3(), 1.0), error);
    CHECK_THROWS_AS(border_constant_column(bozoki(4, 2.0), -1.0), error);
}

TEST_CASE("inefficient extension of the 4x4 seed reproduces the recorded 5x5") {
    extension_result ext = extend_inefficient(fixtures::grow_seed_4x4(), 5);
    check_matches(ext.matrix, fixtures::grown_inefficient_5x5(), 1e-3);
    check_block_preserved(ext.matrix, fixtures::grow_seed_4x4());
    perron_result p = perron(ext.matrix);
    efficiency_report report = is_efficient(ext.matrix, p.vector, 1e-12);
    CHECK_FALSE(report.efficient);
    CHECK(has_sink(report, 4));
}

TEST_CASE("inefficient extension works from any inconsistent base and order") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        std::size_t k = 3 + seed % 3;
        std::size_t n = k + 1 + seed % 3;
        reciprocal_matrix base = random_reciprocal(k, 9.0, seed);
        extension_result ext = extend_inefficient(base, n, 1.0, 1.0, seed);
        CHECK(ext.matrix.order() == n);
        check_block_preserved(ext.matrix, base);
        perron_result p = perron(ext.matrix);
        for (std::size_t i = 0; i < n; ++i)
            CHECK(p.vector[i] ==
                  doctest::Approx(ext.target_perron[i]).epsilon(1e-7));
        efficiency_report report = is_efficient(ext.matrix, p.vector, 1e-12);
        CHECK_FALSE(report.efficient);
        CHECK(has_sink(report, n - 1));
    }
}

TEST_CASE("a consistent base of full order admits no inefficient extension") {
    reciprocal_matrix base = random_consistent(4, 9.0, 17);
    try {
        extend_inefficient(base, 5);
        FAIL("expected the consistent-input rejection");
    } catch (const error& e) {
        CHECK(e.code() == errc::consistent_input);
    }
    // With room to grow first, the construction goes through.
    extension_result ext = extend_inefficient(base, 6, 1.0, 1.0, 3);
    CHECK_FALSE(is_efficient(ext.matrix, perron(ext.matrix).vector, 1e-12).efficient);
}

TEST_CASE("inefficient extension parameters a and c shape the border") {
    reciprocal_matrix base = fixtures::grow_seed_4x4();
    double a = 2.0, c = 0.5;
    extension_result ext = extend_inefficient(base, 5, a, c);
    weight_vector v = perron(base).vector;
    for (std::size_t i = 0; i < 4; ++i)
        CHECK(ext.matrix(i, 4) == doctest::Approx(a * c * v[i]).epsilon(1e-12));
}

TEST_CASE("efficient extension reproduces the recorded 4x4") {
    extension_result ext = extend_efficient(fixtures::skew_3x3(), 1);
    CHECK(ext.root_x == doctest::Approx(fixtures::skew_efficient_root).epsilon(1e-3));
    check_matches(ext.matrix, fixtures::skew_efficient_4x4(), 1e-2);
    check_block_preserved(ext.matrix, fixtures::skew_3x3());
    CHECK(ext.matrix(0, 3) == doctest::Approx(0.001728).epsilon(1e-2));
    CHECK(ext.matrix(3, 0) == doctest::Approx(578.7).epsilon(1e-2));
    perron_result p = perron(ext.matrix);
    CHECK(is_efficient(ext.matrix, p.vector, 1e-12).efficient);
}

TEST_CASE("efficient extension succeeds for random bases and any column") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        std::size_t k = 3 + seed % 4;
        reciprocal_matrix base = random_reciprocal(k, 9.0, seed);
        extension_result ext = extend_efficient(base, seed % k);
        check_block_preserved(ext.matrix, base);
        perron_result p = perron(ext.matrix);
        for (std::size_t i = 0; i <= k; ++i)
            CHECK(p.vector[i] ==
                  doctest::Approx(ext.target_perron.normalized_last()[i]).epsilon(1e-8));
        CHECK(is_efficient(ext.matrix, p.vector, 1e-12).efficient);
    }
    CHECK_THROWS_AS(extend_efficient(fixtures::mild_3x3(), 3), error);
}

TEST_CASE("extensions survive small reciprocal perturbations of the base") {
    reciprocal_matrix base = fixtures::skew_3x3();
    std::vector<double> bumped(base.entries().begin(), base.entries().end());
    bumped[0 * 3 + 1] *= 1.0 + 1e-6;
    bumped[1 * 3 + 0] = 1.0 / bumped[0 * 3 + 1];
    reciprocal_matrix perturbed = reciprocal_matrix::validate(std::move(bumped), 3);
    extension_result ext = extend_constant_row_sums(perturbed);
    CHECK(ext.root_x == doctest::Approx(fixtures::skew_csum_root).epsilon(1e-4));
    CHECK_FALSE(
        is_efficient(ext.matrix, perron(ext.matrix).vector, 1e-12).efficient);
}
