#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "recip/generators.hpp"
#include "recip/matrix.hpp"
#include "recip/wellbehaved.hpp"

#include <cmath>
#include <numeric>

using namespace recip;

TEST_CASE("classification of the four 3x3 references") {
    CHECK(classify(fixtures::mild_3x3()).kind == wb_kind::type_1);
    CHECK(classify(fixtures::near_flat_3x3()).kind == wb_kind::type_2);
    CHECK(classify(fixtures::cyclic_3x3()).kind == wb_kind::not_well_behaved);
    CHECK(classify(fixtures::skew_3x3()).kind == wb_kind::not_well_behaved);
}

TEST_CASE("class names") {
    CHECK(std::string(wb_kind_name(wb_kind::type_1)) == "type I");
    CHECK(std::string(wb_kind_name(wb_kind::type_2)) == "type II");
    CHECK(std::string(wb_kind_name(wb_kind::not_well_behaved)) == "not well-behaved");
}

TEST_CASE("the all-ones matrix is type II with boundary zero") {
    well_behaved_class c = classify(reciprocal_matrix::ones(4));
    CHECK(c.kind == wb_kind::type_2);
    CHECK(c.gap == doctest::Approx(0.0));
    REQUIRE(c.boundary_value.has_value());
    CHECK(*c.boundary_value == doctest::Approx(4.0 - 4.0)); // k - r_min = 0
}

TEST_CASE("gap at least one forces type I, below one decides by the boundary value") {
    well_behaved_class c1 = classify(fixtures::mild_3x3());
    CHECK(c1.gap >= 1.0);
    CHECK_FALSE(c1.boundary_value.has_value());

    well_behaved_class c2 = classify(fixtures::near_flat_3x3());
    CHECK(c2.gap < 1.0);
    REQUIRE(c2.boundary_value.has_value());
    CHECK(*c2.boundary_value >= 0.0);

    well_behaved_class c3 = classify(fixtures::cyclic_3x3());
    CHECK(c3.gap < 1.0);
    REQUIRE(c3.boundary_value.has_value());
    CHECK(*c3.boundary_value < 0.0);
}

TEST_CASE("bordering function decreases and crosses zero at the root") {
    for (const reciprocal_matrix& b :
         {fixtures::mild_3x3(), fixtures::skew_3x3(), random_reciprocal(6, 9.0, 5)}) {
        double x = solve_f(b);
        CHECK(x > 0.0);
        CHECK(x <= 1.0 + 1e-12);
        CHECK(std::abs(f_eval(b, x)) < 1e-8);
        CHECK(f_eval(b, x / 2) > 0.0);
        CHECK(f_eval(b, x * 2) < 0.0);
    }
}

TEST_CASE("root is exactly one only for the all-ones matrix") {
    CHECK(solve_f(reciprocal_matrix::ones(5)) == 1.0);
    CHECK(solve_f(random_reciprocal(5, 3.0, 8)) < 1.0);
}

TEST_CASE("closed form matches the solver on constant row sums") {
    for (double b : {1.5, 3.0, 7.0}) {
        reciprocal_matrix t = bozoki(5, b);
        double a1 = row_sums(t).max_sum();
        CHECK(closed_form_root(a1, 5) == doctest::Approx(solve_f(t)).epsilon(1e-10));
    }
}

TEST_CASE("the recorded extension roots satisfy the bordering equation") {
    CHECK(solve_f(fixtures::skew_3x3()) ==
          doctest::Approx(fixtures::skew_csum_root).epsilon(1e-4));
    CHECK(solve_f(fixtures::skew_normalized_3x3()) ==
          doctest::Approx(fixtures::skew_efficient_root).epsilon(1e-3));
}

TEST_CASE("inconsistent constant-row-sum matrices are never well-behaved") {
    for (double b : {2.0, 5.0})
        for (std::size_t k : {4, 5, 6})
            CHECK(classify(bozoki(k, b)).kind == wb_kind::not_well_behaved);
    for (const reciprocal_matrix& a :
         {fixtures::skew_csum_4x4(), fixtures::balanced_inefficient_6x6()})
        CHECK(classify(a).kind == wb_kind::not_well_behaved);
}

TEST_CASE("consistent matrices are always well-behaved") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        std::size_t n = 2 + seed % 6;
        CHECK(classify(random_consistent(n, 9.0, seed)).kind != wb_kind::not_well_behaved);
    }
}

TEST_CASE("classification is permutation invariant") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        reciprocal_matrix a = random_reciprocal(5, 9.0, seed);
        similarity_transform s = similarity_transform::identity(5);
        std::iota(s.permutation.rbegin(), s.permutation.rend(), std::size_t{0});
        CHECK(classify(a).kind == classify(monomial_similarity(a, s)).kind);
    }
}

TEST_CASE("5x5 principal submatrices of the 6x6 fixture are well-behaved") {
    reciprocal_matrix a = fixtures::balanced_inefficient_6x6();
    for (std::size_t i = 0; i < 6; ++i) {
        well_behaved_class c = classify(principal_submatrix(a, i));
        if (i == 1)
            CHECK(c.kind == wb_kind::type_2);
        else
            CHECK(c.kind == wb_kind::type_1);
    }
}
