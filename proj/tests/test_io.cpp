#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "recip/generators.hpp"
#include "recip/io.hpp"
#include "recip/matrix.hpp"

using namespace recip;

TEST_CASE("csv round trip is exact") {
    reciprocal_matrix a = random_reciprocal(5, 9.0, 77);
    reciprocal_matrix b = parse_matrix(write_matrix_csv(a));
    REQUIRE(b.order() == 5);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j)
            CHECK(a(i, j) == b(i, j));
}

TEST_CASE("json round trip is exact") {
    reciprocal_matrix a = random_reciprocal(4, 9.0, 13);
    reciprocal_matrix b = parse_matrix(write_matrix_json(a));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(a(i, j) == b(i, j));
}

TEST_CASE("format is sniffed from the first character") {
    CHECK(parse_matrix("  \n {\"order\": 2, \"entries\": [[1, 2], [0.5, 1]]}").order() ==
          2);
    CHECK(parse_matrix("1, 2\n0.5, 1\n").order() == 2);
}

TEST_CASE("json tolerance field loosens validation") {
    std::string text =
        "{\"order\": 2, \"entries\": [[1, 1.7724], [0.5642, 1]], \"tolerance\": 1e-3}";
    CHECK(parse_matrix(text).order() == 2);
    std::string strict = "{\"order\": 2, \"entries\": [[1, 1.7724], [0.5642, 1]]}";
    CHECK_THROWS_AS(parse_matrix(strict), error);
}

TEST_CASE("parse diagnostics name the problem") {
    CHECK_THROWS_WITH_AS(parse_matrix(""), doctest::Contains("empty"), error);
    CHECK_THROWS_WITH_AS(parse_matrix("1, x\n0.5, 1\n"), doctest::Contains("x"), error);
    CHECK_THROWS_WITH_AS(parse_matrix("1, 2, 3\n0.5, 1\n"), doctest::Contains("row 1"),
                         error);
    CHECK_THROWS_AS(parse_matrix("{\"order\": 2}"), error);
    CHECK_THROWS_AS(parse_matrix("{bad json"), error);
    try {
        parse_matrix("1, 2\n0.4, 1\n");
        FAIL("reciprocity violation accepted");
    } catch (const error& e) {
        CHECK(e.code() == errc::reciprocity_violation);
    }
}

TEST_CASE("blank lines and trailing whitespace are tolerated in csv") {
    reciprocal_matrix a = parse_matrix("\n1, 2 \n\n0.5, 1\r\n\n");
    CHECK(a.order() == 2);
    CHECK(a(0, 1) == 2.0);
}

TEST_CASE("17 significant digits survive the decimal round trip") {
    double value = 0.12345678901234567;
    CHECK(std::stod(format_double(value)) == value);
    reciprocal_matrix a =
        reciprocal_matrix::validate({{1.0, value}, {1.0 / value, 1.0}});
    reciprocal_matrix b = parse_matrix(write_matrix_csv(a));
    CHECK(b(0, 1) == value);
}
