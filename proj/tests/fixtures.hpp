// Shared test matrices. Entries printed with few decimals are validated at
// reciprocal_matrix::fixture_tol; exact rational entries use the default
// tolerance.
#pragma once

#include "recip/matrix.hpp"

namespace fixtures {

using recip::reciprocal_matrix;

inline constexpr double ftol = reciprocal_matrix::fixture_tol;

// 3x3, small gap between row sums (type I under the row-sum classification).
inline reciprocal_matrix mild_3x3() {
    return reciprocal_matrix::validate(
        {{1, 2, 3.0 / 5}, {1.0 / 2, 1, 3}, {5.0 / 3, 1.0 / 3, 1}});
}

// 3x3 near the all-ones matrix (type II).
inline reciprocal_matrix near_flat_3x3() {
    return reciprocal_matrix::validate(
        {{1, 6.0 / 5, 1}, {5.0 / 6, 1, 1}, {1, 1, 1}});
}

// 3x3 cyclic, maximally inconsistent for its scale (not well-behaved).
inline reciprocal_matrix cyclic_3x3() {
    return reciprocal_matrix::validate(
        {{1, 5, 1.0 / 5}, {1.0 / 5, 1, 5}, {5, 1.0 / 5, 1}});
}

// 3x3 with one dominant entry (not well-behaved); base of the two 4x4
// extension fixtures below.
inline reciprocal_matrix skew_3x3() {
    return reciprocal_matrix::validate(
        {{1, 1.0 / 5, 51.0 / 10}, {5, 1, 2.0 / 9}, {10.0 / 51, 9.0 / 2, 1}});
}

// Constant-row-sum extension of skew_3x3; root x = 0.39137, Perron vector
// e_4 inefficient, vertex 4 a sink.
inline constexpr double skew_csum_root = 0.39137;
inline reciprocal_matrix skew_csum_4x4() {
    return reciprocal_matrix::validate({{1, 1.0 / 5, 51.0 / 10, 0.39137},
                                        {5, 1, 2.0 / 9, 0.46915},
                                        {10.0 / 51, 9.0 / 2, 1, 0.99529},
                                        {2.5551, 2.1315, 1.0047, 1}},
                                       ftol);
}

// Efficient-Perron extension of skew_3x3 via normalization by its second
// column; root x = 0.00864.
inline constexpr double skew_efficient_root = 0.00864;
inline reciprocal_matrix skew_efficient_4x4() {
    return reciprocal_matrix::validate({{1, 1.0 / 5, 51.0 / 10, 0.001728},
                                        {5, 1, 2.0 / 9, 113.76},
                                        {10.0 / 51, 9.0 / 2, 1, 516.38},
                                        {578.7, 0.00879, 0.001937, 1}},
                                       ftol);
}

// skew_3x3 normalized by its second column: well-behaved of type I with e_3
// efficient.
inline reciprocal_matrix skew_normalized_3x3() {
    return reciprocal_matrix::validate(
        {{1, 1, 114.75}, {1, 1, 1}, {0.008715, 1, 1}}, ftol);
}

// 4x4 extension of mild_3x3 used to seed the 5x5 inefficient growth.
inline reciprocal_matrix grow_seed_4x4() {
    return reciprocal_matrix::validate({{1, 2, 3.0 / 5, 2},
                                        {1.0 / 2, 1, 3, 1.0 / 2},
                                        {5.0 / 3, 1.0 / 3, 1, 3.0 / 2},
                                        {1.0 / 2, 2, 2.0 / 3, 1}});
}

inline std::vector<double> grow_seed_perron() { return {1.3348, 1.1829, 1.0946, 1.0}; }

// grow_seed_4x4 conjugated into constant-row-sum coordinates.
inline reciprocal_matrix grow_seed_constant_4x4() {
    return reciprocal_matrix::validate({{1, 1.7724, 0.4920, 1.4984},
                                        {0.5642, 1, 2.7761, 0.4227},
                                        {2.0324, 0.3602, 1, 1.3704},
                                        {0.6674, 2.3658, 0.7297, 1}},
                                       ftol);
}

// 5x5 grown from grow_seed_4x4 with a = c = 1: inefficient Perron vector,
// vertex 5 a sink, leading 3x3 block equal to mild_3x3.
inline reciprocal_matrix grown_inefficient_5x5() {
    return reciprocal_matrix::validate({{1, 2, 3.0 / 5, 2, 1.3348},
                                        {1.0 / 2, 1, 3, 1.0 / 2, 1.1829},
                                        {5.0 / 3, 1.0 / 3, 1, 3.0 / 2, 1.0946},
                                        {1.0 / 2, 2, 2.0 / 3, 1, 1},
                                        {0.7492, 0.8454, 0.9136, 1, 1}},
                                       ftol);
}

// Classic 4x4 with inefficient Perron vector; sink vertex 3.
inline reciprocal_matrix textbook_4x4() {
    return reciprocal_matrix::validate({{1, 2, 6, 2},
                                        {1.0 / 2, 1, 4, 3},
                                        {1.0 / 6, 1.0 / 4, 1, 1.0 / 2},
                                        {1.0 / 2, 1.0 / 3, 2, 1}});
}

inline std::vector<double> textbook_perron() { return {2.9038, 2.057, 0.48282, 1.0}; }

// Constant-row-sum form of textbook_4x4; every off-diagonal entry of row 3
// exceeds 1.
inline reciprocal_matrix textbook_constant_4x4() {
    return reciprocal_matrix::validate({{1, 1.4168, 0.99764, 0.68876},
                                        {0.70584, 1, 0.93889, 1.4585},
                                        {1.0024, 1.0651, 1, 1.0356},
                                        {1.4519, 0.68565, 0.96563, 1}},
                                       ftol);
}

// 6x6 with Perron vector e_6 inefficient, no sink, no source; every 5x5
// principal submatrix is well-behaved with e_5 inefficient.
inline reciprocal_matrix balanced_inefficient_6x6() {
    return reciprocal_matrix::validate(
        {{1, 1.2783, 0.2364, 1.0245, 2.0221, 4.5197},
         {0.7823, 1, 2.4655, 1.6028, 2.1091, 2.1214},
         {4.2304, 0.4056, 1, 1.3002, 1.7109, 1.4340},
         {0.9761, 0.6239, 0.7691, 1, 6.5795, 0.1324},
         {0.4945, 0.4741, 0.5845, 0.1520, 1, 7.3759},
         {0.2213, 0.4714, 0.6973, 7.5555, 0.1356, 1}},
        ftol);
}

// 5x5 with Perron vector e_5 inefficient and every 4-subvector inefficient
// for its submatrix; sink vertex 4.
inline reciprocal_matrix no_efficient_subvector_5x5() {
    return reciprocal_matrix::validate(
        {{1, 2.032, 0.53386, 0.86855, 0.88385},
         {0.4923, 1, 2.1018, 0.88907, 0.83513},
         {1.8731, 0.47578, 1, 0.97616, 0.99334},
         {1.1513, 1.1248, 1.0244, 1, 1.0176},
         {1.1314, 1.1974, 1.0067, 0.9827, 1}},
        ftol);
}

} // namespace fixtures
