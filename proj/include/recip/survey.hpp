#pragma once

#include "recip/matrix.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace recip {

struct survey_config {
    std::vector<int> dims;
    int samples_per_dim = 1;
    double scale = 9.0;
    std::uint64_t seed = 0;
    int workers = 1;
};

struct survey_row {
    int dim = 0;
    int samples = 0;
    int inefficient_count = 0;
    int sink_count = 0;   // inefficient cases whose digraph has a sink
    int source_count = 0; // inefficient cases whose digraph has a source
    double mean_lambda_gap = 0.0;
};

/// Monte Carlo frequency of Perron-vector inefficiency per dimension.
/// Deterministic for a fixed (seed, dims, samples) regardless of worker count:
/// each sample derives its own seed from (seed, dim, index).
std::vector<survey_row> run_survey(const survey_config& config);

std::string survey_csv(const std::vector<survey_row>& rows);

struct sweep_report {
    std::string name;
    int samples = 0;
    bool pass = false;
    /// Serialized matrix of the first failing instance, when any.
    std::optional<std::string> counterexample;
    std::string detail;
};

/// Seeded property harness over the registered theorem-level properties:
/// t2, t6, thind, c4, c27, t5, lconswell, ll1.
sweep_report run_theorem_sweep(const std::string& name, int samples, std::uint64_t seed);

std::vector<std::string> theorem_sweep_names();

} // namespace recip
