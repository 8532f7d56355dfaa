#pragma once

#include "recip/matrix.hpp"

#include <vector>

namespace recip {

/// G(A, w): edge i -> j (i != j) iff w_i / w_j >= a_ij * (1 - edge_tol).
/// Reciprocity forces at least one direction between every pair; both are
/// present exactly when the ratio ties the entry.
struct induced_digraph {
    std::size_t order = 0;
    std::vector<bool> adjacency; // row-major, no self loops

    bool edge(std::size_t i, std::size_t j) const { return adjacency[i * order + j]; }
};

struct efficiency_report {
    bool efficient = false;
    induced_digraph digraph;
    std::size_t scc_count = 0;
    /// Strongly connected components in topological order of the condensation.
    std::vector<std::vector<std::size_t>> condensation;
    std::vector<std::size_t> sinks;   // outdegree-0 vertices of the raw digraph
    std::vector<std::size_t> sources; // indegree-0 vertices
};

induced_digraph make_induced_digraph(const reciprocal_matrix& a, const weight_vector& w,
                                     double edge_tol = 0.0);

/// Efficiency verdict: w is efficient for A iff G(A, w) is strongly connected.
efficiency_report is_efficient(const reciprocal_matrix& a, const weight_vector& w,
                               double edge_tol = 0.0);

/// Independent verification path: strong connectivity by transitive-closure
/// reachability. Cubic time, order capped at 12.
bool efficiency_oracle(const reciprocal_matrix& a, const weight_vector& w,
                       double edge_tol = 0.0);

/// Entry i is the verdict of is_efficient(A(i), w(i)).
std::vector<bool> subvector_efficiency_profile(const reciprocal_matrix& a,
                                               const weight_vector& w,
                                               double edge_tol = 0.0);

} // namespace recip
