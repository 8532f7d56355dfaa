#include "recip/efficiency.hpp"

#include <algorithm>

namespace recip {

namespace {

// Single-pass lowlink SCC (iterative, vertices visited in order 0..n-1 so the
// component list is reproducible). Components come out in reverse topological
// order of the condensation.
std::vector<std::vector<std::size_t>> strongly_connected_components(const induced_digraph& g) {
    std::size_t n = g.order;
    constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
    std::vector<std::size_t> index(n, unvisited), lowlink(n), stack;
    std::vector<bool> on_stack(n, false);
    std::vector<std::vector<std::size_t>> components;
    std::size_t counter = 0;

    struct frame {
        std::size_t vertex;
        std::size_t next; // next candidate successor
    };
    std::vector<frame> call_stack;

    for (std::size_t root = 0; root < n; ++root) {
        if (index[root] != unvisited)
            continue;
        call_stack.push_back({root, 0});
        index[root] = lowlink[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call_stack.empty()) {
            frame& top = call_stack.back();
            std::size_t v = top.vertex;
            bool descended = false;
            while (top.next < n) {
                std::size_t u = top.next++;
                if (u == v || !g.edge(v, u))
                    continue;
                if (index[u] == unvisited) {
                    index[u] = lowlink[u] = counter++;
                    stack.push_back(u);
                    on_stack[u] = true;
                    call_stack.push_back({u, 0});
                    descended = true;
                    break;
                }
                if (on_stack[u])
                    lowlink[v] = std::min(lowlink[v], index[u]);
            }
            if (descended)
                continue;
            if (lowlink[v] == index[v]) {
                std::vector<std::size_t> component;
                std::size_t u;
                do {
                    u = stack.back();
                    stack.pop_back();
                    on_stack[u] = false;
                    component.push_back(u);
                } while (u != v);
                std::sort(component.begin(), component.end());
                components.push_back(std::move(component));
            }
            call_stack.pop_back();
            if (!call_stack.empty()) {
                std::size_t parent = call_stack.back().vertex;
                lowlink[parent] = std::min(lowlink[parent], lowlink[v]);
            }
        }
    }
    return components;
}

} // namespace

induced_digraph make_induced_digraph(const reciprocal_matrix& a, const weight_vector& w,
                                     double edge_tol) {
    std::size_t n = a.order();
    if (w.size() != n)
        throw error(errc::dimension_mismatch, "matrix order and vector size differ");
    induced_digraph g;
    g.order = n;
    g.adjacency.assign(n * n, false);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j)
                g.adjacency[i * n + j] = w[i] / w[j] >= a(i, j) * (1.0 - edge_tol);
    return g;
}

efficiency_report is_efficient(const reciprocal_matrix& a, const weight_vector& w,
                               double edge_tol) {
    efficiency_report report;
    report.digraph = make_induced_digraph(a, w, edge_tol);
    std::size_t n = report.digraph.order;

    report.condensation = strongly_connected_components(report.digraph);
    std::reverse(report.condensation.begin(), report.condensation.end());
    report.scc_count = report.condensation.size();
    report.efficient = report.scc_count == 1;

    for (std::size_t i = 0; i < n; ++i) {
        bool has_out = false, has_in = false;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i)
                continue;
            has_out = has_out || report.digraph.edge(i, j);
            has_in = has_in || report.digraph.edge(j, i);
        }
        if (!has_out)
            report.sinks.push_back(i);
        if (!has_in)
            report.sources.push_back(i);
    }
    return report;
}

bool efficiency_oracle(const reciprocal_matrix& a, const weight_vector& w,
                       double edge_tol) {
    std::size_t n = a.order();
    if (n > 12)
        throw error(errc::order_too_large, "oracle is limited to order 12");
    if (w.size() != n)
        throw error(errc::dimension_mismatch, "matrix order and vector size differ");

    // Adjacency recomputed from scratch; reachability by transitive closure.
    std::vector<bool> reach(n * n, false);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            reach[i * n + j] = i == j || w[i] / w[j] >= a(i, j) * (1.0 - edge_tol);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (reach[i * n + k] && reach[k * n + j])
                    reach[i * n + j] = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!reach[i * n + j])
                return false;
    return true;
}

std::vector<bool> subvector_efficiency_profile(const reciprocal_matrix& a,
                                               const weight_vector& w,
                                               double edge_tol) {
    std::size_t n = a.order();
    if (n < 3)
        throw error(errc::order_too_small, "profile needs order at least 3");
    if (w.size() != n)
        throw error(errc::dimension_mismatch, "matrix order and vector size differ");
    std::vector<bool> profile(n);
    for (std::size_t i = 0; i < n; ++i)
        profile[i] = is_efficient(principal_submatrix(a, i), w.dropped(i), edge_tol).efficient;
    return profile;
}

} // namespace recip
