#include "recip/char4.hpp"

#include "recip/spectral.hpp"

namespace recip {

char4_witness characterize_4x4(const reciprocal_matrix& a, double edge_tol) {
    if (a.order() != 4)
        throw error(errc::wrong_order, "characterization applies to order 4 only");

    perron_result p = perron(a);
    auto [transform, constant_form] = to_constant_row_sums(a);
    efficiency_report report = is_efficient(a, p.vector, edge_tol);

    // Row of B whose off-diagonal entries all fail the edge test; the boundary
    // case of an entry exactly 1 keeps the edge, matching the sink definition.
    std::optional<std::size_t> dominating;
    for (std::size_t i = 0; i < 4 && !dominating; ++i) {
        bool all_above = true;
        for (std::size_t j = 0; j < 4; ++j)
            if (i != j && 1.0 >= constant_form(i, j) * (1.0 - edge_tol))
                all_above = false;
        if (all_above)
            dominating = i;
    }

    bool inefficient = !report.efficient;
    if (inefficient != dominating.has_value() || inefficient != !report.sinks.empty())
        throw error(errc::internal_inconsistency,
                    "the three order-4 inefficiency criteria disagree; tolerance fault");

    // D^{-1} = diag(perron vector): A = D^{-1} B D.
    return char4_witness{inefficient, report.sinks, transform.diagonal,
                         std::move(constant_form), dominating};
}

std::size_t subvector_guarantee_4x4(const reciprocal_matrix& a, double edge_tol) {
    if (a.order() != 4)
        throw error(errc::wrong_order, "guarantee applies to order 4 only");
    weight_vector w = perron(a).vector;
    for (std::size_t i = 0; i < 4; ++i)
        if (is_efficient(principal_submatrix(a, i), w.dropped(i), edge_tol).efficient)
            return i;
    throw error(errc::not_found, "no efficient Perron subvector at order 4");
}

} // namespace recip
