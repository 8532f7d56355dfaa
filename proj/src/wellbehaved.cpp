#include "recip/wellbehaved.hpp"

#include <cmath>

namespace recip {

const char* wb_kind_name(wb_kind kind) {
    switch (kind) {
    case wb_kind::type_1: return "type I";
    case wb_kind::type_2: return "type II";
    case wb_kind::not_well_behaved: return "not well-behaved";
    }
    return "unknown";
}

double f_eval(const row_sum_profile& profile, double x) {
    if (!(x > 0.0))
        throw error(errc::non_positive_entry, "f is defined for x > 0 only");
    double r_max = profile.max_sum();
    double value = 1.0 - r_max - x;
    // The argmax term contributes 1/x; no sorting needed.
    for (double r : profile.sums)
        value += 1.0 / (r_max - r + x);
    return value;
}

double f_eval(const reciprocal_matrix& b, double x) {
    return f_eval(row_sums(b), x);
}

double solve_f(const row_sum_profile& profile, double root_tol) {
    double f1 = f_eval(profile, 1.0);
    if (f1 == 0.0)
        return 1.0; // J_k, exactly

    // f is strictly decreasing with range R, so a sign bracket always exists:
    // halve below 1 until f > 0 (f -> +inf at 0+), double above 1 until f < 0.
    double lo = 1.0, hi = 1.0;
    if (f1 > 0.0) {
        while (f_eval(profile, hi) >= 0.0)
            hi *= 2.0;
        lo = hi / 2.0;
    } else {
        while (f_eval(profile, lo) <= 0.0)
            lo *= 0.5;
        hi = lo * 2.0;
    }
    while (hi - lo > 1e-14 * hi) {
        double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi)
            break;
        if (f_eval(profile, mid) > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    double root = 0.5 * (lo + hi);
    if (std::abs(f_eval(profile, root)) > root_tol * std::max(1.0, profile.max_sum()))
        throw error(errc::internal_inconsistency, "root residual above tolerance");
    return root;
}

double solve_f(const reciprocal_matrix& b, double root_tol) {
    return solve_f(row_sums(b), root_tol);
}

double closed_form_root(double a1, int k) {
    if (a1 < 0.0)
        throw error(errc::non_positive_entry, "a1 must be nonnegative");
    if (k < 1)
        throw error(errc::order_too_small, "k must be at least 1");
    double d = 1.0 - a1;
    return 0.5 * (d + std::sqrt(d * d + 4.0 * static_cast<double>(k)));
}

well_behaved_class classify(const row_sum_profile& profile) {
    double r_max = profile.max_sum();
    double r_min = profile.min_sum();
    double gap = r_max - r_min;
    if (gap >= 1.0)
        return {wb_kind::type_1, gap, std::nullopt};
    // f(1 + r_min - r_max), written so the argmin term contributes exactly 1.
    double boundary = -r_min;
    for (double r : profile.sums)
        boundary += 1.0 / (1.0 + r_min - r);
    wb_kind kind = boundary >= 0.0 ? wb_kind::type_2 : wb_kind::not_well_behaved;
    return {kind, gap, boundary};
}

well_behaved_class classify(const reciprocal_matrix& b) {
    return classify(row_sums(b));
}

} // namespace recip
