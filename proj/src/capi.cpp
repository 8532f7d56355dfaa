#include "recip.h"

#include "recip/char4.hpp"
#include "recip/efficiency.hpp"
#include "recip/extension.hpp"
#include "recip/generators.hpp"
#include "recip/io.hpp"
#include "recip/matrix.hpp"
#include "recip/spectral.hpp"
#include "recip/survey.hpp"
#include "recip/wellbehaved.hpp"

#include <json.hpp>

#include <cstring>
#include <new>
#include <string>

using nlohmann::json;

struct recip_matrix {
    recip::reciprocal_matrix value;
};

namespace {

thread_local std::string g_last_error = "no error";

recip_status status_of(recip::errc code) {
    using recip::errc;
    switch (code) {
    case errc::non_positive_entry: return RECIP_ERR_NON_POSITIVE_ENTRY;
    case errc::reciprocity_violation: return RECIP_ERR_RECIPROCITY;
    case errc::non_unit_diagonal: return RECIP_ERR_NON_UNIT_DIAGONAL;
    case errc::not_square: return RECIP_ERR_NOT_SQUARE;
    case errc::dimension_mismatch: return RECIP_ERR_DIMENSION_MISMATCH;
    case errc::index_out_of_range: return RECIP_ERR_INDEX_OUT_OF_RANGE;
    case errc::order_too_small: return RECIP_ERR_ORDER_TOO_SMALL;
    case errc::order_too_large: return RECIP_ERR_ORDER_TOO_LARGE;
    case errc::order_not_odd: return RECIP_ERR_ORDER_NOT_ODD;
    case errc::not_constant_row_sums: return RECIP_ERR_NOT_CONSTANT_ROW_SUMS;
    case errc::consistent_input: return RECIP_ERR_CONSISTENT_INPUT;
    case errc::shape_mismatch: return RECIP_ERR_SHAPE_MISMATCH;
    case errc::wrong_order: return RECIP_ERR_WRONG_ORDER;
    case errc::no_convergence: return RECIP_ERR_NO_CONVERGENCE;
    case errc::not_found: return RECIP_ERR_NOT_FOUND;
    case errc::unknown_property: return RECIP_ERR_UNKNOWN_PROPERTY;
    case errc::parse_error: return RECIP_ERR_PARSE;
    case errc::internal_inconsistency: return RECIP_ERR_INTERNAL;
    }
    return RECIP_ERR_INTERNAL;
}

template <typename Fn> recip_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const recip::error& e) {
        g_last_error = e.what();
        return status_of(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return RECIP_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& text) {
    char* out = new (std::nothrow) char[text.size() + 1];
    if (out)
        std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

recip_status emit(const std::string& text, char** out) {
    *out = dup_string(text);
    if (!*out) {
        g_last_error = "out of memory";
        return RECIP_ERR_INTERNAL;
    }
    return RECIP_OK;
}

json one_based(const std::vector<std::size_t>& indices) {
    json out = json::array();
    for (std::size_t i : indices)
        out.push_back(i + 1);
    return out;
}

json matrix_json(const recip::reciprocal_matrix& a) {
    json rows = json::array();
    for (std::size_t i = 0; i < a.order(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < a.order(); ++j)
            row.push_back(a(i, j));
        rows.push_back(std::move(row));
    }
    return json{{"order", a.order()}, {"entries", std::move(rows)}};
}

json well_behaved_json(const recip::well_behaved_class& wb) {
    json out{{"kind", recip::wb_kind_name(wb.kind)}, {"gap", wb.gap}};
    if (wb.boundary_value)
        out["boundary_value"] = *wb.boundary_value;
    else
        out["boundary_value"] = nullptr;
    return out;
}

json efficiency_json(const recip::efficiency_report& report) {
    json sccs = json::array();
    for (const auto& component : report.condensation)
        sccs.push_back(one_based(component));
    json adjacency = json::array();
    std::size_t n = report.digraph.order;
    for (std::size_t i = 0; i < n; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < n; ++j)
            row.push_back(i != j && report.digraph.edge(i, j));
        adjacency.push_back(std::move(row));
    }
    return json{{"efficient", report.efficient},
                {"sccs", std::move(sccs)},
                {"sinks", one_based(report.sinks)},
                {"sources", one_based(report.sources)},
                {"adjacency", std::move(adjacency)}};
}

recip::weight_vector resolve_vector(const recip::reciprocal_matrix& a,
                                    const std::string& spec) {
    if (spec.empty() || spec == "perron")
        return recip::perron(a).vector;
    if (spec == "geomean")
        return recip::geometric_mean_vector(a);
    json doc = json::parse(spec, nullptr, false);
    if (doc.is_discarded() || !doc.is_array())
        throw recip::error(recip::errc::parse_error,
                           "vector must be 'perron', 'geomean' or a JSON array");
    return recip::weight_vector(doc.get<std::vector<double>>());
}

json extension_json(const recip::extension_result& result) {
    return json{{"matrix", matrix_json(result.matrix)},
                {"root_x", result.root_x},
                {"transform",
                 {{"diagonal", result.transform.diagonal},
                  {"permutation", one_based(result.transform.permutation)}}},
                {"target_perron", result.target_perron.entries},
                {"warnings", result.warnings}};
}

} // namespace

extern "C" {

const char* recip_last_error(void) { return g_last_error.c_str(); }

void recip_free_string(char* text) { delete[] text; }

void recip_matrix_free(recip_matrix* matrix) { delete matrix; }

recip_status recip_matrix_parse(const char* text, double tolerance, recip_matrix** out) {
    return guarded([&]() -> recip_status {
        if (!text || !out) {
            g_last_error = "null argument";
            return RECIP_ERR_BAD_ARGUMENT;
        }
        double tol = tolerance > 0.0 ? tolerance
                                     : recip::reciprocal_matrix::default_reciprocity_tol;
        *out = new recip_matrix{recip::parse_matrix(text, tol)};
        return RECIP_OK;
    });
}

recip_status recip_matrix_from_entries(const double* entries, int order, double tolerance,
                                       recip_matrix** out) {
    return guarded([&]() -> recip_status {
        if (!entries || !out || order < 0) {
            g_last_error = "null argument";
            return RECIP_ERR_BAD_ARGUMENT;
        }
        std::size_t n = static_cast<std::size_t>(order);
        double tol = tolerance > 0.0 ? tolerance
                                     : recip::reciprocal_matrix::default_reciprocity_tol;
        *out = new recip_matrix{recip::reciprocal_matrix::validate(
            std::vector<double>(entries, entries + n * n), n, tol)};
        return RECIP_OK;
    });
}

int recip_matrix_order(const recip_matrix* matrix) {
    return matrix ? static_cast<int>(matrix->value.order()) : 0;
}

double recip_matrix_entry(const recip_matrix* matrix, int row, int column) {
    if (!matrix)
        return 0.0;
    std::size_t n = matrix->value.order();
    if (row < 0 || column < 0 || static_cast<std::size_t>(row) >= n ||
        static_cast<std::size_t>(column) >= n)
        return 0.0;
    return matrix->value(static_cast<std::size_t>(row), static_cast<std::size_t>(column));
}

recip_status recip_matrix_write(const recip_matrix* matrix, int as_json, char** out) {
    return guarded([&]() -> recip_status {
        if (!matrix || !out) {
            g_last_error = "null argument";
            return RECIP_ERR_BAD_ARGUMENT;
        }
        return emit(as_json ? recip::write_matrix_json(matrix->value)
                            : recip::write_matrix_csv(matrix->value),
                    out);
    });
}

recip_status recip_analyze(const recip_matrix* matrix, const char* vector_spec,
                           double edge_tolerance, char** report_json) {
    return guarded([&]() -> recip_status {
        if (!matrix || !report_json) {
            g_last_error = "null argument";
            return RECIP_ERR_BAD_ARGUMENT;
        }
        const recip::reciprocal_matrix& a = matrix->value;
        recip::perron_result p = recip::perron(a);
        recip::weight_vector w = resolve_vector(a, vector_spec ? vector_spec : "perron");
        recip::efficiency_report report = recip::is_efficient(a, w, edge_tolerance);

        json doc = efficiency_json(report);
        doc["lambda"] = p.eigenvalue;
        doc["perron"] = {{"vector", p.vector.entries},
                         {"residual", p.residual},
                         {"iterations", p.iterations}};
        doc["vector"] = w.entries;
        doc["consistent"] = recip::is_consistent(a);
        doc["well_behaved"] = well_behaved_json(recip::classify(a));
        if (a.order() >= 3) {
            json profile = json::array();
            for (bool entry : recip::subvector_efficiency_profile(a, w, edge_tolerance))
                profile.push_back(entry);
            doc["subvector_profile"] = std::move(profile);
        }
        return emit(doc.dump(2) + "\n", report_json);
    });
}

recip_status recip_extend(const recip_matrix* matrix, const char* mode, int target_order,
                          double a, double c, int column, uint64_t seed,
                          const char* perron_vector_json, char** result_json) {
    return guarded([&]() -> recip_status {
        if (!matrix || !mode || !result_json) {
            g_last_error = "null argument";
            return RECIP_ERR_BAD_ARGUMENT;
        }
        const recip::reciprocal_matrix& base = matrix->value;
        std::string kind = mode;
        recip::extension_result result = [&] {
            if (kind == "constant")
                return recip::extend_constant_row_sums(base);
            if (kind == "perron") {
                if (!perron_vector_json)
                    throw recip::error(recip::errc::parse_error,
                                       "mode 'perron' needs a target vector");
                json doc = json::parse(perron_vector_json, nullptr, false);
                if (doc.is_discarded() || !doc.is_array())
                    throw recip::error(recip::errc::parse_error,
                                       "target vector must be a JSON array");
                return recip::extend_with_perron(
                    base, recip::weight_vector(doc.get<std::vector<double>>()));
            }
            if (kind == "inefficient") {
                std::size_t order = target_order > 0 ? static_cast<std::size_t>(target_order)
                                                     : base.order() + 1;
                return recip::extend_inefficient(base, order, a, c, seed);
            }
            if (kind == "efficient") {
                std::size_t j = column > 0 ? static_cast<std::size_t>(column - 1) : 0;
                return recip::extend_efficient(base, j);
            }
            throw recip::error(recip::errc::parse_error, "unknown extension mode '" + kind +
                                                             "'");
        }();
        return emit(extension_json(result).dump(2) + "\n", result_json);
    });
}

recip_status recip_generate(const char* family, int order, double b, double scale,
                            uint64_t seed, recip_matrix** out) {
    return guarded([&]() -> recip_status {
        if (!family || !out) {
            g_last_error = "null argument";
            return RECIP_ERR_BAD_ARGUMENT;
        }
        std::string kind = family;
        std::size_t n = order > 0 ? static_cast<std::size_t>(order) : 0;
        recip::reciprocal_matrix result = [&] {
            if (kind == "bozoki")
                return recip::bozoki(n, b);
            if (kind == "toeplitz")
                return recip::toeplitz_alt(n, b);
            if (kind == "blockdouble")
                return recip::block_double(recip::bozoki(n, b),
                                           recip::reciprocal_matrix::ones(n));
            if (kind == "border")
                return recip::bordered_growth(recip::bozoki(n, b));
            if (kind == "random")
                return recip::random_reciprocal(n, scale, seed);
            if (kind == "consistent")
                return recip::random_consistent(n, scale, seed);
            throw recip::error(recip::errc::parse_error,
                               "unknown family '" + kind + "'");
        }();
        *out = new recip_matrix{std::move(result)};
        return RECIP_OK;
    });
}

recip_status recip_char4(const recip_matrix* matrix, double edge_tolerance,
                         char** witness_json) {
    return guarded([&]() -> recip_status {
        if (!matrix || !witness_json) {
            g_last_error = "null argument";
            return RECIP_ERR_BAD_ARGUMENT;
        }
        recip::char4_witness witness = recip::characterize_4x4(matrix->value, edge_tolerance);
        json doc{{"inefficient", witness.inefficient},
                 {"sinks", one_based(witness.sink_vertices)},
                 {"diagonal", witness.diagonal},
                 {"B", matrix_json(witness.constant_row_sum_form)}};
        if (witness.dominating_row)
            doc["dominating_row"] = *witness.dominating_row + 1;
        else
            doc["dominating_row"] = nullptr;
        return emit(doc.dump(2) + "\n", witness_json);
    });
}

recip_status recip_survey(const int* dims, int dim_count, int samples, double scale,
                          uint64_t seed, int workers, char** csv_out) {
    return guarded([&]() -> recip_status {
        if (!dims || !csv_out || dim_count < 1) {
            g_last_error = "null argument";
            return RECIP_ERR_BAD_ARGUMENT;
        }
        recip::survey_config config{std::vector<int>(dims, dims + dim_count), samples,
                                    scale, seed, workers};
        return emit(recip::survey_csv(recip::run_survey(config)), csv_out);
    });
}

recip_status recip_theorem_sweep(const char* name, int samples, uint64_t seed,
                                 char** report_json) {
    return guarded([&]() -> recip_status {
        if (!name || !report_json) {
            g_last_error = "null argument";
            return RECIP_ERR_BAD_ARGUMENT;
        }
        recip::sweep_report report = recip::run_theorem_sweep(name, samples, seed);
        json doc{{"name", report.name},
                 {"samples", report.samples},
                 {"pass", report.pass},
                 {"detail", report.detail}};
        if (report.counterexample)
            doc["counterexample"] = *report.counterexample;
        else
            doc["counterexample"] = nullptr;
        return emit(doc.dump(2) + "\n", report_json);
    });
}

} // extern "C"
