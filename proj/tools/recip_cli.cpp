// Command-line front end; talks to the library exclusively through the C API.
//
// Exit codes: 0 success (analyze/char4: vector efficient), 1 input or
// validation error, 2 requested construction impossible, 3 analyze/char4
// found the vector inefficient.

#include <recip.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_error = 1;
constexpr int exit_impossible = 2;
constexpr int exit_inefficient = 3;

struct matrix_deleter {
    void operator()(recip_matrix* m) const { recip_matrix_free(m); }
};
using matrix_handle = std::unique_ptr<recip_matrix, matrix_deleter>;

std::string owned(char* text) {
    std::string out = text ? text : "";
    recip_free_string(text);
    return out;
}

[[noreturn]] void fail(int code, const std::string& message) {
    std::cerr << "error: " << message << "\n";
    std::exit(code);
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream file(path);
    if (!file)
        fail(exit_error, "cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

matrix_handle load_matrix(const std::string& path, double tolerance) {
    recip_matrix* raw = nullptr;
    if (recip_matrix_parse(read_input(path).c_str(), tolerance, &raw) != RECIP_OK)
        fail(exit_error, std::string(recip_last_error()) + " (input '" + path + "')");
    return matrix_handle(raw);
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream file(out_path);
    if (!file)
        fail(exit_error, "cannot write '" + out_path + "'");
    file << text;
}

std::string join_indices(const json& indices) {
    if (indices.empty())
        return "none";
    std::string out;
    for (const auto& index : indices) {
        if (!out.empty())
            out += ", ";
        out += index.dump();
    }
    return out;
}

std::string vector_spec_from_flag(const std::string& flag) {
    if (flag == "perron" || flag == "geomean")
        return flag;
    // Anything else is a file holding the weights, either a JSON array or
    // whitespace/comma separated numbers.
    std::string text = read_input(flag);
    auto parsed = json::parse(text, nullptr, false);
    if (!parsed.is_discarded() && parsed.is_array())
        return parsed.dump();
    json array = json::array();
    std::string cleaned = text;
    for (char& ch : cleaned)
        if (ch == ',' || ch == '\n' || ch == '\t' || ch == '\r')
            ch = ' ';
    std::istringstream stream(cleaned);
    double value = 0.0;
    while (stream >> value)
        array.push_back(value);
    if (array.empty())
        fail(exit_error, "no numbers found in vector file '" + flag + "'");
    return array.dump();
}

void render_analysis(const json& report, std::ostream& out) {
    out << "lambda: " << report["lambda"].dump()
        << "  (residual " << report["perron"]["residual"].dump() << ")\n";
    out << "perron vector: " << report["perron"]["vector"].dump() << "\n";
    out << "weight vector: " << report["vector"].dump() << "\n";
    out << "consistent: " << (report["consistent"].get<bool>() ? "yes" : "no") << "\n";
    out << "efficient: " << (report["efficient"].get<bool>() ? "yes" : "no") << "\n";
    out << "strongly connected components (topological): ";
    for (const auto& component : report["sccs"])
        out << "{" << join_indices(component) << "} ";
    out << "\n";
    out << "sinks: " << join_indices(report["sinks"]) << "\n";
    out << "sources: " << join_indices(report["sources"]) << "\n";
    const json& wb = report["well_behaved"];
    out << "well-behaved: " << wb["kind"].get<std::string>() << " (gap "
        << wb["gap"].dump() << ", boundary " << wb["boundary_value"].dump() << ")\n";
    if (report.contains("subvector_profile")) {
        out << "subvector efficiency:";
        int index = 1;
        for (const auto& entry : report["subvector_profile"])
            out << " " << index++ << ":" << (entry.get<bool>() ? "yes" : "no");
        out << "\n";
    }
}

int run_analyze(const std::string& input, const std::string& vector_flag, double tolerance,
                double edge_tol, bool as_json, const std::string& out_path) {
    matrix_handle matrix = load_matrix(input, tolerance);
    char* raw = nullptr;
    if (recip_analyze(matrix.get(), vector_spec_from_flag(vector_flag).c_str(), edge_tol,
                      &raw) != RECIP_OK)
        fail(exit_error, recip_last_error());
    std::string text = owned(raw);
    json report = json::parse(text);
    if (as_json) {
        write_output(text, out_path);
    } else {
        std::ostringstream rendered;
        render_analysis(report, rendered);
        write_output(rendered.str(), out_path);
    }
    return report["efficient"].get<bool>() ? exit_ok : exit_inefficient;
}

std::string matrix_csv_from_json(const json& matrix) {
    recip_matrix* raw = nullptr;
    if (recip_matrix_parse(matrix.dump().c_str(), 1e-6, &raw) != RECIP_OK)
        fail(exit_error, recip_last_error());
    matrix_handle handle(raw);
    char* text = nullptr;
    if (recip_matrix_write(handle.get(), 0, &text) != RECIP_OK)
        fail(exit_error, recip_last_error());
    return owned(text);
}

int run_extend(const std::string& input, const std::string& mode,
               const std::string& perron_path, int target_order, double a, double c,
               int column, std::optional<std::uint64_t> seed, double tolerance,
               bool as_json, const std::string& out_path, const std::string& meta_path) {
    matrix_handle matrix = load_matrix(input, tolerance);
    if (mode == "inefficient" && target_order > recip_matrix_order(matrix.get()) + 1 &&
        !seed)
        fail(exit_error, "--seed is required when growing past one added order");

    std::string perron_json;
    if (!perron_path.empty())
        perron_json = vector_spec_from_flag(perron_path);

    char* raw = nullptr;
    recip_status status = recip_extend(matrix.get(), mode.c_str(), target_order, a, c,
                                       column, seed.value_or(0),
                                       perron_json.empty() ? nullptr : perron_json.c_str(),
                                       &raw);
    if (status == RECIP_ERR_CONSISTENT_INPUT)
        fail(exit_impossible, recip_last_error());
    if (status != RECIP_OK)
        fail(exit_error, recip_last_error());

    std::string text = owned(raw);
    json result = json::parse(text);
    for (const auto& warning : result["warnings"])
        std::cerr << "warning: " << warning.get<std::string>() << "\n";
    if (as_json)
        write_output(text, out_path);
    else
        write_output(matrix_csv_from_json(result["matrix"]), out_path);
    if (!meta_path.empty()) {
        json meta = result;
        meta.erase("matrix");
        write_output(meta.dump(2) + "\n", meta_path);
    }
    return exit_ok;
}

int run_generate(const std::string& family, int order, double b, double scale,
                 std::optional<std::uint64_t> seed, bool as_json,
                 const std::string& out_path) {
    if ((family == "random" || family == "consistent") && !seed)
        fail(exit_error, "--seed is required for family '" + family + "'");
    recip_matrix* raw = nullptr;
    if (recip_generate(family.c_str(), order, b, scale, seed.value_or(0), &raw) != RECIP_OK)
        fail(exit_error, recip_last_error());
    matrix_handle matrix(raw);
    char* text = nullptr;
    if (recip_matrix_write(matrix.get(), as_json ? 1 : 0, &text) != RECIP_OK)
        fail(exit_error, recip_last_error());
    write_output(owned(text), out_path);
    return exit_ok;
}

int run_char4(const std::string& input, double tolerance, double edge_tol, bool as_json,
              const std::string& out_path) {
    matrix_handle matrix = load_matrix(input, tolerance);
    char* raw = nullptr;
    if (recip_char4(matrix.get(), edge_tol, &raw) != RECIP_OK)
        fail(exit_error, recip_last_error());
    std::string text = owned(raw);
    json witness = json::parse(text);
    if (as_json) {
        write_output(text, out_path);
    } else {
        std::ostringstream rendered;
        bool inefficient = witness["inefficient"].get<bool>();
        rendered << "perron vector inefficient: " << (inefficient ? "yes" : "no") << "\n";
        rendered << "sinks: " << join_indices(witness["sinks"]) << "\n";
        rendered << "dominating row of constant-row-sum form: "
                 << witness["dominating_row"].dump() << "\n";
        rendered << "diagonal: " << witness["diagonal"].dump() << "\n";
        rendered << "constant-row-sum form:\n"
                 << matrix_csv_from_json(witness["B"]);
        write_output(rendered.str(), out_path);
    }
    return witness["inefficient"].get<bool>() ? exit_inefficient : exit_ok;
}

int run_survey(const std::string& dims_flag, int samples, double scale,
               std::uint64_t seed, int workers, const std::string& csv_path) {
    std::vector<int> dims;
    std::string cleaned = dims_flag;
    for (char& ch : cleaned)
        if (ch == ',')
            ch = ' ';
    std::istringstream stream(cleaned);
    int dim = 0;
    while (stream >> dim)
        dims.push_back(dim);
    if (dims.empty())
        fail(exit_error, "--dims needs at least one dimension");
    char* raw = nullptr;
    if (recip_survey(dims.data(), static_cast<int>(dims.size()), samples, scale, seed,
                     workers, &raw) != RECIP_OK)
        fail(exit_error, recip_last_error());
    write_output(owned(raw), csv_path);
    return exit_ok;
}

int run_sweep(const std::string& name, int samples, std::uint64_t seed) {
    char* raw = nullptr;
    if (recip_theorem_sweep(name.c_str(), samples, seed, &raw) != RECIP_OK)
        fail(exit_error, recip_last_error());
    std::string text = owned(raw);
    json report = json::parse(text);
    std::cout << text;
    return report["pass"].get<bool>() ? exit_ok : exit_inefficient;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reciprocal matrix efficiency toolkit"};
    app.require_subcommand(1);

    std::string input = "-", out_path, meta_path, vector_flag = "perron";
    std::string mode, family, dims_flag = "4,5,6,7", sweep_name;
    double tolerance = 1e-9, edge_tol = 0.0;
    bool fixture_tol = false;
    double a = 1.0, c = 1.0, b = 2.0, scale = 9.0;
    int target_order = 0, column = 1, samples = 1000, workers = 1, order = 4;
    std::optional<std::uint64_t> seed;
    std::uint64_t survey_seed = 0;
    bool as_json = false;

    auto add_common = [&](CLI::App* cmd, bool with_input) {
        if (with_input)
            cmd->add_option("input", input, "matrix file (CSV or JSON), '-' for stdin");
        cmd->add_option("--tolerance", tolerance, "reciprocity validation tolerance");
        cmd->add_flag("--fixture-tol", fixture_tol,
                      "use the looser 1e-3 tolerance for matrices transcribed from "
                      "rounded print-outs");
        cmd->add_flag("--json", as_json, "emit the JSON report");
        cmd->add_option("--out", out_path, "output path (default stdout)");
    };

    CLI::App* analyze = app.add_subcommand("analyze", "Perron, efficiency and class report");
    add_common(analyze, true);
    analyze->add_option("--vector", vector_flag, "perron | geomean | path to a weight file");
    analyze->add_option("--edge-tol", edge_tol, "digraph edge tie tolerance");

    CLI::App* extend = app.add_subcommand("extend", "one-row-one-column extensions");
    add_common(extend, true);
    extend->add_option("--mode", mode, "perron | inefficient | efficient | constant")
        ->required();
    extend->add_option("--perron-vector", vector_flag, "target Perron vector file")
        ->expected(1);
    extend->add_option("--target-order", target_order, "final order (mode inefficient)");
    extend->add_option("--a", a, "border column constant");
    extend->add_option("--c", c, "trailing similarity entry");
    extend->add_option("--column", column, "normalizing column, 1-based (mode efficient)");
    extend->add_option("--seed", seed, "seed for the random growth stage");
    extend->add_option("--meta", meta_path, "write extension metadata JSON here");

    CLI::App* generate = app.add_subcommand("generate", "structured and random families");
    add_common(generate, false);
    generate->add_option("--family", family,
                         "bozoki | toeplitz | blockdouble | border | random | consistent")
        ->required();
    generate->add_option("--order", order, "matrix order")->required();
    generate->add_option("--b", b, "structured family parameter");
    generate->add_option("--scale", scale, "log-uniform half-range");
    generate->add_option("--seed", seed, "random seed");

    CLI::App* char4 = app.add_subcommand("char4", "order-4 inefficiency witness");
    add_common(char4, true);
    char4->add_option("--edge-tol", edge_tol, "digraph edge tie tolerance");

    CLI::App* survey = app.add_subcommand("survey", "Monte Carlo inefficiency frequencies");
    survey->add_option("--dims", dims_flag, "comma-separated dimensions");
    survey->add_option("--samples", samples, "samples per dimension")->required();
    survey->add_option("--scale", scale, "log-uniform half-range");
    survey->add_option("--seed", survey_seed, "master seed")->required();
    survey->add_option("--workers", workers, "worker threads");
    survey->add_option("--csv", out_path, "CSV output path (default stdout)");

    CLI::App* sweep = app.add_subcommand("sweep", "seeded theorem property sweeps");
    sweep->add_option("name", sweep_name, "ll1 lconswell t2 t6 c4 c27 t5 thind")
        ->required();
    sweep->add_option("--samples", samples, "instances to draw")->required();
    sweep->add_option("--seed", survey_seed, "master seed")->required();

    CLI11_PARSE(app, argc, argv);

    if (fixture_tol)
        tolerance = 1e-3;

    try {
        if (app.got_subcommand(analyze))
            return run_analyze(input, vector_flag, tolerance, edge_tol, as_json, out_path);
        if (app.got_subcommand(extend))
            return run_extend(input, mode, extend->count("--perron-vector") ? vector_flag : "",
                              target_order, a, c, column, seed, tolerance, as_json, out_path,
                              meta_path);
        if (app.got_subcommand(generate))
            return run_generate(family, order, b, scale, seed, as_json, out_path);
        if (app.got_subcommand(char4))
            return run_char4(input, tolerance, edge_tol, as_json, out_path);
        if (app.got_subcommand(survey))
            return run_survey(dims_flag, samples, scale, survey_seed, workers, out_path);
        if (app.got_subcommand(sweep))
            return run_sweep(sweep_name, samples, survey_seed);
    } catch (const std::exception& e) {
        fail(exit_error, e.what());
    }
    return exit_error;
}
