#include "recip/io.hpp"

#include <json.hpp>

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace recip {

std::string format_double(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.17g", value);
    return buffer;
}

namespace {

reciprocal_matrix parse_csv(const std::string& text, double tol) {
    std::vector<std::vector<double>> rows;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (line.find_first_not_of(" \t\r,") == std::string::npos)
            continue;
        std::vector<double> row;
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ',')) {
            std::size_t begin = cell.find_first_not_of(" \t\r");
            if (begin == std::string::npos)
                throw error(errc::parse_error, "empty cell in row " +
                                                   std::to_string(rows.size() + 1));
            std::size_t end = cell.find_last_not_of(" \t\r") + 1;
            const char* first = cell.data() + begin;
            double value = 0.0;
            auto [ptr, ec] = std::from_chars(first, cell.data() + end, value);
            if (ec != std::errc{} || ptr != cell.data() + end)
                throw error(errc::parse_error,
                            "bad number '" + cell.substr(begin, end - begin) + "' in row " +
                                std::to_string(rows.size() + 1));
            row.push_back(value);
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty())
        throw error(errc::parse_error, "no rows found");
    std::size_t n = rows.size();
    std::vector<double> entries;
    entries.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n)
            throw error(errc::parse_error, "row " + std::to_string(i + 1) + " has " +
                                               std::to_string(rows[i].size()) +
                                               " entries, expected " + std::to_string(n));
        entries.insert(entries.end(), rows[i].begin(), rows[i].end());
    }
    return reciprocal_matrix::validate(std::move(entries), n, tol);
}

reciprocal_matrix parse_json(const std::string& text, double tol) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw error(errc::parse_error, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("order") || !doc.contains("entries"))
        throw error(errc::parse_error, "expected object with 'order' and 'entries'");
    std::size_t n = doc["order"].get<std::size_t>();
    if (doc.contains("tolerance"))
        tol = doc["tolerance"].get<double>();
    const auto& array = doc["entries"];
    if (!array.is_array() || array.size() != n)
        throw error(errc::parse_error, "'entries' must hold " + std::to_string(n) + " rows");
    std::vector<double> entries;
    entries.reserve(n * n);
    for (const auto& row : array) {
        if (!row.is_array() || row.size() != n)
            throw error(errc::parse_error, "each row must hold " + std::to_string(n) +
                                               " entries");
        for (const auto& cell : row)
            entries.push_back(cell.get<double>());
    }
    return reciprocal_matrix::validate(std::move(entries), n, tol);
}

} // namespace

reciprocal_matrix parse_matrix(const std::string& text, double tol) {
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos)
        throw error(errc::parse_error, "empty input");
    if (text[first] == '{')
        return parse_json(text, tol);
    return parse_csv(text, tol);
}

std::string write_matrix_csv(const reciprocal_matrix& a) {
    std::string out;
    std::size_t n = a.order();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (j)
                out += ',';
            out += format_double(a(i, j));
        }
        out += '\n';
    }
    return out;
}

std::string write_matrix_json(const reciprocal_matrix& a) {
    nlohmann::json rows = nlohmann::json::array();
    std::size_t n = a.order();
    for (std::size_t i = 0; i < n; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < n; ++j)
            row.push_back(a(i, j));
        rows.push_back(std::move(row));
    }
    nlohmann::json doc{{"order", n}, {"entries", std::move(rows)}};
    return doc.dump(2) + "\n";
}

} // namespace recip
