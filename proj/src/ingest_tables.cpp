#include "aise/csv.hpp"
#include "aise/errors.hpp"
#include "aise/ingest.hpp"
#include "aise/text.hpp"

#include <fmt/format.h>

#include <charconv>
#include <cmath>
#include <set>

namespace aise::ingest {

namespace {

double parse_cell_double(const std::string& cell, std::size_t row, std::size_t col, Errc errc) {
    double value = 0.0;
    auto trimmed = text::normalize_ws(cell);
    auto* first = trimmed.data();
    auto* last = trimmed.data() + trimmed.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || !std::isfinite(value)) {
        throw Error(errc, fmt::format("row {}, column {}: '{}' is not a finite number", row, col,
                                      cell));
    }
    return value;
}

}  // namespace

RelatednessMatrix load_relatedness_matrix(const std::filesystem::path& path,
                                          std::size_t expected_rows, std::size_t expected_cols) {
    auto rows = csv::read_file(path);
    if (rows.empty() || rows[0].size() < 2) {
        throw Error(Errc::malformed_header,
                    fmt::format("'{}' needs a header with ability columns", path.string()));
    }

    RelatednessMatrix matrix;
    const auto& header = rows[0];
    std::set<std::string> seen_abilities;
    for (std::size_t c = 1; c < header.size(); ++c) {
        auto id = text::normalize_ws(header[c]);
        if (id.empty() || !seen_abilities.insert(id).second) {
            throw Error(Errc::malformed_header,
                        fmt::format("ability column {} is empty or duplicated", c));
        }
        matrix.abilities.push_back(std::move(id));
    }

    const std::size_t n_cols = matrix.abilities.size();
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (row.size() != n_cols + 1) {
            throw Error(Errc::shape_mismatch,
                        fmt::format("row {} has {} value columns, header has {}", r,
                                    row.size() - 1, n_cols));
        }
        matrix.applications.push_back(text::normalize_ws(row[0]));
        std::vector<double> values;
        values.reserve(n_cols);
        for (std::size_t c = 1; c < row.size(); ++c) {
            double v = parse_cell_double(row[c], r, c, Errc::non_numeric_cell);
            if (v < 0.0) {
                throw Error(Errc::non_numeric_cell,
                            fmt::format("row {}, column {}: negative relatedness {}", r, c, v));
            }
            values.push_back(v);
        }
        matrix.values.push_back(std::move(values));
    }

    if ((expected_rows != 0 && matrix.applications.size() != expected_rows) ||
        (expected_cols != 0 && n_cols != expected_cols)) {
        throw Error(Errc::shape_mismatch,
                    fmt::format("matrix is {} x {}, expected {} x {}", matrix.applications.size(),
                                n_cols, expected_rows, expected_cols));
    }
    return matrix;
}

EmploymentTable load_employment(const std::filesystem::path& path, TableKind kind) {
    auto rows = csv::read_file(path);
    const std::vector<std::string> expected = {"group_key", "group_title", "member_key",
                                               "employment"};
    if (rows.empty() || rows[0].size() != expected.size()) {
        throw Error(Errc::malformed_header,
                    fmt::format("'{}' must start with header {}", path.string(),
                                fmt::join(expected, ",")));
    }
    for (std::size_t i = 0; i < expected.size(); ++i) {
        if (text::to_lower(text::normalize_ws(rows[0][i])) != expected[i]) {
            throw Error(Errc::malformed_header,
                        fmt::format("'{}' header column {} is '{}', expected '{}'", path.string(),
                                    i + 1, rows[0][i], expected[i]));
        }
    }

    EmploymentTable table;
    table.kind = kind;
    std::set<std::pair<std::string, std::string>> seen;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (row.size() == 1 && row[0].empty()) continue;  // trailing blank line
        if (row.size() != expected.size()) {
            throw Error(Errc::malformed_row,
                        fmt::format("row {}: expected {} columns, found {}", r, expected.size(),
                                    row.size()));
        }
        EmploymentRow entry{
            .group_key = text::normalize_ws(row[0]),
            .group_title = text::normalize_ws(row[1]),
            .member_key = text::normalize_ws(row[2]),
            .employment = parse_cell_double(row[3], r, 4, Errc::malformed_row),
        };
        if (entry.employment < 0.0) {
            throw Error(Errc::negative_employment,
                        fmt::format("row {}: employment {} for ({}, {})", r, entry.employment,
                                    entry.group_key, entry.member_key));
        }
        if (!seen.emplace(entry.group_key, entry.member_key).second) {
            throw Error(Errc::malformed_row,
                        fmt::format("row {}: duplicate (group, member) pair ({}, {})", r,
                                    entry.group_key, entry.member_key));
        }
        table.rows.push_back(std::move(entry));
    }
    return table;
}

}  // namespace aise::ingest
