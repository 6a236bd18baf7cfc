#include "aise/errors.hpp"
#include "aise/ingest.hpp"
#include "aise/text.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>

namespace aise::ingest {

namespace {

std::vector<std::string> read_lines(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(Errc::missing_file, fmt::format("cannot open '{}'", path.string()));
    }
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        lines.push_back(line);
    }
    return lines;
}

// Header cells are matched after lower-casing and stripping non-alphanumerics,
// so "O*NET-SOC Code", "soc_code" and "code" all name the code column.
std::string header_key(std::string_view cell) {
    std::string out;
    for (char c : cell) {
        if (std::isalnum(static_cast<unsigned char>(c))) {
            out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
        }
    }
    return out;
}

std::optional<std::size_t> find_column(const std::vector<std::string>& header,
                                       const std::vector<std::string>& accepted_keys) {
    for (std::size_t i = 0; i < header.size(); ++i) {
        auto key = header_key(header[i]);
        if (std::find(accepted_keys.begin(), accepted_keys.end(), key) != accepted_keys.end()) {
            return i;
        }
    }
    return std::nullopt;
}

std::size_t require_column(const std::vector<std::string>& header,
                           const std::vector<std::string>& accepted_keys,
                           const std::string& what, const std::filesystem::path& path) {
    auto col = find_column(header, accepted_keys);
    if (!col) {
        throw Error(Errc::malformed_header,
                    fmt::format("'{}' is missing a {} column", path.string(), what));
    }
    return *col;
}

double parse_double(std::string_view cell, std::size_t line_no) {
    double value = 0.0;
    auto* first = cell.data();
    auto* last = cell.data() + cell.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
        throw Error(Errc::malformed_row,
                    fmt::format("line {}: '{}' is not a number", line_no, std::string(cell)));
    }
    return value;
}

int parse_int(std::string_view cell, std::size_t line_no) {
    int value = 0;
    auto* first = cell.data();
    auto* last = cell.data() + cell.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
        throw Error(Errc::malformed_row,
                    fmt::format("line {}: '{}' is not an integer", line_no, std::string(cell)));
    }
    return value;
}

bool blank(const std::string& line) {
    return line.find_first_not_of(" \t") == std::string::npos;
}

}  // namespace

OccupationSet load_occupations(const std::filesystem::path& path) {
    auto lines = read_lines(path);
    if (lines.empty()) {
        throw Error(Errc::malformed_header, fmt::format("'{}' is empty", path.string()));
    }
    auto header = text::split(lines[0], '\t');
    auto code_col = require_column(header, {"code", "onetsoccode", "soccode"}, "code", path);
    auto title_col = require_column(header, {"title"}, "title", path);
    auto desc_col = require_column(header, {"description"}, "description", path);

    OccupationSet out;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (blank(lines[i])) continue;
        auto cells = text::split(lines[i], '\t');
        auto need = std::max({code_col, title_col, desc_col});
        if (cells.size() <= need) {
            throw Error(Errc::malformed_row,
                        fmt::format("line {}: expected at least {} tab-separated fields", i + 1,
                                    need + 1));
        }
        Occupation occupation{
            .soc_code = text::normalize_ws(cells[code_col]),
            .title = text::normalize_ws(cells[title_col]),
            .description = text::normalize_ws(cells[desc_col]),
            .job_zone = std::nullopt,
        };
        if (occupation.description.empty()) {
            throw Error(Errc::empty_description,
                        fmt::format("line {}: occupation '{}' has an empty description", i + 1,
                                    occupation.soc_code));
        }
        out.add(std::move(occupation));
    }
    return out;
}

JobZoneMap load_job_zones(const std::filesystem::path& path) {
    auto lines = read_lines(path);
    if (lines.empty()) {
        throw Error(Errc::malformed_header, fmt::format("'{}' is empty", path.string()));
    }
    auto header = text::split(lines[0], '\t');
    auto code_col = require_column(header, {"code", "onetsoccode", "soccode"}, "code", path);
    auto zone_col = require_column(header, {"zone", "jobzone"}, "zone", path);

    JobZoneMap zones;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (blank(lines[i])) continue;
        auto cells = text::split(lines[i], '\t');
        if (cells.size() <= std::max(code_col, zone_col)) {
            throw Error(Errc::malformed_row, fmt::format("line {}: too few fields", i + 1));
        }
        auto code = text::normalize_ws(cells[code_col]);
        int zone = parse_int(text::normalize_ws(cells[zone_col]), i + 1);
        if (zone < 1 || zone > 5) {
            throw Error(Errc::zone_out_of_range,
                        fmt::format("line {}: job zone {} for '{}' is outside 1..5", i + 1, zone,
                                    code));
        }
        auto [_, inserted] = zones.emplace(code, zone);
        if (!inserted) {
            throw Error(Errc::malformed_row,
                        fmt::format("line {}: duplicate job zone row for '{}'", i + 1, code));
        }
    }
    return zones;
}

namespace {

struct RatingRow {
    std::string soc_code;
    std::string element_id;
    std::string element_name;
    std::string scale_id;
    double value = 0.0;
};

// Shared reader for the skills and abilities files.
std::vector<RatingRow> read_rating_rows(const std::filesystem::path& path) {
    auto lines = read_lines(path);
    if (lines.empty()) {
        throw Error(Errc::malformed_header, fmt::format("'{}' is empty", path.string()));
    }
    auto header = text::split(lines[0], '\t');
    auto code_col = require_column(header, {"code", "onetsoccode", "soccode"}, "code", path);
    auto id_col = require_column(header, {"elementid"}, "element id", path);
    auto name_col = require_column(header, {"elementname"}, "element name", path);
    auto scale_col = require_column(header, {"scaleid"}, "scale id", path);
    auto value_col = require_column(header, {"datavalue", "value"}, "data value", path);

    std::vector<RatingRow> rows;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (blank(lines[i])) continue;
        auto cells = text::split(lines[i], '\t');
        auto need = std::max({code_col, id_col, name_col, scale_col, value_col});
        if (cells.size() <= need) {
            throw Error(Errc::malformed_row, fmt::format("line {}: too few fields", i + 1));
        }
        rows.push_back(RatingRow{
            .soc_code = text::normalize_ws(cells[code_col]),
            .element_id = text::normalize_ws(cells[id_col]),
            .element_name = text::normalize_ws(cells[name_col]),
            .scale_id = text::normalize_ws(cells[scale_col]),
            .value = parse_double(text::normalize_ws(cells[value_col]), i + 1),
        });
    }
    return rows;
}

}  // namespace

SkillRatings load_skill_ratings(const std::filesystem::path& path) {
    SkillRatings out;
    for (const auto& row : read_rating_rows(path)) {
        if (row.scale_id != "IM") continue;
        if (row.value < 1.0 || row.value > 5.0) {
            throw Error(Errc::scale_out_of_range,
                        fmt::format("skill importance {} for ({}, {}) is outside [1,5]", row.value,
                                    row.soc_code, row.element_id));
        }
        out.add(row.soc_code, row.element_id, row.element_name, row.value);
    }
    return out;
}

AbilityRatings load_ability_ratings(const std::filesystem::path& path) {
    struct Partial {
        std::optional<double> importance;
        std::optional<double> level;
        std::string name;
    };
    std::map<std::pair<std::string, std::string>, Partial> merged;

    for (const auto& row : read_rating_rows(path)) {
        if (row.scale_id != "IM" && row.scale_id != "LV") continue;
        auto& slot = merged[{row.soc_code, row.element_id}];
        slot.name = row.element_name;
        if (row.scale_id == "IM") {
            if (row.value < 1.0 || row.value > 5.0) {
                throw Error(Errc::scale_out_of_range,
                            fmt::format("ability importance {} for ({}, {}) is outside [1,5]",
                                        row.value, row.soc_code, row.element_id));
            }
            if (slot.importance) {
                throw Error(Errc::malformed_row,
                            fmt::format("duplicate IM row for ({}, {})", row.soc_code,
                                        row.element_id));
            }
            slot.importance = row.value;
        } else {
            // O*NET level files contain 0 even though the documented scale
            // starts at 1; 0 is accepted and used as-is.
            if (row.value < 0.0 || row.value > 7.0) {
                throw Error(Errc::scale_out_of_range,
                            fmt::format("ability level {} for ({}, {}) is outside [0,7]",
                                        row.value, row.soc_code, row.element_id));
            }
            if (slot.level) {
                throw Error(Errc::malformed_row,
                            fmt::format("duplicate LV row for ({}, {})", row.soc_code,
                                        row.element_id));
            }
            slot.level = row.value;
        }
    }

    AbilityRatings out;
    for (const auto& [key, partial] : merged) {
        if (!partial.importance || !partial.level) {
            throw Error(Errc::missing_scale,
                        fmt::format("ability ({}, {}) lacks an {} row", key.first, key.second,
                                    partial.importance ? "LV" : "IM"));
        }
        out.add(key.first, key.second, partial.name,
                AbilityRating{.importance = *partial.importance, .level = *partial.level});
    }
    return out;
}

void export_occupations(const OccupationSet& occupations, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(Errc::missing_file, fmt::format("cannot write '{}'", path.string()));
    }
    out << "code\ttitle\tdescription\n";
    for (const auto& occupation : occupations) {
        // Normalization already removed tabs/newlines from every field.
        out << occupation.soc_code << '\t' << occupation.title << '\t' << occupation.description
            << '\n';
    }
}

}  // namespace aise::ingest
