#include "aise/csv.hpp"

#include "aise/errors.hpp"

#include <fmt/format.h>

#include <fstream>
#include <sstream>

namespace aise::csv {

std::vector<Row> parse(std::string_view content) {
    std::vector<Row> rows;
    Row row;
    std::string field;
    bool in_quotes = false;
    bool field_started = false;

    auto end_field = [&] {
        row.push_back(std::move(field));
        field.clear();
        field_started = false;
    };
    auto end_row = [&] {
        end_field();
        rows.push_back(std::move(row));
        row.clear();
    };

    for (size_t i = 0; i < content.size(); ++i) {
        char c = content[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < content.size() && content[i + 1] == '"') {
                    field.push_back('"');
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                field.push_back(c);
            }
            continue;
        }
        switch (c) {
        case '"':
            if (!field_started && field.empty()) {
                in_quotes = true;
                field_started = true;
            } else {
                field.push_back(c);
            }
            break;
        case ',':
            end_field();
            break;
        case '\r':
            if (i + 1 < content.size() && content[i + 1] == '\n') ++i;
            end_row();
            break;
        case '\n':
            end_row();
            break;
        default:
            field.push_back(c);
            field_started = true;
            break;
        }
    }
    // Final row without trailing newline.
    if (field_started || !field.empty() || !row.empty()) {
        end_row();
    }
    return rows;
}

std::vector<Row> read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(Errc::missing_file, fmt::format("cannot open '{}'", path.string()));
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str());
}

std::string escape(std::string_view field) {
    bool needs_quotes = field.find_first_of(",\"\r\n") != std::string_view::npos;
    if (!needs_quotes) {
        return std::string(field);
    }
    std::string out;
    out.reserve(field.size() + 2);
    out.push_back('"');
    for (char c : field) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::string format_row(const Row& fields) {
    std::string out;
    for (size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) out.push_back(',');
        out += escape(fields[i]);
    }
    out.push_back('\n');
    return out;
}

}  // namespace aise::csv
