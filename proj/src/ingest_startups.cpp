#include "aise/errors.hpp"
#include "aise/ingest.hpp"
#include "aise/text.hpp"

#include <fmt/format.h>
#include <json.hpp>

#include <fstream>

namespace aise::ingest {

using nlohmann::json;

StartupSet load_startups(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(Errc::missing_file, fmt::format("cannot open '{}'", path.string()));
    }

    StartupSet out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;

        json record = json::parse(line, nullptr, false);
        if (record.is_discarded() || !record.is_object()) {
            throw Error(Errc::malformed_record,
                        fmt::format("line {}: not a JSON object", line_no));
        }

        Startup startup;
        if (!record.contains("id") || !record["id"].is_string()) {
            throw Error(Errc::malformed_record,
                        fmt::format("line {}: missing string field 'id'", line_no));
        }
        startup.id = record["id"].get<std::string>();

        auto text_field = [&](const char* key) -> std::string {
            if (!record.contains(key)) return "";
            if (!record[key].is_string()) {
                throw Error(Errc::malformed_record,
                            fmt::format("line {}: field '{}' is not a string", line_no, key));
            }
            return text::normalize_ws(record[key].get<std::string>());
        };
        startup.name = text_field("name");
        startup.short_desc = text_field("one_liner");
        startup.long_desc = text_field("long_description");

        if (record.contains("batch_year")) {
            if (!record["batch_year"].is_number_integer()) {
                throw Error(Errc::malformed_record,
                            fmt::format("line {}: field 'batch_year' is not an integer", line_no));
            }
            startup.year = record["batch_year"].get<int>();
        }

        if (record.contains("tags")) {
            if (!record["tags"].is_array()) {
                throw Error(Errc::malformed_record,
                            fmt::format("line {}: field 'tags' is not an array", line_no));
            }
            for (const auto& tag : record["tags"]) {
                if (!tag.is_string()) {
                    throw Error(Errc::malformed_record,
                                fmt::format("line {}: tag entries must be strings", line_no));
                }
                auto normalized = text::normalize_tag(tag.get<std::string>());
                if (!normalized.empty()) {
                    startup.tags.insert(std::move(normalized));
                }
            }
        }

        if (startup.short_desc.empty() && startup.long_desc.empty()) {
            throw Error(Errc::malformed_record,
                        fmt::format("line {}: startup '{}' has neither description", line_no,
                                    startup.id));
        }
        out.add(std::move(startup));
    }
    return out;
}

void export_startups(const StartupSet& startups, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(Errc::missing_file, fmt::format("cannot write '{}'", path.string()));
    }
    for (const auto& [id, startup] : startups) {
        json record;
        record["id"] = startup.id;
        record["name"] = startup.name;
        record["one_liner"] = startup.short_desc;
        record["long_description"] = startup.long_desc;
        record["batch_year"] = startup.year;
        record["tags"] = startup.tags;  // std::set serializes in sorted order
        out << record.dump() << '\n';
    }
}

}  // namespace aise::ingest
