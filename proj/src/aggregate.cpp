#include "aise/aggregate.hpp"

#include "aise/csv.hpp"
#include "aise/errors.hpp"
#include "aise/numeric.hpp"

#include <fmt/format.h>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <set>

namespace aise::agg {

using nlohmann::json;

namespace {

struct GroupAccumulator {
    numeric::Accumulator weighted_score;
    numeric::Accumulator covered_employment;
    numeric::Accumulator total_employment;
    std::string title;
};

// Shared weighted-mean pass over (group, member, employment) rows against any
// member -> score map.
GroupScores weighted_group_means(const std::map<std::string, double>& member_scores,
                                 const std::vector<EmploymentRow>& rows, const std::string& kind) {
    std::map<std::string, GroupAccumulator> accumulators;
    for (const auto& row : rows) {
        auto& acc = accumulators[row.group_key];
        if (acc.title.empty()) acc.title = row.group_title;
        acc.total_employment.add(row.employment);
        auto score = member_scores.find(row.member_key);
        if (score != member_scores.end()) {
            acc.covered_employment.add(row.employment);
            acc.weighted_score.add(row.employment * score->second);
        }
    }

    GroupScores out;
    out.kind = kind;
    for (const auto& [group, acc] : accumulators) {
        const double covered = acc.covered_employment.total();
        const double total = acc.total_employment.total();
        if (covered <= 0.0 || total <= 0.0) {
            out.warnings.push_back(fmt::format("NoCoverage({})", group));
            continue;
        }
        out.entries[group] = GroupEntry{
            .score = acc.weighted_score.total() / covered,
            .covered_employment_share = covered / total,
            .group_title = acc.title,
        };
    }
    return out;
}

}  // namespace

GroupScores group_exposure(const exposure::ExposureScores& scores, const EmploymentTable& emp,
                           const std::string& kind, TableKind expected_kind) {
    if (emp.kind != expected_kind) {
        throw Error(Errc::kind_mismatch,
                    fmt::format("employment table is {}, expected {}", table_kind_name(emp.kind),
                                table_kind_name(expected_kind)));
    }
    auto out = weighted_group_means(scores.scores, emp.rows, kind);
    if (emp.kind == TableKind::sector_occupation) {
        std::set<std::string> sectors;
        for (const auto& row : emp.rows) sectors.insert(row.group_key);
        // NAICS-2 has nineteen sectors; more usually means a mis-keyed file.
        if (sectors.size() > 19) {
            out.warnings.push_back(
                fmt::format("sector table has {} distinct sectors, expected <= 19", sectors.size()));
        }
    }
    return out;
}

GroupScores county_projection(const exposure::ExposureScores& scores,
                              const EmploymentTable& national_sector_occupation,
                              const EmploymentTable& county_sector) {
    if (national_sector_occupation.kind != TableKind::sector_occupation) {
        throw Error(Errc::kind_mismatch, "first table must be sector x occupation");
    }
    if (county_sector.kind != TableKind::area_sector) {
        throw Error(Errc::kind_mismatch, "second table must be county x sector");
    }

    // Stage 1: national sector scores.
    auto sector_scores = weighted_group_means(scores.scores, national_sector_occupation.rows,
                                              "sector");

    std::set<std::string> county_sectors;
    for (const auto& row : county_sector.rows) county_sectors.insert(row.member_key);
    bool any_shared = std::any_of(county_sectors.begin(), county_sectors.end(),
                                  [&](const std::string& s) {
                                      return sector_scores.entries.contains(s);
                                  });
    if (!any_shared) {
        throw Error(Errc::sector_code_mismatch,
                    "county table shares no sector codes with the national table");
    }

    // Stage 2: county scores over the projected sector scores.
    std::map<std::string, double> sector_values;
    for (const auto& [sector, entry] : sector_scores.entries) {
        sector_values[sector] = entry.score;
    }
    auto out = weighted_group_means(sector_values, county_sector.rows, "county");
    for (const auto& warning : sector_scores.warnings) {
        out.warnings.push_back("stage1:" + warning);
    }
    return out;
}

void save_group_scores(const GroupScores& groups, const std::filesystem::path& csv_path) {
    if (csv_path.has_parent_path()) {
        std::filesystem::create_directories(csv_path.parent_path());
    }
    std::ofstream out(csv_path, std::ios::binary);
    if (!out) {
        throw Error(Errc::missing_file, fmt::format("cannot write '{}'", csv_path.string()));
    }
    out << "group_key,group_title,score,covered_share\n";
    for (const auto& [group, entry] : groups.entries) {
        out << csv::format_row({
            group,
            entry.group_title,
            fmt::format("{}", entry.score),
            fmt::format("{}", entry.covered_employment_share),
        });
    }

    json meta = {
        {"kind", groups.kind},
        {"warnings", groups.warnings},
        {"inputs", groups.input_hashes},
        {"n_groups", groups.entries.size()},
    };
    auto meta_path = csv_path;
    meta_path += ".meta.json";
    std::ofstream meta_out(meta_path, std::ios::binary);
    meta_out << meta.dump(2) << '\n';
}

}  // namespace aise::agg
