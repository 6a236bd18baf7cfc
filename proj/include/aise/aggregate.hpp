#pragma once

#include "aise/exposure.hpp"
#include "aise/types.hpp"

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace aise::agg {

struct GroupEntry {
    double score = 0.0;
    double covered_employment_share = 0.0;  // in (0,1]
    std::string group_title;
};

// Employment-weighted exposure per group (MSA, sector or county).
struct GroupScores {
    std::string kind;  // "msa" | "sector" | "county"
    std::map<std::string, GroupEntry> entries;
    std::vector<std::string> warnings;
    std::map<std::string, std::string> input_hashes;
};

// Weighted mean of occupation scores over each group, renormalized over the
// employment that actually has a score; groups with no covered employment are
// omitted and reported in warnings.
GroupScores group_exposure(const exposure::ExposureScores& scores, const EmploymentTable& emp,
                           const std::string& kind, TableKind expected_kind);

// Two-stage projection: national sector scores from sector x occupation
// employment, then county scores from county x sector employment.
GroupScores county_projection(const exposure::ExposureScores& scores,
                              const EmploymentTable& national_sector_occupation,
                              const EmploymentTable& county_sector);

// CSV export with header group_key,group_title,score,covered_share and a JSON
// sidecar at <path>.meta.json.
void save_group_scores(const GroupScores& groups, const std::filesystem::path& csv_path);

}  // namespace aise::agg
