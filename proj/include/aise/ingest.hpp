#pragma once

#include "aise/types.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace aise::ingest {

// --- O*NET flat files (tab-delimited, UTF-8, header row) ------------------

// Occupation file columns: code, title, description (O*NET's own header
// names are accepted too). Descriptions are whitespace-normalized.
OccupationSet load_occupations(const std::filesystem::path& path);

// Job Zone file columns: code, zone. Zones outside 1..5 are rejected.
JobZoneMap load_job_zones(const std::filesystem::path& path);

// Skills file columns: code, element id, element name, scale id, data value.
// Only IM (importance) rows feed the ratings; other scales are skipped.
SkillRatings load_skill_ratings(const std::filesystem::path& path);

// Abilities file: same layout; IM and LV rows are merged per
// (occupation, ability) and both must be present.
AbilityRatings load_ability_ratings(const std::filesystem::path& path);

// --- Startup snapshot (JSONL) ----------------------------------------------

// One JSON object per line: id, name, one_liner, long_description,
// batch_year, tags. Unknown fields ignored, tags normalized at load.
StartupSet load_startups(const std::filesystem::path& path);

// --- CSV inputs -------------------------------------------------------------

// Relatedness CSV: header = label + ability ids, rows = application name +
// values. expected_rows/expected_cols of 0 disable the corresponding shape
// check; the defaults enforce the canonical 10 x 52 grid.
RelatednessMatrix load_relatedness_matrix(const std::filesystem::path& path,
                                          std::size_t expected_rows = 10,
                                          std::size_t expected_cols = 52);

// Employment CSV with header group_key,group_title,member_key,employment.
EmploymentTable load_employment(const std::filesystem::path& path, TableKind kind);

// --- Canonical exports (round-trip with the loaders) ------------------------

void export_occupations(const OccupationSet& occupations, const std::filesystem::path& path);
void export_startups(const StartupSet& startups, const std::filesystem::path& path);

// --- Corpus validation -------------------------------------------------------

struct Percentiles {
    double p10 = 0, p25 = 0, p50 = 0, p75 = 0, p90 = 0;
};

struct ValidationReport {
    std::size_t n_occupations = 0;
    std::size_t n_startups = 0;
    std::size_t n_aioe_eligible = 0;
    std::size_t n_skill_records = 0;
    std::vector<std::string> occupations_missing_zone;
    std::vector<std::string> occupations_not_aioe_eligible;
    std::vector<std::string> startups_unmatched_ai;
    std::vector<std::string> startups_unmatched_robotics;
    Percentiles occupation_desc_chars;
    Percentiles startup_long_desc_chars;
    Percentiles startup_short_desc_chars;
    std::vector<std::string> fatal;  // findings that should fail an ingest run

    bool ok() const { return fatal.empty(); }
};

ValidationReport validate_corpus(const OccupationSet& occupations, const StartupSet& startups,
                                 const SkillRatings& skills, const AbilityRatings& abilities,
                                 const JobZoneMap& zones);

std::string validation_report_json(const ValidationReport& report);
void print_validation_report(const ValidationReport& report, std::ostream& out);

}  // namespace aise::ingest
