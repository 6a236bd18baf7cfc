#include "aise/ingest.hpp"
#include "aise/numeric.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>
#include <json.hpp>

#include <algorithm>
#include <ostream>

namespace aise::ingest {

namespace {

Percentiles length_percentiles(std::vector<double> lengths) {
    if (lengths.empty()) return {};
    std::sort(lengths.begin(), lengths.end());
    return Percentiles{
        .p10 = numeric::nearest_rank_quantile(lengths, 0.10),
        .p25 = numeric::nearest_rank_quantile(lengths, 0.25),
        .p50 = numeric::nearest_rank_quantile(lengths, 0.50),
        .p75 = numeric::nearest_rank_quantile(lengths, 0.75),
        .p90 = numeric::nearest_rank_quantile(lengths, 0.90),
    };
}

nlohmann::json percentiles_json(const Percentiles& p) {
    return {{"p10", p.p10}, {"p25", p.p25}, {"p50", p.p50}, {"p75", p.p75}, {"p90", p.p90}};
}

}  // namespace

ValidationReport validate_corpus(const OccupationSet& occupations, const StartupSet& startups,
                                 const SkillRatings& skills, const AbilityRatings& abilities,
                                 const JobZoneMap& zones) {
    ValidationReport report;
    report.n_occupations = occupations.size();
    report.n_startups = startups.size();
    report.n_skill_records = skills.record_count();

    std::vector<double> occupation_lengths;
    for (const auto& occupation : occupations) {
        occupation_lengths.push_back(static_cast<double>(occupation.description.size()));
        if (!zones.contains(occupation.soc_code)) {
            report.occupations_missing_zone.push_back(occupation.soc_code);
        }
        if (!abilities.aioe_eligible(occupation.soc_code)) {
            report.occupations_not_aioe_eligible.push_back(occupation.soc_code);
        }
        if (occupation.description.empty()) {
            report.fatal.push_back(
                fmt::format("occupation '{}' has an empty description", occupation.soc_code));
        }
    }
    report.n_aioe_eligible = report.n_occupations - report.occupations_not_aioe_eligible.size();
    report.occupation_desc_chars = length_percentiles(std::move(occupation_lengths));

    auto ai = TagFilter::builtin_ai();
    auto robotics = TagFilter::builtin_robotics();
    std::vector<double> long_lengths;
    std::vector<double> short_lengths;
    for (const auto& [id, startup] : startups) {
        long_lengths.push_back(static_cast<double>(startup.long_desc.size()));
        short_lengths.push_back(static_cast<double>(startup.short_desc.size()));
        if (!ai.matches(startup)) {
            report.startups_unmatched_ai.push_back(id);
        }
        if (!robotics.matches(startup)) {
            report.startups_unmatched_robotics.push_back(id);
        }
        if (startup.short_desc.empty() && startup.long_desc.empty()) {
            report.fatal.push_back(fmt::format("startup '{}' has no description", id));
        }
    }
    report.startup_long_desc_chars = length_percentiles(std::move(long_lengths));
    report.startup_short_desc_chars = length_percentiles(std::move(short_lengths));
    return report;
}

std::string validation_report_json(const ValidationReport& report) {
    nlohmann::json doc;
    doc["counts"] = {
        {"occupations", report.n_occupations},
        {"startups", report.n_startups},
        {"aioe_eligible", report.n_aioe_eligible},
        {"skill_records", report.n_skill_records},
    };
    doc["occupations_missing_zone"] = report.occupations_missing_zone;
    doc["occupations_not_aioe_eligible"] = report.occupations_not_aioe_eligible;
    doc["startups_unmatched_ai"] = report.startups_unmatched_ai;
    doc["startups_unmatched_robotics"] = report.startups_unmatched_robotics;
    doc["description_length_chars"] = {
        {"occupation", percentiles_json(report.occupation_desc_chars)},
        {"startup_long", percentiles_json(report.startup_long_desc_chars)},
        {"startup_short", percentiles_json(report.startup_short_desc_chars)},
    };
    doc["fatal"] = report.fatal;
    return doc.dump(2) + "\n";
}

void print_validation_report(const ValidationReport& report, std::ostream& out) {
    fmt::print(out, "occupations: {}\n", report.n_occupations);
    fmt::print(out, "  missing job zone: {}\n", report.occupations_missing_zone.size());
    fmt::print(out, "  AIOE-eligible: {}\n", report.n_aioe_eligible);
    fmt::print(out, "startups: {}\n", report.n_startups);
    fmt::print(out, "  unmatched by 'ai' filter: {}\n", report.startups_unmatched_ai.size());
    fmt::print(out, "  unmatched by 'robotics' filter: {}\n",
               report.startups_unmatched_robotics.size());
    fmt::print(out, "skill importance records: {}\n", report.n_skill_records);
    if (report.fatal.empty()) {
        fmt::print(out, "fatal findings: none\n");
    } else {
        fmt::print(out, "fatal findings:\n");
        for (const auto& finding : report.fatal) {
            fmt::print(out, "  - {}\n", finding);
        }
    }
}

}  // namespace aise::ingest
