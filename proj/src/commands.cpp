#include "aise/commands.hpp"

#include "aise/aggregate.hpp"
#include "aise/analytics.hpp"
#include "aise/backend.hpp"
#include "aise/cache.hpp"
#include "aise/classify.hpp"
#include "aise/csv.hpp"
#include "aise/errors.hpp"
#include "aise/exposure.hpp"
#include "aise/hash.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <ostream>

namespace aise::cli {

using nlohmann::json;

namespace {

void require_input(const std::filesystem::path& path, const char* what) {
    if (path.empty()) {
        throw Error(Errc::invalid_config, fmt::format("no {} file configured", what));
    }
}

TagFilter make_filter(const RunConfig& config) {
    if (config.filter == "ai") return TagFilter::builtin_ai();
    if (config.filter == "robotics") return TagFilter::builtin_robotics();
    return TagFilter::custom(config.filter, config.custom_tags);
}

llm::PromptVariant variant_of(const RunConfig& config) {
    auto variant = llm::variant_from_name(config.variant);
    if (!variant) {
        throw Error(Errc::invalid_config, fmt::format("unknown variant '{}'", config.variant));
    }
    return *variant;
}

std::unique_ptr<llm::ChatBackend> make_backend(const RunConfig& config) {
    if (config.mock) {
        return std::make_unique<llm::MockBackend>(config.mock_tau);
    }
    llm::HttpBackendConfig http;
    http.base_url = config.base_url;
    http.endpoint_path = config.endpoint_path;
    http.model_id = config.model_id;
    http.requests_per_second = config.requests_per_second;
    if (const char* key = std::getenv(config.api_key_env.c_str())) {
        http.api_key = key;
    }
    return llm::make_http_backend(http);
}

void write_text(const std::filesystem::path& path, const std::string& content) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(Errc::missing_file, fmt::format("cannot write '{}'", path.string()));
    }
    out << content;
}

}  // namespace

std::filesystem::path matrix_artifact_path(const RunConfig& config) {
    return config.out_dir / fmt::format("verdicts_{}_{}.json", config.filter, config.variant);
}

std::filesystem::path scores_artifact_path(const RunConfig& config, const std::string& index) {
    return config.out_dir / fmt::format("scores_{}.csv", index);
}

std::filesystem::path groups_artifact_path(const RunConfig& config, const std::string& level) {
    return config.out_dir / fmt::format("groups_{}.csv", level);
}

ingest::ValidationReport cmd_ingest(const RunConfig& config, std::ostream& out) {
    require_input(config.occupations, "occupations");
    require_input(config.snapshot, "startup snapshot");

    auto occupations = ingest::load_occupations(config.occupations);
    auto startups = ingest::load_startups(config.snapshot);
    JobZoneMap zones;
    if (!config.job_zones.empty()) {
        zones = ingest::load_job_zones(config.job_zones);
    }
    SkillRatings skills;
    if (!config.skills.empty()) {
        skills = ingest::load_skill_ratings(config.skills);
    }
    AbilityRatings abilities;
    if (!config.abilities.empty()) {
        abilities = ingest::load_ability_ratings(config.abilities);
    }
    if (!config.relatedness.empty()) {
        // Shape problems should surface at ingest time, not mid-pipeline.
        if (config.relatedness_strict) {
            ingest::load_relatedness_matrix(config.relatedness);
        } else {
            ingest::load_relatedness_matrix(config.relatedness, 0, 0);
        }
    }
    if (!config.employment_msa.empty()) {
        ingest::load_employment(config.employment_msa, TableKind::area_occupation);
    }
    if (!config.employment_sector.empty()) {
        ingest::load_employment(config.employment_sector, TableKind::sector_occupation);
    }
    if (!config.employment_county_sector.empty()) {
        ingest::load_employment(config.employment_county_sector, TableKind::area_sector);
    }

    auto report = ingest::validate_corpus(occupations, startups, skills, abilities, zones);
    write_text(config.out_dir / "validation_report.json", ingest::validation_report_json(report));
    ingest::print_validation_report(report, out);
    return report;
}

void cmd_classify(const RunConfig& config, std::ostream& out) {
    require_input(config.occupations, "occupations");
    require_input(config.snapshot, "startup snapshot");

    auto occupations = ingest::load_occupations(config.occupations);
    auto startups = ingest::load_startups(config.snapshot);
    auto filter = make_filter(config);
    auto filtered = filter_by_tags(startups, filter);
    if (filtered.empty()) {
        throw Error(Errc::empty_matrix,
                    fmt::format("no startup matches the '{}' filter", filter.name));
    }

    auto backend = make_backend(config);
    llm::VerdictCache cache(config.resolved_cache_file(), variant_of(config),
                            backend->model_id());
    llm::ClassifyOptions options{
        .max_retries = config.max_retries,
        .backoff_initial_ms = config.backoff_ms,
        .fail_fast = config.fail_fast,
    };
    llm::RunStats stats;
    auto matrix = llm::run_classification(*backend, cache, variant_of(config), filtered,
                                          occupations, config.concurrency, options, &stats);
    matrix.startup_set_label = filter.name;
    matrix.input_hashes = {
        {"occupations", hash::sha256_file(config.occupations)},
        {"snapshot", hash::sha256_file(config.snapshot)},
    };

    auto path = matrix_artifact_path(config);
    llm::save_matrix(matrix, path);
    fmt::print(out,
               "classified {} occupations x {} startups: pairs={} backend_calls={} "
               "cache_hits={} unparseable={} coverage={:.6f}\n",
               matrix.occupations.size(), matrix.startups.size(), stats.pairs,
               stats.backend_calls, stats.cache_hits, stats.unparseable, matrix.coverage());
    fmt::print(out, "wrote {}\n", path.string());
}

namespace {

void compute_startup_index(const RunConfig& config, const std::string& index, std::ostream& out) {
    if (index != config.startup_index_kind()) {
        throw Error(Errc::invalid_config,
                    fmt::format("index '{}' does not match the configured '{}' filter (use "
                                "--filter to switch)",
                                index, config.filter));
    }
    auto matrix = llm::load_matrix(matrix_artifact_path(config));
    auto policy = exposure::policy_from_name(config.policy);
    auto scores = exposure::compute_startup_exposure(matrix, *policy, index);
    scores.meta.input_hashes["verdict_matrix"] = hash::sha256_file(matrix_artifact_path(config));

    auto occupations = ingest::load_occupations(config.occupations);
    auto path = scores_artifact_path(config, index);
    exposure::save_scores(scores, occupations, path);
    fmt::print(out, "computed {} for {} occupations (policy={})\n", index, scores.scores.size(),
               config.policy);
    fmt::print(out, "wrote {}\n", path.string());
}

void compute_aioe(const RunConfig& config, std::ostream& out) {
    require_input(config.abilities, "abilities");
    require_input(config.relatedness, "relatedness matrix");

    auto ratings = ingest::load_ability_ratings(config.abilities);
    auto matrix = config.relatedness_strict
                      ? ingest::load_relatedness_matrix(config.relatedness)
                      : ingest::load_relatedness_matrix(config.relatedness, 0, 0);
    auto exposure_vector = exposure::ability_exposure(matrix);
    auto scores = exposure::compute_aioe(exposure_vector, ratings);
    scores.meta.input_hashes = {
        {"abilities", hash::sha256_file(config.abilities)},
        {"relatedness", hash::sha256_file(config.relatedness)},
    };

    OccupationSet occupations;
    if (!config.occupations.empty()) {
        occupations = ingest::load_occupations(config.occupations);
    }
    auto path = scores_artifact_path(config, "aioe");
    exposure::save_scores(scores, occupations, path);
    fmt::print(out, "computed aioe for {} occupations ({} ability columns)\n",
               scores.scores.size(), matrix.abilities.size());
    for (const auto& warning : scores.meta.warnings) {
        fmt::print(out, "warning: {}\n", warning);
    }
    fmt::print(out, "wrote {}\n", path.string());
}

}  // namespace

void cmd_compute(const RunConfig& config, const std::string& index, std::ostream& out) {
    if (index == "aioe") {
        compute_aioe(config, out);
    } else {
        compute_startup_index(config, index, out);
    }
}

void cmd_aggregate(const RunConfig& config, const std::string& level, std::ostream& out) {
    auto scores_path = scores_artifact_path(config, config.startup_index_kind());
    auto scores = exposure::load_scores(scores_path);

    agg::GroupScores groups;
    if (level == "msa") {
        require_input(config.employment_msa, "MSA employment");
        auto table = ingest::load_employment(config.employment_msa, TableKind::area_occupation);
        groups = agg::group_exposure(scores, table, "msa", TableKind::area_occupation);
        groups.input_hashes = {
            {"scores", hash::sha256_file(scores_path)},
            {"employment", hash::sha256_file(config.employment_msa)},
        };
    } else if (level == "sector") {
        require_input(config.employment_sector, "sector employment");
        auto table = ingest::load_employment(config.employment_sector,
                                             TableKind::sector_occupation);
        groups = agg::group_exposure(scores, table, "sector", TableKind::sector_occupation);
        groups.input_hashes = {
            {"scores", hash::sha256_file(scores_path)},
            {"employment", hash::sha256_file(config.employment_sector)},
        };
    } else if (level == "county") {
        require_input(config.employment_sector, "sector employment");
        require_input(config.employment_county_sector, "county x sector employment");
        auto national = ingest::load_employment(config.employment_sector,
                                                TableKind::sector_occupation);
        auto county = ingest::load_employment(config.employment_county_sector,
                                              TableKind::area_sector);
        groups = agg::county_projection(scores, national, county);
        groups.input_hashes = {
            {"scores", hash::sha256_file(scores_path)},
            {"employment_national", hash::sha256_file(config.employment_sector)},
            {"employment_county", hash::sha256_file(config.employment_county_sector)},
        };
    } else {
        throw Error(Errc::invalid_config,
                    fmt::format("unknown aggregation level '{}' (msa|sector|county)", level));
    }

    auto path = groups_artifact_path(config, level);
    agg::save_group_scores(groups, path);
    fmt::print(out, "aggregated {} groups at level {}\n", groups.entries.size(), level);
    for (const auto& warning : groups.warnings) {
        fmt::print(out, "warning: {}\n", warning);
    }
    fmt::print(out, "wrote {}\n", path.string());
}

void cmd_analyze(const RunConfig& config, std::ostream& out) {
    const auto startup_index = config.startup_index_kind();
    auto startup_path = scores_artifact_path(config, startup_index);
    auto aioe_path = scores_artifact_path(config, "aioe");
    auto startup_scores = exposure::load_scores(startup_path);
    auto aioe_scores = exposure::load_scores(aioe_path);

    auto occupations = ingest::load_occupations(config.occupations);
    JobZoneMap zones;
    if (!config.job_zones.empty()) {
        zones = ingest::load_job_zones(config.job_zones);
    }
    SkillRatings skills;
    if (!config.skills.empty()) {
        skills = ingest::load_skill_ratings(config.skills);
    }

    auto comparison = analytics::compare_indices(startup_scores, aioe_scores);
    auto regions = analytics::assign_regions(aioe_scores, startup_scores);

    // Scatter table: one row per startup-index occupation.
    std::string scatter = "soc_code,aise,aioe,job_zone,region\n";
    for (const auto& [soc, score] : startup_scores.scores) {
        auto aioe_it = aioe_scores.scores.find(soc);
        auto zone_it = zones.find(soc);
        auto region_it = regions.region.find(soc);
        scatter += csv::format_row({
            soc,
            fmt::format("{}", score),
            aioe_it == aioe_scores.scores.end() ? "" : fmt::format("{}", aioe_it->second),
            zone_it == zones.end() ? "" : std::to_string(zone_it->second),
            region_it == regions.region.end() ? "not_available"
                                              : analytics::region_name(region_it->second),
        });
    }
    write_text(config.out_dir / "scatter.csv", scatter);

    // Crucial-skill frequencies per region slice at the configured threshold
    // plus the lower variant.
    std::vector<double> thresholds = {config.skill_threshold};
    if (config.skill_threshold != 3.0) thresholds.push_back(3.0);
    std::string skill_rows = "region,threshold,skill_id,skill_name,frequency\n";
    std::vector<std::pair<std::string, std::set<std::string>>> slices = {
        {"a", analytics::region_members(regions, analytics::Region::a)},
        {"b", analytics::region_members(regions, analytics::Region::b)},
        {"c", analytics::region_members(regions, analytics::Region::c)},
        {"top_c", analytics::c_sub_members(regions, analytics::CSub::top_c)},
        {"mid_c", analytics::c_sub_members(regions, analytics::CSub::mid_c)},
        {"bottom_c", analytics::c_sub_members(regions, analytics::CSub::bottom_c)},
    };
    for (double threshold : thresholds) {
        for (const auto& [label, members] : slices) {
            if (members.empty()) continue;
            auto frequencies = analytics::crucial_skill_frequency(members, skills, threshold);
            for (const auto& [skill_id, frequency] : frequencies) {
                skill_rows += csv::format_row({
                    label,
                    fmt::format("{}", threshold),
                    skill_id,
                    skills.skills().at(skill_id),
                    fmt::format("{}", frequency),
                });
            }
        }
    }
    write_text(config.out_dir / "skill_frequency.csv", skill_rows);

    // Box statistics of the startup index per job zone, overall and per
    // AIOE tertile.
    std::string zone_rows =
        "region,zone,n,mean,median,q1,q3,whisker_low,whisker_high,outliers\n";
    std::vector<std::pair<std::string, std::optional<std::set<std::string>>>> zone_slices = {
        {"all", std::nullopt},
        {"a", analytics::region_members(regions, analytics::Region::a)},
        {"b", analytics::region_members(regions, analytics::Region::b)},
        {"c", analytics::region_members(regions, analytics::Region::c)},
    };
    for (const auto& [label, members] : zone_slices) {
        auto stats = analytics::job_zone_distribution(startup_scores, zones, members);
        for (const auto& [zone, box] : stats) {
            std::string outliers;
            for (double v : box.outliers) {
                if (!outliers.empty()) outliers += ";";
                outliers += fmt::format("{}", v);
            }
            zone_rows += csv::format_row({
                label,
                zone,
                std::to_string(box.n),
                fmt::format("{}", box.mean),
                fmt::format("{}", box.median),
                fmt::format("{}", box.q1),
                fmt::format("{}", box.q3),
                fmt::format("{}", box.whisker_low),
                fmt::format("{}", box.whisker_high),
                outliers,
            });
        }
    }
    write_text(config.out_dir / "zone_stats.csv", zone_rows);

    // Rankings for both indices.
    std::string ranking_rows = "index,direction,rank,soc_code,title,score\n";
    auto append_rankings = [&](const exposure::ExposureScores& scores, const std::string& index) {
        for (auto direction : {analytics::RankDirection::top, analytics::RankDirection::bottom}) {
            auto ranked = analytics::rank_occupations(scores, occupations, config.top_n, direction);
            for (std::size_t i = 0; i < ranked.size(); ++i) {
                ranking_rows += csv::format_row({
                    index,
                    direction == analytics::RankDirection::top ? "top" : "bottom",
                    std::to_string(i + 1),
                    ranked[i].soc_code,
                    ranked[i].title,
                    fmt::format("{}", ranked[i].score),
                });
            }
        }
    };
    append_rankings(startup_scores, startup_index);
    append_rankings(aioe_scores, "aioe");
    write_text(config.out_dir / "rankings.csv", ranking_rows);

    // Run summary.
    auto count_region = [&](analytics::Region r) {
        return analytics::region_members(regions, r).size();
    };
    auto count_sub = [&](analytics::CSub s) { return analytics::c_sub_members(regions, s).size(); };
    json summary;
    summary["comparison"] = {
        {"n_common", comparison.n_common},
        {"pearson", comparison.pearson},
        {"kendall_tau_b", comparison.kendall_tau_b},
    };
    auto stats_json = [](const analytics::SummaryStats& s) {
        return json{{"n", s.n},   {"mean", s.mean},     {"min", s.min},
                    {"q1", s.q1}, {"median", s.median}, {"q3", s.q3},
                    {"max", s.max}};
    };
    summary["index_stats"] = {
        {startup_index, stats_json(comparison.stats_a)},
        {"aioe", stats_json(comparison.stats_b)},
    };
    summary["region_sizes"] = {
        {"a", count_region(analytics::Region::a)},
        {"b", count_region(analytics::Region::b)},
        {"c", count_region(analytics::Region::c)},
        {"not_available", count_region(analytics::Region::not_available)},
        {"top_c", count_sub(analytics::CSub::top_c)},
        {"mid_c", count_sub(analytics::CSub::mid_c)},
        {"bottom_c", count_sub(analytics::CSub::bottom_c)},
    };
    summary["inputs"] = {
        {"startup_scores", hash::sha256_file(startup_path)},
        {"aioe_scores", hash::sha256_file(aioe_path)},
    };
    if (!config.job_zones.empty()) {
        summary["inputs"]["job_zones"] = hash::sha256_file(config.job_zones);
    }
    if (!config.skills.empty()) {
        summary["inputs"]["skills"] = hash::sha256_file(config.skills);
    }
    summary["settings"] = {
        {"startup_index", startup_index},
        {"variant", config.variant},
        {"policy", config.policy},
        {"skill_threshold", config.skill_threshold},
        {"top_n", config.top_n},
    };
    write_text(config.out_dir / "run_summary.json", summary.dump(2) + "\n");

    fmt::print(out, "compared {} common occupations: pearson={:.6f} kendall_tau_b={:.6f}\n",
               comparison.n_common, comparison.pearson, comparison.kendall_tau_b);
    fmt::print(out, "wrote {}\n", (config.out_dir / "run_summary.json").string());
}

bool cmd_all(const RunConfig& config, std::ostream& out) {
    auto report = cmd_ingest(config, out);
    if (!report.ok()) {
        return false;
    }
    cmd_classify(config, out);
    cmd_compute(config, config.startup_index_kind(), out);

    const bool with_aioe = !config.abilities.empty() && !config.relatedness.empty();
    if (with_aioe) {
        cmd_compute(config, "aioe", out);
    }
    if (!config.employment_msa.empty()) {
        cmd_aggregate(config, "msa", out);
    }
    if (!config.employment_sector.empty()) {
        cmd_aggregate(config, "sector", out);
    }
    if (!config.employment_sector.empty() && !config.employment_county_sector.empty()) {
        cmd_aggregate(config, "county", out);
    }
    if (with_aioe) {
        cmd_analyze(config, out);
    }
    return true;
}

}  // namespace aise::cli
