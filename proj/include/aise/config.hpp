#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace aise::cli {

// One reproducible run: input paths, backend settings, and pipeline choices.
// Precedence: command-line flags > config file > these defaults.
struct RunConfig {
    // Input corpora; relative paths resolve against the config file directory.
    std::filesystem::path occupations;
    std::filesystem::path job_zones;
    std::filesystem::path skills;
    std::filesystem::path abilities;
    std::filesystem::path relatedness;
    std::filesystem::path snapshot;
    std::filesystem::path employment_msa;
    std::filesystem::path employment_sector;       // sector x occupation, national
    std::filesystem::path employment_county_sector;
    bool relatedness_strict = true;                // enforce the 10 x 52 grid

    // Backend
    std::string base_url = "http://localhost:8080";
    std::string endpoint_path = "/v1/chat/completions";
    std::string model_id = "llama3-8b";
    std::string api_key_env = "AISE_API_KEY";
    int concurrency = 4;
    double requests_per_second = 0.0;  // 0 = unthrottled
    int max_retries = 3;
    int backoff_ms = 250;
    bool fail_fast = false;
    bool mock = false;
    double mock_tau = 0.05;

    // Pipeline
    std::string variant = "replace_detailed";
    std::string filter = "ai";                  // ai | robotics | custom
    std::vector<std::string> custom_tags;       // used when filter == "custom"
    std::string policy = "definitive";          // | total
    double skill_threshold = 4.0;
    std::size_t top_n = 10;

    // Outputs
    std::filesystem::path out_dir = "out";
    std::filesystem::path cache_file;  // default: <out_dir>/verdict_cache.jsonl

    std::filesystem::path resolved_cache_file() const {
        return cache_file.empty() ? out_dir / "verdict_cache.jsonl" : cache_file;
    }
    // The startup-exposure index this run produces: aise, rse, or the custom
    // filter's name.
    std::string startup_index_kind() const;
};

// Reads a JSON config file and overlays it on the defaults.
RunConfig load_config(const std::filesystem::path& path);

// Throws InvalidConfig on out-of-range settings or unknown names.
void validate_config(const RunConfig& config);

}  // namespace aise::cli
