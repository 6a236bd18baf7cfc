#include "aise/config.hpp"

#include "aise/errors.hpp"
#include "aise/exposure.hpp"
#include "aise/prompt.hpp"

#include <fmt/format.h>
#include <json.hpp>

#include <fstream>

namespace aise::cli {

using nlohmann::json;

std::string RunConfig::startup_index_kind() const {
    if (filter == "ai") return "aise";
    if (filter == "robotics") return "rse";
    return filter;
}

namespace {

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& value) {
    std::filesystem::path p(value);
    return p.is_absolute() ? p : base / p;
}

}  // namespace

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(Errc::missing_file, fmt::format("config '{}' not found", path.string()));
    }
    json doc = json::parse(in, nullptr, false);
    if (doc.is_discarded() || !doc.is_object()) {
        throw Error(Errc::invalid_config, fmt::format("'{}' is not a JSON object", path.string()));
    }

    RunConfig config;
    auto base = path.has_parent_path() ? path.parent_path() : std::filesystem::path(".");

    auto path_field = [&](const char* key, std::filesystem::path& target) {
        if (doc.contains(key)) target = resolve(base, doc[key].get<std::string>());
    };
    path_field("occupations", config.occupations);
    path_field("job_zones", config.job_zones);
    path_field("skills", config.skills);
    path_field("abilities", config.abilities);
    path_field("relatedness", config.relatedness);
    path_field("snapshot", config.snapshot);
    path_field("employment_msa", config.employment_msa);
    path_field("employment_sector", config.employment_sector);
    path_field("employment_county_sector", config.employment_county_sector);
    path_field("out_dir", config.out_dir);
    path_field("cache_file", config.cache_file);

    config.relatedness_strict = doc.value("relatedness_strict", config.relatedness_strict);
    config.base_url = doc.value("base_url", config.base_url);
    config.endpoint_path = doc.value("endpoint_path", config.endpoint_path);
    config.model_id = doc.value("model_id", config.model_id);
    config.api_key_env = doc.value("api_key_env", config.api_key_env);
    config.concurrency = doc.value("concurrency", config.concurrency);
    config.requests_per_second = doc.value("requests_per_second", config.requests_per_second);
    config.max_retries = doc.value("max_retries", config.max_retries);
    config.backoff_ms = doc.value("backoff_ms", config.backoff_ms);
    config.fail_fast = doc.value("fail_fast", config.fail_fast);
    config.mock = doc.value("mock", config.mock);
    config.mock_tau = doc.value("mock_tau", config.mock_tau);
    config.variant = doc.value("variant", config.variant);
    config.filter = doc.value("filter", config.filter);
    config.custom_tags = doc.value("custom_tags", config.custom_tags);
    config.policy = doc.value("policy", config.policy);
    config.skill_threshold = doc.value("skill_threshold", config.skill_threshold);
    config.top_n = doc.value("top_n", config.top_n);
    return config;
}

void validate_config(const RunConfig& config) {
    if (config.concurrency < 1) {
        throw Error(Errc::invalid_config, "concurrency must be >= 1");
    }
    if (config.mock_tau < 0.0 || config.mock_tau > 1.0) {
        throw Error(Errc::invalid_config,
                    fmt::format("mock tau {} is outside [0,1]", config.mock_tau));
    }
    if (!llm::variant_from_name(config.variant)) {
        throw Error(Errc::invalid_config,
                    fmt::format("unknown prompt variant '{}'", config.variant));
    }
    if (!exposure::policy_from_name(config.policy)) {
        throw Error(Errc::invalid_config,
                    fmt::format("unknown denominator policy '{}'", config.policy));
    }
    if (config.filter != "ai" && config.filter != "robotics" && config.custom_tags.empty()) {
        throw Error(Errc::invalid_config,
                    fmt::format("filter '{}' needs custom_tags", config.filter));
    }
    if (config.max_retries < 0 || config.backoff_ms < 0) {
        throw Error(Errc::invalid_config, "retry settings must be non-negative");
    }
}

}  // namespace aise::cli
