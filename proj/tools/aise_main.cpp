#include "aise/commands.hpp"
#include "aise/config.hpp"
#include "aise/errors.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <iostream>
#include <optional>

namespace {

// Exit codes: 0 ok, 1 validation/config failure, 2 backend failure,
// 3 missing upstream artifact.
int exit_code_for(const aise::Error& error) {
    switch (error.code()) {
    case aise::Errc::backend_unreachable: return 2;
    case aise::Errc::missing_artifact: return 3;
    default: return 1;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Occupational AI exposure pipeline: classify startup x occupation pairs "
                 "through a chat-completion backend and derive AISE/RSE/AIOE analytics"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may appear after the subcommand

    std::string config_path;
    std::string out_dir;
    std::string cache_file;
    std::string variant;
    std::string filter;
    std::string policy;
    std::string model_id;
    std::string base_url;
    int concurrency = 0;
    double tau = -1.0;
    bool mock = false;
    bool fail_fast = false;

    app.add_option("--config", config_path, "JSON run configuration")->envname("AISE_CONFIG");
    app.add_option("--out-dir", out_dir, "output directory (overrides config)");
    app.add_option("--cache-file", cache_file, "verdict cache path (overrides config)");
    app.add_option("--variant", variant,
                   "prompt variant: replace_detailed | replace_short | designed_detailed");
    app.add_option("--filter", filter, "startup tag filter: ai | robotics | <custom>");
    app.add_option("--policy", policy, "denominator policy: definitive | total");
    app.add_option("--model", model_id, "backend model identifier");
    app.add_option("--base-url", base_url, "chat-completion endpoint base URL (http://...)");
    app.add_option("--concurrency", concurrency, "in-flight request limit");
    app.add_option("--tau", tau, "mock backend similarity threshold");
    app.add_flag("--mock", mock, "use the deterministic offline mock backend");
    app.add_flag("--fail-fast", fail_fast, "abort on backend failure instead of recording");

    auto* ingest = app.add_subcommand("ingest", "load and validate all configured inputs");
    auto* classify = app.add_subcommand("classify", "run the startup x occupation classification");
    auto* compute = app.add_subcommand("compute", "compute an exposure index from artifacts");
    std::string index;
    compute->add_option("index", index, "aise | rse | aioe")->required();
    auto* aggregate = app.add_subcommand("aggregate", "employment-weighted group exposure");
    std::string level;
    aggregate->add_option("level", level, "msa | sector | county")->required();
    auto* analyze = app.add_subcommand("analyze", "correlations, regions, skills, zones, rankings");
    auto* all = app.add_subcommand("all", "run the whole pipeline");

    CLI11_PARSE(app, argc, argv);

    try {
        aise::cli::RunConfig config;
        if (!config_path.empty()) {
            config = aise::cli::load_config(config_path);
        }
        if (!out_dir.empty()) config.out_dir = out_dir;
        if (!cache_file.empty()) config.cache_file = cache_file;
        if (!variant.empty()) config.variant = variant;
        if (!filter.empty()) config.filter = filter;
        if (!policy.empty()) config.policy = policy;
        if (!model_id.empty()) config.model_id = model_id;
        if (!base_url.empty()) config.base_url = base_url;
        if (concurrency > 0) config.concurrency = concurrency;
        if (tau >= 0.0) config.mock_tau = tau;
        if (mock) config.mock = true;
        if (fail_fast) config.fail_fast = true;
        aise::cli::validate_config(config);

        if (ingest->parsed()) {
            auto report = aise::cli::cmd_ingest(config, std::cout);
            return report.ok() ? 0 : 1;
        }
        if (classify->parsed()) {
            aise::cli::cmd_classify(config, std::cout);
        } else if (compute->parsed()) {
            aise::cli::cmd_compute(config, index, std::cout);
        } else if (aggregate->parsed()) {
            aise::cli::cmd_aggregate(config, level, std::cout);
        } else if (analyze->parsed()) {
            aise::cli::cmd_analyze(config, std::cout);
        } else if (all->parsed()) {
            if (!aise::cli::cmd_all(config, std::cout)) {
                return 1;
            }
        }
        return 0;
    } catch (const aise::Error& error) {
        fmt::print(stderr, "error: {}\n", error.what());
        return exit_code_for(error);
    } catch (const std::exception& error) {
        fmt::print(stderr, "error: {}\n", error.what());
        return 1;
    }
}
