#pragma once

#include "aise/config.hpp"
#include "aise/ingest.hpp"

#include <iosfwd>
#include <string>

namespace aise::cli {

// Pipeline stages behind the CLI subcommands. Stages communicate through
// files under config.out_dir so each one is independently re-runnable; every
// artifact embeds the SHA-256 of its inputs. All functions throw aise::Error.

// Loads and validates every configured corpus, writes
// <out>/validation_report.json, and returns the report (fatal findings mean a
// nonzero exit for the caller).
ingest::ValidationReport cmd_ingest(const RunConfig& config, std::ostream& out);

// Classifies the filtered startup set against all occupations and writes the
// verdict matrix artifact. Resumable through the verdict cache.
void cmd_classify(const RunConfig& config, std::ostream& out);

// index: "aise" | "rse" | the custom filter name | "aioe".
void cmd_compute(const RunConfig& config, const std::string& index, std::ostream& out);

// level: "msa" | "sector" | "county".
void cmd_aggregate(const RunConfig& config, const std::string& level, std::ostream& out);

// Comparison report, regions, skill frequencies, zone statistics, rankings.
void cmd_analyze(const RunConfig& config, std::ostream& out);

// ingest -> classify -> compute -> aggregate -> analyze over the configured
// inputs. Returns false when ingest reported fatal findings.
bool cmd_all(const RunConfig& config, std::ostream& out);

// Artifact locations, shared between stages and tests.
std::filesystem::path matrix_artifact_path(const RunConfig& config);
std::filesystem::path scores_artifact_path(const RunConfig& config, const std::string& index);
std::filesystem::path groups_artifact_path(const RunConfig& config, const std::string& level);

}  // namespace aise::cli
