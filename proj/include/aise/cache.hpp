#pragma once

#include "aise/prompt.hpp"

#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>

namespace aise::llm {

// Deterministic content key for one (model, variant, startup, occupation)
// classification; descriptions must already be whitespace-normalized.
std::string cache_key(const std::string& model_id, PromptVariant variant,
                      const std::string& startup_desc, const std::string& occupation_desc);

struct CacheRecord {
    Answer answer = Answer::unparseable;
    std::string raw_response;
    std::string timestamp;  // ISO-8601 UTC, audit only
};

// Append-only file-backed verdict store. Records are single JSONL lines
// written atomically under a lock; the full index is rebuilt at startup, the
// last record for a key winning. Concurrent readers, serialized writers.
class VerdictCache {
  public:
    // Opens (creating directories as needed) and indexes the log file.
    VerdictCache(std::filesystem::path path, PromptVariant variant, std::string model_id);

    std::optional<CacheRecord> lookup(const std::string& key) const;
    void put(const std::string& key, const CacheRecord& record);

    std::size_t size() const;
    const std::filesystem::path& path() const { return path_; }

  private:
    std::filesystem::path path_;
    PromptVariant variant_;
    std::string model_id_;
    std::unordered_map<std::string, CacheRecord> index_;
    std::ofstream appender_;
    mutable std::shared_mutex mutex_;
};

std::string utc_timestamp();

}  // namespace aise::llm
