#include "aise/cache.hpp"

#include "aise/errors.hpp"
#include "aise/hash.hpp"

#include <fmt/chrono.h>
#include <fmt/format.h>
#include <json.hpp>

#include <chrono>

namespace aise::llm {

using nlohmann::json;

std::string cache_key(const std::string& model_id, PromptVariant variant,
                      const std::string& startup_desc, const std::string& occupation_desc) {
    // \x1f separators make the concatenation injective for sane inputs.
    return hash::sha256_hex(fmt::format("{}\x1f{}\x1f{}\x1f{}", model_id, variant_name(variant),
                                        startup_desc, occupation_desc));
}

std::string utc_timestamp() {
    auto now = std::chrono::system_clock::now();
    return fmt::format("{:%FT%TZ}", fmt::gmtime(std::chrono::system_clock::to_time_t(now)));
}

VerdictCache::VerdictCache(std::filesystem::path path, PromptVariant variant,
                           std::string model_id)
    : path_(std::move(path)), variant_(variant), model_id_(std::move(model_id)) {
    if (path_.has_parent_path()) {
        std::filesystem::create_directories(path_.parent_path());
    }

    std::ifstream in(path_, std::ios::binary);
    if (in) {
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            json record = json::parse(line, nullptr, false);
            if (record.is_discarded() || !record.is_object()) continue;  // torn tail write
            if (!record.contains("key") || !record.contains("answer")) continue;
            // Records of other runs may share the file; only matching
            // (variant, model) entries enter the index. Keys already encode
            // both, so this is belt-and-braces filtering, not correctness.
            CacheRecord entry;
            auto answer = record.value("answer", "");
            entry.answer = answer == "yes"  ? Answer::yes
                           : answer == "no" ? Answer::no
                                            : Answer::unparseable;
            entry.raw_response = record.value("raw_response", "");
            entry.timestamp = record.value("timestamp", "");
            index_[record["key"].get<std::string>()] = std::move(entry);
        }
    }

    appender_.open(path_, std::ios::binary | std::ios::app);
    if (!appender_) {
        throw Error(Errc::missing_file, fmt::format("cannot open cache '{}'", path_.string()));
    }
}

std::optional<CacheRecord> VerdictCache::lookup(const std::string& key) const {
    std::shared_lock lock(mutex_);
    auto it = index_.find(key);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

void VerdictCache::put(const std::string& key, const CacheRecord& record) {
    json line = {
        {"key", key},
        {"variant", variant_name(variant_)},
        {"model", model_id_},
        {"answer", answer_name(record.answer)},
        {"raw_response", record.raw_response},
        {"timestamp", record.timestamp},
    };
    auto serialized = line.dump() + "\n";

    std::unique_lock lock(mutex_);
    index_[key] = record;
    appender_ << serialized;  // one full line per write keeps records atomic
    appender_.flush();
}

std::size_t VerdictCache::size() const {
    std::shared_lock lock(mutex_);
    return index_.size();
}

}  // namespace aise::llm
