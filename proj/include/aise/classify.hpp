#pragma once

#include "aise/backend.hpp"
#include "aise/cache.hpp"
#include "aise/prompt.hpp"
#include "aise/types.hpp"

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace aise::llm {

struct Verdict {
    std::string soc_code;
    std::string startup_id;
    PromptVariant variant = PromptVariant::replace_detailed;
    Answer answer = Answer::unparseable;
    std::string raw_response;  // verbatim reply, or the error note on failure
    std::string model_id;
    bool retrieved_from_cache = false;
    std::string timestamp;
};

// The occupation x startup grid of parsed answers for one variant.
struct VerdictMatrix {
    std::vector<std::string> occupations;  // row order
    std::vector<std::string> startups;     // column order
    PromptVariant variant = PromptVariant::replace_detailed;
    std::string model_id;
    std::string startup_set_label;
    std::vector<std::vector<Answer>> cells;            // occupations x startups
    std::map<std::string, std::string> input_hashes;   // provenance
    double coverage() const;                           // definitive / total

    Answer at(std::size_t occupation_idx, std::size_t startup_idx) const {
        return cells[occupation_idx][startup_idx];
    }
};

struct ClassifyOptions {
    int max_retries = 3;        // transport retries per request
    int backoff_initial_ms = 250;
    bool fail_fast = false;     // throw BackendUnreachableAfterRetries instead of recording
};

// Cache-first classification of one pair. On a miss the backend is queried
// with the rendered prompt and the parsed verdict is written through; content
// that fails to parse is asked once more before being recorded. Transport
// failures are retried with exponential backoff and, in lenient mode, end as
// an uncached unparseable verdict so a later run can retry them.
Verdict classify_pair(ChatBackend& backend, VerdictCache& cache, PromptVariant variant,
                      const Startup& startup, const Occupation& occupation,
                      const ClassifyOptions& options = {});

struct RunStats {
    std::uint64_t pairs = 0;
    std::uint64_t backend_calls = 0;
    std::uint64_t cache_hits = 0;
    std::uint64_t unparseable = 0;
};

// Classifies every (occupation, startup) pair with up to `concurrency`
// in-flight requests. The resulting matrix depends only on the inputs and the
// backend's answers, never on scheduling; progress is checkpointed through
// the cache, so an interrupted run resumes where it stopped.
VerdictMatrix run_classification(ChatBackend& backend, VerdictCache& cache, PromptVariant variant,
                                 const StartupSet& startups, const OccupationSet& occupations,
                                 int concurrency, const ClassifyOptions& options = {},
                                 RunStats* stats = nullptr);

// Matrix artifact: a deterministic JSON document (no timestamps).
void save_matrix(const VerdictMatrix& matrix, const std::filesystem::path& path);
VerdictMatrix load_matrix(const std::filesystem::path& path);

}  // namespace aise::llm
