#include "aise/classify.hpp"

#include "aise/errors.hpp"
#include "aise/text.hpp"

#include <fmt/format.h>
#include <json.hpp>

#include <atomic>
#include <exception>
#include <fstream>
#include <thread>

namespace aise::llm {

using nlohmann::json;

double VerdictMatrix::coverage() const {
    std::size_t total = 0;
    std::size_t definitive = 0;
    for (const auto& row : cells) {
        for (Answer answer : row) {
            ++total;
            if (answer != Answer::unparseable) ++definitive;
        }
    }
    return total == 0 ? 0.0 : static_cast<double>(definitive) / static_cast<double>(total);
}

namespace {

BackendReply query_with_retries(ChatBackend& backend, const RenderedPrompt& prompt,
                                const ClassifyOptions& options) {
    BackendReply reply;
    for (int attempt = 0; attempt <= options.max_retries; ++attempt) {
        if (attempt > 0) {
            auto delay = std::chrono::milliseconds(options.backoff_initial_ms) * (1 << (attempt - 1));
            std::this_thread::sleep_for(delay);
        }
        reply = backend.complete(prompt.system_text, prompt.user_text);
        if (reply.ok || !reply.retryable) {
            return reply;
        }
    }
    return reply;
}

}  // namespace

Verdict classify_pair(ChatBackend& backend, VerdictCache& cache, PromptVariant variant,
                      const Startup& startup, const Occupation& occupation,
                      const ClassifyOptions& options) {
    auto prompt = render_prompt(variant, startup, occupation);
    const std::string& startup_desc =
        variant == PromptVariant::replace_short ? startup.short_desc : startup.long_desc;
    auto key = cache_key(backend.model_id(), variant, startup_desc, occupation.description);

    Verdict verdict{
        .soc_code = occupation.soc_code,
        .startup_id = startup.id,
        .variant = variant,
        .model_id = backend.model_id(),
    };

    if (auto cached = cache.lookup(key)) {
        verdict.answer = cached->answer;
        verdict.raw_response = cached->raw_response;
        verdict.timestamp = cached->timestamp;
        verdict.retrieved_from_cache = true;
        return verdict;
    }

    auto reply = query_with_retries(backend, prompt, options);
    if (reply.ok) {
        verdict.answer = parse_verdict(reply.text);
        if (verdict.answer == Answer::unparseable) {
            // One more chance with the identical prompt before recording.
            auto second = query_with_retries(backend, prompt, options);
            if (second.ok) {
                reply = second;
                verdict.answer = parse_verdict(reply.text);
            }
        }
        verdict.raw_response = reply.text;
        verdict.timestamp = utc_timestamp();
        cache.put(key, CacheRecord{.answer = verdict.answer,
                                   .raw_response = verdict.raw_response,
                                   .timestamp = verdict.timestamp});
        return verdict;
    }

    if (options.fail_fast) {
        throw Error(Errc::backend_unreachable,
                    fmt::format("pair ({}, {}): {} after {} retries", occupation.soc_code,
                                startup.id, reply.text, options.max_retries));
    }
    // Lenient mode: note the failure but do NOT cache it, so a rerun retries.
    verdict.answer = Answer::unparseable;
    verdict.raw_response = fmt::format("[transport failure] {}", reply.text);
    verdict.timestamp = utc_timestamp();
    return verdict;
}

VerdictMatrix run_classification(ChatBackend& backend, VerdictCache& cache, PromptVariant variant,
                                 const StartupSet& startups, const OccupationSet& occupations,
                                 int concurrency, const ClassifyOptions& options,
                                 RunStats* stats) {
    if (startups.empty() || occupations.empty()) {
        throw Error(Errc::empty_matrix, "classification needs non-empty startup and occupation sets");
    }
    if (concurrency < 1) {
        throw Error(Errc::invalid_config, "concurrency must be >= 1");
    }

    VerdictMatrix matrix;
    matrix.variant = variant;
    matrix.model_id = backend.model_id();
    for (const auto& occupation : occupations) {
        matrix.occupations.push_back(occupation.soc_code);
    }
    std::vector<const Startup*> startup_ptrs;
    for (const auto& [id, startup] : startups) {
        matrix.startups.push_back(id);
        startup_ptrs.push_back(&startup);
    }
    const std::size_t n_rows = matrix.occupations.size();
    const std::size_t n_cols = matrix.startups.size();
    matrix.cells.assign(n_rows, std::vector<Answer>(n_cols, Answer::unparseable));

    const auto initial_calls = backend.call_count();
    std::atomic<std::uint64_t> cache_hits{0};
    std::atomic<std::uint64_t> unparseable{0};
    std::atomic<std::size_t> next{0};
    std::atomic<bool> abort{false};
    std::mutex failure_mutex;
    std::exception_ptr failure;

    auto worker = [&] {
        while (!abort.load(std::memory_order_relaxed)) {
            auto idx = next.fetch_add(1);
            if (idx >= n_rows * n_cols) return;
            auto row = idx / n_cols;
            auto col = idx % n_cols;
            try {
                auto verdict = classify_pair(backend, cache, variant, *startup_ptrs[col],
                                             occupations.items()[row], options);
                matrix.cells[row][col] = verdict.answer;
                if (verdict.retrieved_from_cache) cache_hits.fetch_add(1);
                if (verdict.answer == Answer::unparseable) unparseable.fetch_add(1);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                abort.store(true, std::memory_order_relaxed);
                return;
            }
        }
    };

    auto n_threads = std::min<std::size_t>(static_cast<std::size_t>(concurrency), n_rows * n_cols);
    std::vector<std::thread> threads;
    threads.reserve(n_threads);
    for (std::size_t i = 0; i < n_threads; ++i) {
        threads.emplace_back(worker);
    }
    for (auto& thread : threads) {
        thread.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }

    if (stats) {
        stats->pairs = n_rows * n_cols;
        stats->backend_calls = backend.call_count() - initial_calls;
        stats->cache_hits = cache_hits.load();
        stats->unparseable = unparseable.load();
    }
    return matrix;
}

namespace {

char answer_char(Answer answer) {
    switch (answer) {
    case Answer::yes: return 'y';
    case Answer::no: return 'n';
    case Answer::unparseable: return 'u';
    }
    return 'u';
}

Answer answer_from_char(char c) {
    switch (c) {
    case 'y': return Answer::yes;
    case 'n': return Answer::no;
    default: return Answer::unparseable;
    }
}

}  // namespace

void save_matrix(const VerdictMatrix& matrix, const std::filesystem::path& path) {
    json doc;
    doc["format"] = "verdict-matrix/1";
    doc["variant"] = variant_name(matrix.variant);
    doc["model"] = matrix.model_id;
    doc["startup_set"] = matrix.startup_set_label;
    doc["occupations"] = matrix.occupations;
    doc["startups"] = matrix.startups;
    std::vector<std::string> rows;
    rows.reserve(matrix.cells.size());
    for (const auto& row : matrix.cells) {
        std::string encoded(row.size(), 'u');
        for (std::size_t i = 0; i < row.size(); ++i) {
            encoded[i] = answer_char(row[i]);
        }
        rows.push_back(std::move(encoded));
    }
    doc["rows"] = rows;
    doc["coverage"] = matrix.coverage();
    doc["inputs"] = matrix.input_hashes;

    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(Errc::missing_file, fmt::format("cannot write '{}'", path.string()));
    }
    out << doc.dump(2) << '\n';
}

VerdictMatrix load_matrix(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(Errc::missing_artifact,
                    fmt::format("verdict matrix '{}' not found; run classify first", path.string()));
    }
    json doc = json::parse(in, nullptr, false);
    if (doc.is_discarded() || doc.value("format", "") != "verdict-matrix/1") {
        throw Error(Errc::missing_artifact,
                    fmt::format("'{}' is not a verdict matrix artifact", path.string()));
    }

    VerdictMatrix matrix;
    auto variant = variant_from_name(doc.value("variant", ""));
    if (!variant) {
        throw Error(Errc::missing_artifact,
                    fmt::format("'{}' names unknown prompt variant", path.string()));
    }
    matrix.variant = *variant;
    matrix.model_id = doc.value("model", "");
    matrix.startup_set_label = doc.value("startup_set", "");
    matrix.occupations = doc.value("occupations", std::vector<std::string>{});
    matrix.startups = doc.value("startups", std::vector<std::string>{});
    auto rows = doc.value("rows", std::vector<std::string>{});
    if (rows.size() != matrix.occupations.size()) {
        throw Error(Errc::missing_artifact,
                    fmt::format("'{}' row count does not match occupations", path.string()));
    }
    for (const auto& encoded : rows) {
        if (encoded.size() != matrix.startups.size()) {
            throw Error(Errc::missing_artifact,
                        fmt::format("'{}' has a row of width {} (expected {})", path.string(),
                                    encoded.size(), matrix.startups.size()));
        }
        std::vector<Answer> row;
        row.reserve(encoded.size());
        for (char c : encoded) {
            row.push_back(answer_from_char(c));
        }
        matrix.cells.push_back(std::move(row));
    }
    if (doc.contains("inputs")) {
        matrix.input_hashes = doc["inputs"].get<std::map<std::string, std::string>>();
    }
    return matrix;
}

}  // namespace aise::llm
