#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <memory>
#include <mutex>
#include <string>

namespace aise::llm {

struct BackendReply {
    bool ok = false;          // transport-level success; text holds the completion
    std::string text;         // completion content when ok, error note otherwise
    bool retryable = false;   // transport/5xx errors are worth retrying
};

// A chat-completion endpoint: one system + one user message in, text out.
// Implementations must be safe to call from multiple threads.
class ChatBackend {
  public:
    virtual ~ChatBackend() = default;
    virtual BackendReply complete(const std::string& system_text,
                                  const std::string& user_text) = 0;
    virtual std::string model_id() const = 0;

    std::uint64_t call_count() const { return calls_.load(); }

  protected:
    void count_call() { calls_.fetch_add(1); }

  private:
    std::atomic<std::uint64_t> calls_{0};
};

// Deterministic offline stand-in for the LLM, NOT a replication of it: answers
// "yes" iff the Jaccard similarity of the stop-word-filtered content-word sets
// of the two descriptions embedded in the prompt is >= tau.
class MockBackend : public ChatBackend {
  public:
    explicit MockBackend(double tau = 0.05, std::string model_id = "mock-jaccard");

    BackendReply complete(const std::string& system_text, const std::string& user_text) override;
    std::string model_id() const override { return model_id_; }

    // The decision function, exposed for direct testing.
    static double jaccard_similarity(const std::string& startup_desc,
                                     const std::string& occupation_desc);

  private:
    double tau_;
    std::string model_id_;
};

// Token-bucket limiter applied before each dispatch; rps <= 0 disables it.
class RateLimiter {
  public:
    explicit RateLimiter(double requests_per_second);
    void acquire();

  private:
    double rps_;
    double tokens_;
    std::chrono::steady_clock::time_point last_refill_;
    std::mutex mutex_;
};

struct HttpBackendConfig {
    std::string base_url = "http://localhost:8080";  // http:// only
    std::string endpoint_path = "/v1/chat/completions";
    std::string model_id = "llama3-8b";
    std::string api_key;              // sent as a bearer token when non-empty
    double temperature = 0.0;
    int max_tokens = 4;               // "Reply only yes or no." needs very few
    double requests_per_second = 0.0;
    int timeout_seconds = 120;
};

// Client for the widely used chat-completion JSON shape.
std::unique_ptr<ChatBackend> make_http_backend(const HttpBackendConfig& config);

}  // namespace aise::llm
