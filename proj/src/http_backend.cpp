#include "aise/backend.hpp"
#include "aise/errors.hpp"

#include <fmt/format.h>
#include <httplib.h>
#include <json.hpp>

namespace aise::llm {

namespace {

using nlohmann::json;

class HttpBackend : public ChatBackend {
  public:
    explicit HttpBackend(HttpBackendConfig config)
        : config_(std::move(config)), limiter_(config_.requests_per_second) {
        if (config_.base_url.rfind("http://", 0) != 0) {
            throw Error(Errc::invalid_config,
                        fmt::format("backend base URL '{}' must be http:// (this build does not "
                                    "speak TLS; use a local proxy for https endpoints)",
                                    config_.base_url));
        }
    }

    BackendReply complete(const std::string& system_text, const std::string& user_text) override {
        limiter_.acquire();
        count_call();

        json body = {
            {"model", config_.model_id},
            {"messages",
             json::array({
                 json{{"role", "system"}, {"content", system_text}},
                 json{{"role", "user"}, {"content", user_text}},
             })},
            {"temperature", config_.temperature},
            {"max_tokens", config_.max_tokens},
        };

        httplib::Client client(config_.base_url);
        client.set_connection_timeout(config_.timeout_seconds, 0);
        client.set_read_timeout(config_.timeout_seconds, 0);
        httplib::Headers headers;
        if (!config_.api_key.empty()) {
            headers.emplace("Authorization", "Bearer " + config_.api_key);
        }

        auto result = client.Post(config_.endpoint_path, headers, body.dump(), "application/json");
        if (!result) {
            return {.ok = false,
                    .text = fmt::format("transport error: {}", httplib::to_string(result.error())),
                    .retryable = true};
        }
        if (result->status >= 500) {
            return {.ok = false,
                    .text = fmt::format("server error: HTTP {}", result->status),
                    .retryable = true};
        }
        if (result->status != 200) {
            return {.ok = false,
                    .text = fmt::format("HTTP {}: {}", result->status, result->body),
                    .retryable = false};
        }

        json reply = json::parse(result->body, nullptr, false);
        if (reply.is_discarded()) {
            return {.ok = false, .text = "response body is not JSON", .retryable = true};
        }
        try {
            return {.ok = true,
                    .text = reply.at("choices").at(0).at("message").at("content").get<std::string>(),
                    .retryable = false};
        } catch (const json::exception& e) {
            return {.ok = false,
                    .text = fmt::format("unexpected response shape: {}", e.what()),
                    .retryable = true};
        }
    }

    std::string model_id() const override { return config_.model_id; }

  private:
    HttpBackendConfig config_;
    RateLimiter limiter_;
};

}  // namespace

std::unique_ptr<ChatBackend> make_http_backend(const HttpBackendConfig& config) {
    return std::make_unique<HttpBackend>(config);
}

}  // namespace aise::llm
