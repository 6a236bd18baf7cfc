#include "aise/backend.hpp"
#include "aise/errors.hpp"
#include "aise/ingest.hpp"
#include "aise/prompt.hpp"

#include <doctest.h>
#include <httplib.h>
#include <json.hpp>

#include "helpers.hpp"

#include <atomic>
#include <thread>

using namespace aise;
using namespace aise::llm;

TEST_CASE("mock backend: identical texts answer yes, disjoint answer no") {
    MockBackend backend(0.05);
    Startup startup{.id = "s", .long_desc = "alpha beta gamma"};
    Occupation same{.soc_code = "11-1011.00", .description = "alpha beta gamma"};
    Occupation disjoint{.soc_code = "11-2011.00", .description = "delta epsilon zeta"};

    auto same_prompt = render_prompt(PromptVariant::replace_detailed, startup, same);
    CHECK(backend.complete(same_prompt.system_text, same_prompt.user_text).text == "yes");

    auto disjoint_prompt = render_prompt(PromptVariant::replace_detailed, startup, disjoint);
    CHECK(backend.complete(disjoint_prompt.system_text, disjoint_prompt.user_text).text == "no");
}

TEST_CASE("mock backend reproduces the bundled fixture pair by hand") {
    // yc0007 x 43-9061.00: content words overlap exactly {data, reports} over
    // a 30-word union, so the similarity is 2/30 = 0.0667.
    auto data = testutil::data_dir() / "toy";
    auto startups = ingest::load_startups(data / "startups.jsonl");
    auto occupations = ingest::load_occupations(data / "occupations.txt");
    const auto* startup = startups.find("yc0007");
    const auto* occupation = occupations.find("43-9061.00");
    REQUIRE(startup != nullptr);
    REQUIRE(occupation != nullptr);

    double similarity = MockBackend::jaccard_similarity(startup->long_desc,
                                                        occupation->description);
    CHECK(similarity == doctest::Approx(2.0 / 30.0).epsilon(1e-12));

    auto prompt = render_prompt(PromptVariant::replace_detailed, *startup, *occupation);
    CHECK(MockBackend(0.05).complete(prompt.system_text, prompt.user_text).text == "yes");
    CHECK(MockBackend(0.07).complete(prompt.system_text, prompt.user_text).text == "no");
}

TEST_CASE("mock backend is deterministic and counts calls") {
    MockBackend backend(0.05);
    Startup startup{.id = "s", .long_desc = "records management platform"};
    Occupation occupation{.soc_code = "11-1011.00", .description = "maintain records and files"};
    auto prompt = render_prompt(PromptVariant::replace_detailed, startup, occupation);
    auto first = backend.complete(prompt.system_text, prompt.user_text).text;
    for (int i = 0; i < 10; ++i) {
        CHECK(backend.complete(prompt.system_text, prompt.user_text).text == first);
    }
    CHECK(backend.call_count() == 11);
}

TEST_CASE("mock backend parses descriptions for both question forms") {
    Startup startup{.id = "s", .long_desc = "unique alpha words here"};
    Occupation occupation{.soc_code = "11-1011.00", .description = "unique alpha words here"};
    for (auto variant : {PromptVariant::replace_detailed, PromptVariant::designed_detailed}) {
        auto prompt = render_prompt(variant, startup, occupation);
        CHECK(MockBackend(0.5).complete(prompt.system_text, prompt.user_text).text == "yes");
    }
}

namespace {

// In-process chat-completion endpoint for wire-format tests.
class FakeServer {
  public:
    explicit FakeServer(std::function<void(const httplib::Request&, httplib::Response&)> handler) {
        server_.Post("/v1/chat/completions",
                     [handler = std::move(handler)](const httplib::Request& req,
                                                    httplib::Response& res) { handler(req, res); });
        port_ = server_.bind_to_any_port("127.0.0.1");
        thread_ = std::thread([this] { server_.listen_after_bind(); });
        server_.wait_until_ready();
    }
    ~FakeServer() {
        server_.stop();
        thread_.join();
    }
    std::string base_url() const { return "http://127.0.0.1:" + std::to_string(port_); }

  private:
    httplib::Server server_;
    int port_ = 0;
    std::thread thread_;
};

std::string completion_body(const std::string& content) {
    nlohmann::json body = {
        {"choices", nlohmann::json::array({nlohmann::json{
                        {"message", nlohmann::json{{"role", "assistant"}, {"content", content}}},
                    }})},
    };
    return body.dump();
}

}  // namespace

TEST_CASE("http backend sends the chat-completion shape and parses the reply") {
    nlohmann::json seen_body;
    std::string seen_auth;
    FakeServer server([&](const httplib::Request& req, httplib::Response& res) {
        seen_body = nlohmann::json::parse(req.body);
        if (req.has_header("Authorization")) {
            seen_auth = req.get_header_value("Authorization");
        }
        res.set_content(completion_body("Yes"), "application/json");
    });

    HttpBackendConfig config;
    config.base_url = server.base_url();
    config.model_id = "llama3-8b";
    config.api_key = "secret-key";
    auto backend = make_http_backend(config);

    auto reply = backend->complete("You are an AI specialist.", "Given the following ...");
    REQUIRE(reply.ok);
    CHECK(reply.text == "Yes");

    CHECK(seen_body["model"] == "llama3-8b");
    CHECK(seen_body["temperature"] == 0.0);
    CHECK(seen_body["max_tokens"] == 4);
    REQUIRE(seen_body["messages"].size() == 2);
    CHECK(seen_body["messages"][0]["role"] == "system");
    CHECK(seen_body["messages"][0]["content"] == "You are an AI specialist.");
    CHECK(seen_body["messages"][1]["role"] == "user");
    CHECK(seen_auth == "Bearer secret-key");
    CHECK(backend->call_count() == 1);
}

TEST_CASE("http backend marks 5xx as retryable and 4xx as fatal") {
    std::atomic<int> hits{0};
    FakeServer server([&](const httplib::Request&, httplib::Response& res) {
        if (hits.fetch_add(1) == 0) {
            res.status = 503;
        } else {
            res.status = 404;
            res.set_content("nope", "text/plain");
        }
    });
    HttpBackendConfig config;
    config.base_url = server.base_url();
    auto backend = make_http_backend(config);

    auto first = backend->complete("s", "u");
    CHECK_FALSE(first.ok);
    CHECK(first.retryable);
    auto second = backend->complete("s", "u");
    CHECK_FALSE(second.ok);
    CHECK_FALSE(second.retryable);
}

TEST_CASE("http backend reports unreachable hosts as retryable transport errors") {
    HttpBackendConfig config;
    config.base_url = "http://127.0.0.1:1";  // nothing listens here
    config.timeout_seconds = 1;
    auto backend = make_http_backend(config);
    auto reply = backend->complete("s", "u");
    CHECK_FALSE(reply.ok);
    CHECK(reply.retryable);
}

TEST_CASE("http backend rejects non-http base URLs") {
    HttpBackendConfig config;
    config.base_url = "https://api.example.com";
    CHECK_THROWS_AS(make_http_backend(config), Error);
}

TEST_CASE("rate limiter throttles to roughly the configured rate") {
    RateLimiter limiter(50.0);  // 50 rps, burst 50
    auto start = std::chrono::steady_clock::now();
    for (int i = 0; i < 60; ++i) {
        limiter.acquire();  // 50 from the initial bucket, 10 paced
    }
    auto elapsed = std::chrono::steady_clock::now() - start;
    CHECK(elapsed >= std::chrono::milliseconds(150));
    RateLimiter unlimited(0.0);
    for (int i = 0; i < 1000; ++i) unlimited.acquire();  // must not block
}
