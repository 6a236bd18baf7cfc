#include "aise/backend.hpp"
#include "aise/prompt.hpp"
#include "aise/text.hpp"

#include <algorithm>
#include <array>
#include <thread>

namespace aise::llm {

MockBackend::MockBackend(double tau, std::string model_id)
    : tau_(tau), model_id_(std::move(model_id)) {}

double MockBackend::jaccard_similarity(const std::string& startup_desc,
                                       const std::string& occupation_desc) {
    auto a = text::content_word_set(startup_desc);
    auto b = text::content_word_set(occupation_desc);
    std::vector<std::string> intersection;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(intersection));
    auto union_size = a.size() + b.size() - intersection.size();
    if (union_size == 0) return 0.0;
    return static_cast<double>(intersection.size()) / static_cast<double>(union_size);
}

BackendReply MockBackend::complete(const std::string& /*system_text*/,
                                   const std::string& user_text) {
    count_call();

    // The prompt layout is pinned and byte-stable, so the two descriptions can
    // be recovered from the fixed markers.
    auto start = user_text.find(prompt_startup_prefix());
    auto infix = user_text.find(prompt_job_infix());
    if (start != 0 || infix == std::string::npos) {
        return {.ok = true, .text = "cannot locate descriptions", .retryable = false};
    }
    auto startup_begin = prompt_startup_prefix().size();
    auto startup_desc = user_text.substr(startup_begin, infix - startup_begin);

    auto job_begin = infix + prompt_job_infix().size();
    auto tail = user_text.substr(job_begin);
    // The question is appended after the job description with a single space.
    std::array<std::string, 2> questions = {
        " " + std::string(prompt_question(PromptVariant::replace_detailed)),
        " " + std::string(prompt_question(PromptVariant::designed_detailed)),
    };
    std::string occupation_desc = tail;
    for (const auto& question : questions) {
        if (auto pos = tail.rfind(question);
            pos != std::string::npos && pos + question.size() == tail.size()) {
            occupation_desc = tail.substr(0, pos);
            break;
        }
    }

    double similarity = jaccard_similarity(startup_desc, occupation_desc);
    return {.ok = true, .text = similarity >= tau_ ? "yes" : "no", .retryable = false};
}

RateLimiter::RateLimiter(double requests_per_second)
    : rps_(requests_per_second), tokens_(requests_per_second),
      last_refill_(std::chrono::steady_clock::now()) {}

void RateLimiter::acquire() {
    if (rps_ <= 0.0) return;
    while (true) {
        {
            std::lock_guard lock(mutex_);
            auto now = std::chrono::steady_clock::now();
            std::chrono::duration<double> elapsed = now - last_refill_;
            tokens_ = std::min(rps_, tokens_ + elapsed.count() * rps_);
            last_refill_ = now;
            if (tokens_ >= 1.0) {
                tokens_ -= 1.0;
                return;
            }
        }
        std::this_thread::sleep_for(std::chrono::milliseconds(5));
    }
}

}  // namespace aise::llm
