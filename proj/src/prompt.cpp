#include "aise/prompt.hpp"

#include "aise/errors.hpp"
#include "aise/text.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cctype>

namespace aise::llm {

namespace {

constexpr std::string_view kSystemText = "You are an AI specialist.";
constexpr std::string_view kStartupPrefix = "Given the following startup description: ";
constexpr std::string_view kJobInfix = " and given the following job description: ";

constexpr std::string_view kReplaceQuestion =
    "can the product or service developed by the startup directly replace humans to perform "
    "some of the described job's tasks? Use only the information provided by the two "
    "descriptions. Reply only yes or no.";

constexpr std::string_view kDesignedQuestion =
    "Is the product or service developed by the startup designed to directly replace humans to "
    "perform some of the described job's tasks? Use only the information provided in the two "
    "descriptions. Reply only with yes or no.";

}  // namespace

const char* variant_name(PromptVariant variant) {
    switch (variant) {
    case PromptVariant::replace_detailed: return "replace_detailed";
    case PromptVariant::replace_short: return "replace_short";
    case PromptVariant::designed_detailed: return "designed_detailed";
    }
    return "unknown";
}

std::optional<PromptVariant> variant_from_name(std::string_view name) {
    if (name == "replace_detailed") return PromptVariant::replace_detailed;
    if (name == "replace_short") return PromptVariant::replace_short;
    if (name == "designed_detailed") return PromptVariant::designed_detailed;
    return std::nullopt;
}

std::string_view prompt_system_text() { return kSystemText; }
std::string_view prompt_startup_prefix() { return kStartupPrefix; }
std::string_view prompt_job_infix() { return kJobInfix; }

std::string_view prompt_question(PromptVariant variant) {
    return variant == PromptVariant::designed_detailed ? kDesignedQuestion : kReplaceQuestion;
}

RenderedPrompt render_prompt(PromptVariant variant, const Startup& startup,
                             const Occupation& occupation) {
    const std::string& raw_desc =
        variant == PromptVariant::replace_short ? startup.short_desc : startup.long_desc;
    auto startup_desc = text::normalize_ws(raw_desc);
    if (startup_desc.empty()) {
        throw Error(Errc::empty_description,
                    fmt::format("startup '{}' has no {} description for variant {}", startup.id,
                                variant == PromptVariant::replace_short ? "short" : "long",
                                variant_name(variant)));
    }
    auto occupation_desc = text::normalize_ws(occupation.description);
    if (occupation_desc.empty()) {
        throw Error(Errc::empty_description,
                    fmt::format("occupation '{}' has an empty description", occupation.soc_code));
    }

    RenderedPrompt prompt;
    prompt.system_text = std::string(kSystemText);
    prompt.user_text = fmt::format("{}{}{}{} {}", kStartupPrefix, startup_desc, kJobInfix,
                                   occupation_desc, prompt_question(variant));
    return prompt;
}

const char* answer_name(Answer answer) {
    switch (answer) {
    case Answer::yes: return "yes";
    case Answer::no: return "no";
    case Answer::unparseable: return "unparseable";
    }
    return "unknown";
}

Answer parse_verdict(std::string_view raw) {
    auto tokens = text::words(raw);
    if (tokens.empty()) return Answer::unparseable;

    auto is_alpha_token = [](const std::string& token) {
        return std::any_of(token.begin(), token.end(), [](unsigned char c) {
            return std::isalpha(c) != 0;
        });
    };
    for (const auto& token : tokens) {
        if (!is_alpha_token(token)) continue;  // skip list numbers etc.
        if (token == "yes") return Answer::yes;
        if (token == "no") return Answer::no;
        break;
    }

    bool saw_yes = false;
    bool saw_no = false;
    for (const auto& token : tokens) {
        if (token == "yes") saw_yes = true;
        if (token == "no") saw_no = true;
    }
    if (saw_yes != saw_no) {
        return saw_yes ? Answer::yes : Answer::no;
    }
    return Answer::unparseable;
}

}  // namespace aise::llm
