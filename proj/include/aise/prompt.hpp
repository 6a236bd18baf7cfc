#pragma once

#include "aise/types.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace aise::llm {

// The three classification prompt forms. The *_detailed variants read the
// startup's long description, replace_short reads the one-liner.
enum class PromptVariant {
    replace_detailed,
    replace_short,
    designed_detailed,
};

const char* variant_name(PromptVariant variant);
std::optional<PromptVariant> variant_from_name(std::string_view name);

struct RenderedPrompt {
    std::string system_text;
    std::string user_text;
};

// Byte-stable render: fixed fragments joined by single spaces around the two
// normalized descriptions. Throws EmptyDescription when the variant's
// startup description field is empty.
RenderedPrompt render_prompt(PromptVariant variant, const Startup& startup,
                             const Occupation& occupation);

// Fixed prompt fragments, exposed so the mock backend and tests can locate
// the embedded descriptions.
std::string_view prompt_system_text();
std::string_view prompt_startup_prefix();    // "Given the following startup description: "
std::string_view prompt_job_infix();         // " and given the following job description: "
std::string_view prompt_question(PromptVariant variant);

enum class Answer { yes, no, unparseable };

const char* answer_name(Answer answer);

// Total function: first alphabetic token wins; otherwise a standalone
// yes/no is accepted if exactly one of the two appears.
Answer parse_verdict(std::string_view raw);

}  // namespace aise::llm
