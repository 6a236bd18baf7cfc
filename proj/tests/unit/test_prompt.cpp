#include "aise/errors.hpp"
#include "aise/prompt.hpp"

#include <doctest.h>

#include <random>

using namespace aise;
using namespace aise::llm;

namespace {

Startup fixture_startup() {
    return Startup{
        .id = "x1",
        .name = "Fixture",
        .short_desc = "Short pitch.",
        .long_desc = "A tool that drafts compliance reports.",
        .year = 2024,
        .tags = {"ai"},
    };
}

Occupation fixture_occupation() {
    return Occupation{
        .soc_code = "11-1011.00",
        .title = "Chief Executives",
        .description = "Determine and formulate policies for companies.",
    };
}

std::size_t count_occurrences(const std::string& haystack, const std::string& needle) {
    std::size_t count = 0;
    for (auto pos = haystack.find(needle); pos != std::string::npos;
         pos = haystack.find(needle, pos + 1)) {
        ++count;
    }
    return count;
}

}  // namespace

TEST_CASE("render_prompt joins the fragments with single spaces") {
    auto prompt = render_prompt(PromptVariant::replace_detailed, fixture_startup(),
                                fixture_occupation());
    CHECK(prompt.system_text == "You are an AI specialist.");
    CHECK(prompt.user_text ==
          "Given the following startup description: A tool that drafts compliance reports. "
          "and given the following job description: Determine and formulate policies for "
          "companies. can the product or service developed by the startup directly replace "
          "humans to perform some of the described job's tasks? Use only the information "
          "provided by the two descriptions. Reply only yes or no.");
}

TEST_CASE("replace_short substitutes the one-liner and nothing else") {
    auto startup = fixture_startup();
    auto occupation = fixture_occupation();
    auto detailed = render_prompt(PromptVariant::replace_detailed, startup, occupation);
    auto short_form = render_prompt(PromptVariant::replace_short, startup, occupation);
    CHECK(short_form.user_text.find(startup.short_desc) != std::string::npos);
    CHECK(short_form.user_text.find(startup.long_desc) == std::string::npos);

    // Identical except for the substituted description.
    auto patched = short_form.user_text;
    auto pos = patched.find(startup.short_desc);
    patched.replace(pos, startup.short_desc.size(), startup.long_desc);
    CHECK(patched == detailed.user_text);
}

TEST_CASE("prompt variants end with their exact closing instruction") {
    auto startup = fixture_startup();
    auto occupation = fixture_occupation();
    auto ends_with = [](const std::string& s, const std::string& suffix) {
        return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(),
                                                      suffix.size(), suffix) == 0;
    };
    CHECK(ends_with(render_prompt(PromptVariant::replace_detailed, startup, occupation).user_text,
                    "Reply only yes or no."));
    CHECK(ends_with(render_prompt(PromptVariant::replace_short, startup, occupation).user_text,
                    "Reply only yes or no."));
    CHECK(ends_with(render_prompt(PromptVariant::designed_detailed, startup, occupation).user_text,
                    "Reply only with yes or no."));
    CHECK(render_prompt(PromptVariant::designed_detailed, startup, occupation)
              .user_text.find("designed to directly replace humans") != std::string::npos);
}

TEST_CASE("rendered prompt contains each description exactly once") {
    auto startup = fixture_startup();
    auto occupation = fixture_occupation();
    for (auto variant : {PromptVariant::replace_detailed, PromptVariant::designed_detailed}) {
        auto prompt = render_prompt(variant, startup, occupation);
        CHECK(count_occurrences(prompt.user_text, startup.long_desc) == 1);
        CHECK(count_occurrences(prompt.user_text, occupation.description) == 1);
    }
}

TEST_CASE("render_prompt is byte-stable across calls") {
    auto a = render_prompt(PromptVariant::replace_detailed, fixture_startup(),
                           fixture_occupation());
    auto b = render_prompt(PromptVariant::replace_detailed, fixture_startup(),
                           fixture_occupation());
    CHECK(a.user_text == b.user_text);
}

TEST_CASE("render_prompt rejects an empty selected description") {
    auto startup = fixture_startup();
    startup.long_desc = "";
    try {
        render_prompt(PromptVariant::replace_detailed, startup, fixture_occupation());
        FAIL("expected EmptyDescription");
    } catch (const Error& error) {
        CHECK(error.code() == Errc::empty_description);
    }
    // The short variant still works.
    CHECK_NOTHROW(render_prompt(PromptVariant::replace_short, startup, fixture_occupation()));
}

TEST_CASE("parse_verdict handles the canonical forms") {
    CHECK(parse_verdict("Yes") == Answer::yes);
    CHECK(parse_verdict("No.") == Answer::no);
    CHECK(parse_verdict("  yes") == Answer::yes);
    CHECK(parse_verdict("\"No\"") == Answer::no);
    CHECK(parse_verdict("Yes, because the assistant automates filing.") == Answer::yes);
    CHECK(parse_verdict("It depends on context.") == Answer::unparseable);
}

TEST_CASE("parse_verdict falls back to a unique standalone token") {
    CHECK(parse_verdict("The answer is yes") == Answer::yes);
    CHECK(parse_verdict("Definitely no in this case") == Answer::no);
    CHECK(parse_verdict("Maybe yes, maybe no") == Answer::unparseable);
    CHECK(parse_verdict("nothing normal here") == Answer::unparseable);  // no substring match
    CHECK(parse_verdict("") == Answer::unparseable);
    CHECK(parse_verdict("42") == Answer::unparseable);
}

TEST_CASE("parse_verdict never throws on arbitrary bytes") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 500; ++trial) {
        std::string raw;
        auto len = rng() % 40;
        for (std::size_t i = 0; i < len; ++i) {
            raw.push_back(static_cast<char>(rng() % 256));
        }
        auto answer = parse_verdict(raw);
        CHECK((answer == Answer::yes || answer == Answer::no || answer == Answer::unparseable));
    }
}

TEST_CASE("variant names round-trip") {
    for (auto variant : {PromptVariant::replace_detailed, PromptVariant::replace_short,
                         PromptVariant::designed_detailed}) {
        CHECK(variant_from_name(variant_name(variant)) == variant);
    }
    CHECK_FALSE(variant_from_name("bogus").has_value());
}
