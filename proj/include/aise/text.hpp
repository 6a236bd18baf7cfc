#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace aise::text {

// Collapses runs of whitespace (space, tab, CR, LF, FF, VT) to single spaces
// and trims both ends. Applied to every description and title at load time so
// downstream prompt bytes and cache keys are stable across cosmetic file diffs.
std::string normalize_ws(std::string_view s);

// ASCII-only lowercasing; input data uses ASCII identifiers and tags.
std::string to_lower(std::string_view s);

// normalize_ws + to_lower, the canonical form used for tag matching.
std::string normalize_tag(std::string_view s);

// Splits into maximal runs of alphanumeric characters, lower-cased.
std::vector<std::string> words(std::string_view s);

// words() minus the fixed stop-word list, as a set.
std::set<std::string> content_word_set(std::string_view s);

// The fixed built-in stop-word list used by content_word_set.
const std::set<std::string>& stop_words();

std::vector<std::string> split(std::string_view s, char sep);

}  // namespace aise::text
