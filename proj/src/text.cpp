#include "aise/text.hpp"

#include <cctype>

namespace aise::text {

namespace {

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v';
}

}  // namespace

std::string normalize_ws(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    bool pending_space = false;
    for (char c : s) {
        if (is_space(c)) {
            pending_space = !out.empty();
        } else {
            if (pending_space) {
                out.push_back(' ');
                pending_space = false;
            }
            out.push_back(c);
        }
    }
    return out;
}

std::string to_lower(std::string_view s) {
    std::string out(s);
    for (char& c : out) {
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    return out;
}

std::string normalize_tag(std::string_view s) {
    return to_lower(normalize_ws(s));
}

std::vector<std::string> words(std::string_view s) {
    std::vector<std::string> out;
    std::string current;
    for (char c : s) {
        if (std::isalnum(static_cast<unsigned char>(c))) {
            current.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
        } else if (!current.empty()) {
            out.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) {
        out.push_back(std::move(current));
    }
    return out;
}

const std::set<std::string>& stop_words() {
    // Fixed list; changing it would silently change every mock verdict, so it
    // is treated as part of the mock backend's contract.
    static const std::set<std::string> list = {
        "a",     "an",    "the",   "and",   "or",     "but",   "if",    "then",
        "else",  "when",  "while", "of",    "to",     "in",    "on",    "at",
        "by",    "for",   "with",  "from",  "into",   "over",  "under", "as",
        "is",    "are",   "was",   "were",  "be",     "been",  "being", "am",
        "it",    "its",   "this",  "that",  "these",  "those", "they",  "them",
        "their", "there", "here",  "we",    "us",     "our",   "you",   "your",
        "he",    "him",   "his",   "she",   "her",    "i",     "me",    "my",
        "do",    "does",  "did",   "done",  "not",    "can",   "could", "will",
        "would", "shall", "should", "may",  "might",  "must",  "have",  "has",
        "had",   "having",
    };
    return list;
}

std::set<std::string> content_word_set(std::string_view s) {
    std::set<std::string> out;
    for (auto& w : words(s)) {
        if (!stop_words().contains(w)) {
            out.insert(std::move(w));
        }
    }
    return out;
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    size_t start = 0;
    while (true) {
        size_t pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            out.emplace_back(s.substr(start));
            break;
        }
        out.emplace_back(s.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

}  // namespace aise::text
