#include "aise/csv.hpp"
#include "aise/hash.hpp"
#include "aise/numeric.hpp"
#include "aise/text.hpp"

#include <doctest.h>

#include <random>

using namespace aise;

TEST_CASE("normalize_ws collapses runs and trims") {
    CHECK(text::normalize_ws("  a\t\tb \r\n c  ") == "a b c");
    CHECK(text::normalize_ws("") == "");
    CHECK(text::normalize_ws(" \t\n ") == "");
    CHECK(text::normalize_ws("already clean") == "already clean");
}

TEST_CASE("tag normalization lowers, trims and collapses") {
    CHECK(text::normalize_tag(" Generative  AI ") == "generative ai");
    CHECK(text::normalize_tag("AIOps") == "aiops");
    CHECK(text::normalize_tag("machine-learning") == "machine-learning");
}

TEST_CASE("words tokenizes alphanumeric runs") {
    CHECK(text::words("It depends, on context.") ==
          std::vector<std::string>{"it", "depends", "on", "context"});
    CHECK(text::words("") == std::vector<std::string>{});
}

TEST_CASE("content_word_set drops stop words") {
    auto set = text::content_word_set("The platform automates the ingestion of data");
    CHECK(set == std::set<std::string>{"platform", "automates", "ingestion", "data"});
}

TEST_CASE("csv round-trips quoted fields") {
    csv::Row row = {"plain", "with, comma", "with \"quote\"", "multi\nline", ""};
    auto line = csv::format_row(row);
    auto parsed = csv::parse(line);
    REQUIRE(parsed.size() == 1);
    CHECK(parsed[0] == row);
}

TEST_CASE("csv round-trip holds for random fields") {
    std::mt19937 rng(7);
    const std::string alphabet = "ab,\"\n\r x";
    for (int trial = 0; trial < 200; ++trial) {
        csv::Row row;
        auto n_fields = 1 + rng() % 5;
        for (std::size_t f = 0; f < n_fields; ++f) {
            std::string field;
            auto len = rng() % 8;
            for (std::size_t i = 0; i < len; ++i) {
                field.push_back(alphabet[rng() % alphabet.size()]);
            }
            row.push_back(field);
        }
        auto parsed = csv::parse(csv::format_row(row));
        REQUIRE(parsed.size() == 1);
        CHECK(parsed[0] == row);
    }
}

TEST_CASE("csv parses CRLF and final line without newline") {
    auto rows = csv::parse("a,b\r\nc,d");
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == csv::Row{"a", "b"});
    CHECK(rows[1] == csv::Row{"c", "d"});
}

TEST_CASE("nearest-rank quantile matches hand order statistics") {
    std::vector<double> v = {1, 2, 3, 4, 5};
    CHECK(numeric::nearest_rank_quantile(v, 0.50) == 3);
    CHECK(numeric::nearest_rank_quantile(v, 0.25) == 2);
    CHECK(numeric::nearest_rank_quantile(v, 0.75) == 4);
    CHECK(numeric::nearest_rank_quantile(v, 0.0) == 1);
    CHECK(numeric::nearest_rank_quantile(v, 1.0) == 5);
    std::vector<double> single = {42};
    CHECK(numeric::nearest_rank_quantile(single, 0.25) == 42);
    CHECK(numeric::nearest_rank_quantile(single, 0.75) == 42);
}

TEST_CASE("partition sizes differ by at most one, earlier parts larger") {
    CHECK(numeric::partition_sizes(9, 3) == std::vector<std::size_t>{3, 3, 3});
    CHECK(numeric::partition_sizes(10, 3) == std::vector<std::size_t>{4, 3, 3});
    CHECK(numeric::partition_sizes(11, 4) == std::vector<std::size_t>{3, 3, 3, 2});
    CHECK(numeric::partition_sizes(2, 4) == std::vector<std::size_t>{1, 1, 0, 0});
}

TEST_CASE("compensated sum is exact on a cancellation-prone series") {
    std::vector<double> values = {1e16, 1.0, -1e16};
    CHECK(numeric::compensated_sum(values) == 1.0);
}

TEST_CASE("sha256 matches a known vector and file hashing agrees") {
    CHECK(hash::sha256_hex("abc") ==
          "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    CHECK(hash::sha256_hex("") ==
          "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}
