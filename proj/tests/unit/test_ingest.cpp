#include "aise/errors.hpp"
#include "aise/ingest.hpp"
#include "aise/types.hpp"

#include <doctest.h>

#include "helpers.hpp"

#include <algorithm>

using namespace aise;
using testutil::TempDir;
using testutil::write_file;

namespace {

const std::string kOccupationHeader = "O*NET-SOC Code\tTitle\tDescription\n";

Errc code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& error) {
        return error.code();
    }
    FAIL("expected an aise::Error");
    return Errc::invalid_config;
}

}  // namespace

TEST_CASE("load_occupations reads rows and normalizes whitespace") {
    TempDir dir;
    auto path = write_file(dir.file("occ.txt"),
                           kOccupationHeader +
                               "11-1011.00\tChief  Executives\tDetermine\t\n"
                               "11-2011.00\tAd Managers\t  Plan   campaigns\r\n");
    auto set = ingest::load_occupations(path);
    REQUIRE(set.size() == 2);
    CHECK(set.items()[0].title == "Chief Executives");
    CHECK(set.items()[1].description == "Plan campaigns");
    CHECK(set.find("11-2011.00") != nullptr);
    CHECK(set.find("99-9999.99") == nullptr);
}

TEST_CASE("load_occupations empty file with header yields empty set") {
    TempDir dir;
    auto set = ingest::load_occupations(write_file(dir.file("occ.txt"), kOccupationHeader));
    CHECK(set.size() == 0);
}

TEST_CASE("load_occupations error cases") {
    TempDir dir;
    CHECK(code_of([&] { ingest::load_occupations(dir.file("absent.txt")); }) ==
          Errc::missing_file);
    auto bad_header = write_file(dir.file("h.txt"), "a\tb\tc\n");
    CHECK(code_of([&] { ingest::load_occupations(bad_header); }) == Errc::malformed_header);
    auto dup = write_file(dir.file("dup.txt"), kOccupationHeader +
                                                   "11-1011.00\tA\tdesc one\n"
                                                   "11-1011.00\tB\tdesc two\n");
    try {
        ingest::load_occupations(dup);
        FAIL("expected DuplicateCode");
    } catch (const Error& error) {
        CHECK(error.code() == Errc::duplicate_code);
        CHECK(std::string(error.what()).find("11-1011.00") != std::string::npos);
    }
    auto empty_desc =
        write_file(dir.file("e.txt"), kOccupationHeader + "11-1011.00\tA\t   \n");
    CHECK(code_of([&] { ingest::load_occupations(empty_desc); }) == Errc::empty_description);
    auto bad_code = write_file(dir.file("c.txt"), kOccupationHeader + "ABC\tA\tdesc\n");
    CHECK(code_of([&] { ingest::load_occupations(bad_code); }) == Errc::malformed_row);
}

TEST_CASE("loaders are pure given file bytes") {
    auto path = testutil::data_dir() / "toy" / "occupations.txt";
    auto first = ingest::load_occupations(path);
    auto second = ingest::load_occupations(path);
    CHECK(first == second);
}

TEST_CASE("occupation export round-trips") {
    auto set = ingest::load_occupations(testutil::data_dir() / "toy" / "occupations.txt");
    TempDir dir;
    ingest::export_occupations(set, dir.file("export.txt"));
    auto reloaded = ingest::load_occupations(dir.file("export.txt"));
    CHECK(set == reloaded);
}

TEST_CASE("load_job_zones maps codes and validates the range") {
    TempDir dir;
    auto path = write_file(dir.file("zones.txt"), "O*NET-SOC Code\tJob Zone\n"
                                                  "11-1011.00\t5\n"
                                                  "11-2011.00\t1\n");
    auto zones = ingest::load_job_zones(path);
    REQUIRE(zones.size() == 2);
    CHECK(zones.at("11-1011.00") == 5);
    CHECK_FALSE(zones.contains("99-9999.00"));  // absent -> "not available"

    auto out_of_range =
        write_file(dir.file("z6.txt"), "code\tzone\n11-1011.00\t6\n");
    CHECK(code_of([&] { ingest::load_job_zones(out_of_range); }) == Errc::zone_out_of_range);
    auto not_a_zone = write_file(dir.file("zx.txt"), "code\tzone\n11-1011.00\tfive\n");
    CHECK(code_of([&] { ingest::load_job_zones(not_a_zone); }) == Errc::malformed_row);
}

TEST_CASE("load_skill_ratings keeps IM rows and range-checks them") {
    TempDir dir;
    const std::string header = "O*NET-SOC Code\tElement ID\tElement Name\tScale ID\tData Value\n";
    auto path = write_file(dir.file("skills.txt"),
                           header + "11-1011.00\t2.A.1.a\tReading Comprehension\tIM\t4.5\n" +
                               "11-1011.00\t2.A.1.a\tReading Comprehension\tLV\t5.2\n" +
                               "11-1011.00\t2.A.1.b\tActive Listening\tIM\t4.0\n");
    auto skills = ingest::load_skill_ratings(path);
    CHECK(skills.record_count() == 2);  // the LV row is not an importance record
    CHECK(skills.importance("11-1011.00", "2.A.1.a") == 4.5);
    CHECK_FALSE(skills.importance("11-1011.00", "2.Z.9.z").has_value());

    auto out_of_range =
        write_file(dir.file("bad.txt"), header + "11-1011.00\t2.A.1.a\tReading\tIM\t5.2\n");
    CHECK(code_of([&] { ingest::load_skill_ratings(out_of_range); }) == Errc::scale_out_of_range);
}

TEST_CASE("load_ability_ratings merges scales and tracks eligibility") {
    auto ratings = ingest::load_ability_ratings(testutil::data_dir() / "toy" / "abilities.txt");
    CHECK(ratings.abilities().size() == 4);
    CHECK(ratings.eligible_occupations().size() == 9);
    // Rated for only 3 of the 4 abilities: retained but not eligible.
    CHECK(ratings.for_occupation("47-2053.00") != nullptr);
    CHECK_FALSE(ratings.aioe_eligible("47-2053.00"));
    CHECK(ratings.aioe_eligible("23-1023.00"));
    auto* rating = ratings.find("15-2051.00", "1.A.1.b.4");
    REQUIRE(rating != nullptr);
    CHECK(rating->importance == 4.5);
    CHECK(rating->level == 4.75);
}

TEST_CASE("load_ability_ratings error cases") {
    TempDir dir;
    const std::string header = "O*NET-SOC Code\tElement ID\tElement Name\tScale ID\tData Value\n";
    auto missing_scale =
        write_file(dir.file("m.txt"), header + "11-1011.00\t1.A.1.a.1\tOral\tIM\t4.0\n");
    CHECK(code_of([&] { ingest::load_ability_ratings(missing_scale); }) == Errc::missing_scale);

    auto bad_importance = write_file(dir.file("i.txt"),
                                     header + "11-1011.00\t1.A.1.a.1\tOral\tIM\t5.2\n" +
                                         "11-1011.00\t1.A.1.a.1\tOral\tLV\t3.0\n");
    CHECK(code_of([&] { ingest::load_ability_ratings(bad_importance); }) ==
          Errc::scale_out_of_range);

    auto bad_level = write_file(dir.file("l.txt"),
                                header + "11-1011.00\t1.A.1.a.1\tOral\tIM\t4.0\n" +
                                    "11-1011.00\t1.A.1.a.1\tOral\tLV\t7.5\n");
    CHECK(code_of([&] { ingest::load_ability_ratings(bad_level); }) == Errc::scale_out_of_range);

    // Level 0 appears in published files and is accepted.
    auto zero_level = write_file(dir.file("z.txt"),
                                 header + "11-1011.00\t1.A.1.a.1\tOral\tIM\t1.0\n" +
                                     "11-1011.00\t1.A.1.a.1\tOral\tLV\t0\n");
    auto ratings = ingest::load_ability_ratings(zero_level);
    CHECK(ratings.find("11-1011.00", "1.A.1.a.1")->level == 0.0);
}

TEST_CASE("load_startups reads the snapshot and normalizes tags") {
    auto startups = ingest::load_startups(testutil::data_dir() / "toy" / "startups.jsonl");
    CHECK(startups.size() == 25);
    const auto* ledgerline = startups.find("yc0007");
    REQUIRE(ledgerline != nullptr);
    CHECK(ledgerline->tags == std::set<std::string>{"aiops", "fintech"});
    CHECK(ledgerline->year == 2022);
}

TEST_CASE("load_startups error cases") {
    TempDir dir;
    auto no_desc = write_file(dir.file("a.jsonl"),
                              R"({"id": "x1", "name": "X", "tags": ["ai"]})" "\n");
    CHECK(code_of([&] { ingest::load_startups(no_desc); }) == Errc::malformed_record);

    auto duplicate = write_file(dir.file("b.jsonl"),
                                R"({"id": "x1", "one_liner": "a"})" "\n"
                                R"({"id": "x1", "one_liner": "b"})" "\n");
    CHECK(code_of([&] { ingest::load_startups(duplicate); }) == Errc::duplicate_id);

    auto not_json = write_file(dir.file("c.jsonl"), "{\"id\": \"x1\"\n");
    CHECK(code_of([&] { ingest::load_startups(not_json); }) == Errc::malformed_record);
}

TEST_CASE("startup tags are normalized at load time") {
    TempDir dir;
    auto path = write_file(
        dir.file("s.jsonl"),
        R"({"id": "x1", "one_liner": "d", "tags": ["Fintech", " Generative AI "]})" "\n");
    auto startups = ingest::load_startups(path);
    CHECK(startups.find("x1")->tags == std::set<std::string>{"fintech", "generative ai"});
}

TEST_CASE("startup export round-trips") {
    auto startups = ingest::load_startups(testutil::data_dir() / "toy" / "startups.jsonl");
    TempDir dir;
    ingest::export_startups(startups, dir.file("export.jsonl"));
    auto reloaded = ingest::load_startups(dir.file("export.jsonl"));
    CHECK(startups == reloaded);
}

TEST_CASE("builtin tag filters carry the canonical tag lists") {
    auto ai = TagFilter::builtin_ai();
    auto robotics = TagFilter::builtin_robotics();
    CHECK(ai.tags.size() == 13);
    CHECK(robotics.tags.size() == 5);
    CHECK(ai.tags.contains("generative ai"));
    CHECK(ai.tags.contains("computer vision"));
    CHECK(robotics.tags.contains("robotic process automation"));
}

TEST_CASE("filter_by_tags selects exact normalized matches in ascending id order") {
    auto startups = ingest::load_startups(testutil::data_dir() / "toy" / "startups.jsonl");
    auto ai = filter_by_tags(startups, TagFilter::builtin_ai());
    auto robotics = filter_by_tags(startups, TagFilter::builtin_robotics());
    CHECK(ai.size() == 20);
    CHECK(robotics.size() == 5);

    std::vector<std::string> ids;
    for (const auto& [id, _] : ai) ids.push_back(id);
    CHECK(std::is_sorted(ids.begin(), ids.end()));

    // Tagged {"fintech"} only: excluded.
    CHECK(ai.find("yc0024") == nullptr);
    // Tagged generative ai: included.
    CHECK(ai.find("yc0001") != nullptr);
}

TEST_CASE("filter_by_tags is idempotent and monotone") {
    auto startups = ingest::load_startups(testutil::data_dir() / "toy" / "startups.jsonl");
    auto filter = TagFilter::builtin_ai();
    auto once = filter_by_tags(startups, filter);
    auto twice = filter_by_tags(once, filter);
    CHECK(once == twice);
    CHECK(once.size() <= startups.size());
}

TEST_CASE("hand-labeled 50-startup fixture filters exactly") {
    auto startups =
        ingest::load_startups(testutil::data_dir() / "fixtures" / "tagfilter" / "startups50.jsonl");
    REQUIRE(startups.size() == 50);

    const std::set<std::string> expected_ai = {
        "s001", "s002", "s003", "s004", "s005", "s006", "s007", "s008", "s009",
        "s010", "s011", "s012", "s013", "s014", "s015", "s016", "s017", "s023",
    };
    const std::set<std::string> expected_robotics = {"s018", "s019", "s020",
                                                     "s021", "s022", "s023"};

    std::set<std::string> got_ai;
    for (const auto& [id, _] : filter_by_tags(startups, TagFilter::builtin_ai())) {
        got_ai.insert(id);
    }
    std::set<std::string> got_robotics;
    for (const auto& [id, _] : filter_by_tags(startups, TagFilter::builtin_robotics())) {
        got_robotics.insert(id);
    }
    CHECK(got_ai == expected_ai);
    CHECK(got_robotics == expected_robotics);
}

TEST_CASE("custom filter rejects empty tag lists") {
    CHECK(code_of([] { TagFilter::custom("empty", {"  ", ""}); }) == Errc::invalid_config);
}

TEST_CASE("load_relatedness_matrix enforces the canonical shape by default") {
    auto toy = testutil::data_dir() / "toy" / "relatedness.csv";
    // The toy grid is 10 x 4: strict mode rejects it, relaxed mode loads it.
    CHECK(code_of([&] { ingest::load_relatedness_matrix(toy); }) == Errc::shape_mismatch);
    auto matrix = ingest::load_relatedness_matrix(toy, 0, 0);
    CHECK(matrix.applications.size() == 10);
    CHECK(matrix.abilities.size() == 4);
}

TEST_CASE("relatedness shape errors name the found dimensions") {
    TempDir dir;
    std::string nine_rows = "app,a,b\n";
    for (int i = 0; i < 9; ++i) nine_rows += "row,1,1\n";
    auto path = write_file(dir.file("nine.csv"), nine_rows);
    try {
        ingest::load_relatedness_matrix(path, 10, 2);
        FAIL("expected ShapeMismatch");
    } catch (const Error& error) {
        CHECK(error.code() == Errc::shape_mismatch);
        CHECK(std::string(error.what()).find("9 x 2") != std::string::npos);
    }

    auto negative = write_file(dir.file("neg.csv"), "app,a\nrow,-0.5\n");
    CHECK(code_of([&] { ingest::load_relatedness_matrix(negative, 1, 1); }) ==
          Errc::non_numeric_cell);
    auto not_numeric = write_file(dir.file("nan.csv"), "app,a\nrow,abc\n");
    CHECK(code_of([&] { ingest::load_relatedness_matrix(not_numeric, 1, 1); }) ==
          Errc::non_numeric_cell);
    auto ragged = write_file(dir.file("rag.csv"), "app,a,b\nrow,1\n");
    CHECK(code_of([&] { ingest::load_relatedness_matrix(ragged, 1, 2); }) == Errc::shape_mismatch);
}

TEST_CASE("load_employment reads the canonical layout") {
    auto table = ingest::load_employment(testutil::data_dir() / "toy" / "employment_msa.csv",
                                         TableKind::area_occupation);
    CHECK(table.kind == TableKind::area_occupation);
    CHECK(table.rows.size() == 13);
    CHECK(table.rows[0].group_key == "41940");
    CHECK(table.rows[0].group_title == "San Jose-Sunnyvale-Santa Clara, CA");
    CHECK(table.rows[0].employment == 8700.0);
}

TEST_CASE("load_employment error cases") {
    TempDir dir;
    const std::string header = "group_key,group_title,member_key,employment\n";
    auto negative = write_file(dir.file("n.csv"), header + "g,G,m,-3\n");
    CHECK(code_of([&] { ingest::load_employment(negative, TableKind::area_occupation); }) ==
          Errc::negative_employment);

    auto duplicate = write_file(dir.file("d.csv"), header + "g,G,m,1\ng,G,m,2\n");
    try {
        ingest::load_employment(duplicate, TableKind::area_occupation);
        FAIL("expected MalformedRow");
    } catch (const Error& error) {
        CHECK(error.code() == Errc::malformed_row);
        CHECK(std::string(error.what()).find("(g, m)") != std::string::npos);
    }

    auto zero_ok = write_file(dir.file("z.csv"), header + "g,G,m,0\n");
    CHECK(ingest::load_employment(zero_ok, TableKind::area_occupation).rows.size() == 1);

    auto bad_header = write_file(dir.file("h.csv"), "a,b,c,d\ng,G,m,1\n");
    CHECK(code_of([&] { ingest::load_employment(bad_header, TableKind::area_occupation); }) ==
          Errc::malformed_header);
}

TEST_CASE("validate_corpus reports toy corpus structure") {
    auto data = testutil::data_dir() / "toy";
    auto occupations = ingest::load_occupations(data / "occupations.txt");
    auto startups = ingest::load_startups(data / "startups.jsonl");
    auto skills = ingest::load_skill_ratings(data / "skills.txt");
    auto abilities = ingest::load_ability_ratings(data / "abilities.txt");
    auto zones = ingest::load_job_zones(data / "job_zones.txt");

    auto report = ingest::validate_corpus(occupations, startups, skills, abilities, zones);
    CHECK(report.n_occupations == 12);
    CHECK(report.n_startups == 25);
    CHECK(report.n_aioe_eligible == 9);
    CHECK(report.occupations_missing_zone ==
          std::vector<std::string>{"27-2021.00", "47-2053.00"});
    CHECK(report.startups_unmatched_ai.size() == 5);
    CHECK(report.startups_unmatched_robotics.size() == 20);
    CHECK(report.fatal.empty());
    CHECK(report.ok());
    CHECK(report.occupation_desc_chars.p50 > 0);
}

TEST_CASE("validate_corpus on an empty corpus reports zeros") {
    auto report = ingest::validate_corpus(OccupationSet{}, StartupSet{}, SkillRatings{},
                                          AbilityRatings{}, JobZoneMap{});
    CHECK(report.n_occupations == 0);
    CHECK(report.n_startups == 0);
    CHECK(report.n_aioe_eligible == 0);
    CHECK(report.ok());
}

TEST_CASE("validate_corpus flags an empty description as fatal") {
    OccupationSet occupations;
    occupations.add(Occupation{.soc_code = "11-1011.00", .title = "A", .description = "fine"});
    occupations.add(Occupation{.soc_code = "11-2011.00", .title = "B", .description = ""});
    auto report = ingest::validate_corpus(occupations, StartupSet{}, SkillRatings{},
                                          AbilityRatings{}, JobZoneMap{});
    REQUIRE(report.fatal.size() == 1);
    CHECK(report.fatal[0].find("11-2011.00") != std::string::npos);
    CHECK_FALSE(report.ok());
}
