#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace aise {

// One O*NET-SOC occupation. The description is the summary of essential
// tasks, whitespace-normalized at load time.
struct Occupation {
    std::string soc_code;
    std::string title;
    std::string description;
    std::optional<int> job_zone;  // 1..5 when known

    bool operator==(const Occupation&) const = default;
};

// Occupations in file order with unique soc codes.
class OccupationSet {
  public:
    // Enforces the DD-DDDD.DD code pattern, a non-empty description, and
    // uniqueness; throws the corresponding Error.
    void add(Occupation occupation);

    const Occupation* find(const std::string& soc_code) const;
    void set_job_zone(const std::string& soc_code, std::optional<int> zone);
    const std::vector<Occupation>& items() const { return items_; }
    std::size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }

    auto begin() const { return items_.begin(); }
    auto end() const { return items_.end(); }

    bool operator==(const OccupationSet& other) const { return items_ == other.items_; }

  private:
    std::vector<Occupation> items_;
    std::map<std::string, std::size_t> index_;
};

bool soc_code_valid(const std::string& soc_code);

using JobZoneMap = std::map<std::string, int>;

// Annotates occupations in place; codes absent from the map stay unset.
void apply_job_zones(OccupationSet& occupations, const JobZoneMap& zones);

struct Startup {
    std::string id;
    std::string name;
    std::string short_desc;
    std::string long_desc;
    int year = 0;
    std::set<std::string> tags;  // normalized: lower-case, whitespace-collapsed

    bool operator==(const Startup&) const = default;
};

// Startups keyed (and iterated) by ascending id.
class StartupSet {
  public:
    void add(Startup startup);  // throws DuplicateId / MalformedRecord

    const Startup* find(const std::string& id) const;
    std::size_t size() const { return by_id_.size(); }
    bool empty() const { return by_id_.empty(); }

    auto begin() const { return by_id_.begin(); }
    auto end() const { return by_id_.end(); }

    bool operator==(const StartupSet& other) const { return by_id_ == other.by_id_; }

  private:
    std::map<std::string, Startup> by_id_;
};

// Importance ratings for the O*NET skill taxonomy, merged per occupation.
class SkillRatings {
  public:
    void add(const std::string& soc_code, const std::string& skill_id,
             const std::string& skill_name, double importance);

    std::optional<double> importance(const std::string& soc_code,
                                     const std::string& skill_id) const;
    // skill_id -> display name, ascending by id.
    const std::map<std::string, std::string>& skills() const { return skill_names_; }
    std::size_t record_count() const { return record_count_; }
    std::size_t occupation_count() const { return by_occupation_.size(); }

  private:
    std::map<std::string, std::map<std::string, double>> by_occupation_;
    std::map<std::string, std::string> skill_names_;
    std::size_t record_count_ = 0;
};

struct AbilityRating {
    double importance = 0.0;  // I, in [1,5]
    double level = 0.0;       // L, in [0,7]
};

// Importance+level pairs per (occupation, ability). An occupation is
// AIOE-eligible when it rates every ability seen in the source file.
class AbilityRatings {
  public:
    void add(const std::string& soc_code, const std::string& ability_id,
             const std::string& ability_name, AbilityRating rating);

    const AbilityRating* find(const std::string& soc_code, const std::string& ability_id) const;
    const std::map<std::string, AbilityRating>* for_occupation(const std::string& soc_code) const;

    const std::map<std::string, std::string>& abilities() const { return ability_names_; }
    std::vector<std::string> occupations() const;

    bool covers(const std::string& soc_code, const std::vector<std::string>& ability_ids) const;
    bool aioe_eligible(const std::string& soc_code) const;
    std::vector<std::string> eligible_occupations() const;

  private:
    std::map<std::string, std::map<std::string, AbilityRating>> by_occupation_;
    std::map<std::string, std::string> ability_names_;
};

// The AI-application x ability relatedness grid.
struct RelatednessMatrix {
    std::vector<std::string> applications;        // row names
    std::vector<std::string> abilities;           // column ids
    std::vector<std::vector<double>> values;      // applications x abilities, >= 0
};

enum class TableKind {
    area_occupation,    // group = area (MSA), member = soc code
    sector_occupation,  // group = NAICS-2 sector, member = soc code
    area_sector,        // group = area (county), member = sector
};

const char* table_kind_name(TableKind kind);

struct EmploymentRow {
    std::string group_key;
    std::string group_title;
    std::string member_key;
    double employment = 0.0;  // >= 0, zero rows retained
};

struct EmploymentTable {
    TableKind kind = TableKind::area_occupation;
    std::vector<EmploymentRow> rows;
};

// The named tag filters from the startup corpus methodology plus arbitrary
// custom filters. Tags are stored normalized and matched exactly.
struct TagFilter {
    std::string name;
    std::set<std::string> tags;

    static TagFilter builtin_ai();
    static TagFilter builtin_robotics();
    static TagFilter custom(std::string name, const std::vector<std::string>& raw_tags);

    bool matches(const Startup& startup) const;
};

StartupSet filter_by_tags(const StartupSet& startups, const TagFilter& filter);

}  // namespace aise
