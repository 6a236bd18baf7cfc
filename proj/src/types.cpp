#include "aise/types.hpp"

#include "aise/errors.hpp"
#include "aise/text.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cctype>

namespace aise {

bool soc_code_valid(const std::string& soc_code) {
    // DD-DDDD.DD
    if (soc_code.size() != 10) return false;
    auto digit = [&](size_t i) { return std::isdigit(static_cast<unsigned char>(soc_code[i])) != 0; };
    return digit(0) && digit(1) && soc_code[2] == '-' && digit(3) && digit(4) && digit(5) &&
           digit(6) && soc_code[7] == '.' && digit(8) && digit(9);
}

void OccupationSet::add(Occupation occupation) {
    if (!soc_code_valid(occupation.soc_code)) {
        throw Error(Errc::malformed_row,
                    fmt::format("occupation code '{}' does not match DD-DDDD.DD", occupation.soc_code));
    }
    if (index_.contains(occupation.soc_code)) {
        throw Error(Errc::duplicate_code,
                    fmt::format("occupation code '{}' appears more than once", occupation.soc_code));
    }
    index_.emplace(occupation.soc_code, items_.size());
    items_.push_back(std::move(occupation));
}

const Occupation* OccupationSet::find(const std::string& soc_code) const {
    auto it = index_.find(soc_code);
    return it == index_.end() ? nullptr : &items_[it->second];
}

void OccupationSet::set_job_zone(const std::string& soc_code, std::optional<int> zone) {
    auto it = index_.find(soc_code);
    if (it != index_.end()) {
        items_[it->second].job_zone = zone;
    }
}

void apply_job_zones(OccupationSet& occupations, const JobZoneMap& zones) {
    // Occupations absent from the zone map keep an unset zone and surface as
    // "not available" in analytics.
    for (const auto& occupation : occupations.items()) {
        auto it = zones.find(occupation.soc_code);
        occupations.set_job_zone(occupation.soc_code,
                                 it == zones.end() ? std::nullopt : std::optional<int>(it->second));
    }
}

void StartupSet::add(Startup startup) {
    if (startup.id.empty()) {
        throw Error(Errc::malformed_record, "startup record with empty id");
    }
    if (startup.short_desc.empty() && startup.long_desc.empty()) {
        throw Error(Errc::malformed_record,
                    fmt::format("startup '{}' has neither a short nor a long description", startup.id));
    }
    auto [it, inserted] = by_id_.emplace(startup.id, std::move(startup));
    if (!inserted) {
        throw Error(Errc::duplicate_id, fmt::format("startup id '{}' appears more than once", it->first));
    }
}

const Startup* StartupSet::find(const std::string& id) const {
    auto it = by_id_.find(id);
    return it == by_id_.end() ? nullptr : &it->second;
}

void SkillRatings::add(const std::string& soc_code, const std::string& skill_id,
                       const std::string& skill_name, double importance) {
    auto [it, inserted] = by_occupation_[soc_code].emplace(skill_id, importance);
    if (!inserted) {
        throw Error(Errc::malformed_row,
                    fmt::format("duplicate skill importance for ({}, {})", soc_code, skill_id));
    }
    skill_names_.emplace(skill_id, skill_name);
    ++record_count_;
}

std::optional<double> SkillRatings::importance(const std::string& soc_code,
                                               const std::string& skill_id) const {
    auto occ = by_occupation_.find(soc_code);
    if (occ == by_occupation_.end()) return std::nullopt;
    auto skill = occ->second.find(skill_id);
    if (skill == occ->second.end()) return std::nullopt;
    return skill->second;
}

void AbilityRatings::add(const std::string& soc_code, const std::string& ability_id,
                         const std::string& ability_name, AbilityRating rating) {
    auto [it, inserted] = by_occupation_[soc_code].emplace(ability_id, rating);
    if (!inserted) {
        throw Error(Errc::malformed_row,
                    fmt::format("duplicate ability rating for ({}, {})", soc_code, ability_id));
    }
    ability_names_.emplace(ability_id, ability_name);
}

const AbilityRating* AbilityRatings::find(const std::string& soc_code,
                                          const std::string& ability_id) const {
    auto occ = by_occupation_.find(soc_code);
    if (occ == by_occupation_.end()) return nullptr;
    auto ability = occ->second.find(ability_id);
    return ability == occ->second.end() ? nullptr : &ability->second;
}

const std::map<std::string, AbilityRating>*
AbilityRatings::for_occupation(const std::string& soc_code) const {
    auto occ = by_occupation_.find(soc_code);
    return occ == by_occupation_.end() ? nullptr : &occ->second;
}

std::vector<std::string> AbilityRatings::occupations() const {
    std::vector<std::string> out;
    out.reserve(by_occupation_.size());
    for (const auto& [soc, _] : by_occupation_) {
        out.push_back(soc);
    }
    return out;
}

bool AbilityRatings::covers(const std::string& soc_code,
                            const std::vector<std::string>& ability_ids) const {
    auto occ = by_occupation_.find(soc_code);
    if (occ == by_occupation_.end()) return false;
    return std::all_of(ability_ids.begin(), ability_ids.end(),
                       [&](const std::string& id) { return occ->second.contains(id); });
}

bool AbilityRatings::aioe_eligible(const std::string& soc_code) const {
    auto occ = by_occupation_.find(soc_code);
    if (occ == by_occupation_.end()) return false;
    return occ->second.size() == ability_names_.size() && !ability_names_.empty();
}

std::vector<std::string> AbilityRatings::eligible_occupations() const {
    std::vector<std::string> out;
    for (const auto& [soc, ratings] : by_occupation_) {
        if (ratings.size() == ability_names_.size() && !ability_names_.empty()) {
            out.push_back(soc);
        }
    }
    return out;
}

const char* table_kind_name(TableKind kind) {
    switch (kind) {
    case TableKind::area_occupation: return "area_occupation";
    case TableKind::sector_occupation: return "sector_occupation";
    case TableKind::area_sector: return "area_sector";
    }
    return "unknown";
}

TagFilter TagFilter::builtin_ai() {
    return custom("ai", {
                            "AI",
                            "artificial intelligence",
                            "AI-assistant",
                            "AI-powered drug discovery",
                            "AIOps",
                            "conversational AI",
                            "ML",
                            "machine learning",
                            "deep learning",
                            "deepfake detection",
                            "generative AI",
                            "AI-enhanced learning",
                            "computer vision",
                        });
}

TagFilter TagFilter::builtin_robotics() {
    return custom("robotics", {
                                  "Robotics",
                                  "Robotic Process Automation",
                                  "Food Service Robots & Machines",
                                  "Medical Robotics",
                                  "Robotic Surgery",
                              });
}

TagFilter TagFilter::custom(std::string name, const std::vector<std::string>& raw_tags) {
    TagFilter filter;
    filter.name = std::move(name);
    for (const auto& tag : raw_tags) {
        auto normalized = text::normalize_tag(tag);
        if (!normalized.empty()) {
            filter.tags.insert(std::move(normalized));
        }
    }
    if (filter.tags.empty()) {
        throw Error(Errc::invalid_config,
                    fmt::format("tag filter '{}' has no usable tags", filter.name));
    }
    return filter;
}

bool TagFilter::matches(const Startup& startup) const {
    return std::any_of(startup.tags.begin(), startup.tags.end(),
                       [&](const std::string& tag) { return tags.contains(tag); });
}

StartupSet filter_by_tags(const StartupSet& startups, const TagFilter& filter) {
    StartupSet out;
    for (const auto& [id, startup] : startups) {
        if (filter.matches(startup)) {
            out.add(startup);
        }
    }
    return out;
}

}  // namespace aise
