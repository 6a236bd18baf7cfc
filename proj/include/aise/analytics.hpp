#pragma once

#include "aise/exposure.hpp"
#include "aise/types.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace aise::analytics {

// --- Correlation -------------------------------------------------------------

// Sample Pearson correlation; throws LengthMismatch / ZeroVariance.
double pearson(const std::vector<double>& x, const std::vector<double>& y);

// Tie-corrected Kendall tau-b via an O(n^2) pair count (the score sets here
// are ~10^3 points); throws LengthMismatch / AllTied.
double kendall_tau_b(const std::vector<double>& x, const std::vector<double>& y);

struct SummaryStats {
    std::size_t n = 0;
    double mean = 0, min = 0, q1 = 0, median = 0, q3 = 0, max = 0;
};

SummaryStats summarize(std::vector<double> values);

struct ComparisonReport {
    std::size_t n_common = 0;
    double pearson = 0.0;
    double kendall_tau_b = 0.0;
    SummaryStats stats_a;
    SummaryStats stats_b;
    // Paired values over the common occupations, ascending by soc code.
    std::vector<std::tuple<std::string, double, double>> paired;
};

// Restricts both indices to their common occupations and correlates them.
ComparisonReport compare_indices(const exposure::ExposureScores& a,
                                 const exposure::ExposureScores& b);

// --- Regions -------------------------------------------------------------------

enum class Region { a, b, c, not_available };
enum class CSub { bottom_c, mid_c, top_c };

const char* region_name(Region region);
const char* c_sub_name(CSub sub);

struct RegionAssignment {
    std::map<std::string, Region> region;  // soc_code -> tertile
    std::map<std::string, CSub> c_sub;     // only for region-c members
};

// Ascending AIOE tertiles (a/b/c) over occupations scored by both indices,
// then AISE quartiles inside region c. Ties break by (score, soc_code) rank,
// so part sizes differ by at most one and the split is order-independent.
// Occupations with a startup-exposure score but no AIOE map to not_available.
RegionAssignment assign_regions(const exposure::ExposureScores& aioe,
                                const exposure::ExposureScores& aise);

std::set<std::string> region_members(const RegionAssignment& assignment, Region region);
std::set<std::string> c_sub_members(const RegionAssignment& assignment, CSub sub);

// --- Skills ----------------------------------------------------------------------

// Share of region occupations whose importance for each skill strictly
// exceeds the threshold. Missing ratings count as not crucial.
std::map<std::string, double> crucial_skill_frequency(const std::set<std::string>& region_members,
                                                      const SkillRatings& skills,
                                                      double threshold);

// --- Job zones ----------------------------------------------------------------------

struct BoxStats {
    std::size_t n = 0;
    double mean = 0, median = 0, q1 = 0, q3 = 0;
    double whisker_low = 0, whisker_high = 0;  // data extremes within 1.5 IQR
    std::vector<double> outliers;
};

// Box-plot statistics of the scores per job zone ("1".."5") plus a
// "not_available" bucket; optionally restricted to a region slice.
std::map<std::string, BoxStats> job_zone_distribution(
    const exposure::ExposureScores& scores, const JobZoneMap& zones,
    const std::optional<std::set<std::string>>& member_filter = std::nullopt);

// --- Rankings -------------------------------------------------------------------------

struct RankedOccupation {
    std::string soc_code;
    std::string title;
    double score = 0.0;
};

enum class RankDirection { top, bottom };

// Stable (score, then ascending soc code) ordering.
std::vector<RankedOccupation> rank_occupations(const exposure::ExposureScores& scores,
                                               const OccupationSet& occupations, std::size_t n,
                                               RankDirection direction);

}  // namespace aise::analytics
