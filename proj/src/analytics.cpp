#include "aise/analytics.hpp"

#include "aise/errors.hpp"
#include "aise/numeric.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>

namespace aise::analytics {

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw Error(Errc::length_mismatch,
                    fmt::format("pearson needs two equal-length vectors of >= 2 points, got {} and {}",
                                x.size(), y.size()));
    }
    const double mean_x = numeric::mean(x);
    const double mean_y = numeric::mean(y);
    numeric::Accumulator cov, var_x, var_y;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mean_x;
        const double dy = y[i] - mean_y;
        cov.add(dx * dy);
        var_x.add(dx * dx);
        var_y.add(dy * dy);
    }
    if (var_x.total() == 0.0 || var_y.total() == 0.0) {
        throw Error(Errc::zero_variance, "pearson is undefined for a constant vector");
    }
    return cov.total() / std::sqrt(var_x.total() * var_y.total());
}

double kendall_tau_b(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw Error(Errc::length_mismatch,
                    fmt::format("kendall needs two equal-length vectors of >= 2 points, got {} and {}",
                                x.size(), y.size()));
    }
    const auto n = x.size();
    long long concordant = 0, discordant = 0, ties_x = 0, ties_y = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double dx = x[j] - x[i];
            const double dy = y[j] - y[i];
            if (dx == 0.0) ++ties_x;        // both-tied pairs count in each total
            if (dy == 0.0) ++ties_y;
            if (dx == 0.0 || dy == 0.0) continue;
            if ((dx > 0.0) == (dy > 0.0)) {
                ++concordant;
            } else {
                ++discordant;
            }
        }
    }
    const long long n0 = static_cast<long long>(n) * static_cast<long long>(n - 1) / 2;
    if (ties_x == n0 || ties_y == n0) {
        throw Error(Errc::all_tied, "kendall tau-b is undefined when one vector is constant");
    }
    const double denom = std::sqrt(static_cast<double>(n0 - ties_x)) *
                         std::sqrt(static_cast<double>(n0 - ties_y));
    return static_cast<double>(concordant - discordant) / denom;
}

SummaryStats summarize(std::vector<double> values) {
    SummaryStats stats;
    stats.n = values.size();
    if (values.empty()) return stats;
    std::sort(values.begin(), values.end());
    stats.mean = numeric::mean(values);
    stats.min = values.front();
    stats.max = values.back();
    stats.q1 = numeric::nearest_rank_quantile(values, 0.25);
    stats.median = numeric::nearest_rank_quantile(values, 0.50);
    stats.q3 = numeric::nearest_rank_quantile(values, 0.75);
    return stats;
}

ComparisonReport compare_indices(const exposure::ExposureScores& a,
                                 const exposure::ExposureScores& b) {
    ComparisonReport report;
    std::vector<double> xs, ys;
    for (const auto& [soc, value_a] : a.scores) {
        auto it = b.scores.find(soc);
        if (it == b.scores.end()) continue;
        report.paired.emplace_back(soc, value_a, it->second);
        xs.push_back(value_a);
        ys.push_back(it->second);
    }
    report.n_common = report.paired.size();
    if (report.n_common < 2) {
        throw Error(Errc::empty_intersection,
                    fmt::format("indices share {} occupations; need at least 2", report.n_common));
    }
    report.pearson = pearson(xs, ys);
    report.kendall_tau_b = kendall_tau_b(xs, ys);
    report.stats_a = summarize(xs);
    report.stats_b = summarize(ys);
    return report;
}

const char* region_name(Region region) {
    switch (region) {
    case Region::a: return "a";
    case Region::b: return "b";
    case Region::c: return "c";
    case Region::not_available: return "not_available";
    }
    return "unknown";
}

const char* c_sub_name(CSub sub) {
    switch (sub) {
    case CSub::bottom_c: return "bottom_c";
    case CSub::mid_c: return "mid_c";
    case CSub::top_c: return "top_c";
    }
    return "unknown";
}

namespace {

// (score, soc_code) ascending; the lexicographic tie-break makes every split
// below deterministic under heavy score ties.
std::vector<std::pair<double, std::string>> ranked(const std::map<std::string, double>& scores,
                                                   const std::set<std::string>& members) {
    std::vector<std::pair<double, std::string>> out;
    out.reserve(members.size());
    for (const auto& soc : members) {
        out.emplace_back(scores.at(soc), soc);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

RegionAssignment assign_regions(const exposure::ExposureScores& aioe,
                                const exposure::ExposureScores& aise) {
    std::set<std::string> common;
    for (const auto& [soc, _] : aioe.scores) {
        if (aise.scores.contains(soc)) {
            common.insert(soc);
        }
    }
    if (common.empty()) {
        throw Error(Errc::empty_intersection, "no occupation is scored by both indices");
    }

    RegionAssignment assignment;
    for (const auto& [soc, _] : aise.scores) {
        if (!common.contains(soc)) {
            assignment.region[soc] = Region::not_available;
        }
    }

    auto by_aioe = ranked(aioe.scores, common);
    auto tertile_sizes = numeric::partition_sizes(by_aioe.size(), 3);
    std::set<std::string> c_members;
    std::size_t cursor = 0;
    const Region tertiles[3] = {Region::a, Region::b, Region::c};
    for (std::size_t part = 0; part < 3; ++part) {
        for (std::size_t i = 0; i < tertile_sizes[part]; ++i, ++cursor) {
            assignment.region[by_aioe[cursor].second] = tertiles[part];
            if (tertiles[part] == Region::c) {
                c_members.insert(by_aioe[cursor].second);
            }
        }
    }

    if (!c_members.empty()) {
        auto by_aise = ranked(aise.scores, c_members);
        auto quartile_sizes = numeric::partition_sizes(by_aise.size(), 4);
        const CSub quartiles[4] = {CSub::bottom_c, CSub::mid_c, CSub::mid_c, CSub::top_c};
        cursor = 0;
        for (std::size_t part = 0; part < 4; ++part) {
            for (std::size_t i = 0; i < quartile_sizes[part]; ++i, ++cursor) {
                assignment.c_sub[by_aise[cursor].second] = quartiles[part];
            }
        }
    }
    return assignment;
}

std::set<std::string> region_members(const RegionAssignment& assignment, Region region) {
    std::set<std::string> out;
    for (const auto& [soc, r] : assignment.region) {
        if (r == region) out.insert(soc);
    }
    return out;
}

std::set<std::string> c_sub_members(const RegionAssignment& assignment, CSub sub) {
    std::set<std::string> out;
    for (const auto& [soc, s] : assignment.c_sub) {
        if (s == sub) out.insert(soc);
    }
    return out;
}

std::map<std::string, double> crucial_skill_frequency(const std::set<std::string>& region_members,
                                                      const SkillRatings& skills,
                                                      double threshold) {
    if (region_members.empty()) {
        throw Error(Errc::empty_region, "crucial-skill frequency over an empty region");
    }
    std::map<std::string, double> out;
    const auto region_size = static_cast<double>(region_members.size());
    for (const auto& [skill_id, _] : skills.skills()) {
        std::size_t crucial = 0;
        for (const auto& soc : region_members) {
            auto importance = skills.importance(soc, skill_id);
            if (importance && *importance > threshold) {  // strictly greater
                ++crucial;
            }
        }
        out[skill_id] = static_cast<double>(crucial) / region_size;
    }
    return out;
}

std::map<std::string, BoxStats> job_zone_distribution(
    const exposure::ExposureScores& scores, const JobZoneMap& zones,
    const std::optional<std::set<std::string>>& member_filter) {
    std::map<std::string, std::vector<double>> buckets;
    for (const auto& [soc, score] : scores.scores) {
        if (member_filter && !member_filter->contains(soc)) continue;
        auto zone = zones.find(soc);
        auto key = zone == zones.end() ? std::string("not_available")
                                       : std::to_string(zone->second);
        buckets[key].push_back(score);
    }

    std::map<std::string, BoxStats> out;
    for (auto& [key, values] : buckets) {
        std::sort(values.begin(), values.end());
        BoxStats stats;
        stats.n = values.size();
        stats.mean = numeric::mean(values);
        stats.q1 = numeric::nearest_rank_quantile(values, 0.25);
        stats.median = numeric::nearest_rank_quantile(values, 0.50);
        stats.q3 = numeric::nearest_rank_quantile(values, 0.75);
        const double iqr = stats.q3 - stats.q1;
        const double low_fence = stats.q1 - 1.5 * iqr;
        const double high_fence = stats.q3 + 1.5 * iqr;
        stats.whisker_low = stats.q1;
        stats.whisker_high = stats.q3;
        for (double v : values) {
            if (v < low_fence || v > high_fence) {
                stats.outliers.push_back(v);
            }
        }
        // Whiskers reach the most extreme data points inside the fences.
        for (double v : values) {
            if (v >= low_fence) {
                stats.whisker_low = v;
                break;
            }
        }
        for (auto it = values.rbegin(); it != values.rend(); ++it) {
            if (*it <= high_fence) {
                stats.whisker_high = *it;
                break;
            }
        }
        out[key] = std::move(stats);
    }
    return out;
}

std::vector<RankedOccupation> rank_occupations(const exposure::ExposureScores& scores,
                                               const OccupationSet& occupations, std::size_t n,
                                               RankDirection direction) {
    std::vector<RankedOccupation> ranked;
    ranked.reserve(scores.scores.size());
    for (const auto& [soc, score] : scores.scores) {
        const auto* occupation = occupations.find(soc);
        ranked.push_back(RankedOccupation{
            .soc_code = soc,
            .title = occupation ? occupation->title : "",
            .score = score,
        });
    }
    std::sort(ranked.begin(), ranked.end(), [&](const auto& lhs, const auto& rhs) {
        if (lhs.score != rhs.score) {
            return direction == RankDirection::top ? lhs.score > rhs.score : lhs.score < rhs.score;
        }
        return lhs.soc_code < rhs.soc_code;
    });
    if (ranked.size() > n) {
        ranked.resize(n);
    }
    return ranked;
}

}  // namespace aise::analytics
