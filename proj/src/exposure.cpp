#include "aise/exposure.hpp"

#include "aise/csv.hpp"
#include "aise/errors.hpp"
#include "aise/numeric.hpp"

#include <fmt/format.h>
#include <json.hpp>

#include <charconv>
#include <fstream>

namespace aise::exposure {

using nlohmann::json;

const char* policy_name(DenominatorPolicy policy) {
    return policy == DenominatorPolicy::definitive ? "definitive" : "total";
}

std::optional<DenominatorPolicy> policy_from_name(std::string_view name) {
    if (name == "definitive") return DenominatorPolicy::definitive;
    if (name == "total") return DenominatorPolicy::total;
    return std::nullopt;
}

ExposureScores compute_startup_exposure(const llm::VerdictMatrix& matrix,
                                        DenominatorPolicy policy, std::string index_kind) {
    if (matrix.occupations.empty() || matrix.startups.empty()) {
        throw Error(Errc::empty_matrix, "verdict matrix has no cells");
    }

    ExposureScores out;
    out.index_kind = std::move(index_kind);
    out.meta.variant = llm::variant_name(matrix.variant);
    out.meta.startup_set_label = matrix.startup_set_label;
    out.meta.policy = policy_name(policy);
    out.meta.input_hashes = matrix.input_hashes;

    const auto n_startups = static_cast<double>(matrix.startups.size());
    for (std::size_t row = 0; row < matrix.occupations.size(); ++row) {
        std::size_t yes = 0;
        std::size_t no = 0;
        for (llm::Answer answer : matrix.cells[row]) {
            if (answer == llm::Answer::yes) ++yes;
            if (answer == llm::Answer::no) ++no;
        }
        const auto& soc = matrix.occupations[row];
        const auto definitive = yes + no;
        out.coverage[soc] = static_cast<double>(definitive) / n_startups;

        double denominator;
        if (policy == DenominatorPolicy::definitive) {
            if (definitive == 0) {
                throw Error(Errc::zero_denominator,
                            fmt::format("occupation '{}' has no definitive verdicts", soc));
            }
            denominator = static_cast<double>(definitive);
        } else {
            denominator = n_startups;
        }
        out.scores[soc] = static_cast<double>(yes) / denominator;
    }
    return out;
}

AbilityExposureVector ability_exposure(const RelatednessMatrix& matrix) {
    AbilityExposureVector out;
    for (std::size_t col = 0; col < matrix.abilities.size(); ++col) {
        numeric::Accumulator acc;
        for (const auto& row : matrix.values) {
            acc.add(row[col]);
        }
        out.values[matrix.abilities[col]] = acc.total();
    }
    return out;
}

ExposureScores compute_aioe(const AbilityExposureVector& exposure,
                            const AbilityRatings& ratings) {
    ExposureScores out;
    out.index_kind = "aioe";
    out.meta.policy = "weighted_ability_average";

    std::vector<std::string> ability_ids;
    ability_ids.reserve(exposure.values.size());
    for (const auto& [id, _] : exposure.values) {
        ability_ids.push_back(id);
    }

    for (const auto& soc : ratings.occupations()) {
        if (!ratings.covers(soc, ability_ids)) {
            continue;  // not eligible; reported via validate_corpus
        }
        numeric::Accumulator numerator;
        numeric::Accumulator denominator;
        for (const auto& [ability_id, a_j] : exposure.values) {
            const auto* rating = ratings.find(soc, ability_id);
            const double weight = rating->level * rating->importance;
            numerator.add(a_j * weight);
            denominator.add(weight);
        }
        if (denominator.total() == 0.0) {
            // A zero score would read as a meaningful low exposure, so the
            // occupation is dropped and the drop is reported.
            out.meta.warnings.push_back(fmt::format("ZeroWeightSum({})", soc));
            continue;
        }
        out.scores[soc] = numerator.total() / denominator.total();
        out.coverage[soc] = 1.0;
    }
    return out;
}

namespace {

double parse_score_cell(const std::string& cell, const std::filesystem::path& path,
                        std::size_t row) {
    double value = 0.0;
    auto* first = cell.data();
    auto* last = cell.data() + cell.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
        throw Error(Errc::missing_artifact,
                    fmt::format("'{}' row {}: '{}' is not a number", path.string(), row, cell));
    }
    return value;
}

}  // namespace

void save_scores(const ExposureScores& scores, const OccupationSet& occupations,
                 const std::filesystem::path& csv_path) {
    if (csv_path.has_parent_path()) {
        std::filesystem::create_directories(csv_path.parent_path());
    }
    std::ofstream out(csv_path, std::ios::binary);
    if (!out) {
        throw Error(Errc::missing_file, fmt::format("cannot write '{}'", csv_path.string()));
    }
    out << "soc_code,title,score,coverage\n";
    for (const auto& [soc, score] : scores.scores) {
        const auto* occupation = occupations.find(soc);
        auto coverage_it = scores.coverage.find(soc);
        out << csv::format_row({
            soc,
            occupation ? occupation->title : "",
            fmt::format("{}", score),
            fmt::format("{}", coverage_it == scores.coverage.end() ? 1.0 : coverage_it->second),
        });
    }

    json meta = {
        {"index", scores.index_kind},
        {"variant", scores.meta.variant},
        {"startup_set", scores.meta.startup_set_label},
        {"policy", scores.meta.policy},
        {"inputs", scores.meta.input_hashes},
        {"warnings", scores.meta.warnings},
        {"n_occupations", scores.scores.size()},
    };
    auto meta_path = csv_path;
    meta_path += ".meta.json";
    std::ofstream meta_out(meta_path, std::ios::binary);
    meta_out << meta.dump(2) << '\n';
}

ExposureScores load_scores(const std::filesystem::path& csv_path) {
    if (!std::filesystem::exists(csv_path)) {
        throw Error(Errc::missing_artifact,
                    fmt::format("scores file '{}' not found; run compute first", csv_path.string()));
    }
    auto rows = csv::read_file(csv_path);
    if (rows.empty() || rows[0] != csv::Row{"soc_code", "title", "score", "coverage"}) {
        throw Error(Errc::missing_artifact,
                    fmt::format("'{}' is not a scores artifact", csv_path.string()));
    }

    ExposureScores out;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        if (rows[r].size() == 1 && rows[r][0].empty()) continue;
        if (rows[r].size() != 4) {
            throw Error(Errc::missing_artifact,
                        fmt::format("'{}' row {} has {} columns", csv_path.string(), r,
                                    rows[r].size()));
        }
        out.scores[rows[r][0]] = parse_score_cell(rows[r][2], csv_path, r);
        out.coverage[rows[r][0]] = parse_score_cell(rows[r][3], csv_path, r);
    }

    auto meta_path = csv_path;
    meta_path += ".meta.json";
    std::ifstream meta_in(meta_path, std::ios::binary);
    if (meta_in) {
        json meta = json::parse(meta_in, nullptr, false);
        if (!meta.is_discarded()) {
            out.index_kind = meta.value("index", "");
            out.meta.variant = meta.value("variant", "");
            out.meta.startup_set_label = meta.value("startup_set", "");
            out.meta.policy = meta.value("policy", "");
            if (meta.contains("inputs")) {
                out.meta.input_hashes = meta["inputs"].get<std::map<std::string, std::string>>();
            }
            out.meta.warnings = meta.value("warnings", std::vector<std::string>{});
        }
    }
    return out;
}

}  // namespace aise::exposure
