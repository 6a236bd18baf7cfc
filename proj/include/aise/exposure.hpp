#pragma once

#include "aise/classify.hpp"
#include "aise/types.hpp"

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace aise::exposure {

// How unparseable verdicts enter the per-occupation denominator.
enum class DenominatorPolicy {
    definitive,  // default: only parsed yes/no verdicts count
    total,       // paper-literal: every startup in the set counts
};

const char* policy_name(DenominatorPolicy policy);
std::optional<DenominatorPolicy> policy_from_name(std::string_view name);

struct RunMetadata {
    std::string variant;
    std::string startup_set_label;
    std::string policy;
    std::map<std::string, std::string> input_hashes;
    std::vector<std::string> warnings;
};

// Per-occupation index values plus provenance for one run.
struct ExposureScores {
    std::string index_kind;                  // "aise" | "rse" | "aioe" | custom label
    std::map<std::string, double> scores;    // soc_code -> value
    std::map<std::string, double> coverage;  // soc_code -> definitive share (1.0 for aioe)
    RunMetadata meta;
};

// Startup-exposure index (AISE over an AI-tagged set, RSE over a robotics-
// tagged set): per occupation, yes-verdicts over the policy's denominator.
ExposureScores compute_startup_exposure(const llm::VerdictMatrix& matrix,
                                        DenominatorPolicy policy = DenominatorPolicy::definitive,
                                        std::string index_kind = "aise");

// Per-ability exposure: column sums of the relatedness grid.
struct AbilityExposureVector {
    std::map<std::string, double> values;  // ability_id -> A_j
};

AbilityExposureVector ability_exposure(const RelatednessMatrix& matrix);

// Ability-based comparison index: for each occupation rating every ability in
// A, the L*I-weighted average of the A_j. Occupations missing a rating are
// absent from the result; zero-weight occupations are excluded with a warning.
ExposureScores compute_aioe(const AbilityExposureVector& exposure, const AbilityRatings& ratings);

// CSV export (header soc_code,title,score,coverage, rows ascending by code)
// with a JSON sidecar at <path>.meta.json carrying the run metadata.
void save_scores(const ExposureScores& scores, const OccupationSet& occupations,
                 const std::filesystem::path& csv_path);
ExposureScores load_scores(const std::filesystem::path& csv_path);

}  // namespace aise::exposure
