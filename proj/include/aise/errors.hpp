#pragma once

#include <stdexcept>
#include <string>

namespace aise {

// Every failure the pipeline can raise, so callers (and tests) can switch on
// the condition instead of parsing messages.
enum class Errc {
    missing_file,
    malformed_header,
    malformed_row,
    malformed_record,
    duplicate_code,
    duplicate_id,
    empty_description,
    zone_out_of_range,
    scale_out_of_range,
    missing_scale,
    shape_mismatch,
    non_numeric_cell,
    negative_employment,
    kind_mismatch,
    no_coverage,
    sector_code_mismatch,
    empty_matrix,
    zero_denominator,
    zero_weight_sum,
    length_mismatch,
    zero_variance,
    all_tied,
    empty_intersection,
    empty_region,
    backend_unreachable,
    missing_artifact,
    invalid_config,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& message);

    Errc code() const { return code_; }

  private:
    Errc code_;
};

}  // namespace aise
