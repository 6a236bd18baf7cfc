#include "aise/errors.hpp"

#include <fmt/format.h>

namespace aise {

const char* errc_name(Errc code) {
    switch (code) {
    case Errc::missing_file: return "MissingFile";
    case Errc::malformed_header: return "MalformedHeader";
    case Errc::malformed_row: return "MalformedRow";
    case Errc::malformed_record: return "MalformedRecord";
    case Errc::duplicate_code: return "DuplicateCode";
    case Errc::duplicate_id: return "DuplicateId";
    case Errc::empty_description: return "EmptyDescription";
    case Errc::zone_out_of_range: return "ZoneOutOfRange";
    case Errc::scale_out_of_range: return "ScaleOutOfRange";
    case Errc::missing_scale: return "MissingScale";
    case Errc::shape_mismatch: return "ShapeMismatch";
    case Errc::non_numeric_cell: return "NonNumericCell";
    case Errc::negative_employment: return "NegativeEmployment";
    case Errc::kind_mismatch: return "KindMismatch";
    case Errc::no_coverage: return "NoCoverage";
    case Errc::sector_code_mismatch: return "SectorCodeMismatch";
    case Errc::empty_matrix: return "EmptyMatrix";
    case Errc::zero_denominator: return "ZeroDenominator";
    case Errc::zero_weight_sum: return "ZeroWeightSum";
    case Errc::length_mismatch: return "LengthMismatch";
    case Errc::zero_variance: return "ZeroVariance";
    case Errc::all_tied: return "AllTied";
    case Errc::empty_intersection: return "EmptyIntersection";
    case Errc::empty_region: return "EmptyRegion";
    case Errc::backend_unreachable: return "BackendUnreachableAfterRetries";
    case Errc::missing_artifact: return "MissingArtifact";
    case Errc::invalid_config: return "InvalidConfig";
    }
    return "UnknownError";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(fmt::format("{}: {}", errc_name(code), message)), code_(code) {}

}  // namespace aise
