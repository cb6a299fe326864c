#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "alignlint/raw_model.hpp"

namespace alignlint {

enum class Severity { warning, error };

std::string_view severity_name(Severity s);

// Issue codes. Errors prevent Model construction; warnings do not.
namespace issue {
inline constexpr std::string_view malformed_document = "E000_MALFORMED_DOCUMENT";
inline constexpr std::string_view dangling_ref = "E001_DANGLING_REF";
inline constexpr std::string_view duplicate_id = "E002_DUPLICATE_ID";
inline constexpr std::string_view kind_mismatch = "E003_KIND_MISMATCH";
inline constexpr std::string_view quality_range = "E004_QUALITY_RANGE";
inline constexpr std::string_view invalid_id = "E005_INVALID_ID";
inline constexpr std::string_view empty_process = "W001_EMPTY_PROCESS";
inline constexpr std::string_view duplicate_entry = "W002_DUPLICATE_ENTRY";
}  // namespace issue

struct ValidationIssue {
    Severity severity = Severity::error;
    std::string code;
    std::optional<SourcePos> pos;  // set when the raw model carried positions
    std::string location;          // element path, e.g. "DataCapture.Scanning"
    std::string message;

    bool operator==(const ValidationIssue&) const = default;
};

}  // namespace alignlint
