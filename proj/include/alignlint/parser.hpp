#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "alignlint/raw_model.hpp"

namespace alignlint {

struct ParseError {
    SourcePos pos;         // first character of the offending token
    std::string expected;  // what the grammar allowed here
    std::string found;     // offending token text, or "end of input"

    bool operator==(const ParseError&) const = default;
};

struct ParseResult {
    std::optional<RawModel> model;
    std::vector<ParseError> errors;

    bool ok() const { return model.has_value(); }
};

/// Parses architecture DSL text. Recovers at statement boundaries so one
/// pass reports every syntax error it can; any error means no RawModel.
/// Total over arbitrary bytes: malformed input yields errors, never faults.
ParseResult parse(std::string_view text);

}  // namespace alignlint
