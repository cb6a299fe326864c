#pragma once

#include <optional>
#include <vector>

#include "alignlint/model.hpp"
#include "alignlint/raw_model.hpp"
#include "alignlint/validation.hpp"

namespace alignlint {

/// Outcome of semantic resolution. `model` is set iff no error-severity
/// issue was found; warnings ride along either way.
struct ResolveResult {
    std::optional<Model> model;
    std::vector<ValidationIssue> issues;

    bool ok() const { return model.has_value(); }

    std::vector<ValidationIssue> errors() const;
    std::vector<ValidationIssue> warnings() const;
};

/// Reference resolution and structural validation. Collects every issue
/// instead of stopping at the first; pure function of the raw model.
ResolveResult resolve(const RawModel& raw);

}  // namespace alignlint
